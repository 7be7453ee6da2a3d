"""Scenario configuration: every knob of the simulated system in one dataclass."""

from __future__ import annotations

from dataclasses import dataclass, fields


class ValidationError(ValueError):
    """A ScenarioConfig invariant is violated; the message names the field."""


GATEWAY_POLICIES = ("per_block", "per_packet")


@dataclass(frozen=True)
class ScenarioConfig:
    """All system parameters for one simulation point.

    Antenna counts: consumer (n_a), gateway (n_b), eavesdropper (n_e),
    aggregator (n_g), jammer (n_j). Stream counts s_ab / s_bg apply to the
    consumer->gateway and gateway->aggregator hops. Powers and noise levels
    are spectral densities in Watts/Hz; theta splits transmit power between
    data (theta) and artificial noise (1 - theta). A packet spans k_blocks
    coherence blocks and must carry rate_target bits/channel use end to end.
    """

    # antennas and streams
    n_a: int = 4
    n_b: int = 3
    n_e: int = 3
    n_g: int = 2
    n_j: int = 4
    s_ab: int = 3
    s_bg: int = 2

    # transmit and noise power spectral densities (W/Hz); defaults give a
    # 10 dB per-node transmit SNR
    p_a: float = 1.0
    p_b: float = 1.0
    p_j: float = 1.0
    theta: float = 0.5
    kappa_b: float = 0.1
    kappa_g: float = 0.1
    kappa_e: float = 0.1

    # packet structure and redundancy
    rate_target: float = 10.0
    k_blocks: int = 4
    m_gateways: int = 1
    gateway_policy: str = "per_block"

    # consumer demand statistics and energy prices
    n_consumers: int = 200
    mu: float = 3.0
    sigma: float = 1.5
    e_max: float = 10.0
    p_uc: float = 37.5
    p_ed: float = 37.5
    truncated_demand: bool = True

    # Monte Carlo controls
    seed: int = 42
    trials: int = 10_000

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """Raise ValidationError naming the offending field on any violation."""
        c = self
        for name in ("n_a", "n_b", "n_e", "n_g", "n_j", "s_ab", "s_bg"):
            if getattr(c, name) < 1:
                raise ValidationError(f"{name} must be a positive count, got {getattr(c, name)}")
        if c.s_ab > min(c.n_a, c.n_b):
            raise ValidationError(
                f"s_ab must satisfy s_ab <= min(n_a, n_b): s_ab={c.s_ab}, n_a={c.n_a}, n_b={c.n_b}"
            )
        if c.s_bg > min(c.n_b, c.n_g):
            raise ValidationError(
                f"s_bg must satisfy s_bg <= min(n_b, n_g): s_bg={c.s_bg}, n_b={c.n_b}, n_g={c.n_g}"
            )
        if c.n_a <= c.s_ab:
            raise ValidationError(
                f"n_a must exceed s_ab so the consumer AN null space is nonempty: n_a={c.n_a}, s_ab={c.s_ab}"
            )
        if c.n_b <= c.s_bg:
            raise ValidationError(
                f"n_b must exceed s_bg so the gateway AN null space is nonempty: n_b={c.n_b}, s_bg={c.s_bg}"
            )
        if c.n_j <= c.n_e:
            raise ValidationError(
                f"n_j must exceed n_e so the jammer can null the eavesdropper: n_j={c.n_j}, n_e={c.n_e}"
            )
        if not 0.0 <= c.theta <= 1.0:
            raise ValidationError(f"theta must lie in [0, 1], got {c.theta}")
        for name in ("p_a", "p_b", "p_j", "kappa_b", "kappa_g", "kappa_e", "p_uc", "p_ed"):
            if getattr(c, name) < 0:
                raise ValidationError(f"{name} must be nonnegative, got {getattr(c, name)}")
        if c.rate_target < 0:
            raise ValidationError(f"rate_target must be nonnegative, got {c.rate_target}")
        if c.k_blocks < 1:
            raise ValidationError(f"k_blocks must be at least 1, got {c.k_blocks}")
        if c.m_gateways < 1:
            raise ValidationError(f"m_gateways must be at least 1, got {c.m_gateways}")
        if c.gateway_policy not in GATEWAY_POLICIES:
            raise ValidationError(
                f"gateway_policy must be one of {GATEWAY_POLICIES}, got {c.gateway_policy!r}"
            )
        if c.n_consumers < 1:
            raise ValidationError(f"n_consumers must be at least 1, got {c.n_consumers}")
        if not 0.0 < c.mu < c.e_max:
            raise ValidationError(f"mu must satisfy 0 < mu < e_max: mu={c.mu}, e_max={c.e_max}")
        if c.sigma <= 0:
            raise ValidationError(f"sigma must be positive, got {c.sigma}")
        if c.trials < 1:
            raise ValidationError(f"trials must be at least 1, got {c.trials}")


CONFIG_FIELDS = {f.name: f.type for f in fields(ScenarioConfig)}


def default_scenario() -> ScenarioConfig:
    """Baseline configuration: 4/3/3/2/4 antennas, 3+2 streams, 200 consumers
    with mean 3 kWh, std 1.5 kWh, cap 10 kWh, and documented defaults for the
    knobs the baseline leaves open (unit powers, 10 dB SNR, theta = 0.5,
    k = 4 blocks, one gateway, 10^4 trials)."""
    return ScenarioConfig()
