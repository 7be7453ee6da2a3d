"""Demand-estimation-error cost of a lost packet and the utility's expected loss.

A consumer whose demand message is lost is billed for the mismatch between
reserved and actual energy: under-estimation is bought back at the dispatch
price, over-estimation was reserved at the commitment price. Demand follows a
Gaussian restricted to [0, e_max]; by default the density is renormalized on
that interval (a proper truncated Gaussian), with an untruncated variant kept
behind a flag for comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.stats import norm

from .config import ScenarioConfig


@dataclass(frozen=True)
class CostModel:
    mu: float         # mean demand, kWh
    sigma: float      # demand std, kWh
    e_max: float      # demand cap, kWh
    p_uc: float       # unit-commitment price, $/kWh
    p_ed: float       # economic-dispatch price, $/kWh
    truncated: bool = True

    def __post_init__(self):
        if not 0.0 < self.mu < self.e_max:
            raise ValueError(f"need 0 < mu < e_max, got mu={self.mu}, e_max={self.e_max}")
        if self.sigma <= 0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        if self.p_uc < 0 or self.p_ed < 0:
            raise ValueError("prices must be nonnegative")

    @classmethod
    def from_scenario(cls, cfg: ScenarioConfig) -> "CostModel":
        return cls(mu=cfg.mu, sigma=cfg.sigma, e_max=cfg.e_max,
                   p_uc=cfg.p_uc, p_ed=cfg.p_ed, truncated=cfg.truncated_demand)


@dataclass(frozen=True)
class CostReport:
    per_consumer_cost: float
    expected_loss: float
    n_consumers: int
    p_outage: float


def consumer_cost(model: CostModel) -> float:
    """Closed-form per-consumer estimation-error cost in dollars.

    Splits the demand density at the mean: the under-consumption side is
    priced at p_uc, the over-consumption side at p_ed. With z-scores
    alpha = -mu/sigma and beta = (e_max - mu)/sigma, each one-sided partial
    expectation of |A - mu| reduces to sigma * (phi(0) - phi(endpoint)).
    """
    alpha = -model.mu / model.sigma
    beta = (model.e_max - model.mu) / model.sigma
    phi0 = norm.pdf(0.0)
    under = model.sigma * (phi0 - norm.pdf(alpha))
    over = model.sigma * (phi0 - norm.pdf(beta))
    cost = model.p_uc * under + model.p_ed * over
    if model.truncated:
        cost /= norm.cdf(beta) - norm.cdf(alpha)
    return float(cost)


def consumer_cost_quadrature(model: CostModel) -> float:
    """Same cost by adaptive quadrature; independent oracle for consumer_cost.

    Integrates the raw Gaussian density directly (including the
    renormalization mass when truncation is on), so it shares no
    partial-expectation algebra with the closed form.
    """
    mu, sig = model.mu, model.sigma

    def density(a):
        return np.exp(-0.5 * ((a - mu) / sig) ** 2) / (sig * np.sqrt(2.0 * np.pi))

    under, _ = integrate.quad(lambda a: (mu - a) * density(a), 0.0, mu)
    over, _ = integrate.quad(lambda a: (a - mu) * density(a), mu, model.e_max)
    cost = model.p_uc * under + model.p_ed * over
    if model.truncated:
        mass, _ = integrate.quad(density, 0.0, model.e_max)
        cost /= mass
    return float(cost)


def expected_loss(model: CostModel, n_consumers: int, p_outage: float) -> CostReport:
    """Utility-wide expected loss: homogeneous consumers, linear in outage."""
    if not 0.0 <= p_outage <= 1.0:
        raise ValueError(f"p_outage must lie in [0, 1], got {p_outage}")
    if n_consumers < 1:
        raise ValueError(f"n_consumers must be at least 1, got {n_consumers}")
    per = consumer_cost(model)
    return CostReport(
        per_consumer_cost=per,
        expected_loss=n_consumers * per * p_outage,
        n_consumers=n_consumers,
        p_outage=p_outage,
    )
