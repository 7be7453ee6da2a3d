"""Monte Carlo estimation of packet outage, block secrecy outage, and the
fraction of unsecured data, with redundant-gateway selection.

Two estimation modes share the same per-block chain (draw channels, design
precoders, compute rates):

* selection mode follows the operational protocol: per block, the gateway
  with the best bottleneck rate forwards, and a packet is in outage if any
  of its k blocks fails at the selected gateway;
* analytic mode estimates the per-link per-block failure probabilities and
  combines them with the product-form expressions (all gateways must fail
  for a block to fail, any block failure kills the packet, and the two hops
  fail independently).

Trials are independent; each derives its randomness from
``substream(seed, trial, block)`` only, and results are reduced as integer
event counts, so any parallel execution order yields identical estimates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from joblib import Parallel, delayed

from .channel import ChannelDraw, draw_block_channels, substream
from .config import ScenarioConfig
from .precoding import design_link, interference_covariance, jammer_precoder
from .rates import BlockSample, eve_rate, legit_rate, secrecy_rate_block


@dataclass(frozen=True)
class OutageEstimate:
    p_outage: float            # packet outage probability
    p_sec_block: float         # per-block secrecy outage probability
    unsecured_fraction: float  # expected fraction of the packet leaked
    trials: int
    stderr_outage: float
    stderr_sec: float


def _binomial_stderr(p: float, n: int) -> float:
    return math.sqrt(p * (1.0 - p) / n)


def _argmax_min(r_ab, r_bg) -> int:
    best, best_val = 0, -1.0
    for i, (a, b) in enumerate(zip(r_ab, r_bg)):
        val = a if a < b else b
        if val > best_val:
            best, best_val = i, val
    return best


def select_gateway(sample: BlockSample) -> int:
    """Index of the gateway with the largest bottleneck rate (ties: lowest)."""
    return _argmax_min(sample.r_ab, sample.r_bg)


def block_success(sample: BlockSample, i: int, threshold: float) -> bool:
    """True when gateway i sustains the per-block rate on both hops."""
    return min(sample.r_ab[i], sample.r_bg[i]) >= threshold


def block_sample(cfg: ScenarioConfig, draw: ChannelDraw, gateway: int | None = None) -> BlockSample:
    """Run the full precoding chain on one draw and collect all block rates.

    Designs are matched per gateway on both hops. The eavesdropper's
    first-hop rate depends on which design the consumer actually transmits
    with; unless ``gateway`` pins it (per-packet selection policy), it is the
    bottleneck-best gateway of this block, consistent with select_gateway.
    """
    q_j = jammer_precoder(draw.h_je, cfg.n_j, cfg.n_e)
    n_an_j = cfg.n_j - cfg.n_e
    p_data1 = cfg.theta * cfg.p_a / cfg.s_ab
    p_an1 = (1.0 - cfg.theta) * cfg.p_a / (cfg.n_a - cfg.s_ab)
    p_data2 = cfg.theta * cfg.p_b / cfg.s_bg
    p_an2 = (1.0 - cfg.theta) * cfg.p_b / (cfg.n_b - cfg.s_bg)

    w_g = interference_covariance(draw.h_jg, q_j, cfg.p_j, n_an_j, cfg.kappa_g, cfg.n_g)
    designs1 = []
    r_ab, r_bg, r_be = [], [], []
    for i in range(cfg.m_gateways):
        w_b = interference_covariance(draw.h_jb[i], q_j, cfg.p_j, n_an_j, cfg.kappa_b, cfg.n_b)
        d1 = design_link(draw.h_ab[i], w_b, cfg.s_ab)
        d2 = design_link(draw.h_bg[i], w_g, cfg.s_bg)
        designs1.append(d1)
        r_ab.append(legit_rate(d1, p_data1))
        r_bg.append(legit_rate(d2, p_data2))
        r_be.append(eve_rate(draw.h_be[i], d2.data_precoder, d2.an_precoder,
                             p_data2, p_an2, cfg.kappa_e))
    i_tx = _argmax_min(r_ab, r_bg) if gateway is None else gateway
    d_tx = designs1[i_tx]
    r_ae = eve_rate(draw.h_ae, d_tx.data_precoder, d_tx.an_precoder,
                    p_data1, p_an1, cfg.kappa_e)
    return BlockSample(r_ab=tuple(r_ab), r_bg=tuple(r_bg), r_ae=r_ae, r_be=tuple(r_be))


def _secrecy_outage(sample: BlockSample, i: int, threshold: float) -> bool:
    sec1 = secrecy_rate_block(sample.r_ab[i], sample.r_ae)
    sec2 = secrecy_rate_block(sample.r_bg[i], sample.r_be[i])
    return min(sec1, sec2) < threshold


def _selection_counts(cfg: ScenarioConfig, trial_lo: int, trial_hi: int) -> tuple:
    """(packet outages, block secrecy outages) over a contiguous trial range."""
    threshold = cfg.rate_target / cfg.k_blocks
    per_packet = cfg.gateway_policy == "per_packet"
    n_outage = 0
    n_sec = 0
    for trial in range(trial_lo, trial_hi):
        outage = False
        fixed = None
        for block in range(cfg.k_blocks):
            draw = draw_block_channels(cfg, substream(cfg.seed, trial, block))
            sample = block_sample(cfg, draw, gateway=fixed)
            i_hat = select_gateway(sample) if fixed is None else fixed
            if per_packet and fixed is None:
                fixed = i_hat
            if not block_success(sample, i_hat, threshold):
                outage = True
            if _secrecy_outage(sample, i_hat, threshold):
                n_sec += 1
        if outage:
            n_outage += 1
    return n_outage, n_sec


def _analytic_counts(cfg: ScenarioConfig, trial_lo: int, trial_hi: int) -> tuple:
    """(hop1 link failures, hop2 link failures, block secrecy outages)."""
    threshold = cfg.rate_target / cfg.k_blocks
    n_fail1 = 0
    n_fail2 = 0
    n_sec = 0
    for trial in range(trial_lo, trial_hi):
        for block in range(cfg.k_blocks):
            draw = draw_block_channels(cfg, substream(cfg.seed, trial, block))
            sample = block_sample(cfg, draw)
            n_fail1 += sum(1 for r in sample.r_ab if r < threshold)
            n_fail2 += sum(1 for r in sample.r_bg if r < threshold)
            if _secrecy_outage(sample, select_gateway(sample), threshold):
                n_sec += 1
    return n_fail1, n_fail2, n_sec


def _run_chunked(counts_fn, cfg: ScenarioConfig, n_jobs: int):
    if n_jobs == 1:
        return [counts_fn(cfg, 0, cfg.trials)]
    bounds = [round(i * cfg.trials / n_jobs) for i in range(n_jobs + 1)]
    return Parallel(n_jobs=n_jobs)(
        delayed(counts_fn)(cfg, lo, hi) for lo, hi in zip(bounds[:-1], bounds[1:])
    )


def estimate_selection_mode(cfg: ScenarioConfig, n_jobs: int = 1) -> OutageEstimate:
    """Estimate outage and secrecy with per-block (or per-packet) selection."""
    cfg.validate()
    chunks = _run_chunked(_selection_counts, cfg, n_jobs)
    n_outage = sum(c[0] for c in chunks)
    n_sec = sum(c[1] for c in chunks)
    p_outage = n_outage / cfg.trials
    p_sec = n_sec / (cfg.trials * cfg.k_blocks)
    return OutageEstimate(
        p_outage=p_outage,
        p_sec_block=p_sec,
        unsecured_fraction=unsecured_fraction_combiner(p_sec, cfg.k_blocks),
        trials=cfg.trials,
        stderr_outage=_binomial_stderr(p_outage, cfg.trials),
        stderr_sec=_binomial_stderr(p_sec, cfg.trials),
    )


def estimate_analytic_mode(cfg: ScenarioConfig, n_jobs: int = 1) -> OutageEstimate:
    """Estimate outage via per-link failure probabilities and the product form.

    With m gateways, k blocks, and identically distributed links, the hop
    outage is 1 - (1 - p^m)^k for a per-link per-block failure probability p,
    and the packet outage combines the two hops as
    1 - (1 - P_hop1)(1 - P_hop2). Secrecy statistics are computed exactly as
    in selection mode (they are defined through the selected gateway).
    """
    cfg.validate()
    chunks = _run_chunked(_analytic_counts, cfg, n_jobs)
    n_links = cfg.trials * cfg.k_blocks * cfg.m_gateways
    p1 = sum(c[0] for c in chunks) / n_links
    p2 = sum(c[1] for c in chunks) / n_links
    p_sec = sum(c[2] for c in chunks) / (cfg.trials * cfg.k_blocks)
    p_hop1 = 1.0 - (1.0 - p1 ** cfg.m_gateways) ** cfg.k_blocks
    p_hop2 = 1.0 - (1.0 - p2 ** cfg.m_gateways) ** cfg.k_blocks
    p_outage = 1.0 - (1.0 - p_hop1) * (1.0 - p_hop2)
    return OutageEstimate(
        p_outage=p_outage,
        p_sec_block=p_sec,
        unsecured_fraction=unsecured_fraction_combiner(p_sec, cfg.k_blocks),
        trials=cfg.trials,
        stderr_outage=_binomial_stderr(p_outage, cfg.trials),
        stderr_sec=_binomial_stderr(p_sec, cfg.trials),
    )


def unsecured_fraction_combiner(p_block: float, k: int) -> float:
    """Expected leaked fraction of a k-block packet from the per-block
    secrecy outage probability: sum over the number of compromised blocks j
    of (j/k) C(k, j) p^j (1-p)^(k-j). Algebraically this is the mean of a
    binomial divided by k, i.e. exactly p_block; the sum is kept explicit."""
    if not 0.0 <= p_block <= 1.0:
        raise ValueError(f"p_block must lie in [0, 1], got {p_block}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    total = 0.0
    for j in range(1, k + 1):
        total += (j / k) * math.comb(k, j) * p_block ** j * (1.0 - p_block) ** (k - j)
    return total
