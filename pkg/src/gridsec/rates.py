"""Per-block achievable rates on both hops, legitimate and eavesdropper side."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import NotPositiveDefinite, logdet_hpd
from .precoding import LinkDesign


@dataclass(frozen=True)
class BlockSample:
    """Achievable rates (bits/channel use) of one coherence block.

    r_ab[i]: consumer -> gateway i, with the design matched to gateway i
    r_bg[i]: gateway i -> aggregator
    r_ae:    eavesdropper's first-hop rate, under the consumer's actual
             transmit design (the one matched to the selected gateway)
    r_be[i]: eavesdropper's second-hop rate if gateway i forwards
    """

    r_ab: tuple
    r_bg: tuple
    r_ae: float
    r_be: tuple


def legit_rate(design: LinkDesign, p_data: float) -> float:
    """Rate of a whitened, diagonalized legitimate link.

    After whitening, the interference-plus-noise covariance is the identity,
    so the log-det rate collapses to sum_j log2(1 + p_data * s_j^2) over the
    design's singular values.
    """
    if p_data < 0:
        raise ValueError(f"p_data must be nonnegative, got {p_data}")
    s = design.singular_values
    return float(np.sum(np.log1p(p_data * s * s)) / np.log(2.0))


def eve_rate(h_ve: np.ndarray, data_precoder: np.ndarray, an_precoder: np.ndarray,
             p_data: float, p_an: float, kappa_e: float) -> float:
    """Eavesdropper rate against a transmitter using the given precoders.

    The eavesdropper treats the received artificial noise as Gaussian noise
    with covariance C = p_an (h_ve Q)(h_ve Q)* + kappa_e I and achieves
    log2 det(I + p_data (h_ve P)(h_ve P)* C^{-1}), evaluated stably as
    logdet(C + p_data X) - logdet(C).
    """
    if kappa_e <= 0:
        raise NotPositiveDefinite(f"kappa_e must be positive, got {kappa_e}")
    if p_data < 0 or p_an < 0:
        raise ValueError("powers must be nonnegative")
    n_e = h_ve.shape[0]
    hq = h_ve @ an_precoder
    cov = p_an * (hq @ hq.conj().T) + kappa_e * np.eye(n_e)
    hp = h_ve @ data_precoder
    signal = p_data * (hp @ hp.conj().T)
    return logdet_hpd(cov + signal) - logdet_hpd(cov)


def secrecy_rate_block(r_legit: float, r_eve: float) -> float:
    """Positive part of the rate advantage over the eavesdropper."""
    return max(0.0, r_legit - r_eve)


def end_to_end_secrecy(hop1: list, hop2: list) -> float:
    """Packet secrecy rate: the worst per-block secrecy rate of either hop."""
    if len(hop1) != len(hop2) or not hop1:
        raise ValueError("hop1 and hop2 must be equally sized, nonempty lists")
    return min(min(hop1), min(hop2))
