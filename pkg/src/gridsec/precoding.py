"""Transmit/receive filter design for one coherence block.

Three pieces per block:

* the jammer's precoder, confined to the null space of its channel to the
  eavesdropper so the jamming hurts only the legitimate receivers;
* the whitening + SVD design of each legitimate link (data precoder, receive
  filter, ordered singular values of the whitened channel);
* the legitimate transmitter's artificial-noise precoder, confined to the
  null space of the filtered channel so the AN cancels at the intended
  receiver while still hitting the eavesdropper.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import NullSpaceEmpty, inv_sqrt_hpd, null_space_basis, svd_ordered

# residual tolerance for the jammer-nulling identity, relative to |h_je|
_NULLING_RTOL = 1e-10


@dataclass(frozen=True)
class LinkDesign:
    """Filter bundle for one legitimate link.

    whitener:        inverse square root of the interference-plus-noise
                     covariance (rx x rx, Hermitian)
    data_precoder:   orthonormal columns, tx x streams
    receive_filter:  rx x streams; applied as receive_filter.conj().T
    an_precoder:     orthonormal columns, tx x (tx - streams); satisfies
                     receive_filter* @ h @ an_precoder ~ 0
    singular_values: descending, the `streams` largest of the whitened channel
    """

    whitener: np.ndarray
    data_precoder: np.ndarray
    receive_filter: np.ndarray
    an_precoder: np.ndarray
    singular_values: np.ndarray


def jammer_precoder(h_je: np.ndarray, n_j: int, n_e: int) -> np.ndarray:
    """Orthonormal n_j x (n_j - n_e) precoder nulled at the eavesdropper.

    The nulling identity ``h_je @ Q ~ 0`` is re-verified numerically on every
    call; each jamming stream later carries power p_j / (n_j - n_e).
    """
    if n_j <= n_e:
        raise NullSpaceEmpty(
            f"jammer needs more antennas than the eavesdropper: n_j={n_j}, n_e={n_e}"
        )
    if h_je.shape != (n_e, n_j):
        raise ValueError(f"h_je must be {n_e}x{n_j}, got {h_je.shape}")
    q = null_space_basis(h_je, n_j - n_e)
    scale = np.linalg.norm(h_je)
    if np.linalg.norm(h_je @ q) > _NULLING_RTOL * max(scale, 1.0):
        raise np.linalg.LinAlgError("jammer null-space residual exceeds tolerance")
    return q


def interference_covariance(h_j_rx: np.ndarray, q_j: np.ndarray, p_j: float,
                            n_an: int, kappa: float, n_rx: int) -> np.ndarray:
    """Covariance of jamming-plus-thermal noise at a legitimate receiver.

    W = (p_j / n_an) * (h_j_rx @ q_j)(h_j_rx @ q_j)* + kappa * I. The jammer
    power split across its n_an streams is included here so that whitening
    by W^{-1/2} leaves exactly identity interference-plus-noise covariance.
    """
    hq = h_j_rx @ q_j
    return (p_j / n_an) * (hq @ hq.conj().T) + kappa * np.eye(n_rx)


def design_link(h: np.ndarray, w: np.ndarray, streams: int) -> LinkDesign:
    """Whitened-SVD design of one legitimate link.

    With S = w^{-1/2} and U s V* the SVD of S @ h, the data precoder is the
    first `streams` columns of V, the overall receive filter is
    F* = U_s* @ S, and the AN precoder spans the null space of F* @ h
    (dimension tx - streams). Raises NullSpaceEmpty when tx <= streams.
    """
    rx, tx = h.shape
    if not 1 <= streams <= min(rx, tx):
        raise ValueError(f"streams must be in [1, min{h.shape}], got {streams}")
    if tx <= streams:
        raise NullSpaceEmpty(
            f"no antennas left for AN: tx={tx}, streams={streams}"
        )
    whitener = inv_sqrt_hpd(w)
    u, s, v = svd_ordered(whitener @ h)
    receive_filter = whitener.conj().T @ u[:, :streams]
    an_precoder = null_space_basis(receive_filter.conj().T @ h, tx - streams)
    return LinkDesign(
        whitener=whitener,
        data_precoder=np.ascontiguousarray(v[:, :streams]),
        receive_filter=receive_filter,
        an_precoder=an_precoder,
        singular_values=s[:streams],
    )
