"""Reproducible generation of the per-block channel matrices.

All links fade independently per coherence block with i.i.d. circularly
symmetric complex Gaussian entries of unit variance (real and imaginary
parts each carry variance 1/2). Randomness is derived from counter-style
substreams keyed by (seed, trial, block), so trials can run in any order,
or in parallel, without changing the draws.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import ScenarioConfig


def substream(seed: int, trial: int, block: int) -> np.random.Generator:
    """Independent generator for one (trial, block) cell of the experiment."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial, block)))


def crandn(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    """rows x cols matrix with i.i.d. CN(0, 1) entries."""
    re = rng.standard_normal((rows, cols))
    im = rng.standard_normal((rows, cols))
    return (re + 1j * im) / np.sqrt(2.0)


@dataclass(frozen=True)
class ChannelDraw:
    """One block's channel matrices; per-gateway links are indexed tuples.

    h_ab[i]: consumer -> gateway i   (n_b x n_a)
    h_ae:    consumer -> eavesdropper (n_e x n_a)
    h_jb[i]: jammer -> gateway i     (n_b x n_j)
    h_je:    jammer -> eavesdropper  (n_e x n_j)
    h_bg[i]: gateway i -> aggregator (n_g x n_b)
    h_be[i]: gateway i -> eavesdropper (n_e x n_b)
    h_jg:    jammer -> aggregator    (n_g x n_j)
    """

    h_ab: tuple
    h_ae: np.ndarray
    h_jb: tuple
    h_je: np.ndarray
    h_bg: tuple
    h_be: tuple
    h_jg: np.ndarray


def draw_block_channels(cfg: ScenarioConfig, rng: np.random.Generator) -> ChannelDraw:
    """Draw every link of one coherence block from ``rng``.

    The draw order is fixed (h_ab per gateway, h_ae, h_jb per gateway, h_je,
    h_bg, h_be, h_jg) so a given stream always produces the same draw.
    """
    m = cfg.m_gateways
    h_ab = tuple(crandn(rng, cfg.n_b, cfg.n_a) for _ in range(m))
    h_ae = crandn(rng, cfg.n_e, cfg.n_a)
    h_jb = tuple(crandn(rng, cfg.n_b, cfg.n_j) for _ in range(m))
    h_je = crandn(rng, cfg.n_e, cfg.n_j)
    h_bg = tuple(crandn(rng, cfg.n_g, cfg.n_b) for _ in range(m))
    h_be = tuple(crandn(rng, cfg.n_e, cfg.n_b) for _ in range(m))
    h_jg = crandn(rng, cfg.n_g, cfg.n_j)
    return ChannelDraw(h_ab=h_ab, h_ae=h_ae, h_jb=h_jb, h_je=h_je,
                       h_bg=h_bg, h_be=h_be, h_jg=h_jg)
