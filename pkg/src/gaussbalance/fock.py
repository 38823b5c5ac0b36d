"""
Brute-force Fock-basis representation of the pure tripartite state.

The state is ``Σ_{n,m} c_{n,m} |n+m, n, m⟩`` with

    c_{n,m} = (1+N_A)^{-1/2} (N_B/(1+N_A))^{n/2} (N_C/(1+N_A))^{m/2}
              sqrt((n+m)! / (n! m!))

truncated at ``n, m <= cutoff``. Nothing here uses Gaussian formulas:
moments come from ladder-operator matrix elements, entropies from the
diagonal reduced occupation distributions.

Truncation bound: the weight of all kets with ``n + m = q`` is
``N_A^q / (1+N_A)^{q+1}``, so keeping ``n, m <= M`` (which retains every
``q <= M``) loses at most ``Σ_{q>M} N_A^q/(1+N_A)^{q+1} = r^{M+1}`` with
``r = N_A / (1+N_A)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .states import MODES, TripartiteParams
from .symplectic import CovMat

__all__ = [
    "CutoffError",
    "FockAmplitudes",
    "default_cutoff",
    "tail_bound",
    "build_amplitudes",
    "mean_photons",
    "mean_quadratures",
    "covariance_from_amplitudes",
    "occupation_distribution",
    "reduced_entropy_single",
]

MAX_DEFICIT = 1e-6
# n + m up to 2 * cutoff; gammaln stays exact far beyond this
MAX_CUTOFF = 100_000


class CutoffError(ValueError):
    """The truncated state misses too much probability weight."""


@dataclass(frozen=True)
class FockAmplitudes:
    params: TripartiteParams
    cutoff: int
    amps: np.ndarray  # amps[n, m] attached to |n+m, n, m>

    @property
    def norm(self) -> float:
        return float(np.sum(self.amps ** 2))

    @property
    def deficit(self) -> float:
        return 1.0 - self.norm


def tail_bound(p: TripartiteParams, cutoff: int) -> float:
    r = p.n_a / (1.0 + p.n_a)
    return r ** (cutoff + 1)


def default_cutoff(p: TripartiteParams, deficit: float = 1e-8) -> int:
    """Smallest cutoff whose analytic tail bound is below `deficit`."""
    if p.n_a == 0:
        return 0
    r = p.n_a / (1.0 + p.n_a)
    return max(0, math.ceil(math.log(deficit) / math.log(r)) - 1)


def _log_ratio(num: float, den: float) -> float:
    return math.log(num / den) if num > 0 else -math.inf


def build_amplitudes(p: TripartiteParams, cutoff: int | None = None) -> FockAmplitudes:
    if cutoff is None:
        cutoff = default_cutoff(p)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    if cutoff > MAX_CUTOFF:
        raise ValueError(f"cutoff {cutoff} exceeds {MAX_CUTOFF}")
    n = np.arange(cutoff + 1, dtype=float)
    nn, mm = np.meshgrid(n, n, indexing="ij")
    lb = _log_ratio(p.n_b, 1.0 + p.n_a)
    lc = _log_ratio(p.n_c, 1.0 + p.n_a)
    with np.errstate(invalid="ignore"):
        # 0 * -inf -> nan where a mode is empty; those entries are 0^0 = 1
        wb = np.where(nn == 0, 0.0, 0.5 * nn * lb)
        wc = np.where(mm == 0, 0.0, 0.5 * mm * lc)
    log_c = (
        -0.5 * math.log1p(p.n_a)
        + wb
        + wc
        + 0.5 * (gammaln(nn + mm + 1) - gammaln(nn + 1) - gammaln(mm + 1))
    )
    return FockAmplitudes(p, cutoff, np.exp(log_c))


def _require(fa: FockAmplitudes) -> None:
    if fa.deficit >= MAX_DEFICIT:
        raise CutoffError(
            f"norm deficit {fa.deficit:.3g} at cutoff {fa.cutoff}; increase the cutoff"
        )


def mean_photons(fa: FockAmplitudes) -> tuple[float, float, float]:
    """``(N_A, N_B, N_C)`` of the normalized truncated state."""
    _require(fa)
    w = fa.amps ** 2
    idx = np.arange(fa.cutoff + 1)
    nb = float(np.sum(w.sum(axis=1) * idx))
    nc = float(np.sum(w.sum(axis=0) * idx))
    na = float(np.sum(w * (idx[:, None] + idx[None, :])))
    norm = fa.norm
    return na / norm, nb / norm, nc / norm


def _ket_array(fa: FockAmplitudes) -> np.ndarray:
    # one spare level per axis so a single raising operator never truncates
    M = fa.cutoff
    psi = np.zeros((2 * M + 2, M + 2, M + 2))
    n, m = np.meshgrid(np.arange(M + 1), np.arange(M + 1), indexing="ij")
    psi[n + m, n, m] = fa.amps
    return psi / math.sqrt(fa.norm)


def _lower(psi: np.ndarray, axis: int) -> np.ndarray:
    out = np.zeros_like(psi)
    size = psi.shape[axis]
    shape = [1, 1, 1]
    shape[axis] = size - 1
    factor = np.sqrt(np.arange(1, size, dtype=float)).reshape(shape)
    src = [slice(None)] * 3
    dst = [slice(None)] * 3
    src[axis] = slice(1, None)
    dst[axis] = slice(0, size - 1)
    out[tuple(dst)] = factor * psi[tuple(src)]
    return out


def _raise(psi: np.ndarray, axis: int) -> np.ndarray:
    out = np.zeros_like(psi)
    size = psi.shape[axis]
    shape = [1, 1, 1]
    shape[axis] = size - 1
    factor = np.sqrt(np.arange(1, size, dtype=float)).reshape(shape)
    src = [slice(None)] * 3
    dst = [slice(None)] * 3
    src[axis] = slice(0, size - 1)
    dst[axis] = slice(1, None)
    out[tuple(dst)] = factor * psi[tuple(src)]
    return out


def _ladder_moments(fa: FockAmplitudes):
    """
    First and second moments of ``L = (a_A, a_A†, a_B, a_B†, a_C, a_C†)``.

    ``⟨x y⟩ = ⟨x† ψ | y ψ⟩``; the dagger of entry ``2k`` is entry ``2k+1``.
    """
    psi = _ket_array(fa)
    applied = []
    for axis in range(3):
        applied.append(_lower(psi, axis))
        applied.append(_raise(psi, axis))
    dagger = [1, 0, 3, 2, 5, 4]
    first = np.array([np.vdot(psi, v) for v in applied], dtype=complex)
    second = np.empty((6, 6), dtype=complex)
    for x in range(6):
        for y in range(6):
            second[x, y] = np.vdot(applied[dagger[x]], applied[y])
    return first, second


_S2 = 1.0 / math.sqrt(2.0)
# q = (a + a†)/√2, p = (a - a†)/(i√2)
_T = np.kron(np.eye(3), np.array([[_S2, _S2], [-1j * _S2, 1j * _S2]]))


def mean_quadratures(fa: FockAmplitudes) -> np.ndarray:
    _require(fa)
    first, _ = _ladder_moments(fa)
    return (_T @ first).real


def covariance_from_amplitudes(fa: FockAmplitudes) -> CovMat:
    """``Σ_hk = ½⟨{R_h, R_k}⟩ - ⟨R_h⟩⟨R_k⟩`` from the truncated ket."""
    _require(fa)
    first, second = _ladder_moments(fa)
    mean = _T @ first
    rr = _T @ second @ _T.T
    sigma = 0.5 * (rr + rr.T) - np.outer(mean, mean)
    return CovMat(sigma.real, MODES)


def occupation_distribution(fa: FockAmplitudes, mode: str) -> np.ndarray:
    """Diagonal of the reduced single-mode density matrix (normalized)."""
    w = fa.amps ** 2 / fa.norm
    if mode == "B":
        return w.sum(axis=1)
    if mode == "C":
        return w.sum(axis=0)
    if mode == "A":
        M = fa.cutoff
        n, m = np.meshgrid(np.arange(M + 1), np.arange(M + 1), indexing="ij")
        return np.bincount((n + m).ravel(), weights=w.ravel(), minlength=2 * M + 1)
    raise KeyError(f"unknown mode {mode!r}")


def reduced_entropy_single(fa: FockAmplitudes, mode: str) -> float:
    """``-Σ p ln p`` over the reduced occupation distribution, in nats."""
    _require(fa)
    p = occupation_distribution(fa, mode)
    p = p[p > 0]
    return float(-np.sum(p * np.log(p)))
