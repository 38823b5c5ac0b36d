"""
The tripartite pure Gaussian states generated from vacuum by the
interlinked Hamiltonian ``γ₁ a†c† + γ₂ b†c + h.c.``, and their reductions.

Everything is parameterized by the mean photon numbers of modes B and C;
mode A carries ``N_A = N_B + N_C``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .symplectic import CovMat, partial_trace

__all__ = [
    "MODES",
    "CouplingParams",
    "TripartiteParams",
    "ReductionParams",
    "photon_numbers",
    "build_cm",
    "reduce",
    "reduction_params",
    "remaining_mode",
    "squeezed_thermal_cm",
]

MODES = ("A", "B", "C")

_I2 = np.eye(2)
_P2 = np.diag([1.0, -1.0])


@dataclass(frozen=True)
class CouplingParams:
    """Coupling magnitudes and interaction time. Phases do not enter."""

    gamma1: complex
    gamma2: complex
    t: float

    def __post_init__(self):
        if abs(self.gamma2) <= abs(self.gamma1):
            raise ValueError("need |gamma2| > |gamma1| (oscillatory regime)")
        if self.t < 0:
            raise ValueError("interaction time must be nonnegative")

    @property
    def omega(self) -> float:
        return math.sqrt(abs(self.gamma2) ** 2 - abs(self.gamma1) ** 2)


@dataclass(frozen=True)
class TripartiteParams:
    n_b: float
    n_c: float

    def __post_init__(self):
        if not (self.n_b >= 0 and self.n_c >= 0):
            raise ValueError(f"photon numbers must be nonnegative, got {self.n_b}, {self.n_c}")

    @property
    def n_a(self) -> float:
        return self.n_b + self.n_c

    def photons(self, mode: str) -> float:
        return {"A": self.n_a, "B": self.n_b, "C": self.n_c}[mode]


@dataclass(frozen=True)
class ReductionParams:
    """
    Operator parameters of a two-mode reduction.

    ``kind == "STS"``: two-mode squeezing `squeeze_r` acting on
    ``ν(thermal_n) ⊗ |0⟩⟨0|``. ``kind == "MTS"``: beam-splitter angle
    `mix_phi` acting on the same input. The unused parameter is ``None``.
    """

    kind: str
    thermal_n: float
    squeeze_r: float | None = None
    mix_phi: float | None = None


def photon_numbers(cp: CouplingParams) -> TripartiteParams:
    g1 = abs(cp.gamma1) ** 2
    g2 = abs(cp.gamma2) ** 2
    om = cp.omega
    phase = om * cp.t
    n_b = g1 * g2 / om ** 4 * (math.cos(phase) - 1.0) ** 2
    n_c = g1 / om ** 2 * math.sin(phase) ** 2
    return TripartiteParams(n_b, n_c)


def build_cm(p: TripartiteParams) -> CovMat:
    """6x6 covariance matrix of the pure state, ordering (q_A, p_A, q_B, p_B, q_C, p_C)."""
    na, nb, nc = p.n_a, p.n_b, p.n_c
    d_a = (na + 0.5) * _I2
    d_b = (nb + 0.5) * _I2
    d_c = (nc + 0.5) * _I2
    o_ab = math.sqrt(nb * (na + 1.0)) * _P2
    o_ac = math.sqrt(nc * (na + 1.0)) * _P2
    o_bc = math.sqrt(nb * nc) * _I2
    sigma = np.block([
        [d_a, o_ab, o_ac],
        [o_ab, d_b, o_bc],
        [o_ac, o_bc, d_c],
    ])
    return CovMat(sigma, MODES)


def reduce(p: TripartiteParams, pair) -> CovMat:
    """Two-mode reduction on the ordered `pair`, e.g. ``("A", "B")`` or ``"BA"``."""
    pair = tuple(pair)
    if len(pair) != 2:
        raise ValueError(f"pair must name two modes, got {pair!r}")
    if pair[0] == pair[1]:
        raise ValueError(f"repeated mode label in pair {pair!r}")
    return partial_trace(build_cm(p), pair)


def remaining_mode(h: str, k: str) -> str:
    (j,) = set(MODES) - {h, k}
    return j


def reduction_params(p: TripartiteParams, pair) -> ReductionParams:
    """
    STS parameters for AB and AC, MTS parameters for BC.

    The MTS angle uses ``cos²φ = N_B / (N_B + N_C)`` with the thermal
    excitation ``N_A`` entering the first port.
    """
    key = frozenset(pair)
    if len(key) != 2 or not key <= set(MODES):
        raise ValueError(f"invalid pair {pair!r}")
    if key == {"A", "B"}:
        r = math.asinh(math.sqrt(p.n_b / (1.0 + p.n_c)))
        return ReductionParams("STS", thermal_n=p.n_c, squeeze_r=r)
    if key == {"A", "C"}:
        r = math.asinh(math.sqrt(p.n_c / (1.0 + p.n_b)))
        return ReductionParams("STS", thermal_n=p.n_b, squeeze_r=r)
    if p.n_a == 0:
        raise ValueError("mixing angle undefined for the vacuum")
    phi = math.acos(math.sqrt(p.n_b / p.n_a))
    return ReductionParams("MTS", thermal_n=p.n_a, mix_phi=phi)


def squeezed_thermal_cm(rp: ReductionParams) -> CovMat:
    """
    Rebuild a two-mode CM from its operator parameters.

    Transforms ``ν(N) ⊗ |0⟩⟨0|`` by the symplectic matrix of the
    two-mode squeezer (STS) or the beam splitter (MTS).
    """
    sigma0 = np.diag([rp.thermal_n + 0.5] * 2 + [0.5] * 2)
    if rp.kind == "STS":
        ch, sh = math.cosh(rp.squeeze_r), math.sinh(rp.squeeze_r)
        s = np.block([[ch * _I2, sh * _P2], [sh * _P2, ch * _I2]])
    elif rp.kind == "MTS":
        c, sn = math.cos(rp.mix_phi), math.sin(rp.mix_phi)
        s = np.block([[c * _I2, -sn * _I2], [sn * _I2, c * _I2]])
    else:
        raise ValueError(f"unknown reduction kind {rp.kind!r}")
    return CovMat(s @ sigma0 @ s.T, ("h", "k"))
