"""
Gaussian entanglement of formation, directed Gaussian discord, and the
balance residuals that relate them to subsystem entropies.

Keys: single modes are ``"A"``; unordered pairs are sorted strings like
``"AB"``; ordered pairs (discord, residuals) are strings like ``"BA"``,
where the first letter is the measured mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .noise import ChannelParams, evolve_cm
from .states import MODES, TripartiteParams, build_cm, remaining_mode
from .symplectic import (
    CovMat,
    SymplecticSpectrum,
    TwoModeInvariants,
    UnphysicalStateError,
    ENTANGLEMENT_MARGIN,
    VACUUM,
    entropy_fn,
    has_equal_offdiagonal,
    partial_trace,
    single_mode_entropy,
    symplectic_spectrum,
    two_mode_invariants,
)

__all__ = [
    "CorrelationReport",
    "ORDERED_PAIRS",
    "UNORDERED_PAIRS",
    "eof_argument",
    "gaussian_eof",
    "gaussian_discord",
    "balance_delta",
    "balance_delta_kw",
    "full_report",
    "report_from_cm",
    "pair_key",
]

ORDERED_PAIRS = ("AB", "BA", "AC", "CA", "BC", "CB")
UNORDERED_PAIRS = ("AB", "AC", "BC")


def pair_key(h: str, k: str) -> str:
    return "".join(sorted(h + k))


def _invariants(cm) -> TwoModeInvariants:
    return cm if isinstance(cm, TwoModeInvariants) else two_mode_invariants(cm)


def eof_argument(cm) -> float:
    """
    The quantity ``y`` with ``E = f(y)``; exactly 1/2 for separable states.

    For entangled states::

        y = [(√I_h + √I_k)(√(I_h I_k) - |I_hk| + 1/4) - 2 √(|I_hk| J̃)]
            / [(√I_h + √I_k)² - 4 |I_hk|]

    with ``J̃ = det(σ + (i/2) Ω)``.
    """
    inv = _invariants(cm)
    spec = symplectic_spectrum(inv)
    if spec.lambda_tilde_minus >= VACUUM - ENTANGLEMENT_MARGIN:
        return VACUUM
    rh, rk = math.sqrt(inv.i_h), math.sqrt(inv.i_k)
    c = abs(inv.i_hk)
    denom = (rh + rk) ** 2 - 4.0 * c
    if denom <= 0.0:
        raise UnphysicalStateError(f"EoF denominator {denom!r} is not positive")
    num = (rh + rk) * (rh * rk - c + 0.25) - 2.0 * math.sqrt(c * max(inv.j_tilde_hk, 0.0))
    return num / denom


def gaussian_eof(cm) -> float:
    """Gaussian entanglement of formation in nats (0 for separable states)."""
    return entropy_fn(eof_argument(cm))


def _check_standard_form(inv: TwoModeInvariants) -> None:
    if not has_equal_offdiagonal(inv):
        raise ValueError(
            "discord formula needs a standard form with |c1| = |c2| "
            f"(I_h={inv.i_h!r}, I_k={inv.i_k!r}, I_hk={inv.i_hk!r}, J={inv.j_hk!r})"
        )


def _discord(inv: TwoModeInvariants, spec: SymplecticSpectrum, measured_first: bool) -> float:
    i_m, i_o = (inv.i_h, inv.i_k) if measured_first else (inv.i_k, inv.i_h)
    rm = math.sqrt(i_m)
    conditional = math.sqrt(i_o) - 2.0 * abs(inv.i_hk) / (1.0 + 2.0 * rm)
    return (
        entropy_fn(rm)
        + entropy_fn(conditional)
        - entropy_fn(spec.lambda_minus)
        - entropy_fn(spec.lambda_plus)
    )


def gaussian_discord(cm, measured: str = "first") -> float:
    """
    Gaussian quantum discord of a two-mode state, in nats.

    Parameters
    ----------
    cm : CovMat or TwoModeInvariants
        A squeezed-thermal or mixed-thermal two-mode state, i.e. one whose
        standard form has ``|c1| = |c2|``.
    measured : {"first", "second"}
        Which mode the Gaussian measurement acts on.

    Raises
    ------
    ValueError
        If the state is outside the ``|c1| = |c2|`` class.
    """
    if measured not in ("first", "second"):
        raise ValueError(f"measured must be 'first' or 'second', got {measured!r}")
    inv = _invariants(cm)
    _check_standard_form(inv)
    return _discord(inv, symplectic_spectrum(inv), measured == "first")


@dataclass
class CorrelationReport:
    s_single: dict[str, float] = field(default_factory=dict)
    s_pair: dict[str, float] = field(default_factory=dict)
    discord: dict[str, float] = field(default_factory=dict)
    eof: dict[str, float] = field(default_factory=dict)
    delta: dict[str, float] = field(default_factory=dict)
    delta_kw: dict[str, float] = field(default_factory=dict)
    lambda_tilde_minus: dict[str, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "s_single": dict(self.s_single),
            "s_pair": dict(self.s_pair),
            "discord": dict(self.discord),
            "eof": dict(self.eof),
            "delta": dict(self.delta),
            "delta_kw": dict(self.delta_kw),
            "lambda_tilde_minus": dict(self.lambda_tilde_minus),
        }


def balance_delta(report: CorrelationReport, pair: str) -> float:
    """``Δ_hk = [D_hk + S_j] - [S_h + E_kj]``; zero for the pure family."""
    h, k = pair
    j = remaining_mode(h, k)
    return (report.discord[pair] + report.s_single[j]) - (
        report.s_single[h] + report.eof[pair_key(k, j)]
    )


def balance_delta_kw(report: CorrelationReport, pair: str) -> float:
    """``Δ^KW_hk = [D_hk + S_hk] - [S_h + E_kj]``; nonnegative under the channel."""
    h, k = pair
    j = remaining_mode(h, k)
    return (report.discord[pair] + report.s_pair[pair_key(h, k)]) - (
        report.s_single[h] + report.eof[pair_key(k, j)]
    )


def report_from_cm(sigma: CovMat) -> CorrelationReport:
    """All correlation quantities of a three-mode CM labelled A, B, C."""
    rep = CorrelationReport()
    for m in MODES:
        rep.s_single[m] = single_mode_entropy(sigma.block(m, m))
    for key in UNORDERED_PAIRS:
        h, k = key
        inv = two_mode_invariants(partial_trace(sigma, (h, k)))
        spec = symplectic_spectrum(inv)
        _check_standard_form(inv)
        rep.s_pair[key] = entropy_fn(spec.lambda_plus) + entropy_fn(spec.lambda_minus)
        rep.eof[key] = entropy_fn(eof_argument(inv))
        rep.lambda_tilde_minus[key] = spec.lambda_tilde_minus
        rep.discord[h + k] = _discord(inv, spec, True)
        rep.discord[k + h] = _discord(inv, spec, False)
    for pair in ORDERED_PAIRS:
        rep.delta[pair] = balance_delta(rep, pair)
        rep.delta_kw[pair] = balance_delta_kw(rep, pair)
    return rep


def full_report(p: TripartiteParams, channel: ChannelParams | None = None) -> CorrelationReport:
    """Report for the pure state `p`, optionally after the noisy channel."""
    sigma = build_cm(p)
    if channel is not None:
        sigma = evolve_cm(sigma, channel)
    return report_from_cm(sigma)
