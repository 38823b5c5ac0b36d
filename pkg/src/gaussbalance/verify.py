"""Self-checks behind the ``verify`` command: conservation laws and the Fock oracle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .correlations import ORDERED_PAIRS, full_report
from .fock import (
    build_amplitudes,
    covariance_from_amplitudes,
    mean_photons,
    reduced_entropy_single,
)
from .states import MODES, TripartiteParams, build_cm
from .symplectic import entropy_fn

__all__ = ["Check", "run_checks"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    worst: float
    tol: float


def _conservation(n_points: int, seed: int) -> list[Check]:
    rng = np.random.default_rng(seed)
    # (0, 5]: flip [0, 5) samples
    pts = 5.0 - rng.uniform(0.0, 5.0, size=(n_points, 2))
    worst_a = worst_kw = 0.0
    for nb, nc in pts:
        rep = full_report(TripartiteParams(float(nb), float(nc)))
        for pair in ORDERED_PAIRS:
            worst_a = max(worst_a, abs(rep.delta[pair]))
            worst_kw = max(worst_kw, abs(rep.delta_kw[pair]))
    return [
        Check("conservation D_hk + S_j = S_h + E_kj", worst_a < 1e-9, worst_a, 1e-9),
        Check("conservation D_hk + S_hk = S_h + E_kj", worst_kw < 1e-9, worst_kw, 1e-9),
    ]


def _oracle(n_b: float, n_c: float, cutoff: int) -> list[Check]:
    p = TripartiteParams(n_b, n_c)
    fa = build_amplitudes(p, cutoff)
    checks = [Check("fock norm deficit", fa.deficit < 1e-6, fa.deficit, 1e-6)]
    if not checks[0].passed:
        # the moment checks need an adequate cutoff
        return checks
    got = np.array(mean_photons(fa))
    want = np.array([p.n_a, p.n_b, p.n_c])
    err = float(np.max(np.abs(got - want)))
    checks.append(Check("fock mean photons", err < 1e-6, err, 1e-6))
    err = float(np.max(np.abs(covariance_from_amplitudes(fa).matrix - build_cm(p).matrix)))
    checks.append(Check("fock covariance matrix", err < 1e-5, err, 1e-5))
    err = max(abs(reduced_entropy_single(fa, m) - entropy_fn(p.photons(m) + 0.5)) for m in MODES)
    checks.append(Check("fock single-mode entropies", err < 1e-5, err, 1e-5))
    return checks


def run_checks(n_b: float = 1.0, n_c: float = 0.5, cutoff: int = 60,
               n_points: int = 200, seed: int = 0) -> list[Check]:
    return _conservation(n_points, seed) + _oracle(n_b, n_c, cutoff)
