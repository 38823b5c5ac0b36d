import math

import numpy as np
import pytest

from gaussbalance.states import TripartiteParams

# -sum p ln p of the thermal law p_q = N^q/(N+1)^(q+1), mpmath at 30 digits
THERMAL_ENTROPY = {
    1.5: 1.68252916752314108999,
    0.5: 0.954771252442219227676,
    2.0 / 3.0: 1.12168611168209405999,
}


def thermal_series_entropy(n: float, terms: int = 4000) -> float:
    """Entropy of a thermal state summed term by term (no closed form)."""
    if n == 0:
        return 0.0
    q = np.arange(terms)
    log_p = q * math.log(n) - (q + 1) * math.log1p(n)
    p = np.exp(log_p)
    return float(-np.sum(p * log_p))


def complex_jtilde(sigma: np.ndarray) -> float:
    """det(σ + (i/2)Ω) through a general complex determinant."""
    w = np.array([[0.0, 1.0], [-1.0, 0.0]])
    om = np.kron(np.eye(2), w)
    return float(np.linalg.det(sigma.astype(complex) + 0.5j * om).real)


def random_params(n: int, seed: int = 1234, top: float = 5.0):
    rng = np.random.default_rng(seed)
    pts = top - rng.uniform(0.0, top, size=(n, 2))
    return [TripartiteParams(float(a), float(b)) for a, b in pts]


@pytest.fixture(scope="session")
def grid200():
    return random_params(200)


# criterion number -> (passed, description, detail); filled by test_acceptance
ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        passed, desc, detail = ACCEPTANCE_RESULTS[n]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  [{n:2d}] {desc}  ({detail})")
