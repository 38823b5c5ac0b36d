"""
Covariance-matrix algebra for one-, two- and three-mode Gaussian states.

Conventions: quadratures are ordered ``(q_1, p_1, q_2, p_2, ...)`` and the
vacuum has variance 1/2. Entropies are in nats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "CovMat",
    "TwoModeInvariants",
    "SymplecticSpectrum",
    "UnphysicalStateError",
    "VACUUM",
    "entropy_fn",
    "omega",
    "det2",
    "det4",
    "partial_trace",
    "two_mode_invariants",
    "symplectic_spectrum",
    "symplectic_spectrum_generic",
    "has_equal_offdiagonal",
    "two_mode_entropy",
    "single_mode_entropy",
    "is_entangled",
    "symplectic_eigenvalues",
    "is_physical",
]

VACUUM = 0.5

# slack below 1/2 accepted as round-off for symplectic eigenvalues
PHYS_TOL = 1e-9
SYM_TOL = 1e-12
DISCRIMINANT_TOL = 1e-12
ENTANGLEMENT_MARGIN = 1e-10
# relative slack on J - (sqrt(I_h I_k) - |I_hk|)^2 in the |c1| = |c2| test
STANDARD_FORM_RTOL = 1e-8
JTILDE_SNAP = 64 * np.finfo(float).eps


class UnphysicalStateError(ValueError):
    """Raised when a covariance matrix violates the uncertainty relation."""


def entropy_fn(x: float) -> float:
    r"""
    Von Neumann entropy of a thermal mode with symplectic eigenvalue `x`.

    .. math::

        f(x) = (x + 1/2)\ln(x + 1/2) - (x - 1/2)\ln(x - 1/2)

    Inputs in ``[1/2 - 1e-9, 1/2]`` are clamped to 1/2, where ``f = 0``.

    Raises
    ------
    UnphysicalStateError
        If ``x < 1/2 - 1e-9``.
    """
    if x < VACUUM - PHYS_TOL:
        raise UnphysicalStateError(f"symplectic eigenvalue {x!r} below 1/2")
    if x <= VACUUM:
        return 0.0
    xp = x + 0.5
    xm = x - 0.5
    return xp * math.log(xp) - xm * math.log(xm)


def omega(n: int) -> np.ndarray:
    """Symplectic form ``ω ⊕ ... ⊕ ω`` on `n` modes, ``ω = [[0, 1], [-1, 0]]``."""
    w = np.array([[0.0, 1.0], [-1.0, 0.0]])
    return np.kron(np.eye(n), w)


def det2(m) -> float:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def det4(m) -> float:
    """Determinant of a 4x4 matrix by Laplace expansion in 2x2 minors."""
    (a00, a01, a02, a03), (a10, a11, a12, a13), \
        (a20, a21, a22, a23), (a30, a31, a32, a33) = m
    s0 = a00 * a11 - a10 * a01
    s1 = a00 * a12 - a10 * a02
    s2 = a00 * a13 - a10 * a03
    s3 = a01 * a12 - a11 * a02
    s4 = a01 * a13 - a11 * a03
    s5 = a02 * a13 - a12 * a03
    c5 = a22 * a33 - a32 * a23
    c4 = a21 * a33 - a31 * a23
    c3 = a21 * a32 - a31 * a22
    c2 = a20 * a33 - a30 * a23
    c1 = a20 * a32 - a30 * a22
    c0 = a20 * a31 - a30 * a21
    return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0


@dataclass(frozen=True)
class CovMat:
    """
    Covariance matrix of a zero-mean Gaussian state.

    Parameters
    ----------
    matrix : array_like
        Real symmetric ``2n x 2n`` matrix, ``n`` in {1, 2, 3}.
    modes : tuple of str, optional
        Mode labels, one per mode. Defaults to ``("A", "B", "C")[:n]``.
    """

    matrix: np.ndarray
    modes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (2, 4, 6):
            raise ValueError(f"expected a 2n x 2n matrix with n <= 3, got {m.shape}")
        if not np.allclose(m, m.T, rtol=0.0, atol=SYM_TOL):
            raise ValueError("covariance matrix is not symmetric")
        if np.any(np.diag(m) < VACUUM - PHYS_TOL):
            raise UnphysicalStateError("diagonal entry below vacuum variance")
        m.setflags(write=False)
        n = m.shape[0] // 2
        modes = tuple(self.modes) if self.modes else tuple("ABC"[:n])
        if len(modes) != n or len(set(modes)) != n:
            raise ValueError(f"need {n} distinct mode labels, got {modes!r}")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "modes", modes)

    @property
    def n_modes(self) -> int:
        return len(self.modes)

    def block(self, h: str, k: str) -> np.ndarray:
        """2x2 block between modes `h` and `k`."""
        i, j = self.index(h), self.index(k)
        return self.matrix[2 * i:2 * i + 2, 2 * j:2 * j + 2]

    def index(self, label: str) -> int:
        try:
            return self.modes.index(label)
        except ValueError:
            raise KeyError(f"unknown mode {label!r}; modes are {self.modes}") from None

    def __eq__(self, other):
        if not isinstance(other, CovMat):
            return NotImplemented
        return self.modes == other.modes and np.array_equal(self.matrix, other.matrix)

    __hash__ = None


def partial_trace(cm: CovMat, keep) -> CovMat:
    """
    Reduced covariance matrix on the modes in `keep`.

    Modes keep the order they have in `cm` unless `keep` is a list or tuple,
    in which case its order is used.
    """
    if isinstance(keep, str):
        keep = tuple(keep)
    if isinstance(keep, (set, frozenset)):
        labels = [m for m in cm.modes if m in keep]
        unknown = set(keep) - set(cm.modes)
        if unknown:
            raise KeyError(f"unknown mode(s) {sorted(unknown)}")
    else:
        labels = list(keep)
    if not labels:
        raise ValueError("keep must name at least one mode")
    if len(set(labels)) != len(labels):
        raise ValueError(f"repeated mode label in {labels!r}")
    idx = []
    for lab in labels:
        i = cm.index(lab)
        idx += [2 * i, 2 * i + 1]
    return CovMat(cm.matrix[np.ix_(idx, idx)], tuple(labels))


@dataclass(frozen=True)
class TwoModeInvariants:
    """Local symplectic invariants of a two-mode covariance matrix."""

    i_h: float
    i_k: float
    i_hk: float
    j_hk: float
    j_tilde_hk: float

    @property
    def seralian(self) -> float:
        return self.i_h + self.i_k + 2.0 * self.i_hk


def two_mode_invariants(cm: CovMat) -> TwoModeInvariants:
    """
    Block determinants of a 4x4 covariance matrix.

    ``j_tilde_hk`` is ``det(σ + (i/2) Ω)``, a real number equal to
    ``(λ₊² - 1/4)(λ₋² - 1/4)``; it vanishes when one symplectic
    eigenvalue sits at the vacuum value. Values within round-off of zero,
    relative to ``(I_h + I_k + 2|I_hk|)²``, are set to exactly zero.
    """
    m = cm.matrix if isinstance(cm, CovMat) else np.asarray(cm, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"two-mode invariants need a 4x4 matrix, got {m.shape}")
    rows = m.tolist()
    i_h = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    i_k = rows[2][2] * rows[3][3] - rows[2][3] * rows[3][2]
    i_hk = rows[0][2] * rows[1][3] - rows[0][3] * rows[1][2]
    j = det4(rows)
    j_tilde = j - 0.25 * (i_h + i_k + 2.0 * i_hk) + 1.0 / 16.0
    # EoF depends on sqrt(j_tilde): leftover round-off near 0 would cost ~1e-8 nats
    if abs(j_tilde) <= JTILDE_SNAP * (i_h + i_k + 2.0 * abs(i_hk)) ** 2:
        j_tilde = 0.0
    return TwoModeInvariants(i_h, i_k, i_hk, j, j_tilde)


@dataclass(frozen=True)
class SymplecticSpectrum:
    lambda_minus: float
    lambda_plus: float
    lambda_tilde_minus: float


def _clamped_sqrt(disc: float, scale: float) -> float:
    if disc < 0.0:
        if disc < -DISCRIMINANT_TOL * max(1.0, scale):
            raise UnphysicalStateError(f"negative discriminant {disc!r}")
        return 0.0
    return math.sqrt(disc)


def symplectic_spectrum_generic(inv: TwoModeInvariants) -> SymplecticSpectrum:
    """
    Symplectic eigenvalues from the invariants alone:
    ``λ±² = (Δ ± sqrt(Δ² - 4J)) / 2`` with ``Δ = I_h + I_k ± 2 I_hk``
    (plus sign for the state, minus sign for the partial transpose).

    Loses about half the digits when the two eigenvalues nearly coincide.
    """
    j = inv.j_hk
    s = inv.i_h + inv.i_k + 2.0 * inv.i_hk
    st = inv.i_h + inv.i_k - 2.0 * inv.i_hk
    root = _clamped_sqrt(s * s - 4.0 * j, s * s)
    root_t = _clamped_sqrt(st * st - 4.0 * j, st * st)
    lm = math.sqrt(max(s - root, 0.0) / 2.0)
    lp = math.sqrt(max(s + root, 0.0) / 2.0)
    ltm = math.sqrt(max(st - root_t, 0.0) / 2.0)
    return SymplecticSpectrum(lm, lp, ltm)


def has_equal_offdiagonal(inv: TwoModeInvariants) -> bool:
    """
    True if the standard form has ``|c1| = |c2|`` (squeezed or mixed thermal).

    In standard form ``J = (ab - c1²)(ab - c2²)``, which reaches
    ``(ab - |c1 c2|)²`` exactly when ``c1² = c2²``.
    """
    ref = (math.sqrt(inv.i_h * inv.i_k) - abs(inv.i_hk)) ** 2
    return abs(inv.j_hk - ref) <= STANDARD_FORM_RTOL * max(1.0, abs(inv.j_hk))


def _equal_offdiag_pair(a: float, b: float, c_sq: float, cc: float) -> tuple[float, float]:
    # standard form diag(a,a), diag(b,b), diag(c1,c2) with c1^2 = c2^2 = c_sq, cc = c1 c2
    if cc > 0:
        q = math.sqrt((a - b) ** 2 + 4.0 * c_sq)
        return 0.5 * (a + b - q), 0.5 * (a + b + q)
    r2 = (a + b) ** 2 - 4.0 * c_sq
    r = _clamped_sqrt(r2, (a + b) ** 2)
    d = abs(a - b)
    return 0.5 * (r - d), 0.5 * (r + d)


def symplectic_spectrum(inv: TwoModeInvariants) -> SymplecticSpectrum:
    """
    Symplectic eigenvalues ``λ±`` of a two-mode state and the smallest
    symplectic eigenvalue ``λ̃₋`` of its partial transpose.

    For standard forms with ``|c1| = |c2|`` the eigenvalues are evaluated in
    factored form, ``½[√((a+b)² - 4c²) ± |a-b|]`` when ``c1 c2 < 0`` and
    ``½[(a+b) ± √((a-b)² + 4c²)]`` when ``c1 c2 > 0``; partial transposition
    flips the sign of ``c1 c2``. This stays accurate near the vacuum, where
    the generic discriminant ``Δ² - 4J`` cancels. Other states fall back to
    :func:`symplectic_spectrum_generic`.
    """
    if not has_equal_offdiagonal(inv):
        return symplectic_spectrum_generic(inv)
    a, b = math.sqrt(inv.i_h), math.sqrt(inv.i_k)
    c_sq = abs(inv.i_hk)
    lm, lp = _equal_offdiag_pair(a, b, c_sq, inv.i_hk)
    ltm, _ = _equal_offdiag_pair(a, b, c_sq, -inv.i_hk)
    return SymplecticSpectrum(max(lm, 0.0), lp, max(ltm, 0.0))


def two_mode_entropy(cm: CovMat) -> float:
    spec = symplectic_spectrum(two_mode_invariants(cm))
    return entropy_fn(spec.lambda_plus) + entropy_fn(spec.lambda_minus)


def single_mode_entropy(cm: CovMat) -> float:
    m = cm.matrix if isinstance(cm, CovMat) else np.asarray(cm, dtype=float)
    if m.shape != (2, 2):
        raise ValueError(f"single-mode entropy needs a 2x2 matrix, got {m.shape}")
    d = det2(m)
    if d < 0.0:
        raise UnphysicalStateError(f"negative determinant {d!r}")
    return entropy_fn(math.sqrt(d))


def is_entangled(cm: CovMat) -> bool:
    """PPT test: entangled iff ``λ̃₋ < 1/2`` by more than 1e-10."""
    spec = symplectic_spectrum(two_mode_invariants(cm))
    return spec.lambda_tilde_minus < VACUUM - ENTANGLEMENT_MARGIN


def symplectic_eigenvalues(cm: CovMat) -> np.ndarray:
    """
    All symplectic eigenvalues of `cm`, ascending.

    Computed as the moduli of the eigenvalues of ``iΩσ``; each appears
    twice in that spectrum and is reported once.
    """
    m = cm.matrix if isinstance(cm, CovMat) else np.asarray(cm, dtype=float)
    n = m.shape[0] // 2
    ev = np.sort(np.abs(np.linalg.eigvals(1j * omega(n) @ m)))
    return ev[::2]


def is_physical(cm: CovMat, tol: float = PHYS_TOL) -> bool:
    return bool(symplectic_eigenvalues(cm)[0] >= VACUUM - tol)
