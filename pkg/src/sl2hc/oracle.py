"""Independent spectral oracle for the closed-form tensor decompositions.

The compact-picture action on a K-weight basis {w_k},

    H'.w_k = k w_k,   E'.w_k = (lam+k+1)/2 w_{k+2},   F'.w_k = (lam-k+1)/2 w_{k-2},

realizes a principal series for any rational lam, and the finite-dimensional
module V(m) as the window |k| <= m at lam = -(m+1) (both ladder coefficients
vanish at the window edges).  The Casimir element

    Omega = H'^2 + 1 + 2 E'F' + 2 F'E'

acts on a tensor product through the coproduct g -> g(x)1 + 1(x)g and
preserves each total K-weight, so its matrix on the (finite-dimensional)
weight-k subspace of (principal series) (x) V(m) is exactly computable.
Comparing its generalized eigenvalue multiplicities with the closed-form
prediction is a genuinely independent check: nothing here consults the
decomposition formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (
    Scalar,
    as_scalar,
    casimir_value,
    check_parity,
    format_scalar,
    is_integer,
    ktype_function,
)
from .linalg import char_poly, clear_denominators, jordan_block_sizes, root_multiplicity
from .tensor import LengthTwo, block_parameter, decomposition_semisimplification, ps_tensor


class UnexpectedEigenvalueError(ArithmeticError):
    """Raised when a Casimir spectrum leaves the candidate eigenvalue set."""


# --- realizations ------------------------------------------------------------


@dataclass(frozen=True)
class PrincipalSeriesRealization:
    """Principal series on the K-weight basis {w_k : k = eps mod 2}."""

    lam: Fraction
    eps: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", as_scalar(self.lam))
        check_parity(self.eps)

    def has_weight(self, k: int) -> bool:
        return (k - self.eps) % 2 == 0

    def e_coeff(self, k: int) -> Fraction:
        return (self.lam + k + 1) / 2

    def f_coeff(self, k: int) -> Fraction:
        return (self.lam - k + 1) / 2


@dataclass(frozen=True)
class FinDimRealization:
    """V(m) as the weight window |k| <= m of the ladder at lam = -(m+1).

    The raising coefficient vanishes at k = m and the lowering one at
    k = -m, so the window is closed under the action.
    """

    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 0:
            raise ValueError(f"highest weight must be a nonnegative integer, got {self.m!r}")

    @property
    def lam(self) -> Fraction:
        return Fraction(-(self.m + 1))

    def has_weight(self, k: int) -> bool:
        return abs(k) <= self.m and (k - self.m) % 2 == 0

    def e_coeff(self, k: int) -> Fraction:
        return (self.lam + k + 1) / 2

    def f_coeff(self, k: int) -> Fraction:
        return (self.lam - k + 1) / 2


Realization = PrincipalSeriesRealization | FinDimRealization


class _SingleSpace:
    """Free vectors {k: coeff} over one realization."""

    def __init__(self, factor: Realization) -> None:
        self.factor = factor

    def basis_at(self, k: int) -> list:
        return [k] if self.factor.has_weight(k) else []

    def weight_of(self, key) -> int:
        return key

    def apply(self, gen: str, vec: dict) -> dict:
        out: dict = {}
        r = self.factor
        for k, c in vec.items():
            if gen == "H":
                _acc(out, k, c * k)
            elif gen == "E":
                _acc(out, k + 2, c * r.e_coeff(k))
            else:
                _acc(out, k - 2, c * r.f_coeff(k))
        return out


class _TensorSpace:
    """Free vectors {(a, b): coeff} over a pair of realizations (Leibniz action)."""

    def __init__(self, left: Realization, right: Realization) -> None:
        self.left = left
        self.right = right

    def basis_at(self, k: int) -> list:
        if not isinstance(self.right, FinDimRealization):
            raise ValueError("weight spaces are finite only with a finite-dimensional factor")
        return [
            (k - b, b)
            for b in range(-self.right.m, self.right.m + 1, 2)
            if self.left.has_weight(k - b)
        ]

    def weight_of(self, key) -> int:
        return key[0] + key[1]

    def apply(self, gen: str, vec: dict) -> dict:
        out: dict = {}
        for (a, b), c in vec.items():
            if gen == "H":
                _acc(out, (a, b), c * (a + b))
            elif gen == "E":
                _acc(out, (a + 2, b), c * self.left.e_coeff(a))
                _acc(out, (a, b + 2), c * self.right.e_coeff(b))
            else:
                _acc(out, (a - 2, b), c * self.left.f_coeff(a))
                _acc(out, (a, b - 2), c * self.right.f_coeff(b))
        return out


def _acc(out: dict, key, val: Fraction) -> None:
    if not val:
        return
    new = out.get(key, 0) + val
    if new:
        out[key] = new
    elif key in out:
        del out[key]


def _omega(space, vec: dict) -> dict:
    """Apply Omega = H'^2 + 1 + 2 E'F' + 2 F'E'."""
    out: dict = {}
    for key, c in space.apply("H", space.apply("H", vec)).items():
        _acc(out, key, c)
    for key, c in vec.items():
        _acc(out, key, c)
    for key, c in space.apply("E", space.apply("F", vec)).items():
        _acc(out, key, 2 * c)
    for key, c in space.apply("F", space.apply("E", vec)).items():
        _acc(out, key, 2 * c)
    return out


def _space_for(a: Realization, b: Optional[FinDimRealization]):
    return _SingleSpace(a) if b is None else _TensorSpace(a, b)


def casimir_matrix(a: Realization, b: Optional[FinDimRealization], k: int) -> list:
    """Exact matrix of Omega on the K-weight-k subspace (columns are images)."""
    space = _space_for(a, b)
    basis = space.basis_at(k)
    if not basis:
        raise ValueError(f"no vectors at this K-weight: k={k}")
    index = {key: i for i, key in enumerate(basis)}
    n = len(basis)
    mat = [[Fraction(0)] * n for _ in range(n)]
    for j, key in enumerate(basis):
        image = _omega(space, {key: Fraction(1)})
        for ikey, c in image.items():
            if ikey not in index:
                raise AssertionError("Casimir left the weight subspace")
            mat[index[ikey]][j] = c
    return mat


def casimir_on_symmetric_power(m: int) -> list:
    """Casimir diagonal on the m-th symmetric power of the defining module.

    Independent cross-check model for V(m): on the monomial basis indexed by
    k = 0..m the Casimir acts by (m-2k)^2 + 1 + 2(m-k)(k+1) + 2k(m-k+1).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    return [
        Fraction((m - 2 * k) ** 2 + 1 + 2 * (m - k) * (k + 1) + 2 * k * (m - k + 1))
        for k in range(m + 1)
    ]


# --- reducibility points ------------------------------------------------------


def reducibility_points(lam: Scalar, eps: int) -> list:
    """K-weights where a ladder coefficient vanishes, with the dying generator.

    Nonempty exactly when the series is reducible: integral parameter with
    the opposite parity.
    """
    lam = as_scalar(lam)
    check_parity(eps)
    points = []
    for k_val, gen in ((-lam - 1, "E'"), (lam + 1, "F'")):
        if is_integer(k_val) and (int(k_val) - eps) % 2 == 0:
            points.append((int(k_val), gen))
    points.sort()
    return points


# --- spectral reports ---------------------------------------------------------


@dataclass(frozen=True)
class WeightSpectrum:
    """Casimir structure on one K-weight subspace.

    ``eigenvalues`` holds (value, algebraic multiplicity, Jordan block sizes
    sorted descending), sorted by value.
    """

    k: int
    dim: int
    eigenvalues: tuple


@dataclass(frozen=True)
class CasimirReport:
    lam: Fraction
    eps: int
    m: int
    window: tuple
    entries: tuple


def default_window(lam: Scalar, eps: int, m: int) -> tuple:
    """Symmetric window; the bound |lam|+m+6 snapped up to the K-type parity."""
    lam = as_scalar(lam)
    bound = math.ceil(abs(lam) + m + 6)
    if (bound - (eps + m)) % 2 != 0:
        bound += 1
    return (-bound, bound)


def casimir_report(lam: Scalar, eps: int, m: int, window: Optional[tuple] = None) -> CasimirReport:
    """Exact Casimir eigenstructure of (principal series) (x) V(m) per K-weight."""
    lam = as_scalar(lam)
    check_parity(eps)
    if m < 0 or not isinstance(m, int):
        raise ValueError(f"m must be a nonnegative integer, got {m!r}")
    if window is None:
        window = default_window(lam, eps, m)
    lo, hi = window
    if lo > hi:
        raise ValueError("window must be nonempty")
    a = PrincipalSeriesRealization(lam, eps)
    b = FinDimRealization(m)
    candidates = sorted({(lam + m - 2 * j) ** 2 for j in range(m + 1)})
    parity = (eps + m) % 2
    start = lo if (lo - parity) % 2 == 0 else lo + 1
    entries = []
    for k in range(start, hi + 1, 2):
        mat = casimir_matrix(a, b, k)
        entries.append(_weight_spectrum(k, mat, candidates))
    return CasimirReport(lam, eps, m, (lo, hi), tuple(entries))


def _weight_spectrum(k: int, mat: list, candidates: list) -> WeightSpectrum:
    n = len(mat)
    mint, scale = clear_denominators(mat, extra=candidates)
    poly = char_poly(mint)
    eigen = []
    remaining = poly
    for c in candidates:
        cs = c * scale
        assert cs.denominator == 1
        mult, remaining = root_multiplicity(remaining, int(cs))
        if mult:
            sizes = jordan_block_sizes(mint, int(cs), mult)
            eigen.append((c, mult, sizes))
    if len(remaining) != 1:
        raise UnexpectedEigenvalueError(
            f"unexpected eigenvalue at K-weight {k}: char poly factor {remaining} "
            f"has no roots among the candidates"
        )
    assert sum(mult for _, mult, _ in eigen) == n
    return WeightSpectrum(k, n, tuple(eigen))


# --- closed form vs oracle ----------------------------------------------------


@dataclass(frozen=True)
class VerifyEntry:
    k: int
    dim: int
    observed: tuple  # ((value, mult, jordan sizes), ...)
    predicted: tuple  # ((value, mult), ...)
    match: bool


@dataclass(frozen=True)
class BlockObservation:
    """Observed Jordan data at the Casimir value of one LengthTwo block."""

    casimir: Fraction
    jordan_profiles: tuple  # distinct size tuples seen across the window


@dataclass(frozen=True)
class VerificationVerdict:
    lam: Fraction
    eps: int
    m: int
    window: tuple
    entries: tuple
    block_observations: tuple
    passed: bool

    def first_mismatch(self) -> Optional[VerifyEntry]:
        return next((e for e in self.entries if not e.match), None)


def verify_tensor(lam: Scalar, eps: int, m: int, window: Optional[tuple] = None) -> VerificationVerdict:
    """Compare closed-form Casimir multiplicities against the oracle per K-weight.

    The prediction is assembled from the tensor decomposition's
    semisimplification: each factor contributes its K-type indicator at its
    Casimir value.  Disagreement is a verdict, not an error.
    """
    lam = as_scalar(lam)
    check_parity(eps)
    summands = ps_tensor(lam, eps, m)
    factors = decomposition_semisimplification(summands)
    parts = [(casimir_value(cls), ktype_function(cls), mult) for cls, mult in factors.items()]
    report = casimir_report(lam, eps, m, window)

    entries = []
    block_values = sorted(
        {abs(block_parameter(s.sub)) ** 2 for s in summands if isinstance(s, LengthTwo)}
    )
    block_profiles: dict = {v: set() for v in block_values}
    for ws in report.entries:
        predicted: dict = {}
        for value, ktf, mult in parts:
            count = mult * ktf.value(ws.k)
            if count:
                predicted[value] = predicted.get(value, 0) + count
        observed = {value: mult for value, mult, _ in ws.eigenvalues}
        match = observed == predicted
        entries.append(
            VerifyEntry(
                ws.k,
                ws.dim,
                ws.eigenvalues,
                tuple(sorted(predicted.items())),
                match,
            )
        )
        for value, mult, sizes in ws.eigenvalues:
            if value in block_profiles:
                block_profiles[value].add(sizes)
    observations = tuple(
        BlockObservation(v, tuple(sorted(block_profiles[v]))) for v in block_values
    )
    passed = all(e.match for e in entries)
    return VerificationVerdict(lam, eps, m, report.window, tuple(entries), observations, passed)


# --- serialization helpers ----------------------------------------------------


def report_to_dict(r: CasimirReport) -> dict:
    return {
        "lambda": format_scalar(r.lam),
        "eps": r.eps,
        "m": r.m,
        "window": list(r.window),
        "entries": [
            {
                "k": ws.k,
                "dim": ws.dim,
                "spectrum": [
                    {"value": format_scalar(v), "mult": mult, "jordan": list(sizes)}
                    for v, mult, sizes in ws.eigenvalues
                ],
            }
            for ws in r.entries
        ],
    }


def verdict_to_dict(v: VerificationVerdict) -> dict:
    return {
        "lambda": format_scalar(v.lam),
        "eps": v.eps,
        "m": v.m,
        "window": list(v.window),
        "entries": [
            {
                "k": e.k,
                "dim": e.dim,
                "spectrum": [
                    {"value": format_scalar(val), "mult": mult, "jordan": list(sizes)}
                    for val, mult, sizes in e.observed
                ],
                "predicted": [
                    {"value": format_scalar(val), "mult": mult} for val, mult in e.predicted
                ],
                "match": e.match,
            }
            for e in v.entries
        ],
        "blocks": [
            {
                "casimir": format_scalar(b.casimir),
                "jordan_profiles": [list(p) for p in b.jordan_profiles],
            }
            for b in v.block_observations
        ],
        "verdict": "PASS" if v.passed else "FAIL",
    }
