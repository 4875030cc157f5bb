"""The lattice of thick tensor-submodules and the classification it carries.

Tensoring with finite-dimensional modules cannot leave the finite-dimensional
classes, can only push a discrete series family towards the
finite-dimensionals, and moves an irreducible principal series through the
integer translates of its parameter (with the parameter sign identified).
The resulting "class points" are

* ``Fd``: all finite-dimensional classes,
* ``C+`` / ``C-``: the holomorphic / anti-holomorphic discrete series families,
* one point per principal series translation class, keyed by the canonical
  base parameter lam0 in [0, 1/2] (parity collapses when 2*lam0 is integral).

A set of class points is realizable as a thick tensor-submodule exactly when
it contains ``Fd`` whenever it meets a discrete series family; that single
constraint generates the whole lattice, its specialization topology, and an
injective classification of the irreducible classes by (closure of the
generic point, integer shift from the base parameter).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .core import (
    DiscreteSeries,
    FinDim,
    IrreducibleClass,
    PrincipalIrr,
    Scalar,
    VirtualModule,
    as_scalar,
    check_parity,
    format_scalar,
    is_integer,
    principal_is_irreducible,
)


@dataclass(frozen=True)
class ClassPoint:
    """A point of the class space: Fd, C+, C-, or a principal series class."""

    kind: str
    lam0: Optional[Fraction] = None
    eps0: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind in ("fd", "hol", "antihol"):
            if self.lam0 is not None or self.eps0 is not None:
                raise ValueError(f"{self.kind} point carries no parameters")
            return
        if self.kind != "ps":
            raise ValueError(f"unknown class point kind {self.kind!r}")
        lam0 = as_scalar(self.lam0)
        if not 0 <= lam0 <= Fraction(1, 2):
            raise ValueError("base parameter must lie in [0, 1/2]")
        collapsed = is_integer(2 * lam0)
        if collapsed:
            if self.eps0 is not None:
                raise ValueError("parity collapses when twice the base parameter is integral")
        else:
            if self.eps0 is None:
                raise ValueError("parity marker required for this base parameter")
            check_parity(self.eps0)
        object.__setattr__(self, "lam0", lam0)


FD_POINT = ClassPoint("fd")
HOL_POINT = ClassPoint("hol")
ANTIHOL_POINT = ClassPoint("antihol")

_KIND_ORDER = {"fd": 0, "hol": 1, "antihol": 2, "ps": 3}


def point_sort_key(p: ClassPoint) -> tuple:
    return (
        _KIND_ORDER[p.kind],
        p.lam0 if p.lam0 is not None else Fraction(0),
        p.eps0 if p.eps0 is not None else -1,
    )


def format_point(p: ClassPoint) -> str:
    if p.kind == "fd":
        return "Fd"
    if p.kind == "hol":
        return "C+"
    if p.kind == "antihol":
        return "C-"
    eps = "*" if p.eps0 is None else str(p.eps0)
    return f"Ps({format_scalar(p.lam0)},{eps})"


def format_point_set(points: frozenset) -> str:
    return "{" + ", ".join(format_point(p) for p in sorted(points, key=point_sort_key)) + "}"


def orbit_label(p: ClassPoint) -> str:
    """Geometric name of the boundary stratum the point corresponds to."""
    if p.kind == "fd":
        return "closed orbit P^1(C) (compact form SU(2))"
    if p.kind == "hol":
        return "pole {0}"
    if p.kind == "antihol":
        return "pole {infinity}"
    return "open orbit C^x"


# --- principal series classes --------------------------------------------------


def reduce_to_base(lam: Scalar) -> Fraction:
    """Canonical representative in [0, 1/2] of the set {lam + Z} u {-lam + Z}."""
    lam = as_scalar(lam)
    frac = lam - math.floor(lam)
    return frac if frac <= Fraction(1, 2) else 1 - frac


def ps_class_point(lam: Scalar, eps: int) -> ClassPoint:
    """Class point of an irreducible principal series parameter."""
    lam = as_scalar(lam)
    check_parity(eps)
    if not principal_is_irreducible(lam, eps):
        raise ValueError(f"not an irreducible class: I({format_scalar(lam)},{eps}) is reducible")
    lam0 = reduce_to_base(lam)
    if is_integer(2 * lam0):
        return ClassPoint("ps", lam0, None)
    if is_integer(lam0 - lam):
        shift = lam0 - lam
    else:
        shift = lam0 + lam  # reach lam0 from the dual parameter -lam
    assert is_integer(shift)
    return ClassPoint("ps", lam0, (eps + int(shift)) % 2)


def ps_class_equal(lam: Scalar, eps: int, lam2: Scalar, eps2: int) -> bool:
    """Same translation class: parameters linked by an integer shift with the
    matching parity change, directly or through the parameter sign flip."""
    lam, lam2 = as_scalar(lam), as_scalar(lam2)
    check_parity(eps)
    check_parity(eps2)
    for a, e in ((lam, eps), (lam2, eps2)):
        if not principal_is_irreducible(a, e):
            raise ValueError(f"not an irreducible class: I({format_scalar(a)},{e}) is reducible")
    diff = lam - lam2
    if is_integer(diff) and (eps - eps2 - int(diff)) % 2 == 0:
        return True
    summ = lam + lam2
    return is_integer(summ) and (eps - eps2 - int(summ)) % 2 == 0


# --- closures and the submodule lattice ----------------------------------------


def class_closure(x: IrreducibleClass) -> frozenset:
    """Class points generated by tensoring one irreducible with all V(m)."""
    if isinstance(x, FinDim):
        return frozenset({FD_POINT})
    if isinstance(x, DiscreteSeries):
        return frozenset({FD_POINT, HOL_POINT if x.sign > 0 else ANTIHOL_POINT})
    if isinstance(x, PrincipalIrr):
        return frozenset({ps_class_point(x.lam, x.eps)})
    raise TypeError(f"not an irreducible class: {x!r}")


def generated_submodule(xs: Iterable[VirtualModule]) -> frozenset:
    """Class points of the thick tensor-submodule generated by the given modules."""
    out: set = set()
    for x in xs:
        if not x.is_effective:
            raise ValueError("generators must have nonnegative multiplicities")
        for cls, _ in x.items():
            out |= class_closure(cls)
    return frozenset(out)


def is_valid_submodule_set(points: Iterable[ClassPoint]) -> bool:
    """The realizability constraint: discrete series families force Fd."""
    pts = frozenset(points)
    if (HOL_POINT in pts or ANTIHOL_POINT in pts) and FD_POINT not in pts:
        return False
    return True


def closure(points: Iterable[ClassPoint]) -> frozenset:
    """Smallest valid set containing the given points (adds Fd when forced)."""
    pts = set(points)
    if HOL_POINT in pts or ANTIHOL_POINT in pts:
        pts.add(FD_POINT)
    return frozenset(pts)


@dataclass(frozen=True)
class PosetOps:
    leq: bool
    join: frozenset
    meet: frozenset


def sub_poset_ops(s: Iterable[ClassPoint], t: Iterable[ClassPoint]) -> PosetOps:
    """Containment order with join and meet; inputs must satisfy the constraint."""
    s, t = frozenset(s), frozenset(t)
    for x in (s, t):
        if not is_valid_submodule_set(x):
            raise ValueError(f"not a valid tensor-submodule: {format_point_set(x)}")
    join = s | t
    meet = s & t
    assert is_valid_submodule_set(join) and is_valid_submodule_set(meet)
    return PosetOps(s <= t, join, meet)


def irreducible_closed_sets(lambdas: Iterable[Scalar]) -> list:
    """Closures of single class points over the given parameter window.

    Base parameters with 2*lam0 integral give one collapsed point; the rest
    give one point per parity.
    """
    ps_points = set()
    for lam in lambdas:
        lam0 = reduce_to_base(lam)
        if is_integer(2 * lam0):
            ps_points.add(ClassPoint("ps", lam0, None))
        else:
            ps_points.add(ClassPoint("ps", lam0, 0))
            ps_points.add(ClassPoint("ps", lam0, 1))
    out = [
        frozenset({FD_POINT}),
        frozenset({FD_POINT, HOL_POINT}),
        frozenset({FD_POINT, ANTIHOL_POINT}),
    ]
    out.extend(frozenset({p}) for p in sorted(ps_points, key=point_sort_key))
    return out


def enumerate_submodule_sets(points: Iterable[ClassPoint]) -> list:
    """All valid submodule sets over a finite window of class points."""
    pts = sorted(set(points), key=point_sort_key)
    sets = []
    for mask in range(1 << len(pts)):
        subset = frozenset(p for i, p in enumerate(pts) if mask >> i & 1)
        if is_valid_submodule_set(subset):
            sets.append(subset)
    sets.sort(key=lambda s: (len(s), sorted(point_sort_key(p) for p in s)))
    return sets


def cover_edges(sets: list) -> list:
    """Hasse covers in the containment order restricted to the given sets.

    Within the window every cover adds exactly one point: adding Fd first is
    always valid, so larger gaps always factor through an intermediate set.
    """
    universe = set(sets)
    index = {s: i for i, s in enumerate(sets)}
    edges = []
    for s in sets:
        for t in sets:
            if len(t) == len(s) + 1 and s < t and t in universe:
                edges.append((index[s], index[t]))
    edges.sort()
    return edges


def specialization_edges(points: Iterable[ClassPoint]) -> list:
    """Pairs (p, q) with q in the closure of {p}, q != p."""
    out = []
    for p in sorted(set(points), key=point_sort_key):
        for q in sorted(closure({p}) - {p}, key=point_sort_key):
            out.append((p, q))
    return out


# --- classification of irreducibles --------------------------------------------


def classify_irreducible(x: IrreducibleClass) -> tuple:
    """Injective invariant (closure of the generic class point, integer index).

    The index is the infinitesimal character for V(m) and D+-(l), namely m+1
    and l.  For a principal series it is the integer shift j taking the base
    parameter (lam0, eps0) to the module, with negative shifts reaching the
    parameters below the base point through the sign flip.  Collapsed base
    points are read with eps0 = 0, and the only ambiguous case (base 0,
    where +-j land on the same module) resolves to the nonnegative shift.
    The signed shift, unlike the bare distance |j|, separates the two parity
    classes over a collapsed base, keeping the map injective.
    """
    if isinstance(x, FinDim):
        return (frozenset({FD_POINT}), Fraction(x.m + 1))
    if isinstance(x, DiscreteSeries):
        return (class_closure(x), Fraction(x.l))
    if isinstance(x, PrincipalIrr):
        point = ps_class_point(x.lam, x.eps)
        lam0 = point.lam0
        eps0 = 0 if point.eps0 is None else point.eps0
        matches = []
        for j in (x.lam - lam0, -x.lam - lam0):
            if not is_integer(j):
                continue
            j = int(j)
            member_lam = lam0 + j
            member_eps = (eps0 + j) % 2
            if abs(member_lam) == x.lam and member_eps == x.eps:
                matches.append(j)
        if not matches:
            raise AssertionError("base point failed to reach its own class member")
        return (frozenset({point}), Fraction(sorted(matches)[-1]))
    raise TypeError(f"not an irreducible class: {x!r}")
