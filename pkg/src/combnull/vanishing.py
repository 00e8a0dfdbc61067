"""Ideals cut out by shifted-support conditions on a finite grid.

A ``VanishingSpec`` assigns to every point a of a finite grid a set B_a of
exponent vectors; the ideal consists of the polynomials whose shift to a
has support inside the upset of B_a, for every grid point.  Membership in
that ideal is decidable coefficient by coefficient.

Whether a monic family inside the ideal is a Groebner basis of it can be
certified numerically: under Condition (D) on every axis, the family is a
Groebner basis exactly when the total per-point staircase count equals the
staircase count of the leading exponents.  When Condition (D) fails the
certification is inapplicable and is reported as such, never as a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping, Sequence

from .errors import (
    InfiniteComplement,
    InternalInvariantError,
    NonzeroRemainder,
    NotCertified,
    NotInIdeal,
)
from .polynomials import Poly, root_product, taylor_shift
from .reduction import MonicFamily, ReductionOutcome, reduce
from .rings import Element, Ring
from .staircase import (
    complement,
    has_finite_complement,
    in_upset,
    leq,
)


@dataclass(frozen=True)
class VanishingSpec:
    """Grid axes together with one support-upset generator set per point.

    ``axes[i]`` is the sorted tuple of admissible values on axis i; ``B``
    maps each grid point (a tuple of axis values) to a frozenset of
    exponent vectors.  Every complement of an upset of B_a must be finite,
    otherwise membership would constrain infinitely many coefficients.
    """

    ring: Ring
    axes: tuple
    B: Mapping

    @classmethod
    def build(cls, ring: Ring, axes: Sequence[Sequence[Element]], B: Mapping) -> "VanishingSpec":
        canon_axes = tuple(
            tuple(sorted({ring.canon(u) for u in axis})) for axis in axes
        )
        n = len(canon_axes)
        table = {}
        for point in product(*canon_axes):
            if point not in B:
                raise ValueError(f"missing B entry for grid point {point}")
            gens = frozenset(tuple(v) for v in B[point])
            if not has_finite_complement(gens, n):
                raise InfiniteComplement(
                    f"B at {point} leaves an infinite staircase complement"
                )
            table[point] = gens
        return cls(ring, canon_axes, table)

    @property
    def nvars(self) -> int:
        return len(self.axes)

    def grid_points(self):
        """Grid points in lexicographic order of canonical element values."""
        return product(*self.axes)

    @property
    def empty_grid(self) -> bool:
        return any(not axis for axis in self.axes)

    def condition_d(self) -> tuple:
        return tuple(self.ring.condition_holds(axis, "D") for axis in self.axes)


def in_vanishing_ideal(f: Poly, spec: VanishingSpec) -> bool:
    """Membership test straight from the defining support conditions."""
    f.ring.require_same(spec.ring)
    for point in spec.grid_points():
        gens = spec.B[point]
        shifted = taylor_shift(f, point)
        if not all(in_upset(alpha, gens) for alpha in shifted.terms):
            return False
    return True


def grid_staircase_count(spec: VanishingSpec) -> int:
    """Sum over grid points of the staircase-complement sizes of B_a."""
    total = 0
    for point in spec.grid_points():
        total += len(complement(spec.B[point], spec.nvars))
    return total


def leading_staircase_count(family: MonicFamily) -> int:
    """Size of the staircase complement of the leading exponents."""
    return len(complement(set(family.witnesses), family.nvars))


@dataclass(frozen=True)
class GroebnerReport:
    """Outcome of the count-comparison certification."""

    condition_d: tuple
    grid_count: int
    leading_count: int
    verdict: str  # "groebner" | "not_groebner" | "inapplicable"
    degenerate_empty_grid: bool = False

    @property
    def groebner(self) -> bool | None:
        if self.verdict == "inapplicable":
            return None
        return self.verdict == "groebner"

    def to_json_dict(self) -> dict:
        return {
            "condition_D": list(self.condition_d),
            "zeta1": self.grid_count,
            "zeta2": self.leading_count,
            "groebner": self.groebner,
            "verdict": self.verdict,
            "degenerate_empty_grid": self.degenerate_empty_grid,
        }


def certify_groebner(spec: VanishingSpec, family: MonicFamily) -> GroebnerReport:
    """Certify the Groebner property of a family inside the ideal.

    Every family member must satisfy the vanishing conditions; a violation
    is an input error.  With Condition (D) on every axis the verdict is
    decided by comparing the two staircase counts; without it the counts
    are still reported but the verdict is inapplicable.
    """
    for label, g, _ in family:
        if not in_vanishing_ideal(g, spec):
            raise NotInIdeal(f"family member {label!r} violates the conditions")
    cond = spec.condition_d()
    z1 = grid_staircase_count(spec)
    z2 = leading_staircase_count(family)
    if not all(cond):
        verdict = "inapplicable"
    elif z1 == z2:
        verdict = "groebner"
    else:
        if z1 > z2:
            raise InternalInvariantError(
                f"grid count {z1} exceeds leading count {z2} under Condition (D)"
            )
        verdict = "not_groebner"
    return GroebnerReport(cond, z1, z2, verdict, spec.empty_grid)


def groebner_decompose(
    f: Poly, spec: VanishingSpec, family: MonicFamily
) -> ReductionOutcome:
    """Zero-remainder decomposition of a member over a certified family.

    Requires a ``groebner`` verdict from ``certify_groebner`` and
    membership of f.  The remainder is then forced to vanish and every
    maximal support point of f must dominate some leading exponent; a
    failure of either is a library bug and raises loudly.
    """
    report = certify_groebner(spec, family)
    if report.verdict != "groebner":
        raise NotCertified(f"certification verdict is {report.verdict!r}")
    if not in_vanishing_ideal(f, spec):
        raise NotInIdeal("polynomial violates the vanishing conditions")
    out = reduce(f, family)
    if not out.remainder.is_zero():
        raise NonzeroRemainder(
            "certified family left a nonzero remainder on a member"
        )
    for beta in f.max_support():
        if not any(leq(theta, beta) for theta in family.witnesses):
            raise InternalInvariantError(
                f"maximal exponent {beta} dominates no leading exponent"
            )
    return out


@dataclass(frozen=True)
class MultiplicityTable:
    """Per-(axis, element, member) root multiplicities.

    Missing entries default to zero; stored entries must be naturals.
    """

    nvars: int
    member_labels: tuple
    values: Mapping = field(default_factory=dict)

    def __post_init__(self):
        for key, v in self.values.items():
            if v < 0:
                raise ValueError(f"negative multiplicity at {key}")

    def get(self, axis: int, element, label) -> int:
        return self.values.get((axis, element, label), 0)


def multiplicity_family(
    ring: Ring,
    axes: Sequence[Sequence[Element]],
    table: MultiplicityTable,
):
    """Build the monic family and matching spec from a multiplicity table.

    Member ``lam`` is the product over axes i and elements u of
    ``(x_i - u)^table(i, u, lam)``; its greatest support point collects the
    per-axis multiplicity totals, and the generator set at a grid point a
    collects the per-member vectors ``(table(i, a_i, lam))_i``.
    """
    n = len(axes)
    if table.nvars != n:
        raise ValueError("table arity disagrees with the axis count")
    canon_axes = [tuple(sorted({ring.canon(u) for u in axis})) for axis in axes]
    members = []
    thetas = []
    for lam in table.member_labels:
        g = Poly.one(ring, n)
        for i, axis in enumerate(canon_axes):
            for u in axis:
                e = table.get(i, u, lam)
                if e:
                    g = g * root_product(ring, n, i, [u], {u: e})
        members.append(g)
        thetas.append(
            tuple(sum(table.get(i, u, lam) for u in canon_axes[i]) for i in range(n))
        )
    family = MonicFamily.build(members, labels=table.member_labels)
    if tuple(family.witnesses) != tuple(thetas):
        raise InternalInvariantError("multiplicity totals disagree with witnesses")
    B = {
        point: {
            tuple(table.get(i, point[i], lam) for i in range(n))
            for lam in table.member_labels
        }
        for point in product(*canon_axes)
    }
    spec = VanishingSpec.build(ring, canon_axes, B)
    return family, spec
