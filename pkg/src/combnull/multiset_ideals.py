"""Level ideals of multiset grids, punctured and mixed variants.

A multiset grid fixes per axis a finite set of ring values with positive
multiplicities; its axis polynomial is the root product
``g_k = prod (x_k - u)^psi_k(u)``.  The level-t ideal is generated by all
products ``prod g_k^(alpha_k)`` with total exponent t; that family is
always a Groebner basis of the ideal, which makes normal forms available
unconditionally.

Membership tests, by contrast, go through the grid: they check that the
Taylor shift of the candidate to each relevant grid point has no support
below the staircase at that point, and this equivalence is only valid when
every axis satisfies Condition (D).  Such gated operations raise
``Inapplicable`` (never a boolean) on a Condition (D) failure.

Puncturing removes a subgrid from the vanishing requirements; the mixed
ideal additionally keeps a relaxed requirement on the puncture.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from .errors import (
    DivisibilityFailure,
    EmptyPuncture,
    Inapplicable,
    InternalInvariantError,
    NonPositiveMultiplicity,
    NonzeroRemainder,
    NotMember,
)
from .polynomials import Poly, root_product, taylor_shift
from .reduction import MonicFamily, reduce
from .rings import Element, Ring
from .staircase import compositions, leq


@dataclass(frozen=True)
class Axis:
    """One grid axis: sorted support values and their multiplicities."""

    support: tuple
    psi: Mapping

    @classmethod
    def build(cls, ring: Ring, values: Sequence[Element], psi=None) -> "Axis":
        support = tuple(sorted({ring.canon(u) for u in values}))
        table = {}
        for u in support:
            m = 1 if psi is None else psi.get(u)
            if m is None:
                raise NonPositiveMultiplicity(f"no multiplicity for {u}")
            if not isinstance(m, int) or m < 1:
                raise NonPositiveMultiplicity(f"psi({u}) = {m!r}")
            table[u] = m
        if psi is not None:
            extra = set(psi) - set(support)
            if extra:
                raise ValueError(f"multiplicities for absent elements {extra}")
        return cls(support, table)

    @property
    def degree(self) -> int:
        """Total multiplicity, the degree of the axis polynomial."""
        return sum(self.psi.values())


@dataclass(frozen=True)
class MultisetGrid:
    ring: Ring
    axes: tuple

    @classmethod
    def build(cls, ring: Ring, supports: Sequence, psis: Sequence | None = None) -> "MultisetGrid":
        axes = []
        for k, values in enumerate(supports):
            psi = None if psis is None else psis[k]
            axes.append(Axis.build(ring, values, psi))
        return cls(ring, tuple(axes))

    @property
    def nvars(self) -> int:
        return len(self.axes)

    def axis_poly(self, k: int) -> Poly:
        axis = self.axes[k]
        return root_product(self.ring, self.nvars, k, axis.support, axis.psi)

    def axis_polys(self) -> list:
        return [self.axis_poly(k) for k in range(self.nvars)]

    def grid_points(self):
        return product(*(axis.support for axis in self.axes))

    def condition_d(self) -> tuple:
        return tuple(
            self.ring.condition_holds(axis.support, "D") for axis in self.axes
        )

    def require_condition_d(self) -> None:
        cond = self.condition_d()
        if not all(cond):
            raise Inapplicable([k + 1 for k, ok in enumerate(cond) if not ok])

    def psi_at(self, point) -> tuple:
        return tuple(axis.psi[v] for axis, v in zip(self.axes, point))


@dataclass(frozen=True)
class PuncturedGrid:
    """A multiset grid with a per-axis punctured subgrid E_k of S_k."""

    base: MultisetGrid
    punctures: tuple

    @classmethod
    def build(cls, base: MultisetGrid, punctures: Sequence) -> "PuncturedGrid":
        canon = []
        for axis, E in zip(base.axes, punctures):
            E = tuple(sorted({base.ring.canon(u) for u in E}))
            if not set(E) <= set(axis.support):
                raise ValueError(f"puncture {E} not inside axis support")
            canon.append(E)
        if len(canon) != base.nvars:
            raise ValueError("one puncture set per axis required")
        return cls(base, tuple(canon))

    @property
    def ring(self) -> Ring:
        return self.base.ring

    @property
    def nvars(self) -> int:
        return self.base.nvars

    def puncture_poly(self, k: int) -> Poly:
        """h_k, the root product over the punctured elements."""
        axis = self.base.axes[k]
        E = self.punctures[k]
        return root_product(self.ring, self.nvars, k, E, {u: axis.psi[u] for u in E})

    def off_poly(self, k: int) -> Poly:
        """g_k / h_k, realized directly as the off-puncture root product."""
        axis = self.base.axes[k]
        rest = [u for u in axis.support if u not in set(self.punctures[k])]
        return root_product(self.ring, self.nvars, k, rest, {u: axis.psi[u] for u in rest})

    def off_multiplicity_sum(self, k: int) -> int:
        axis = self.base.axes[k]
        punct = set(self.punctures[k])
        return sum(m for u, m in axis.psi.items() if u not in punct)

    def off_puncture_points(self):
        punct = [set(E) for E in self.punctures]
        for point in self.base.grid_points():
            if not all(v in punct[k] for k, v in enumerate(point)):
                yield point

    def puncture_points(self):
        return product(*self.punctures)


# -- level ideals ---------------------------------------------------------


def level_basis(grid: MultisetGrid, t: int) -> MonicFamily:
    """The generating family of the level-t ideal: all products
    ``prod g_k^(alpha_k)`` with ``sum(alpha) = t``, labelled by alpha.

    The family is a Groebner basis of the ideal it generates for any tuple
    of monic axis polynomials, so it is certified at construction and has
    ``C(n + t - 1, n - 1)`` members.
    """
    if t < 0:
        raise ValueError("t must be a natural number")
    gs = grid.axis_polys()
    degs = [axis.degree for axis in grid.axes]
    members = []
    labels = []
    for alpha in compositions(t, grid.nvars):
        g = Poly.one(grid.ring, grid.nvars)
        for gk, e in zip(gs, alpha):
            g = g * gk ** e
        members.append(g)
        labels.append(alpha)
        expected = tuple(d * e for d, e in zip(degs, alpha))
        if g.monic_witness() != expected:
            raise InternalInvariantError("level basis witness mismatch")
    return MonicFamily.build(members, labels=labels, certified=True)


def _low_support_violation(
    f: Poly, point, psi_vec: tuple, level: int
) -> bool:
    """True iff the shift of f to the point has a support vector whose
    per-axis multiplicity floors sum to at most ``level``."""
    if level < 0:
        return False
    shifted = taylor_shift(f, point)
    for alpha in shifted.terms:
        if sum(a // m for a, m in zip(alpha, psi_vec)) <= level:
            return True
    return False


def level_membership(f: Poly, grid: MultisetGrid, t: int) -> bool:
    """Membership in the level-t ideal via the grid vanishing conditions.

    Valid only under Condition (D) on every axis; raises Inapplicable
    otherwise.
    """
    f.ring.require_same(grid.ring)
    grid.require_condition_d()
    if t == 0:
        return True
    for point in grid.grid_points():
        if _low_support_violation(f, point, grid.psi_at(point), t - 1):
            return False
    return True


def level_normal_form(f: Poly, grid: MultisetGrid, t: int) -> Poly:
    """The unique reduced representative modulo the level-t ideal.

    Unconditional: no Condition (D) is needed because the generating
    family is always a Groebner basis.
    """
    return reduce(f, level_basis(grid, t)).remainder


@dataclass(frozen=True)
class Certificate:
    """A zero-remainder decomposition over a level or mixed basis."""

    kind: str  # "I_t" | "mixed"
    t: int
    poly: Poly
    family: MonicFamily
    quotients: tuple
    remainder: Poly
    support_ok: bool
    degree_report: dict | None = None

    @property
    def quotient_map(self) -> dict:
        return dict(zip(self.family.labels, self.quotients))

    def identity_holds(self) -> bool:
        total = Poly.zero(self.poly.ring, self.poly.nvars)
        for p, g in zip(self.quotients, self.family.members):
            if not p.is_zero():
                total = total + p * g
        return total + self.remainder == self.poly


def _certificate_from(outcome, kind: str, t: int, f: Poly, degree_report=None) -> Certificate:
    return Certificate(
        kind=kind,
        t=t,
        poly=f,
        family=outcome.family,
        quotients=outcome.quotients,
        remainder=outcome.remainder,
        support_ok=outcome.support_contained(f)
        and outcome.remainder_support_contained(f),
        degree_report=degree_report,
    )


def level_certificate(f: Poly, grid: MultisetGrid, t: int) -> Certificate:
    """Decompose a member over the level basis with support containment.

    Also records that every maximal support point of f dominates the
    leading exponent of some basis member, the leading-cover consequence
    of membership.
    """
    if not level_membership(f, grid, t):
        raise NotMember("not in the level ideal")
    basis = level_basis(grid, t)
    out = reduce(f, basis)
    if not out.remainder.is_zero():
        raise NonzeroRemainder("level-basis division of a member left a remainder")
    cover = all(
        any(leq(theta, beta) for theta in basis.witnesses)
        for beta in f.max_support()
    )
    if not cover and not f.is_zero():
        raise InternalInvariantError("member with an undominated maximal exponent")
    return _certificate_from(out, "I_t", t, f, {"leading_cover": cover})


# -- punctured ideals -------------------------------------------------------


def punctured_membership(f: Poly, pgrid: PuncturedGrid, t: int) -> bool:
    """Membership in the intersection of the per-axis punctured ideals.

    The vanishing conditions run over the grid minus the punctured
    subgrid.  Gated by Condition (D) on every axis of the base grid.
    """
    f.ring.require_same(pgrid.ring)
    pgrid.base.require_condition_d()
    if t == 0:
        return True
    base = pgrid.base
    for point in pgrid.off_puncture_points():
        if _low_support_violation(f, point, base.psi_at(point), t - 1):
            return False
    return True


@dataclass(frozen=True)
class PuncturedReport:
    """Normal form, extracted cofactor, and the degree consequence."""

    eta: Poly
    divisor: Poly
    cofactor: Poly
    nonvanishing_point: tuple | None
    degree_f: float
    degree_eta: float
    degree_bound: int | None
    bound_holds: bool | None

    def to_json_dict(self) -> dict:
        from .polynomials import format_poly

        return {
            "eta": format_poly(self.eta),
            "divisor": format_poly(self.divisor),
            "cofactor": format_poly(self.cofactor),
            "nonvanishing_point": list(self.nonvanishing_point)
            if self.nonvanishing_point is not None
            else None,
            "degree_f": self.degree_f if self.degree_f != float("-inf") else None,
            "degree_eta": self.degree_eta if self.degree_eta != float("-inf") else None,
            "degree_bound": self.degree_bound,
            "bound_holds": self.bound_holds,
        }


def punctured_analysis(f: Poly, pgrid: PuncturedGrid, t: int) -> PuncturedReport:
    """Full consequence chain for a member of the punctured intersection.

    Computes the level normal form eta of f, verifies that the product of
    the off-puncture axis polynomials divides eta and extracts the
    cofactor, and, whenever f is nonzero somewhere on the full grid,
    asserts and reports the degree chain
    ``deg f >= deg eta >= (t-1)*max_m offsum_m + sum_k offsum_k``.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if not punctured_membership(f, pgrid, t):
        raise NotMember("not in the punctured intersection")
    base = pgrid.base
    eta = level_normal_form(f, base, t)

    divisor = Poly.one(pgrid.ring, pgrid.nvars)
    for k in range(pgrid.nvars):
        divisor = divisor * pgrid.off_poly(k)
    div_family = MonicFamily.build([divisor], labels=("divisor",))
    division = reduce(eta, div_family)
    if not division.remainder.is_zero():
        raise DivisibilityFailure(
            "off-puncture product does not divide the normal form"
        )
    cofactor = division.quotients[0]

    witness = None
    for point in base.grid_points():
        if f.evaluate(point) != base.ring.zero:
            witness = point
            break

    bound = None
    holds = None
    if witness is not None:
        off_sums = [pgrid.off_multiplicity_sum(k) for k in range(pgrid.nvars)]
        bound = (t - 1) * max(off_sums) + sum(off_sums)
        holds = f.degree() >= eta.degree() >= bound
        if not holds:
            raise InternalInvariantError(
                f"degree chain violated: deg f = {f.degree()}, "
                f"deg eta = {eta.degree()}, bound = {bound}"
            )
    return PuncturedReport(
        eta=eta,
        divisor=divisor,
        cofactor=cofactor,
        nonvanishing_point=witness,
        degree_f=f.degree(),
        degree_eta=eta.degree(),
        degree_bound=bound,
        bound_holds=holds,
    )


# -- mixed ideals -------------------------------------------------------------


def mixed_basis(pgrid: PuncturedGrid, t: int) -> MonicFamily:
    """Two-layer generating family of the mixed ideal.

    Exponent vectors with total t contribute the plain power products;
    vectors with total t-1 contribute the power products times the full
    off-puncture product.
    """
    if t < 1:
        raise ValueError("t must be positive")
    base = pgrid.base
    n = pgrid.nvars
    gs = base.axis_polys()
    off = [pgrid.off_poly(k) for k in range(n)]
    off_product = Poly.one(pgrid.ring, n)
    for p in off:
        off_product = off_product * p
    members = []
    labels = []
    for alpha in compositions(t - 1, n):
        g = off_product
        for gk, e in zip(gs, alpha):
            g = g * gk ** e
        members.append(g)
        labels.append(alpha)
    for alpha in compositions(t, n):
        g = Poly.one(pgrid.ring, n)
        for gk, e in zip(gs, alpha):
            g = g * gk ** e
        members.append(g)
        labels.append(alpha)
    return MonicFamily.build(members, labels=labels)


def mixed_membership(f: Poly, pgrid: PuncturedGrid, t: int) -> bool:
    """Membership in the mixed ideal: full-strength vanishing conditions
    off the puncture, one level weaker on the puncture subgrid."""
    if t < 1:
        raise ValueError("t must be positive")
    f.ring.require_same(pgrid.ring)
    base = pgrid.base
    base.require_condition_d()
    for point in pgrid.off_puncture_points():
        if _low_support_violation(f, point, base.psi_at(point), t - 1):
            return False
    for point in pgrid.puncture_points():
        if _low_support_violation(f, point, base.psi_at(point), t - 2):
            return False
    return True


def mixed_certificate(f: Poly, pgrid: PuncturedGrid, t: int) -> Certificate:
    """Zero-remainder decomposition of a mixed-ideal member over the
    two-layer basis, with support containment."""
    if not mixed_membership(f, pgrid, t):
        raise NotMember("not in the mixed ideal")
    basis = mixed_basis(pgrid, t)
    out = reduce(f, basis)
    if not out.remainder.is_zero():
        raise NonzeroRemainder("mixed-basis division of a member left a remainder")
    return _certificate_from(out, "mixed", t, f)


def min_extra_degree(pgrid: PuncturedGrid, t: int):
    """Exact minimum degree of a mixed-ideal member outside the level-t
    ideal, with an attaining witness.

    The value is ``(t-1)*e + sum_k offsum_k`` where e is the smallest axis
    degree; the witness is the (t-1)-th power of a minimizing axis
    polynomial times the full off-puncture product.  Requires a nonempty
    puncture subgrid on every axis.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if any(not E for E in pgrid.punctures):
        raise EmptyPuncture("every axis needs a nonempty puncture set")
    base = pgrid.base
    base.require_condition_d()
    degs = [axis.degree for axis in base.axes]
    e = min(degs)
    l = degs.index(e)
    off_sums = [pgrid.off_multiplicity_sum(k) for k in range(pgrid.nvars)]
    value = (t - 1) * e + sum(off_sums)

    witness = base.axis_poly(l) ** (t - 1)
    for k in range(pgrid.nvars):
        witness = witness * pgrid.off_poly(k)
    if witness.degree() != value:
        raise InternalInvariantError("witness degree disagrees with the formula")
    if not mixed_membership(witness, pgrid, t):
        raise InternalInvariantError("witness fails mixed membership")
    if level_membership(witness, base, t):
        raise InternalInvariantError("witness unexpectedly in the level ideal")
    return value, witness
