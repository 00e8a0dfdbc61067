"""Hyperplane-covering audits and affine blocking-set searches.

``covering_audit`` checks the two hypotheses of the covering bound on a
concrete instance (every off-puncture grid point lies on enough plane zero
sets, and some grid point escapes the product of the planes) and then
asserts the resulting degree inequality.  ``blocking_audit`` and the
exhaustive search certify minimal affine blocking multisets over small
prime fields, where the bound ``(n + t - 1)(q - 1) + 1`` is sharp.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Sequence

from .errors import InternalInvariantError, ScaleExceeded, UnsupportedField
from .multiset_ideals import PuncturedGrid
from .polynomials import Poly
from .rings import _is_prime


def point_cover_threshold(psi_at_point: Sequence[int], t: int) -> int:
    """Required number of covering planes at a grid point.

    One more than the largest coordinate sum among vectors whose per-axis
    multiplicity floors sum to at most t-1, which closes to
    ``sum(psi_i - 1) + (t - 1) * max(psi_i) + 1``.
    """
    if t < 1:
        raise ValueError("t must be positive")
    psi = tuple(psi_at_point)
    if any(m < 1 for m in psi):
        raise ValueError("multiplicities must be positive")
    return sum(m - 1 for m in psi) + (t - 1) * max(psi) + 1


@dataclass(frozen=True)
class CoverInstance:
    """A punctured grid, a list of plane polynomials with their stated
    degrees, and the multiplicity level t."""

    pgrid: PuncturedGrid
    planes: tuple  # tuple of (Poly, degree)
    t: int

    @classmethod
    def build(cls, pgrid: PuncturedGrid, planes: Sequence, t: int) -> "CoverInstance":
        if t < 1:
            raise ValueError("t must be positive")
        checked = []
        for rho, e in planes:
            if rho.degree() != e:
                raise ValueError(
                    f"declared degree {e} but deg = {rho.degree()} for {rho}"
                )
            checked.append((rho, e))
        return cls(pgrid, tuple(checked), t)


@dataclass(frozen=True)
class CoverReport:
    hypothesis_coverage: bool
    uncovered_point: tuple | None
    hypothesis_escape: bool
    escape_point: tuple | None
    sum_degrees: int
    product_degree: float | None
    bounds: tuple | None  # per-axis right-hand sides, when hypotheses hold
    verdict: str  # "bound_holds" | "hypotheses_unmet"

    def to_json_dict(self) -> dict:
        return {
            "hypotheses": {
                "coverage": self.hypothesis_coverage,
                "uncovered_point": list(self.uncovered_point)
                if self.uncovered_point is not None
                else None,
                "escape": self.hypothesis_escape,
                "escape_point": list(self.escape_point)
                if self.escape_point is not None
                else None,
            },
            "lhs": {
                "sum_degrees": self.sum_degrees,
                "product_degree": self.product_degree,
            },
            "bound": max(self.bounds) if self.bounds else None,
            "bounds_per_axis": list(self.bounds) if self.bounds else None,
            "verdict": self.verdict,
        }


def covering_audit(inst: CoverInstance) -> CoverReport:
    """Audit both hypotheses, then assert the degree inequality.

    If either hypothesis fails the report says so and makes no claim.
    When both hold, a violated inequality would contradict the theory and
    raises InternalInvariantError instead of being reported.
    """
    pgrid = inst.pgrid
    base = pgrid.base
    base.require_condition_d()
    ring = base.ring

    covered = True
    uncovered_point = None
    for point in pgrid.off_puncture_points():
        hits = sum(
            1 for rho, _ in inst.planes if rho.evaluate(point) == ring.zero
        )
        if hits < point_cover_threshold(base.psi_at(point), inst.t):
            covered = False
            uncovered_point = point
            break

    escape_point = None
    for point in base.grid_points():
        value = ring.one
        for rho, _ in inst.planes:
            value = ring.mul(value, rho.evaluate(point))
        if value != ring.zero:
            escape_point = point
            break

    sum_degrees = sum(e for _, e in inst.planes)
    if not covered or escape_point is None:
        return CoverReport(
            covered,
            uncovered_point,
            escape_point is not None,
            escape_point,
            sum_degrees,
            None,
            None,
            "hypotheses_unmet",
        )

    prod_poly = Poly.one(ring, base.nvars)
    for rho, _ in inst.planes:
        prod_poly = prod_poly * rho
    prod_degree = prod_poly.degree()
    off_sums = [pgrid.off_multiplicity_sum(k) for k in range(pgrid.nvars)]
    bounds = tuple(
        (inst.t - 1) * off_sums[m] + sum(off_sums) for m in range(pgrid.nvars)
    )
    for m, rhs in enumerate(bounds):
        if not (sum_degrees >= prod_degree >= rhs):
            raise InternalInvariantError(
                f"degree inequality failed on axis {m + 1}: "
                f"{sum_degrees} >= {prod_degree} >= {rhs}"
            )
    return CoverReport(
        True,
        None,
        True,
        escape_point,
        sum_degrees,
        prod_degree,
        bounds,
        "bound_holds",
    )


# -- affine blocking sets -----------------------------------------------------


def affine_blocking_bound(q: int, n: int, t: int) -> int:
    """Lower bound ``(n + t - 1)(q - 1) + 1`` for t-fold affine blocking
    multisets in GF(q)^n; only prime q is supported."""
    if not _is_prime(q):
        raise UnsupportedField(f"q = {q} is not prime")
    if n < 1 or t < 1:
        raise ValueError("n and t must be positive")
    return (n + t - 1) * (q - 1) + 1


def affine_hyperplanes(q: int, n: int):
    """All affine hyperplanes of GF(q)^n as normalized pairs (eta, c).

    Normal vectors are nonzero with first nonzero entry one, so every
    hyperplane appears exactly once.
    """
    if not _is_prime(q):
        raise UnsupportedField(f"q = {q} is not prime")
    for eta in product(range(q), repeat=n):
        if all(v == 0 for v in eta):
            continue
        first = next(v for v in eta if v != 0)
        if first != 1:
            continue
        for c in range(q):
            yield eta, c


def _on_hyperplane(point, eta, c, q: int) -> bool:
    return sum(a * b for a, b in zip(eta, point)) % q == c


def _check_scale(q: int, n: int) -> None:
    if q ** n > 1000:
        raise ScaleExceeded(f"GF({q})^{n} is beyond the supported desk scale")


def blocks_all_hyperplanes(q: int, n: int, t: int, points: Sequence) -> tuple:
    """Whether the point multiset meets every hyperplane at least t times;
    returns (blocked, first unblocked hyperplane or None)."""
    for p in points:
        if len(p) != n:
            raise ValueError(f"point {p} does not live in a {n}-dimensional space")
    pts = [tuple(v % q for v in p) for p in points]
    for eta, c in affine_hyperplanes(q, n):
        hits = sum(1 for p in pts if _on_hyperplane(p, eta, c, q))
        if hits < t:
            return False, (eta, c)
    return True, None


@dataclass(frozen=True)
class BlockingReport:
    blocked: bool
    unblocked_hyperplane: tuple | None
    size: int
    bound: int

    @property
    def meets_bound(self) -> bool:
        return self.blocked and self.size == self.bound

    def to_json_dict(self) -> dict:
        return {
            "blocked": self.blocked,
            "unblocked_hyperplane": [list(self.unblocked_hyperplane[0]),
                                     self.unblocked_hyperplane[1]]
            if self.unblocked_hyperplane is not None
            else None,
            "size": self.size,
            "bound": self.bound,
        }


def blocking_audit(q: int, n: int, t: int, points: Sequence) -> BlockingReport:
    """Verify a concrete multiset against every affine hyperplane and
    compare its size with the bound."""
    if not _is_prime(q):
        raise UnsupportedField(f"q = {q} is not prime")
    _check_scale(q, n)
    blocked, witness = blocks_all_hyperplanes(q, n, t, points)
    return BlockingReport(blocked, witness, len(points), affine_blocking_bound(q, n, t))


def exists_blocking_of_size(q: int, n: int, t: int, size: int) -> tuple:
    """Exhaustively search multisets of the given size; returns
    (found, example or None).  Plain subsets suffice when t = 1."""
    if not _is_prime(q):
        raise UnsupportedField(f"q = {q} is not prime")
    _check_scale(q, n)
    space = list(product(range(q), repeat=n))
    chooser = combinations if t == 1 else combinations_with_replacement
    for candidate in chooser(space, size):
        blocked, _ = blocks_all_hyperplanes(q, n, t, candidate)
        if blocked:
            return True, candidate
    return False, None


def minimal_blocking_size(q: int, n: int, t: int) -> tuple:
    """Smallest size of a t-fold blocking multiset, by ascending search."""
    size = 1
    while True:
        found, example = exists_blocking_of_size(q, n, t, size)
        if found:
            return size, example
        size += 1
        if size > t * q * n + q * n:  # safety stop well above the bound
            raise InternalInvariantError("blocking search exceeded sane range")
