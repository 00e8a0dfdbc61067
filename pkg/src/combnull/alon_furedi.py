"""Lower bound on the number of grid points where a polynomial is nonzero.

Given axis sets S_k satisfying Condition (D), a nonzero polynomial whose
support sits under a cap vector beta with ``beta_k <= |S_k| - 1`` must be
nonzero on at least ``prod mu_k`` grid points, for some mu with
``|S_k| - beta_k <= mu_k <= |S_k|`` and ``sum(mu) = sum|S_k| - deg f``.
The report returns the feasible mu minimizing the product (ties broken by
lexicographic order), which is the strongest certified bound, alongside
the brute-force count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Sequence

from .errors import (
    CombnullError,
    Inapplicable,
    InternalInvariantError,
    ZeroPolynomial,
)
from .polynomials import Poly
from .rings import Element
from .staircase import leq


class SupportExceedsBeta(CombnullError):
    """Some support exponent escapes the declared cap vector."""


@dataclass(frozen=True)
class NonzeroBoundReport:
    mu: tuple
    bound: int
    actual: int

    def to_json_dict(self) -> dict:
        return {"mu": list(self.mu), "bound": self.bound, "actual": self.actual}


def nonzero_bound(f: Poly, supports: Sequence[Sequence[Element]], beta) -> NonzeroBoundReport:
    """Certified bound and exact count of nonzero grid values of f."""
    ring = f.ring
    axes = [tuple(sorted({ring.canon(u) for u in S})) for S in supports]
    if len(axes) != f.nvars:
        raise ValueError("one support set per variable required")
    bad = [k + 1 for k, S in enumerate(axes) if not ring.condition_holds(S, "D")]
    if bad:
        raise Inapplicable(bad)
    if f.is_zero():
        raise ZeroPolynomial("the bound concerns nonzero polynomials")
    beta = tuple(beta)
    if len(beta) != f.nvars:
        raise ValueError(f"beta of length {len(beta)} in {f.nvars} variables")
    if any(b > len(S) - 1 for b, S in zip(beta, axes)):
        raise ValueError(f"beta {beta} exceeds the per-axis caps |S_k| - 1")
    for alpha in f.terms:
        if not leq(alpha, beta):
            raise SupportExceedsBeta(f"support point {alpha} escapes beta {beta}")

    sizes = [len(S) for S in axes]
    target = sum(sizes) - int(f.degree())
    best = None
    for mu in product(*(range(s - b, s + 1) for s, b in zip(sizes, beta))):
        if sum(mu) != target:
            continue
        key = (prod(mu), mu)
        if best is None or key < best:
            best = key
    if best is None:
        raise InternalInvariantError("no feasible mu despite valid inputs")
    bound, mu = best

    actual = sum(
        1 for point in product(*axes) if f.evaluate(point) != ring.zero
    )
    if bound > actual:
        raise InternalInvariantError(
            f"bound {bound} exceeds the true count {actual}"
        )
    return NonzeroBoundReport(mu, bound, actual)
