"""Division against families of monic polynomials, with certificates.

``reduce`` implements generalized division: given f and a monic family
(g(lam)), it produces quotients and a remainder satisfying four conditions
that together form a checkable certificate:

  (1) f equals the quotient combination plus the remainder, exactly;
  (2) supp(p(lam)) + supp(g(lam)) stays inside the downset of supp(f);
  (3) no remainder exponent dominates any leading exponent theta(lam);
  (4) the remainder support stays inside the downset of supp(f).

The reduction strategy is fixed for reproducibility: at each step, among
the monomials of the current polynomial dominating some theta(lam), the
graded-lexicographic greatest is cancelled against the lowest-index
eligible family member.

``buchberger_certifies`` runs the sufficiency test on S-polynomials; a True
answer certifies the Groebner property, a False answer is inconclusive.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, replace
from typing import Hashable, Sequence

from .errors import (
    ArityMismatch,
    NotMonic,
    RingMismatch,
    UncertifiedBasis,
    ZeroPolynomial,
)
from .polynomials import Poly, _raw
from .staircase import ExpVec, in_downset, leq, meet, vec_sub


@dataclass(frozen=True)
class MonicFamily:
    """An indexed family of monic polynomials over one ring and arity.

    ``witnesses[i]`` is the greatest support point of ``members[i]``;
    ``labels[i]`` names the member in quotient maps and serialized
    certificates.  ``certified`` records that the family is known to be a
    Groebner basis of the ideal it generates (set by the Buchberger check
    or granted structurally by a constructor that can guarantee it).
    """

    members: tuple
    witnesses: tuple
    labels: tuple
    certified: bool = False

    @classmethod
    def build(
        cls,
        polys: Sequence[Poly],
        labels: Sequence[Hashable] | None = None,
        certified: bool = False,
    ) -> "MonicFamily":
        polys = tuple(polys)
        if labels is None:
            labels = tuple(range(len(polys)))
        else:
            labels = tuple(labels)
            if len(labels) != len(polys):
                raise ValueError("one label per member required")
        witnesses = []
        for i, g in enumerate(polys):
            if i and g.ring != polys[0].ring:
                raise RingMismatch("family members span different rings")
            if i and g.nvars != polys[0].nvars:
                raise ArityMismatch("family members span different arities")
            theta = g.monic_witness()
            if theta is None:
                raise NotMonic(f"family member {labels[i]!r} is not monic")
            witnesses.append(theta)
        return cls(polys, tuple(witnesses), labels, certified)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(zip(self.labels, self.members, self.witnesses))

    @property
    def ring(self):
        return self.members[0].ring

    @property
    def nvars(self) -> int:
        return self.members[0].nvars

    def certify(self) -> "MonicFamily":
        """Buchberger-check the family; return a certified copy on success."""
        if self.certified or buchberger_certifies(self):
            return replace(self, certified=True)
        raise UncertifiedBasis("Buchberger test inconclusive for this family")


@dataclass(frozen=True)
class ReductionOutcome:
    """Quotients and remainder from one division, plus recheck helpers."""

    family: MonicFamily
    quotients: tuple
    remainder: Poly
    steps: int = 0

    @property
    def quotient_map(self) -> dict:
        return dict(zip(self.family.labels, self.quotients))

    def combination(self) -> Poly:
        total = Poly.zero(self.remainder.ring, self.remainder.nvars)
        for p, g in zip(self.quotients, self.family.members):
            if not p.is_zero():
                total = total + p * g
        return total + self.remainder

    def identity_holds(self, f: Poly) -> bool:
        return self.combination() == f

    def support_contained(self, f: Poly) -> bool:
        """Condition (2): quotient-times-member supports inside the downset
        of supp(f), checked against the maximal elements as a predicate."""
        peaks = f.max_support()
        for p, g in zip(self.quotients, self.family.members):
            for a in p.terms:
                for b in g.terms:
                    point = tuple(x + y for x, y in zip(a, b))
                    if not in_downset(point, peaks):
                        return False
        return True

    def remainder_reduced(self) -> bool:
        """Condition (3): no remainder exponent dominates any witness."""
        return not any(
            leq(theta, alpha)
            for alpha in self.remainder.terms
            for theta in self.family.witnesses
        )

    def remainder_support_contained(self, f: Poly) -> bool:
        peaks = f.max_support()
        return all(in_downset(a, peaks) for a in self.remainder.terms)

    def verify(self, f: Poly) -> dict:
        return {
            "identity": self.identity_holds(f),
            "support": self.support_contained(f)
            and self.remainder_support_contained(f),
            "remainder_reduced": self.remainder_reduced(),
        }


def _heap_key(gamma: ExpVec):
    # Max-heap on the graded-lexicographic order via negation.
    return (-sum(gamma), tuple(-g for g in gamma))


def reduce(f: Poly, family: MonicFamily) -> ReductionOutcome:
    """Divide f by the family under the fixed strategy."""
    if family.members:
        f.ring.require_same(family.ring)
        if f.nvars != family.nvars:
            raise ArityMismatch(f"{f.nvars} vs {family.nvars} variables")
    ring = f.ring
    zero = ring.zero
    thetas = family.witnesses
    quotients = [dict() for _ in thetas]
    work = dict(f.terms)

    def reducer(gamma: ExpVec):
        for i, theta in enumerate(thetas):
            if leq(theta, gamma):
                return i
        return None

    heap = [(_heap_key(gamma), gamma) for gamma in work]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, gamma = heapq.heappop(heap)
        c = work.get(gamma)
        if c is None:
            continue
        i = reducer(gamma)
        if i is None:
            continue
        steps += 1
        shift = vec_sub(gamma, thetas[i])
        q = quotients[i]
        q[shift] = ring.add(q.get(shift, zero), c)
        if q[shift] == zero:
            del q[shift]
        for beta, gc in family.members[i].terms.items():
            key = tuple(x + y for x, y in zip(shift, beta))
            s = ring.sub(work.get(key, zero), ring.mul(c, gc))
            if s == zero:
                work.pop(key, None)
            else:
                work[key] = s
                if key != gamma:
                    heapq.heappush(heap, (_heap_key(key), key))

    nv = f.nvars
    return ReductionOutcome(
        family,
        tuple(_raw(ring, nv, q) for q in quotients),
        _raw(ring, nv, work),
        steps,
    )


def s_polynomial(f: Poly, g: Poly) -> Poly:
    """The leading-term-cancelling combination of two monic polynomials."""
    alpha = f.monic_witness()
    beta = g.monic_witness()
    if alpha is None or beta is None:
        raise NotMonic("S-polynomials are defined for monic operands")
    low = meet(alpha, beta)
    return f.monomial_multiple(vec_sub(beta, low), f.ring.one) - g.monomial_multiple(
        vec_sub(alpha, low), g.ring.one
    )


def buchberger_certifies(family: MonicFamily) -> bool:
    """Sufficiency test: every S-polynomial reduces to zero with the
    support-containment certificate.

    True certifies that the family is a Groebner basis of the ideal it
    generates.  False is inconclusive, never a refutation.
    """
    members = family.members
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            s = s_polynomial(members[i], members[j])
            if s.is_zero():
                continue
            out = reduce(s, family)
            if not out.remainder.is_zero():
                return False
            if not out.support_contained(s):
                return False
    return True


def membership_refutation(f: Poly, family: MonicFamily) -> ExpVec | None:
    """A maximal support point of f dominated by no leading exponent.

    Such a point proves f lies outside any ideal of which the family is a
    Groebner basis.  Returns None when every maximal point is dominated,
    which by itself decides nothing.
    """
    if f.is_zero():
        raise ZeroPolynomial("refutation witnesses need a nonzero polynomial")
    witnesses = [
        beta
        for beta in f.max_support()
        if not any(leq(theta, beta) for theta in family.witnesses)
    ]
    if not witnesses:
        return None
    return max(witnesses, key=lambda b: (sum(b), b))


def normal_form(f: Poly, family: MonicFamily) -> Poly:
    """The unique fully reduced representative of f modulo the family.

    Uniqueness (independence of the reduction strategy) holds exactly when
    the family is a certified Groebner basis, so uncertified families are
    rejected.
    """
    if not family.certified:
        raise UncertifiedBasis(
            "normal forms require a certified Groebner basis; "
            "call certify() or use a structurally certified family"
        )
    return reduce(f, family).remainder
