"""Sparse multivariate polynomials over a coefficient ring.

A polynomial is a finite map from exponent tuples to nonzero canonical ring
elements; zero coefficients are pruned on construction so that the support
is always exactly the key set and equality is structural.  The zero
polynomial has degree ``NEG_INF``, a sentinel below every natural number.

A polynomial is *monic* when its support has a greatest element under the
componentwise order and the coefficient there is one.  This is stronger
than the univariate leading-coefficient notion and is the monicity used by
every family in this library.
"""

from __future__ import annotations

import re
from itertools import product
from math import comb
from typing import Iterable, Mapping, Sequence

from .errors import (
    ArityMismatch,
    NonPositiveMultiplicity,
    NotAxisPoly,
    NotMonic,
    ParseError,
)
from .rings import Element, Ring
from .staircase import ExpVec, grlex_key, leq, maximal_elements

NEG_INF = float("-inf")


class Poly:
    """Immutable-by-convention sparse polynomial in ``nvars`` variables."""

    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring: Ring, nvars: int, terms: Mapping | None = None):
        if nvars < 1:
            raise ValueError("nvars must be at least 1")
        clean: dict = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != nvars:
                raise ArityMismatch(f"exponent {alpha} in {nvars} variables")
            if any(e < 0 for e in alpha):
                raise ValueError(f"negative exponent in {alpha}")
            c = ring.canon(c)
            if c != ring.zero:
                clean[alpha] = c
        self.ring = ring
        self.nvars = nvars
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring, nvars: int) -> "Poly":
        return cls(ring, nvars)

    @classmethod
    def constant(cls, ring: Ring, nvars: int, c) -> "Poly":
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, ring: Ring, nvars: int) -> "Poly":
        return cls.constant(ring, nvars, ring.one)

    @classmethod
    def variable(cls, ring: Ring, nvars: int, axis: int) -> "Poly":
        """The variable x_{axis+1} (axes are 0-based)."""
        if not 0 <= axis < nvars:
            raise ValueError(f"axis {axis} out of range for {nvars} variables")
        exp = tuple(1 if k == axis else 0 for k in range(nvars))
        return cls(ring, nvars, {exp: ring.one})

    @classmethod
    def monomial(cls, ring: Ring, nvars: int, alpha: ExpVec, c=None) -> "Poly":
        return cls(ring, nvars, {tuple(alpha): ring.one if c is None else c})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> set:
        return set(self.terms)

    def max_support(self) -> set:
        return maximal_elements(self.terms)

    def coeff(self, alpha: ExpVec) -> Element:
        return self.terms.get(tuple(alpha), self.ring.zero)

    def degree(self):
        """Max total degree, or NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(a) for a in self.terms)

    def monic_witness(self) -> ExpVec | None:
        """The greatest support point, when it exists with coefficient one.

        Returns None otherwise; non-monicity is an ordinary value here, not
        a fault.
        """
        if not self.terms:
            return None
        theta = max(self.terms, key=grlex_key)
        if any(not leq(alpha, theta) for alpha in self.terms):
            return None
        if self.terms[theta] != self.ring.one:
            return None
        return theta

    def is_axis_poly(self, axis: int) -> bool:
        """True iff every term is supported on the given axis only."""
        return all(
            all(e == 0 for k, e in enumerate(alpha) if k != axis)
            for alpha in self.terms
        )

    # -- arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: "Poly") -> None:
        self.ring.require_same(other.ring)
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        ring = self.ring
        out = dict(self.terms)
        for alpha, c in other.terms.items():
            s = ring.add(out.get(alpha, ring.zero), c)
            if s == ring.zero:
                out.pop(alpha, None)
            else:
                out[alpha] = s
        return _raw(ring, self.nvars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        ring = self.ring
        out = dict(self.terms)
        for alpha, c in other.terms.items():
            s = ring.sub(out.get(alpha, ring.zero), c)
            if s == ring.zero:
                out.pop(alpha, None)
            else:
                out[alpha] = s
        return _raw(ring, self.nvars, out)

    def __neg__(self) -> "Poly":
        ring = self.ring
        return _raw(ring, self.nvars, {a: ring.neg(c) for a, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        ring = self.ring
        zero = ring.zero
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(a, b))
                s = ring.add(out.get(key, zero), ring.mul(ca, cb))
                if s == zero:
                    out.pop(key, None)
                else:
                    out[key] = s
        return _raw(ring, self.nvars, out)

    def scale(self, c) -> "Poly":
        ring = self.ring
        c = ring.canon(c)
        if c == ring.zero:
            return Poly.zero(ring, self.nvars)
        out = {}
        for a, ca in self.terms.items():
            s = ring.mul(ca, c)
            if s != ring.zero:
                out[a] = s
        return _raw(ring, self.nvars, out)

    def monomial_multiple(self, shift: ExpVec, c) -> "Poly":
        """c * x^shift * self, the elementary reduction step factor."""
        ring = self.ring
        c = ring.canon(c)
        if c == ring.zero:
            return Poly.zero(ring, self.nvars)
        out = {}
        for a, ca in self.terms.items():
            s = ring.mul(ca, c)
            if s != ring.zero:
                out[tuple(x + y for x, y in zip(a, shift))] = s
        return _raw(ring, self.nvars, out)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.one(self.ring, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    __hash__ = None

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, point: Sequence[Element]) -> Element:
        if len(point) != self.nvars:
            raise ArityMismatch(f"point of length {len(point)} in {self.nvars} vars")
        ring = self.ring
        pt = [ring.canon(v) for v in point]
        total = ring.zero
        for alpha, c in self.terms.items():
            term = c
            for v, e in zip(pt, alpha):
                if e:
                    term = ring.mul(term, ring.pow(v, e))
            total = ring.add(total, term)
        return total

    def partial_evaluate(self, assignments: Mapping[int, Element]) -> "Poly":
        """Substitute values on a subset of axes, keeping the arity."""
        ring = self.ring
        out: dict = {}
        for alpha, c in self.terms.items():
            val = c
            key = list(alpha)
            for axis, v in assignments.items():
                e = alpha[axis]
                if e:
                    val = ring.mul(val, ring.pow(ring.canon(v), e))
                key[axis] = 0
            k = tuple(key)
            s = ring.add(out.get(k, ring.zero), val)
            if s == ring.zero:
                out.pop(k, None)
            else:
                out[k] = s
        return _raw(ring, self.nvars, out)

    def __repr__(self) -> str:
        return f"Poly({self.ring}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _raw(ring: Ring, nvars: int, clean_terms: dict) -> Poly:
    """Internal fast path: terms are already canonical and pruned."""
    p = Poly.__new__(Poly)
    p.ring = ring
    p.nvars = nvars
    p.terms = clean_terms
    return p


# -- Taylor shift ------------------------------------------------------------


def shift_kernel(ring: Ring, u: Sequence[Element], alpha: ExpVec, gamma: ExpVec) -> Element:
    """Coefficient kernel of the shift x -> x + u.

    Equals ``prod C(gamma_k, alpha_k) * prod u_k^(gamma_k - alpha_k)`` when
    alpha <= gamma and zero otherwise.  Binomials are computed exactly over
    the integers and then mapped into the ring.
    """
    if len(u) != len(alpha) or len(alpha) != len(gamma):
        raise ArityMismatch("shift kernel arity mismatch")
    if not leq(alpha, gamma):
        return ring.zero
    binom = 1
    for g, a in zip(gamma, alpha):
        binom *= comb(g, a)
    value = ring.from_int(binom)
    for v, g, a in zip(u, gamma, alpha):
        if g > a:
            value = ring.mul(value, ring.pow(ring.canon(v), g - a))
    return value


def taylor_shift(f: Poly, u: Sequence[Element]) -> Poly:
    """Rewrite f in coordinates centered at u, i.e. f(x1+u1, ..., xn+un).

    The coefficient at alpha is the kernel-weighted sum over the support of
    f; expanding each support point through its dominated box realizes that
    sum directly.
    """
    ring = f.ring
    if len(u) != f.nvars:
        raise ArityMismatch(f"shift point of length {len(u)} in {f.nvars} vars")
    pt = [ring.canon(v) for v in u]
    pows = [dict() for _ in range(f.nvars)]

    def upow(k: int, e: int) -> Element:
        cache = pows[k]
        if e not in cache:
            cache[e] = ring.pow(pt[k], e)
        return cache[e]

    out: dict = {}
    zero = ring.zero
    for gamma, c in f.terms.items():
        for alpha in product(*(range(g + 1) for g in gamma)):
            w = 1
            for g, a in zip(gamma, alpha):
                w *= comb(g, a)
            val = ring.mul(c, ring.from_int(w))
            for k, (g, a) in enumerate(zip(gamma, alpha)):
                if g > a:
                    val = ring.mul(val, upow(k, g - a))
            s = ring.add(out.get(alpha, zero), val)
            if s == zero:
                out.pop(alpha, None)
            else:
                out[alpha] = s
    return _raw(ring, f.nvars, out)


def shifted_coefficient(f: Poly, u: Sequence[Element], alpha: ExpVec) -> Element:
    """Single coefficient of the shifted polynomial, without a full shift."""
    ring = f.ring
    total = ring.zero
    for gamma, c in f.terms.items():
        k = shift_kernel(ring, u, alpha, gamma)
        if k != ring.zero:
            total = ring.add(total, ring.mul(k, c))
    return total


# -- grid constructors ---------------------------------------------------------


def root_product(
    ring: Ring,
    nvars: int,
    axis: int,
    elements: Iterable[Element],
    psi: Mapping[Element, int] | None = None,
) -> Poly:
    """The monic axis polynomial ``prod (x_axis - u)^psi(u)``.

    With an empty element set this is the constant one.  Multiplicities
    default to one and must be positive.
    """
    result = Poly.one(ring, nvars)
    x = Poly.variable(ring, nvars, axis)
    for u in elements:
        m = 1 if psi is None else psi[u]
        if m < 1:
            raise NonPositiveMultiplicity(f"psi({u}) = {m}")
        factor = x - Poly.constant(ring, nvars, u)
        result = result * factor ** m
    return result


def monic_power_product(axis_polys: Sequence[Poly], alpha: ExpVec):
    """``prod g_k^(alpha_k)`` for monic single-axis polynomials.

    Returns the product together with its greatest support point, which is
    ``(deg(g_1) alpha_1, ..., deg(g_n) alpha_n)``.
    """
    if not axis_polys:
        raise ValueError("need at least one axis polynomial")
    n = axis_polys[0].nvars
    if len(axis_polys) != n or len(alpha) != n:
        raise ArityMismatch("one axis polynomial per variable is required")
    degs = []
    for k, g in enumerate(axis_polys):
        if g.nvars != n:
            raise ArityMismatch("axis polynomials disagree on arity")
        if not g.is_axis_poly(k):
            raise NotAxisPoly(f"member {k + 1} involves other variables")
        if g.monic_witness() is None:
            raise NotMonic(f"axis polynomial {k + 1} is not monic")
        degs.append(int(g.degree()) if g.terms else 0)
    result = Poly.one(axis_polys[0].ring, n)
    for g, e in zip(axis_polys, alpha):
        result = result * g ** e
    theta = tuple(d * e for d, e in zip(degs, alpha))
    return result, theta


# -- text form -----------------------------------------------------------------

_TERM_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def format_poly(f: Poly) -> str:
    """Render in the term grammar, graded-lexicographic descending."""
    if f.is_zero():
        return "0"
    pieces = []
    for alpha in sorted(f.terms, key=grlex_key, reverse=True):
        c = f.terms[alpha]
        mono = "*".join(
            f"x{k + 1}^{e}" if e > 1 else f"x{k + 1}"
            for k, e in enumerate(alpha)
            if e
        )
        negative = c < 0
        mag = -c if negative else c
        if not mono:
            body = str(mag)
        elif mag == f.ring.one:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


def parse_poly(text: str, ring: Ring, nvars: int) -> Poly:
    """Parse the term grammar, e.g. ``3*x1^2*x2 - x3 + 1``."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial text")
    if s == "0":
        return Poly.zero(ring, nvars)
    if not re.fullmatch(r"[+-]?[^+-]+(?:[+-][^+-]+)*", s):
        raise ParseError(f"malformed polynomial {text!r}")
    tokens = re.findall(r"[+-]?[^+-]+", s)

    terms: dict = {}
    for token in tokens:
        sgn = 1
        chunk = token
        if chunk[0] in "+-":
            sgn = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        if not chunk:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = ring.one
        expo = [0] * nvars
        for factor in chunk.split("*"):
            if not factor:
                raise ParseError(f"empty factor in term {chunk!r}")
            m = _TERM_FACTOR.match(factor)
            if m:
                idx = int(m.group(1))
                if not 1 <= idx <= nvars:
                    raise ParseError(
                        f"variable x{idx} out of range for {nvars} variables"
                    )
                expo[idx - 1] += int(m.group(2) or 1)
            else:
                coeff = ring.mul(coeff, ring.parse_element(factor))
        if sgn < 0:
            coeff = ring.neg(coeff)
        key = tuple(expo)
        acc = ring.add(terms.get(key, ring.zero), coeff)
        if acc == ring.zero:
            terms.pop(key, None)
        else:
            terms[key] = acc
    return Poly(ring, nvars, terms)
