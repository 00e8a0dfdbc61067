"""Exponent-vector algebra on N^n and staircase counting.

Exponent vectors are plain tuples of naturals under the componentwise
partial order.  For a set A of vectors, ``downset(A)`` is the set of
vectors dominated by some member, ``in_upset`` tests membership in the set
of vectors dominating some member, and ``complement`` enumerates the finite
set of vectors dominated by no member of A (when that set is finite).

The counting functions give closed forms for the staircase complements
attached to scaled simplices; enumeration oracles for them live in the
test suite.
"""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import GammaExceedsAlpha, InfiniteComplement

ExpVec = tuple  # tuple[int, ...]


def leq(a: ExpVec, b: ExpVec) -> bool:
    """Componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b))


def meet(a: ExpVec, b: ExpVec) -> ExpVec:
    """Componentwise minimum."""
    return tuple(min(x, y) for x, y in zip(a, b))


def vec_add(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: ExpVec, b: ExpVec) -> ExpVec:
    """Componentwise difference; caller guarantees b <= a."""
    return tuple(x - y for x, y in zip(a, b))


def grlex_key(a: ExpVec):
    """Sort key for the graded lexicographic order (degree, then lex)."""
    return (sum(a), a)


def maximal_elements(vectors: Iterable[ExpVec]) -> set:
    """The antichain of componentwise-maximal members."""
    vecs = set(vectors)
    return {b for b in vecs if not any(b != a and leq(b, a) for a in vecs)}


def in_upset(b: ExpVec, generators: Iterable[ExpVec]) -> bool:
    """True iff some generator is componentwise <= b."""
    return any(leq(c, b) for c in generators)


def in_downset(b: ExpVec, generators: Iterable[ExpVec]) -> bool:
    """True iff b is componentwise <= some generator."""
    return any(leq(b, a) for a in generators)


def downset(vectors: Iterable[ExpVec]) -> set:
    """Explicit enumeration of all vectors dominated by some member.

    This materializes the full set, which grows as the product of the
    coordinates; callers on large supports should prefer the predicate
    ``in_downset`` against the maximal elements.
    """
    out: set = set()
    for a in maximal_elements(vectors):
        out.update(product(*(range(x + 1) for x in a)))
    return out


def has_finite_complement(generators: Iterable[ExpVec], nvars: int) -> bool:
    """Finiteness criterion for the complement of an upset.

    The complement of the upset of C is finite exactly when every axis k
    owns a generator supported on axis k alone.
    """
    gens = list(generators)
    for k in range(nvars):
        if not any(
            all(g[l] == 0 for l in range(nvars) if l != k) for g in gens
        ):
            return False
    return True


def _axis_bounds(gens: Sequence[ExpVec], nvars: int) -> list:
    """Box bounds b_k = min over generators supported on axis k alone.

    Every vector outside the upset has k-th entry < b_k, so scanning the
    box [0, b_1) x ... x [0, b_n) is a complete enumeration.
    """
    bounds = []
    for k in range(nvars):
        axis_vals = [
            g[k]
            for g in gens
            if all(g[l] == 0 for l in range(nvars) if l != k)
        ]
        if not axis_vals:
            raise InfiniteComplement(
                f"axis {k + 1} has no generator supported on it alone"
            )
        bounds.append(min(axis_vals))
    return bounds


def complement(generators: Iterable[ExpVec], nvars: int) -> set:
    """The finite set N^n minus the upset of the generators.

    Raises InfiniteComplement when the finiteness criterion fails.
    """
    gens = list(set(generators))
    bounds = _axis_bounds(gens, nvars)
    return {
        beta
        for beta in product(*(range(b) for b in bounds))
        if not in_upset(beta, gens)
    }


def compositions(total: int, parts: int) -> Iterator[ExpVec]:
    """All vectors in N^parts with coordinate sum equal to total, in
    lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def staircase_count(alpha: ExpVec, t: int) -> int:
    """Size of the staircase complement of the scaled level-t simplex.

    For B = {(alpha_1 theta_1, ..., alpha_n theta_n) : sum(theta) = t} the
    complement of the upset of B has exactly
    ``prod(alpha) * C(n + t - 1, n)`` points; when every alpha_i is
    positive these are the beta with ``sum(floor(beta_i / alpha_i)) <= t - 1``.
    """
    if t < 0:
        raise ValueError("t must be a natural number")
    n = len(alpha)
    prod_alpha = 1
    for a in alpha:
        prod_alpha *= a
    return prod_alpha * comb(n + t - 1, n)


def punctured_staircase_count(alpha: ExpVec, gamma: ExpVec, t: int) -> int:
    """Complement size once the level t-1 shifted simplex is also removed.

    Counts N^n minus the upset of B union C for
    B = {alpha*theta : sum(theta)=t} and
    C = {alpha*theta + alpha - gamma : sum(theta)=t-1}, which equals
    ``prod(alpha)*C(n+t-1, n) - prod(gamma)*C(n+t-2, n-1)``.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if len(alpha) != len(gamma):
        raise GammaExceedsAlpha("alpha and gamma must share a length")
    if not leq(gamma, alpha):
        raise GammaExceedsAlpha(f"{gamma} is not dominated by {alpha}")
    n = len(alpha)
    prod_alpha = 1
    prod_gamma = 1
    for a, g in zip(alpha, gamma):
        prod_alpha *= a
        prod_gamma *= g
    return prod_alpha * comb(n + t - 1, n) - prod_gamma * comb(n + t - 2, n - 1)


def parse_expvec(text: str) -> ExpVec:
    """Parse ``(a1,a2,...,an)``; a trailing comma is tolerated."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad exponent vector {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        raise ValueError("empty exponent vector")
    if inner.endswith(","):
        inner = inner[:-1]
    try:
        vec = tuple(int(part.strip()) for part in inner.split(","))
    except ValueError:
        raise ValueError(f"bad exponent vector {text!r}") from None
    if any(x < 0 for x in vec):
        raise ValueError(f"negative entry in {text!r}")
    return vec


def format_expvec(vec: ExpVec) -> str:
    if len(vec) == 1:
        return f"({vec[0]},)"
    return "(" + ",".join(str(x) for x in vec) + ")"


def parse_monomial_set(text: str) -> set:
    """Parse ``{(..),(..)}`` into a set of exponent vectors."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"bad monomial set {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return set()
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(inner[start:i])
            start = i + 1
    parts.append(inner[start:])
    return {parse_expvec(p) for p in parts}


def format_monomial_set(vectors: Iterable[ExpVec]) -> str:
    ordered = sorted(vectors, key=grlex_key)
    return "{" + ",".join(format_expvec(v) for v in ordered) + "}"
