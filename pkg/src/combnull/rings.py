"""Exact arithmetic over the supported commutative coefficient rings.

Four ring families are available: the integers ``ZZ``, the rationals ``QQ``,
the modular rings ``ZZ/m`` with m >= 2, and the prime fields ``GF(p)``
(realized as ZZ/p with p prime; extension fields are out of scope).

Elements are kept in canonical form as plain Python values: arbitrary
precision ``int`` for ZZ and the modular rings (representatives in
``[0, m)``), and normalized ``Fraction`` for QQ.  All arithmetic is exact;
nothing in the library rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Union

from .errors import ParseError, RingMismatch, UnsupportedField

Element = Union[int, Fraction]

_INTEGERS = "ZZ"
_RATIONALS = "QQ"
_MODULAR = "ZZ/m"
_PRIME_FIELD = "GF"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Ring:
    """A commutative ring descriptor; all element operations live here.

    Instances are immutable and compare structurally, so two descriptors of
    the same ring are interchangeable.  Every operation is a pure function
    of its inputs.
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind in (_INTEGERS, _RATIONALS):
            if self.modulus is not None:
                raise ValueError(f"{self.kind} takes no modulus")
        elif self.kind == _MODULAR:
            if self.modulus is None or self.modulus < 2:
                raise ValueError("ZZ/m needs a modulus m >= 2")
        elif self.kind == _PRIME_FIELD:
            if self.modulus is None or not _is_prime(self.modulus):
                raise UnsupportedField(
                    f"GF({self.modulus}) is not a prime field; "
                    "extension fields are unsupported"
                )
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    # -- construction ----------------------------------------------------

    @property
    def zero(self) -> Element:
        return Fraction(0) if self.kind == _RATIONALS else 0

    @property
    def one(self) -> Element:
        return Fraction(1) if self.kind == _RATIONALS else 1

    @property
    def is_finite(self) -> bool:
        return self.kind in (_MODULAR, _PRIME_FIELD)

    def elements(self) -> range:
        """All elements, for finite rings only."""
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return range(self.modulus)

    def canon(self, value) -> Element:
        """Canonical representative of an int or Fraction in this ring."""
        if self.kind == _RATIONALS:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise ParseError(f"not a rational value: {value!r}")
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParseError(f"not an integer value for {self}: {value!r}")
        if self.is_finite:
            return value % self.modulus
        return value

    def from_int(self, k: int) -> Element:
        """Canonical ring image of an integer (the unique map ZZ -> R)."""
        if self.kind == _RATIONALS:
            return Fraction(k)
        if self.is_finite:
            return k % self.modulus
        return k

    # -- arithmetic -------------------------------------------------------

    def add(self, a: Element, b: Element) -> Element:
        return (a + b) % self.modulus if self.is_finite else a + b

    def sub(self, a: Element, b: Element) -> Element:
        return (a - b) % self.modulus if self.is_finite else a - b

    def mul(self, a: Element, b: Element) -> Element:
        return (a * b) % self.modulus if self.is_finite else a * b

    def neg(self, a: Element) -> Element:
        return (-a) % self.modulus if self.is_finite else -a

    def pow(self, a: Element, k: int) -> Element:
        if k < 0:
            raise ValueError("negative exponent")
        return pow(a, k, self.modulus) if self.is_finite else a ** k

    # -- predicates -------------------------------------------------------

    def is_unit(self, a: Element) -> bool:
        """True iff a has a multiplicative inverse in this ring."""
        if self.kind == _INTEGERS:
            return a in (1, -1)
        if self.kind == _RATIONALS:
            return a != 0
        return gcd(a % self.modulus, self.modulus) == 1

    def is_zero_divisor(self, a: Element) -> bool:
        """True iff aw = 0 for some w != 0.

        Zero is a zero divisor in every ring here (all supported rings are
        nonzero), matching the literal definition used throughout.
        """
        if self.kind in (_INTEGERS, _RATIONALS):
            return a == 0
        return gcd(a % self.modulus, self.modulus) > 1

    def condition_holds(self, values: Iterable[Element], mode: str) -> bool:
        """Check Condition (D) or (F) for a finite set of elements.

        Mode "D": every pairwise difference is not a zero divisor.
        Mode "F": every pairwise difference is a unit.  (F) implies (D).
        """
        if mode not in ("D", "F"):
            raise ValueError(f"mode must be 'D' or 'F', got {mode!r}")
        vals = list(dict.fromkeys(values))
        for i, a in enumerate(vals):
            for b in vals[i + 1:]:
                d = self.sub(b, a)
                if mode == "D":
                    if self.is_zero_divisor(d):
                        return False
                elif not self.is_unit(d):
                    return False
        return True

    # -- text forms --------------------------------------------------------

    def parse_element(self, text: str) -> Element:
        text = text.strip()
        try:
            if "/" in text:
                if self.kind != _RATIONALS:
                    raise ParseError(f"fractions are not elements of {self}")
                return Fraction(text)
            return self.canon(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad element {text!r} for {self}: {exc}") from None

    def format_element(self, a: Element) -> str:
        return str(a)

    def __str__(self) -> str:
        if self.kind == _MODULAR:
            return f"ZZ/{self.modulus}"
        if self.kind == _PRIME_FIELD:
            return f"GF({self.modulus})"
        return self.kind

    def require_same(self, other: "Ring") -> None:
        if self != other:
            raise RingMismatch(f"{self} vs {other}")


ZZ = Ring(_INTEGERS)
QQ = Ring(_RATIONALS)


def Zmod(m: int) -> Ring:
    return Ring(_MODULAR, m)


def GF(p: int) -> Ring:
    return Ring(_PRIME_FIELD, p)


def parse_ring(text: str) -> Ring:
    """Parse the ring grammar: ``ZZ``, ``QQ``, ``ZZ/<m>``, ``GF(<p>)``."""
    text = text.strip()
    if text == "ZZ":
        return ZZ
    if text == "QQ":
        return QQ
    if text.startswith("ZZ/"):
        try:
            m = int(text[3:])
        except ValueError:
            raise ParseError(f"bad modulus in {text!r}") from None
        if m < 2:
            raise ParseError(f"modulus must be >= 2 in {text!r}")
        return Zmod(m)
    if text.startswith("GF(") and text.endswith(")"):
        try:
            p = int(text[3:-1])
        except ValueError:
            raise ParseError(f"bad prime in {text!r}") from None
        return GF(p)
    raise ParseError(f"unrecognized ring {text!r}")
