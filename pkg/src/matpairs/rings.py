"""Exact commutative rings: prime fields, the rationals, the integers, Z/n.

Ring elements are plain Python values: ``int`` for the integers and the finite
rings (residues kept in ``[0, n)``) and :class:`fractions.Fraction` for the
rationals. A :class:`RingSpec` knows how to normalize and combine them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sympy import isprime

from .errors import NotAField, ParseError

PRIME_FIELD = "F"
RATIONALS = "Q"
INTEGERS = "Z"
MOD_RING = "Z/"

_KINDS = (PRIME_FIELD, RATIONALS, INTEGERS, MOD_RING)


@dataclass(frozen=True)
class RingSpec:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == PRIME_FIELD:
            if self.modulus is None or not isprime(self.modulus):
                raise ValueError(f"F{self.modulus}: modulus must be prime")
        elif self.kind == MOD_RING:
            if self.modulus is None or self.modulus < 2:
                raise ValueError("Z/n requires n >= 2")
        elif self.modulus is not None:
            raise ValueError(f"{self.kind} takes no modulus")

    # capability flags
    @property
    def is_field(self) -> bool:
        return self.kind in (PRIME_FIELD, RATIONALS)

    @property
    def is_euclidean(self) -> bool:
        return self.kind in (PRIME_FIELD, RATIONALS, INTEGERS)

    @property
    def is_finite(self) -> bool:
        return self.kind in (PRIME_FIELD, MOD_RING)

    @property
    def order(self) -> int | None:
        return self.modulus if self.is_finite else None

    def __str__(self):
        if self.kind == PRIME_FIELD:
            return f"F{self.modulus}"
        if self.kind == MOD_RING:
            return f"Z/{self.modulus}"
        return self.kind

    def __repr__(self):
        return f"RingSpec({str(self)!r})"

    # element arithmetic
    def __call__(self, value):
        """Coerce ``value`` (int, Fraction or ``'a/b'`` string) into the ring."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.kind == RATIONALS:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator == 1:
                value = value.numerator
            elif self.is_finite:
                # a/b with b a unit mod n
                den = value.denominator % self.modulus
                if gcd(den, self.modulus) != 1:
                    raise ValueError(f"{value} is not defined in {self}")
                value = value.numerator * pow(den, -1, self.modulus)
            else:
                raise ValueError(f"{value} is not an integer")
        if self.is_finite:
            return int(value) % self.modulus
        return int(value)

    def reduce(self, x):
        if self.is_finite:
            return x % self.modulus
        return x

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def is_unit(self, x) -> bool:
        if self.is_field:
            return x != 0
        if self.kind == INTEGERS:
            return x in (1, -1)
        return gcd(x, self.modulus) == 1

    def inv(self, x):
        if self.kind == RATIONALS:
            return 1 / Fraction(x)
        if not self.is_unit(x):
            if not self.is_field and self.kind != MOD_RING:
                raise NotAField(f"{x} has no inverse in {self}")
            raise ZeroDivisionError(f"{x} is not invertible in {self}")
        if self.kind == INTEGERS:
            return x
        return pow(x, -1, self.modulus)

    def neg(self, x):
        return self.reduce(-x)

    def elements(self):
        """All elements of a finite ring, in residue order."""
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        return range(self.modulus)

    def format(self, x) -> str:
        if isinstance(x, Fraction):
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return str(x)


QQ = RingSpec(RATIONALS)
ZZ = RingSpec(INTEGERS)


def F(p: int) -> RingSpec:
    return RingSpec(PRIME_FIELD, p)


def Zmod(n: int) -> RingSpec:
    return RingSpec(MOD_RING, n)


_RING_RE = re.compile(r"^(?:(Q)|(Z)|F(\d+)|Z/(\d+))$")


def parse_ring(text: str) -> RingSpec:
    """Parse ``Q``, ``Z``, ``F<p>`` or ``Z/<n>``."""
    m = _RING_RE.match(text.strip())
    if not m:
        raise ParseError(f"bad ring {text!r}; expected Q, Z, F<p> or Z/<n>", text, 0)
    try:
        if m.group(1):
            return QQ
        if m.group(2):
            return ZZ
        if m.group(3):
            return F(int(m.group(3)))
        return Zmod(int(m.group(4)))
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None
