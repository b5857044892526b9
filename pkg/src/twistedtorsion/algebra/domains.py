"""Exact coefficient domains: the integers, the rationals and prime fields.

Elements are plain Python numbers: ``int`` for the integers, ``Fraction``
for the rationals and canonical residues ``0 .. p-1`` for ``GF(p)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

INTEGERS = "integers"
RATIONALS = "rationals"
PRIME_FIELD = "prime-field"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class CoefficientDomain:
    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in (INTEGERS, RATIONALS, PRIME_FIELD):
            raise ValueError(f"unknown coefficient domain {self.kind!r}")
        if self.kind == PRIME_FIELD:
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime modulus, got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"{self.kind} takes no modulus")

    # -- structure ---------------------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGERS

    @property
    def field(self) -> CoefficientDomain:
        """The quotient field."""
        return QQ if self.kind == INTEGERS else self

    @property
    def tag(self) -> str:
        return f"GF({self.p})" if self.kind == PRIME_FIELD else self.kind

    def __str__(self):
        return self.tag

    # -- elements ----------------------------------------------------------

    def convert(self, x):
        """Coerce ``x`` (int, Fraction or residue) into this domain."""
        if self.kind == INTEGERS:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                return int(x.numerator)
            if isinstance(x, bool) or not isinstance(x, int):
                raise TypeError(f"cannot convert {x!r} to an integer")
            return x
        if self.kind == RATIONALS:
            if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
                raise TypeError(f"cannot convert {x!r} to a rational")
            return Fraction(x)
        p = self.p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return x.numerator * pow(den, -1, p) % p
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot convert {x!r} to GF({p})")
        return x % p

    @property
    def reducer(self):
        """Post-operation normalizer, ``None`` when Python arithmetic is already closed."""
        if self.kind == PRIME_FIELD:
            p = self.p
            return lambda c: c % p
        return None

    def is_unit(self, c) -> bool:
        if self.kind == INTEGERS:
            return c in (1, -1)
        return c != 0

    def is_plus_minus_one(self, c) -> bool:
        if self.kind == PRIME_FIELD:
            return c in (1, self.p - 1)
        return c == 1 or c == -1

    def neg(self, c):
        return (-c) % self.p if self.kind == PRIME_FIELD else -c

    def mul(self, a, b):
        return a * b % self.p if self.kind == PRIME_FIELD else a * b

    def inverse(self, c):
        """Multiplicative inverse in the quotient field."""
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == PRIME_FIELD:
            return pow(c, -1, self.p)
        return 1 / Fraction(c)

    def div(self, a, b):
        """``a / b`` in the quotient field."""
        if self.kind == PRIME_FIELD:
            return a * self.inverse(b) % self.p
        q = Fraction(a) / Fraction(b)
        return q

    # -- literals ----------------------------------------------------------

    def parse(self, literal):
        """Parse a ring literal: an int, or a string such as ``"-3"`` or ``"2/5"``."""
        if isinstance(literal, bool):
            raise TypeError("booleans are not ring literals")
        if isinstance(literal, (int, Fraction)):
            return self.convert(literal)
        if isinstance(literal, str) and re.fullmatch(r"\s*[+-]?\d+(\s*/\s*\d+)?\s*", literal):
            return self.convert(Fraction(literal.replace(" ", "")))
        raise ValueError(f"bad ring literal {literal!r}")

    def format(self, c):
        """JSON-friendly form: ints stay ints, non-integral rationals become ``"p/q"``."""
        if isinstance(c, Fraction):
            return int(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        return c


ZZ = CoefficientDomain(INTEGERS)
QQ = CoefficientDomain(RATIONALS)


def GF(p: int) -> CoefficientDomain:
    return CoefficientDomain(PRIME_FIELD, p)


def domain_from_tag(tag: str) -> CoefficientDomain:
    """``"integers"``, ``"rationals"``, ``"ZZ"``, ``"QQ"`` or ``"GF(p)"``."""
    t = tag.strip()
    if t in (INTEGERS, "ZZ", "Z"):
        return ZZ
    if t in (RATIONALS, "QQ", "Q"):
        return QQ
    m = re.fullmatch(r"(?:GF|F)\(?\s*(\d+)\s*\)?", t)
    if m:
        return GF(int(m.group(1)))
    raise ValueError(f"unknown ring tag {tag!r}")
