"""Laurent polynomials in one variable ``t`` over an exact coefficient domain."""

from __future__ import annotations

import re
from fractions import Fraction

from .domains import CoefficientDomain


def _trim(coeffs, low):
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return (), 0
    return tuple(coeffs[lo:hi]), low + lo


class LaurentPolynomial:
    """``a_r t^r + ... + a_s t^s`` stored densely as ``(r, (a_r, ..., a_s))``.

    Instances are immutable. ``a_r`` and ``a_s`` are nonzero unless the
    polynomial is zero, in which case ``coeffs == ()``.
    """

    __slots__ = ("domain", "low", "coeffs", "_hash")

    def __init__(self, domain: CoefficientDomain, coeffs=(), low: int = 0, *, _normalized=False):
        if not _normalized:
            coeffs = [domain.convert(c) for c in coeffs]
            coeffs, low = _trim(coeffs, low)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def _raw(cls, domain, coeffs, low):
        red = domain.reducer
        if red is not None:
            coeffs = [red(c) for c in coeffs]
        coeffs, low = _trim(coeffs, low)
        return cls(domain, coeffs, low, _normalized=True)

    @classmethod
    def zero(cls, domain):
        return cls(domain, (), 0, _normalized=True)

    @classmethod
    def constant(cls, domain, c):
        return cls(domain, (c,))

    @classmethod
    def monomial(cls, domain, c=1, exponent: int = 0):
        return cls(domain, (c,), exponent)

    @classmethod
    def from_dict(cls, domain, terms: dict):
        """Build from ``{exponent: coefficient}``; zero coefficients are dropped."""
        terms = {int(e): domain.convert(c) for e, c in terms.items()}
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return cls.zero(domain)
        lo, hi = min(terms), max(terms)
        dense = [0] * (hi - lo + 1)
        for e, c in terms.items():
            dense[e - lo] = c
        return cls(domain, tuple(dense), lo, _normalized=True)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def degree(self):
        """Span ``s - r`` of the support; ``None`` for the zero polynomial."""
        if not self.coeffs:
            return None
        return len(self.coeffs) - 1

    @property
    def lowest_coefficient(self):
        return self.coeffs[0] if self.coeffs else 0

    @property
    def highest_coefficient(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_constant(self) -> bool:
        return not self.coeffs or (len(self.coeffs) == 1 and self.low == 0)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def terms(self) -> dict:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def __getitem__(self, exponent: int):
        i = exponent - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.domain != self.domain:
                raise ValueError(f"domain mismatch: {self.domain} vs {other.domain}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LaurentPolynomial.constant(self.domain, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        dense = [0] * (high - low + 1)
        for i, c in enumerate(self.coeffs, self.low - low):
            dense[i] = c
        for i, c in enumerate(other.coeffs, other.low - low):
            dense[i] += c
        return LaurentPolynomial._raw(self.domain, dense, low)

    __radd__ = __add__

    def __neg__(self):
        red = self.domain.reducer
        coeffs = tuple(red(-c) if red else -c for c in self.coeffs)
        return LaurentPolynomial(self.domain, coeffs, self.low, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPolynomial.zero(self.domain)
        if len(a) < len(b):
            a, b = b, a
        dense = [0] * (len(a) + len(b) - 1)
        for j, bj in enumerate(b):
            if bj == 0:
                continue
            for i, ai in enumerate(a):
                dense[i + j] += ai * bj
        return LaurentPolynomial._raw(self.domain, dense, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            c = self.domain.inverse(self.coeffs[0])
            return LaurentPolynomial.monomial(self.domain, c, -self.low) ** (-n)
        result = LaurentPolynomial.constant(self.domain, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by ``t^k``."""
        if not self.coeffs:
            return self
        return LaurentPolynomial(self.domain, self.coeffs, self.low + k, _normalized=True)

    def scale(self, c) -> LaurentPolynomial:
        c = self.domain.convert(c)
        return LaurentPolynomial._raw(self.domain, [c * a for a in self.coeffs], self.low)

    def change_domain(self, domain: CoefficientDomain) -> LaurentPolynomial:
        if domain == self.domain:
            return self
        return LaurentPolynomial(domain, self.coeffs, self.low)

    def evaluate(self, x):
        """Value at ``t = x`` in the quotient field; ``x`` must be nonzero when ``low < 0``."""
        dom = self.domain
        if dom.kind == "prime-field":
            p = dom.p
            x %= p
            acc = 0
            for c in reversed(self.coeffs):
                acc = (acc * x + c) % p
            return acc * pow(x, self.low, p) % p
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x ** self.low

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return (self.domain == other.domain and self.low == other.low
                    and self.coeffs == other.coeffs)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self == LaurentPolynomial.constant(self.domain, other)
            except (TypeError, ValueError):
                return False
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.domain, self.low, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"LaurentPolynomial({self.domain.tag}, {str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        dom = self.domain
        parts = []
        for e in range(self.high, self.low - 1, -1):
            c = self[e]
            if c == 0:
                continue
            if dom.kind == "prime-field" and c > dom.p // 2:
                c = c - dom.p
            neg = c < 0
            mag = -c if neg else c
            if e == 0:
                body = str(mag)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}" if isinstance(mag, Fraction) and mag.denominator != 1 else f"{mag}{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)


_TERM = re.compile(
    r"""\s*([+-])?\s*
        (?:(\d+(?:\s*/\s*\d+)?)\s*\*?\s*)?      # coefficient
        (t(?:\s*\^\s*\{?\s*([+-]?\d+)\s*\}?)?)? # monomial
        \s*""",
    re.VERBOSE,
)


def parse_laurent(text: str, domain: CoefficientDomain) -> LaurentPolynomial:
    """Parse strings like ``"t^-1 + 2 - t^3"`` or ``"3/2*t^2 - t"``."""
    s = text.strip()
    if not s:
        raise ValueError("empty Laurent polynomial literal")
    terms: dict[int, object] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse Laurent literal {text!r} at offset {pos}")
        sign, coeff, mono, exp = m.groups()
        if coeff is None and mono is None:
            raise ValueError(f"cannot parse Laurent literal {text!r} at offset {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in Laurent literal {text!r} at offset {pos}")
        c = Fraction(coeff.replace(" ", "")) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        e = 0 if mono is None else (int(exp) if exp is not None else 1)
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPolynomial.from_dict(domain, {e: domain.convert(c) for e, c in terms.items()})


def as_laurent(value, domain: CoefficientDomain) -> LaurentPolynomial:
    """Accept a LaurentPolynomial, a number, a literal string or an exponent map."""
    if isinstance(value, LaurentPolynomial):
        return value.change_domain(domain)
    if isinstance(value, dict):
        return LaurentPolynomial.from_dict(domain, {int(e): domain.parse(c) for e, c in value.items()})
    if isinstance(value, str):
        return parse_laurent(value, domain)
    return LaurentPolynomial.constant(domain, domain.parse(value))


def degree_laurent(f: LaurentPolynomial):
    """``s - r`` for ``f = a_r t^r + ... + a_s t^s`` nonzero, else ``None``."""
    return f.degree()
