"""Matrices of Laurent polynomials and their exact determinants.

The default determinant path clears ``t``-powers row- and column-wise,
reduces to an integer polynomial matrix, and recovers the determinant by
evaluation and interpolation modulo several 31-bit primes followed by
Chinese remaindering. Prime fields too small for interpolation fall back to
fraction-free (Bareiss) elimination over ``GF(p)[t]``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .. import kernels
from . import _poly
from .domains import INTEGERS, PRIME_FIELD, RATIONALS, CoefficientDomain
from .laurent import LaurentPolynomial, as_laurent


class ExactMatrix:
    """Immutable ``rows x cols`` matrix of :class:`LaurentPolynomial` over one domain."""

    __slots__ = ("domain", "nrows", "ncols", "entries")

    def __init__(self, domain: CoefficientDomain, entries, nrows=None, ncols=None):
        rows = [tuple(as_laurent(x, domain) for x in row) for row in entries]
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError(f"matrix is not rectangular {nrows}x{ncols}")
        self.domain = domain
        self.nrows = nrows
        self.ncols = ncols
        self.entries = tuple(rows)

    @classmethod
    def _wrap(cls, domain, rows, nrows, ncols):
        m = cls.__new__(cls)
        m.domain = domain
        m.nrows = nrows
        m.ncols = ncols
        m.entries = tuple(tuple(r) for r in rows)
        return m

    @classmethod
    def zeros(cls, domain, nrows, ncols):
        z = LaurentPolynomial.zero(domain)
        return cls._wrap(domain, [[z] * ncols for _ in range(nrows)], nrows, ncols)

    @classmethod
    def identity(cls, domain, n):
        z = LaurentPolynomial.zero(domain)
        one = LaurentPolynomial.constant(domain, 1)
        return cls._wrap(domain, [[one if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_blocks(cls, domain, blocks):
        """Assemble a block matrix from a 2D list of equally-shaped ExactMatrix blocks."""
        if not blocks or not blocks[0]:
            return cls.zeros(domain, 0, 0)
        rows = []
        for brow in blocks:
            h = brow[0].nrows
            for i in range(h):
                row = []
                for b in brow:
                    row.extend(b.entries[i])
                rows.append(row)
        ncols = sum(b.ncols for b in blocks[0])
        return cls._wrap(domain, rows, len(rows), ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.domain == other.domain
                and self.shape == other.shape and self.entries == other.entries)

    def __hash__(self):
        return hash((self.domain, self.shape, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"ExactMatrix({self.domain.tag}, {self.nrows}x{self.ncols}, [{body}])"

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def transpose(self):
        rows = [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return ExactMatrix._wrap(self.domain, rows, self.ncols, self.nrows)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        rows = [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        return ExactMatrix._wrap(self.domain, rows, self.nrows, self.ncols)

    def __neg__(self):
        return ExactMatrix._wrap(self.domain, [[-a for a in r] for r in self.entries],
                                 self.nrows, self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            zero = LaurentPolynomial.zero(self.domain)
            cols = list(zip(*other.entries)) if other.nrows else [() for _ in range(other.ncols)]
            rows = []
            for r in self.entries:
                row = []
                for c in cols:
                    acc = zero
                    for a, b in zip(r, c):
                        if a.coeffs and b.coeffs:
                            acc = acc + a * b
                    row.append(acc)
                rows.append(row)
            return ExactMatrix._wrap(self.domain, rows, self.nrows, other.ncols)
        other = as_laurent(other, self.domain)
        return ExactMatrix._wrap(self.domain, [[a * other for a in r] for r in self.entries],
                                 self.nrows, self.ncols)

    def __rmul__(self, other):
        return self * other

    def submatrix(self, rows, cols):
        rows = list(rows)
        cols = list(cols)
        return ExactMatrix._wrap(self.domain, [[self.entries[i][j] for j in cols] for i in rows],
                                 len(rows), len(cols))

    def delete(self, rows=(), cols=()):
        """Copy with the given row and column indices removed."""
        rows, cols = set(rows), set(cols)
        keep_r = [i for i in range(self.nrows) if i not in rows]
        keep_c = [j for j in range(self.ncols) if j not in cols]
        return self.submatrix(keep_r, keep_c)

    def det(self, strategy="auto"):
        return det_exact(self, strategy=strategy)


# -- determinants ------------------------------------------------------------

_PRIME_CACHE: list[int] = []


def _primes_below_2_31():
    """Descending primes below 2**31, generated lazily and cached."""
    from .domains import is_prime

    i = 0
    while True:
        while i >= len(_PRIME_CACHE):
            start = _PRIME_CACHE[-1] - 2 if _PRIME_CACHE else 2**31 - 1
            n = start
            while not is_prime(n):
                n -= 2
            _PRIME_CACHE.append(n)
        yield _PRIME_CACHE[i]
        i += 1


def _strip_monomials(m: ExactMatrix):
    """Shift rows and columns so every row and column has lowest exponent 0
    (unless identically zero). Returns ``(offset, dense_rows)`` with
    ``det(m) = t^offset * det(dense)``; ``dense_rows`` holds ascending lists."""
    n = m.nrows
    offset = 0
    shifts_r = []
    for row in m.entries:
        lows = [x.low for x in row if x.coeffs]
        s = min(lows) if lows else 0
        shifts_r.append(s)
        offset += s
    shifts_c = []
    for j in range(n):
        lows = [m.entries[i][j].low - shifts_r[i] for i in range(n) if m.entries[i][j].coeffs]
        s = min(lows) if lows else 0
        shifts_c.append(s)
        offset += s
    dense = []
    for i, row in enumerate(m.entries):
        out = []
        for j, x in enumerate(row):
            if not x.coeffs:
                out.append([])
            else:
                pad = x.low - shifts_r[i] - shifts_c[j]
                out.append([0] * pad + list(x.coeffs))
        dense.append(out)
    return offset, dense


def _degree_bound(dense):
    n = len(dense)
    row_deg = sum(max((len(x) - 1 for x in row if x), default=0) for row in dense)
    col_deg = sum(max((len(dense[i][j]) - 1 for i in range(n) if dense[i][j]), default=0)
                  for j in range(n))
    return min(row_deg, col_deg)


def _det_int_multimodular(dense, backend=None):
    """Determinant (ascending coefficients) of an integer polynomial matrix."""
    n = len(dense)
    D = _degree_bound(dense)
    bound = 1
    for row in dense:
        bound *= sum(sum(abs(c) for c in x) for x in row)
    if bound == 0:
        return []
    flat = [x for row in dense for x in row]
    modulus = 1
    result = [0] * (D + 1)
    for p in _primes_below_2_31():
        res = kernels.det_poly_mod([[c % p for c in x] for x in flat], n, D + 1, p, backend)
        if modulus == 1:
            result = res
        else:
            # incremental CRT: x = r mod M, x = s mod p
            inv = pow(modulus % p, -1, p)
            result = [r + modulus * (((s - r) * inv) % p) for r, s in zip(result, res)]
        modulus *= p
        if modulus > 2 * bound:
            break
    half = modulus // 2
    return _poly.trim([c - modulus if c > half else c for c in result])


def _det_bareiss(dense, p=None):
    """Fraction-free elimination over Z[t] (``p=None``) or GF(p)[t]."""
    a = [[list(x) for x in row] for row in dense]
    n = len(a)
    if n == 0:
        return [1]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return []
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _poly.sub(_poly.mul(akk, a[i][j], p), _poly.mul(a[i][k], a[k][j], p), p)
                if p is None:
                    a[i][j] = _poly.exact_div_int(num, prev)
                else:
                    q, r = _poly.divmod_field(num, prev, p)
                    if r:
                        raise ArithmeticError("Bareiss step was not exact")
                    a[i][j] = q
            a[i][k] = []
        prev = akk
    out = a[n - 1][n - 1]
    if sign < 0:
        out = [-c % p if p else -c for c in out]
    return _poly.trim(out)


def det_exact(m: ExactMatrix, strategy: str = "auto", backend=None) -> LaurentPolynomial:
    """Exact determinant of a square Laurent-polynomial matrix.

    ``strategy`` is ``"auto"`` (multi-modular evaluation/interpolation where
    possible) or ``"bareiss"``. The result does not depend on the strategy.
    """
    if m.nrows != m.ncols:
        raise ValueError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    dom = m.domain
    n = m.nrows
    if n == 0:
        return LaurentPolynomial.constant(dom, 1)
    if any(all(not x.coeffs for x in row) for row in m.entries):
        return LaurentPolynomial.zero(dom)
    offset, dense = _strip_monomials(m)

    if dom.kind == PRIME_FIELD:
        p = dom.p
        D = _degree_bound(dense)
        if strategy == "bareiss" or p <= D:
            coeffs = _det_bareiss(dense, p)
        else:
            flat = [x for row in dense for x in row]
            coeffs = kernels.det_poly_mod(flat, n, D + 1, p, backend)
        return LaurentPolynomial._raw(dom, coeffs, offset)

    scale = Fraction(1)
    if dom.kind == RATIONALS:
        int_rows = []
        for row in dense:
            L = 1
            for x in row:
                for c in x:
                    L = lcm(L, c.denominator)
            scale /= L
            int_rows.append([[int(c * L) for c in x] for x in row])
        dense = int_rows
    if strategy == "bareiss":
        coeffs = _det_bareiss(dense)
    else:
        coeffs = _det_int_multimodular(dense, backend)
    if dom.kind == INTEGERS:
        return LaurentPolynomial._raw(dom, coeffs, offset)
    return LaurentPolynomial(dom, [c * scale for c in coeffs], offset)
