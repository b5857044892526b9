# Dense univariate polynomial helpers on ascending coefficient lists.
# Used for gcd cancellation and fraction-free elimination; no Laurent shifts here.

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def mul(a, b, p=None):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    if p is not None:
        out = [c % p for c in out]
    return trim(out)


def sub(a, b, p=None):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    if p is not None:
        out = [c % p for c in out]
    return trim(out)


def divmod_field(a, b, p=None):
    """Quotient and remainder over Q (Fractions) or GF(p)."""
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if p is None:
        inv_lead = 1 / Fraction(b[-1])
    else:
        inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv_lead
        if p is not None:
            c %= p
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                r[k + j] -= c * bj
                if p is not None:
                    r[k + j] %= p
    return trim(q), trim(r[: len(b) - 1])


def exact_div_int(a, b):
    """``a / b`` in Z[t]; raises if the division is not exact."""
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    for k in range(len(a) - len(b), -1, -1):
        num = r[k + len(b) - 1]
        c, rem = divmod(num, lead)
        if rem:
            raise ArithmeticError("inexact integer polynomial division")
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                r[k + j] -= c * bj
    if any(r):
        raise ArithmeticError("inexact integer polynomial division")
    return trim(q)


def content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def primitive_int(a):
    """Scale a rational polynomial to a primitive integer one; returns ``(scale, poly)``
    with ``poly == scale * a`` and positive leading coefficient untouched (sign kept)."""
    a = trim(a)
    if not a:
        return Fraction(1), []
    den = 1
    for c in a:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in a]
    g = content(ints)
    return Fraction(den, g), [c // g for c in ints]


def gcd_int(a, b):
    """Primitive gcd in Z[t] via the primitive PRS; leading coefficient positive."""
    a = primitive_int(a)[1]
    b = primitive_int(b)[1]
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder
        r = list(a)
        lb, db = b[-1], len(b) - 1
        while len(r) - 1 >= db and r:
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [c * lb for c in r]
            for j, bj in enumerate(b):
                r[shift + j] -= lr * bj
            r = trim(r)
        a, b = b, (primitive_int(r)[1] if r else [])
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def gcd_mod(a, b, p):
    """Monic gcd in GF(p)[t]."""
    a = trim([c % p for c in a])
    b = trim([c % p for c in b])
    while b:
        a, b = b, divmod_field(a, b, p)[1]
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]
