"""Random inputs as plain data: words, automorphisms, reps, complexes, matrices."""

from __future__ import annotations

import random

NAMES = "abcdefgh"


def random_letters(rng: random.Random, ngens: int, length: int):
    return [(rng.randrange(ngens), rng.choice((1, -1))) for _ in range(length)]


def _reduce(letters):
    out = []
    for x in letters:
        if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
            out.pop()
        else:
            out.append(x)
    return out


def _inv(letters):
    return [(i, -e) for i, e in reversed(letters)]


def word_string(letters, names=NAMES):
    if not letters:
        return "1"
    return " ".join(names[i] if e > 0 else f"{names[i]}^-1" for i, e in letters)


def random_automorphism(rng: random.Random, rank: int, moves: int = 4, max_len: int = 10):
    """Images of the basis under a random product of Nielsen moves (as letter lists)."""
    images = [[(i, 1)] for i in range(rank)]
    done = 0
    while done < moves:
        i, j = rng.sample(range(rank), 2)
        kind = rng.randrange(4)
        new = list(images)
        if kind == 0:
            new[i] = _reduce(images[i] + images[j])
        elif kind == 1:
            new[i] = _reduce(images[j] + images[i])
        elif kind == 2:
            new[i] = _reduce(images[i] + _inv(images[j]))
        else:
            new[i] = _inv(images[i])
        if max(len(w) for w in new) > max_len:
            continue
        images = new
        done += 1
    return images


def abelianized(images, rank):
    M = [[0] * rank for _ in range(rank)]
    for i, w in enumerate(images):
        for g, e in w:
            M[i][g] += e
    return M


def _kernel_vector(A, p):
    """A nonzero vector in the kernel of ``A`` mod ``p`` or None."""
    n = len(A)
    m = [[x % p for x in row] for row in A]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((k for k in range(r, n) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for k in range(n):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [(x - f * y) % p for x, y in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    v = [0] * n
    v[free[0]] = 1
    for row, c in zip(m, pivots):
        v[c] = -row[free[0]] % p
    return v


AFFINE_PRIMES = (7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79, 83)


def affine_rep(rng: random.Random, images, rank, primes=AFFINE_PRIMES):
    """A k=2 representation of the mapping torus over GF(p), determinants +-1.

    Fiber generators go to ``[[1, a_i], [0, 1]]`` with ``a`` an eigenvector of
    the abelianized monodromy, and the stable letter to ``c [[lam, b], [0, 1]]``
    with ``c^2 lam = +-1``. Returns ``(p, {name: matrix})`` or None.
    """
    M = abelianized(images, rank)
    for p in primes:
        lams = list(range(1, p))
        rng.shuffle(lams)
        for lam in lams:
            A = [[M[i][j] - (lam if i == j else 0) for j in range(rank)] for i in range(rank)]
            a = _kernel_vector(A, p)
            if a is None:
                continue
            c = next((c for c in range(1, p) if (c * c * lam) % p in (1, p - 1)), None)
            if c is None:
                continue
            b = rng.randrange(p)
            rep = {NAMES[i]: [[1, a[i]], [0, 1]] for i in range(rank)}
            rep["mu"] = [[c * lam % p, c * b % p], [0, c]]
            return p, rep
    return None


def stable_letter_rep(rng: random.Random, rank):
    """k=2 integral rep: fiber generators trivial, stable letter in GL(2, Z)."""
    while True:
        a, b, c = (rng.randint(-3, 3) for _ in range(3))
        # choose d with ad - bc = +-1 when possible
        for target in (1, -1):
            if a != 0 and (target + b * c) % a == 0:
                d = (target + b * c) // a
                rep = {NAMES[i]: [[1, 0], [0, 1]] for i in range(rank)}
                rep["mu"] = [[a, b], [c, d]]
                return rep


# -- Laurent data --------------------------------------------------------------

def random_laurent_map(rng: random.Random, span=2, coeff=4, field="integers"):
    if rng.random() < 0.15:
        return {}
    lo = rng.randint(-2, 2)
    out = {}
    for e in range(lo, lo + rng.randint(0, span) + 1):
        if field == "rationals" and rng.random() < 0.3:
            c = f"{rng.randint(-coeff, coeff)}/{rng.randint(2, 5)}"
        else:
            c = rng.randint(-coeff, coeff)
        if c not in (0, "0"):
            out[str(e)] = c
    return out


def random_laurent_matrix(rng: random.Random, n, field="integers", span=2):
    return [[random_laurent_map(rng, span, field=field) for _ in range(n)] for _ in range(n)]


# -- acyclic complexes -------------------------------------------------------

def _mul(A, B):
    """Product of matrices of exponent maps with integer coefficients."""
    n, m, r = len(A), len(B), (len(B[0]) if B else 0)
    out = []
    for i in range(n):
        row = []
        for j in range(r):
            acc = {}
            for k in range(m):
                for e1, c1 in A[i][k].items():
                    for e2, c2 in B[k][j].items():
                        e = int(e1) + int(e2)
                        acc[e] = acc.get(e, 0) + c1 * c2
            row.append({str(e): c for e, c in sorted(acc.items()) if c})
        out.append(row)
    return out


def _elementary(rng, n):
    """Random unimodular matrix over Z[t^+-1] and its inverse."""
    E = [[{"0": 1} if i == j else {} for j in range(n)] for i in range(n)]
    Einv = [[{"0": 1} if i == j else {} for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(0, 3)):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c, e = rng.choice((1, -1, 2, -2)), rng.randint(-1, 1)
        S = [[{"0": 1} if a == b else {} for b in range(n)] for a in range(n)]
        Sinv = [[{"0": 1} if a == b else {} for b in range(n)] for a in range(n)]
        S[i][j] = {str(e): c}
        Sinv[i][j] = {str(e): -c}
        E = _mul(S, E)
        Einv = _mul(Einv, Sinv)
    return E, Einv


def random_dims(rng: random.Random, max_dim=5):
    while True:
        n3 = rng.randint(0, 2)
        r2 = rng.randint(0, 3)
        n0 = rng.randint(0, 2)
        dims = (n3, n3 + r2, r2 + n0, n0)
        if max(dims) <= max_dim and sum(dims) > 0:
            return dims


def random_acyclic_complex(rng: random.Random, dims=None):
    """Based acyclic complex ``(dims, B3, B2, B1)`` with exponent-map entries.

    Built from a direct sum of elementary complexes ``0 -> R -f-> R -> 0``
    with nonzero Laurent ``f``, followed by random unimodular changes of basis.
    """
    n3, n2, n1, n0 = dims or random_dims(rng)
    r2 = n2 - n3

    def nz():
        while True:
            m = random_laurent_map(rng, span=1, coeff=3)
            if m:
                return m

    B3 = [[{} for _ in range(n3)] for _ in range(n2)]
    for i in range(n3):
        B3[i][i] = nz()
    B2 = [[{} for _ in range(n2)] for _ in range(n1)]
    for i in range(r2):
        B2[i][n3 + i] = nz()
    B1 = [[{} for _ in range(n1)] for _ in range(n0)]
    for i in range(n0):
        B1[i][r2 + i] = nz()
    P = {d: _elementary(rng, n) for d, n in zip((3, 2, 1, 0), (n3, n2, n1, n0))}
    B3 = _mul(_mul(P[2][0], B3), P[3][1]) if n2 and n3 else B3
    B2 = _mul(_mul(P[1][0], B2), P[2][1]) if n1 and n2 else B2
    B1 = _mul(_mul(P[0][0], B1), P[1][1]) if n0 and n1 else B1
    return (n3, n2, n1, n0), B3, B2, B1


def two_bridge_relator(p: int, q: int) -> str:
    """Relator ``a w b^-1 w^-1`` of the two-bridge knot ``p/q`` (p, q odd, coprime)."""
    letters = []
    for i in range(1, p):
        e = (-1) ** ((i * q) // p)
        letters.append((1 if i % 2 else 0, e))
    w = letters
    rel = [(0, 1)] + w + [(1, -1)] + _inv(w)
    return word_string(_reduce(rel), "ab")


def balanced_word(rng: random.Random, ngens: int, length: int):
    """Random reduced word whose exponent sum in every generator is zero."""
    w = random_letters(rng, ngens, length)
    sums = [0] * ngens
    for i, e in w:
        sums[i] += e
    for i, s in enumerate(sums):
        w += [(i, -1 if s > 0 else 1)] * abs(s)
    return _reduce(w)
