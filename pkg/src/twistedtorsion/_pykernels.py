"""Pure-Python determinant kernels over GF(p).

These mirror ``_ckernels.pyx`` exactly and are used when the compiled
extension is unavailable, or when ``p`` does not fit the 31-bit fast path.
"""

MAX_FAST_PRIME = 2**31


def det_mod(rows, p):
    """Determinant of a square integer matrix modulo the prime ``p``."""
    a = [[x % p for x in row] for row in rows]
    n = len(a)
    det = 1
    for col in range(n):
        piv = col
        while piv < n and a[piv][col] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        pivot_row = a[col]
        pv = pivot_row[col]
        det = det * pv % p
        inv = pow(pv, p - 2, p)
        for r in range(col + 1, n):
            row = a[r]
            f = row[col]
            if f:
                f = f * inv % p
                for c in range(col, n):
                    row[c] = (row[c] - f * pivot_row[c]) % p
    return det % p


def interpolate_mod(xs, ys, p):
    """Coefficients (ascending) of the unique polynomial of degree < len(xs)
    through the points ``(xs[i], ys[i])`` over GF(p)."""
    n = len(xs)
    dd = [y % p for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) * pow((xs[i] - xs[i - j]) % p, p - 2, p) % p
    coeffs = [0] * n
    for i in range(n - 1, -1, -1):
        # coeffs = coeffs * (t - xs[i]) + dd[i]
        xi = xs[i]
        for k in range(n - 1, 0, -1):
            coeffs[k] = (coeffs[k - 1] - xi * coeffs[k]) % p
        coeffs[0] = (dd[i] - xi * coeffs[0]) % p
    return coeffs


def det_poly_mod(entries, n, npoints, p):
    """Determinant of an ``n x n`` polynomial matrix over GF(p).

    ``entries`` is the row-major list of ascending coefficient lists. The
    determinant must have degree below ``npoints``; it is recovered from its
    values at ``0, 1, ..., npoints - 1``.
    """
    if n == 0:
        return [1] + [0] * (npoints - 1)
    values = []
    for x in range(npoints):
        mat = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = 0
                for c in reversed(entries[i * n + j]):
                    acc = (acc * x + c) % p
                row.append(acc)
            mat.append(row)
        values.append(det_mod(mat, p))
    return interpolate_mod(list(range(npoints)), values, p)
