"""Independent reference implementations used as test oracles.

Everything here recomputes a quantity through a different route than
the package takes: per-message re-encoding instead of Gray walks,
digit-list arithmetic written from scratch instead of table lookups,
root scans instead of Frobenius-based irreducibility.
"""

from __future__ import annotations


def naive_min_distance(rows, n: int) -> int:
    """Minimum nonzero-codeword weight by encoding every message."""
    k = len(rows)
    best = n + 1
    for msg in range(1, 1 << k):
        cw = 0
        for j in range(k):
            if (msg >> j) & 1:
                cw ^= rows[j]
        w = bin(cw).count("1")
        if w < best:
            best = w
    return best


def naive_weight_hist(rows, n: int) -> list[int]:
    hist = [0] * (n + 1)
    k = len(rows)
    for msg in range(1 << k):
        cw = 0
        for j in range(k):
            if (msg >> j) & 1:
                cw ^= rows[j]
        hist[bin(cw).count("1")] += 1
    return hist


def ref_ext_mul(p: int, m: int, modulus, a: int, b: int) -> int:
    """GF(p^m) product on indices, written independently of the field
    module: digit lists, convolution, then long reduction."""
    def digits(v):
        out = []
        for _ in range(m):
            out.append(v % p)
            v //= p
        return out

    da, db = digits(a), digits(b)
    prod = [0] * (2 * m)
    for i in range(m):
        for j in range(m):
            prod[i + j] += da[i] * db[j]
    prod = [c % p for c in prod]
    for top in range(2 * m - 1, m - 1, -1):
        c = prod[top]
        if c:
            prod[top] = 0
            for j in range(m + 1):
                prod[top - m + j] = (prod[top - m + j] - c * modulus[j]) % p
    out = 0
    for c in reversed(prod[:m]):
        out = out * p + c
    return out


def oracle_irreducible(f) -> bool:
    """Degree <= 4 irreducibility by root scans and quadratic division,
    with no Frobenius computation anywhere."""
    d = f.degree
    field = f.field
    if d < 1:
        raise ValueError("needs degree >= 1")
    if d == 1:
        return True
    if any(f(x) == 0 for x in range(field.q)):
        return False
    if d <= 3:
        return True
    if d == 4:
        from shadowcodes.poly import Poly

        for c1 in range(field.q):
            for c0 in range(field.q):
                g = Poly(field, (c0, c1, 1))
                if any(g(x) == 0 for x in range(field.q)):
                    continue
                if (f % g).is_zero:
                    return False
        return True
    raise ValueError("oracle stops at degree 4")


def moebius(n: int) -> int:
    out = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            out = -out
        f += 1
    if n > 1:
        out = -out
    return out


def necklace_count(q: int, d: int) -> int:
    """Number of monic irreducible degree-d polynomials over GF(q)."""
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += moebius(d // e) * q**e
    return total // d
