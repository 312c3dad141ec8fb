"""Binary linear codes as integer bitsets.

A length-n vector is an int with bit j holding coordinate j; a code is
the row span of a tuple of such ints.  Exhaustive scans walk messages
in Gray-code order so each step is one row XOR and one popcount.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from .errors import DimensionTooLarge, LengthMismatch

ENUM_BUDGET_LOG2 = 28
WEIGHT_DIST_BUDGET_LOG2 = 24


def gf2_rank(rows) -> int:
    """Rank of the GF(2) row space."""
    basis: dict[int, int] = {}
    r = 0
    for row in rows:
        cur = row
        while cur:
            pivot = cur.bit_length() - 1
            if pivot in basis:
                cur ^= basis[pivot]
            else:
                basis[pivot] = cur
                r += 1
                break
    return r


class BinaryCode:
    """Generator rows (independent) plus the ambient length."""

    __slots__ = ("rows", "n")

    def __init__(self, rows, n: int):
        rows = tuple(rows)
        for row in rows:
            if not 0 <= row < (1 << n):
                raise LengthMismatch(f"row {row:#x} does not fit in {n} columns")
        if gf2_rank(rows) != len(rows):
            raise ValueError("generator rows are dependent; use from_span")
        self.rows = rows
        self.n = n

    @classmethod
    def from_span(cls, rows, n: int) -> "BinaryCode":
        """Keep a maximal independent subset, in first-seen order."""
        kept = []
        basis: dict[int, int] = {}
        for row in rows:
            cur = row
            while cur:
                pivot = cur.bit_length() - 1
                if pivot in basis:
                    cur ^= basis[pivot]
                else:
                    basis[pivot] = cur
                    kept.append(row)
                    break
        return cls(kept, n)

    @property
    def k(self) -> int:
        return len(self.rows)

    def encode(self, message: int) -> int:
        if not 0 <= message < (1 << self.k):
            raise LengthMismatch(f"message needs {self.k} bits")
        cw = 0
        m = message
        while m:
            low = m & -m
            cw ^= self.rows[low.bit_length() - 1]
            m ^= low
        return cw

    def __repr__(self) -> str:
        return f"BinaryCode(n={self.n}, k={self.k})"


def _segment_min_weight(rows: tuple[int, ...], lo: int, hi: int) -> int:
    """Min codeword weight over messages gray(i) for i in [lo, hi),
    skipping the zero message (only i == 0 maps to it)."""
    g = lo ^ (lo >> 1)
    cw = 0
    j = 0
    while g >> j:
        if (g >> j) & 1:
            cw ^= rows[j]
        j += 1
    best = cw.bit_count() if lo else 1 << 62
    for i in range(lo + 1, hi):
        cw ^= rows[(i & -i).bit_length() - 1]
        w = cw.bit_count()
        if w < best:
            best = w
    return best


def exact_min_distance(code: BinaryCode, workers: int = 1) -> int:
    """Minimum nonzero codeword weight by full enumeration."""
    k = code.k
    if k == 0:
        raise ValueError("the trivial code has no nonzero codeword")
    if k > ENUM_BUDGET_LOG2:
        raise DimensionTooLarge(
            f"2**{k} codewords exceed the enumeration budget 2**{ENUM_BUDGET_LOG2};"
            " use sampled_min_distance_upper"
        )
    total = 1 << k
    if workers <= 1 or total < (1 << 18):
        return _segment_min_weight(code.rows, 0, total)
    chunk = -(-total // workers)
    spans = [(i, min(i + chunk, total)) for i in range(0, total, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futs = [pool.submit(_segment_min_weight, code.rows, lo, hi) for lo, hi in spans]
        return min(f.result() for f in futs)


def sampled_min_distance_upper(code: BinaryCode, trials: int, seed: int) -> int:
    """Upper bound on the minimum distance from random nonzero messages."""
    if code.k == 0:
        raise ValueError("the trivial code has no nonzero codeword")
    rng = random.Random(seed)
    top = 1 << code.k
    best = code.n + 1
    for _ in range(trials):
        w = code.encode(rng.randrange(1, top)).bit_count()
        if w < best:
            best = w
    return best


def weight_distribution(code: BinaryCode) -> list[int]:
    """Histogram over weights 0..n of all 2^k codewords."""
    if code.k > WEIGHT_DIST_BUDGET_LOG2:
        raise DimensionTooLarge(
            f"2**{code.k} codewords exceed the histogram budget"
            f" 2**{WEIGHT_DIST_BUDGET_LOG2}"
        )
    hist = [0] * (code.n + 1)
    cw = 0
    hist[0] = 1
    for i in range(1, 1 << code.k):
        cw ^= code.rows[(i & -i).bit_length() - 1]
        hist[cw.bit_count()] += 1
    return hist


def random_linear_code(n: int, k: int, seed: int) -> BinaryCode:
    """Uniform k x n generator, resampled in full until it has rank k."""
    if not 0 < k <= n:
        raise LengthMismatch(f"need 0 < k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    while True:
        rows = [rng.getrandbits(n) for _ in range(k)]
        if gf2_rank(rows) == k:
            return BinaryCode(rows, n)


def row_to_hex(row: int, n: int) -> str:
    """Fixed-width hex of a length-n row; bit j of the int is column j."""
    return format(row, f"0{max(1, (n + 3) // 4)}x")


def row_from_hex(text: str) -> int:
    return int(text, 16)


def weight_histogram_csv(hist: list[int]) -> str:
    lines = ["weight,count"]
    lines += [f"{w},{c}" for w, c in enumerate(hist) if c]
    return "\n".join(lines) + "\n"
