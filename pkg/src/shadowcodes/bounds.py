"""Competitor bounds, threshold analysis, and figure tables.

Gathered here: Delsarte-Goethals code parameters, the Gilbert-Varshamov
existence bound in exact big-integer arithmetic, the closed-form
distance floors of the two shadow families, the cubic

    S(n, k) = k^3 + (n-6) k^2 + (10-2n) k + (2n-5-n^2)

whose sign decides whether the degree <= 1 family reaches dimension k
at length n (S < 0 exactly when the distance floor is positive), its
root k0(n) by bisection cross-checked against the closed cubic formula,
and the rate/relative-distance tables behind the comparison figures.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from .binary import exact_min_distance, random_linear_code, sampled_min_distance_upper
from .errors import BadParameters, BadShape
from .field import find_odd_prime_power
from .shadow import construct_deg1_nk

DEFAULT_SEED = 1729


# -- competitor parameter formulas ---------------------------------------


def dg_params(m: int, d: int) -> tuple[int, int, int]:
    """Delsarte-Goethals DG(m, d) as (length, log2 size, min distance).

    Requires even m = 2t + 2 >= 4 and 1 <= d <= t + 1.  d = t + 1 is the
    Kerdock code; d = 1 is second-order Reed-Muller."""
    if m < 4 or m % 2:
        raise BadParameters(f"DG needs even m >= 4, got {m}")
    t = (m - 2) // 2
    if not 1 <= d <= t + 1:
        raise BadParameters(f"DG(m={m}) needs 1 <= d <= {t + 1}, got {d}")
    n = 1 << m
    log2_size = (2 * t + 1) * (t - d + 2) + 2 * t + 3
    dmin = (1 << (m - 1)) - (1 << (m - 1 - d))
    return n, log2_size, dmin


def rm2_dim(m: int) -> int:
    """Dimension of second-order Reed-Muller of length 2^m."""
    if m < 2:
        raise BadParameters(f"need m >= 2, got {m}")
    return 1 + m + m * (m - 1) // 2


def gv_min_distance(n: int, k: int) -> int:
    """Largest d with sum_{i <= d-2} C(n-1, i) < 2^(n-k), all exact.

    A binary linear (n, k) code with that minimum distance exists."""
    if not 0 < k <= n:
        raise BadParameters(f"need 0 < k <= n, got k={k}, n={n}")
    target = 1 << (n - k)
    d = 1
    total = 0
    while d < n:
        nxt = total + math.comb(n - 1, d - 1)
        if nxt < target:
            total = nxt
            d += 1
        else:
            break
    return d


def gv_min_distance_log(n: int, k: int) -> int:
    """Same walk in log space, for lengths where exact sums get costly.

    Ties very close to the threshold can land one off; use
    gv_min_distance when n permits."""
    if not 0 < k <= n:
        raise BadParameters(f"need 0 < k <= n, got k={k}, n={n}")
    target = (n - k) * math.log(2)
    d = 1
    total = None  # log of the running sum; None stands for log(0)
    term = 0.0  # log C(n-1, d-1)
    while d < n:
        nxt = term if total is None else _log_add(total, term)
        if nxt < target:
            total = nxt
            d += 1
            term += math.log((n - d + 1) / (d - 1))
        else:
            break
    return d


def _log_add(a: float, b: float) -> float:
    hi, lo = (a, b) if a >= b else (b, a)
    return hi + math.log1p(math.exp(lo - hi))


# -- shadow-family distance floors ----------------------------------------


def shadow_lb_deg1(n: int, k: int) -> float:
    """(n - k + 1)/2 - (sqrt(n + k - 1)/2)(k - 2), the degree <= 1 floor."""
    if n < 1 or k < 1:
        raise BadParameters(f"need n, k >= 1, got n={n}, k={k}")
    return (n - k + 1) / 2 - (math.sqrt(n + k - 1) / 2) * (k - 2)


def shadow_lb_deg2(n: int, k: int) -> float:
    """n/2 - (sqrt(n)/2)(2k - 1), the degree 2 floor (length = field order)."""
    if n < 1 or k < 1:
        raise BadParameters(f"need n, k >= 1, got n={n}, k={k}")
    return n / 2 - (math.sqrt(n) / 2) * (2 * k - 1)


def deg2_max_k(n: int) -> int:
    """Largest k with a positive degree 2 floor: k <= ceil((sqrt(n)-1)/2)."""
    return math.ceil((math.sqrt(n) - 1) / 2)


# -- the dimension-threshold cubic ------------------------------------------


def s_cubic(n: float, k: float):
    """Sign decides degree <= 1 feasibility: S < 0 iff the floor is positive."""
    return k**3 + (n - 6) * k**2 + (10 - 2 * n) * k + (2 * n - 5 - n * n)


@dataclass(frozen=True)
class CubicRecord:
    n: int
    xi: float
    omega_sq: int
    k0: float
    k0_cardano: float


def _cardano_root(n: int) -> tuple[float, int, float]:
    """The root of S(n, .) in (0, n) from the closed cubic formula."""
    xi = (-2 * n**3 + 45 * n**2 - 72 * n + 27) / 54
    rad = -12 * n**3 + 177 * n**2 - 174 * n - 15  # exact integer radicand
    shift = (n - 6) / 3
    roots = []
    if rad >= 0:
        om = (n - 1) * math.sqrt(rad) / 18
        roots.append(_real_cbrt(xi + om) + _real_cbrt(xi - om) - shift)
    else:
        om = complex(0.0, (n - 1) * math.sqrt(-rad) / 18)
        u = (complex(xi) + om) ** (1.0 / 3.0)
        zeta = cmath.exp(2j * cmath.pi / 3)
        for j in range(3):
            roots.append(2 * (u * zeta**j).real - shift)
    inside = [r for r in roots if 0 < r < n]
    root = min(inside, key=lambda r: abs(s_cubic(n, r))) if inside else roots[0]
    return xi, rad, root


def _real_cbrt(v: float) -> float:
    return math.copysign(abs(v) ** (1.0 / 3.0), v)


def k0(n: int) -> CubicRecord:
    """Largest real k with S(n, k) = 0, bisected to 1e-10 and
    cross-checked against the closed formula to 1e-6."""
    if n < 3:
        raise BadParameters(f"the threshold needs n >= 3, got {n}")
    lo, hi = 0.0, float(n)  # S(n,0) < 0 and S(n,n) > 0 for n >= 3
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if s_cubic(n, mid) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-10:
            break
    root = 0.5 * (lo + hi)
    xi, rad, cardano = _cardano_root(n)
    if abs(cardano - root) > 1e-6:
        raise AssertionError(
            f"bisection {root} and closed form {cardano} disagree at n={n}"
        )
    return CubicRecord(n, xi, rad, root, cardano)


# -- concatenated-family formulas -------------------------------------------


def fourth_power_exponent(n: int) -> int | None:
    """m with n = 4^m, else None."""
    if n < 4 or n & (n - 1):
        return None
    e = n.bit_length() - 1
    return e // 2 if e % 2 == 0 else None


def deltacon(n: int, k: int) -> float:
    """Concatenated relative-distance floor at length n = 4^m, dimension k:
    1/2 - (k - log2(sqrt(n)) - 1)/(sqrt(n)(log2(n) + 2)).

    Exact for k a multiple of m + 1 (whole outer symbols); evaluated
    as written otherwise (see deltacon_k_aligned)."""
    m = fourth_power_exponent(n)
    if m is None:
        raise BadShape(f"length {n} is not a power of 4")
    return 0.5 - (k - m - 1) / ((1 << m) * (2 * m + 2))


def deltacon_k_aligned(n: int, k: int) -> bool:
    """True when k corresponds to a whole number of outer symbols."""
    m = fourth_power_exponent(n)
    if m is None:
        raise BadShape(f"length {n} is not a power of 4")
    return k % (m + 1) == 0


def deltash_family(n: int, a: float) -> float:
    """Relative degree <= 1 floor at dimension floor(n^a), 0 < a <= 1/2."""
    if not 0 < a <= 0.5:
        raise BadShape(f"the sublinear exponent must sit in (0, 1/2], got {a}")
    k = math.floor(n**a)
    return shadow_lb_deg1(n, max(k, 1)) / n


def section6_margins(ms=range(2, 11), steps: int = 100):
    """Concat floor (1 - R)/2 against the single-letter floor
    (1 - R(m+1))/2 on an outer-rate grid; the first dominates strictly
    away from R = 0."""
    out = []
    for m in ms:
        for j in range(1, steps + 1):
            r = Fraction(j, steps * (m + 1))  # outer rate in (0, 1/(m+1)]
            lhs = (1 - r) / 2
            rhs = (1 - r * (m + 1)) / 2
            out.append((m, r, lhs, rhs))
    return out


# -- figure tables -------------------------------------------------------


@dataclass(frozen=True)
class BoundPoint:
    scheme: str
    n: int
    k: float
    rate: float
    delta: float
    kind: str  # lower_bound | exact | existence | upper_bound | approximate


FIG_FIELDNAMES = ["scheme", "n", "k", "rate", "delta", "kind"]


def fig1_rows(n_min: int = 10, n_max: int = 100000, points: int = 50):
    """Threshold root k0 against sqrt(n) + 1/2 on a log grid."""
    if not 3 <= n_min < n_max:
        raise BadParameters("need 3 <= n_min < n_max")
    grid = sorted(
        {
            max(3, round(math.exp(t)))
            for t in _linspace(math.log(n_min), math.log(n_max), points)
        }
    )
    rows = []
    for n in grid:
        rec = k0(n)
        rows.append({"n": n, "k0": rec.k0, "approx": math.sqrt(n) + 0.5})
    return rows


def _linspace(a: float, b: float, count: int):
    if count < 2:
        return [a]
    step = (b - a) / (count - 1)
    return [a + i * step for i in range(count)]


def fig3_rows(
    n: int = 1024,
    seed: int = DEFAULT_SEED,
    exact_cap: int = 16,
    random_ks=(8, 12, 16),
    with_exact: bool = True,
    sample_trials: int = 20000,
):
    """Rate/relative-distance table comparing every scheme at length n."""
    rows: list[BoundPoint] = []
    kmax1 = math.floor(k0(n).k0)
    for k in range(2, kmax1 + 1):
        rows.append(
            BoundPoint(
                "shadow_deg1", n, k, k / n, shadow_lb_deg1(n, k) / n, "lower_bound"
            )
        )
    for k in range(1, deg2_max_k(n) + 1):
        rows.append(
            BoundPoint(
                "shadow_deg2", n, k, k / n, shadow_lb_deg2(n, k) / n, "lower_bound"
            )
        )
    m4 = fourth_power_exponent(n)
    if m4 is not None:
        big_n = 1 << m4
        for big_k in range(1, big_n + 1):
            k = big_k * (m4 + 1)
            d_lb = (big_n - big_k + 1) << (m4 - 1)
            rows.append(BoundPoint("rsrm", n, k, k / n, d_lb / n, "lower_bound"))
    if n >= 16 and n & (n - 1) == 0:
        e = n.bit_length() - 1
        if e % 2 == 0:
            t = (e - 2) // 2
            for d in range(1, t + 2):
                _, log2m, dmin = dg_params(e, d)
                rows.append(BoundPoint("dg", n, log2m, log2m / n, dmin / n, "exact"))
    if n >= 2 and n & (n - 1) == 0:
        e = n.bit_length() - 1
        rows.append(BoundPoint("rm1", n, e + 1, (e + 1) / n, 0.5, "exact"))
        if e >= 2:
            k2 = rm2_dim(e)
            rows.append(BoundPoint("rm2", n, k2, k2 / n, 0.25, "exact"))
    if n <= 4096:
        gv_fn, gv_kind, gv_ks = gv_min_distance, "existence", range(1, n + 1)
    else:
        # exact big-integer sums get costly; thin the grid and flag the
        # log-domain values as approximate
        gv_fn, gv_kind = gv_min_distance_log, "approximate"
        gv_ks = range(1, n + 1, max(1, n // 512))
    for k in gv_ks:
        rows.append(BoundPoint("gv", n, k, k / n, gv_fn(n, k) / n, gv_kind))
    for k in random_ks:
        code = random_linear_code(n, k, seed * 1000 + k)
        if k <= exact_cap:
            d = exact_min_distance(code)
            kind = "exact"
        else:
            d = sampled_min_distance_upper(code, sample_trials, seed * 1000 + k)
            kind = "upper_bound"
        rows.append(BoundPoint("random", n, k, k / n, d / n, kind))
    if with_exact:
        for k in range(2, exact_cap + 1):
            if find_odd_prime_power(n + k - 1) is None:
                continue
            code = construct_deg1_nk(n, k)
            d = exact_min_distance(code.generator())
            rows.append(BoundPoint("shadow_exact", n, k, k / n, d / n, "exact"))
    return rows


def fig4_rows(a: float = 0.49, m_min: int = 2, m_max: int = 10):
    """Both families at dimension floor(n^a) across n = 4^m."""
    if not 0 < a <= 0.5:
        raise BadShape(f"the sublinear exponent must sit in (0, 1/2], got {a}")
    if m_min < 2:
        raise BadParameters("the comparison starts at n = 16 (m >= 2)")
    rows: list[BoundPoint] = []
    for m in range(m_min, m_max + 1):
        n = 1 << (2 * m)
        k = math.floor(n**a)
        rows.append(BoundPoint("rsrm", n, k, k / n, deltacon(n, k), "lower_bound"))
        rows.append(
            BoundPoint(
                "shadow_deg1", n, k, k / n, deltash_family(n, a), "lower_bound"
            )
        )
    return rows


# -- serialization ---------------------------------------------------------


def rows_to_csv(rows, config: dict | None = None) -> str:
    """CSV text with the generating parameters echoed as # comments."""
    buf = io.StringIO()
    if config:
        for key in sorted(config):
            buf.write(f"# {key}={config[key]}\n")
    dicts = [asdict(r) if isinstance(r, BoundPoint) else r for r in rows]
    names = FIG_FIELDNAMES if dicts and "scheme" in dicts[0] else list(dicts[0])
    writer = csv.DictWriter(buf, fieldnames=names)
    writer.writeheader()
    writer.writerows(dicts)
    return buf.getvalue()


def rows_to_json(rows, config: dict | None = None) -> str:
    dicts = [asdict(r) if isinstance(r, BoundPoint) else r for r in rows]
    return json.dumps({"config": config or {}, "rows": dicts}, indent=2)
