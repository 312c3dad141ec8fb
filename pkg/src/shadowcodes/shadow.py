"""Binary codes from quadratic-character evaluations of polynomials.

Over a field of odd order q, the parity map sends a nonzero element to
0 if it is a square and 1 otherwise; applying it pointwise to the
values of a polynomial P on an evaluation set E gives a length-|E|
binary row.  The parity map is a homomorphism onto (Z/2, +), so the
rows of a multiplicatively closed family are additively closed, and a
set B of generators (distinct monic irreducibles plus at most one
primitive constant) spans a linear code.

The distance guarantee is the surd

    delta(E, B) = |E| - q/2 - (sqrt(q)/2) (d_B - 1),   d_B = deg prod(B),

kept exact as a + b*sqrt(q) with rational a, b so positivity and
ceiling tests never go through floating point.

Two ready-made families:

* degree <= 1: B = {x - lam : lam outside E} plus a primitive constant,
  giving an (|E|, q - |E| + 1) code when delta > 0;
* degree 2: B = k distinct monic irreducible quadratics, E the whole
  field, giving a (q, k) code when delta > 0.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .binary import BinaryCode, gf2_rank, row_from_hex, row_to_hex
from .errors import (
    EvaluationSetIsFullField,
    ExhaustedSupply,
    EvenCharacteristic,
    FieldMismatch,
    NonpositiveDelta,
    ParameterNotAdmissible,
    VanishesOnE,
)
from .field import (
    Field,
    field_create,
    field_from_json,
    find_odd_prime_power,
    nearest_odd_prime_power,
)
from .poly import (
    Poly,
    all_monic_irreducibles,
    enumerate_monic_irreducibles,
    is_irreducible,
    is_squarefree_product,
    poly_from_text,
    poly_to_text,
    x_minus,
)


class Surd:
    """Exact a + b*sqrt(q) with rational a, b and integer q >= 0."""

    __slots__ = ("a", "b", "q", "root")

    def __init__(self, a, b, q: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.q = int(q)
        r = math.isqrt(self.q)
        self.root = r if r * r == self.q else None

    @property
    def is_exact(self) -> bool:
        return self.root is not None or self.b == 0

    def exact_value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError(f"sqrt({self.q}) is irrational")
        return self.a + self.b * (self.root if self.root is not None else 0)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.q)

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if self.root is not None:
            v = self.a + self.b * self.root
            return (v > 0) - (v < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: |a| vs |b| sqrt(q) decided on squares
        lhs, rhs = a * a, b * b * self.q
        if lhs == rhs:
            return 0
        return (1 if a > 0 else -1) if lhs > rhs else (1 if b > 0 else -1)

    def shifted(self, t) -> "Surd":
        return Surd(self.a - Fraction(t), self.b, self.q)

    def ceil(self) -> int:
        """Least integer t with value <= t, decided exactly."""
        t = math.ceil(float(self))
        while self.shifted(t).sign() > 0:
            t += 1
        while self.shifted(t - 1).sign() <= 0:
            t -= 1
        return t

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Surd)
            and self.a == other.a
            and self.b == other.b
            and self.q == other.q
        )

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.q))

    def __repr__(self) -> str:
        return f"Surd({self.a} + {self.b}*sqrt({self.q}))"

    def to_json(self) -> dict:
        return {
            "a": [self.a.numerator, self.a.denominator],
            "b": [self.b.numerator, self.b.denominator],
            "q": self.q,
            "value": float(self),
            "exact": self.is_exact,
        }


def surd_from_json(obj: dict) -> Surd:
    return Surd(
        Fraction(obj["a"][0], obj["a"][1]),
        Fraction(obj["b"][0], obj["b"][1]),
        obj["q"],
    )


@dataclass(frozen=True)
class EvaluationSet:
    field: Field
    points: tuple[int, ...]


def evaluation_set(field: Field, points) -> EvaluationSet:
    if field.q % 2 == 0:
        raise EvenCharacteristic("evaluation needs a field of odd order")
    pts = sorted(points)
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate evaluation points")
    if pts and not (0 <= pts[0] and pts[-1] < field.q):
        raise ValueError(f"points must be element indices in 0..{field.q - 1}")
    if not pts:
        raise ValueError("empty evaluation set")
    return EvaluationSet(field, tuple(pts))


def full_evaluation_set(field: Field) -> EvaluationSet:
    return evaluation_set(field, range(field.q))


def first_evaluation_set(field: Field, size: int) -> EvaluationSet:
    if not 1 <= size <= field.q:
        raise ValueError(f"size must be in 1..{field.q}")
    return evaluation_set(field, range(size))


@dataclass(frozen=True)
class BasicSet:
    """Generating polynomials: distinct monic irreducibles and at most
    one constant, which must be primitive."""

    polys: tuple[Poly, ...]
    total_degree: int
    has_constant: bool


def basic_set(polys) -> BasicSet:
    polys = tuple(polys)
    if not polys:
        raise ValueError("empty basic set")
    field = polys[0].field
    constants = []
    for f in polys:
        if f.field != field:
            raise FieldMismatch("mixed fields in one basic set")
        if f.degree < 1:
            if f.is_zero:
                raise ValueError("zero polynomial in basic set")
            constants.append(f)
        else:
            if not f.is_monic:
                raise ValueError(f"{f!r} is not monic")
            if not is_irreducible(f):
                raise ValueError(f"{f!r} is not irreducible")
    if len(constants) > 1:
        raise ValueError("at most one constant generator is allowed")
    for c in constants:
        if field.multiplicative_order(c.coeffs[0]) != field.q - 1:
            raise ValueError("the constant generator must be primitive")
    if not is_squarefree_product(polys):
        raise ValueError("repeated irreducible factor in basic set")
    total = sum(f.degree for f in polys if f.degree >= 1)
    return BasicSet(polys, total, bool(constants))


def lambda_map(f: Poly, ev: EvaluationSet) -> int:
    """Pack the square/non-square parities of f over ev into an int row.

    Bit j is the parity at the j-th evaluation point."""
    if f.field != ev.field:
        raise FieldMismatch("polynomial and evaluation set disagree on the field")
    field = ev.field
    row = 0
    for j, beta in enumerate(ev.points):
        v = f(beta)
        if v == 0:
            raise VanishesOnE(
                f"{f!r} vanishes at element {beta} of the evaluation set", beta
            )
        row |= field.lg_parity(v) << j
    return row


def build_B1(field: Field, ev: EvaluationSet) -> BasicSet:
    """Linear factors through every point outside ev, plus a primitive
    constant.  |B| = q - |E| + 1 and the total degree is q - |E|."""
    if field != ev.field:
        raise FieldMismatch("evaluation set was built over a different field")
    outside = sorted(set(range(field.q)) - set(ev.points))
    if not outside:
        raise EvaluationSetIsFullField(
            "degree <= 1 construction needs a point outside the evaluation set"
        )
    polys = [x_minus(field, lam) for lam in outside]
    polys.append(Poly.constant(field, field.primitive_element()))
    return basic_set(polys)


def build_B2(field: Field, k: int, seed: int | None = None) -> BasicSet:
    """k distinct monic irreducible quadratics: the lexicographically
    first k, or a seed-reproducible random choice."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if seed is None:
        polys = enumerate_monic_irreducibles(field, 2, k)
    else:
        supply = all_monic_irreducibles(field, 2)
        if k > len(supply):
            raise ExhaustedSupply(
                f"only {len(supply)} monic irreducible quadratics over GF({field.q})"
            )
        polys = sorted(random.Random(seed).sample(supply, k), key=lambda f: f.coeffs[::-1])
    return basic_set(polys)


def delta(ev: EvaluationSet, basic: BasicSet) -> Surd:
    """|E| - q/2 - (sqrt(q)/2)(d_B - 1), exact."""
    q = ev.field.q
    a = Fraction(len(ev.points)) - Fraction(q, 2)
    b = -Fraction(basic.total_degree - 1, 2)
    return Surd(a, b, q)


@dataclass(frozen=True)
class ShadowCode:
    evaluation: EvaluationSet
    basic: BasicSet
    rows: tuple[int, ...]
    n: int
    delta: Surd
    claimed_dim: int
    delta_positive: bool
    rank: int
    kind: str

    @property
    def k(self) -> int:
        return self.claimed_dim

    def generator(self) -> BinaryCode:
        if self.rank == len(self.rows):
            return BinaryCode(self.rows, self.n)
        return BinaryCode.from_span(self.rows, self.n)


def construct(ev: EvaluationSet, basic: BasicSet, kind: str = "custom") -> ShadowCode:
    """Assemble the generator matrix and the exact distance bound.

    When delta > 0 the dimension is exactly |B|; otherwise the claimed
    dimension falls back to the observed rank and delta_positive is
    False to flag that no distance guarantee holds."""
    rows = tuple(lambda_map(f, ev) for f in basic.polys)
    d = delta(ev, basic)
    rk = gf2_rank(rows)
    positive = d.sign() > 0
    if positive and rk != len(rows):
        raise AssertionError(
            "rank fell below |B| with a positive bound; this contradicts the"
            " construction guarantee and indicates a bug"
        )
    dim = len(rows) if positive else rk
    return ShadowCode(ev, basic, rows, len(ev.points), d, dim, positive, rk, kind)


def construct_deg1(field: Field, e_size: int) -> ShadowCode:
    """Code of length e_size over field with B the linear factors
    outside the first e_size elements plus a primitive constant."""
    ev = first_evaluation_set(field, e_size)
    return construct(ev, build_B1(field, ev), kind="deg1")


def construct_deg1_nk(n: int, k: int) -> ShadowCode:
    """(n, k) degree <= 1 code; needs q = n + k - 1 an odd prime power."""
    if k < 2:
        raise ParameterNotAdmissible(f"need k >= 2 so a point stays outside E, got {k}")
    if n < 1:
        raise ParameterNotAdmissible(f"need n >= 1, got {n}")
    q = n + k - 1
    pm = find_odd_prime_power(q)
    if pm is None:
        near = nearest_odd_prime_power(q)
        raise ParameterNotAdmissible(
            f"q = n + k - 1 = {q} is not an odd prime power; nearest admissible"
            f" order is {near} (for example n={near - k + 1}, k={k})",
            suggested_q=near,
        )
    return construct_deg1(field_create(*pm), n)


def construct_deg2(field: Field, k: int, seed: int | None = None) -> ShadowCode:
    """(q, k) code from k monic irreducible quadratics over the whole field."""
    ev = full_evaluation_set(field)
    code = construct(ev, build_B2(field, k, seed), kind="deg2")
    return code


def distance_lower_bound(code: ShadowCode) -> Surd:
    """The exact distance guarantee; error when it is vacuous.

    For the two stock families the generic surd is cross-checked
    against the closed forms in n and k."""
    if not code.delta_positive:
        raise NonpositiveDelta(
            f"delta = {float(code.delta):.4f} <= 0 guarantees nothing"
        )
    d = code.delta
    q = code.evaluation.field.q
    n = code.n
    k = len(code.basic.polys)
    if code.kind == "deg1":
        want = Surd(Fraction(n - k + 1, 2), -Fraction(k - 2, 2), n + k - 1)
        assert q == n + k - 1 and d == want, "degree <= 1 closed form disagrees"
    elif code.kind == "deg2":
        want = Surd(Fraction(n, 2), -Fraction(2 * k - 1, 2), n)
        assert q == n and d == want, "degree 2 closed form disagrees"
    return d


def to_descriptor(code: ShadowCode) -> dict:
    return {
        "format": "shadow-code/1",
        "field": code.evaluation.field.to_json(),
        "E": list(code.evaluation.points),
        "B": [poly_to_text(f) for f in code.basic.polys],
        "G": [row_to_hex(r, code.n) for r in code.rows],
        "n": code.n,
        "k": code.claimed_dim,
        "delta": code.delta.to_json(),
        "delta_positive": code.delta_positive,
        "rank": code.rank,
        "kind": code.kind,
    }


def from_descriptor(obj: dict) -> ShadowCode:
    """Rebuild and re-derive a code, verifying the stored matrix."""
    field = field_from_json(obj["field"])
    ev = evaluation_set(field, obj["E"])
    basic = basic_set([poly_from_text(field, s) for s in obj["B"]])
    code = construct(ev, basic, kind=obj.get("kind", "custom"))
    stored = tuple(row_from_hex(s) for s in obj["G"])
    if stored != code.rows:
        raise ValueError("stored generator matrix does not match its field/E/B")
    return code
