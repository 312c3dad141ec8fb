"""Univariate polynomials over a Field.

Coefficients are stored low degree first as canonical element indices,
mirroring the digit convention of the field module, so the text form
"1,0,1" is x^2 + 1 whatever the field.  The zero polynomial has an
empty coefficient tuple and degree -1.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

from .errors import ConstantInput, DivisionByZero, ExhaustedSupply, FieldMismatch
from .field import prime_factors

if TYPE_CHECKING:
    from .field import Field


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: "Field", coeffs: Iterable[int]):
        cs = list(coeffs)
        for c in cs:
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} out of range for GF({field.q})")
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, field: "Field") -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: "Field") -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: "Field") -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: "Field", c: int) -> "Poly":
        return cls(field, (c,))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check_field(self, other: "Poly") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, (f.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        return Poly(f, (f.mul(c, ci) for ci in self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check_field(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(f), self
        quo = [0] * (dq + 1)
        inv_lead = f.inv(other.coeffs[-1])
        for i in range(dq, -1, -1):
            c = f.mul(rem[i + other.degree], inv_lead)
            quo[i] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] = f.sub(rem[i + j], f.mul(c, oc))
        return Poly(f, quo), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, point: int) -> int:
        # Horner, high coefficient first
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, point), c)
        return acc

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({poly_to_text(self)} over {self.field!r})"


def x_minus(field: "Field", lam: int) -> Poly:
    """The monic linear polynomial with root lam."""
    return Poly(field, (field.neg(lam), 1))


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    f._check_field(g)
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def powmod(f: Poly, e: int, modulus: Poly) -> Poly:
    """f**e reduced by modulus, by square and multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    base = f % modulus
    out = Poly.one(f.field) % modulus
    while e:
        if e & 1:
            out = (out * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return out


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: x^(q^d) == x mod f, and x^(q^(d/l)) - x coprime to f
    for every prime l dividing d."""
    d = f.degree
    if d < 1:
        raise ConstantInput("irreducibility is a question about degree >= 1")
    field = f.field
    if d >= 2 and (f.coeffs[0] == 0 or f(1) == 0):
        return False  # x or x - 1 divides; skip the Frobenius work
    q = field.q
    x = Poly.x(field)
    xr = x % f
    need = {d // l for l in prime_factors(d)} if d > 1 else set()
    g = xr
    for j in range(1, d + 1):
        g = powmod(g, q, f)
        if j in need and gcd(g - xr, f).degree != 0:
            return False
    return g == xr


def _monic_lex(field: "Field", d: int) -> Iterator[Poly]:
    # counter digits map to (c0, .., c_{d-1}) with c0 most significant,
    # which walks monic polynomials in lexicographic coefficient order
    q = field.q
    for j in range(q**d):
        cs = []
        t = j
        for _ in range(d):
            t, r = divmod(t, q)
            cs.append(r)
        cs.reverse()
        cs.append(1)
        yield Poly(field, cs)


def enumerate_monic_irreducibles(field: "Field", d: int, count: int) -> list[Poly]:
    """First count monic irreducibles of degree d, lexicographic order."""
    if d < 1:
        raise ConstantInput(f"degree must be >= 1, got {d}")
    found: list[Poly] = []
    for cand in _monic_lex(field, d):
        if is_irreducible(cand):
            found.append(cand)
            if len(found) == count:
                return found
    raise ExhaustedSupply(
        f"only {len(found)} monic irreducibles of degree {d} over GF({field.q}),"
        f" {count} requested"
    )


def all_monic_irreducibles(field: "Field", d: int) -> list[Poly]:
    if d < 1:
        raise ConstantInput(f"degree must be >= 1, got {d}")
    return [cand for cand in _monic_lex(field, d) if is_irreducible(cand)]


def product_and_degree(polys: Sequence[Poly]) -> tuple[Poly, int]:
    """Product of the list and its degree; constants contribute 0."""
    if not polys:
        raise ValueError("empty product")
    first = polys[0]
    out = first
    for f in polys[1:]:
        first._check_field(f)
        out = out * f
    return out, out.degree


def is_squarefree_product(polys: Sequence[Poly]) -> bool:
    """For monic irreducibles and unit constants: no repeated factor."""
    non_const = [f for f in polys if f.degree >= 1]
    return len(set(non_const)) == len(non_const)


def poly_to_text(f: Poly) -> str:
    """Comma-separated coefficients, low degree first; zero is "0"."""
    if f.is_zero:
        return "0"
    return ",".join(str(c) for c in f.coeffs)


def poly_from_text(field: "Field", text: str) -> Poly:
    parts = [s.strip() for s in text.split(",")]
    return Poly(field, (int(s) for s in parts))
