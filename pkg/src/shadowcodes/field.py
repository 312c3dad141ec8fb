"""Arithmetic in GF(p^m) with a fixed canonical element enumeration.

Element k of GF(p^m) (0 <= k < q = p^m) stands for the polynomial over
GF(p) whose coefficients are the base-p digits of k, least significant
digit first, so index 0 is the additive identity and index 1 the
multiplicative identity.  For m > 1 arithmetic is done modulo a monic
irreducible polynomial of degree m.  When no modulus is supplied the
lexicographically least monic irreducible is selected (coefficient
tuples (c0, .., c_{m-1}) compared left to right), so a given (p, m)
always produces the same field, the same element order, and therefore
byte-identical downstream artifacts.

Fields with q <= 2**16 precompute exp/log tables over the least
primitive element; larger fields fall back to direct polynomial
arithmetic, which is slower but keeps every operation correct at any
size.
"""

from __future__ import annotations

import functools
import math

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    EvenCharacteristic,
    NotPrime,
    ReducibleModulus,
    ZeroArgument,
)

_TABLE_LIMIT = 1 << 16


def is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x < 4:
        return True
    if x % 2 == 0:
        return False
    f = 3
    while f * f <= x:
        if x % f == 0:
            return False
        f += 2
    return True


def prime_factors(x: int) -> list[int]:
    """Distinct prime factors of x >= 1, ascending."""
    out = []
    f = 2
    while f * f <= x:
        if x % f == 0:
            out.append(f)
            while x % f == 0:
                x //= f
        f += 1 if f == 2 else 2
    if x > 1:
        out.append(x)
    return out


def find_odd_prime_power(target: int) -> tuple[int, int] | None:
    """Return (p, m) with p an odd prime and p**m == target, else None."""
    if target < 3 or target % 2 == 0:
        return None
    ps = prime_factors(target)
    if len(ps) != 1:
        return None
    p = ps[0]
    m = 0
    t = target
    while t > 1:
        t //= p
        m += 1
    return (p, m) if p**m == target else None


def nearest_odd_prime_power(target: int) -> int:
    """The admissible field order closest to target; ties go down."""
    if find_odd_prime_power(target):
        return target
    for off in range(1, max(target, 4)):
        if find_odd_prime_power(target - off):
            return target - off
        if find_odd_prime_power(target + off):
            return target + off
    return 3


class Field:
    """GF(p^m) on canonical integer indices 0 .. q-1.

    Construct through field_create(); instances are cached and
    immutable, so identical parameters share one object and its tables.
    """

    __slots__ = ("p", "m", "q", "modulus", "_exp", "_log", "_primitive")

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus  # length m+1, low degree first, monic; None iff m == 1
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._primitive: int | None = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- canonical representation ------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        """Base-p digits of index a, constant coefficient first."""
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def index(self, digits) -> int:
        a = 0
        for d in reversed(tuple(digits)):
            a = a * self.p + d
        return a

    # -- additive structure --------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    # -- multiplicative structure ---------------------------------------

    def _mul_digits(self, da: list[int], db: list[int]) -> list[int]:
        # schoolbook product followed by reduction by the monic modulus
        p, m = self.p, self.m
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        mod = self.modulus
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                base = i - m
                for j in range(m):
                    prod[base + j] = (prod[base + j] - c * mod[j]) % p
        return prod[:m]

    def _mul_raw(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        return self.index(self._mul_digits(list(self.digits(a)), list(self.digits(b))))

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def _find_primitive(self) -> int:
        order = self.q - 1
        fs = prime_factors(order) if order > 1 else []
        for c in range(1, self.q):
            if all(self._pow_raw(c, order // f) != 1 for f in fs):
                return c
        raise AssertionError("no primitive element found")

    def _build_tables(self) -> None:
        q = self.q
        alpha = self._find_primitive()
        self._primitive = alpha
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        if self.m == 1:
            v = 1
            for i in range(q - 1):
                exp[i] = v
                log[v] = i
                v = (v * alpha) % self.p
        else:
            da = list(self.digits(alpha))
            dv = [0] * self.m
            dv[0] = 1
            for i in range(q - 1):
                v = self.index(dv)
                exp[i] = v
                log[v] = i
                dv = self._mul_digits(dv, da)
        exp[q - 1 :] = exp[: q - 1]
        self._exp = exp
        self._log = log

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        if self._exp is not None:
            return self._exp[self.q - 1 - self._log[a]]
        return self._pow_raw(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero(f"0**{e} undefined in GF({self.q})")
            return 1 if e == 0 else 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        if e < 0:
            return self._pow_raw(self.inv(a), -e)
        return self._pow_raw(a, e % (self.q - 1) if e else 0)

    def primitive_element(self) -> int:
        """Least index whose multiplicative order is q - 1."""
        if self._primitive is None:
            self._primitive = self._find_primitive()
        return self._primitive

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroArgument(f"0 has no multiplicative order in GF({self.q})")
        t = self.q - 1
        for f in prime_factors(t) if t > 1 else []:
            while t % f == 0 and self.pow(a, t // f) == 1:
                t //= f
        return t

    # -- quadratic character --------------------------------------------

    def is_square(self, a: int) -> bool:
        """True iff a is a nonzero square; odd q only."""
        if self.q % 2 == 0:
            raise EvenCharacteristic(f"GF({self.q}): every element is a square")
        if a == 0:
            raise ZeroArgument("square test is for nonzero elements")
        if self._log is not None:
            return self._log[a] % 2 == 0
        return self.pow(a, (self.q - 1) // 2) == 1

    def lg_parity(self, a: int) -> int:
        """0 for nonzero squares, 1 for non-squares; odd q only."""
        return 0 if self.is_square(a) else 1

    # -- identity and I/O ------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def to_json(self) -> dict:
        obj = {"p": self.p, "m": self.m}
        if self.m > 1:
            obj["modulus"] = list(self.modulus)
        return obj


def _validate_modulus(p: int, m: int, modulus: tuple[int, ...]) -> None:
    from . import poly as _poly

    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise DegreeMismatch(
            f"modulus must be monic of degree {m}, got coefficients {list(modulus)}"
        )
    if any(not 0 <= c < p for c in modulus):
        raise DegreeMismatch(f"modulus coefficients must lie in 0..{p - 1}")
    base = _field_cached(p, 1, None)
    if not _poly.is_irreducible(_poly.Poly(base, modulus)):
        raise ReducibleModulus(f"{list(modulus)} factors over GF({p})")


def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    from . import poly as _poly

    base = _field_cached(p, 1, None)
    first = _poly.enumerate_monic_irreducibles(base, m, 1)[0]
    return first.coeffs


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: tuple[int, ...] | None) -> Field:
    return Field(p, m, modulus)


def field_create(p: int, m: int = 1, modulus=None) -> Field:
    """Build GF(p^m), selecting the canonical modulus when none is given."""
    if not is_prime(p):
        raise NotPrime(f"characteristic {p} is not prime")
    if m < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
    if m == 1:
        if modulus is not None:
            raise DegreeMismatch("prime fields take no modulus")
        return _field_cached(p, 1, None)
    if modulus is None:
        modulus = _default_modulus(p, m)
    else:
        modulus = tuple(int(c) for c in modulus)
        _validate_modulus(p, m, modulus)
    return _field_cached(p, m, modulus)


def field_of_order(q: int) -> Field:
    """GF(q) with the canonical modulus, for any prime power q >= 2."""
    ps = prime_factors(q) if q >= 2 else []
    if len(ps) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p = ps[0]
    m = round(math.log(q, p))
    if p**m != q:
        raise NotPrime(f"{q} is not a prime power")
    return field_create(p, m)


def field_from_json(obj: dict) -> Field:
    return field_create(int(obj["p"]), int(obj["m"]), obj.get("modulus"))
