"""Exact arithmetic in GF(p) and GF(p^m).

Elements are stored as integer codes ``sum(c_i * p**i)`` over their
coefficient vector ``(c_0, ..., c_{m-1})`` with respect to the power basis
of the field modulus.  :class:`FieldElem` wraps a code together with its
field for operator-style use; the heavier modules work on raw codes via the
:class:`FieldCtx` methods.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

from sympy import factorint, isprime

__all__ = [
    "FieldCtx",
    "FieldElem",
    "FieldError",
    "field_create",
    "is_irreducible",
    "multiplicative_order",
    "nth_root_of_unity",
    "prime_power",
]


class FieldError(ValueError):
    """Invalid field construction or an illegal field operation."""


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**s``; raise if ``q`` is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise FieldError(f"{q} is not a prime power")
    ((p, s),) = f.items()
    return p, s


# -- GF(p)[x] helpers on low-degree-first coefficient lists -----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(list(a), f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Deterministic irreducibility test for a polynomial over GF(p).

    ``f`` is given low-degree first.  Uses the Rabin criterion:
    ``x^(p^m) = x mod f`` and ``gcd(x^(p^(m/r)) - x, f) = 1`` for every
    prime ``r | m``.
    """
    f = _trim([c % p for c in f])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    for r in factorint(m):
        h = _ppowmod(x, p ** (m // r), f, p)
        g = _pgcd(f, _psub(h, x, p), p)
        if len(g) > 1:
            return False
    return _psub(_ppowmod(x, p**m, f, p), x, p) == []


def _lex_low_first(p: int, m: int):
    """Yield candidate low coefficients ``(c_0, ..., c_{m-1})`` in
    lexicographic order with ``c_0`` compared first.

    Vectors with ``c_0 = 0`` are skipped for ``m > 1``: ``x`` divides them.
    """
    if m == 1:
        yield from (list(v) for v in product(range(p), repeat=1))
        return
    for v in product(range(1, p), *([range(p)] * (m - 1))):
        yield list(v)


# -- fields ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldCtx:
    """GF(p^m) with a fixed monic irreducible modulus and primitive element.

    Instances are immutable; obtain them through :func:`field_create` so that
    equal parameters share one context.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    generator: int = 0
    _group_primes: tuple[int, ...] = field(default=(), repr=False)

    @property
    def order(self) -> int:
        return self.p**self.m

    @property
    def group_order(self) -> int:
        return self.p**self.m - 1

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"

    # conversions
    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, digits: Sequence[int]) -> int:
        a = 0
        for c in reversed(digits):
            a = a * self.p + (c % self.p)
        return a

    def from_int(self, c: int) -> int:
        """Image of the integer ``c`` in the prime subfield."""
        return c % self.p

    def __call__(self, value: int | Sequence[int]) -> "FieldElem":
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise FieldError(f"code {value} out of range for {self!r}")
            return FieldElem(self, value)
        if len(value) > self.m:
            raise FieldError("coefficient vector longer than the extension degree")
        return FieldElem(self, self.from_digits(list(value)))

    def elem(self, value: int | Sequence[int]) -> "FieldElem":
        return self(value)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def alpha(self) -> "FieldElem":
        return FieldElem(self, self.generator)

    # raw arithmetic on codes
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return (a * b) % self.p
        if self.p == 2:
            return self._mul2(a, b)
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_pmod(prod, list(self.modulus), self.p))

    def _mul2(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
        mod = self._mod_bits
        top = self.m
        for bit in range(r.bit_length() - 1, top - 1, -1):
            if (r >> bit) & 1:
                r ^= mod << (bit - top)
        return r

    @property
    def _mod_bits(self) -> int:
        return sum(c << i for i, c in enumerate(self.modulus))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        if a == 0:
            if e == 0:
                return 1
            return 0
        e %= self.group_order
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self!r}")
        return self.pow(a, self.group_order - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p**times)

    def order_of(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        t = self.group_order
        for r in self._group_primes:
            while t % r == 0 and self.pow(a, t // r) == 1:
                t //= r
        return t

    def format(self, a: int) -> str:
        if self.m == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.digits(a)))):
            if c == 0:
                continue
            mon = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mon)
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class FieldElem:
    """A value in a :class:`FieldCtx`."""

    ctx: FieldCtx
    code: int

    @property
    def coeffs(self) -> list[int]:
        return self.ctx.digits(self.code)

    def _check(self, other: "FieldElem | int") -> int:
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if other.ctx is not self.ctx:
            raise FieldError(f"mixed field contexts {self.ctx!r} and {other.ctx!r}")
        return other.code

    def __add__(self, other):
        return FieldElem(self.ctx, self.ctx.add(self.code, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self.code, self._check(other)))

    def __rsub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self._check(other), self.code))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.code))

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.code, self._check(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.ctx, self.ctx.div(self.code, self._check(other)))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.code, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.code == self.ctx.from_int(other)
        return isinstance(other, FieldElem) and other.ctx is self.ctx and other.code == self.code

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.code))

    def __repr__(self) -> str:
        return f"{self.ctx!r}({self.ctx.format(self.code)})"

    def to_json(self) -> list[int]:
        return self.coeffs


def arith(a: FieldElem, b: FieldElem | int | None, op: str) -> FieldElem:
    """Dispatch ``op`` in {add, sub, mul, div, pow, inv} on field elements."""
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    try:
        return ops[op](b)
    except KeyError:
        raise FieldError(f"unknown operation {op!r}") from None


def field_create(p: int, m: int = 1) -> FieldCtx:
    """Return GF(p^m) with a reproducible modulus and generator.

    The modulus is the lexicographically smallest monic irreducible of degree
    ``m`` (coefficients compared from the constant term up), and the
    generator is the primitive element with the smallest integer code.
    Equal parameters always give the same context object.
    """
    return _field_create(int(p), int(m))


@lru_cache(maxsize=None)
def _field_create(p: int, m: int) -> FieldCtx:
    if not isprime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be positive, got {m}")
    modulus = None
    for low in _lex_low_first(p, m):
        cand = low + [1]
        if is_irreducible(cand, p):
            modulus = tuple(cand)
            break
    if modulus is None:  # pragma: no cover - irreducibles always exist
        raise RuntimeError(f"no irreducible polynomial of degree {m} over GF({p})")
    primes = tuple(sorted(factorint(p**m - 1))) if p**m > 2 else ()
    ctx = FieldCtx(p, m, modulus, 1, primes)
    group = p**m - 1
    for a in range(1, p**m):
        if all(ctx.pow(a, group // r) != 1 for r in primes):
            object.__setattr__(ctx, "generator", a)
            break
    return ctx


def multiplicative_order(a: FieldElem) -> int:
    """Least ``t >= 1`` with ``a**t == 1``."""
    return a.ctx.order_of(a.code)


def nth_root_of_unity(ctx: FieldCtx, n: int) -> FieldElem:
    """``alpha**((p^m - 1)/n)``, a primitive n-th root of unity."""
    if n < 1 or ctx.group_order % n:
        raise FieldError(f"{n} does not divide the group order {ctx.group_order} of {ctx!r}")
    return FieldElem(ctx, ctx.pow(ctx.generator, ctx.group_order // n))
