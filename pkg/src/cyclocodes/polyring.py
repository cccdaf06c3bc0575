"""Polynomials over finite fields and the factor structure of x^n - 1."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .cyclotomy import CyclotomyError, admissibility, build_system
from .gf import FieldCtx, FieldError, field_create, nth_root_of_unity, prime_power

__all__ = [
    "NotInBaseField",
    "Poly",
    "SplittingField",
    "class_exponent_sets",
    "class_polynomials",
    "cyclotomic_cosets",
    "factor_labels",
    "factor_xn_minus_1",
    "multiplicative_order_mod",
    "poly_gcd",
    "product_over_roots",
    "splitting_field",
    "verify_master_factorization",
]


class NotInBaseField(FieldError):
    """A root product has coefficients outside the requested base field."""


def multiplicative_order_mod(q: int, n: int) -> int:
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) > 1")
    if n == 1:
        return 1
    t, x = 1, q % n
    while x != 1:
        x = x * q % n
        t += 1
    return t


# -- polynomials ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Poly:
    """Dense polynomial, coefficients are field codes, lowest degree first."""

    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    # constructors
    @classmethod
    def from_ints(cls, ctx: FieldCtx, coeffs: Iterable[int]) -> "Poly":
        return cls(ctx, tuple(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, ctx: FieldCtx, deg: int, coef: int = 1) -> "Poly":
        return cls(ctx, (0,) * deg + (coef,))

    @classmethod
    def x_n_minus_1(cls, ctx: FieldCtx, n: int) -> "Poly":
        return cls(ctx, (ctx.neg(1),) + (0,) * (n - 1) + (1,))

    @classmethod
    def one(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, (1,))

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and other.ctx is self.ctx and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.m, self.coeffs))

    def _same(self, other: "Poly") -> None:
        if other.ctx is not self.ctx:
            raise FieldError(f"mixed polynomial rings over {self.ctx!r} and {other.ctx!r}")

    # arithmetic
    def __add__(self, other: "Poly") -> "Poly":
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.ctx.add
        return Poly(self.ctx, tuple(add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)))

    def __neg__(self) -> "Poly":
        return Poly(self.ctx, tuple(self.ctx.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.ctx, ())
        ctx = self.ctx
        if ctx.m == 1:
            prod = np.convolve(np.array(a, dtype=object), np.array(b, dtype=object))
            return Poly(ctx, tuple(int(c) % ctx.p for c in prod))
        out = [0] * (len(a) + len(b) - 1)
        mul, add = ctx.mul, ctx.add
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly(ctx, tuple(out))

    def scale(self, c: int) -> "Poly":
        return Poly(self.ctx, tuple(self.ctx.mul(c, x) for x in self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = ctx.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - db, 0)
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = ctx.mul(rem[shift + db], inv_lead)
            if c == 0:
                continue
            quot[shift] = c
            for i, bc in enumerate(other.coeffs):
                if bc:
                    rem[shift + i] = ctx.sub(rem[shift + i], ctx.mul(c, bc))
        return Poly(ctx, tuple(quot)), Poly(ctx, tuple(rem[:db]) if db > 0 else ())

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.ctx.inv(self.coeffs[-1]))

    def eval(self, x: int) -> int:
        """Horner evaluation at the field code ``x``."""
        ctx, acc = self.ctx, 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def sort_key(self) -> tuple:
        """(degree, coefficients compared from the top down)."""
        return (self.degree, tuple(reversed(self.coeffs)))

    # formatting
    def _coef_text(self, c: int) -> str:
        ctx = self.ctx
        if ctx.m == 1:
            return str(c)
        if ctx.p == 2 and ctx.m == 2:
            return {1: "1", 2: "w", 3: "w^2"}[c]
        return f"({ctx.format(c)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = self._coef_text(c)
            if i == 0:
                terms.append(coef)
            else:
                terms.append(mon if c == 1 else coef + mon)
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Poly[{self.ctx!r}]({self})"

    def to_json(self) -> list:
        if self.ctx.m == 1:
            return list(self.coeffs)
        return [self.ctx.digits(c) for c in self.coeffs]

    @classmethod
    def parse(cls, text: str, ctx: FieldCtx) -> "Poly":
        """Parse the display format, e.g. ``x^6 + wx^4 + w^2x + 1``.

        Exponents may be written ``x^12`` or ``x^{12}``; ``w`` and ``w^2``
        denote the GF(4) generator and its square.
        """
        text = text.replace("{", "").replace("}", "").replace(" ", "")
        coeffs: dict[int, int] = {}
        for term in filter(None, text.split("+")):
            m = re.fullmatch(r"(w\^2|w|\d+)?(x(?:\^(\d+))?)?", term)
            if not m or not term:
                raise ValueError(f"cannot parse term {term!r}")
            c_txt, x_txt, e_txt = m.groups()
            if c_txt is None:
                c = 1
            elif c_txt == "w":
                c = 2
            elif c_txt == "w^2":
                c = 3
            else:
                c = ctx.from_int(int(c_txt))
            e = 0 if x_txt is None else int(e_txt or 1)
            coeffs[e] = ctx.add(coeffs.get(e, 0), c)
        deg = max(coeffs) if coeffs else -1
        return cls(ctx, tuple(coeffs.get(i, 0) for i in range(deg + 1)))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_product(polys: Sequence[Poly], ctx: FieldCtx) -> Poly:
    """Balanced-tree product."""
    items = list(polys)
    if not items:
        return Poly.one(ctx)
    while len(items) > 1:
        nxt = [items[i] * items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


# -- cosets --------------------------------------------------------------------

def cyclotomic_cosets(q: int, n: int, flavor: str = "all") -> list[tuple[int, ...]]:
    """q-cyclotomic cosets modulo ``n``.

    ``flavor="all"`` partitions Z_n into orbits ``{i, qi, q^2 i, ...}``;
    ``flavor="units"`` gives the cosets of <q> inside Z_n^*.  Cosets are
    sorted internally and listed by smallest element.
    """
    if gcd(q, n) != 1:
        raise ValueError(f"gcd({q}, {n}) > 1")
    if flavor not in ("all", "units"):
        raise ValueError(f"unknown coset flavor {flavor!r}")
    seen: set[int] = set()
    out = []
    for i in range(n):
        if i in seen or (flavor == "units" and gcd(i, n) != 1):
            continue
        orbit, x = [], i
        while x not in orbit:
            orbit.append(x)
            x = x * q % n
        seen.update(orbit)
        out.append(tuple(sorted(orbit)))
    return out


# -- splitting field -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SplittingField:
    """GF(q^N) holding a primitive n-th root of unity theta, N = ord_n(q)."""

    n: int
    q: int
    base: FieldCtx
    ext: FieldCtx
    theta: int
    powers: tuple[int, ...]
    embed: dict
    restrict: dict

    def root(self, i: int) -> int:
        return self.powers[i % self.n]

    def product_over_roots(self, E: Iterable[int], require_base: bool = True) -> Poly:
        return product_over_roots(self.ext, self.theta, E, base=self, require_base=require_base)

    def minimal_polynomial(self, i: int) -> Poly:
        coset = {i % self.n}
        x = i * self.q % self.n
        while x not in coset:
            coset.add(x)
            x = x * self.q % self.n
        return self.product_over_roots(sorted(coset))

    def to_ext(self, p: Poly) -> Poly:
        if p.ctx is self.ext:
            return p
        return Poly(self.ext, tuple(self.embed[c] for c in p.coeffs))

    def defining_set(self, g: Poly) -> tuple[int, ...]:
        """Exponents i with g(theta^i) = 0."""
        ge = self.to_ext(g)
        return tuple(i for i in range(self.n) if ge.eval(self.powers[i]) == 0)


@lru_cache(maxsize=None)
def splitting_field(n: int, q: int) -> SplittingField:
    p, s = prime_power(q)
    N = multiplicative_order_mod(q, n)
    base = field_create(p, s)
    ext = field_create(p, s * N)
    theta = nth_root_of_unity(ext, n).code
    powers, x = [], 1
    for _ in range(n):
        powers.append(x)
        x = ext.mul(x, theta)
    if s == 1:
        embed = {c: c for c in range(p)}
    else:
        # send the base generator x to a root of the base modulus in the subfield
        step = ext.group_order // (q - 1)
        mod = Poly(ext, tuple(ext.from_int(c) for c in base.modulus))
        beta = next(
            b for b in (ext.pow(ext.generator, j * step) for j in range(1, q))
            if mod.eval(b) == 0
        )
        embed = {}
        for c in range(q):
            acc, bpow = 0, 1
            for digit in base.digits(c):
                acc = ext.add(acc, ext.mul(ext.from_int(digit), bpow))
                bpow = ext.mul(bpow, beta)
            embed[c] = acc
    restrict = {v: k for k, v in embed.items()}
    return SplittingField(n, q, base, ext, theta, tuple(powers), embed, restrict)


def product_over_roots(
    ctx_ext: FieldCtx,
    theta: int,
    E: Iterable[int],
    base: SplittingField | None = None,
    require_base: bool = False,
) -> Poly:
    """Expand prod_{i in E} (x - theta^i).

    With ``base`` given the result is returned over the base field whenever
    every coefficient lies there; ``require_base`` turns a failure into
    :class:`NotInBaseField`.
    """
    E = sorted(set(E))
    neg = ctx_ext.neg
    linear = [Poly(ctx_ext, (neg(ctx_ext.pow(theta, i)), 1)) for i in E]
    prod = poly_product(linear, ctx_ext)
    if base is None:
        if require_base:
            raise ValueError("require_base needs a base field")
        return prod
    q = base.q
    if all(ctx_ext.pow(c, q) == c for c in prod.coeffs):
        return Poly(base.base, tuple(base.restrict[c] for c in prod.coeffs))
    if require_base:
        raise NotInBaseField(
            f"prod (x - theta^i) over {len(E)} exponents is not defined over GF({q})"
        )
    return prod


# -- class polynomials ---------------------------------------------------------

def class_exponent_sets(n1: int, n2: int, kind: str) -> dict[str, tuple[int, ...]]:
    """Root exponent sets of the six class polynomials for one partition.

    Keys: ``X0``, ``X1`` (the order-two classes of Z_n^*), ``d0_n1``,
    ``d1_n1`` (``n2`` times the residues / non-residues mod n1) and
    ``d0_n2``, ``d1_n2``.
    """
    sys = build_system(n1, n2)
    n = sys.n
    X0, X1 = sys.classes(kind)
    return {
        "X0": tuple(X0),
        "X1": tuple(X1),
        "d0_n1": tuple(sorted(n2 * j % n for j in sys.qr(1))),
        "d1_n1": tuple(sorted(n2 * j % n for j in sys.qnr(1))),
        "d0_n2": tuple(sorted(n1 * j % n for j in sys.qr(2))),
        "d1_n2": tuple(sorted(n1 * j % n for j in sys.qnr(2))),
    }


@lru_cache(maxsize=None)
def class_polynomials(n1: int, n2: int, q: int, kind: str) -> dict[str, Poly]:
    """The six class polynomials of a partition, over GF(q).

    Raises :class:`NotInBaseField` when ``q`` is not admissible.
    """
    sf = splitting_field(n1 * n2, q)
    return {
        key: sf.product_over_roots(E, require_base=True)
        for key, E in class_exponent_sets(n1, n2, kind).items()
    }


def verify_master_factorization(n1: int, n2: int, q: int, kind: str) -> bool:
    """Check x^n - 1 = (x - 1) * (six class polynomials) exactly, and
    (x - 1)(x^n - 1) = (x^n1 - 1)(x^n2 - 1) X0(x) X1(x).
    """
    sys = build_system(n1, n2)
    if not admissibility(sys, q, kind):
        raise CyclotomyError(f"q = {q} is not admissible for partition {kind} of ({n1}, {n2})")
    polys = class_polynomials(n1, n2, q, kind)
    ctx = polys["X0"].ctx
    x_minus_1 = Poly(ctx, (ctx.neg(1), 1))
    prod = poly_product([x_minus_1, *polys.values()], ctx)
    xn = Poly.x_n_minus_1(ctx, n1 * n2)
    lhs = x_minus_1 * xn
    rhs = Poly.x_n_minus_1(ctx, n1) * Poly.x_n_minus_1(ctx, n2) * polys["X0"] * polys["X1"]
    return prod == xn and lhs == rhs


@lru_cache(maxsize=None)
def _factor_table(n: int, q: int) -> tuple[tuple[Poly, tuple[int, ...]], ...]:
    sf = splitting_field(n, q)
    pairs = [(sf.product_over_roots(c), c) for c in cyclotomic_cosets(q, n, "all")]
    pairs.sort(key=lambda pc: pc[0].sort_key())
    return tuple(pairs)


def factor_xn_minus_1(n1: int, n2: int, q: int) -> list[Poly]:
    """Monic irreducible factors of x^(n1 n2) - 1 over GF(q).

    Each factor is the minimal polynomial of a q-cyclotomic coset of theta
    powers; the list is sorted by degree, then by coefficients from the top.
    """
    return [p for p, _ in _factor_table(n1 * n2, q)]


def factor_cosets(n: int, q: int) -> list[tuple[Poly, tuple[int, ...]]]:
    """Factors of x^n - 1 paired with their root exponent cosets."""
    return list(_factor_table(n, q))


def factor_labels(factors: Sequence[Poly]) -> list[str]:
    """Names ``f_{deg}{index}`` numbered within each degree, e.g. ``f_241``."""
    counts: dict[int, int] = {}
    labels = []
    for f in factors:
        counts[f.degree] = counts.get(f.degree, 0) + 1
        labels.append(f"f_{f.degree}" if f.degree == 1 and counts[1] == 1 else f"f_{f.degree}{counts[f.degree]}")
    return labels
