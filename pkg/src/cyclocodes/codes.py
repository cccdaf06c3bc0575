"""Cyclic codes of length n1*n2: the three cyclotomic families, the
half-dimension census, BCH bounds, multiplier equivalence and splittings."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from math import comb, gcd
from typing import Iterable, Iterator

import numpy as np

from .cyclotomy import (
    CyclotomyError,
    build_system,
    quadratic_class,
    rule_for,
)
from .polyring import (
    Poly,
    class_exponent_sets,
    class_polynomials,
    cyclotomic_cosets,
    factor_cosets,
    factor_labels,
    multiplicative_order_mod,
    poly_product,
    splitting_field,
)

__all__ = [
    "BCHBound",
    "FAMILIES",
    "TRIPLES",
    "CensusObstruction",
    "CodeLabel",
    "CyclicCode",
    "InadmissibleCode",
    "bch_bound",
    "census_count",
    "census_half_dim",
    "construct_code",
    "cyclic_code",
    "family_code",
    "family_codes",
    "find_splitters",
    "identify_triple",
    "identify_triple_from_set",
    "family_splitting_sets",
    "code_from_generator",
    "map_code",
    "splitting_check",
]

FAMILIES = ("U", "D", "V")
TRIPLES = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1))


class InadmissibleCode(CyclotomyError):
    """The field size does not meet the membership conditions of a family."""


class CensusObstruction(ValueError):
    pass


@dataclass(frozen=True)
class CodeLabel:
    family: str
    n1: int
    n2: int
    q: int
    triple: tuple[int, int, int] | None = None
    factors: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.triple is not None and any(t not in (0, 1) for t in self.triple):
            raise ValueError(f"triple entries must be binary, got {self.triple}")

    def __str__(self) -> str:
        if self.factors is not None:
            return "".join(self.factors)
        if self.triple is not None:
            return f"{self.family}({self.n1},{self.n2},{self.q}){self.triple}"
        return f"{self.family}({self.n1},{self.n2},{self.q})"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n1": self.n1,
            "n2": self.n2,
            "q": self.q,
            "triple": list(self.triple) if self.triple is not None else None,
            "factors": list(self.factors) if self.factors is not None else None,
        }


@dataclass(frozen=True, eq=False)
class CyclicCode:
    """The ideal generated by ``generator`` in GF(q)[x]/(x^n - 1)."""

    n: int
    q: int
    generator: Poly
    defining_set: tuple[int, ...]
    label: CodeLabel | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.defining_set) != self.generator.degree:
            raise ValueError("defining set size differs from the generator degree")

    @property
    def k(self) -> int:
        return self.n - self.generator.degree

    @property
    def field(self):
        return self.generator.ctx

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyclicCode)
            and (self.n, self.q, self.defining_set) == (other.n, other.q, other.defining_set)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.q, self.defining_set))

    @cached_property
    def check_polynomial(self) -> Poly:
        return Poly.x_n_minus_1(self.field, self.n) // self.generator

    def generator_matrix(self) -> np.ndarray:
        """k x n matrix of field codes whose rows are x^i g(x), i < k."""
        G = np.zeros((self.k, self.n), dtype=np.int64)
        g = np.array(self.generator.coeffs, dtype=np.int64)
        for i in range(self.k):
            G[i, i:i + len(g)] = g
        return G

    def contains(self, word: Iterable[int]) -> bool:
        c = Poly(self.field, tuple(int(x) for x in word))
        return self.generator.divides(c)

    def descriptor(self) -> dict:
        out = self.label.to_json() if self.label else {"family": None}
        out.update(
            generator=str(self.generator),
            defining_set=list(self.defining_set),
            k=self.k,
            n=self.n,
        )
        return out

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        return f"<CyclicCode{name} [{self.n},{self.k}]_{self.q}>"


def cyclic_code(n: int, q: int, defining_set: Iterable[int], label: CodeLabel | None = None) -> CyclicCode:
    """Build the code from its defining set (must be a union of q-cosets)."""
    T = tuple(sorted({t % n for t in defining_set}))
    sf = splitting_field(n, q)
    g = sf.product_over_roots(T, require_base=True)
    return CyclicCode(n, q, g, T, label)


def code_from_generator(n: int, q: int, g: Poly, label: CodeLabel | None = None) -> CyclicCode:
    sf = splitting_field(n, q)
    if not g.divides(Poly.x_n_minus_1(g.ctx, n)):
        raise ValueError("generator does not divide x^n - 1")
    return CyclicCode(n, q, g.monic(), sf.defining_set(g), label)


# -- cyclotomic families ---------------------------------------------------------

def _explain_inadmissible(n1: int, n2: int, q: int, family: str) -> str:
    sys = build_system(n1, n2)
    reasons = []
    if sys.class_of(family, q % sys.n) != 0:
        reasons.append(f"{q} lies in {family}_1, not {family}_0")
    for p in (n1, n2):
        if quadratic_class(p, q) != 0:
            reasons.append(f"{q} is a non-residue mod {p} ({p} mod 8 = {p % 8})")
    rule = rule_for(q, family)
    hint = f"; membership rule {rule.q}-in-{family}0 requires {rule.text}" if rule else ""
    return f"{family}-family codes over GF({q}) need {q} in {family}_0 and a residue mod {n1} and {n2}: " + \
        ", ".join(reasons) + hint


def construct_code(label: CodeLabel, even_like: bool = False) -> CyclicCode:
    """Family code with generator X_i(x) d_j^(n1)(x) d_h^(n2)(x).

    ``even_like`` also includes the factor (x - 1) (the code then has
    dimension (n - 1)/2).
    """
    if label.family not in FAMILIES or label.triple is None:
        raise ValueError(f"not a family label: {label}")
    n1, n2, q = label.n1, label.n2, label.q
    sys = build_system(n1, n2)
    if gcd(q, sys.n) != 1:
        raise InadmissibleCode(f"gcd({q}, {sys.n}) > 1")
    if not (sys.class_of(label.family, q % sys.n) == 0
            and quadratic_class(n1, q) == 0 and quadratic_class(n2, q) == 0):
        raise InadmissibleCode(_explain_inadmissible(n1, n2, q, label.family))
    i, j, h = label.triple
    sets = class_exponent_sets(n1, n2, label.family)
    polys = class_polynomials(n1, n2, q, label.family)
    keys = (f"X{i}", f"d{j}_n1", f"d{h}_n2")
    T = set().union(*(sets[k] for k in keys))
    g = polys[keys[0]] * polys[keys[1]] * polys[keys[2]]
    if even_like:
        ctx = g.ctx
        g = g * Poly(ctx, (ctx.neg(1), 1))
        T.add(0)
    return CyclicCode(sys.n, q, g, tuple(sorted(T)), label)


def family_code(family: str, n1: int, n2: int, q: int, triple: tuple[int, int, int]) -> CyclicCode:
    return construct_code(CodeLabel(family, n1, n2, q, tuple(triple)))


def family_codes(family: str, n1: int, n2: int, q: int) -> list[CyclicCode]:
    """The eight codes in triple order (000, 100, 010, 001, 110, 101, 011, 111)."""
    return [family_code(family, n1, n2, q, t) for t in TRIPLES]


def identify_triple(code: CyclicCode, family: str, n1: int, n2: int) -> tuple[int, int, int] | None:
    return identify_triple_from_set(code.defining_set, family, n1, n2)


# -- census ------------------------------------------------------------------------

def _blocks(n1: int, n2: int, q: int):
    n = n1 * n2
    pairs = factor_cosets(n, q)
    labels = factor_labels([p for p, _ in pairs])
    blocks = {"n1": [], "n2": [], "n": []}
    for lab, (poly, coset) in zip(labels, pairs):
        r = coset[0]
        if r == 0:
            continue
        if gcd(r, n) == 1:
            blocks["n"].append((lab, poly, coset))
        elif r % n2 == 0:
            blocks["n1"].append((lab, poly, coset))
        else:
            blocks["n2"].append((lab, poly, coset))
    return blocks


def census_count(n1: int, n2: int, q: int) -> int:
    """Product of binomials C(b, b/2) over the three factor blocks."""
    sizes = [len(b) for b in _blocks(n1, n2, q).values()]
    if any(s % 2 for s in sizes):
        raise CensusObstruction(_obstruction(n1, n2, q))
    out = 1
    for s in sizes:
        out *= comb(s, s // 2)
    return out


def _obstruction(n1: int, n2: int, q: int) -> str:
    parts = []
    for p in (n1, n2):
        o = multiplicative_order_mod(q, p)
        if ((p - 1) // o) % 2:
            parts.append(f"({p}-1)/ord_{p}({q}) = {(p - 1) // o} is odd")
    return "no balanced factor selection: " + ("; ".join(parts) or "odd block size")


def census_half_dim(n1: int, n2: int, q: int) -> Iterator[CyclicCode]:
    """All codes whose generator takes half of each factor block.

    Each block (factors with roots of order n1, n2 and n respectively) is
    sorted by (degree, coefficients); selections are enumerated as
    lexicographic combinations, n1-block outermost.
    """
    blocks = _blocks(n1, n2, q)
    if any(len(b) % 2 for b in blocks.values()):
        raise CensusObstruction(_obstruction(n1, n2, q))
    n = n1 * n2
    choices = [list(combinations(blocks[k], len(blocks[k]) // 2)) for k in ("n1", "n2", "n")]
    for sel in product(*choices):
        parts = [f for group in sel for f in group]
        g = poly_product([p for _, p, _ in parts], parts[0][1].ctx)
        T = tuple(sorted(t for _, _, c in parts for t in c))
        label = CodeLabel("census", n1, n2, q, factors=tuple(lab for lab, _, _ in parts))
        yield CyclicCode(n, q, g, T, label)


# -- bounds and equivalences -------------------------------------------------------

@dataclass(frozen=True)
class BCHBound:
    """Designed-distance bound from a run start, start + step, ... in T."""

    bound: int
    start: int | None
    length: int
    step: int = 1

    def __int__(self) -> int:
        return self.bound


def _longest_run(T: set[int], n: int, step: int) -> tuple[int, int | None]:
    best_len, best_start = 0, None
    for s in sorted(T):
        if (s - step) % n in T:
            continue
        length = 0
        while length < n and (s + length * step) % n in T:
            length += 1
        if length > best_len:
            best_len, best_start = length, s
    return best_len, best_start


def bch_bound(code_or_set: CyclicCode | Iterable[int], n: int | None = None,
              any_step: bool = True) -> BCHBound:
    """1 + the longest arithmetic run in the defining set.

    With ``any_step`` the run may advance by any unit b mod n (the bound
    is invariant under x -> x^b), otherwise only by 1.
    """
    if isinstance(code_or_set, CyclicCode):
        T, n = set(code_or_set.defining_set), code_or_set.n
    else:
        T = set(code_or_set)
        if n is None:
            raise ValueError("n is required with a bare defining set")
    if not T:
        return BCHBound(1, None, 0)
    if len(T) == n:
        return BCHBound(n + 1, 0, n)
    steps = [b for b in range(1, n) if gcd(b, n) == 1] if any_step else [1]
    best = BCHBound(1, None, 0)
    for b in steps:
        length, start = _longest_run(T, n, b)
        if length > best.length:
            best = BCHBound(length + 1, start, length, b)
    return best


def map_code(code: CyclicCode, ell: int) -> CyclicCode:
    """Image of ``code`` under the coordinate permutation x -> x^ell."""
    n = code.n
    if gcd(ell, n) != 1:
        raise ValueError(f"{ell} is not a unit modulo {n}")
    inv = pow(ell, -1, n)
    T = sorted(inv * t % n for t in code.defining_set)
    label = None
    if code.label and code.label.family in FAMILIES:
        triple = identify_triple_from_set(T, code.label.family, code.label.n1, code.label.n2)
        if triple is not None:
            label = CodeLabel(code.label.family, code.label.n1, code.label.n2, code.q, triple)
    return cyclic_code(n, code.q, T, label)


def identify_triple_from_set(T, family, n1, n2):
    sets = class_exponent_sets(n1, n2, family)
    T = set(T)
    for i, j, h in TRIPLES:
        if T == set(sets[f"X{i}"]) | set(sets[f"d{j}_n1"]) | set(sets[f"d{h}_n2"]):
            return (i, j, h)
    return None


def _is_coset_union(E: set[int], n: int, q: int) -> bool:
    return all(x * q % n in E for x in E)


def splitting_check(E0: Iterable[int], E1: Iterable[int], mu: int, n: int, q: int) -> bool:
    """Whether (E0, E1) is a splitting of n given by ``mu``."""
    E0, E1 = {x % n for x in E0}, {x % n for x in E1}
    if gcd(mu, n) != 1 or 0 in E0 or 0 in E1:
        return False
    if not (_is_coset_union(E0, n, q) and _is_coset_union(E1, n, q)):
        return False
    if E0 & E1 or E0 | E1 != set(range(1, n)):
        return False
    return {mu * x % n for x in E0} == E1 and {mu * x % n for x in E1} == E0


def find_splitters(E0: Iterable[int], E1: Iterable[int], n: int, q: int) -> list[int]:
    """Every unit mu giving the splitting (exhaustive scan of Z_n^*)."""
    E0, E1 = set(E0), set(E1)
    return [mu for mu in range(1, n) if gcd(mu, n) == 1 and splitting_check(E0, E1, mu, n, q)]


def family_splitting_sets(family: str, n1: int, n2: int) -> tuple[set[int], set[int]]:
    """Defining sets of the (0,0,0) and (1,1,1) codes, without 0."""
    s = class_exponent_sets(n1, n2, family)
    E0 = set(s["X0"]) | set(s["d0_n1"]) | set(s["d0_n2"])
    E1 = set(s["X1"]) | set(s["d1_n1"]) | set(s["d1_n2"])
    return E0, E1
