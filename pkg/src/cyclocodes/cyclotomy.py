"""Generalized cyclotomy of order two on Z_n^*, n = n1 * n2.

Every unit is written uniquely as ``g**s * nu**i`` (0 <= s < e, 0 <= i < d)
where ``g`` is a common primitive root of n1 and n2 and ``nu`` is congruent
to ``g`` mod n1 and to 1 mod n2.  The three order-two partitions split the
units by the parity of ``i`` (U), of ``s`` (D) and of ``s + i`` (V).
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable

import numpy as np
from sympy import factorint, isprime, primerange

__all__ = [
    "CyclotomySystem",
    "CyclotomyError",
    "MEMBERSHIP_RULES",
    "MembershipRule",
    "admissibility",
    "build_system",
    "congruence_predicates",
    "decompose",
    "direct_membership",
    "group_law_check",
    "proposition_scan",
    "ScanResult",
    "inconsistency_scan",
    "is_difference_set",
    "minus_one_form",
    "membership_predicates",
    "minus_one_checks",
    "primitive_root",
    "quadratic_class",
]

KINDS = ("U", "D", "V")


class CyclotomyError(ValueError):
    pass


def _check_odd_prime(p: int) -> None:
    if p < 3 or not isprime(p):
        raise CyclotomyError(f"{p} is not an odd prime")


def primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo the odd prime ``p``."""
    _check_odd_prime(p)
    primes = list(factorint(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in primes):
            return g
    raise AssertionError("unreachable")  # pragma: no cover


def quadratic_class(p: int, x: int) -> int:
    """0 if ``x`` is a quadratic residue mod ``p``, 1 otherwise (Euler)."""
    if x % p == 0:
        raise CyclotomyError(f"{x} is divisible by {p}")
    return 0 if pow(x, (p - 1) // 2, p) == 1 else 1


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    return (r1 * m2 * pow(m2, -1, m1) + r2 * m1 * pow(m1, -1, m2)) % (m1 * m2)


def _dlog_table(p: int, g: int) -> dict[int, int]:
    table, x = {}, 1
    for k in range(p - 1):
        table[x] = k
        x = x * g % p
    return table


class _SortedSet(tuple):
    """Sorted tuple of residues with binary-search membership."""

    def __contains__(self, x) -> bool:  # type: ignore[override]
        i = bisect.bisect_left(self, x)
        return i < len(self) and self[i] == x


@dataclass(frozen=True, eq=False)
class CyclotomySystem:
    n1: int
    n2: int
    g: int
    nu: int
    d: int
    e: int
    U: tuple[_SortedSet, _SortedSet] = field(repr=False)
    D: tuple[_SortedSet, _SortedSet] = field(repr=False)
    V: tuple[_SortedSet, _SortedSet] = field(repr=False)
    _log1: dict = field(repr=False, default_factory=dict)
    _log2: dict = field(repr=False, default_factory=dict)

    @property
    def n(self) -> int:
        return self.n1 * self.n2

    @property
    def half(self) -> int:
        return (self.n1 - 1) * (self.n2 - 1) // 2

    def units(self) -> list[int]:
        return sorted(self.U[0] + self.U[1])

    def classes(self, kind: str) -> tuple[_SortedSet, _SortedSet]:
        try:
            return {"U": self.U, "D": self.D, "V": self.V}[kind]
        except KeyError:
            raise CyclotomyError(f"unknown partition {kind!r}") from None

    def class_of(self, kind: str, x: int) -> int:
        s, i = decompose(self, x)
        return {"U": i, "D": s, "V": s + i}[kind] % 2

    def swap_unit(self, kind: str) -> int:
        """Designated representative of the nontrivial coset X_1 = c X_0."""
        return self.nu if kind == "U" else self.g

    def qr(self, j: int) -> _SortedSet:
        p = (self.n1, self.n2)[j - 1]
        return _SortedSet(x for x in range(1, p) if quadratic_class(p, x) == 0)

    def qnr(self, j: int) -> _SortedSet:
        p = (self.n1, self.n2)[j - 1]
        return _SortedSet(x for x in range(1, p) if quadratic_class(p, x) == 1)

    def to_json(self) -> dict:
        return {
            "n1": self.n1,
            "n2": self.n2,
            "g": self.g,
            "nu": self.nu,
            "d": self.d,
            "e": self.e,
            "U0": list(self.U[0]),
            "D0": list(self.D[0]),
            "V0": list(self.V[0]),
        }


@lru_cache(maxsize=None)
def build_system(n1: int, n2: int) -> CyclotomySystem:
    _check_odd_prime(n1)
    _check_odd_prime(n2)
    if n1 == n2:
        raise CyclotomyError("n1 and n2 must be distinct")
    n = n1 * n2
    d = gcd(n1 - 1, n2 - 1)
    e = (n1 - 1) * (n2 - 1) // d
    g = _crt(primitive_root(n1), n1, primitive_root(n2), n2)
    nu = _crt(g % n1, n1, 1, n2)

    buckets = {k: ([], []) for k in KINDS}
    seen = set()
    gs = 1
    for s in range(e):
        x = gs
        for i in range(d):
            seen.add(x)
            buckets["U"][i % 2].append(x)
            buckets["D"][s % 2].append(x)
            buckets["V"][(s + i) % 2].append(x)
            x = x * nu % n
        gs = gs * g % n
    units = {x for x in range(1, n) if gcd(x, n) == 1}
    if seen != units or len(seen) != e * d:
        raise CyclotomyError(f"g^s nu^i does not enumerate Z_{n}^* exactly once")

    def pair(kind):
        a, b = buckets[kind]
        return (_SortedSet(sorted(a)), _SortedSet(sorted(b)))

    return CyclotomySystem(
        n1, n2, g, nu, d, e,
        pair("U"), pair("D"), pair("V"),
        _dlog_table(n1, g % n1), _dlog_table(n2, g % n2),
    )


def decompose(sys: CyclotomySystem, x: int) -> tuple[int, int]:
    """Return the unique ``(s, i)`` with ``x = g^s nu^i (mod n)``.

    Solves ``x = g^(s+i) (mod n1)`` and ``x = g^s (mod n2)`` from discrete
    logarithms modulo each prime.
    """
    n1, n2, d, e = sys.n1, sys.n2, sys.d, sys.e
    if gcd(x, sys.n) != 1:
        raise CyclotomyError(f"{x} is not a unit modulo {sys.n}")
    a1 = sys._log1[x % n1]
    a2 = sys._log2[x % n2]
    i = (a1 - a2) % d
    # s = a2 (mod n2-1) and s = a1 - i (mod n1-1); step through s = a2 + t(n2-1)
    for t in range(e // (n2 - 1)):
        s = a2 + t * (n2 - 1)
        if (s - (a1 - i)) % (n1 - 1) == 0:
            return s, i
    raise CyclotomyError(f"no decomposition found for {x}")  # pragma: no cover


def direct_membership(sys: CyclotomySystem, q: int, kind: str, *, with_qr: bool = True) -> bool:
    """``q mod n`` lies in X_0 and (optionally) is a QR modulo both primes."""
    x = q % sys.n
    if sys.class_of(kind, x) != 0:
        return False
    if with_qr:
        return quadratic_class(sys.n1, q) == 0 and quadratic_class(sys.n2, q) == 0
    return True


def admissibility(sys: CyclotomySystem, q: int, kind: str) -> bool:
    """Gate for the eight-code construction of family ``kind`` over GF(q)."""
    if gcd(q, sys.n) != 1:
        raise CyclotomyError(f"gcd({q}, {sys.n}) > 1")
    return direct_membership(sys, q, kind)


def _pm(x: int, m: int, *residues: int) -> bool:
    return any((x - r) % m == 0 for r in residues)


@dataclass(frozen=True)
class MembershipRule:
    """A congruence characterization of ``q`` lying in a class X_0.

    ``with_qr`` adds the requirement that ``q`` be a residue modulo both
    primes.  ``exact`` rules are equivalences; the others only promise the
    congruence implies membership.
    """

    q: int
    kind: str
    with_qr: bool
    condition: Callable[[int, int], bool]
    text: str
    exact: bool = True


def _both(m, *res):
    return lambda a, b: _pm(a, m, *res) and _pm(b, m, *res)


MEMBERSHIP_RULES = {
    "2-in-U0": MembershipRule(
        2, "U", False,
        lambda a, b: _both(8, 1, -1)(a, b) or _both(8, 3, -3)(a, b),
        "n1, n2 both = +-1 (mod 8) or both = +-3 (mod 8)"),
    "2-in-D0": MembershipRule(2, "D", False, lambda a, b: _pm(b, 8, 1, -1), "n2 = +-1 (mod 8)"),
    "2-in-V0-QR": MembershipRule(2, "V", True, _both(8, 1, -1), "n1, n2 both = +-1 (mod 8)"),
    "3-in-U0-QR": MembershipRule(3, "U", True, _both(12, 1, -1), "n1, n2 both = +-1 (mod 12)"),
    "3-in-D0-QR": MembershipRule(3, "D", True, _both(12, 1, -1), "n1, n2 both = +-1 (mod 12)"),
    # the QR conditions force U_0, D_0 and V_0 membership simultaneously
    "3-in-V0-QR": MembershipRule(3, "V", True, _both(12, 1, -1), "n1, n2 both = +-1 (mod 12)"),
    "4-in-U0-QR": MembershipRule(4, "U", True, _both(4, 1, -1), "n1, n2 both = +-1 (mod 4)"),
    "4-in-D0-QR": MembershipRule(4, "D", True, lambda a, b: _pm(b, 4, 1, -1), "n2 = +-1 (mod 4)"),
    "4-in-V0-QR": MembershipRule(4, "V", True, _both(4, 1, -1), "n1, n2 both = +-1 (mod 4)",
                                 exact=False),
}


def rule_for(q: int, kind: str) -> MembershipRule | None:
    for rule in MEMBERSHIP_RULES.values():
        if rule.q == q and rule.kind == kind:
            return rule
    return None


def congruence_predicates(n1: int, n2: int, q: int) -> dict[str, bool]:
    """Congruence side of every membership rule for this ``q``."""
    return {name: r.condition(n1, n2) for name, r in MEMBERSHIP_RULES.items() if r.q == q}


def membership_predicates(sys: CyclotomySystem, q: int) -> dict[str, bool]:
    """Direct membership side of the same rules."""
    return {
        name: direct_membership(sys, r.q, r.kind, with_qr=r.with_qr)
        for name, r in MEMBERSHIP_RULES.items()
        if r.q == q
    }


def minus_one_form(sys: CyclotomySystem) -> tuple[str, int | None]:
    """Locate -1: branch A is ``g^(e/2)``; branch B is ``g^t nu^(d/2)``."""
    s, i = decompose(sys, sys.n - 1)
    ratio = (sys.n1 - 1) * (sys.n2 - 1) // sys.d**2
    if ratio % 2:
        if (s, i) != (sys.e // 2, 0):
            raise CyclotomyError(f"-1 = g^{s} nu^{i}, expected g^{sys.e // 2}")
        return "A", None
    if i != sys.d // 2:
        raise CyclotomyError(f"-1 = g^{s} nu^{i}, expected i = {sys.d // 2}")
    return "B", s


def minus_one_checks(sys: CyclotomySystem) -> dict[str, tuple[bool, bool]]:
    """(hypothesis holds, conclusion agrees with membership) for the -1 results.

    The conclusion column is meaningful only where the hypothesis holds.
    """
    n1, n2 = sys.n1, sys.n2
    m1 = sys.n - 1
    s, i = decompose(sys, m1)
    in_D1 = s % 2 == 1
    in_V1 = (s + i) % 2 == 1
    qnr_both = quadratic_class(n1, m1) == 1 and quadratic_class(n2, m1) == 1
    out = {}
    hyp = _pm(n1, 8, 1, -1) and _pm(n2, 8, 1, -1)
    out["minus-one-D-binary"] = (hyp, in_D1 == _pm(n2, 8, -1))
    hyp = _pm(n1, 4, -1) and _pm(n2, 4, -1)
    out["minus-one-D-quaternary"] = (hyp, in_D1 and qnr_both)
    hyp = _pm(n1, 8, 1, -1) and _pm(n2, 8, 1, -1)
    out["minus-one-V-binary"] = (hyp, (in_V1 and qnr_both) == (_pm(n1, 8, -1) and _pm(n2, 8, -1)))
    hyp = _pm(n1, 4, 1, -1) and _pm(n2, 4, 1, -1)
    out["minus-one-V-quaternary"] = (hyp, (in_V1 and qnr_both) == (_pm(n1, 4, -1) and _pm(n2, 4, -1)))
    return out


def is_difference_set(n: int, S: Iterable[int]) -> tuple[bool, int | None]:
    """Brute-force check that ``S`` is a (n, |S|, lambda) difference set."""
    S = sorted({x % n for x in S})
    counts = [0] * n
    for a in S:
        for b in S:
            if a != b:
                counts[(a - b) % n] += 1
    lam = counts[1] if n > 1 else 0
    if all(c == lam for c in counts[1:]):
        return True, lam
    return False, None


@dataclass
class InconsistencyReport:
    u1_both_qnr: list[int]
    d1_both_qnr: list[int]
    v1_both_qnr: list[int]
    g_is_v_witness: bool

    @property
    def ok(self) -> bool:
        return not self.u1_both_qnr and bool(self.d1_both_qnr) and self.g_is_v_witness


def inconsistency_scan(sys: CyclotomySystem) -> InconsistencyReport:
    """Scan Z_n^* for units that are non-residues modulo both primes.

    Reports them split by U_1, D_1 and V_1 membership.  None should lie in
    U_1; D_1 and V_1 should each contain some, and ``g`` is one for V.
    """
    both = [
        x for x in sys.units()
        if quadratic_class(sys.n1, x) == 1 and quadratic_class(sys.n2, x) == 1
    ]
    g = sys.g
    return InconsistencyReport(
        u1_both_qnr=[x for x in both if x in sys.U[1]],
        d1_both_qnr=[x for x in both if x in sys.D[1]],
        v1_both_qnr=[x for x in both if x in sys.V[1]],
        g_is_v_witness=g in sys.V[1] and g in both,
    )


def group_law_check(sys: CyclotomySystem, kind: str) -> bool:
    """X_0 is a subgroup of order half, a X_i = X_i for a in X_0 and
    a X_i = X_{1-i} for a in X_1 (checked on the full multiplication table)."""
    units = np.array(sys.units(), dtype=np.int64)
    cls = np.full(sys.n, -1, dtype=np.int64)
    for c in (0, 1):
        cls[np.array(sys.classes(kind)[c], dtype=np.int64)] = c
    if (cls[units] == 0).sum() != sys.half or cls[1] != 0:
        return False
    prod = np.multiply.outer(units, units) % sys.n
    expected = cls[units][:, None] ^ cls[units][None, :]
    return bool((cls[prod] == expected).all())


@dataclass
class ScanResult:
    pairs: int = 0
    checks: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def proposition_scan(limit: int = 50, qs: Iterable[int] = (2, 3, 4)) -> ScanResult:
    """Compare every congruence rule, the -1 location results, the group
    laws and the non-residue scans with direct computation, for all prime
    pairs 3 <= n1 < n2 <= limit."""
    res = ScanResult()
    primes = list(primerange(3, limit + 1))
    for a, n1 in enumerate(primes):
        for n2 in primes[a + 1:]:
            sys = build_system(n1, n2)
            res.pairs += 1
            tag = f"({n1},{n2})"
            for q in qs:
                if gcd(q, sys.n) != 1:
                    continue
                cong = congruence_predicates(n1, n2, q)
                direct = membership_predicates(sys, q)
                for name, c in cong.items():
                    res.checks += 1
                    ok = c == direct[name] if MEMBERSHIP_RULES[name].exact else (not c or direct[name])
                    if not ok:
                        res.mismatches.append(f"{tag} {name}: congruence {c}, membership {direct[name]}")
            res.checks += 1
            try:
                minus_one_form(sys)
            except CyclotomyError as exc:
                res.mismatches.append(f"{tag} -1 location: {exc}")
            for name, (hyp, agrees) in minus_one_checks(sys).items():
                res.checks += 1
                if hyp and not agrees:
                    res.mismatches.append(f"{tag} {name}")
            for kind in KINDS:
                res.checks += 1
                if not group_law_check(sys, kind):
                    res.mismatches.append(f"{tag} group law {kind}")
            res.checks += 1
            rep = inconsistency_scan(sys)
            if not rep.ok:
                res.mismatches.append(f"{tag} non-residue scan {rep}")
    return res
