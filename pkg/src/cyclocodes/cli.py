"""Command-line front end: ``cyclocodes <command> ...``.

Exit status: 0 on success, 1 when a verification finds a mismatch, 2 on
usage errors or inadmissible parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from math import gcd

from . import tables
from .codes import (
    FAMILIES,
    CensusObstruction,
    CodeLabel,
    InadmissibleCode,
    bch_bound,
    census_count,
    code_from_generator,
    construct_code,
)
from .cyclotomy import (
    CyclotomyError,
    build_system,
    inconsistency_scan,
    membership_predicates,
    minus_one_form,
    proposition_scan,
)
from .gf import FieldError, field_create, prime_power
from .polyring import Poly, factor_labels, factor_xn_minus_1
from .weight import DEFAULT_BUDGET, min_weight_exhaustive

SUITES = ("factorizations", "tables", "propositions", "bounds", "splittings")


class UsageError(Exception):
    pass


@dataclass
class JobConfig:
    command: str
    n1: int | None = None
    n2: int | None = None
    q: int | None = None
    family: str | None = None
    triple: tuple[int, int, int] | None = None
    fmt: str = "json"
    budget: int = DEFAULT_BUDGET
    threads: int = 1
    long: bool = False
    cache_dir: str | None = None

    def validate(self) -> None:
        for name in ("n1", "n2"):
            v = getattr(self, name)
            if v is not None and (v < 3 or not _is_prime(v)):
                raise UsageError(f"{name} = {v} must be an odd prime")
        if self.n1 is not None and self.n2 is not None and self.n1 == self.n2:
            raise UsageError("n1 and n2 must be distinct")
        if self.q is not None:
            try:
                prime_power(self.q)
            except FieldError as exc:
                raise UsageError(str(exc)) from None
        if self.threads < 1 or self.budget < 1:
            raise UsageError("--threads and --budget must be positive")


def _is_prime(v: int) -> bool:
    from sympy import isprime
    return isprime(v)


def _triple(text: str) -> tuple[int, int, int]:
    t = text.strip("()").replace(",", "")
    if len(t) != 3 or any(c not in "01" for c in t):
        raise argparse.ArgumentTypeError(f"triple must look like 010, got {text!r}")
    return tuple(int(c) for c in t)


# -- output ---------------------------------------------------------------------------

def _emit(data, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(data, indent=1, sort_keys=False) + "\n")
        return
    rows = data if isinstance(data, list) else [data]
    if not rows:
        return
    keys = list(rows[0].keys())
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
        out.write(buf.getvalue())
        return
    out.write("| " + " | ".join(keys) + " |\n")
    out.write("|" + "---|" * len(keys) + "\n")
    for r in rows:
        out.write("| " + " | ".join(str(r[k]) for k in keys) + " |\n")


def _cache(cfg: JobConfig) -> tables.WeightCache:
    return tables.WeightCache(cfg.cache_dir)


# -- commands -------------------------------------------------------------------------

def cmd_factor(cfg: JobConfig, out) -> int:
    factors = factor_xn_minus_1(cfg.n1, cfg.n2, cfg.q)
    rows = [{"label": lab, "degree": f.degree, "polynomial": str(f)}
            for lab, f in zip(factor_labels(factors), factors)]
    _emit(rows, cfg.fmt, out)
    return 0


def cmd_construct(cfg: JobConfig, out, even_like: bool = False) -> int:
    code = construct_code(CodeLabel(cfg.family, cfg.n1, cfg.n2, cfg.q, cfg.triple), even_like=even_like)
    desc = code.descriptor()
    b = bch_bound(code)
    desc["bch_bound"] = b.bound
    _emit(desc, cfg.fmt, out)
    return 0


def cmd_table(cfg: JobConfig, out, kind: str, stop_at: int | None, odd_like: bool) -> int:
    rows = tables.table_rows(kind, cfg.n1, cfg.n2, cfg.q, stop_at=stop_at, budget=cfg.budget,
                             odd_like=odd_like, threads=cfg.threads, long=cfg.long, cache=_cache(cfg))
    if not odd_like:
        for r in rows:
            r.pop("min_odd_like_weight")
    _emit(rows, cfg.fmt, out)
    return 0


def cmd_minweight(cfg: JobConfig, out, args) -> int:
    if args.generator:
        if args.length is None or args.field is None:
            raise UsageError("--generator needs --length and --field")
        ctx = field_create(*prime_power(args.field))
        code = code_from_generator(args.length, args.field, Poly.parse(args.generator, ctx))
    else:
        if cfg.family is None or cfg.triple is None:
            raise UsageError("give FAMILY N1 N2 Q TRIPLE or --generator")
        code = construct_code(CodeLabel(cfg.family, cfg.n1, cfg.n2, cfg.q, cfg.triple))
    if args.exhaustive:
        rep = min_weight_exhaustive(code, budget=cfg.budget)
        text = rep.dumps()
    else:
        rep = tables.code_weight(code, stop_at=args.stop_at, budget=cfg.budget, odd_like=args.odd_like,
                                 threads=cfg.threads, long=cfg.long, cache=_cache(cfg))
        text = rep.dumps()
    if cfg.fmt == "json":
        out.write(text + "\n")
    else:
        data = json.loads(text)
        for k in ("certificate", "odd_certificate", "trace"):
            data.pop(k, None)
        _emit(data, cfg.fmt, out)
    return 0


def cmd_verify(cfg: JobConfig, out, suite: str, limit: int) -> int:
    triples = [(cfg.n1, cfg.n2, cfg.q)] if cfg.n1 else list(tables.REFERENCE_TRIPLES)
    checks: list[tables.Check] = []
    cache = _cache(cfg)
    if suite == "factorizations":
        checks += tables.check_factorizations() + tables.check_class_polynomials()
    elif suite == "tables":
        for t in triples:
            kinds = list(FAMILIES) + (["census"] if tables.reference_table("census", *t) else [])
            for kind in kinds:
                if tables.reference_table(kind, *t) is None:
                    continue
                checks += tables.check_table(kind, *t, long=cfg.long, cache=cache, threads=cfg.threads)
    elif suite == "propositions":
        res = proposition_scan(limit)
        checks.append(tables.Check(f"prime pairs up to {limit}", res.ok,
                                   f"{res.pairs} pairs, {res.checks} checks, {len(res.mismatches)} mismatches"))
        checks += [tables.Check(m, False) for m in res.mismatches]
    elif suite == "bounds":
        for t in triples:
            checks += tables.check_bounds(*t, long=cfg.long, cache=cache)
    elif suite == "splittings":
        for t in triples:
            checks += tables.check_splittings(*t)
    if cfg.fmt == "json":
        _emit([{"check": c.name, "ok": c.ok, "detail": c.detail} for c in checks], "json", out)
    else:
        for c in checks:
            out.write(c.line() + "\n")
    return 0 if all(c.ok for c in checks) else 1


def cmd_scan(cfg: JobConfig, out, limit: int | None) -> int:
    if cfg.n1 is None:
        res = proposition_scan(limit or 50)
        _emit({"pairs": res.pairs, "checks": res.checks, "mismatches": res.mismatches}, cfg.fmt, out)
        return 0 if res.ok else 1
    sys_ = build_system(cfg.n1, cfg.n2)
    form, t = minus_one_form(sys_)
    inc = inconsistency_scan(sys_)
    data = {
        "n1": cfg.n1, "n2": cfg.n2, "g": sys_.g, "nu": sys_.nu, "d": sys_.d, "e": sys_.e,
        "minus_one": f"g^{sys_.e // 2}" if form == "A" else f"g^{t} nu^{sys_.d // 2}",
        "membership": {q: membership_predicates(sys_, q) for q in (2, 3, 4) if gcd(q, sys_.n) == 1},
        "both_nonresidue_units": {"U1": len(inc.u1_both_qnr), "D1": len(inc.d1_both_qnr),
                                  "V1": len(inc.v1_both_qnr)},
    }
    sizes = {}
    for q in (2, 3, 4):
        if gcd(q, sys_.n) == 1:
            try:
                sizes[q] = census_count(cfg.n1, cfg.n2, q)
            except CensusObstruction as exc:
                sizes[q] = str(exc)
    data["census_size"] = sizes
    _emit(data, cfg.fmt, out)
    return 0


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "md"), default="json")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max codewords (exhaustive) or messages (enumeration) per code")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--long", action="store_true", help="no budget; checkpoint and resume")
    common.add_argument("--cache-dir", default=None, help="result cache (default $CACHE_DIR)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="cyclocodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def triple_args(sp, optional=False):
        nargs = "?" if optional else None
        sp.add_argument("n1", type=int, nargs=nargs)
        sp.add_argument("n2", type=int, nargs=nargs)
        sp.add_argument("q", type=int, nargs=nargs)

    sp = sub.add_parser("factor", parents=[common], help="factor x^(n1 n2) - 1 over GF(q)")
    triple_args(sp)

    sp = sub.add_parser("construct", parents=[common], help="describe a family code")
    sp.add_argument("family", choices=FAMILIES)
    triple_args(sp)
    sp.add_argument("triple", type=_triple)
    sp.add_argument("--even-like", action="store_true", help="include the factor x - 1")

    sp = sub.add_parser("table", parents=[common], help="minimum weights of a family or the census")
    sp.add_argument("kind", choices=(*FAMILIES, "census"))
    triple_args(sp)
    sp.add_argument("--stop-at", type=int, default=None)
    sp.add_argument("--odd-like", action="store_true")

    sp = sub.add_parser("minweight", parents=[common], help="minimum weight of one code")
    sp.add_argument("family", nargs="?", choices=FAMILIES)
    triple_args(sp, optional=True)
    sp.add_argument("triple", nargs="?", type=_triple)
    sp.add_argument("--generator", help="generator polynomial text, e.g. 'x^3 + x + 1'")
    sp.add_argument("--length", type=int)
    sp.add_argument("--field", type=int)
    sp.add_argument("--stop-at", type=int, default=None)
    sp.add_argument("--odd-like", action="store_true")
    sp.add_argument("--exhaustive", action="store_true", help="enumerate all q^k codewords")

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    triple_args(sp, optional=True)
    sp.add_argument("--max", type=int, default=50, help="prime bound for the propositions scan")

    sp = sub.add_parser("scan", parents=[common], help="cyclotomy data for a pair, or a rule scan")
    sp.add_argument("n1", type=int, nargs="?")
    sp.add_argument("n2", type=int, nargs="?")
    sp.add_argument("--max", type=int, default=None)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    cfg = JobConfig(
        command=args.command,
        n1=getattr(args, "n1", None), n2=getattr(args, "n2", None), q=getattr(args, "q", None),
        family=getattr(args, "family", None), triple=getattr(args, "triple", None),
        fmt=args.fmt, budget=args.budget, threads=args.threads, long=args.long,
        cache_dir=args.cache_dir,
    )
    try:
        if (cfg.n1 is None) != (cfg.n2 is None) or (cfg.command != "scan" and (cfg.n1 is None) != (cfg.q is None)):
            raise UsageError("give all of N1 N2 Q or none")
        cfg.validate()
        if args.command == "factor":
            return cmd_factor(cfg, out)
        if args.command == "construct":
            return cmd_construct(cfg, out, args.even_like)
        if args.command == "table":
            return cmd_table(cfg, out, args.kind, args.stop_at, args.odd_like)
        if args.command == "minweight":
            return cmd_minweight(cfg, out, args)
        if args.command == "verify":
            return cmd_verify(cfg, out, args.suite, args.max)
        if args.command == "scan":
            return cmd_scan(cfg, out, args.max)
    except (UsageError, InadmissibleCode, CensusObstruction, CyclotomyError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
