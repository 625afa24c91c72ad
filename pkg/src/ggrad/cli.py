"""Command-line front end: ``ggrad decompose|weight|table|catalog|check``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from . import casimir, catalog, oracle, selection
from .dominance import certify, dominant_sweep
from .errors import GroupError, InternalInconsistency, NotDominant, NotRelevant, OutOfRange, WeightFormatError, WeightLengthError
from .weight_space import FAMILIES, GroupId, descriptor, parse_weight

USAGE_ERRORS = (GroupError, WeightFormatError, WeightLengthError, NotDominant, NotRelevant, OutOfRange)

HIGHEST_WEIGHT_RULE = {
    "so": "λ1 ≥ … ≥ λ(m-1) ≥ |λm| (n even), λ1 ≥ … ≥ λm ≥ 0 (n odd), λ ∈ Z^m",
    "spin": "as SO(n), λ ∈ Z^m ∪ (1/2+Z)^m",
    "u": "λ1 ≥ … ≥ λm, λ ∈ Z^m",
    "su": "λ1 ≥ … ≥ λm, λ ∈ Z^m, stored with λm = 0",
    "sp": "λ1 ≥ … ≥ λm ≥ 0, λ ∈ Z^m",
    "sp1sp": "β ≥ 0, λ1 ≥ … ≥ λm ≥ 0, (β; λ) ∈ Z^(m+1)",
    "g2": "λ1 ≥ λ2 ≥ 0, λ ∈ Z^2",
    "spin7": "λ1 ≥ λ2 ≥ λ3 ≥ 0, λ ∈ Z^3 ∪ (1/2+Z)^3",
}

SU_NOTE = "SU(m) weights are reported in the normal form λm = 0; row formulas use the traceless representative."


class UsageError(Exception):
    pass


def q(x) -> str:
    """Rational to its exact string form, "p/q" or "p"."""
    return str(Fraction(x))


def qs(w) -> List[str]:
    return [q(c) for c in w]


@dataclass
class TargetRecord:
    epsilon: List[str]
    mu: List[str]
    dim: int
    conformal_weight: str
    names: List[str] = field(default_factory=list)


@dataclass
class OutputRecord:
    group: str
    param: Optional[int]
    lam: List[str]
    targets: List[TargetRecord]
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> str:
        d = asdict(self)
        d = {"group": d["group"], "param": d["param"], "lambda": d["lam"],
             "targets": d["targets"], "notes": d["notes"]}
        return json.dumps(d, ensure_ascii=False, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        d = json.loads(text)
        return cls(
            group=d["group"], param=d["param"], lam=d["lambda"],
            targets=[TargetRecord(**t) for t in d["targets"]],
            notes=d.get("notes", []),
        )


def record_for(d: selection.Decomposition) -> OutputRecord:
    gid = d.group
    targets = [
        TargetRecord(qs(t.epsilon), qs(t.mu.weight), t.dim, q(t.conformal_weight),
                     catalog.target_names(gid, d.lam.weight, t.epsilon))
        for t in d.targets
    ]
    notes = [SU_NOTE] if gid.family == "su" else []
    return OutputRecord(gid.family, gid.size, qs(d.lam.weight), targets, notes)


# -- argument handling -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _group_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", required=True, choices=FAMILIES,
                   help="so, spin (the spin cover of SO(n)), u, su, sp, sp1sp, g2, "
                        "or spin7 (the Spin(7)-structure group on 8-manifolds)")
    p.add_argument("--n", type=int, help="dimension n for so/spin")
    p.add_argument("--m", type=int, help="size m for u/su/sp/sp1sp")


def _group(args) -> GroupId:
    fam = args.group
    if fam in ("so", "spin"):
        if args.n is None or args.m is not None:
            raise UsageError(f"--group {fam} takes --n N")
        return GroupId(fam, args.n)
    if fam in ("g2", "spin7"):
        fixed = 7 if fam == "g2" else 8
        if args.m is not None or args.n not in (None, fixed):
            raise UsageError(f"--group {fam} has n = {fixed} and takes no size")
        return GroupId(fam)
    if args.m is None or args.n is not None:
        raise UsageError(f"--group {fam} takes --m M")
    return GroupId(fam, args.m)


def _env_max_coord(default: int) -> int:
    raw = os.environ.get("GGRAD_MAX_COORD")
    if raw is None:
        return default
    try:
        k = int(raw)
    except ValueError:
        raise UsageError(f"GGRAD_MAX_COORD must be an integer, got {raw!r}") from None
    if k < 0:
        raise UsageError("GGRAD_MAX_COORD must be non-negative")
    return k


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ggrad", description="Generalized gradients: decompositions and conformal weights.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="decompose τ ⊗ λ into gradient targets")
    _group_args(p)
    p.add_argument("--weight", required=True, help="highest weight, e.g. 1,1,0 or 3/2,1/2,1/2")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("weight", help="conformal weight of one gradient by both paths")
    _group_args(p)
    p.add_argument("--weight", required=True)
    p.add_argument("--epsilon", required=True, help="τ-weight, e.g. 0,0,1")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("table", help="regenerate a table row and verify every cell")
    _group_args(p)
    p.add_argument("--sweep", type=int, help="max |coordinate| (default GGRAD_MAX_COORD or 2)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("catalog", help="named operator entry")
    p.add_argument("name", choices=catalog.NAMES)
    p.add_argument("--n", type=int, help="dimension n (forms and spinor operators)")
    p.add_argument("--m", type=int, help="size m (Kähler gradients)")
    p.add_argument("--p", type=int, help="form degree")
    p.add_argument("--index", type=int, help="index i for Kähler gradients")
    p.add_argument("--chirality", choices=("+", "-"))
    p.add_argument("--weight", help="highest weight for Kähler gradients")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="run the invariant suite")
    p.add_argument("--max-coord", type=int, help="max |coordinate| (default GGRAD_MAX_COORD or 2)")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--json", action="store_true")
    return ap


# -- subcommands --------------------------------------------------------------------

def cmd_decompose(args, out) -> int:
    gid = _group(args)
    lam = certify(gid, parse_weight(args.weight))
    rec = record_for(selection.decompose(gid, lam))
    if args.json:
        print(rec.to_json(), file=out)
        return 0
    print(f"{gid}  λ = ({', '.join(rec.lam)})", file=out)
    print(f"{'ε':<22}{'λ+ε':<26}{'dim':>8}  {'w':>8}  names", file=out)
    for t in rec.targets:
        print(f"{_tup(t.epsilon):<22}{_tup(t.mu):<26}{t.dim:>8}  {t.conformal_weight:>8}  {', '.join(t.names)}", file=out)
    for note in rec.notes:
        print(f"note: {note}", file=out)
    return 0


def _tup(xs: Sequence[str]) -> str:
    return "(" + ", ".join(xs) + ")"


def cmd_weight(args, out) -> int:
    gid = _group(args)
    g = descriptor(gid)
    lam = certify(gid, parse_weight(args.weight))
    eps = parse_weight(args.epsilon)
    a = casimir.conformal_weight(g, lam, eps).value
    cf = casimir.closed_form(g, lam.weight, eps)
    agree = a == cf.value
    if args.json:
        print(json.dumps({"group": gid.family, "param": gid.size, "lambda": qs(lam.weight),
                          "epsilon": qs(eps), "casimir": q(a), "closed_form": q(cf.value),
                          "label": cf.label, "agree": agree}, ensure_ascii=False), file=out)
    else:
        print(f"{gid}  λ = {lam}  ε = {_tup(qs(eps))}", file=out)
        print(f"casimir path : {q(a)}", file=out)
        print(f"closed form  : {q(cf.value)}   [{cf.label} = {cf.formula}]", file=out)
        print("agree" if agree else "DISAGREE", file=out)
        if gid.family == "su":
            print(f"note: {SU_NOTE}", file=out)
    return 0 if agree else 2


def cmd_table(args, out) -> int:
    gid = _group(args)
    g = descriptor(gid)
    k = args.sweep if args.sweep is not None else _env_max_coord(2)
    if k < 0:
        raise UsageError("--sweep must be non-negative")
    cells = []
    for lam in sorted(dominant_sweep(gid, k)):
        for eps in selection.relevant_weights(gid, lam):
            cf = casimir.closed_form(g, lam.weight, eps)
            a = casimir.conformal_weight(g, lam, eps).value
            cells.append((lam, eps, cf, a, a == cf.value))
    failed = sum(1 for c in cells if not c[4])
    if args.json:
        print(json.dumps({
            "group": gid.family, "param": gid.size, "sweep": k,
            "cells": [{"lambda": qs(l.weight), "epsilon": qs(e), "label": cf.label,
                       "closed_form": q(cf.value), "casimir": q(a), "verified": ok}
                      for l, e, cf, a, ok in cells],
            "verified": len(cells) - failed, "failed": failed,
        }, ensure_ascii=False), file=out)
    else:
        print(f"dim(M) = {g.n}   {gid}   highest weight: {HIGHEST_WEIGHT_RULE[gid.family]}", file=out)
        rows = sorted({(cf.label, cf.formula) for _, _, cf, _, _ in cells})
        print("conformal weights: " + "; ".join(f"{lab} = {f}" for lab, f in rows), file=out)
        print(f"{'λ':<26}{'ε':<22}{'label':<14}{'closed':>8}{'casimir':>9}  verdict", file=out)
        for lam, eps, cf, a, ok in cells:
            print(f"{_tup(qs(lam.weight)):<26}{_tup(qs(eps)):<22}{cf.label:<14}{q(cf.value):>8}{q(a):>9}  "
                  f"{'VERIFIED' if ok else 'FAILED'}", file=out)
        print(f"{len(cells) - failed}/{len(cells)} cells VERIFIED", file=out)
        if gid.family == "su":
            print(f"note: {SU_NOTE}", file=out)
    return 2 if failed else 0


def cmd_catalog(args, out) -> int:
    kahler = args.name.startswith("kahler")
    size = args.m if kahler else args.n
    if size is None:
        raise UsageError(f"{args.name} needs {'--m' if kahler else '--n'}")
    lam = parse_weight(args.weight) if args.weight else None
    op = catalog.lookup(args.name, size, p=args.p, index=args.index, chirality=args.chirality, lam=lam)
    rec = {
        "name": op.name, "group": op.group.family, "param": op.group.size,
        "lambda": qs(op.lam.weight), "epsilon": qs(op.epsilon),
        "conformal_weight": q(op.expected_weight), "endomorphism_type": op.endomorphism_type,
        "detail": op.detail, "note": catalog.KERNEL_NOTE,
    }
    if args.json:
        print(json.dumps(rec, ensure_ascii=False), file=out)
        return 0
    print(f"{op.name} ({op.detail})" if op.detail else op.name, file=out)
    print(f"group   : {op.group}", file=out)
    print(f"λ       : {op.lam}", file=out)
    print(f"ε       : {_tup(rec['epsilon'])}", file=out)
    print(f"weight  : {rec['conformal_weight']}", file=out)
    print(f"endomorphism type: {'yes' if op.endomorphism_type else 'no'}", file=out)
    if op.name in ("exterior-derivative", "codifferential"):
        print(f"note: {catalog.YAMABE_NOTE}", file=out)
    print(f"note: {catalog.KERNEL_NOTE}", file=out)
    return 0


def check_groups(max_rank: int) -> List[GroupId]:
    gids = []
    for n in range(3, min(12, 2 * max_rank + 1) + 1):
        gids += [GroupId("so", n), GroupId("spin", n)]
    for m in range(1, max_rank + 1):
        gids += [GroupId("u", m), GroupId("sp", m)]
        if m >= 3:
            gids.append(GroupId("su", m))
        if m + 1 <= max_rank:
            gids.append(GroupId("sp1sp", m))
    if max_rank >= 2:
        gids.append(GroupId("g2"))
    if max_rank >= 3:
        gids.append(GroupId("spin7"))
    return gids


def run_checks(max_coord: int, max_rank: int) -> dict:
    """Run every invariant over the sweep and count passes and failures."""
    counts = {k: [0, 0] for k in ("oracle", "dimension", "two_path", "ordering", "adjoint", "matrix", "laplacian")}

    def tally(key, ok):
        counts[key][0 if ok else 1] += 1

    for gid in check_groups(max_rank):
        g = descriptor(gid)
        for lam in dominant_sweep(gid, max_coord):
            try:
                d = selection.decompose(gid, lam)
            except InternalInconsistency:
                tally("oracle", False)
                continue
            tally("oracle", Counter(t.mu for t in d.targets) == oracle.tensor_decompose_oracle(g, lam))
            total = sum(m for _, m in g.tau_weights)
            tally("dimension", sum(t.dim for t in d.targets) == total * oracle.weyl_dim(g, lam))
            for t in d.targets:
                tally("two_path", casimir.closed_form(g, lam.weight, t.epsilon).value == t.conformal_weight)
                mu, back, w = catalog.adjoint(g, lam, t.epsilon)
                mu2, eps2, w2 = catalog.adjoint(g, mu, back)
                tally("adjoint", mu2 == lam and eps2 == t.epsilon
                      and casimir.conformal_weight(g, mu2, eps2).value == t.conformal_weight)
            if gid.is_spin_or_so:
                tally("ordering", casimir.ordering_check(g, lam))
    for n in range(3, 7):
        for p in range(1, n):
            got = oracle.weight_operator_eigenvalues_forms(n, p)
            tally("matrix", got == forms_expected(n, p))
    for n in range(4, 13, 2):
        for row in catalog.laplacian_sweep(n):
            tally("laplacian", row.delta_d == (2 * row.p == n - 2) and row.d_delta == (2 * row.p == n + 2))
    return {k: {"passed": v[0], "failed": v[1]} for k, v in counts.items()}


def forms_expected(n: int, p: int):
    """Spectrum of B on (R^n)* ⊗ Λ^p predicted by selection and the Casimir path."""
    gid = GroupId("so", n)
    g = descriptor(gid)
    acc: Counter = Counter()
    for lw in catalog.form_highest_weights(n, p):
        for t in selection.decompose(gid, certify(gid, lw)).targets:
            acc[t.conformal_weight] += t.dim
    return sorted(acc.items())


def cmd_check(args, out) -> int:
    k = args.max_coord if args.max_coord is not None else _env_max_coord(2)
    if k < 0 or args.max_rank < 1:
        raise UsageError("--max-coord must be >= 0 and --max-rank >= 1")
    start = time.monotonic()
    counts = run_checks(k, args.max_rank)
    elapsed = time.monotonic() - start
    failed = sum(v["failed"] for v in counts.values())
    if args.json:
        print(json.dumps({"max_coord": k, "max_rank": args.max_rank, "checks": counts,
                          "seconds": round(elapsed, 2)}), file=out)
    else:
        for key, v in counts.items():
            status = "ok" if v["failed"] == 0 else "FAILED"
            print(f"{key:<10} {v['passed']:>7} passed {v['failed']:>5} failed  {status}", file=out)
        print(f"{'ALL VERIFIED' if failed == 0 else 'VERIFICATION FAILED'} in {elapsed:.1f}s", file=out)
    return 2 if failed else 0


COMMANDS = {
    "decompose": cmd_decompose, "weight": cmd_weight, "table": cmd_table,
    "catalog": cmd_catalog, "check": cmd_check,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.cmd](args, out)
    except (UsageError,) + USAGE_ERRORS as e:
        print(f"ggrad: error: {e}", file=err)
        return 1
    except InternalInconsistency as e:
        print(f"ggrad: verification failed: {e}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
