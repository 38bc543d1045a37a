"""Command-line front end.

    veronese-koszul betti --n 3 --jmax 10
    veronese-koszul verify garnir --n 4 --t 3 --seed 7 --json
    veronese-koszul cycle Z 1 --n 2
    veronese-koszul cycle z "1,2|2" --n 2 --check-cycle
    veronese-koszul straighten "2,3|1" --n 3
    veronese-koszul matching --n 5 --torsion
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict, dataclass

from . import cycles, glaction, koszul, matching, partitions
from .linalg import ExactField, field_of, write_matrix_market

SUITES = ("garnir", "straighten", "isotypic", "decomposition", "strand", "lowest-strand",
          "lr", "matching", "char2", "nonzero-products")


@dataclass
class RunConfig:
    n: int = 3
    char: int = 0
    imax: int | None = None
    jmax: int | None = None
    jmin: int = 0
    t: int = 2
    seed: int = 0
    count: int = 20
    json: bool = False
    out: str | None = None
    torsion: bool = False
    check_cycle: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("--n must be at least 1")
        field_of(self.char)  # validates the characteristic
        for name in ("imax", "jmax", "jmin", "t", "count"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"--{name} must be non-negative")

    @property
    def field(self) -> ExactField:
        return field_of(self.char)

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("out")
        return d


class Report:
    def __init__(self, command: str, cfg: RunConfig):
        self.command = command
        self.cfg = cfg
        self.checks: list[dict] = []

    def check(self, name, inputs, expected, got, ok=None, experiment=False):
        if ok is None:
            ok = expected == got
        entry = {"name": name, "inputs": inputs, "expected": expected, "got": got,
                 "pass": True if experiment else bool(ok)}
        if experiment:
            entry["experiment"] = True
        self.checks.append(entry)

    @property
    def failures(self) -> int:
        return sum(1 for c in self.checks if not c["pass"])

    def as_dict(self) -> dict:
        return {"command": self.command, "config": self.cfg.echo(),
                "checks": self.checks, "failures": self.failures}

    def dumps(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2, default=str)


# -- verify suites ----------------------------------------------------------------

def _verify_garnir(rep: Report, cfg: RunConfig):
    f = cfg.field
    rng = random.Random(cfg.seed)
    cases = []
    for t in range(1, min(cfg.t, 2) + 1):
        for a, btail in cycles.exhaustive_garnir_cases(min(cfg.n, 3), t):
            cases.append((min(cfg.n, 3), a, btail))
    for _ in range(cfg.count):
        t = rng.randint(1, max(cfg.t, 1))
        n = rng.randint(1, cfg.n)
        cases.append((n, *cycles.random_garnir_case(n, t, rng)))
    for n, a, btail in cases:
        got = cycles.garnir_sum(a, btail, n, f).to_text()
        rep.check("garnir", {"n": n, "a": list(a), "btail": list(btail)}, "0", got)


def _verify_straighten(rep: Report, cfg: RunConfig):
    f = cfg.field
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count):
        t = rng.randint(1, max(cfg.t, 1))
        case = cycles.random_non_tableau(cfg.n, t, rng)
        if case is None:
            continue
        a, b = case
        coeffs, depth = cycles.straighten(a, b, cfg.n, f, return_depth=True)
        ok = cycles.expand_combination(coeffs, cfg.n, f) == cycles.z_cycle(a, b, cfg.n, f)
        ok = ok and depth <= cycles.omega(a, b) and all(cycles.omega(p.a, p.b) == 0 for p in coeffs)
        rep.check("straighten", {"n": cfg.n, "a": list(a), "b": list(b)},
                  "exact reconstruction", {str(p): str(c) for p, c in coeffs.items()}, ok)


def _self_conjugate_up_to(n: int) -> list:
    return [lam for N in range(n * n + 1)
            for lam in partitions.partitions_of(N, max_part=n, max_len=n) if lam.is_self_conjugate()]


def _verify_isotypic(rep: Report, cfg: RunConfig):
    exp = cfg.char != 0
    for lam in _self_conjugate_up_to(cfg.n):
        r = glaction.isotypic_verify(lam, cfg.n, cfg.field)
        rep.check("isotypic", {"lambda": str(lam), "n": cfg.n},
                  {"closure_dim": r["schur_dim"], "weights_match": True},
                  {"closure_dim": r["closure_dim"], "weights_match": r["weights_match"],
                   "seed_nonzero": r["seed_nonzero"]}, r["pass"], experiment=exp)


def _verify_decomposition(rep: Report, cfg: RunConfig):
    n = cfg.n
    imax = cfg.imax if cfg.imax is not None else n * (n + 1) // 2
    jmax = cfg.jmax if cfg.jmax is not None else n * n + 1
    exp = cfg.char != 0
    for i in range(imax + 1):
        for j in range(max(2 * i, cfg.jmin), jmax + 1):
            dim = koszul.homology_dim(n, i, j, cfg.field)
            pred = sum(partitions.schur_dim(lam, n) for lam in partitions.self_conjugate_enum(n, i, j))
            rep.check("homology_dim", {"n": n, "i": i, "j": j}, pred, dim, experiment=exp)
            if dim:
                r = glaction.decomposition_verify(n, i, j, cfg.field)
                rep.check("schur_expansion", {"n": n, "i": i, "j": j}, r["predicted"], r["expansion"],
                          r["pass"], experiment=exp)


def _verify_strand(rep: Report, cfg: RunConfig):
    exp = cfg.char != 0
    for t in range(cfg.t + 1):
        r = cycles.strand_span_check(cfg.n, t, cfg.field)
        rep.check("strand", {"n": cfg.n, "t": t},
                  {"generators": r["schur_dim"], "span_in_homology": r["homology_dim"]},
                  {"generators": r["generators"], "span_in_homology": r["span_in_homology"],
                   "homology_dim": r["homology_dim"], "independent": r["independent_in_complex"]},
                  r["pass"], experiment=exp)


def _verify_lowest_strand(rep: Report, cfg: RunConfig):
    imax = cfg.imax if cfg.imax is not None else 2
    r = koszul.lowest_strand_span_check(cfg.n, imax, cfg.field)
    for c in r["checks"]:
        rep.check("lowest_strand", {"n": cfg.n, "i": c["i"], "j": c["j"]}, c["homology_dim"],
                  c["span_dim"], c["pass"], experiment=cfg.char != 0)


def _verify_lr(rep: Report, cfg: RunConfig):
    jmax = cfg.jmax if cfg.jmax is not None else 12
    for N in range(1, jmax + 1):
        for lam in partitions.self_conjugate_partitions(N):
            r = partitions.lr_selfconjugate_check(lam)
            rep.check("lr", {"lambda": str(lam)}, {"lambda_multiplicity": ">=1", "others": {}},
                      {"lambda_multiplicity": r["multiplicity"], "others": r["other_self_conjugate"]},
                      r["pass"])


def _verify_matching(rep: Report, cfg: RunConfig):
    p = matching.petersen_check()
    rep.check("petersen", {}, {"vertices": 10, "edges": 15, "degrees": [3], "girth": 5, "diameter": 2},
              {k: p[k] for k in ("vertices", "edges", "degrees", "girth", "diameter")}, p["pass"])
    rep.check("reduced_homology", {"n": 5, "dim": 1}, 6, matching.reduced_homology(5, 1, cfg.field))
    r = matching.squarefree_slice_compare(cfg.n, cfg.field)
    for row in r["rows"]:
        rep.check("squarefree_slice", {"n": cfg.n, "i": row["i"]}, row["matching"], row["koszul"])
    if cfg.torsion:
        cx = matching.matching_complex(cfg.n)
        for d in range(-1, cx.top_dim + 1):
            tors = matching.reduced_homology_torsion(cfg.n, d)
            rep.check("torsion", {"n": cfg.n, "dim": d}, None, tors, True, experiment=True)


def _verify_char2(rep: Report, cfg: RunConfig):
    r = matching.char2_witness()
    rep.check("char2", {"n": 5, "t": 2},
              {"GF(2)": {"is_cycle": True, "class_nonzero": True, "in_generator_span": False},
               "QQ": {"in_generator_span": True}},
              {"GF(2)": {k: r["GF(2)"][k] for k in ("is_cycle", "class_nonzero", "in_generator_span")},
               "QQ": {"in_generator_span": r["QQ"]["in_generator_span"]}}, r["pass"])


def _verify_nonzero_products(rep: Report, cfg: RunConfig):
    exp = cfg.char != 0
    r = cycles.nonzero_products_check(cfg.n, cfg.field)
    for row in r["subsets"]:
        rep.check("nonzero_product", {"n": cfg.n, "subset": row["subset"]}, True, row["nonzero"],
                  experiment=exp)
    s = cycles.squarefree_term_check(cfg.n, cfg.field)
    rep.check("squarefree_term", {"n": cfg.n}, True, s["pass"], experiment=exp)


_SUITE_FUNCS = {
    "garnir": _verify_garnir, "straighten": _verify_straighten, "isotypic": _verify_isotypic,
    "decomposition": _verify_decomposition, "strand": _verify_strand,
    "lowest-strand": _verify_lowest_strand, "lr": _verify_lr, "matching": _verify_matching,
    "char2": _verify_char2, "nonzero-products": _verify_nonzero_products,
}


def cmd_verify(cfg: RunConfig, which: str) -> Report:
    rep = Report(f"verify {which}", cfg)
    _SUITE_FUNCS[which](rep, cfg)
    return rep


def cmd_betti(cfg: RunConfig) -> dict:
    n = cfg.n
    imax = cfg.imax if cfg.imax is not None else n * (n + 1) // 2
    jmax = cfg.jmax if cfg.jmax is not None else n * n + 1
    cells = []
    for i in range(imax + 1):
        for j in range(max(cfg.jmin, 2 * i), jmax + 1):
            lams = partitions.self_conjugate_enum(n, i, j)
            dim = koszul.homology_dim(n, i, j, cfg.field)
            pred = sum(partitions.schur_dim(lam, n) for lam in lams)
            cells.append({"i": i, "j": j, "dim": dim, "predicted": pred,
                          "lambdas": [str(lam) for lam in lams], "match": dim == pred})
    return {"command": "betti", "config": cfg.echo(), "cells": cells,
            "failures": sum(1 for c in cells if not c["match"])}


def format_betti(table: dict) -> str:
    cells = table["cells"]
    if not cells:
        return "(empty table)"
    js = sorted({c["j"] for c in cells})
    is_ = sorted({c["i"] for c in cells})
    grid = {(c["i"], c["j"]): c for c in cells}
    width = max(6, max(len(str(c["dim"])) + 4 for c in cells))
    lines = ["i\\j " + "".join(f"{j:>{width}}" for j in js)]
    for i in is_:
        row = []
        for j in js:
            c = grid.get((i, j))
            if c is None:
                row.append(f"{'.':>{width}}")
            else:
                mark = "" if c["match"] else f"!{c['predicted']}"
                row.append(f"{(str(c['dim']) if c['dim'] else '-') + mark:>{width}}")
        lines.append(f"{i:<4}" + "".join(row))
    nonzero = [c for c in cells if c["lambdas"] or c["dim"]]
    if nonzero:
        lines.append("")
        for c in nonzero:
            lines.append(f"H_{c['i']}({c['j']}) = {c['dim']}  predicted {c['predicted']} from "
                         f"[{'; '.join(c['lambdas'])}]  {'ok' if c['match'] else 'MISMATCH'}")
    return "\n".join(lines)


def cmd_cycle(cfg: RunConfig, kind: str, item: str) -> koszul.KoszulElement:
    f, n = cfg.field, cfg.n
    if kind == "Z":
        return cycles.hook_cycle(int(item), n, f)
    if kind == "z":
        pair = cycles.CyclePair.parse(item)
        return cycles.z_cycle(pair.a, pair.b, n, f)
    if kind == "product":
        subset = [int(x) for x in item.split(",") if x.strip()] if item.strip() else []
        return cycles.squarefree_Z_product(subset, n, f)
    raise ValueError(f"unknown cycle kind {kind!r}")


def _emit(text: str, cfg: RunConfig):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _add_common(p: argparse.ArgumentParser, n_default=3):
    p.add_argument("--n", type=int, default=n_default, help="number of variables")
    p.add_argument("--char", type=int, default=0, help="field characteristic: 0 or a prime")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", metavar="PATH", help="write output to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="veronese-koszul",
                                     description="Koszul homology of m^2 in k[x_1..x_n], exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="homology dimensions per bidegree with predictions")
    _add_common(p)
    p.add_argument("--imax", type=int)
    p.add_argument("--jmax", type=int)
    p.add_argument("--jmin", type=int, default=0)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("which", choices=SUITES)
    _add_common(p)
    p.add_argument("--imax", type=int)
    p.add_argument("--jmax", type=int)
    p.add_argument("--jmin", type=int, default=0)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20, help="random cases per suite")
    p.add_argument("--torsion", action="store_true", help="Smith normal form torsion (matching)")

    p = sub.add_parser("cycle", help="print Z_i, z_{a,b} or a product of Z_i")
    p.add_argument("kind", choices=("Z", "z", "product"))
    p.add_argument("item", help='i for Z; "a1,..|b1,.." for z; "i1,i2,.." for product')
    _add_common(p)
    p.add_argument("--check-cycle", action="store_true", dest="check_cycle")

    p = sub.add_parser("straighten", help="express z_{a,b} in tableau cycles")
    p.add_argument("item", help='"a1,...|b1,..."')
    _add_common(p)

    p = sub.add_parser("matching", help="matching complex faces, homology, export")
    _add_common(p)
    p.add_argument("--torsion", action="store_true")
    p.add_argument("--mtx", metavar="PREFIX", help="write boundary matrices as PREFIX_k.mtx")
    return parser


def _config(args) -> RunConfig:
    keys = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in vars(args).items() if k in keys})


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.command == "betti":
        table = cmd_betti(cfg)
        _emit(json.dumps(table, sort_keys=True, indent=2) if cfg.json else format_betti(table), cfg)
        return 0 if table["failures"] == 0 else 1

    if args.command == "verify":
        rep = cmd_verify(cfg, args.which)
        if cfg.json:
            _emit(rep.dumps(), cfg)
        else:
            lines = [f"{'PASS' if c['pass'] else 'FAIL'}{' (experiment)' if c.get('experiment') else ''}"
                     f"  {c['name']} {json.dumps(c['inputs'], sort_keys=True)}" for c in rep.checks]
            lines.append(f"{len(rep.checks)} checks, {rep.failures} failures")
            _emit("\n".join(lines), cfg)
        return 0 if rep.failures == 0 else 1

    if args.command == "cycle":
        u = cmd_cycle(cfg, args.kind, args.item)
        if cfg.json:
            _emit(json.dumps({"element": u.to_json(), "n": cfg.n, "char": cfg.char,
                              "is_cycle": koszul.is_cycle(u)}, sort_keys=True, indent=2), cfg)
        else:
            _emit(u.to_text(), cfg)
        if cfg.check_cycle and not koszul.is_cycle(u):
            print("error: differential does not vanish", file=sys.stderr)
            return 1
        return 0

    if args.command == "straighten":
        pair = cycles.CyclePair.parse(args.item)
        coeffs = cycles.straighten(pair.a, pair.b, cfg.n, cfg.field)
        ok = cycles.expand_combination(coeffs, cfg.n, cfg.field) == \
            cycles.z_cycle(pair.a, pair.b, cfg.n, cfg.field)
        _emit(json.dumps({str(p): str(c) for p, c in coeffs.items()}, sort_keys=True, indent=2), cfg)
        return 0 if ok else 1

    if args.command == "matching":
        cx = matching.matching_complex(cfg.n)
        dims = range(-1, cx.top_dim + 1)
        summary = {
            "n": cfg.n, "face_counts": {str(d): c for d, c in cx.face_counts().items()},
            "reduced_homology": {str(d): matching.reduced_homology(cfg.n, d, cfg.field) for d in dims},
        }
        if cfg.torsion:
            summary["torsion"] = {str(d): matching.reduced_homology_torsion(cfg.n, d) for d in dims}
        if args.mtx:
            for k, M in cx.boundaries.items():
                with open(f"{args.mtx}_{k}.mtx", "w", encoding="utf-8") as fh:
                    write_matrix_market(M, fh, comment=f"boundary {k} -> {k - 1} of the matching complex n={cfg.n}")
        if cfg.json:
            summary["complex"] = json.loads(cx.to_json())
        _emit(json.dumps(summary, sort_keys=True, indent=2), cfg)
        return 0
    return 2


if __name__ == "__main__":
    sys.exit(main())
