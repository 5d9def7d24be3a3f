"""Command-line entry point: ``pointed-hopf <command> --datum FILE``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .abelian import DEFAULT_ENUMERATION_CAP
from .algebra import build_algebra, verify_defining_relations
from .algebra.axioms import LEVELS, Report, check_hopf_axioms
from .cartan import DatumError, a2_datum, taft_datum
from .datumfile import DatumSyntaxError, parse_datum
from .double import DrinfeldDouble, r_matrix, verify_double_datum_map, verify_double_relations, verify_quasitriangular
from .hopf import DualAlgebra, biproduct_maps, grouplikes, identify_dual, integrals, verify_dual_relations
from .identities import identity_suite
from .ribbon import kr_criterion

COMMANDS = ("validate", "build", "dual", "double", "integrals", "ribbon", "export", "selftest")
FULL_CHECK_DIM = 300


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pointed-hopf", description=__doc__)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--datum", metavar="PATH", help="datum file (required except for selftest)")
    p.add_argument("--out", metavar="DIR", help="write JSON reports and exports into DIR")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    p.add_argument("--max-dim", type=int, default=1024, metavar="N",
                   help="largest dimension for tabulated/exhaustive work (default 1024)")
    p.add_argument("--enumeration-cap", type=int, default=DEFAULT_ENUMERATION_CAP, metavar="N",
                   help="largest group the engine will enumerate (default 10^6)")
    p.add_argument("--check-level", choices=LEVELS, default=None,
                   help="Hopf-axiom coverage (default: full-basis up to dim 300)")
    return p


def _reports_json(reports: list[Report]) -> list[dict]:
    return [r.to_json() for r in reports]


def _emit(args, name: str, payload: dict, text: str) -> None:
    body = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{name}.json").write_text(body + "\n", encoding="utf-8")
    print(body if args.json else text)


def _check_cap(order: int, cap: int, what: str) -> None:
    if order > cap:
        raise UsageError(f"{what} has order {order}, above the enumeration cap {cap}")


def _load(args):
    if not args.datum:
        raise UsageError(f"{args.command} needs --datum PATH")
    d = parse_datum(args.datum)
    _check_cap(d.group.order, args.enumeration_cap, "G")
    return d


def _level(args, dim: int) -> str:
    if args.check_level:
        return args.check_level
    return "full-basis" if dim <= FULL_CHECK_DIM else "generators"


def run(args) -> int:
    cmd = args.command
    if cmd == "selftest":
        algs = [build_algebra(taft_datum(3)), build_algebra(a2_datum())]
        if args.datum:
            algs.append(build_algebra(_load(args)))
        rep = identity_suite(algs)
        _emit(args, "selftest", {"command": cmd, "passed": rep.passed, "reports": _reports_json([rep])}, rep.text())
        return 0 if rep.passed else 1

    d = _load(args)
    base = {"command": cmd, "datum": d.summary(), "name": d.name}
    if cmd == "validate":
        payload = dict(base, passed=True, roots=d.roots.to_json())
        lines = [f"datum {d.name}: valid"] + [f"  {k}: {v}" for k, v in d.summary().items()]
        _emit(args, f"{d.name}.validate", payload, "\n".join(lines))
        return 0

    A = build_algebra(d)
    if cmd == "build":
        reps = [verify_defining_relations(A), check_hopf_axioms(A, _level(args, A.dim))]
        ok = all(r.passed for r in reps)
        text = "\n".join([f"dim = {A.dim}"] + [r.text() for r in reps])
        _emit(args, f"{d.name}.build", dict(base, dim=A.dim, passed=ok, reports=_reports_json(reps)), text)
        return 0 if ok else 1

    if cmd == "export":
        if A.dim > args.max_dim:
            raise UsageError(f"dim A = {A.dim} exceeds --max-dim {args.max_dim}; nothing exported")
        payload = dict(base, passed=True, algebra=A.to_json({"datum": d.summary(), "roots": d.roots.to_json()}))
        Astar = DualAlgebra(A)
        payload["dual"] = Astar.to_json({"datum": d.summary(), "basis": "dual basis of A"})
        text = [f"exported A and A* (dim {A.dim})"]
        D = DrinfeldDouble(A, Astar, max_dim=args.max_dim)
        if D.dim <= args.max_dim:
            R = r_matrix(D)
            payload["r_matrix"] = {
                "dim": D.dim,
                "terms": [[i, j, c.to_json()] for (i, j), c in sorted(R.items())],
            }
            text.append(f"exported the R-matrix of D(A) (dim {D.dim})")
        _emit(args, f"{d.name}.export", payload, "\n".join(text))
        return 0

    Astar = DualAlgebra(A)
    if cmd == "dual":
        ident = identify_dual(Astar)
        rep_g = Report("grouplikes of A*")
        G = grouplikes(Astar)
        rep_g.add("|G(A*)| = |G|", len(G) == d.group.order, f"{len(G)} grouplikes")
        reps = [verify_dual_relations(Astar), ident.report, rep_g]
        ok = all(r.passed for r in reps)
        _emit(args, f"{d.name}.dual", dict(base, passed=ok, reports=_reports_json(reps)),
              "\n".join(r.text() for r in reps))
        return 0 if ok else 1

    if cmd == "integrals":
        checks = 500 if A.dim > FULL_CHECK_DIM else 0
        ir = integrals(A, Astar, random_checks=checks)
        bp = biproduct_maps(A)
        ok = ir.report.passed and bp.report.passed
        payload = dict(base, passed=ok, integrals=ir.to_json(), biproduct=bp.report.to_json())
        _emit(args, f"{d.name}.integrals", payload, ir.text() + "\n" + bp.report.text())
        return 0 if ok else 1

    _check_cap(d.group.order**2, args.enumeration_cap, "G × Ĝ")
    D = DrinfeldDouble(A, Astar, max_dim=args.max_dim)
    if cmd == "double":
        reps = [verify_double_relations(D), verify_double_datum_map(D)]
        if D.dim <= args.max_dim:
            reps.append(verify_quasitriangular(D).report)
        ok = all(r.passed for r in reps)
        text = "\n".join([f"dim D(A) = {D.dim}"] + [r.text() for r in reps])
        _emit(args, f"{d.name}.double", dict(base, dim=D.dim, passed=ok, reports=_reports_json(reps)), text)
        return 0 if ok else 1

    if cmd == "ribbon":
        checks = 500 if A.dim > FULL_CHECK_DIM else 0
        ir = integrals(A, Astar, random_checks=checks)
        rr = kr_criterion(A, Astar, ir, double=D, max_dim=args.max_dim)
        ok = rr.passed and ir.report.passed
        payload = dict(base, passed=ok, ribbon=rr.to_json(), integrals=ir.to_json())
        _emit(args, f"{d.name}.ribbon", payload, rr.text())
        return 0 if ok else 1
    raise UsageError(f"unknown command {cmd}")


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return run(args)
    except (DatumError, DatumSyntaxError, UsageError, OSError) as e:
        failures = getattr(e, "violations", None) or [str(e)]
        err = {"command": args.command, "passed": False, "error": type(e).__name__, "failures": failures}
        if args.json:
            print(json.dumps(err, indent=2, sort_keys=True, ensure_ascii=False))
        else:
            print(f"error: {type(e).__name__}", file=sys.stderr)
            for f in failures:
                print(f"  {f}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
