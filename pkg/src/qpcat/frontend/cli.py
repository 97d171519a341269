"""Command line interface.

Exit codes: 0 all checks pass, 1 a check failed, 2 undetermined within
bounds, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..ginzburg import check_d_squared, check_degrees, ginzburg
from ..gqa import QuiverError, display_name, path_str
from ..jacobian import (DEFAULT_MAX_BASIS, DEFAULT_MAX_STEPS, FINITE, INFINITE,
                        ScopeError, h0, multiplication_table)
from ..orbitcat import check_cluster_tilting, check_cy, enumerate_orbit_objects
from ..potential import PotentialError, validate_potential
from . import report as rp
from .dsl import ParseError, load

OK, FAILED, UNDETERMINED, INPUT_ERROR = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(args):
    try:
        doc, text = load(args.file, diagrammatic=args.diagrammatic)
        q = doc.quiver()
        W = doc.build_potential(q)
    except OSError as exc:
        raise InputError(f"{args.file}: {exc.strerror}") from None
    except ParseError as exc:
        raise InputError(f"{args.file}:{exc}") from None
    except (QuiverError, PotentialError) as exc:
        raise InputError(f"{args.file}: {exc}") from None
    if doc.n < 3:
        raise InputError(f"{args.file}: n must be >= 3, got {doc.n}")
    return doc, text, W


def _provenance(args) -> dict:
    return {"diagrammatic": bool(args.diagrammatic)}


def _emit(args, command, text, verdicts, bounds, out):
    if getattr(args, "json", None):
        rep = rp.make_report(command, text, verdicts, bounds, _provenance(args) if hasattr(args, "diagrammatic") else None)
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(rp.dumps(rep))
    print("\n".join(out))


def _check(W, pres):
    vrep = validate_potential(W)
    drep = check_d_squared(pres)
    lines = [f"potential: {W.to_str()}  (n = {W.n})"]
    if vrep.valid:
        lines.append(f"degree check: ok, every term has degree {3 - W.n}")
    else:
        lines.append("degree check: FAILED")
        lines += [f"  {m}" for m in vrep.messages() if "term" in m]
    if vrep.arrow_degrees_in_range:
        lines.append(f"arrow degrees in [-{vrep.m}, 0]: yes")
    else:
        lines.append(f"arrow degrees in [-{vrep.m}, 0]: no")
        lines += [f"  {m}" for m in vrep.messages() if "arrow" in m]
    bad_deg = check_degrees(pres)
    if drep.passed:
        lines.append("d^2 = 0 on generators: ok")
    else:
        lines.append("d^2 = 0 on generators: FAILED")
        for g, r in drep.residues.items():
            lines.append(f"  d(d({display_name(g)})) = {r.to_str(pres.extended)}")
    if bad_deg:
        lines.append("differential degree/endpoint check FAILED: " + ", ".join(bad_deg))
    verdict = {"potential": rp.potential_json(vrep), "d_squared": rp.d_squared_json(drep, pres)}
    ok = vrep.valid and drep.passed and not bad_deg
    return ok, verdict, lines


def gamma_lines(pres) -> list[str]:
    q = pres.extended
    lines = [f"Gamma_{pres.n}(Q, W), W = {pres.potential.to_str()}", "generators:"]
    for a in q.arrows:
        lines.append(f"  |{display_name(a.name)}| = {a.degree}    {a.source} -> {a.target}")
    lines.append("differential:")
    for a in q.arrows:
        lines.append(f"  d({display_name(a.name)}) = {pres.d_on_generators[a.name].to_str(q)}")
    return lines


def h0_lines(res) -> list[str]:
    lines = [f"H0 verdict: {res.verdict}"]
    lines.append("relations: " + (", ".join(r.to_str(res.quiver) for r in res.relations) or "none"))
    lines.append(f"rewriting: {res.system.status}, {len(res.system.rules)} rules, "
                 f"{res.system.steps} overlaps resolved")
    if res.verdict == FINITE:
        lines.append(f"dimension: {res.dimension}")
        lines.append("basis: " + " ".join(res.basis_strings()))
        lines.append("multiplication (x*y, y acts first; zero products omitted):")
        for (x, y), v in multiplication_table(res).items():
            if v:
                lines.append(f"  {path_str(x)} * {path_str(y)} = {v.to_str(res.quiver)}")
    elif res.verdict == INFINITE:
        lines.append(f"witness cycle: {path_str(res.witness)} (all powers irreducible)")
    if res.reason:
        lines.append(f"reason: {res.reason}")
    return lines


def cmd_check(args) -> int:
    doc, text, W = _load(args)
    pres = ginzburg(W)
    ok, verdict, lines = _check(W, pres)
    _emit(args, "check", text, {"check": verdict}, {}, lines)
    return OK if ok else FAILED


def cmd_gamma(args) -> int:
    doc, text, W = _load(args)
    pres = ginzburg(W)
    _emit(args, "gamma", text, {"gamma": rp.gamma_json(pres)}, {}, gamma_lines(pres))
    return OK


def _run_h0(args, pres):
    try:
        res = h0(pres, args.max_steps, args.max_basis)
    except ScopeError as exc:
        raise InputError(str(exc)) from None
    code = {FINITE: OK, INFINITE: FAILED}.get(res.verdict, UNDETERMINED)
    return res, code


def _bounds(args) -> dict:
    return {"max_steps": args.max_steps, "max_basis": args.max_basis}


def cmd_h0(args) -> int:
    doc, text, W = _load(args)
    pres = ginzburg(W)
    ok, verdict, lines = _check(W, pres)
    if not ok:
        print("\n".join(lines))
        return FAILED
    res, code = _run_h0(args, pres)
    _emit(args, "h0", text, {"h0": rp.h0_json(res)}, _bounds(args), h0_lines(res))
    return code


def cmd_report(args) -> int:
    doc, text, W = _load(args)
    pres = ginzburg(W)
    ok, check_v, lines = _check(W, pres)
    verdicts = {"check": check_v, "gamma": rp.gamma_json(pres)}
    lines += gamma_lines(pres)
    code = OK if ok else FAILED
    if ok:
        try:
            res, code = _run_h0(args, pres)
            verdicts["h0"] = rp.h0_json(res)
            lines += h0_lines(res)
        except InputError as exc:
            verdicts["h0"] = {"verdict": "out-of-scope", "reason": str(exc)}
            lines.append(f"H0 skipped: {exc}")
    _emit(args, "report", text, verdicts, _bounds(args), lines)
    return code


def cmd_orbit(args) -> int:
    if args.type.upper() != "A":
        raise InputError("only type A is supported")
    if args.n < 1 or args.m < 1:
        raise InputError("need --n >= 1 and --m >= 1")
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = set(checks) - {"cy", "tilting"}
    if unknown:
        raise InputError(f"unknown checks: {', '.join(sorted(unknown))}")
    objs = enumerate_orbit_objects(args.n, args.m)
    lines = [f"orbit category C^({args.m}) of A_{args.n}: {len(objs)} objects"]
    verdicts = {"objects": [str(o) for o in objs], "count": len(objs)}
    ok = True
    if "cy" in checks:
        cy = check_cy(args.n, args.m)
        verdicts["cy"] = rp.cy_json(cy)
        lines.append(f"({args.m + 1})-Calabi-Yau check: {cy.pairs} pairs, {len(cy.violations)} violations")
        ok &= cy.passed
    if "tilting" in checks:
        t = check_cluster_tilting(args.n, args.m)
        verdicts["tilting"] = rp.tilting_json(t)
        lines.append("Hom(T, T[r]) for r = 1..m: " + ", ".join(f"{v}" for v in t.self_ext.values()))
        lines.append(f"objects with Hom(T, L[r]) = 0 for r = 1..m: {len(t.passing)} "
                     f"({', '.join(t.passing)})")
        lines.append(f"add(T) mismatches: {len(t.mismatches)}")
        lines.append(f"dim End(T): {t.end_dim}")
        ok &= t.passed
    params = json.dumps({"type": "A", "n": args.n, "m": args.m, "checks": checks}, sort_keys=True)
    _emit(args, "orbit", params, verdicts, {}, lines)
    return OK if ok else FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qpcat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def file_cmd(name, func, help_, bounds=False, json_required=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.add_argument("--diagrammatic", action="store_true",
                        help="read potential words left-to-right")
        sp.add_argument("--json", required=json_required, metavar="OUT",
                        help="write a JSON report to OUT")
        if bounds:
            sp.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
            sp.add_argument("--max-basis", type=int, default=DEFAULT_MAX_BASIS)
        sp.set_defaults(func=func)

    file_cmd("check", cmd_check, "validate potential degree and d^2 = 0")
    file_cmd("gamma", cmd_gamma, "print the Ginzburg quiver and differential")
    file_cmd("h0", cmd_h0, "zeroth homology: verdict, basis, multiplication", bounds=True)
    file_cmd("report", cmd_report, "run everything and write a JSON report", bounds=True,
             json_required=True)

    sp = sub.add_parser("orbit", help="type-A m-cluster orbit category checks")
    sp.add_argument("--type", default="A")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--checks", default="cy,tilting")
    sp.add_argument("--json", metavar="OUT")
    sp.set_defaults(func=cmd_orbit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
