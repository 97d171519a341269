"""Machine-readable reports (JSON schema 1)."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .. import __version__
from ..ginzburg import DgPresentation, DSquaredReport
from ..gqa import AlgElement, GradedQuiver, display_name, path_str
from ..jacobian import FINITE, H0Result, multiplication_table
from ..orbitcat import CYReport, TiltingReport
from ..potential import PotentialReport

SCHEMA = 1


def rat(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def element_json(el: AlgElement, quiver: GradedQuiver) -> list:
    return [[path_str(p), rat(c)] for p, c in el.sorted_terms(quiver)]


def sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def potential_json(rep: PotentialReport) -> dict:
    return {
        "valid": rep.valid,
        "n": rep.n,
        "m": rep.m,
        "offending_terms": [[w, d] for w, d in rep.offending],
        "arrow_degrees_in_range": rep.arrow_degrees_in_range,
        "out_of_range_arrows": [[a, d] for a, d in rep.out_of_range_arrows],
    }


def d_squared_json(rep: DSquaredReport, pres: DgPresentation) -> dict:
    return {
        "passed": rep.passed,
        "residues": {g: element_json(r, pres.extended) for g, r in rep.residues.items()},
    }


def gamma_json(pres: DgPresentation) -> dict:
    return {
        "n": pres.n,
        "generators": [
            {"name": display_name(a.name), "source": a.source, "target": a.target,
             "degree": a.degree, "d": element_json(pres.d_on_generators[a.name], pres.extended)}
            for a in pres.extended.arrows
        ],
    }


def h0_json(res: H0Result) -> dict:
    out = {
        "verdict": res.verdict,
        "relations": [element_json(r, res.quiver) for r in res.relations],
        "rewriting": {
            "status": res.system.status,
            "steps": res.system.steps,
            "rules": [[path_str(lead), element_json(tail, res.quiver)]
                      for lead, tail in sorted(res.system.rules.items(),
                                               key=lambda t: res.quiver.sort_key(t[0]))],
        },
    }
    if res.verdict == FINITE:
        out["dimension"] = res.dimension
        out["basis"] = res.basis_strings()
        out["multiplication"] = [
            [path_str(x), path_str(y), element_json(v, res.quiver)]
            for (x, y), v in multiplication_table(res).items() if v
        ]
    elif res.witness is not None:
        out["witness"] = path_str(res.witness)
    if res.reason:
        out["reason"] = res.reason
    return out


def cy_json(rep: CYReport) -> dict:
    return {"pairs": rep.pairs, "cy_dimension": rep.cy_dimension,
            "violations": [list(v) for v in rep.violations]}


def tilting_json(rep: TiltingReport) -> dict:
    return {
        "self_ext": {str(r): v for r, v in rep.self_ext.items()},
        "negative_self_ext": {str(r): v for r, v in rep.negative_self_ext.items()},
        "passing": rep.passing,
        "summands": rep.summands,
        "mismatches": rep.mismatches,
        "end_dimension": rep.end_dim,
    }


def make_report(command: str, input_text: str, verdicts: dict, bounds: dict,
                provenance: dict | None = None) -> dict:
    rep = {
        "schema": SCHEMA,
        "command": command,
        "input_sha256": sha256(input_text),
        "verdicts": verdicts,
        "bounds": bounds,
        "version": __version__,
    }
    if provenance:
        rep["provenance"] = provenance
    return rep


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
