"""Structured (JSON) and text renderings of analysis results.

Every JSON report carries ``"schema": "multiproj.report/1"``; the layout is
documented in ``docs/report-schema.md``. Output is deterministic: keys are
sorted and all lists come from deterministic computations.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .charts import Chart
from .cones import Cone, HilbertBasis, cone_from_generators
from .grading import Monomial, RingSpec, render_monomial
from .intlin import LatticeBasis
from .projmodel import PROPERNESS_NOTE, ProjModel, SeparationReport
from .relevance import Support, support_names

SCHEMA = "multiproj.report/1"


def cone_to_dict(c: Cone) -> dict[str, Any]:
    return {
        "ambient_dim": c.ambient_dim,
        "generators": [list(g) for g in c.generators],
        "halfspaces": [list(h) for h in c.halfspaces],
        "lineality_dim": c.lineality_dim,
    }


def cone_from_dict(d: dict[str, Any]) -> Cone:
    return cone_from_generators(d["ambient_dim"], d["generators"])


def _names(spec: RingSpec, J: Support) -> list[str]:
    return list(support_names(spec, J))


def chart_to_dict(spec: RingSpec, chart: Chart) -> dict[str, Any]:
    return {
        "support": _names(spec, chart.support),
        "generators": [
            {"m": list(m), "exponents": list(e), "monomial": render_monomial(spec, e)}
            for m, e in zip(chart.generators.elements, chart.exponents)
        ],
        "monoid_inequalities": [list(u) for u in chart.monoid_inequalities],
        "fan_cone": cone_to_dict(chart.fan_cone),
        "degree_cone": cone_to_dict(chart.degree_cone),
    }


def separation_to_dict(spec: RingSpec, rep: SeparationReport) -> dict[str, Any]:
    fan = {"kind": rep.fan_verdict.kind.value, "pair": None}
    if rep.fan_verdict.pair is not None:
        fan["pair"] = [_names(spec, J) for J in rep.fan_verdict.pair]
    return {
        "supports": [_names(spec, J) for J in rep.supports],
        "pairwise": [[v.value for v in row] for row in rep.pairwise],
        "fan_verdict": fan,
        "overall": rep.overall.value,
    }


def monomials_to_list(spec: RingSpec, elements: Sequence[Sequence[int]]) -> list[dict[str, Any]]:
    return [{"exponents": list(e), "monomial": render_monomial(spec, e)} for e in elements]


def analyze_report(
    model: ProjModel,
    rep: SeparationReport,
    kernel: LatticeBasis,
    irrelevant: Sequence[Monomial],
) -> dict[str, Any]:
    spec = model.spec
    warnings = []
    if not model.charts:
        warnings.append("no monomial charts")
    return {
        "schema": SCHEMA,
        "command": "analyze",
        "ring": spec.to_document(),
        "grading_group": str(spec.grading),
        "torus_dim": model.torus_dim,
        "kernel_basis": [list(v) for v in kernel.vectors],
        "minimal_relevant_supports": [
            _names(spec, J) for J in model.minimal_supports.minimal_supports
        ],
        "irrelevant_radical_generators": [
            render_monomial(spec, m.exponents) for m in irrelevant
        ],
        "charts": [chart_to_dict(spec, c) for c in model.charts],
        "fan": [cone_to_dict(c) for c in model.fan_cones],
        "separation": separation_to_dict(spec, rep),
        "notes": [PROPERNESS_NOTE],
        "warnings": warnings,
    }


def charts_report(spec: RingSpec, chart: Chart) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": "charts",
        "ring": spec.to_document(),
        "chart": chart_to_dict(spec, chart),
    }


def zerosubring_report(
    spec: RingSpec, hb: HilbertBasis, relations: Sequence[Sequence[int]], bound: int
) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": "zerosubring",
        "ring": spec.to_document(),
        "generators": monomials_to_list(spec, hb.elements),
        "relation_bound": bound,
        "relations": [
            {"vector": list(u), "binomial": binomial_text(spec, hb, u)} for u in relations
        ],
    }


def veronese_report(
    spec: RingSpec, forms: Sequence[Sequence[int]], hb: HilbertBasis
) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": "veronese",
        "ring": spec.to_document(),
        "forms": [list(f) for f in forms],
        "generators": monomials_to_list(spec, hb.elements),
    }


def separation_report(spec: RingSpec, rep: SeparationReport) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "command": "separation",
        "ring": spec.to_document(),
        "separation": separation_to_dict(spec, rep),
    }


def binomial_text(spec: RingSpec, hb: HilbertBasis, u: Sequence[int]) -> str:
    def side(sign):
        parts = []
        for ui, g in zip(u, hb.elements):
            if ui * sign > 0:
                factor = "(" + render_monomial(spec, g) + ")"
                parts.append(factor if abs(ui) == 1 else f"{factor}^{abs(ui)}")
        return "*".join(parts) or "1"

    return f"{side(1)} = {side(-1)}"


def dumps_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# Text rendering


def _vec(v: Sequence[int]) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _cone_text(d: dict[str, Any]) -> str:
    if not d["generators"]:
        return "{0}"
    return "cone " + " ".join(_vec(g) for g in d["generators"])


def _chart_lines(c: dict[str, Any]) -> list[str]:
    lines = [f"chart D+({'*'.join(c['support']) or '1'})"]
    lines.append("  generators: " + (", ".join(g["monomial"] for g in c["generators"]) or "(none)"))
    lines.append("  monoid inequalities: " + (" ".join(_vec(u) for u in c["monoid_inequalities"]) or "(none)"))
    lines.append("  fan cone: " + _cone_text(c["fan_cone"]))
    lines.append("  degree cone: " + _cone_text(c["degree_cone"]))
    return lines


def _separation_lines(s: dict[str, Any]) -> list[str]:
    labels = ["{" + ",".join(J) + "}" for J in s["supports"]]
    lines = ["pairwise separation:"]
    for i, row in enumerate(s["pairwise"]):
        for j in range(i + 1, len(row)):
            lines.append(f"  {labels[i]} {labels[j]}: {row[j]}")
    fan = s["fan_verdict"]
    if fan["pair"]:
        pair = " ".join("{" + ",".join(J) + "}" for J in fan["pair"])
        lines.append(f"fan check: {fan['kind']} {pair}")
    else:
        lines.append(f"fan check: {fan['kind']}")
    lines.append(f"verdict: {s['overall']}")
    return lines


def render_text(report: dict[str, Any]) -> str:
    cmd = report["command"]
    ring = report["ring"]
    lines = [f"ring: {ring['coefficients']}[{','.join(ring['variables'])}]"]
    if cmd == "analyze":
        lines.append(f"grading group: {report['grading_group']}")
        degs = ", ".join(
            f"{v}:{_vec(d['free'])}" + (_vec(d["torsion"]) if "torsion" in d else "")
            for v, d in zip(ring["variables"], ring["degrees"])
        )
        lines.append(f"degrees: {degs}")
        lines.append(f"torus dimension: {report['torus_dim']}")
        lines.append("kernel basis: " + (" ".join(_vec(v) for v in report["kernel_basis"]) or "(none)"))
        sups = ["{" + ",".join(J) + "}" for J in report["minimal_relevant_supports"]]
        lines.append(f"minimal relevant supports ({len(sups)}): " + " ".join(sups))
        lines.append(
            "irrelevant radical generators: "
            + (", ".join(report["irrelevant_radical_generators"]) or "(none)")
        )
        lines.append(f"charts: {len(report['charts'])}")
        for c in report["charts"]:
            lines.extend(_chart_lines(c))
        lines.append("fan: " + "; ".join(_cone_text(c) for c in report["fan"]))
        lines.extend(_separation_lines(report["separation"]))
        for w in report["warnings"]:
            lines.append(f"warning: {w}")
        for n in report["notes"]:
            lines.append(f"note: {n}")
    elif cmd == "charts":
        lines.extend(_chart_lines(report["chart"]))
    elif cmd == "zerosubring":
        gens = report["generators"]
        lines.append(f"degree-zero generators ({len(gens)}): " + ", ".join(g["monomial"] for g in gens))
        rels = report["relations"]
        lines.append(f"relations with |u|_1 <= {report['relation_bound']} ({len(rels)}):")
        lines.extend(f"  {r['binomial']}" for r in rels)
    elif cmd == "veronese":
        gens = report["generators"]
        forms = " ".join(_vec(f) for f in report["forms"]) or "(none)"
        lines.append(f"forms: {forms}")
        lines.append(f"veronese generators ({len(gens)}): " + ", ".join(g["monomial"] for g in gens))
    elif cmd == "separation":
        lines.extend(_separation_lines(report["separation"]))
    return "\n".join(lines) + "\n"
