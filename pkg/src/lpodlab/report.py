"""Text and JSON rendering of results (JSON schema ``lpod-lab/1``).

Interpretations are written as lists of ``[atom, value]`` pairs sorted by
atom, with values spelled ``F``, ``F*``, ``T*``, ``T``. Programs are
embedded as source text. The full schema ships as
``lpodlab/schema/lpod-lab-1.json``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import singledispatch
from importlib import resources
from typing import Optional, Sequence

from .equivalence import EquivalenceVerdict
from .fuzz import CampaignReport
from .logic import Interpretation, Program
from .parser import CnfFormula, serialize_program
from .reductions import ReductionCheck, ReductionOutput

SCHEMA_ID = "lpod-lab/1"


@dataclass(frozen=True)
class Listing:
    """A list of interpretations (or stable-model atom sets) for one program."""

    kind: str  # models | three_valued_models | answer_sets | most_preferred | stable_models
    program: Program
    items: Sequence
    atoms: Optional[Sequence[str]] = None


@dataclass(frozen=True)
class ReductionReport:
    formula: CnfFormula
    reduction: ReductionOutput
    check: Optional[ReductionCheck] = None


def load_schema() -> dict:
    text = resources.files("lpodlab").joinpath("schema/lpod-lab-1.json").read_text()
    return json.loads(text)


def interp_record(interp: Optional[Interpretation]):
    if interp is None:
        return None
    return [[a, str(interp.value(a))] for a in sorted(interp)]


def _envelope(kind: str, **fields) -> dict:
    return {"schema": SCHEMA_ID, "kind": kind, **fields}


@singledispatch
def to_record(result) -> dict:
    raise TypeError(f"no report format for {type(result).__name__}")


@to_record.register
def _(result: Program) -> dict:
    return _envelope("program", program=serialize_program(result), atoms=list(result.atoms))


@to_record.register
def _(result: Listing) -> dict:
    atoms = list(result.atoms if result.atoms is not None else sorted(result.program.atoms))
    if result.kind == "stable_models":
        items = [sorted(s) for s in result.items]
        key = "stable_models"
    else:
        items = [interp_record(i) for i in result.items]
        key = "interpretations"
    return _envelope(
        result.kind,
        program=serialize_program(result.program),
        atoms=atoms,
        count=len(items),
        **{key: items},
    )


@to_record.register
def _(result: EquivalenceVerdict) -> dict:
    return _envelope(
        "equivalence",
        mode=result.mode,
        equivalent=result.equivalent,
        programs=[serialize_program(result.first), serialize_program(result.second)],
        witness=interp_record(result.witness),
        separated=result.separated,
        context=None if result.context is None else serialize_program(result.context),
        context_case=result.context_case,
        discriminating_interpretation=interp_record(result.discriminating_interpretation),
        checks=dict(result.checks),
    )


@to_record.register
def _(result: ReductionReport) -> dict:
    red, check = result.reduction, result.check
    record = _envelope(
        "reduction",
        num_vars=result.formula.num_vars,
        num_clauses=len(result.formula.clauses),
        p1=serialize_program(red.p1),
        p2=serialize_program(red.p2),
        a=red.a,
        b=red.b,
        var_map={str(k): v for k, v in red.var_map.items()},
    )
    if check is not None:
        record["check"] = {
            "satisfiable": check.satisfiable,
            "assignment": None if check.assignment is None else {str(k): v for k, v in check.assignment.items()},
            "equivalent": check.equivalent,
            "witness": interp_record(check.witness),
            "forward_ok": check.forward_ok,
            "backward_ok": check.backward_ok,
            "agree": check.agree,
            "ok": check.ok,
        }
    return record


@to_record.register
def _(result: CampaignReport) -> dict:
    return _envelope("campaign", **result.to_record())


# text rendering


@singledispatch
def to_text(result) -> str:
    raise TypeError(f"no report format for {type(result).__name__}")


@to_text.register
def _(result: Program) -> str:
    return serialize_program(result)


@to_text.register
def _(result: Listing) -> str:
    titles = {
        "models": "model",
        "three_valued_models": "three-valued model",
        "answer_sets": "answer set",
        "most_preferred": "most-preferred answer set",
        "stable_models": "stable model",
    }
    atoms = list(result.atoms if result.atoms is not None else result.program.atoms)
    lines = [f"{len(result.items)} {titles[result.kind]}(s)"]
    for item in result.items:
        if result.kind == "stable_models":
            lines.append("{" + ", ".join(a for a in atoms if a in item) + "}")
        else:
            lines.append(item.format(atoms))
    return "\n".join(lines) + "\n"


@to_text.register
def _(result: EquivalenceVerdict) -> str:
    atoms = sorted(set((result.first | result.second).atoms))
    mode = f" [{result.mode}]" if result.mode else ""
    if result.equivalent:
        return f"equivalent{mode}\n"
    which = "first" if result.separated == "first_only" else "second"
    lines = [
        f"not equivalent{mode}",
        f"witness (model of the {which} program only): {result.witness.format(atoms)}",
    ]
    if result.context is not None:
        m_prime = result.discriminating_interpretation
        lines.append(f"context ({result.context_case}):")
        lines += ["  " + line for line in serialize_program(result.context).splitlines()]
        lines.append(f"discriminating interpretation: {m_prime.format(list(m_prime))}")
    return "\n".join(lines) + "\n"


@to_text.register
def _(result: ReductionReport) -> str:
    red, check = result.reduction, result.check
    lines = [
        f"% P1 ({len(red.p1)} rules)",
        serialize_program(red.p1).rstrip("\n"),
        f"% P2 ({len(red.p2)} rules)",
        serialize_program(red.p2).rstrip("\n"),
    ]
    if check is not None:
        sat = "satisfiable" if check.satisfiable else "unsatisfiable"
        eq = "equivalent" if check.equivalent else "not equivalent"
        lines.append(f"% formula {sat}; programs {eq}; reduction {'verified' if check.ok else 'FAILED'}")
    return "\n".join(lines) + "\n"


@to_text.register
def _(result: CampaignReport) -> str:
    lines = [
        f"iterations: {result.iterations} ({result.elapsed:.1f}s)",
        f"equivalent pairs: {result.equivalent_pairs}",
        f"non-equivalent pairs: {result.nonequivalent_pairs} "
        f"(case1 {result.case_counts['case1']}, case2 {result.case_counts['case2']})",
        f"contexts verified: {result.contexts_verified}; sampled contexts: {result.sampled_contexts}",
        f"mode agreements: {result.mode_agreements}/{result.iterations}",
        f"normal pairs: {result.normal_pairs}; stable-model checks: {result.gl_checks}",
        f"violations: {len(result.violations)}",
    ]
    for v in result.violations:
        lines.append(f"  iteration {v.iteration}: {v.kind}: {v.detail}")
    return "\n".join(lines) + "\n"


def emit_report(result, format: str = "text") -> str:
    if format == "text":
        return to_text(result)
    if format in ("structured", "json"):
        return json.dumps(to_record(result), indent=2) + "\n"
    raise ValueError(f"unknown report format {format!r}")
