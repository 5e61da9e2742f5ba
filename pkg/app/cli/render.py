"""
Text and DOT renderings of the report schemas. JSON is ``model_dump_json``.
"""
from typing import Iterable, List, Optional

from pydantic import BaseModel

from app.schemas.classification import ClassificationReport, NonDaceyWitness, WitnessReport
from app.schemas.harness import HarnessReport
from app.schemas.lattice import CompletionDump, KalmbachDump, LogicDump
from app.utils.dot import hasse_diagram


def as_json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + "\n"


def braces(labels: Iterable[str]) -> str:
    return "{" + ",".join(labels) + "}"


def yes_no(value: Optional[bool]) -> str:
    if value is None:
        return "n/a"
    return "yes" if value else "no"


def _non_dacey_line(prefix: str, witness: NonDaceyWitness) -> str:
    return f"{prefix} {braces(witness.closed_set)} with basis {braces(witness.basis)}"


# classify

def classification_text(report: ClassificationReport) -> str:
    lines = [
        f"bounded: {yes_no(report.bounded)}",
        f"lattice: {yes_no(report.lattice)}",
        f"chain: {yes_no(report.chain)}",
        f"chain-type: {yes_no(report.chain_type)}",
        f"dacey: {yes_no(report.dacey)}",
        f"orthomodular: {yes_no(report.orthomodular)}",
        f"boolean: {yes_no(report.boolean)}",
        f"quotients: {report.q_size}",
        f"logic size: {report.logic_size}",
    ]
    w = report.witnesses
    if w.missing_bound:
        lines.append(f"missing meet or join: {', '.join(w.missing_bound)}")
    if w.incomparable:
        lines.append(f"incomparable: {', '.join(w.incomparable)}")
    if w.nonlattice_ideal:
        lines.append(f"non-lattice ideal: {braces(w.nonlattice_ideal)}")
    if w.non_chain_type:
        lines.append(f"not chain-type: {braces(w.non_chain_type)}")
    if w.non_dacey:
        lines.append(_non_dacey_line("non-Dacey set", w.non_dacey))
    if w.short_basis:
        lines.append(_non_dacey_line("τ(I) =", w.short_basis))
    if w.orthomodular_failure:
        lines.append(f"orthomodular law fails at: {', '.join(w.orthomodular_failure)}")
    if w.boolean_failure:
        lines.append(f"not Boolean at: {', '.join(w.boolean_failure)}")
    if w.hexagon:
        lines.append(f"hexagon: {' '.join(w.hexagon)}")
    if w.disjoint_pair:
        first, second = w.disjoint_pair
        lines.append(f"disjoint, not orthogonal: {braces(first)} and {braces(second)}")
    return "\n".join(lines) + "\n"


def witness_text(report: WitnessReport) -> str:
    if not report.found:
        return "none\n"
    lines: List[str] = []
    if report.non_dacey:
        lines.append(_non_dacey_line("non-Dacey set", report.non_dacey))
    if report.short_basis:
        lines.append(_non_dacey_line("τ(I) =", report.short_basis))
    if report.hexagon:
        lines.append(f"hexagon: {' '.join(report.hexagon)}")
    if report.nonlattice_ideal:
        lines.append(f"non-lattice ideal: {braces(report.nonlattice_ideal)}")
    return "\n".join(lines) + "\n"


# logic

def _logic_label(members: List[str], maximal: Optional[List[str]]) -> str:
    if maximal is not None:
        return "↓" + braces(maximal)
    return braces(members)


def logic_text(dump: LogicDump) -> str:
    lines = [f"{dump.size} orthoclosed sets over {len(dump.points)} points"]
    for element in dump.elements:
        label = braces(element.members)
        if element.maximal is not None:
            label += f" max {braces(element.maximal)}"
        lines.append(f"{element.index}: {label} ⊥ {element.ocompl}")
    lines.append(f"orthomodular: {yes_no(dump.orthomodular)}")
    lines.append(f"dacey: {yes_no(dump.dacey)}")
    return "\n".join(lines) + "\n"


def logic_dot(dump: LogicDump) -> str:
    labels = [_logic_label(element.members, element.maximal) for element in dump.elements]
    return hasse_diagram("logic", labels, dump.covers, [element.ocompl for element in dump.elements])


# kalmbach

def _chain_label(chain: List[str]) -> str:
    return "<".join(chain) if chain else "∅"


def kalmbach_text(dump: KalmbachDump) -> str:
    lines = [f"{dump.size} even chains"]
    for element in dump.elements:
        lines.append(f"{element.index}: {_chain_label(element.chain)} ⊥ {element.ocompl}")
    lines.append(f"ortholattice: {yes_no(dump.ortholattice)}")
    lines.append(f"orthomodular: {yes_no(dump.orthomodular)}")
    if dump.isomorphism is not None:
        for row in dump.isomorphism:
            lines.append(f"f({_chain_label(row.chain)}) = {braces(row.closed_set)}")
        lines.append(f"isomorphism: {yes_no(dump.isomorphism_holds)}")
        if dump.failed_law:
            lines.append(f"failed law: {dump.failed_law}")
    return "\n".join(lines) + "\n"


def kalmbach_dot(dump: KalmbachDump) -> str:
    labels = [_chain_label(element.chain) for element in dump.elements]
    return hasse_diagram("kalmbach", labels, dump.covers, [element.ocompl for element in dump.elements])


# completion

def completion_text(dump: CompletionDump) -> str:
    lines = [f"{dump.size} closed ideals"]
    for ideal in dump.ideals:
        line = f"{ideal.index}: {braces(ideal.members)}"
        if ideal.principal is not None:
            line += f" = {ideal.principal}↓"
        if ideal.image is not None:
            line += f" -> {braces(ideal.image)}"
        lines.append(line)
    lines.append(f"every ideal principal: {yes_no(dump.surjective)}")
    if dump.embedding_holds is not None:
        lines.append(f"embedding into logic of {dump.logic_size}: {yes_no(dump.embedding_holds)}")
        if dump.failed_law:
            lines.append(f"failed law: {dump.failed_law}")
    return "\n".join(lines) + "\n"


def completion_dot(dump: CompletionDump) -> str:
    labels = [
        ideal.principal if ideal.principal is not None else braces(ideal.members)
        for ideal in dump.ideals
    ]
    return hasse_diagram("completion", labels, dump.covers)


# harness

def harness_text(report: HarnessReport) -> str:
    lines = [
        f"checked {report.catalogue_size} bounded posets of size <= {report.n_max} "
        f"and {report.graph_count} graphs"
    ]
    if report.mutation:
        lines.append(f"negative control: {report.mutation}")
    width = max(len(summary.theorem) for summary in report.theorems)
    for summary in report.theorems:
        lines.append(
            f"  {summary.theorem:<{width}}  {summary.passed:>5}/{summary.total:<5} "
            f"failed {summary.failed:<4} vacuous {summary.vacuous}"
        )
    for name, count in report.observations.items():
        lines.append(f"  observed {name}: {count.holds}/{count.total}")
    note = report.unbounded
    lines.append(
        f"  unbounded 2-antichain: {note.q_size} quotients, logic size {note.logic_size}, "
        f"chain={yes_no(note.chain)}, boolean={yes_no(note.boolean)}, "
        f"quoted as {note.stated_logic_size}{' (differs)' if note.differs_from_stated else ''}"
    )
    for entry in report.discrepancies:
        subject = entry.subject.strip().replace("\n", "; ")
        lines.append(f"DISCREPANCY {entry.theorem}: {entry.detail} [{subject}]")
    if report.verified:
        lines.append("all theorems verified, 0 discrepancies")
    else:
        lines.append(f"{len(report.discrepancies)} discrepancies")
    return "\n".join(lines) + "\n"
