from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import yaml

from source.CoreAlgebra import AxiomReport, Verdict

FORMATS = ("text", "machine")


@dataclass
class Section:
    report: AxiomReport
    labels: Optional[Tuple[str, ...]] = None
    seconds: Optional[float] = None


@dataclass
class Report:
    command: str
    subject: str
    sections: List[Section] = field(default_factory=list)
    notes: Dict[str, Any] = field(default_factory=dict)
    models: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(section.report.passed for section in self.sections)

    def add(self, report: AxiomReport, labels: Optional[Sequence[str]] = None,
            seconds: Optional[float] = None) -> "Report":
        self.sections.append(Section(report, tuple(labels) if labels is not None else None, seconds))
        return self


def plain(value: Any) -> Any:
    """numpy scalars, arrays and tuples to plain YAML-safe values."""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    return value


def _untuple(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_untuple(v) for v in value)
    return value


def _format_value(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.10g}"
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(_format_value(v) for v in value) + ")"
    return str(value)


def label_witness(witness: Sequence[Any], labels: Optional[Sequence[str]]) -> Tuple[str, ...]:
    """Labels when every element indexes them, formatted values otherwise."""
    if labels is not None and all(isinstance(w, (int, np.integer)) and 0 <= int(w) < len(labels) for w in witness):
        return tuple(labels[int(w)] for w in witness)
    return tuple(_format_value(plain(w)) for w in witness)


def _status(report: AxiomReport, verdict: Verdict) -> str:
    status = report.status(verdict)
    if not verdict.expected:
        status += " (expected)" if not verdict.holds else " (expected to fail)"
    return status


def text_header(report: Report) -> str:
    return f"{report.command}: {report.subject}\n"


def text_model(model: str) -> str:
    return "---\n" + model.rstrip("\n") + "\n"


def text_tail(report: Report, timings: bool = False) -> str:
    """Everything after the models."""
    lines = []
    for section in report.sections:
        axiom_report = section.report
        header = f"== {axiom_report.system} [{axiom_report.mode}]"
        if timings and section.seconds is not None:
            header += f" {section.seconds:.3f}s"
        lines.append(header)
        width = max((len(v.axiom) for v in axiom_report.verdicts), default=0)
        for verdict in axiom_report.verdicts:
            line = f"  {verdict.axiom:<{width}}  {_status(axiom_report, verdict)}"
            if verdict.witness:
                line += "  at (" + ", ".join(label_witness(verdict.witness, section.labels)) + ")"
            if verdict.values:
                line += "  " + " ".join(f"{k}={_format_value(v)}" for k, v in verdict.values.items())
            lines.append(line)
        for key, value in axiom_report.facts.items():
            lines.append(f"  - {key}: {_format_value(plain(value))}")
    for key, value in report.notes.items():
        lines.append(f"{key}: {_format_value(plain(value))}")
    lines.append("result: " + ("pass" if report.passed else "fail"))
    return "\n".join(lines) + "\n"


def render_text(report: Report, timings: bool = False) -> str:
    """Header, models, sections, notes, verdict; search prints the same pieces as it goes."""
    return text_header(report) + "".join(map(text_model, report.models)) + text_tail(report, timings)


def to_tree(report: Report, timings: bool = False) -> Dict[str, Any]:
    sections = []
    for section in report.sections:
        verdicts = []
        for verdict in section.report.verdicts:
            entry = {
                "axiom": verdict.axiom,
                "holds": verdict.holds,
                "expected": verdict.expected,
                "status": section.report.status(verdict),
                "witness": plain(verdict.witness),
                "witness_labels": list(label_witness(verdict.witness, section.labels)),
            }
            if verdict.values is not None:
                entry["values"] = plain(verdict.values)
            verdicts.append(entry)
        tree = {"system": section.report.system, "mode": section.report.mode, "verdicts": verdicts,
                "facts": plain(section.report.facts)}
        if section.labels is not None:
            tree["labels"] = list(section.labels)
        if timings and section.seconds is not None:
            tree["seconds"] = section.seconds
        sections.append(tree)
    return {"command": report.command, "subject": report.subject, "passed": report.passed,
            "sections": sections, "notes": plain(report.notes), "models": list(report.models)}


def render_machine(report: Report, timings: bool = False) -> str:
    return yaml.safe_dump(to_tree(report, timings), sort_keys=False, allow_unicode=True)


def from_tree(tree: Dict[str, Any]) -> Report:
    report = Report(tree["command"], tree["subject"], notes=dict(tree.get("notes") or {}),
                    models=list(tree.get("models") or []))
    for section in tree.get("sections", []):
        verdicts = [
            Verdict(entry["axiom"], entry["holds"], _untuple(entry["witness"]), entry["expected"], entry.get("values"))
            for entry in section["verdicts"]
        ]
        axiom_report = AxiomReport(section["system"], verdicts, dict(section.get("facts") or {}), section["mode"])
        labels = tuple(section["labels"]) if "labels" in section else None
        report.add(axiom_report, labels, section.get("seconds"))
    return report


def parse_machine(text: str) -> Report:
    return from_tree(yaml.safe_load(text))


def render(report: Report, fmt: str = "text", timings: bool = False) -> str:
    if fmt == "machine":
        return render_machine(report, timings)
    return render_text(report, timings)
