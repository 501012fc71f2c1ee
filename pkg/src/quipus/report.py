"""Deterministic text, CSV, JSON, LaTeX and DOT renderings of a classification."""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

from .enumeration import EquivalenceClass
from .presentations import NakayamaPresentation, QuipuShape, render
from .shapes import to_tree

__all__ = ["FORMATS", "emit", "load_schema"]

FORMATS = ("text", "csv", "json", "latex", "dot")

CSV_COLUMNS = ("n", "canonical_k", "canonical_m", "member_count", "members")


def load_schema() -> dict:
    text = resources.files("quipus").joinpath("data/classification.schema.json").read_text()
    return json.loads(text)


def _text(classes) -> str:
    lines = []
    for c in classes:
        members = ", ".join(map(render, c.members)) or "-"
        lines.append(f"{c.label} | {members}")
    return "".join(line + "\n" for line in lines)


def _csv(classes) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for c in classes:
        writer.writerow(
            [
                c.n,
                "[" + ",".join(map(str, c.canonical.k)) + "]",
                "[" + ",".join(map(str, c.canonical.m)) + "]",
                len(c.members),
                ";".join(map(render, c.members)),
            ]
        )
    return buf.getvalue()


def _json(classes, n) -> str:
    doc = {
        "n": n,
        "classes": [
            {
                "canonical": {"k": list(c.canonical.k), "m": list(c.canonical.m)},
                "members": [render(p) for p in c.members],
            }
            for c in classes
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def _latex_label(c: EquivalenceClass) -> str:
    label = c.label
    if label.startswith("Q:"):
        q = c.canonical
        return f"$P_{{({','.join(map(str, q.k))})}}^{{({','.join(map(str, q.m))})}}$"
    tilde = label.startswith("~")
    letter, index = label.lstrip("~")[0], label.lstrip("~")[1:]
    body = f"\\mathbb{{{letter}}}"
    if tilde:
        body = f"\\tilde{{{body}}}"
    return f"${body}_{{{index}}}$"


def _latex_algebra(p: NakayamaPresentation) -> str:
    if not p.relations:
        return f"$A_{{{p.n}}}$"
    starts = ",".join(map(str, p.starts))
    lengths = ",".join(map(str, p.lengths))
    return f"$A_{{{p.n},({starts})}}^{{({lengths})}}$"


def _latex(classes) -> str:
    out = [
        "\\begin{tabular}{|c|c|}",
        "\\hline",
        "\\textbf{Quipu} & \\textbf{Corresponding Nakayama algebras} \\\\",
        "\\hline",
    ]
    for c in classes:
        algebras = ", ".join(_latex_algebra(p) for p in c.members) or "--"
        out.append(f"{_latex_label(c)} & {algebras} \\\\")
        out.append("\\hline")
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


def _dot(classes) -> str:
    out = ["graph classification {", "  node [shape=point];"]
    for idx, c in enumerate(classes):
        out.append(f"  subgraph cluster_{idx} {{")
        out.append(f'    label="{c.label} {render(c.canonical)}";')
        tree = to_tree(c.canonical)
        for v in sorted(tree):
            out.append(f"    c{idx}_{v};")
        for v in sorted(tree):
            for w in sorted(tree[v]):
                if v < w:
                    out.append(f"    c{idx}_{v} -- c{idx}_{w};")
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"


def emit(classes: list[EquivalenceClass], fmt: str, n: int | None = None) -> str:
    """Render ``classes`` in one of :data:`FORMATS`."""
    if n is None and classes:
        n = classes[0].n
    if fmt == "text":
        return _text(classes)
    if fmt == "csv":
        return _csv(classes)
    if fmt == "json":
        return _json(classes, n)
    if fmt == "latex":
        return _latex(classes)
    if fmt == "dot":
        return _dot(classes)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
