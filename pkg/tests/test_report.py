import csv
import io
import json

import jsonschema
import pytest

from oracles import GOLDEN
from quipus import classify
from quipus.report import CSV_COLUMNS, FORMATS, emit, load_schema


@pytest.mark.parametrize("n", range(1, 9))
def test_text_goldens(n):
    assert emit(classify(n, 3), "text") == (GOLDEN / f"classify_n{n}.txt").read_text()


def test_order_four_text_exact():
    assert emit(classify(4, 3), "text") == "A4 | A:4:[]:[]\nD4 | A:4:[1]:[3]\n"


@pytest.mark.parametrize("fmt", ["csv", "json", "latex", "dot"])
def test_other_goldens(fmt):
    assert emit(classify(7, 3), fmt) == (GOLDEN / f"classify_n7.{fmt}").read_text()


def test_empty_csv_is_header_only():
    assert emit([], "csv") == ",".join(CSV_COLUMNS) + "\n"


def test_csv_rows():
    rows = list(csv.DictReader(io.StringIO(emit(classify(8, 3), "csv"))))
    assert len(rows) == 11
    assert sum(int(r["member_count"]) for r in rows) == 32
    e8 = [r for r in rows if r["canonical_k"] == "[1,2]" and r["canonical_m"] == "[4]"]
    assert e8[0]["members"].split(";")[0] == "A:8:[1]:[4]"


@pytest.mark.parametrize("n", range(1, 10))
def test_json_validates(n):
    doc = json.loads(emit(classify(n, 3), "json"))
    jsonschema.validate(doc, load_schema())
    assert doc["n"] == n


def test_dot_is_one_tree_per_class():
    text = emit(classify(6, 3), "dot")
    assert text.count("subgraph cluster_") == 4
    # a tree on 6 vertices has 5 edges
    assert text.count(" -- ") == 4 * 5


def test_latex_structure():
    text = emit(classify(6, 3), "latex")
    assert text.startswith("\\begin{tabular}{|c|c|}")
    assert "$\\tilde{\\mathbb{D}}_{5}$ & $A_{6,(1,3)}^{(3,3)}$ \\\\" in text


def test_every_format_is_deterministic():
    classes = classify(8, 3)
    for fmt in FORMATS:
        assert emit(classes, fmt) == emit(classify(8, 3), fmt)


def test_unknown_format():
    with pytest.raises(ValueError):
        emit([], "yaml")
