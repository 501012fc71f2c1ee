import subprocess
import sys

import pytest

from oracles import GOLDEN
from quipus import __version__, parse
from quipus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_translate_to_quipu(capsys):
    assert run(capsys, "translate", "--to", "quipu", "A:14:[2,7,11]:[4,5,3]") == (0, "Q:[2,2,0,1]:[2,3,1]\n", "")


def test_translate_normalized(capsys):
    _, out, _ = run(capsys, "translate", "--to", "quipu", "--normalize", "A:9:[1,3,7]:[3,4,2]")
    assert out == "Q:[1,0,3]:[1,2]\n"


def test_translate_to_nakayama(capsys):
    _, out, _ = run(capsys, "translate", "--to", "nakayama", "Q:[2,2,0,1]:[2,3,1]")
    assert out == "A:14:[2,7,11]:[4,5,3]\n"


def test_translate_wrong_kind_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["translate", "--to", "nakayama", "A:4:[]:[]"])
    assert info.value.code == 2


def test_canonical(capsys):
    _, out, _ = run(capsys, "canonical", "A:13:[1,4,5,6,8]:[4,2,2,3,5]")
    assert out == "Q:[1,0,2,1]:[3,1,2]\n"


def test_equal_true(capsys):
    code, out, _ = run(capsys, "equal", "A:13:[1,6,8]:[4,3,5]", "A:13:[1,5,9]:[5,3,4]")
    assert (code, out) == (0, "true\n")


def test_equal_false(capsys):
    code, out, _ = run(capsys, "equal", "A:8:[1]:[4]", "A:8:[1]:[5]")
    assert (code, out) == (3, "false\n")


def test_family(capsys):
    _, out, _ = run(capsys, "family", "A:8:[3]:[3]")
    assert len(out.splitlines()) == 8
    _, out, _ = run(capsys, "family", "--dedupe", "A:8:[3]:[3]")
    assert out.splitlines() == ["A:8:[1]:[5]", "A:8:[3]:[3]", "A:8:[3]:[5]"]


def test_strip(capsys):
    _, out, _ = run(capsys, "strip", "A:13:[1,4,5,6,8]:[4,2,2,3,5]")
    assert out == "A:13:[1,6,8]:[4,3,5]\n"


def test_swap_and_trace(capsys):
    _, out, _ = run(capsys, "swap", "A:9:[1,3,7]:[3,4,2]", "--relation", "0", "--trace")
    assert out.splitlines() == ["M:9:[]:[(1,3),(3,4),(7,2)]", "M:8:[(2,1)]:[(2,4),(6,2)]"]


def test_swap_inverse(capsys):
    _, out, _ = run(capsys, "swap", "M:8:[(2,1)]:[(2,4),(6,2)]", "--inverse", "--vertex", "2")
    assert out == "M:9:[]:[(1,3),(3,4),(7,2)]\n"
    _, out, _ = run(capsys, "swap", "M:5:[(4,2)]:[(2,2)]", "--inverse", "--relation", "0")
    assert out == "M:7:[]:[(3,4)]\n"


def test_swap_needs_relation(capsys):
    with pytest.raises(SystemExit) as info:
        main(["swap", "M:7:[]:[(3,4)]"])
    assert info.value.code == 2


def test_first_to_cord(capsys):
    _, out, _ = run(capsys, "first-to-cord", "M:7:[]:[(2,3)]", "--iterated", "--trace")
    lines = out.splitlines()
    assert len(lines) == 3 and lines[-1] == "M:6:[(3,1)]:[]"
    _, out, _ = run(capsys, "first-to-cord", "M:7:[]:[(2,3)]")
    assert out == "M:6:[(3,1)]:[]\n"


def test_classify_text_golden(capsys):
    _, out, _ = run(capsys, "classify", "--n", "8", "--format", "text")
    assert out == (GOLDEN / "classify_n8.txt").read_text()


def test_classify_csv_rows(capsys):
    _, out, _ = run(capsys, "classify", "--n", "8", "--format", "csv")
    assert len(out.splitlines()) == 12


def test_classify_short_relations(capsys):
    _, out, _ = run(capsys, "classify", "--n", "4", "--min-length", "2")
    assert out == "A4 | A:4:[]:[], A:4:[1]:[2], A:4:[1,2]:[2,2], A:4:[2]:[2]\nD4 | A:4:[1]:[3]\n"


def test_verify_table(capsys):
    code, out, _ = run(capsys, "verify", "--n", "6")
    assert code == 0
    assert "4 distinct Coxeter polynomials across 4 classes" in out


def test_verify_pair(capsys):
    code, out, _ = run(capsys, "verify", "A:8:[1]:[4]", "A:8:[]:[]")
    assert code == 3 and out.splitlines()[-1].startswith("refuted")
    code, _, _ = run(capsys, "verify", "A:13:[1,6,8]:[4,3,5]", "A:13:[2,6,8]:[3,3,3]")
    assert code == 0


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", "--quipus", "--n", "4")
    assert out.splitlines() == ["Q:[4]:[]", "Q:[1,1]:[1]"]
    _, out, _ = run(capsys, "enumerate", "--nakayama", "--n", "4")
    assert out.splitlines() == ["A:4:[]:[]", "A:4:[1]:[3]"]


def test_outputs_reparse(capsys):
    for argv in (["enumerate", "--quipus", "--n", "9"], ["family", "A:13:[1,6,8]:[4,3,5]"]):
        _, out, _ = run(capsys, *argv)
        for line in out.splitlines():
            parse(line)


def test_domain_error_exit_one(capsys):
    code, out, err = run(capsys, "equal", "A:9:[3,1]:[4,3]", "A:9:[]:[]")
    assert code == 1 and out == "" and "not strictly increasing" in err
    code, _, err = run(capsys, "canonical", "A:5:[1:[3]")
    assert code == 1 and "position" in err


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["classify", "--n", "4", "--format", "yaml"])
    assert info.value.code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert capsys.readouterr().out.strip() == f"quipus {__version__}"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quipus", "translate", "--to", "quipu", "A:14:[2,7,11]:[4,5,3]"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "Q:[2,2,0,1]:[2,3,1]\n"
