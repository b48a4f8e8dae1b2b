import subprocess
import sys

import pytest

from polycyclic.cli import run

Z4_ARGS = ["--ring", "Z4", "--eval-ring", "Z16", "--f", "x^2-x", "--m", "3", "--roots", "1,12",
      "--g", "1+2x^3+x^4+3x^5"]


def records(out):
    lines = out.strip().splitlines()
    assert lines[0].startswith("command=") and lines[-1] == "status=ok"
    return dict(line.split("=", 1) for line in lines)


def test_gdft_machine():
    status, out, err = run(["gdft", *Z4_ARGS, "--format", "machine"])
    assert status == 0 and err == ""
    rec = records(out)
    assert [rec[f"gdft.row.{i}"] for i in range(3)] == ["7 1", "5 0", "6 8"]


def test_ms_text_and_machine():
    status, out, _ = run(["ms", *Z4_ARGS])
    assert status == 0 and "(7+5y+6y^2)+(1+8y^2)x" in out
    rec = records(run(["ms", *Z4_ARGS, "--format", "machine"])[1])
    assert rec["ms"] == "(7+5y+6y^2)+(1+8y^2)x"
    assert rec["table.row.1"] == "1 0 8"


def test_factor_and_code():
    rec = records(run(["factor", "--ring", "F2", "--f", "x^7-1", "--format", "machine"])[1])
    assert rec["order"] == "7" and rec["squarefree"] == "True"
    rec = records(run(["code", "--ring", "F2", "--f", "x^7-1", "--g", "x^3+x+1",
                       "--format", "machine"])[1])
    assert (rec["code.dimension"], rec["code.distance"]) == ("4", "3")


def test_dual_generator():
    rec = records(run(["dual", "--ring", "F2", "--f", "x^7-1", "--g", "x^3+x+1",
                       "--format", "machine"])[1])
    assert rec["dual.generator"] == "1+x+x^2+x^4"
    assert int(rec["code.cardinality"]) * int(rec["dual.cardinality"]) == 2**7


def test_generator_file(tmp_path):
    gens = tmp_path / "g.txt"
    gens.write_text("# two generators\nx^4+x^3+x^2+1\n\nx^3+x+1\n")
    rec = records(run(["code", "--ring", "F2", "--f", "x^7-1", "--g", f"@{gens}",
                       "--format", "machine"])[1])
    assert rec["code.generator"] == "1+x+x^3"


def test_mp_decompose_verdicts():
    rec = records(run(["mp-decompose", "--ring", "F3", "--f", "x+1", "--g", "x^2+2x+1",
                       "--format", "machine"])[1])
    assert rec["verdict.structure_literal"] == "FAIL"
    assert rec["verdict.structure_twisted"] == "PASS"
    assert rec["cyc.row.1"] == "0 1 2"


def test_idempotents_machine():
    rec = records(run(["idempotents", "--ring", "F3", "--f", "x^3-x", "--format", "machine"])[1])
    assert {rec[f"class.{i}.E"] for i in range(3)} == {"1+2x^2", "x+2x^2", "2x+2x^2"}
    assert rec["identity.sum_one"] == "PASS"


@pytest.mark.parametrize("argv,code,cls", [
    (["bogus"], 2, "ParseError"),
    (["gdft", "--ring", "Z4"], 2, "ParseError"),
    (["ring-info", "--ring", "Q7"], 2, "ParseError"),
    (["code", "--ring", "F2", "--f", "x^3+x^^2", "--g", "1"], 2, "ParseError"),
    (["distance", "--ring", "F2", "--f", "x^7-1", "--g", "x^7-1"], 1, "ZeroCode"),
    (["dual", "--ring", "F2", "--f", "x^2+x", "--g", "x"], 1, "NonUnitConstantTerm"),
])
def test_errors(argv, code, cls):
    status, out, err = run(argv)
    assert status == code and out == ""
    assert err.startswith("error=")
    if cls:
        assert err.startswith(f"error={cls}:")


def test_verify_selected():
    status, out, _ = run(["verify", "--only", "hasse", "--format", "machine"])
    rec = records(out)
    assert status == 0
    assert rec["property.hasse.taylor"].startswith("PASS")


def test_verify_failing_property_exit():
    status, out, _ = run(["verify", "--only", "ms.jordan", "--format", "machine"])
    assert status == 3
    assert records(out)["property.ms.jordan"].startswith("FAIL")


def test_out_file_and_determinism(tmp_path):
    dest = tmp_path / "r.txt"
    first = run(["ms", *Z4_ARGS, "--format", "machine", "--out", str(dest)])
    assert first == run(["ms", *Z4_ARGS, "--format", "machine"])
    assert dest.read_text() == first[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polycyclic", "ring-info", "--ring", "GR(4,2)",
                           "--format", "machine"], capture_output=True, text=True, check=True)
    rec = records(proc.stdout)
    assert rec["size"] == "16" and rec["is_field"] == "False"
