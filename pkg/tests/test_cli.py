import io
import json
import subprocess
import sys

import pytest

from schur_entropy.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_padic_entropy_examples():
    out = ok("padic-entropy", "-p", "5", "--matrix", "1/5")
    assert out["coeff"] == "1" and out["value_log_p"] is True
    assert ok("padic-entropy", "-p", "5", "--matrix", "1,0;0,1")["coeff"] == "0"
    code, out, err = call("padic-entropy", "-p", "4", "--matrix", "1")
    assert code == 2 and out == ""
    e = json.loads(err)
    assert e["error"] == "InvalidInput" and "p must be prime" in e["detail"]


@pytest.mark.parametrize("argv,code", [
    (["padic-entropy", "--matrix", "1,2;2,4"], 4),
    (["padic-entropy", "--matrix", "1,2;3"], 2),
    (["mixed-entropy", "--matrix", "1,0;1,1", "--shape", "1,1"], 4),
    (["heisenberg", "entropy", "--ring", "Zp", "--A", "1", "--B", "5", "--s", "1"], 4),
    (["heisenberg", "mul", "--g", "a=(1); b=(1); c=0"], 2),
    (["classify", "--descriptor", "1,2,3"], 2),
    (["no-such-command"], 2),
    (["oracle", "--matrix", "1/5", "--n-max", "1"], 2),
    (["real-entropy", "--matrix", "1", "--precision", "0"], 2),
])
def test_exit_codes(argv, code):
    got, out, err = call(*argv)
    assert got == code
    assert set(json.loads(err)) >= {"error", "detail"}


def test_precision_exit_code_carries_suggestion(monkeypatch):
    from schur_entropy import cli
    from schur_entropy.errors import PrecisionExhausted

    def boom(*_):
        raise PrecisionExhausted("cancellation", suggested_precision=128)

    monkeypatch.setattr(cli, "entropy_padic", boom)
    code, _, err = call("padic-entropy", "--matrix", "1")
    assert code == 3 and json.loads(err)["suggested_precision"] == 128


def test_real_and_mixed():
    out = ok("real-entropy", "--matrix", "0,-1;1,3")
    assert abs(out["value"] - 0.9624236501192069) < 1e-9 and out["warnings"] == []
    out = ok("mixed-entropy", "-p", "3", "--matrix", "1/3,0;0,1", "--shape", "1,1")
    assert out["coeff"] == "1"


def test_negative_leading_entries():
    out = ok("padic-entropy", "-p", "5", "--matrix", "-1/5,1;0,-5")
    assert out["coeff"] == "1"
    assert ok("heisenberg", "inv", "--g", "a=(-1); b=(2); c=0")["result"] == "a=(1); b=(-2); c=-2"


def test_oracle_and_addition():
    out = ok("oracle", "-p", "5", "--matrix", "1/25,0;0,1/5", "--n-max", "6")
    assert out["e"] == [0, 3, 6, 9, 12, 15] and out["limit_coeff"] == "3"
    assert out["agrees_with_formula"] is True
    out = ok("addition-check", "-p", "5", "--matrix", "1/5,1;0,1/5", "--split", "1,1")
    assert (out["h_total"], out["h_restriction"], out["h_quotient"], out["equal"]) == ("2", "1", "1", True)


def test_corpus_agrees():
    out = ok("oracle", "--corpus")
    assert len(out["entries"]) == 50 and out["agrees_with_formula"] is True


def test_heisenberg_commands():
    out = ok("heisenberg", "mul", "--g", "a=(1); b=(0); c=0", "--h", "a=(0); b=(1); c=0")
    assert out["result"] == "a=(1); b=(1); c=1"
    out = ok("heisenberg", "comm", "--g", "a=(1); b=(0); c=0", "--h", "a=(0); b=(1); c=0")
    assert out["result"] == "a=(0); b=(0); c=1"
    assert ok("heisenberg", "inv", "--g", "a=(1); b=(1); c=1")["result"] == "a=(-1); b=(-1); c=0"
    assert ok("heisenberg", "pow", "-p", "3", "--g", "a=(1); b=(1); c=0")["result"] == "a=(3); b=(3); c=3"
    out = ok("heisenberg", "rank", "-p", "3", "--ring", "Qp x Zp", "--heis-n", "2")
    assert out["rank"] == out["formula"] == 8
    out = ok("heisenberg", "entropy", "--ring", "Qp", "--A", "5", "--B", "1/5", "--s", "1")
    assert out["coeff"] == "1"
    assert ok("heisenberg", "generators", "--heis-n", "2")["count"] == 4


def test_classify_and_reports():
    out = ok("classify", "--descriptor", "2,3,1,2")
    assert out["rank"] == 8 and out["class"] == "EFiniteOnly" and out["compact"] is False
    out = ok("schur-report", "--ring", "Zp")
    assert out["theorem_instance"] == "compact-zero-entropy"
    assert set(out) >= {"subject", "central_quotient", "derived", "theorem_instance"}
    out = ok("schur-report", "--descriptor", "1,0,0,0")
    assert out["subject_class"] == "EFiniteOnly" and out["theorem_instance"] == "degenerate"


def test_tsv_output():
    code, out, _ = call("oracle", "--matrix", "1/5", "--n-max", "4", "--format", "tsv")
    assert code == 0
    lines = out.strip().splitlines()
    assert "n\te\testimates" in lines
    assert lines[-1].startswith("4\t3\t")
    assert "# limit_coeff\t1" in lines


def test_output_is_deterministic():
    argv = ["heisenberg", "rank", "-p", "2", "--ring", "Zp^2", "--heis-n", "2", "--seed", "7"]
    assert call(*argv) == call(*argv)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schur_entropy.cli", "padic-entropy", "-p", "5",
                           "--matrix", "1/5"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["coeff"] == "1"
