import json

import pytest

from normcov.cli import main
from normcov.tables import table_bytes


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--n", "50")
    assert code == 0
    assert out.strip() == "p(50) = 204226"


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--n", "9", "--k", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"label": "p3(9)", "value": 7}


def test_count_cluster_and_coprime(capsys):
    assert run(capsys, "count", "--n", "10", "--k", "3", "--cluster", "5")[1].strip() \
        == "p3(10,5) = 2"
    assert run(capsys, "count", "--n", "12", "--k", "2", "--coprime")[1].strip() \
        == "p2'(12) = 2"


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "--n", "5", "--k", "2")
    assert code == 0
    assert out.splitlines() == ["[4,1]", "[3,2]"]


def test_enum_limit_json(capsys):
    code, out, _ = run(
        capsys, "enum", "--n", "30", "--limit", "3", "--format", "json"
    )
    assert code == 0
    assert len(json.loads(out)) == 3


def test_clusters_intersection(capsys):
    code, out, _ = run(capsys, "clusters", "--n", "10", "--x", "2", "3")
    assert code == 0
    assert out.strip() == "[5,3,2] [7,2,1]"


def test_clusters_union(capsys):
    code, out, _ = run(
        capsys, "clusters", "--n", "10", "--x", "1", "--union", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["union_count"] == 4


def test_qset(capsys):
    code, out, _ = run(capsys, "qset", "--n", "31")
    assert code == 0
    assert out.strip() == "(2,5) (5,3)"
    code, out, _ = run(capsys, "qset", "--n", "11")
    assert out.strip() == "(empty)"


def test_covers(capsys):
    code, out, _ = run(
        capsys, "covers", "--n", "10",
        "--component", "imprimitive:5", "--partition", "2,3,5",
    )
    assert code == 0
    assert out.strip().endswith("true")


def test_verify_maroti(capsys):
    code, out, _ = run(capsys, "verify", "--n", "36", "--maroti")
    assert code == 0
    assert "complete: true" in out
    assert "partitions checked: 17977" in out


def test_verify_incomplete_exits_nonzero(capsys):
    code, out, _ = run(
        capsys, "verify", "--n", "6", "--component", "intransitive:1"
    )
    assert code == 1
    assert "complete: false" in out


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "--n", "12")
    assert code == 0
    assert out.strip().endswith("4")


def test_bound_json(capsys):
    code, out, _ = run(capsys, "bound", "--n", "10000", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["theorem_bound"] == 877
    assert payload["zeta2"] == "3/50"


def test_bound_csv(capsys):
    code, out, _ = run(capsys, "bound", "--n", "20", "--format", "csv")
    assert code == 0
    header, row = out.splitlines()
    assert header.split(",")[0] == "n"
    assert row.split(",")[0] == "20"


def test_tables_dump_bit_exact(capsys, tmp_path):
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "normcov.cli", "tables", "dump"],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == table_bytes()


def test_tables_show(capsys):
    code, out, _ = run(capsys, "tables", "show", "--n", "10")
    assert code == 0
    assert out.strip() == "[6,3,1] [8,1,1]"


def test_tables_show_requires_n(capsys):
    code, _, err = run(capsys, "tables", "show")
    assert code == 2
    assert "requires --n" in err


def test_counterexample(capsys):
    code, out, _ = run(
        capsys, "counterexample", "--p", "43", "--r", "2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["phi_ratio"] == "1932/2021"
    assert payload["a2_holds"] is True
    assert payload["a4_holds"] is False


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "qset", "--n", "-3")
    assert code == 1
    assert "error:" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["count"])  # missing --n
    assert exc.value.code == 2


def test_suite_quick(capsys):
    code, out, _ = run(capsys, "suite", "--level", "quick", "--seed", "7")
    assert "seed=7" in out
    lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
    assert len(lines) == 12
    # the majorant threshold check is knowingly red at a single point
    assert code == 1
    assert sum(1 for l in lines if l.startswith("FAIL")) == 1
    assert "bounds_pipeline" in next(l for l in lines if l.startswith("FAIL"))
