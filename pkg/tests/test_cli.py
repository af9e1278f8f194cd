import json
import subprocess
import sys

import pytest

from hecke_residual.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_f4_table(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "F4", "--format", "md")
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("| f")]
    assert [row.split("|")[1].strip() for row in rows] == [f"f{i}" for i in range(1, 9)]


def test_enumerate_json_round_trips(capsys):
    code, out, _ = run(capsys, "enumerate", "--type", "G2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [row["label"] for row in data] == ["g1", "g2", "g3"]
    assert json.loads(json.dumps(data)) == data


def test_output_is_deterministic(capsys):
    first = run(capsys, "confluence", "--type", "F4", "--k", "1,1", "--format", "json")[1]
    second = run(capsys, "confluence", "--type", "F4", "--k", "1,1", "--format", "json")[1]
    assert first == second


def test_confluence_g2(capsys):
    code, out, _ = run(capsys, "confluence", "--type", "G2", "--k", "1,1")
    assert code == 0
    body = [line for line in out.splitlines() if line.startswith("| D")]
    assert len(body) == 2
    assert "g1" in body[1] and "g2" in body[0] and "g3" in body[0]


def test_fibers(capsys):
    code, out, _ = run(capsys, "fibers", "--type", "B", "--n", "2", "--m", "0")
    assert code == 0
    assert out == "(1,0): (2),(1,1)\n"


def test_regularity_lists_hyperplanes(capsys):
    code, out, _ = run(capsys, "regularity", "--type", "B2", "--partition", "2")
    assert code == 0
    assert "k1 + k2" in out and "k1 + 2*k2" in out


def test_singular_evaluation_exits_with_domain_error(capsys):
    code, out, err = run(capsys, "regularity", "--type", "B2", "--partition", "2", "--k", "1,-1")
    assert code == 1
    assert out == ""
    assert "violated: k1 + k2 = 0" in err


def test_mfun_a1(capsys):
    code, out, _ = run(capsys, "mfun", "--type", "A1", "--f", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == "3/10"
    assert data["vanishing_order"] == [0, 0]


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--type", "F4", "--k", "1,1", "--format", "json")
    assert code == 0
    assert json.loads(out)["total"] == 9


def test_count_of_a_product(capsys):
    code, out, _ = run(capsys, "count", "--type", "A1xC3", "--k", "1;1,1/3", "--format", "json")
    assert code == 0
    assert json.loads(out)["total"] == 3


def test_affine(capsys):
    code, out, _ = run(capsys, "affine", "--type", "C2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["total"] == 5


def test_spectral_diagram(capsys):
    code, out, _ = run(capsys, "affine", "--type", "C3", "--lattice", "root", "--spectral", "--format", "json")
    assert code == 0
    assert json.loads(out)["symmetry"]


@pytest.mark.parametrize("suite", ["tables", "oracle", "mfun", "affine"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", suite)
    assert code == 0
    assert out.strip() and all(line.startswith("PASS") for line in out.splitlines())


def test_verify_counts_reports_the_d4_mismatch(capsys):
    code, out, _ = run(capsys, "verify", "counts")
    failing = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert code == 1
    assert failing == ["FAIL D4 generic total equals elliptic classes: total 2, elliptic 3"]


def test_missing_type_is_a_configuration_error(capsys):
    code, _, err = run(capsys, "enumerate")
    assert code == 1
    assert "--type" in err


def test_unknown_type(capsys):
    code, _, err = run(capsys, "enumerate", "--type", "E6")
    assert code != 0
    assert err.startswith("error:")


def test_usage_error_exits_with_two():
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "--format", "xml"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hecke_residual", "fibers", "--type", "B", "--n", "2", "--m", "0"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "(1,0): (2),(1,1)\n"
