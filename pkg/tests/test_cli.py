import json
import os

import pytest

import quasialg

# (golden file, argv); fixture names in braces are resolved against the fixture folder
FIXTURE_FILES = ["octonions.qa", "kfz3.qa", "kz2_trivial.qa", "equiv_c1.qa", "equiv_c4.qa",
                 "mixed_action.qa", "triangular_t3.qa"]

GOLDEN_RUNS = [(name.replace(".qa", "_report.txt"), ["report", "{" + name + "}"])
               for name in FIXTURE_FILES] + [
    ("octonions_verify.txt", ["verify", "{octonions.qa}"]),
    ("equiv_c4.txt", ["equiv", "{equiv_c4.qa}"]),
    ("complex_cd_double.txt", ["cd-double", "--builtin", "complex"]),
    ("quaternion_cochain_double.txt", ["cd-double", "--builtin", "quaternions", "--level", "cochain"]),
    ("mixed_action_verify.txt", ["verify", "{mixed_action.qa}"]),
]


def _resolve(argv, fixture_path):
    return [fixture_path(a[1:-1]) if a.startswith("{") else a for a in argv]


def _statuses(text):
    """{check name: status} from a text report."""
    out, name = {}, None
    for line in text.splitlines():
        if line.startswith("[check "):
            name = line[len("[check "):-1]
        elif name and line.startswith("status = "):
            out[name] = line[len("status = "):]
    return out


@pytest.mark.parametrize("golden, argv", GOLDEN_RUNS, ids=[g for g, _ in GOLDEN_RUNS])
def test_golden_reports(golden, argv, run_cli, fixture_path, golden_dir, update_golden):
    _, out, _ = run_cli(*_resolve(argv, fixture_path), "--seed", "0", "--jobs", "1")
    path = os.path.join(golden_dir, golden)
    if update_golden:
        os.makedirs(golden_dir, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(out)
        return
    if not os.path.exists(path):
        pytest.fail(f"no golden file {golden}; run with --update-golden and commit it")
    with open(path, encoding="utf-8") as fh:
        assert out == fh.read()


def test_deformed_matrices_report(run_cli, fixture_path):
    # the unit family and the sampled generators come from the seeded search
    code, out, _ = run_cli("report", fixture_path("deformed_m3.qa"), "--seed", "0", "--jobs", "1")
    assert code == quasialg.EXIT_PASS
    statuses = _statuses(out)
    assert statuses["cocycle"] == "pass"
    assert statuses["quasiassociativity"] == "pass"
    assert statuses["strongly_graded"] == "pass"
    assert statuses["quasicrossed_product"] == "yes"
    assert statuses["simple"] == "undecided"
    assert statuses["bimodule"] == "pass"
    assert "component_dims = 3 3 3" in out


@pytest.mark.parametrize("argv, code", [
    (["verify", "{octonions.qa}"], quasialg.EXIT_PASS),
    (["verify", "--builtin", "octonions"], quasialg.EXIT_PASS),
    (["verify", "{triangular_t3.qa}"], quasialg.EXIT_PASS),
    (["verify", "{mixed_action.qa}"], quasialg.EXIT_FAIL),
    (["verify", "{equiv_c1.qa}"], quasialg.EXIT_PASS),
    (["simple", "{kz2_trivial.qa}"], quasialg.EXIT_PASS),
    (["simple", "{kz2_trivial.qa}", "--ungraded"], quasialg.EXIT_FAIL),
    (["simple", "{deformed_m3.qa}"], quasialg.EXIT_UNDECIDED),
    (["center", "--builtin", "complex"], quasialg.EXIT_FAIL),
    (["center", "--builtin", "octonions"], quasialg.EXIT_PASS),
    (["equiv", "{equiv_c1.qa}"], quasialg.EXIT_FAIL),
    (["equiv", "{equiv_c4.qa}"], quasialg.EXIT_PASS),
    (["invert", "--builtin", "chessboard:1,1", "--element", "E11"], quasialg.EXIT_FAIL),
    (["cd-double", "--builtin", "complex", "--level", "cochain"], quasialg.EXIT_PASS),
    (["cd-double", "--builtin", "kfz3"], quasialg.EXIT_ERROR),
    (["report", "{triangular_t3.qa}"], quasialg.EXIT_PASS),
])
def test_exit_codes(argv, code, run_cli, fixture_path):
    got, out, err = run_cli(*_resolve(argv, fixture_path))
    assert got == code, out + err


def test_verify_report_lines(run_cli, fixture_path):
    code, out, _ = run_cli("verify", fixture_path("octonions.qa"))
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["report_version = 1", "subject = O"]
    assert "[check quasiassociativity]" in lines
    assert "status = nonassociative" in lines
    assert "dim = 8" in lines


def test_machine_output(run_cli):
    code, out, _ = run_cli("verify", "--builtin", "quaternions", "--machine")
    assert code == 0
    doc = json.loads(out)
    assert doc["report_version"] == 1
    assert [c["name"] for c in doc["checks"]] == ["cocycle", "cocycle_identities",
                                                  "quasiassociativity", "associativity"]
    assert doc["checks"][3]["status"] == "associative"


def test_jobs_do_not_change_the_report(run_cli):
    _, one, _ = run_cli("verify", "--builtin", "octonions", "--jobs", "1")
    _, two, _ = run_cli("verify", "--builtin", "octonions", "--jobs", "2")
    assert one == two


def test_mul_and_invert(run_cli):
    code, out, _ = run_cli("mul", "--builtin", "quaternions", "--left", "e(1,0)", "--right", "e(0,1)")
    assert code == 0
    assert "product = -e(1,1)" in out.splitlines()
    code, out, _ = run_cli("invert", "--builtin", "octonions", "--element", "2*e(1,0,0)")
    assert code == 0
    assert "left_inverse = -1/2*e(1,0,0)" in out.splitlines()
    assert "degree = (1,0,0)" in out.splitlines()


def test_equivalence_witness_is_printed(run_cli, fixture_path):
    _, out, _ = run_cli("equiv", fixture_path("equiv_c4.qa"))
    assert "status = equivalent" in out
    assert "subject = twisted ~ plain" in out
    assert any(line.startswith("witness_u = ") for line in out.splitlines())


def test_build_writes_csv(run_cli, tmp_path):
    target = tmp_path / "tables" / "kfz3.csv"
    code, out, _ = run_cli("build", "--builtin", "kfz3", "--csv", str(target))
    assert code == 0
    assert "e1*e1 = -e2" in out.splitlines()
    assert target.read_text(encoding="utf-8").splitlines()[0] == ",e,e1,e2"


def test_build_from_a_system(run_cli, fixture_path):
    code, out, _ = run_cli("build", fixture_path("equiv_c4.qa"), "--algebra", "twisted")
    assert code == 0
    assert "u1*u1 = -u0" in out.splitlines()


def test_report_writes_pdf(run_cli, fixture_path, tmp_path):
    target = tmp_path / "kfz3.pdf"
    code, _, _ = run_cli("report", fixture_path("kfz3.qa"), "--pdf", str(target))
    assert code == 0
    assert target.read_bytes().startswith(b"%PDF")


def test_errors_exit_with_three(run_cli, tmp_path):
    code, _, err = run_cli("verify", str(tmp_path / "missing.qa"))
    assert code == quasialg.EXIT_ERROR
    assert err.startswith("error:")
    bad = tmp_path / "bad.qa"
    bad.write_text("conductor = 1\n\n[algebra A]\ngroup = H\n", encoding="utf-8")
    code, _, err = run_cli("verify", str(bad))
    assert code == quasialg.EXIT_ERROR
    assert "line 4" in err
    code, _, err = run_cli("mul", "--builtin", "complex")
    assert code == quasialg.EXIT_ERROR


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["verify", "--builtin", "octonions", "--no-such-flag"],
    ["verify", "--jobs", "many", "--builtin", "octonions"],
    ["cd-double", "--builtin", "complex", "--level", "sideways"],
])
def test_usage_errors_exit_with_three(argv, run_cli):
    code, out, err = run_cli(*argv)
    assert code == quasialg.EXIT_ERROR
    assert out == ""
    assert "usage: quasialg" in err
