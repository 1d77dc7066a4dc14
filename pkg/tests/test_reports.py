import json

import pytest

from quasi_core.CheckReport import CheckReport, combine
from quasi_core.DeformedGroupAlgebra import clifford, complex_algebra, group_algebra, kfz3, quaternions
from quasi_core.FiniteGroup import cyclic
from quasi_core.QuasialgConfig import QuasialgConfig
from utils.pdf_report import generate_pdf
from utils.report_writer import render, render_json, render_text, table_lines
from utils.table_export import diff_tables, multiplication_frame


def _reports():
    ok = CheckReport("cocycle", True, 64, [], {"exhaustive": True})
    bad = CheckReport("bimodule", False, 8, [("E21", "n", "E12", "n", "0")],
                      {"left": "pass", "right": "pass"})
    return [ok, bad]


def test_text_report_layout():
    text = render_text("Mat", _reports(), info={"dim": 4}, table=["E11*E11 = E11"])
    assert text.splitlines() == [
        "report_version = 1",
        "subject = Mat",
        "dim = 4",
        "",
        "[check cocycle]",
        "status = pass",
        "checked = 64",
        "witnesses = 0",
        "exhaustive = True",
        "",
        "[check bimodule]",
        "status = fail",
        "checked = 8",
        "witnesses = 1",
        "witness.0 = (E21, n, E12, n, 0)",
        "left = pass",
        "right = pass",
        "",
        "[table]",
        "E11*E11 = E11",
    ]


def test_json_report():
    doc = json.loads(render("Mat", _reports(), machine=True))
    assert doc["subject"] == "Mat"
    assert doc["checks"][1]["witnesses"] == ["(E21, n, E12, n, 0)"]
    assert "table" not in doc
    assert json.loads(render_json("Mat", [], table=[]))["table"] == []


def test_combined_reports():
    merged = combine("all", _reports())
    assert not merged.passed
    assert merged.checked == 72
    assert merged.witnesses == [("bimodule", "E21", "n", "E12", "n", "0")]


def test_table_lines_skip_zero_products():
    lines = table_lines(complex_algebra())
    assert lines == ["e0*e0 = e0", "e0*e1 = e1", "e1*e0 = e1", "e1*e1 = -e0"]


def test_multiplication_frame():
    frame = multiplication_frame(kfz3())
    assert list(frame.columns) == ["e", "e1", "e2"]
    assert frame.loc["e1", "e1"] == "-e2"


def test_table_differences():
    assert diff_tables(clifford(2), quaternions()).empty
    diff = diff_tables(kfz3(), group_algebra(cyclic(3), names=["e", "e1", "e2"]))
    assert diff.to_dict("records") == [{"left": "e1", "right": "e1", "first": "-e2", "second": "e2"}]
    with pytest.raises(ValueError):
        diff_tables(complex_algebra(), quaternions())


def test_pdf_report(tmp_path):
    path = generate_pdf("O", _reports(), info={"dim": 8}, file_path=str(tmp_path / "o.pdf"),
                        stamp=False)
    with open(path, "rb") as fh:
        assert fh.read(4) == b"%PDF"


def test_config_dictionary():
    config = QuasialgConfig(seed=3, jobs=0)
    values = config.get_config()
    assert values["seed"] == 3
    assert values["jobs"] == 1
    assert values["fixtures_path"].endswith("fixtures")
