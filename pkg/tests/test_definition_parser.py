import glob
import os

import pytest

from quasi_core.Errors import DefinitionSyntaxError, DuplicateSection, UnknownReference
from quasi_core.QuasialgConfig import DEFAULT_CONFIG
from utils.definition_parser import (normalize_key, parse, parse_key_tuple, parse_matrix,
                                     print_document, split_top)

SMALL = """\
conductor = 4   # Gaussian rationals

[group]
product = Z2

[cochain F]
group = G
(1,1) = z

[algebra A]
group = G
cochain = F
"""


def _fixture_texts():
    for path in sorted(glob.glob(os.path.join(DEFAULT_CONFIG.fixtures_path, "*.qa"))):
        with open(path, encoding="utf-8") as fh:
            yield os.path.basename(path), fh.read()


def test_sections_and_entries():
    doc = parse(SMALL)
    assert doc.conductor == 4
    assert [(s.kind, s.name) for s in doc.sections] == [("group", "G"), ("cochain", "F"),
                                                         ("algebra", "A")]
    F = doc.section("F")
    assert F.get("(1,1)") == "z"
    assert F.entry("(1,1)").line == 8
    assert [s.name for s in doc.of_kind("algebra")] == ["A"]


FIXTURES = list(_fixture_texts())


@pytest.mark.parametrize("name, text", FIXTURES, ids=[name for name, _ in FIXTURES])
def test_printed_form_reparses(name, text):
    doc = parse(text)
    printed = print_document(doc)
    assert parse(printed) == doc
    assert print_document(parse(printed)) == printed


def test_keys_are_normalized():
    assert normalize_key("e1  *  e2") == "e1*e2"
    assert normalize_key("alpha   (1,1)") == "alpha (1,1)"
    assert normalize_key("left: E22 * m") == "left: E22*m"


def test_bracket_helpers():
    assert split_top("(1,0), (0,1)") == ["(1,0)", "(0,1)"]
    assert parse_key_tuple("((1,0),(0,1))") == ["(1,0)", "(0,1)"]
    assert parse_matrix("[[1, 0], [0, -1]]") == [["1", "0"], ["0", "-1"]]
    with pytest.raises(DefinitionSyntaxError):
        parse_key_tuple("1,1")


def test_conductor_comes_first():
    with pytest.raises(DefinitionSyntaxError) as err:
        parse("[group]\nproduct = Z2\n")
    assert err.value.line == 1
    with pytest.raises(DefinitionSyntaxError) as err:
        parse("conductor = x\n")
    assert (err.value.line, err.value.column) == (1, 12)
    with pytest.raises(DefinitionSyntaxError):
        parse("conductor = 0\n")
    with pytest.raises(DefinitionSyntaxError):
        parse("# nothing here\n")


@pytest.mark.parametrize("text, line", [
    ("conductor = 1\nproduct = Z2\n", 2),
    ("conductor = 1\n[ring R]\n", 2),
    ("conductor = 1\n[algebra]\n", 2),
    ("conductor = 1\n[group\n", 2),
    ("conductor = 1\n[group]\nproduct Z2\n", 3),
    ("conductor = 1\n[group]\nproduct =\n", 3),
    ("conductor = 1\n[group]\n= Z2\n", 3),
])
def test_syntax_errors_carry_the_line(text, line):
    with pytest.raises(DefinitionSyntaxError) as err:
        parse(text)
    assert err.value.line == line


def test_duplicate_sections():
    text = "conductor = 1\n[group]\nproduct = Z2\n[algebra A]\nbuiltin = complex\n[system A]\nfrom = A\n"
    with pytest.raises(DuplicateSection) as err:
        parse(text)
    assert err.value.line == 6


def test_unknown_references():
    text = "conductor = 1\n\n[algebra A]\ngroup = H\ncochain = F\n"
    with pytest.raises(UnknownReference) as err:
        parse(text)
    assert (err.value.name, err.value.line) == ("H", 4)


def test_reference_must_name_the_right_kind():
    text = "conductor = 1\n[group]\nproduct = Z2\n[algebra A]\ngroup = G\ncochain = G\n"
    with pytest.raises(UnknownReference) as err:
        parse(text)
    assert err.value.line == 6


def test_coboundary_references():
    ok = "conductor = 1\n[cocycle phi]\nbuiltin = coboundary(octonion)\n"
    assert parse(ok).section("phi").get("builtin") == "coboundary(octonion)"
    with pytest.raises(UnknownReference):
        parse("conductor = 1\n[cocycle phi]\nbuiltin = coboundary(F)\n")
