import pytest

from quasi_core.Cochains import antiassociative_cocycle, quaternion_cochain
from quasi_core.DeformedGroupAlgebra import kfz3, octonions, quaternions
from quasi_core.Errors import DefinitionSyntaxError, InvalidParameter, UnknownReference
from quasi_core.GradedModule import verify_bimodule
from quasi_core.GradedQuasialgebra import tables_equal
from quasi_core.QuasicrossedSystem import QuasicrossedSystem, verify_system
from quasi_core.Scalar import root_of_unity
from utils.workspace import Workspace, builtin, parse_element


def test_octonion_file_matches_the_builtin(fixture_path):
    ws = Workspace.from_file(fixture_path("octonions.qa"))
    assert ws.main_name() == "O"
    O = ws.get("O")
    assert O.name == "O"
    assert ws.get("F") == octonions().cochain
    assert tables_equal(O, octonions())
    assert ws.get("O") is O


def test_explicit_table_with_inferred_cocycle(fixture_path):
    A = Workspace.from_file(fixture_path("kfz3.qa")).get("KFZ3")
    assert tables_equal(A, kfz3())
    assert A.cocycle == kfz3().cocycle
    K = Workspace.from_file(fixture_path("kz2_trivial.qa")).get("KZ2")
    assert K.cocycle.is_trivial()
    assert K.one == K.basis_element("e")


def test_systems_from_entries(fixture_path):
    ws = Workspace.from_file(fixture_path("equiv_c4.qa"))
    assert ws.names("system") == ["twisted", "plain"]
    twisted = ws.get("twisted")
    assert isinstance(twisted, QuasicrossedSystem)
    assert twisted.base.scalar_part(twisted.alpha_value("1", "1")) == -1
    assert verify_system(twisted).passed


def test_module_file(fixture_path):
    M = Workspace.from_file(fixture_path("mixed_action.qa")).get("MN")
    report = verify_bimodule(M)
    assert report.details == {"left": "pass", "right": "pass"}
    assert not report.passed


def test_system_extracted_from_an_algebra():
    ws = Workspace.from_text("conductor = 1\n[algebra O]\nbuiltin = octonions\n[system S]\nfrom = O\n")
    S = ws.get("S")
    assert S.name == "S"
    assert verify_system(S).passed


def test_cocycle_builtins():
    text = ("conductor = 3\n[group]\nproduct = Z3\n[cocycle phi]\nbuiltin = z3(1, 1, z)\n"
            "[cocycle psi]\ngroup = G\nbuiltin = trivial\n")
    ws = Workspace.from_text(text)
    assert ws.get("phi")("1", "2", "2") == root_of_unity(3, 1)
    assert ws.get("psi").is_trivial()


@pytest.mark.parametrize("name, dim", [
    ("complex", 2), ("clifford:3", 8), ("group:Z2xZ2", 4), ("chessboard:1,2", 9),
    ("deformed-matrices:3:z3", 9), ("triangular:3", 6), ("delta:3,z,4", 4), ("mat-delta:2", 8),
    ("kfz3", 3),
])
def test_builtins(name, dim):
    assert builtin(name, 3 if name.endswith("z3") else 1).dim == dim


@pytest.mark.parametrize("name", ["sedenions", "clifford:x", "triangular:4:z3", "chessboard:2"])
def test_bad_builtins(name):
    with pytest.raises(InvalidParameter):
        builtin(name)


def test_bad_values_carry_the_line():
    text = "conductor = 1\n[group]\nproduct = Z2\n[cochain F]\ngroup = G\n(1,1) = 2 *\n"
    with pytest.raises(DefinitionSyntaxError) as err:
        Workspace.from_text(text).get("F")
    assert err.value.line == 6


def test_incomplete_algebra_section():
    ws = Workspace.from_text("conductor = 1\n[algebra A]\nnames = a\n")
    with pytest.raises(DefinitionSyntaxError) as err:
        ws.get("A")
    assert err.value.line == 2
    with pytest.raises(UnknownReference):
        ws.get("B")


def test_parse_element():
    A = kfz3()
    x = parse_element(A, "e1 + 2*e2 - 3")
    assert x == A.basis_element("e1") + A.basis_element("e2") * 2 - A.one * 3
    M = Workspace.from_text("conductor = 1\n[module M]\nalgebra = A\nbasis = m:0\nleft: e*m = m\n"
                            "[algebra A]\nbuiltin = kfz3\n").get("M")
    assert parse_element(M, "2*m") == M.basis_vector("m") * 2
    with pytest.raises(InvalidParameter):
        parse_element(M, "m + 1")


QUATERNION_TABLE = """\
conductor = 1

[group]
product = Z2 x Z2

[cochain F]
group = G
table = { ((1,0),(1,0)): -1, ((1,0),(0,1)): -1, ((0,1),(0,1)): -1, ((0,1),(1,1)): -1, ((1,1),(1,0)): -1, ((1,1),(1,1)): -1 }

[algebra H]
group = G
cochain = F
"""


def test_cochain_table_form():
    ws = Workspace.from_text(QUATERNION_TABLE)
    F = ws.get("F")
    assert F("(1,0)", "(1,0)") == -1
    assert F("(0,1)", "(1,0)") == 1
    assert F == quaternion_cochain()
    assert tables_equal(ws.get("H"), quaternions())


def test_cocycle_table_form_mixes_with_entries():
    text = ("conductor = 1\n[group]\nproduct = Z2\n[cocycle phi]\ngroup = G\n"
            "table = { (1,1,1): -1 }\n")
    assert Workspace.from_text(text).get("phi") == antiassociative_cocycle()
    twice = text + "(1,1,1) = -1\n"
    with pytest.raises(DefinitionSyntaxError) as err:
        Workspace.from_text(twice).get("phi")
    assert err.value.line == 6


@pytest.mark.parametrize("table", ["(1,1): -1", "{ (1,1) -1 }", "{ (1,1,1): -1 }"])
def test_malformed_cochain_tables(table):
    text = f"conductor = 1\n[group]\nproduct = Z2\n[cochain F]\ngroup = G\ntable = {table}\n"
    with pytest.raises(DefinitionSyntaxError) as err:
        Workspace.from_text(text).get("F")
    assert err.value.line == 6


COMPLEX_CONJUGATION = """\
conductor = 1

[group]
product = Z2

[algebra C]
basis = one, i
one*one = one
one*i = i
i*one = i
i*i = -one

[system S]
group = G
base = C
sigma 1 = {matrix}
"""


@pytest.mark.parametrize("matrix", ["[[1, 0], [0, -1]]", "matrix [[1, 0], [0, -1]]"])
def test_sigma_matrices(matrix):
    S = Workspace.from_text(COMPLEX_CONJUGATION.format(matrix=matrix)).get("S")
    i = S.base.basis_element("i")
    assert S.sigma_apply("1", i) == -i
    assert S.sigma_apply("0", i) == i
    assert verify_system(S).passed


def test_sigma_with_unknown_degree():
    text = COMPLEX_CONJUGATION.format(matrix="[[1, 0], [0, -1]]").replace("sigma 1", "sigma 5")
    with pytest.raises(DefinitionSyntaxError) as err:
        Workspace.from_text(text).get("S")
    assert err.value.line == 16


@pytest.mark.parametrize("section, name, line", [
    ("[group]\nproduct = Z2\nidentiy = 0\n", "G", 4),
    ("[group]\nproduct = Z2\n[cochain F]\ngroup = G\nvalues = { (1,1): -1 }\n", "F", 6),
    ("[group]\nproduct = Z2\n[cochain F]\ngroup = G\n1,1 = -1\n", "F", 6),
    ("[algebra A]\nbuiltin = complex\nconductr = 4\n", "A", 4),
    ("[group]\nproduct = Z2\n[algebra K]\nbasis = one\none*one = one\n[system S]\ngroup = G\n"
     "base = K\nsigam 1 = [[1]]\n", "S", 10),
    ("[algebra A]\nbuiltin = kfz3\n[module M]\nalgebra = A\nbasis = m:0\nleft e*m = m\n", "M", 7),
])
def test_unknown_keys_are_rejected(section, name, line):
    ws = Workspace.from_text("conductor = 1\n" + section)
    with pytest.raises(DefinitionSyntaxError) as err:
        ws.get(name)
    assert err.value.line == line
    assert "unknown key" in str(err.value)
