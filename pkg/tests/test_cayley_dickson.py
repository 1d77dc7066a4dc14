import pytest

from quasi_core.CayleyDickson import (Involution, alpha_doubling_check, cd_double_algebra,
                                      cd_double_cochain, doubled_involution, doubling_cross_check,
                                      is_strong_involution, v_element)
from quasi_core.Cochains import complex_cochain, octonion_cochain, quaternion_cochain
from quasi_core.DeformedGroupAlgebra import complex_algebra, kfz3, octonions, quaternions
from quasi_core.Errors import NotInvolution, NotStrong, ZeroEpsilon
from quasi_core.GradedQuasialgebra import tables_equal, verify_quasiassociativity


def test_complex_doubles_to_quaternions():
    F = complex_cochain()
    doubled, F_bar, s_bar = cd_double_cochain(F.group, F, [1, -1], -1)
    assert F_bar == quaternion_cochain()
    assert s_bar == [1, -1, -1, -1]


def test_quaternions_double_to_octonions():
    F = quaternion_cochain()
    _, F_bar, _ = cd_double_cochain(F.group, F, [1, -1, -1, -1], -1)
    assert F_bar == octonion_cochain()


def test_algebra_level_double_matches():
    C = complex_algebra()
    D = cd_double_algebra(C, Involution.conjugation(C), -1)
    assert D.name == "CD(C)"
    assert D.basis == ["e0", "e1", "ve0", "ve1"]
    assert tables_equal(D, quaternions())
    v = v_element(D, C.one)
    assert v * v == -1


@pytest.mark.parametrize("F, s", [
    (complex_cochain(), [1, -1]),
    (quaternion_cochain(), [1, -1, -1, -1]),
])
@pytest.mark.parametrize("epsilon", [-1, 1, 2])
def test_cochain_and_algebra_doubles_agree(F, s, epsilon):
    assert doubling_cross_check(F.group, F, s, epsilon).passed


def test_doubled_alpha_relations():
    assert alpha_doubling_check(quaternions(), [1, -1, -1, -1], -1).passed


def test_double_of_octonions_is_still_quasiassociative():
    O = octonions()
    D = cd_double_algebra(O, Involution.conjugation(O), -1)
    assert D.dim == 16
    assert verify_quasiassociativity(D).passed


def test_doubled_involution_is_strong():
    H = quaternions()
    D = cd_double_algebra(H, Involution.conjugation(H), -1)
    s_bar = doubled_involution(D)
    assert is_strong_involution(D, s_bar).passed


def test_conjugation_on_kfz3_is_not_an_involution():
    A = kfz3()
    with pytest.raises(NotInvolution):
        Involution.conjugation(A)
    # commutative, so the identity reverses products
    Involution.identity(A)


def test_identity_on_complex_is_not_strong():
    C = complex_algebra()
    report = is_strong_involution(C, Involution.identity(C))
    assert not report.passed
    assert ("trace", "e1") in report.witnesses
    F = complex_cochain()
    with pytest.raises(NotStrong):
        cd_double_cochain(F.group, F, [1, 1], -1)


def test_zero_epsilon():
    F = complex_cochain()
    with pytest.raises(ZeroEpsilon):
        cd_double_cochain(F.group, F, [1, -1], 0)
    C = complex_algebra()
    with pytest.raises(ZeroEpsilon):
        cd_double_algebra(C, Involution.conjugation(C), 0)
