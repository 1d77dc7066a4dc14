import pytest

from quasi_core.Cochains import (Cochain2, Cocycle3, antiassociative_cocycle, clifford_cochain,
                                 coboundary_of, cochain_from_function, cocycle_identities_check,
                                 complex_cochain, octonion_cochain, quaternion_cochain,
                                 trivial_cochain, verify_cocycle, z3_cocycle, z3_cocycle_table)
from quasi_core.Errors import InvalidParameter, NotNormalized, ZeroValue
from quasi_core.FiniteGroup import FiniteGroup, cyclic
from quasi_core.Scalar import root_of_unity


def test_octonion_coboundary_is_a_cocycle():
    phi = coboundary_of(octonion_cochain())
    report = verify_cocycle(phi.group, phi)
    assert report.passed
    assert report.checked == 4096
    assert report.details["exhaustive"]


def test_octonion_cocycle_is_not_trivial():
    phi = coboundary_of(octonion_cochain())
    assert not phi.is_trivial()
    assert all(v in (1, -1) for plane in phi.values for row in plane for v in row)


@pytest.mark.parametrize("F", [complex_cochain(), quaternion_cochain(), clifford_cochain(3)])
def test_associative_cochains_have_trivial_coboundary(F):
    assert coboundary_of(F).is_trivial()


def test_trivial_cochain_gives_trivial_cocycle():
    assert coboundary_of(trivial_cochain(cyclic(4))).is_trivial()


def test_quaternion_signs():
    F = quaternion_cochain()
    for g in ["(1,0)", "(0,1)", "(1,1)"]:
        assert F(g, g) == -1
    assert F("(1,0)", "(0,1)") == -1
    assert F("(0,1)", "(1,0)") == 1


def test_z3_family_member_verifies():
    w = root_of_unity(3, 1)
    phi = z3_cocycle(1, 1, w)
    assert verify_cocycle(phi.group, phi).passed
    assert phi(1, 1, 1) == 1
    assert phi(1, 2, 2) == w


def test_z3_omega_must_be_a_cube_root():
    with pytest.raises(InvalidParameter):
        z3_cocycle(1, 1, 2)


def test_z3_table_keeps_unvalidated_values():
    table = z3_cocycle_table(2, 1, 1)
    assert table[(1, 1, 1)] == 2


def test_antiassociative_cocycle():
    phi = antiassociative_cocycle()
    assert phi(1, 1, 1) == -1
    assert phi(1, 1, 0) == 1
    assert verify_cocycle(phi.group, phi).passed


def test_normalization_violation_is_reported():
    G = cyclic(2)
    phi = Cocycle3(G, {("1", "0", "1"): -1})
    report = verify_cocycle(G, phi)
    assert not report.passed
    assert ("normalization", "1", "1") in report.witnesses


def test_pentagon_violation_is_reported():
    G = cyclic(3)
    phi = Cocycle3(G, z3_cocycle_table(1, 1, 2), conductor=3)
    report = verify_cocycle(G, phi)
    assert not report.passed
    assert report.checked == 81
    # phi(2,1,1) phi(1,0,1) phi(1,2,1) = 1/4 against phi(1,2,2) phi(0,1,1) = 2
    assert ("1", "2", "1", "1") in report.witnesses
    assert all(len(w) == 4 for w in report.witnesses)


def test_cochain_validation():
    G = cyclic(2)
    with pytest.raises(ZeroValue):
        Cochain2(G, {("1", "1"): 0})
    with pytest.raises(NotNormalized):
        Cochain2(G, [[1, 2], [1, 1]])


@pytest.mark.parametrize("F", [octonion_cochain(), quaternion_cochain(), clifford_cochain(2)])
def test_derived_cocycle_identities(F):
    assert cocycle_identities_check(coboundary_of(F)).passed


def test_coboundary_of_a_function():
    G = cyclic(2)
    delta = cochain_from_function(G, [1, root_of_unity(4, 1)], conductor=4)
    assert delta(1, 1) == -1
    assert coboundary_of(delta).is_trivial()


def test_large_groups_are_sampled():
    G = FiniteGroup.product(2, 2, 2, 2, 2)
    phi = coboundary_of(clifford_cochain(5))
    report = verify_cocycle(G, phi)
    assert report.passed
    assert not report.details["exhaustive"]
    assert report.checked == 4096
