import pytest

from quasi_core.Cochains import z3_cocycle
from quasi_core.DeformedGroupAlgebra import (as_system, complex_algebra, group_algebra, kfz3,
                                             octonions, quaternions)
from quasi_core.Errors import NotAssociative
from quasi_core.FiniteGroup import cyclic
from quasi_core.MatrixConstructions import deformed_matrices
from quasi_core.QuasicrossedSystem import (component_algebra, dual_numbers, extract_system,
                                           matrix_algebra)
from quasi_core.Scalar import root_of_unity
from quasi_core.StructureAnalyzer import (Subspace, center, centralizer, ideal_generated_by,
                                          is_central, is_central_simple, is_semisimple_associative,
                                          is_simple, sigma_faithful)


def _m3():
    return deformed_matrices(3, z3_cocycle(1, 1, root_of_unity(3, 1)))


def test_kfz3_is_simple():
    report = is_simple(kfz3())
    assert report.status == "simple"
    assert report.details["exact"]


def test_group_algebra_of_z2():
    A = group_algebra(cyclic(2))
    assert is_simple(A).status == "simple"
    ungraded = is_simple(A, graded=False)
    assert ungraded.status == "not_simple"
    assert ungraded.details["ideal_dim"] == 1
    I = ideal_generated_by(A, A.basis_element("e0") + A.basis_element("e1"))
    assert I.dim == 1
    assert not I.is_graded()
    assert not is_central(A)
    assert center(A).is_whole()


@pytest.mark.parametrize("build", [quaternions, octonions], ids=["H", "O"])
def test_central_simple(build):
    report = is_central_simple(build())
    assert report.status == "yes"
    assert report.details["central"]


def test_complex_numbers_are_not_central():
    report = is_central_simple(complex_algebra())
    assert report.status == "no"
    assert "center larger than K1" in report.witnesses


def test_centralizer_of_a_quaternion_unit():
    H = quaternions()
    i = H.basis_element("e(1,0)")
    C = centralizer(H, [i])
    assert C.dim == 2
    assert C.contains(i) and C.contains(H.one)
    assert str(Subspace(H, [H.one])) == "span{e(0,0)}"


def test_deformed_matrices_have_no_small_ideals():
    # no proper ideal among the sampled generators; components are too big to be exhaustive
    assert is_simple(_m3()).status == "undecided"
    assert is_central(_m3())


def test_semisimple_identity_components():
    assert is_semisimple_associative(component_algebra(_m3())).passed
    assert is_semisimple_associative(matrix_algebra(2)).passed
    report = is_semisimple_associative(dual_numbers())
    assert not report.passed
    assert report.details["radical_dim"] == 1


def test_trace_form_needs_associativity():
    with pytest.raises(NotAssociative):
        is_semisimple_associative(octonions())


def test_sigma_faithful():
    assert sigma_faithful(extract_system(_m3())).passed
    report = sigma_faithful(as_system(octonions()))
    assert not report.passed
    assert len(report.witnesses) == 7


@pytest.mark.parametrize("build", [complex_algebra, quaternions, octonions, kfz3, _m3,
                                   lambda: group_algebra(cyclic(3))],
                         ids=["C", "H", "O", "KFZ3", "M3", "KZ3"])
def test_simple_algebras_have_semisimple_identity_component(build):
    A = build()
    if is_simple(A).passed:
        assert is_semisimple_associative(component_algebra(A)).passed
