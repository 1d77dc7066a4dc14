import logging

from .Cochains import (Cochain2, clifford_cochain, coboundary_of, complex_cochain,
                       octonion_cochain, quaternion_cochain, trivial_cochain)
from .Errors import GroupMismatch
from .FiniteGroup import cyclic
from .GradedQuasialgebra import GradedQuasialgebra

logger = logging.getLogger(__name__)


class DeformedGroupAlgebra(GradedQuasialgebra):
    """K_F G: basis G, g . h = F(g, h) gh, cocycle the coboundary of F."""

    def __init__(self, group, cochain, names=None, name="K_F G"):
        if cochain.group != group:
            raise GroupMismatch("cochain is defined on another group")
        self.cochain = cochain
        n = group.order
        names = list(names) if names else [f"e{lab}" for lab in group.labels]
        structure = {(g, h): {group.mult[g][h]: cochain.values[g][h]}
                     for g in range(n) for h in range(n)}
        super().__init__(group, names, list(range(n)), structure,
                         cocycle=coboundary_of(cochain), one={names[group.identity]: 1},
                         name=name, conductor=cochain.conductor)
        logger.debug("built %s of dimension %d", name, n)

    def basis_of(self, g):
        return self.basis_element(self.group.index_of(g))


def build(group, cochain, names=None, name="K_F G"):
    return DeformedGroupAlgebra(group, cochain, names, name)


def group_algebra(group, conductor=1, names=None):
    return DeformedGroupAlgebra(group, trivial_cochain(group, conductor), names, name="KG")


def complex_algebra(conductor=1):
    F = complex_cochain(conductor)
    return DeformedGroupAlgebra(F.group, F, name="C")


def quaternions(conductor=1):
    F = quaternion_cochain(conductor)
    return DeformedGroupAlgebra(F.group, F, name="H")


def octonions(conductor=1):
    F = octonion_cochain(conductor)
    return DeformedGroupAlgebra(F.group, F, name="O")


def clifford(n, conductor=1):
    F = clifford_cochain(n, conductor)
    return DeformedGroupAlgebra(F.group, F, name=f"Cl({n})")


def kfz3(conductor=1):
    """Commutative nonassociative Z3 algebra: e1 e1 = -e2, all other F values 1."""
    group = cyclic(3)
    values = {(1, 1): -1}
    return DeformedGroupAlgebra(group, Cochain2(group, values, conductor),
                                names=["e", "e1", "e2"], name="K_F Z3")


def as_system(A):
    """(G, K, coboundary F, id, F) for a deformed group algebra."""
    from .QuasicrossedSystem import QuasicrossedSystem, scalar_algebra
    from .LinearAlgebra import identity_matrix

    B = scalar_algebra(A.conductor)
    n = A.group.order
    sigma = [identity_matrix(1, A.conductor) for _ in range(n)]
    alpha = [[B.scalar(A.cochain.values[g][h]) for h in range(n)] for g in range(n)]
    return QuasicrossedSystem(A.group, B, A.cocycle, sigma, alpha)
