import logging

import numpy as np

from .CheckReport import CheckReport
from .Cochains import Cochain2
from .DeformedGroupAlgebra import DeformedGroupAlgebra
from .Errors import InvalidParameter, NotAbelian, NotInvolution, NotStrong, ZeroEpsilon
from .FiniteGroup import cyclic, direct_product
from .GradedQuasialgebra import GradedQuasialgebra, infer_cocycle, tables_equal
from .LinearAlgebra import identity_matrix, mat_mul, mat_vec, matrices_equal, zeros
from .QuasicrossedSystem import extract_system
from .Scalar import as_scalar

logger = logging.getLogger(__name__)


class Involution:
    """Linear map on an algebra, stored as a matrix whose columns are basis images."""

    def __init__(self, algebra, matrix, validate=True):
        self.algebra = algebra
        self.matrix = matrix
        if validate:
            self.validate()

    @classmethod
    def from_diagonal(cls, algebra, values, validate=True):
        """b_i -> s_i b_i; values in basis order, or a {label: value} map on degrees."""
        d, m = algebra.dim, algebra.conductor
        if isinstance(values, dict):
            by_degree = {algebra.group.index_of(k): v for k, v in values.items()}
            values = [by_degree.get(algebra.degrees[i], 1) for i in range(d)]
        if len(values) != d:
            raise InvalidParameter(f"diagonal involution needs {d} values, got {len(values)}")
        M = zeros(d, d, m)
        for i, v in enumerate(values):
            M[i, i] = as_scalar(v, m)
        return cls(algebra, M, validate)

    @classmethod
    def identity(cls, algebra, validate=True):
        return cls(algebra, identity_matrix(algebra.dim, algebra.conductor), validate)

    @classmethod
    def conjugation(cls, algebra, validate=True):
        """+1 on the degree-e component, -1 elsewhere."""
        e = algebra.group.identity
        return cls.from_diagonal(algebra, [1 if d == e else -1 for d in algebra.degrees], validate)

    def diagonal(self):
        d = self.algebra.dim
        if any(self.matrix[i, j] for i in range(d) for j in range(d) if i != j):
            return None
        return [self.matrix[i, i] for i in range(d)]

    def __call__(self, x):
        A = self.algebra
        return A.from_vector(mat_vec(self.matrix, np.array(x.to_vector(), dtype=object), A.conductor))

    def validate(self):
        A = self.algebra
        square = mat_mul(self.matrix, self.matrix, A.conductor)
        if not matrices_equal(square, identity_matrix(A.dim, A.conductor)):
            raise NotInvolution("map does not square to the identity")
        basis = A.basis_elements()
        images = [self(b) for b in basis]
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                if self(a * b) != images[j] * images[i]:
                    raise NotInvolution("map is not an antiautomorphism",
                                        witness=(A.basis[i], A.basis[j]))


def is_strong_involution(A, involution):
    """a + s(a) and a s(a) in K1 for every a, via basis terms and polarized pairs."""
    if involution.algebra is not A:
        raise InvalidParameter("involution acts on another algebra")
    basis = A.basis_elements()
    images = [involution(b) for b in basis]
    witnesses = []
    for i, a in enumerate(basis):
        if A.scalar_part(a + images[i]) is None:
            witnesses.append(("trace", A.basis[i]))
    for i, a in enumerate(basis):
        for j in range(i, A.dim):
            polar = a * images[j] + basis[j] * images[i]
            if A.scalar_part(polar) is None:
                witnesses.append(("norm", A.basis[i], A.basis[j]))
    checked = A.dim + A.dim * (A.dim + 1) // 2
    return CheckReport("strong_involution", not witnesses, checked, witnesses)


# --------------------------
# ALGEBRA LEVEL
# --------------------------
def cd_double_algebra(A, involution, epsilon, name=None):
    """A + vA with (a + vb)(c + vd) = (ac + eps d s(b)) + v(s(a) d + c b), graded by G x Z2."""
    eps = as_scalar(epsilon, A.conductor)
    if not eps:
        raise ZeroEpsilon("epsilon must be nonzero")
    if not is_strong_involution(A, involution).passed:
        logger.warning("doubling %s with an involution that is not strong", A.name)
    d = A.dim
    group = direct_product(A.group, cyclic(2))
    names = list(A.basis) + [f"v{b}" for b in A.basis]
    degrees = [A.degrees[i] * 2 for i in range(d)] + [A.degrees[i] * 2 + 1 for i in range(d)]
    basis = A.basis_elements()
    images = [involution(b) for b in basis]
    structure = {}

    def put(i, j, element, shift):
        if element.coeffs:
            structure[(i, j)] = {k + shift: c for k, c in element.coeffs.items()}

    for i in range(d):
        for j in range(d):
            put(i, j, basis[i] * basis[j], 0)
            put(i, d + j, images[i] * basis[j], d)
            put(d + i, j, basis[j] * basis[i], d)
            put(d + i, d + j, (basis[j] * images[i]) * eps, 0)
    cocycle = infer_cocycle(group, 2 * d, degrees, structure, A.conductor)
    one = {names[k]: c for k, c in A.one.coeffs.items()}
    D = GradedQuasialgebra(group, names, degrees, structure, cocycle=cocycle, one=one,
                           name=name or f"CD({A.name})", conductor=A.conductor)
    D.parent, D.parent_involution, D.epsilon = A, involution, eps
    return D


def doubled_involution(D, validate=True):
    """s(a) - vb on a doubled algebra."""
    A, inv = D.parent, D.parent_involution
    d = A.dim
    M = zeros(2 * d, 2 * d, D.conductor)
    for i in range(d):
        for j in range(d):
            M[i, j] = inv.matrix[i, j]
        M[d + i, d + i] = as_scalar(-1, D.conductor)
    return Involution(D, M, validate)


def v_element(D, x):
    """v x for x in the parent algebra."""
    d = D.parent.dim
    return D.from_vector(x.to_vector(), range(d, 2 * d))


# --------------------------
# COCHAIN LEVEL
# --------------------------
def _diagonal_values(group, s, conductor):
    if callable(s):
        values = [s(g) for g in range(group.order)]
    elif isinstance(s, dict):
        resolved = {group.index_of(k): v for k, v in s.items()}
        values = [resolved.get(g, 1) for g in range(group.order)]
    else:
        values = list(s)
    if len(values) != group.order:
        raise InvalidParameter("s needs one value per group element")
    values = [as_scalar(v, conductor) for v in values]
    if values[group.identity] != 1:
        raise InvalidParameter("s(e) must be 1")
    return values


def cd_double_cochain(group, F, s, epsilon):
    """(G x Z2, F-bar, s-bar) for a strong diagonal involution s on K_F G."""
    if not group.is_abelian():
        raise NotAbelian("cochain-level doubling needs an abelian group")
    m = F.conductor
    eps = as_scalar(epsilon, m)
    if not eps:
        raise ZeroEpsilon("epsilon must be nonzero")
    s_values = _diagonal_values(group, s, m)
    A = DeformedGroupAlgebra(group, F)
    report = is_strong_involution(A, Involution.from_diagonal(A, s_values))
    if not report.passed:
        raise NotStrong("s does not define a strong involution", witness=report.witnesses[0])
    doubled = direct_product(group, cyclic(2))
    n, f = group.order, F.values

    def value(a, b):
        x, vx = divmod(a, 2)
        y, vy = divmod(b, 2)
        if not vx and not vy:
            return f[x][y]
        if not vx:
            return s_values[x] * f[x][y]
        if not vy:
            return f[y][x]
        return eps * s_values[x] * f[y][x]

    F_bar = Cochain2(doubled, value, m)
    s_bar = [s_values[g // 2] if g % 2 == 0 else as_scalar(-1, m) for g in range(2 * n)]
    return doubled, F_bar, s_bar


def doubling_cross_check(group, F, s, epsilon):
    """build(G x Z2, F-bar) against the algebra-level double of build(G, F)."""
    doubled, F_bar, _ = cd_double_cochain(group, F, s, epsilon)
    A = DeformedGroupAlgebra(group, F)
    D = cd_double_algebra(A, Involution.from_diagonal(A, _diagonal_values(group, s, F.conductor)),
                          epsilon)
    K = DeformedGroupAlgebra(doubled, F_bar)
    same = tables_equal(D, K)
    return CheckReport("doubling_cross_check", same, D.dim ** 2,
                       [] if same else [("tables_differ", D.name, K.name)])


def alpha_doubling_check(A, s, epsilon):
    """Compare the extracted alpha of the doubled algebra with the four doubling relations."""
    m = A.conductor
    eps = as_scalar(epsilon, m)
    s_values = _diagonal_values(A.group, s, m)
    D = cd_double_algebra(A, Involution.from_diagonal(A, s_values), eps)
    units = [D.basis_element(D.component(g)[0]) for g in range(D.group.order)]
    bar = extract_system(D, units=units)
    base = extract_system(A, units=[A.basis_element(A.component(g)[0])
                                    for g in range(A.group.order)])
    n, lab = A.group.order, A.group.labels

    def alpha(sys, g, h):
        return sys.base.scalar_part(sys.alpha[g][h])

    witnesses = []
    for x in range(n):
        for y in range(n):
            expected = {
                (0, 0): alpha(base, x, y),
                (0, 1): s_values[x] * alpha(base, x, y),
                (1, 0): alpha(base, y, x),
                (1, 1): eps * s_values[x] * alpha(base, y, x),
            }
            for (fx, fy), want in expected.items():
                got = alpha(bar, 2 * x + fx, 2 * y + fy)
                if got != want:
                    witnesses.append((("v" if fx else "") + lab[x], ("v" if fy else "") + lab[y],
                                      str(got), str(want)))
    return CheckReport("alpha_doubling", not witnesses, 4 * n * n, witnesses)
