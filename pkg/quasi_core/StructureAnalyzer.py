import itertools
import logging
import random

import numpy as np

from .CheckReport import CheckReport
from .Cochains import trivial_cocycle
from .Errors import NotAssociative
from .GradedQuasialgebra import random_homogeneous, verify_quasiassociativity
from .LinearAlgebra import EchelonBasis, identity_matrix, matrices_equal, nullspace, stack_rows
from .QuasialgConfig import DEFAULT_CONFIG
from .Scalar import Scalar

logger = logging.getLogger(__name__)


class Subspace:
    """Span of elements of an algebra, kept in reduced echelon form."""

    def __init__(self, algebra, vectors=()):
        self.algebra = algebra
        self._echelon = EchelonBasis(algebra.dim, algebra.conductor)
        for v in vectors:
            self.add(v)

    def add(self, x):
        return self._echelon.add(np.array(x.to_vector(), dtype=object))

    def contains(self, x):
        return self._echelon.contains(np.array(x.to_vector(), dtype=object))

    @property
    def dim(self):
        return self._echelon.dim

    def basis(self):
        return [self.algebra.from_vector(v) for v in self._echelon.vectors()]

    def is_whole(self):
        return self.dim == self.algebra.dim

    def is_graded(self):
        return all(self.contains(part) for x in self.basis()
                   for part in x.homogeneous_components().values())

    def __str__(self):
        return "span{" + ", ".join(str(x) for x in self.basis()) + "}"


def centralizer(A, X):
    """{a : a x = x a for all x in X}."""
    rows = []
    basis = A.basis_elements()
    for x in X:
        cols = [(b * x - x * b).to_vector() for b in basis]
        rows.extend([[cols[c][r] for c in range(A.dim)] for r in range(A.dim)])
    if not rows:
        return Subspace(A, basis)
    M = stack_rows(rows, A.dim, A.conductor)
    return Subspace(A, [A.from_vector(v) for v in nullspace(M, A.conductor)])


def center(A):
    return centralizer(A, A.basis_elements())


def is_central(A):
    C = center(A)
    return C.dim == 1 and C.contains(A.one)


def ideal_generated_by(A, x):
    """Smallest subspace containing x and closed under multiplication by basis elements."""
    I = Subspace(A, [x])
    basis = A.basis_elements()
    frontier = I.basis()
    while frontier:
        new = []
        for y in frontier:
            for b in basis:
                for z in (b * y, y * b):
                    if I.add(z):
                        new.append(z)
        frontier = new
    return I


def _product_nonzero(A):
    return any(A.structure.values())


def _ungraded_candidates(A, rng, samples):
    basis = A.basis_elements()
    for x, y in itertools.combinations(basis, 2):
        yield x + y
        yield x - y
    pool = [Scalar(v, A.conductor) for v in (1, -1, 2, 3)]
    for _ in range(samples):
        yield A.from_vector([rng.choice(pool) if rng.random() < 0.5 else Scalar.zero(A.conductor)
                             for _ in range(A.dim)])


def is_simple(A, graded=True, seed=0, samples=None):
    """Status simple, not_simple (with a witness ideal) or undecided."""
    samples = DEFAULT_CONFIG.sample_count if samples is None else samples
    if not _product_nonzero(A):
        return CheckReport("simple", False, 0, ["A^2 = 0"], {"status": "not_simple"})
    exact = all(d <= 1 for d in A.component_dims())
    candidates = list(A.basis_elements())
    rng = random.Random(seed)
    if not exact:
        candidates += [random_homogeneous(A, g, rng) for g in range(A.group.order)
                       for _ in range(samples)]
    checked = 0
    for x in candidates:
        if x.is_zero():
            continue
        checked += 1
        I = ideal_generated_by(A, x)
        if not I.is_whole():
            return _not_simple(I, checked, graded)
    if not graded:
        exact = False
        for x in _ungraded_candidates(A, rng, samples):
            if x.is_zero():
                continue
            checked += 1
            I = ideal_generated_by(A, x)
            if not I.is_whole():
                return _not_simple(I, checked, graded)
    status = "simple" if exact else "undecided"
    logger.debug("simplicity of %s: %s after %d generators", A.name, status, checked)
    return CheckReport("simple", status == "simple", checked, [],
                       {"status": status, "graded": graded, "exact": exact})


def _not_simple(I, checked, graded):
    return CheckReport("simple", False, checked, [str(I)],
                       {"status": "not_simple", "graded": graded, "ideal_dim": I.dim})


def is_central_simple(A, graded=True, seed=0):
    simple = is_simple(A, graded=graded, seed=seed)
    central = is_central(A)
    if simple.status == "undecided" and central:
        status = "undecided"
    else:
        status = "yes" if simple.passed and central else "no"
    return CheckReport("central_simple", status == "yes", simple.checked,
                       list(simple.witnesses) + ([] if central else ["center larger than K1"]),
                       {"status": status, "simple": simple.status, "central": central})


def trace_form(B):
    """Gram matrix trace(L_x L_y) on the basis."""
    mats = [B.left_multiplication_matrix(b) for b in B.basis_elements()]
    zero = Scalar.zero(B.conductor)
    rows = []
    for X in mats:
        row = []
        for Y in mats:
            acc = zero
            # trace(XY) = sum_ij X_ij Y_ji
            for i in range(B.dim):
                for j in range(B.dim):
                    if X[i, j] and Y[j, i]:
                        acc = acc + X[i, j] * Y[j, i]
            row.append(acc)
        rows.append(row)
    return stack_rows(rows, B.dim, B.conductor)


def is_semisimple_associative(B):
    """Semisimple iff the trace form is nondegenerate (characteristic zero)."""
    report = verify_quasiassociativity(B, trivial_cocycle(B.group, B.conductor))
    if not report.passed:
        raise NotAssociative(f"{B.name} is not associative", witness=report.witnesses[0][:3])
    radical = nullspace(trace_form(B), B.conductor)
    witnesses = [str(B.from_vector(v)) for v in radical]
    return CheckReport("semisimple", not radical, B.dim ** 2, witnesses, {"radical_dim": len(radical)})


def sigma_faithful(system):
    """sigma(g) differs from the identity for every g != e."""
    ident = identity_matrix(system.base.dim, system.conductor)
    trivial = [system.group.labels[g] for g, M in enumerate(system.sigma)
               if g != system.group.identity and matrices_equal(M, ident)]
    return CheckReport("sigma_faithful", not trivial, system.group.order - 1, trivial)
