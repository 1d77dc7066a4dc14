import logging
import random
from fractions import Fraction

import numpy as np

from .CheckReport import CheckReport
from .Cochains import Cocycle3, trivial_cocycle, verify_cocycle
from .Errors import (AlgebraMismatch, GradingViolation, InvalidParameter, NoIdentity,
                     NotAUnit, NotHomogeneous, NotQuasialgebra)
from .LinearAlgebra import EchelonBasis, rank, solve, stack_rows, zero_vector
from .QuasialgConfig import DEFAULT_CONFIG
from .Scalar import Scalar, as_scalar, root_of_unity
from .Sweeps import run_sweep

logger = logging.getLogger(__name__)


class Element:
    """Sparse vector of a GradedQuasialgebra; zero coefficients are never stored."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs=None):
        self.algebra = algebra
        self.coeffs = {i: c for i, c in (coeffs or {}).items() if c}

    def _same(self, other):
        if not isinstance(other, Element):
            return False
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("elements of different algebras")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out[i] + c if i in out else c
        return Element(self.algebra, out)

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Element(self.algebra, {i: -c for i, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        if isinstance(other, (Scalar, int, Fraction)):
            s = as_scalar(other, self.algebra.conductor)
            return Element(self.algebra, {i: c * s for i, c in self.coeffs.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        s = as_scalar(other, self.algebra.conductor)
        return self * s.inverse()

    def __eq__(self, other):
        if isinstance(other, Element):
            return other.algebra is self.algebra and other.coeffs == self.coeffs
        if isinstance(other, (int, Fraction, Scalar)):
            return self == self.algebra.one * other
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def support_degrees(self):
        return sorted({self.algebra.degrees[i] for i in self.coeffs})

    def is_homogeneous(self):
        return len(self.support_degrees()) <= 1

    def degree(self):
        """Degree index of a nonzero homogeneous element."""
        degs = self.support_degrees()
        if len(degs) != 1:
            raise NotHomogeneous(f"{self} is not a nonzero homogeneous element")
        return degs[0]

    def homogeneous_components(self):
        parts = {}
        for i, c in self.coeffs.items():
            parts.setdefault(self.algebra.degrees[i], {})[i] = c
        return {g: Element(self.algebra, part) for g, part in sorted(parts.items())}

    def coefficient(self, name):
        return self.coeffs.get(self.algebra.index(name), Scalar.zero(self.algebra.conductor))

    def to_vector(self, indices=None):
        indices = range(self.algebra.dim) if indices is None else indices
        zero = Scalar.zero(self.algebra.conductor)
        return [self.coeffs.get(i, zero) for i in indices]

    def __str__(self):
        if not self.coeffs:
            return "0"
        names = self.algebra.basis
        terms = []
        for i in sorted(self.coeffs):
            c = self.coeffs[i]
            if c == 1:
                terms.append(names[i])
            elif c == -1:
                terms.append(f"-{names[i]}")
            elif c.is_rational():
                terms.append(f"{c}*{names[i]}")
            else:
                terms.append(f"({c})*{names[i]}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Element({self})"


class GradedQuasialgebra:
    """Finite-dimensional G-graded algebra with structure constants and a declared cocycle.

    structure maps (i, j) to {k: Scalar}: b_i * b_j = sum_k c_k b_k.
    Degrees are group element indices.
    """

    def __init__(self, group, basis, degrees, structure, cocycle=None, one=None, name="A",
                 conductor=None):
        self.group = group
        self.basis = list(basis)
        if len(set(self.basis)) != len(self.basis):
            raise InvalidParameter("basis names must be distinct")
        self.name = name
        self.conductor = conductor or (cocycle.conductor if cocycle is not None else 1)
        self.cocycle = cocycle if cocycle is not None else trivial_cocycle(group, self.conductor)
        if self.cocycle.group != group:
            raise InvalidParameter("cocycle is defined on another group")
        self.degrees = [group.index_of(d) for d in degrees]
        if len(self.degrees) != len(self.basis):
            raise InvalidParameter("one degree per basis element is required")
        self._index = {b: i for i, b in enumerate(self.basis)}
        self.structure = {}
        for (i, j), combo in structure.items():
            clean = {k: as_scalar(c, self.conductor) for k, c in combo.items()}
            clean = {k: c for k, c in clean.items() if c}
            if clean:
                self.structure[(i, j)] = clean
        self._check_grading()
        self.one = self._resolve_one(one)

    # --------------------------
    # BASICS
    # --------------------------
    @property
    def dim(self):
        return len(self.basis)

    def index(self, name):
        if isinstance(name, int):
            return name
        try:
            return self._index[name]
        except KeyError:
            raise InvalidParameter(f"no basis element named {name!r}") from None

    def basis_element(self, name):
        return Element(self, {self.index(name): Scalar.one(self.conductor)})

    def basis_elements(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def element(self, mapping):
        return Element(self, {self.index(k): as_scalar(v, self.conductor) for k, v in mapping.items()})

    def zero(self):
        return Element(self, {})

    def scalar(self, value):
        return self.one * as_scalar(value, self.conductor)

    def from_vector(self, vector, indices=None):
        indices = range(self.dim) if indices is None else indices
        return Element(self, {i: v for i, v in zip(indices, vector)})

    def component(self, g):
        """Basis indices of the homogeneous component of degree g."""
        g = self.group.index_of(g)
        return [i for i, d in enumerate(self.degrees) if d == g]

    def component_dims(self):
        return [len(self.component(g)) for g in range(self.group.order)]

    def _check_grading(self):
        mult = self.group.mult
        for (i, j), combo in self.structure.items():
            target = mult[self.degrees[i]][self.degrees[j]]
            for k in combo:
                if self.degrees[k] != target:
                    raise GradingViolation("product leaves its homogeneous component",
                                           witness=(self.basis[i], self.basis[j], self.basis[k]))

    def _resolve_one(self, one):
        if one is not None:
            candidate = one if isinstance(one, Element) else self.element(one)
            candidate = Element(self, candidate.coeffs)
            if not self._is_identity(candidate):
                raise NoIdentity(f"{candidate} is not a two-sided identity")
            return candidate
        # solve for the identity inside the degree-e component
        comp = self.component(self.group.identity)
        rows, rhs = [], []
        for j in range(self.dim):
            for side in ("left", "right"):
                for k in range(self.dim):
                    row = []
                    for i in comp:
                        pair = (i, j) if side == "left" else (j, i)
                        row.append(self.structure.get(pair, {}).get(k, Scalar.zero(self.conductor)))
                    rows.append(row)
                    rhs.append(Scalar.one(self.conductor) if k == j else Scalar.zero(self.conductor))
        x, _ = solve(stack_rows(rows, len(comp), self.conductor),
                     np.array(rhs, dtype=object), self.conductor)
        if x is None or not comp:
            raise NoIdentity(f"{self.name} has no identity element")
        return Element(self, dict(zip(comp, x)))

    def _is_identity(self, candidate):
        for b in self.basis_elements():
            if self.multiply(candidate, b) != b or self.multiply(b, candidate) != b:
                return False
        return True

    # --------------------------
    # MULTIPLICATION
    # --------------------------
    def multiply(self, a, b):
        if a.algebra is not self or b.algebra is not self:
            raise AlgebraMismatch("multiply needs two elements of this algebra")
        out = {}
        for i, ai in a.coeffs.items():
            for j, bj in b.coeffs.items():
                combo = self.structure.get((i, j))
                if not combo:
                    continue
                coeff = ai * bj
                for k, c in combo.items():
                    term = coeff * c
                    out[k] = out[k] + term if k in out else term
        return Element(self, out)

    def product_of_basis(self, i, j):
        return Element(self, dict(self.structure.get((i, j), {})))

    def left_multiplication_matrix(self, x):
        M = stack_rows([[Scalar.zero(self.conductor)] * self.dim for _ in range(self.dim)],
                       self.dim, self.conductor)
        for j in range(self.dim):
            col = self.multiply(x, self.basis_element(j))
            for k, c in col.coeffs.items():
                M[k, j] = c
        return M

    def right_multiplication_matrix(self, x):
        M = stack_rows([[Scalar.zero(self.conductor)] * self.dim for _ in range(self.dim)],
                       self.dim, self.conductor)
        for j in range(self.dim):
            col = self.multiply(self.basis_element(j), x)
            for k, c in col.coeffs.items():
                M[k, j] = c
        return M

    def scalar_part(self, x):
        """c when x = c * 1, else None."""
        if x.is_zero():
            return Scalar.zero(self.conductor)
        k0 = min(self.one.coeffs)
        c = x.coeffs.get(k0, Scalar.zero(self.conductor)) / self.one.coeffs[k0]
        return c if self.one * c == x else None

    def is_associative(self):
        return verify_quasiassociativity(self, trivial_cocycle(self.group, self.conductor)).passed

    def is_commutative(self):
        return all(self.structure.get((i, j), {}) == self.structure.get((j, i), {})
                   for i in range(self.dim) for j in range(i + 1, self.dim))

    # --------------------------
    # COMPARISON
    # --------------------------
    def same_table(self, other, mapping=None):
        """Structure constants agree once basis i of self is identified with mapping[i] of other."""
        if self.dim != other.dim:
            return False
        mapping = list(range(self.dim)) if mapping is None else list(mapping)
        for i in range(self.dim):
            for j in range(self.dim):
                mine = {mapping[k]: c for k, c in self.structure.get((i, j), {}).items()}
                theirs = other.structure.get((mapping[i], mapping[j]), {})
                if mine != theirs:
                    return False
        return True

    def degree_mapping(self, other):
        """Basis identification by degree; needs 1-dimensional components on both sides."""
        if self.group != other.group:
            return None
        if any(d != 1 for d in self.component_dims()) or any(d != 1 for d in other.component_dims()):
            return None
        where = {d: i for i, d in enumerate(other.degrees)}
        return [where[d] for d in self.degrees]

    def __repr__(self):
        return f"GradedQuasialgebra({self.name}, dim={self.dim}, group={self.group!r})"


# --------------------------
# VERIFICATION
# --------------------------
def _triple_chunks(n):
    return [[(i, j, k) for j in range(n) for k in range(n)] for i in range(n)]


def verify_quasiassociativity(A, cocycle=None, jobs=1):
    """(x_g x_h) x_k = phi(g,h,k) x_g (x_h x_k) on every basis triple."""
    phi = (cocycle or A.cocycle).values
    deg = A.degrees
    basis = A.basis_elements()
    products = {}

    def prod(i, j):
        key = (i, j)
        if key not in products:
            products[key] = A.product_of_basis(i, j)
        return products[key]

    def check(chunk):
        bad = []
        for i, j, k in chunk:
            left = A.multiply(prod(i, j), basis[k])
            right = A.multiply(basis[i], prod(j, k)) * phi[deg[i]][deg[j]][deg[k]]
            if left != right:
                bad.append((A.basis[i], A.basis[j], A.basis[k], str(left), str(right)))
        return bad

    # warm the product cache before threads share it
    for i in range(A.dim):
        for j in range(A.dim):
            prod(i, j)
    witnesses = run_sweep(check, _triple_chunks(A.dim), jobs)
    return CheckReport("quasiassociativity", not witnesses, A.dim ** 3, witnesses)


def infer_cocycle(group, basis_size, degrees, structure, conductor=1):
    """Recover phi from structure constants; raises when no cocycle fits."""
    A = GradedQuasialgebra.__new__(GradedQuasialgebra)
    A.group, A.conductor = group, conductor
    A.basis = [f"b{i}" for i in range(basis_size)]
    A.degrees = list(degrees)
    A.structure = structure
    n = group.order
    found = {}
    for i in range(basis_size):
        for j in range(basis_size):
            for k in range(basis_size):
                left = A.multiply(A.product_of_basis(i, j), Element(A, {k: Scalar.one(conductor)}))
                right = A.multiply(Element(A, {i: Scalar.one(conductor)}), A.product_of_basis(j, k))
                key = (degrees[i], degrees[j], degrees[k])
                if right.is_zero():
                    if not left.is_zero():
                        raise NotQuasialgebra("associator does not factor through a scalar",
                                              witness=(i, j, k))
                    continue
                pivot = min(right.coeffs)
                ratio = left.coeffs.get(pivot, Scalar.zero(conductor)) / right.coeffs[pivot]
                if right * ratio != left or not ratio:
                    raise NotQuasialgebra("associator is not a scalar multiple", witness=(i, j, k))
                if found.setdefault(key, ratio) != ratio:
                    raise NotQuasialgebra("associator ratio depends on more than the degrees",
                                          witness=(i, j, k))
    one = Scalar.one(conductor)
    table = [[[found.get((g, h, k), one) for k in range(n)] for h in range(n)] for g in range(n)]
    report = verify_cocycle(group, table, conductor)
    if not report.passed:
        raise NotQuasialgebra("inferred associator table is not a cocycle",
                              witness=report.witnesses[0])
    return report.value


# --------------------------
# GRADED UNITS
# --------------------------
def _require_homogeneous(u):
    if u.is_zero() or not u.is_homogeneous():
        raise NotHomogeneous(f"{u} is not a nonzero homogeneous element")
    return u.degree()


def _inverse(u, side):
    A = u.algebra
    g = _require_homogeneous(u)
    comp = A.component(A.group.inverse_index(g))
    zero = Scalar.zero(A.conductor)
    columns = []
    for i in comp:
        b = A.basis_element(i)
        prod = A.multiply(b, u) if side == "left" else A.multiply(u, b)
        columns.append(prod.to_vector())
    rows = [[columns[c][r] for c in range(len(comp))] for r in range(A.dim)]
    target = np.array(A.one.to_vector(), dtype=object)
    x, null = solve(stack_rows(rows, len(comp), A.conductor), target, A.conductor)
    if x is None or not comp:
        raise NotAUnit(f"{u} has no {side} inverse")
    # a unit's inverses are unique; a free direction means u is not a unit
    if null:
        raise NotAUnit(f"{side} inverse of {u} is not unique")
    return Element(A, {i: c for i, c in zip(comp, x) if c != zero})


def left_inverse(u):
    return _inverse(u, "left")


def right_inverse(u):
    return _inverse(u, "right")


def is_unit(u):
    if u.is_zero():
        return False
    _require_homogeneous(u)
    try:
        left_inverse(u)
        right_inverse(u)
    except NotAUnit:
        return False
    return True


def is_strongly_graded(A):
    """1 lies in A_g A_{g^-1} for every g."""
    target = A.one.to_vector()
    failing = []
    for g in range(A.group.order):
        span = EchelonBasis(A.dim, A.conductor)
        for i in A.component(g):
            for j in A.component(A.group.inverse_index(g)):
                span.add(np.array(A.product_of_basis(i, j).to_vector(), dtype=object))
        if not span.contains(np.array(target, dtype=object)):
            failing.append(A.group.labels[g])
    return CheckReport("strongly_graded", not failing, A.group.order, failing)


def _sample_coefficients(conductor):
    pool = [Scalar(v, conductor) for v in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 3), 3)]
    if conductor > 2:
        z = root_of_unity(conductor, 1)
        pool += [z, -z, z + 1]
    return pool


def random_homogeneous(A, g, rng, conductor=None):
    conductor = conductor or A.conductor
    pool = _sample_coefficients(conductor)
    comp = A.component(g)
    return Element(A, {i: rng.choice(pool) for i in comp if rng.random() < 0.75}) if comp else A.zero()


def find_unit(A, g, seed=0, samples=None):
    """A unit of degree g: basis elements first, then seeded random combinations."""
    samples = DEFAULT_CONFIG.sample_count if samples is None else samples
    comp = A.component(g)
    for i in comp:
        candidate = A.basis_element(i)
        if is_unit(candidate):
            return candidate
    rng = random.Random(f"{seed}:{g}")
    for _ in range(samples):
        candidate = random_homogeneous(A, g, rng)
        if candidate and is_unit(candidate):
            return candidate
    return None


def is_quasicrossed_product(A, seed=0, samples=None):
    """Report with status yes / no_found / not_applicable and the unit family when found."""
    units = []
    for g in range(A.group.order):
        comp = A.component(g)
        if not comp:
            return CheckReport("quasicrossed_product", False, g + 1, [A.group.labels[g]],
                               {"status": "not_applicable", "reason": "empty component"})
        if g == A.group.identity:
            units.append(A.one)
            continue
        unit = find_unit(A, g, seed, samples)
        if unit is None:
            exact = len(comp) == 1
            logger.debug("no unit found in degree %s (exact=%s)", A.group.labels[g], exact)
            return CheckReport("quasicrossed_product", False, g + 1, [A.group.labels[g]],
                               {"status": "no_found", "exact": exact})
        units.append(unit)
    report = CheckReport("quasicrossed_product", True, A.group.order, [],
                         {"status": "yes", "units": [str(u) for u in units]})
    report.value = units
    return report


def mu(u, x):
    """(u x) u_R^{-1}, an automorphism of A_e."""
    A = u.algebra
    _require_homogeneous(u)
    if not x.is_zero() and (not x.is_homogeneous() or x.degree() != A.group.identity):
        raise NotHomogeneous(f"{x} does not lie in the degree-e component")
    return A.multiply(A.multiply(u, x), right_inverse(u))


def mu_matrix(u):
    """Matrix of mu(u) on the A_e basis."""
    A = u.algebra
    comp = A.component(A.group.identity)
    inv = right_inverse(u)
    cols = [A.multiply(A.multiply(u, A.basis_element(i)), inv).to_vector(comp) for i in comp]
    return stack_rows([[cols[c][r] for c in range(len(comp))] for r in range(len(comp))],
                      len(comp), A.conductor)


def right_multiplication_rank(u):
    """Rank of x -> x u restricted to A_e."""
    A = u.algebra
    g = _require_homogeneous(u)
    comp_e = A.component(A.group.identity)
    comp_g = A.component(g)
    cols = [A.multiply(A.basis_element(i), u).to_vector(comp_g) for i in comp_e]
    M = stack_rows([[cols[c][r] for c in range(len(comp_e))] for r in range(len(comp_g))],
                   len(comp_e), A.conductor)
    return rank(M)


def as_vector(x):
    return np.array(x.to_vector(), dtype=object)


def zero_like(A):
    return zero_vector(A.dim, A.conductor)


def tables_equal(A, B, mapping=None):
    """Structure tables agree under a basis identification (default: by degree, else by position)."""
    if mapping is None:
        mapping = A.degree_mapping(B)
    return A.same_table(B, mapping)


def structure_matrix(A):
    """dim x dim grid of product strings, rows and columns in basis order."""
    return [[str(A.product_of_basis(i, j)) for j in range(A.dim)] for i in range(A.dim)]
