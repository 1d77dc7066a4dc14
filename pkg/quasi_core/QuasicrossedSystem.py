import itertools
import logging

import numpy as np

from .CheckReport import CheckReport
from .Cochains import trivial_cocycle
from .Errors import (IncompatibleBase, IncompatibleSystems, InvalidParameter, NonAutomorphismSigma,
                     NonUnitAlpha, NotAssociative, NotAUnit, NotQuasicrossed)
from .FiniteGroup import trivial_group
from .GradedQuasialgebra import (Element, GradedQuasialgebra, is_quasicrossed_product, is_unit,
                                 left_inverse, right_inverse, verify_quasiassociativity)
from .LinearAlgebra import (identity_matrix, mat_vec, matrices_equal, nullspace, rank, solve_mod,
                            stack_rows)
from .Scalar import Scalar, as_scalar, discrete_log, root_generator, root_group_order
from .Sweeps import run_sweep

logger = logging.getLogger(__name__)

PROPAGATION_LIMIT = 4096


# --------------------------
# BASE ALGEBRAS
# --------------------------
class AssociativeAlgebra(GradedQuasialgebra):
    """Unital associative algebra, graded by the trivial group."""

    def __init__(self, basis, structure, one=None, name="B", conductor=1):
        group = trivial_group()
        super().__init__(group, basis, [0] * len(basis), structure,
                         cocycle=trivial_cocycle(group, conductor), one=one, name=name,
                         conductor=conductor)
        report = verify_quasiassociativity(self)
        if not report.passed:
            raise NotAssociative(f"{name} is not associative", witness=report.witnesses[0][:3])

    def inverse(self, x):
        if x.is_zero():
            raise NotAUnit("zero is not invertible")
        return left_inverse(x)


def scalar_algebra(conductor=1):
    return AssociativeAlgebra(["one"], {(0, 0): {0: 1}}, name="K", conductor=conductor)


def matrix_algebra(n, conductor=1):
    """Mat_n(K) with basis E{i}{j} (1-based)."""
    if n < 1:
        raise InvalidParameter(f"matrix size must be positive, got {n}")
    sep = "_" if n >= 10 else ""
    names = [f"E{i + 1}{sep}{j + 1}" for i in range(n) for j in range(n)]
    structure = {(i * n + j, j * n + l): {i * n + l: 1}
                 for i in range(n) for j in range(n) for l in range(n)}
    one = {names[i * n + i]: 1 for i in range(n)}
    return AssociativeAlgebra(names, structure, one=one, name=f"Mat{n}", conductor=conductor)


def dual_numbers(conductor=1):
    """K[t]/(t^2)."""
    return AssociativeAlgebra(["one", "t"], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}},
                              name="K[t]/t^2", conductor=conductor)


def component_algebra(A):
    """A_e as an AssociativeAlgebra, basis in component order."""
    comp = A.component(A.group.identity)
    pos = {k: i for i, k in enumerate(comp)}
    structure = {}
    for a, i in enumerate(comp):
        for b, j in enumerate(comp):
            combo = A.structure.get((i, j))
            if combo:
                structure[(a, b)] = {pos[k]: c for k, c in combo.items()}
    return AssociativeAlgebra([A.basis[k] for k in comp], structure,
                              one={A.basis[k]: c for k, c in A.one.coeffs.items()},
                              name=f"{A.name}_e", conductor=A.conductor)


def _to_base(B, A, x):
    """Element of A_e as an element of component_algebra(A)."""
    comp = A.component(A.group.identity)
    return B.from_vector(x.to_vector(comp))


def _from_base(A, x):
    comp = A.component(A.group.identity)
    return Element(A, {comp[i]: c for i, c in x.coeffs.items()})


# --------------------------
# SYSTEMS
# --------------------------
class QuasicrossedSystem:
    """(G, B, phi, sigma, alpha): sigma[g] is a matrix on B whose columns are images of basis
    vectors, alpha[g][h] an element of B."""

    def __init__(self, group, base, cocycle, sigma, alpha, name="S"):
        self.group = group
        self.base = base
        self.cocycle = cocycle
        self.name = name
        self.conductor = base.conductor
        n, d = group.order, base.dim
        if isinstance(sigma, dict):
            sigma = [sigma.get(g, sigma.get(group.labels[g])) for g in range(n)]
        self.sigma = [identity_matrix(d, self.conductor) if m is None else self._matrix(m)
                      for m in sigma]
        if len(self.sigma) != n:
            raise InvalidParameter("one sigma matrix per group element is required")
        self.alpha = self._alpha_table(alpha)
        self.units = None

    def _matrix(self, m):
        M = np.array(m, dtype=object)
        d = self.base.dim
        if M.shape != (d, d):
            raise InvalidParameter(f"sigma matrix must be {d}x{d}, got {M.shape}")
        return stack_rows([[as_scalar(M[i, j], self.conductor) for j in range(d)] for i in range(d)],
                          d, self.conductor)

    def _alpha_table(self, alpha):
        n, B = self.group.order, self.base

        def coerce(v):
            if isinstance(v, Element):
                return v
            return B.scalar(v)

        if callable(alpha):
            return [[coerce(alpha(g, h)) for h in range(n)] for g in range(n)]
        if isinstance(alpha, dict):
            resolved = {tuple(self.group.index_of(k) for k in key): v for key, v in alpha.items()}
            return [[coerce(resolved.get((g, h), 1)) for h in range(n)] for g in range(n)]
        return [[coerce(alpha[g][h]) for h in range(n)] for g in range(n)]

    def sigma_apply(self, g, x):
        g = self.group.index_of(g)
        return self.base.from_vector(mat_vec(self.sigma[g], np.array(x.to_vector(), dtype=object),
                                             self.conductor))

    def alpha_value(self, g, h):
        idx = self.group.index_of
        return self.alpha[idx(g)][idx(h)]

    def alpha_inverse(self, g, h):
        return self.base.inverse(self.alpha_value(g, h))

    def is_sigma_trivial(self):
        ident = identity_matrix(self.base.dim, self.conductor)
        return all(matrices_equal(m, ident) for m in self.sigma)

    def __repr__(self):
        return f"QuasicrossedSystem({self.name}, group={self.group!r}, base={self.base.name})"


def _check_preconditions(s):
    B, lab = s.base, s.group.labels
    basis = B.basis_elements()
    for g, M in enumerate(s.sigma):
        if rank(M) != B.dim:
            raise NonAutomorphismSigma(f"sigma({lab[g]}) is not invertible", witness=lab[g])
        if s.sigma_apply(g, B.one) != B.one:
            raise NonAutomorphismSigma(f"sigma({lab[g]}) does not fix 1", witness=lab[g])
        for x in basis:
            for y in basis:
                if s.sigma_apply(g, x * y) != s.sigma_apply(g, x) * s.sigma_apply(g, y):
                    raise NonAutomorphismSigma(f"sigma({lab[g]}) is not multiplicative",
                                               witness=(lab[g], str(x), str(y)))
    for g in range(s.group.order):
        for h in range(s.group.order):
            a = s.alpha[g][h]
            if not is_unit(a):
                raise NonUnitAlpha(f"alpha({lab[g]},{lab[h]}) = {a} is not a unit",
                                   witness=(lab[g], lab[h]))


def verify_system(s, jobs=1):
    """Conjugation, twisted cocycle and normalization conditions; report value is s on success."""
    _check_preconditions(s)
    B, G = s.base, s.group
    n, mult, lab, e = G.order, G.mult, G.labels, G.identity
    phi = s.cocycle.values
    basis = B.basis_elements()
    inv = [[B.inverse(s.alpha[g][h]) for h in range(n)] for g in range(n)]
    witnesses = []

    for g in range(n):
        for h in range(n):
            gh = mult[g][h]
            for x in basis:
                left = s.sigma_apply(g, s.sigma_apply(h, x))
                right = s.alpha[g][h] * s.sigma_apply(gh, x) * inv[g][h]
                if left != right:
                    witnesses.append(("conjugation", lab[g], lab[h], str(x)))

    def twisted(chunk):
        bad = []
        for g, h, k in chunk:
            left = s.alpha[g][h] * s.alpha[mult[g][h]][k]
            right = s.sigma_apply(g, s.alpha[h][k]) * s.alpha[g][mult[h][k]] * phi[g][h][k]
            if left != right:
                bad.append(("twisted_cocycle", lab[g], lab[h], lab[k]))
        return bad

    chunks = [[(g, h, k) for h in range(n) for k in range(n)] for g in range(n)]
    witnesses.extend(run_sweep(twisted, chunks, jobs))
    for g in range(n):
        if s.alpha[g][e] != B.one or s.alpha[e][g] != B.one:
            witnesses.append(("normalization", lab[g]))
    report = CheckReport("system", not witnesses, n * n * B.dim + n ** 3 + n, witnesses)
    if report.passed:
        report.value = s
    return report


# --------------------------
# PRODUCT <-> SYSTEM
# --------------------------
def product_basis_name(B, i, g):
    return f"u{g}" if B.dim == 1 else f"{B.basis[i]}_u{g}"


def build_product(s, name=None):
    """Free B-module on units u_g with (x u_g)(y u_h) = x sigma(g)(y) alpha(g,h) u_gh."""
    B, G = s.base, s.group
    n, d, mult = G.order, B.dim, G.mult
    names = [product_basis_name(B, i, g) for g in range(n) for i in range(d)]
    degrees = [g for g in range(n) for _ in range(d)]
    basis = B.basis_elements()
    images = [[s.sigma_apply(g, y) for y in basis] for g in range(n)]
    structure = {}
    for g in range(n):
        for h in range(n):
            gh = mult[g][h]
            for i in range(d):
                for j in range(d):
                    z = basis[i] * images[g][j] * s.alpha[g][h]
                    if z.coeffs:
                        structure[(g * d + i, h * d + j)] = {gh * d + k: c for k, c in z.coeffs.items()}
    e = G.identity
    one = {names[e * d + k]: c for k, c in B.one.coeffs.items()}
    A = GradedQuasialgebra(G, names, degrees, structure, cocycle=s.cocycle, one=one,
                           name=name or f"P({s.name})", conductor=s.conductor)
    A.units = [Element(A, {g * d + k: c for k, c in B.one.coeffs.items()}) for g in range(n)]
    logger.debug("built product of dimension %d from %s", A.dim, s.name)
    return A


def extract_system(A, units=None, seed=0):
    """Read (G, A_e, phi, sigma, alpha) off a quasicrossed product with the unit family given."""
    G = A.group
    if units is None:
        found = is_quasicrossed_product(A, seed=seed)
        if not found.passed:
            raise NotQuasicrossed(f"{A.name} has no unit family ({found.status})",
                                  witness=found.witnesses[:1])
        units = found.value
    units = list(units)
    if len(units) != G.order:
        raise NotQuasicrossed("one unit per group element is required")
    for g, u in enumerate(units):
        if u.is_zero() or not u.is_homogeneous() or u.degree() != g or not is_unit(u):
            raise NotQuasicrossed(f"{u} is not a unit of degree {G.labels[g]}", witness=G.labels[g])
    if units[G.identity] != A.one:
        raise NotQuasicrossed("the unit chosen for e must be 1")

    B = component_algebra(A)
    comp = A.component(G.identity)
    right_inv = [right_inverse(u) for u in units]
    sigma = []
    for g in range(G.order):
        cols = [A.multiply(A.multiply(units[g], A.basis_element(i)), right_inv[g]).to_vector(comp)
                for i in comp]
        sigma.append([[cols[c][r] for c in range(len(comp))] for r in range(len(comp))])
    n, mult = G.order, G.mult
    alpha = [[_to_base(B, A, A.multiply(A.multiply(units[g], units[h]), right_inv[mult[g][h]]))
              for h in range(n)] for g in range(n)]
    s = QuasicrossedSystem(G, B, A.cocycle, sigma, alpha, name=f"sys({A.name})")
    s.units = units
    return s


def verify_algebra_map(source, target, images):
    """images[i] is f(b_i); checks f(b_i b_j) = f(b_i) f(b_j) and bijectivity."""
    witnesses = []
    for i in range(source.dim):
        for j in range(source.dim):
            prod = source.product_of_basis(i, j)
            image = target.zero()
            for k, c in prod.coeffs.items():
                image = image + images[k] * c
            if image != target.multiply(images[i], images[j]):
                witnesses.append((source.basis[i], source.basis[j]))
    M = stack_rows([f.to_vector() for f in images], target.dim, target.conductor)
    bijective = source.dim == target.dim and rank(M) == target.dim
    if not bijective:
        witnesses.append(("not_bijective",))
    return CheckReport("algebra_map", not witnesses, source.dim ** 2, witnesses)


# --------------------------
# EQUIVALENCE
# --------------------------
def _same_base(B1, B2):
    return B1.dim == B2.dim and B1.same_table(B2) and B1.one.coeffs == B2.one.coeffs


def _transport(B_to, x):
    return B_to.from_vector(x.to_vector()) if x.algebra is not B_to else x


def check_equivalence_witness(s1, s2, u):
    """alpha2(g,h) = u(g) sigma1(g)(u(h)) alpha1(g,h) u(gh)^-1 and sigma2(g) = i_u(g) sigma1(g)."""
    B, G = s1.base, s1.group
    n, mult, lab = G.order, G.mult, G.labels
    u = [_transport(B, x) for x in u]
    witnesses = []
    if u[G.identity] != B.one:
        witnesses.append(("unit_at_identity",))
    try:
        u_inv = [B.inverse(x) for x in u]
    except NotAUnit:
        return CheckReport("equivalence_witness", False, 0, [("not_a_unit",)])
    for g in range(n):
        for x in B.basis_elements():
            if _transport(B, s2.sigma_apply(g, _transport(s2.base, x))) != u[g] * s1.sigma_apply(g, x) * u_inv[g]:
                witnesses.append(("sigma", lab[g], str(x)))
        for h in range(n):
            expected = u[g] * s1.sigma_apply(g, u[h]) * s1.alpha[g][h] * u_inv[mult[g][h]]
            if _transport(B, s2.alpha[g][h]) != expected:
                witnesses.append(("alpha", lab[g], lab[h]))
    return CheckReport("equivalence_witness", not witnesses, n * n + n * B.dim, witnesses)


def _intertwiners(s1, s2, g):
    """Basis of W_g = {y in B : y sigma1(g)(x) = sigma2(g)(x) y for all x}."""
    B = s1.base
    d = B.dim
    rows = []
    for x in B.basis_elements():
        a = s1.sigma_apply(g, x)
        b = _transport(B, s2.sigma_apply(g, _transport(s2.base, x)))
        cols = [(B.basis_element(i) * a - b * B.basis_element(i)).to_vector() for i in range(d)]
        rows.extend([[cols[c][r] for c in range(d)] for r in range(d)])
    M = stack_rows(rows, d, s1.conductor)
    return [B.from_vector(v) for v in nullspace(M, s1.conductor)]


def _scalar_ratio(x, y):
    """c with x = c y, or None."""
    if y.is_zero():
        return None
    k = min(y.coeffs)
    c = x.coeffs.get(k, Scalar.zero(y.algebra.conductor)) / y.coeffs[k]
    return c if y * c == x else None


def solve_scalar_coboundary(group, d, conductor):
    """lambda: G -> K^x with lambda(g) lambda(h) / lambda(gh) = d[g][h], lambda(e) = 1.

    Returns ("solved", values), ("infeasible", None) or ("undecided", None).
    """
    n, mult, e = group.order, group.mult, group.identity
    logs = [[discrete_log(d[g][h]) for h in range(n)] for g in range(n)]
    if any(v is None for row in logs for v in row):
        return "undecided", None
    N = root_group_order(conductor)
    matrix, rhs = [], []
    for g in range(n):
        for h in range(n):
            row = [0] * n
            row[g] += 1
            row[h] += 1
            row[mult[g][h]] -= 1
            matrix.append(row)
            rhs.append(logs[g][h])
    row = [0] * n
    row[e] = 1
    matrix.append(row)
    rhs.append(0)
    x = solve_mod(matrix, rhs, N)
    if x is None:
        return "infeasible", None
    xi = root_generator(conductor)
    return "solved", [xi ** k for k in x]


def _equivalence_report(status, u=None, method=None, witnesses=None):
    details = {"status": status}
    if method:
        details["method"] = method
    if u is not None:
        details["witness_u"] = [str(x) for x in u]
    report = CheckReport("equivalence", status == "equivalent", 1, witnesses or [], details)
    report.value = u
    return report


def are_equivalent_systems(s1, s2, seed=0):
    """Search for u: G -> U(B) relating s1 to s2; status equivalent, inequivalent or undecided."""
    if s1.group != s2.group:
        raise IncompatibleSystems("systems live on different groups")
    if not _same_base(s1.base, s2.base):
        raise IncompatibleSystems("systems have different base algebras")
    if s1.cocycle.values != s2.cocycle.values:
        raise IncompatibleSystems("systems carry different cocycles")
    B, G = s1.base, s1.group
    n, mult, lab, e = G.order, G.mult, G.labels, G.identity

    spaces = [_intertwiners(s1, s2, g) for g in range(n)]
    for g, W in enumerate(spaces):
        if not W:
            return _equivalence_report("inequivalent", method="intertwiner",
                                       witnesses=[("no_intertwiner", lab[g])])
    if all(len(W) == 1 for W in spaces):
        w = [W[0] for W in spaces]
        scale = B.scalar_part(w[e])
        if scale is None:
            return _equivalence_report("inequivalent", method="intertwiner",
                                       witnesses=[("identity_intertwiner", lab[e])])
        w[e] = B.one
        for g in range(n):
            if not is_unit(w[g]):
                return _equivalence_report("inequivalent", method="intertwiner",
                                           witnesses=[("non_unit_intertwiner", lab[g])])
        w_inv = [B.inverse(x) for x in w]
        d = []
        for g in range(n):
            row = []
            for h in range(n):
                t = w[g] * s1.sigma_apply(g, w[h]) * s1.alpha[g][h] * w_inv[mult[g][h]]
                r = _scalar_ratio(t, _transport(B, s2.alpha[g][h]))
                if r is None:
                    return _equivalence_report("inequivalent", method="intertwiner",
                                               witnesses=[("non_scalar_ratio", lab[g], lab[h])])
                row.append(r.inverse())
            d.append(row)
        status, lam = solve_scalar_coboundary(G, d, s1.conductor)
        if status == "infeasible":
            return _equivalence_report("inequivalent", method="discrete_log",
                                       witnesses=[("no_root_of_unity_solution",)])
        if status == "solved":
            u = [w[g] * lam[g] for g in range(n)]
            check = check_equivalence_witness(s1, s2, u)
            if check.passed:
                return _equivalence_report("equivalent", u, "discrete_log")
            logger.warning("discrete-log witness failed substitution: %s", check.witnesses[:3])
    logger.warning("falling back to propagation search for %s vs %s", s1.name, s2.name)
    return _propagate(s1, s2, spaces)


def _propagate(s1, s2, spaces):
    B, G = s1.base, s1.group
    n, mult = G.order, G.mult
    gens = G.generators()
    xi = root_generator(s1.conductor)
    N = root_group_order(s1.conductor)
    options = []
    for g in gens:
        units = [w for w in spaces[g] if is_unit(w)]
        options.append([w * xi ** k for w in units for k in range(N)])
    if any(not opt for opt in options):
        return _equivalence_report("undecided", method="propagation")
    alpha2_inv = [[B.inverse(_transport(B, s2.alpha[g][h])) for h in range(n)] for g in range(n)]
    tried = 0
    for combo in itertools.product(*options):
        tried += 1
        if tried > PROPAGATION_LIMIT:
            break
        u = [None] * n
        u[G.identity] = B.one
        frontier = [G.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for s, us in zip(gens, combo):
                    gs = mult[g][s]
                    if u[gs] is None:
                        u[gs] = alpha2_inv[g][s] * u[g] * s1.sigma_apply(g, us) * s1.alpha[g][s]
                        nxt.append(gs)
            frontier = nxt
        if any(x is None or x.is_zero() for x in u):
            continue
        if check_equivalence_witness(s1, s2, u).passed:
            return _equivalence_report("equivalent", u, "propagation")
    logger.debug("propagation exhausted after %d candidate families", tried)
    return _equivalence_report("undecided", method="propagation")


def is_coboundary(delta, sigma=None, seed=0):
    """delta(g,h) = u(g) u(h) / u(gh) over B = K; status yes, no or undecided."""
    group, conductor = delta.group, delta.conductor
    if sigma is not None:
        ident = identity_matrix(1, conductor)
        if not all(matrices_equal(np.array(m, dtype=object), ident) for m in sigma):
            raise InvalidParameter("over B = K every sigma(g) is the identity")
    n = group.order
    status, lam = solve_scalar_coboundary(group, delta.values, conductor)
    details = {"status": {"solved": "yes", "infeasible": "no"}.get(status, "undecided")}
    if lam is not None:
        mult = group.mult
        assert all(lam[g] * lam[h] / lam[mult[g][h]] == delta.values[g][h]
                   for g in range(n) for h in range(n))
        details["witness_u"] = [str(x) for x in lam]
    report = CheckReport("coboundary", status == "solved", n * n, [], details)
    report.value = lam
    return report


def are_equivalent_products(A1, A2, seed=0):
    """Equivalence of quasicrossed products with the same A_e, with the graded isomorphism A2 -> A1."""
    if A1.group != A2.group:
        raise IncompatibleBase("products are graded by different groups")
    B1, B2 = component_algebra(A1), component_algebra(A2)
    if not _same_base(B1, B2):
        raise IncompatibleBase("degree-e components differ")
    s1 = extract_system(A1, seed=seed)
    s2 = extract_system(A2, seed=seed)
    result = are_equivalent_systems(s1, s2, seed)
    if result.status != "equivalent":
        return result
    u = result.value
    G = A1.group
    images = [None] * A2.dim
    for g in range(G.order):
        inv = right_inverse(s2.units[g])
        for b in A2.component(g):
            x = _to_base(B2, A2, A2.multiply(A2.basis_element(b), inv))
            coeff = _from_base(A1, _transport(B1, x) * _transport(B1, u[g]))
            images[b] = A1.multiply(coeff, s1.units[g])
    check = verify_algebra_map(A2, A1, images)
    if not check.passed:
        logger.warning("graded map from the equivalence witness is not an isomorphism")
        return _equivalence_report("undecided", u, "map_check", check.witnesses)
    report = _equivalence_report("equivalent", u, result.details.get("method"))
    report.details["isomorphism"] = [f"{A2.basis[i]} -> {images[i]}" for i in range(A2.dim)]
    report.value = u
    report.isomorphism = images
    return report
