import logging

import numpy as np

from .CheckReport import CheckReport
from .DeformedGroupAlgebra import kfz3
from .Errors import InvalidParameter, MissingAction, NotGradedAction
from .GradedQuasialgebra import Element
from .LinearAlgebra import EchelonBasis, mat_vec
from .MatrixConstructions import chessboard_matrices
from .Scalar import Scalar, as_scalar

logger = logging.getLogger(__name__)

ORIENTATIONS = ("displayed", "swapped")


class GradedModule:
    """Graded vector space with optional left and right actions of a graded quasialgebra.

    left maps (algebra index, module index) and right maps (module index, algebra index)
    to {module index: Scalar}.
    """

    def __init__(self, algebra, basis, degrees, left=None, right=None, name="M"):
        self.algebra = algebra
        self.group = algebra.group
        self.conductor = algebra.conductor
        self.basis = list(basis)
        self.degrees = [self.group.index_of(d) for d in degrees]
        self.name = name
        if len(self.degrees) != len(self.basis):
            raise InvalidParameter("one degree per module basis element is required")
        self._index = {b: i for i, b in enumerate(self.basis)}
        self.left = self._clean(left)
        self.right = self._clean(right)
        self._check_degrees()

    def _clean(self, table):
        if table is None:
            return None
        out = {}
        for key, combo in table.items():
            clean = {k: as_scalar(c, self.conductor) for k, c in combo.items()}
            clean = {k: c for k, c in clean.items() if c}
            if clean:
                out[key] = clean
        return out

    def _check_degrees(self):
        mult, A = self.group.mult, self.algebra
        for (a, v), combo in (self.left or {}).items():
            for w in combo:
                if self.degrees[w] != mult[A.degrees[a]][self.degrees[v]]:
                    raise NotGradedAction("left action leaves its degree",
                                          witness=(A.basis[a], self.basis[v], self.basis[w]))
        for (v, a), combo in (self.right or {}).items():
            for w in combo:
                if self.degrees[w] != mult[self.degrees[v]][A.degrees[a]]:
                    raise NotGradedAction("right action leaves its degree",
                                          witness=(self.basis[v], A.basis[a], self.basis[w]))

    @property
    def dim(self):
        return len(self.basis)

    def index(self, name):
        if isinstance(name, int):
            return name
        try:
            return self._index[name]
        except KeyError:
            raise InvalidParameter(f"no module basis element named {name!r}") from None

    def vector(self, mapping):
        return Element(self, {self.index(k): as_scalar(v, self.conductor) for k, v in mapping.items()})

    def basis_vector(self, name):
        return Element(self, {self.index(name): Scalar.one(self.conductor)})

    def basis_vectors(self):
        return [self.basis_vector(i) for i in range(self.dim)]

    def zero(self):
        return Element(self, {})

    def from_vector(self, vector, indices=None):
        indices = range(self.dim) if indices is None else indices
        return Element(self, dict(zip(indices, vector)))

    def act_left(self, x, v):
        if self.left is None:
            raise MissingAction(f"{self.name} has no left action")
        out = {}
        for a, xa in x.coeffs.items():
            for k, vk in v.coeffs.items():
                for w, c in self.left.get((a, k), {}).items():
                    term = xa * vk * c
                    out[w] = out[w] + term if w in out else term
        return Element(self, out)

    def act_right(self, v, x):
        if self.right is None:
            raise MissingAction(f"{self.name} has no right action")
        out = {}
        for k, vk in v.coeffs.items():
            for a, xa in x.coeffs.items():
                for w, c in self.right.get((k, a), {}).items():
                    term = vk * xa * c
                    out[w] = out[w] + term if w in out else term
        return Element(self, out)

    def __repr__(self):
        return f"GradedModule({self.name}, dim={self.dim}, over={self.algebra.name})"


# --------------------------
# VERIFICATION
# --------------------------
def verify_left_module(M):
    """(x_g x_h).v_k = phi(g,h,k) x_g.(x_h.v_k) and 1.v = v."""
    if M.left is None:
        raise MissingAction(f"{M.name} has no left action")
    A, phi = M.algebra, M.algebra.cocycle.values
    xs, vs = A.basis_elements(), M.basis_vectors()
    witnesses = []
    for v in vs:
        if M.act_left(A.one, v) != v:
            witnesses.append(("unit", str(v)))
    for i, x in enumerate(xs):
        for j, y in enumerate(xs):
            for k, v in enumerate(vs):
                left = M.act_left(x * y, v)
                right = M.act_left(x, M.act_left(y, v)) * phi[A.degrees[i]][A.degrees[j]][M.degrees[k]]
                if left != right:
                    witnesses.append((A.basis[i], A.basis[j], M.basis[k], str(left), str(right)))
    return CheckReport("left_module", not witnesses, A.dim ** 2 * M.dim, witnesses)


def verify_right_module(M):
    """(v_k.x_g).x_h = phi(k,g,h) v_k.(x_g x_h) and v.1 = v."""
    if M.right is None:
        raise MissingAction(f"{M.name} has no right action")
    A, phi = M.algebra, M.algebra.cocycle.values
    xs, vs = A.basis_elements(), M.basis_vectors()
    witnesses = []
    for v in vs:
        if M.act_right(v, A.one) != v:
            witnesses.append(("unit", str(v)))
    for k, v in enumerate(vs):
        for i, x in enumerate(xs):
            for j, y in enumerate(xs):
                left = M.act_right(M.act_right(v, x), y)
                right = M.act_right(v, x * y) * phi[M.degrees[k]][A.degrees[i]][A.degrees[j]]
                if left != right:
                    witnesses.append((M.basis[k], A.basis[i], A.basis[j], str(left), str(right)))
    return CheckReport("right_module", not witnesses, A.dim ** 2 * M.dim, witnesses)


def verify_bimodule(M):
    """(x_g.v_k).x_h = phi(g,k,h) x_g.(v_k.x_h); one-sided outcomes go in the details."""
    if M.left is None or M.right is None:
        raise MissingAction(f"{M.name} needs both actions for the bimodule check")
    A, phi = M.algebra, M.algebra.cocycle.values
    xs, vs = A.basis_elements(), M.basis_vectors()
    witnesses = []
    for i, x in enumerate(xs):
        for k, v in enumerate(vs):
            for j, y in enumerate(xs):
                left = M.act_right(M.act_left(x, v), y)
                right = M.act_left(x, M.act_right(v, y)) * phi[A.degrees[i]][M.degrees[k]][A.degrees[j]]
                if left != right:
                    witnesses.append((A.basis[i], M.basis[k], A.basis[j], str(left), str(right)))
    details = {"left": verify_left_module(M).status, "right": verify_right_module(M).status}
    passed = not witnesses and details["left"] == "pass" and details["right"] == "pass"
    return CheckReport("bimodule", passed, A.dim ** 2 * M.dim, witnesses, details)


def is_graded_submodule(M, W, acting=None):
    """W (module vectors) is graded and closed under the actions of the acting basis indices."""
    span = EchelonBasis(M.dim, M.conductor)
    for w in W:
        span.add(np.array(w.to_vector(), dtype=object))
    vectors = [M.from_vector(v) for v in span.vectors()]
    acting = range(M.algebra.dim) if acting is None else acting
    witnesses = []
    for w in vectors:
        for part in _components(M, w):
            if not span.contains(np.array(part.to_vector(), dtype=object)):
                witnesses.append(("not_graded", str(part)))
    for a in acting:
        x = M.algebra.basis_element(a)
        for w in vectors:
            images = []
            if M.left is not None:
                images.append(("left", M.act_left(x, w)))
            if M.right is not None:
                images.append(("right", M.act_right(w, x)))
            for side, image in images:
                if not span.contains(np.array(image.to_vector(), dtype=object)):
                    witnesses.append((side, M.algebra.basis[a], str(w)))
    return CheckReport("graded_submodule", not witnesses, len(vectors) * len(list(acting)),
                       witnesses, {"dim": span.dim})


def _components(M, w):
    parts = {}
    for i, c in w.coeffs.items():
        parts.setdefault(M.degrees[i], {})[i] = c
    return [Element(M, part) for _, part in sorted(parts.items())]


def is_degree_morphism(M, N, f, g):
    """f (columns are images of M's basis in N) maps M_k into N_kg and commutes with the actions."""
    if M.algebra is not N.algebra:
        raise InvalidParameter("modules over different algebras")
    g = M.group.index_of(g)
    F = np.array(f, dtype=object)
    if F.shape != (N.dim, M.dim):
        raise InvalidParameter(f"morphism matrix must be {N.dim}x{M.dim}, got {F.shape}")
    F = np.vectorize(lambda c: as_scalar(c, M.conductor), otypes=[object])(F)

    def apply(v):
        return N.from_vector(mat_vec(F, np.array(v.to_vector(), dtype=object), M.conductor))

    mult, A = M.group.mult, M.algebra
    witnesses = []
    for k, v in enumerate(M.basis_vectors()):
        image = apply(v)
        if any(N.degrees[i] != mult[M.degrees[k]][g] for i in image.coeffs):
            witnesses.append(("degree", M.basis[k]))
        for a, x in enumerate(A.basis_elements()):
            if M.left is not None and N.left is not None:
                if apply(M.act_left(x, v)) != N.act_left(x, image):
                    witnesses.append(("left", A.basis[a], M.basis[k]))
            if M.right is not None and N.right is not None:
                if apply(M.act_right(v, x)) != N.act_right(image, x):
                    witnesses.append(("right", M.basis[k], A.basis[a]))
    return CheckReport("degree_morphism", not witnesses, M.dim * (1 + A.dim), witnesses)


# --------------------------
# NAMED MODULES
# --------------------------
def regular_bimodule(A):
    """A acting on itself by its product."""
    structure = dict(A.structure)
    return GradedModule(A, A.basis, A.degrees, left=structure, right=structure, name=f"reg({A.name})")


def component_submodule(A, g):
    """(regular module, A_g basis vectors, A_e basis indices): A_g as an A_e-submodule of A."""
    M = regular_bimodule(A)
    W = [M.basis_vector(i) for i in A.component(g)]
    return M, W, A.component(A.group.identity)


def cd_bimodule(A, s):
    """vA with x.(vy) = v(s(x) y) and (vy).x = v(yx) for a diagonal s in basis order."""
    s = [as_scalar(v, A.conductor) for v in s]
    if len(s) != A.dim:
        raise InvalidParameter(f"s needs {A.dim} values")
    left, right = {}, {}
    for i in range(A.dim):
        for j in range(A.dim):
            combo = A.structure.get((i, j))
            if combo:
                left[(i, j)] = {k: c * s[i] for k, c in combo.items()}
                right[(j, i)] = dict(combo)
    return GradedModule(A, [f"v{b}" for b in A.basis], A.degrees, left=left, right=right,
                        name=f"v{A.name}")


def mixed_action_module():
    """<m, n> over the 2x2 chessboard algebra: compatible one-sided actions, not a bimodule."""
    A = chessboard_matrices(1, 1)
    right = {
        ("m", "E11"): {"m": 1}, ("n", "E21"): {"m": 1},
        ("m", "E12"): {"n": 1}, ("n", "E22"): {"n": 1},
    }
    left = {
        ("E22", "m"): {"m": 1}, ("E21", "n"): {"m": 1},
        ("E12", "m"): {"n": -1}, ("E11", "n"): {"n": 1},
    }
    return _named_module(A, ["m", "n"], [0, 1], left, right, "mixed")


def _named_module(A, basis, degrees, left, right, name):
    pos = {b: i for i, b in enumerate(basis)}

    def resolve(table, left_side):
        out = {}
        for (p, q), combo in table.items():
            key = (A.index(p), pos[q]) if left_side else (pos[p], A.index(q))
            out[key] = {pos[w]: c for w, c in combo.items()}
        return out

    return GradedModule(A, basis, degrees, left=resolve(left, True), right=resolve(right, False),
                        name=name)


# rows ve, ve1, ve2; columns e, e1, e2
_DOUBLED_RIGHT = [
    [("ve", 1), ("ve1", 1), ("ve2", 1)],
    [("ve1", 1), ("ve2", -1), ("ve", 1)],
    [("ve2", 1), ("ve", 1), ("ve1", 1)],
]
_DOUBLED_LEFT = [
    [("ve", 1), ("ve1", -1), ("ve2", -1)],
    [("ve1", 1), ("ve2", 1), ("ve", -1)],
    [("ve2", 1), ("ve", -1), ("ve1", -1)],
]


def doubled_z3_module(orientation="displayed"):
    """v K_F Z3 over K_F Z3 from the two printed action tables.

    displayed: the left table entry in row r, column c is x_c . v_r.
    swapped: the same entry is read as x_r . v_c.
    """
    if orientation not in ORIENTATIONS:
        raise InvalidParameter(f"orientation must be one of {ORIENTATIONS}")
    A = kfz3()
    basis = ["ve", "ve1", "ve2"]
    algebra_names = ["e", "e1", "e2"]
    right, left = {}, {}
    for r in range(3):
        for c in range(3):
            name, sign = _DOUBLED_RIGHT[r][c]
            right[(basis[r], algebra_names[c])] = {name: sign}
            name, sign = _DOUBLED_LEFT[r][c]
            if orientation == "displayed":
                left[(algebra_names[c], basis[r])] = {name: sign}
            else:
                left[(algebra_names[r], basis[c])] = {name: sign}
    return _named_module(A, basis, [0, 1, 2], left, right, f"vKFZ3[{orientation}]")


def resolve_doubled_z3_orientation():
    """Try each table reading; report the first that verifies, else the displayed one."""
    outcomes = {}
    for orientation in ORIENTATIONS:
        M = doubled_z3_module(orientation)
        reports = [verify_left_module(M), verify_right_module(M), verify_bimodule(M)]
        outcomes[orientation] = reports
        if all(r.passed for r in reports):
            return _orientation_report(orientation, reports, outcomes)
    logger.warning("no reading of the doubled Z3 tables gives a bimodule")
    return _orientation_report(ORIENTATIONS[0], outcomes[ORIENTATIONS[0]], outcomes)


def _orientation_report(orientation, reports, outcomes):
    details = {"orientation": orientation}
    for name, rs in outcomes.items():
        for r in rs:
            details[f"{name}.{r.name}"] = r.status
    witnesses = [w for r in reports for w in r.witnesses]
    return CheckReport("doubled_z3_orientation", all(r.passed for r in reports),
                       sum(r.checked for r in reports), witnesses, details)
