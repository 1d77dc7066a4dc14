import logging
import math
import random

from .CheckReport import CheckReport
from .Cochains import antiassociative_cocycle, trivial_cocycle
from .Errors import InvalidParameter, ZeroParameter
from .FiniteGroup import cyclic
from .GradedQuasialgebra import Element, GradedQuasialgebra, is_unit, random_homogeneous
from .Scalar import Scalar, as_scalar, field_degree, galois, root_of_unity

logger = logging.getLogger(__name__)


def _matrix_name(n, i, j):
    sep = "_" if n >= 10 else ""
    return f"E{i + 1}{sep}{j + 1}"


def _check_cyclic_cocycle(n, phi):
    if phi.group != cyclic(n):
        raise InvalidParameter(f"cocycle must live on Z{n}")


def _deformed_coefficient(phi, n, a, b, c):
    """Coefficient of E_ac in E_ab E_bc, indices read as residues."""
    t = phi.values
    return t[a][(-b) % n][(b - c) % n] / t[(-b) % n][b][(-c) % n]


def deformed_matrices(n, phi):
    """n x n matrices with the phi-deformed product; E_ij has degree i - j in Z_n."""
    _check_cyclic_cocycle(n, phi)
    names = [_matrix_name(n, i, j) for i in range(n) for j in range(n)]
    degrees = [(i - j) % n for i in range(n) for j in range(n)]
    structure = {(a * n + b, b * n + c): {a * n + c: _deformed_coefficient(phi, n, a, b, c)}
                 for a in range(n) for b in range(n) for c in range(n)}
    return GradedQuasialgebra(cyclic(n), names, degrees, structure, cocycle=phi,
                              name=f"M{n},phi", conductor=phi.conductor)


def triangular_deformed(n, phi):
    """Upper triangular subalgebra of deformed_matrices(n, phi)."""
    _check_cyclic_cocycle(n, phi)
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    pos = {cell: k for k, cell in enumerate(cells)}
    structure = {}
    for a, b in cells:
        for c in range(b, n):
            structure[(pos[(a, b)], pos[(b, c)])] = {pos[(a, c)]: _deformed_coefficient(phi, n, a, b, c)}
    return GradedQuasialgebra(cyclic(n), [_matrix_name(n, i, j) for i, j in cells],
                              [(i - j) % n for i, j in cells], structure, cocycle=phi,
                              name=f"T{n},phi", conductor=phi.conductor)


def diagonal_shift_unit(A, n, d):
    """sum_i E_{i, i-d} in a deformed matrix algebra: a unit of degree d."""
    return Element(A, {i * n + (i - d) % n: Scalar.one(A.conductor) for i in range(n)})


def chessboard_matrices(n, m, conductor=1):
    """(n+m) x (n+m) matrices graded by Z2 in blocks, with E_ij E_jl = -E_il when the
    left factor is lower-left and the right factor upper-right."""
    if n < 1 or m < 1:
        raise InvalidParameter(f"block sizes must be positive, got {n}, {m}")
    size = n + m

    def parity(i, j):
        return int((i < n) != (j < n))

    names = [_matrix_name(size, i, j) for i in range(size) for j in range(size)]
    degrees = [parity(i, j) for i in range(size) for j in range(size)]
    structure = {}
    for i in range(size):
        for j in range(size):
            for l in range(size):
                sign = -1 if (i >= n and j < n and l >= n) else 1
                structure[(i * size + j, j * size + l)] = {i * size + l: sign}
    one = {names[i * size + i]: 1 for i in range(size)}
    return GradedQuasialgebra(cyclic(2), names, degrees, structure,
                              cocycle=antiassociative_cocycle(conductor), one=one,
                              name=f"Mat~{n},{m}", conductor=conductor)


def block_element(A, n, m, blocks):
    """Element of a chessboard algebra from {(r, c): matrix} blocks, r, c in {0, 1}."""
    size = n + m
    offsets = (0, n)
    coeffs = {}
    for (r, c), M in blocks.items():
        for i, row in enumerate(M):
            for j, v in enumerate(row):
                v = as_scalar(v, A.conductor)
                if v:
                    coeffs[(offsets[r] + i) * size + offsets[c] + j] = v
    return Element(A, coeffs)


# --------------------------
# MATRICES OVER A DIVISION QUASIALGEBRA
# --------------------------
class DeltaData:
    """Parameters of Delta = Delta_0 + Delta_0 u with Delta_0 = Q(zeta_m)."""

    def __init__(self, sigma_power, a, conductor):
        m = conductor
        if math.gcd(sigma_power, m) != 1 or (sigma_power * sigma_power - 1) % m:
            raise InvalidParameter(f"zeta -> zeta^{sigma_power} is not an involutive automorphism")
        self.a = as_scalar(a, m)
        if not self.a:
            raise ZeroParameter("a must be nonzero")
        self.sigma_power = sigma_power % m if m > 1 else 1
        self.conductor = m
        self.sigma_trivial = (sigma_power - 1) % m == 0
        ratio = self.a / self.sigma(self.a)
        if ratio != 1 and ratio != -1:
            raise InvalidParameter(f"sigma(a) must be a or -a, got sigma({self.a}) = {self.sigma(self.a)}")
        self.antiassociative = ratio == -1

    def sigma(self, x):
        return x if self.sigma_trivial else galois(x, self.sigma_power)

    @property
    def coefficient_conductor(self):
        """The algebra is linear over Q(zeta_m) when sigma is trivial, else over Q."""
        return self.conductor if self.sigma_trivial else 1

    def field_basis(self):
        if self.sigma_trivial:
            return [Scalar.one(self.conductor)]
        return [root_of_unity(self.conductor, t) for t in range(field_degree(self.conductor))]

    def expand(self, c):
        if self.sigma_trivial:
            return {0: c}
        return {t: Scalar(v, 1) for t, v in enumerate(c.coeffs) if v}

    def cocycle(self):
        k = self.coefficient_conductor
        return antiassociative_cocycle(k) if self.antiassociative else trivial_cocycle(cyclic(2), k)


def _delta_name(n, i, j, t, parity, data):
    parts = []
    if n > 1:
        parts.append(_matrix_name(n, i, j))
    if not data.sigma_trivial:
        parts.append(f"z{t}")
    name = "_".join(parts) or "one"
    if parity:
        name = "u" if name == "one" else name + "u"
    return name


def _delta_matrices(n, data, name):
    fields = data.field_basis()
    T = len(fields)

    def index(p, i, j, t):
        return ((p * n + i) * n + j) * T + t

    names = [_delta_name(n, i, j, t, p, data)
             for p in range(2) for i in range(n) for j in range(n) for t in range(T)]
    degrees = [p for p in range(2) for _ in range(n * n * T)]
    structure = {}
    for p in range(2):
        for q in range(2):
            for s, fs in enumerate(fields):
                for t, ft in enumerate(fields):
                    value = fs * (ft if p == 0 else data.sigma(ft))
                    if p and q:
                        value = value * data.a
                    combo = data.expand(value)
                    for i in range(n):
                        for j in range(n):
                            for l in range(n):
                                structure[(index(p, i, j, s), index(q, j, l, t))] = {
                                    index(p ^ q, i, l, r): c for r, c in combo.items()}
    one = {names[index(0, i, i, 0)]: 1 for i in range(n)}
    A = GradedQuasialgebra(cyclic(2), names, degrees, structure, cocycle=data.cocycle(), one=one,
                           name=name, conductor=data.coefficient_conductor)
    A.delta = data
    A.matrix_size = n
    A.units = [A.one, Element(A, {index(1, i, i, 0): Scalar.one(A.conductor) for i in range(n)})]
    return A


def antiassoc_division(sigma_power, a, conductor):
    """Delta_0 + Delta_0 u with A(Bu) = (AB)u, (Au)B = (A sigma(B))u, (Au)(Bu) = a A sigma(B)."""
    data = DeltaData(sigma_power, a, conductor)
    logger.debug("division quasialgebra: sigma power %d, a = %s, conductor %d",
                 data.sigma_power, data.a, conductor)
    return _delta_matrices(1, data, f"Delta({sigma_power},{data.a})")


def mat_over_delta(n, delta):
    """Mat_n(Delta_0) + Mat_n(Delta_0) u with the same three rules applied entrywise."""
    if n < 1:
        raise InvalidParameter(f"matrix size must be positive, got {n}")
    return _delta_matrices(n, delta.delta, f"Mat{n}({delta.name})")


def division_check(A, seed=0, samples=None):
    """Every basis element and sampled nonzero homogeneous element is a unit."""
    samples = 32 if samples is None else samples
    rng = random.Random(seed)
    witnesses = []
    checked = 0
    for g in range(A.group.order):
        candidates = [A.basis_element(i) for i in A.component(g)]
        candidates += [random_homogeneous(A, g, rng) for _ in range(samples)]
        for x in candidates:
            if x.is_zero():
                continue
            checked += 1
            if not is_unit(x):
                witnesses.append(str(x))
    return CheckReport("division", not witnesses, checked, witnesses, {"sampled": samples})
