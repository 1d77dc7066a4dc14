import logging
import random

from .CheckReport import CheckReport
from .Errors import InvalidParameter, NotNormalized, ZeroValue
from .FiniteGroup import FiniteGroup, cyclic
from .QuasialgConfig import DEFAULT_CONFIG
from .Scalar import Scalar, as_scalar
from .Sweeps import run_sweep

logger = logging.getLogger(__name__)


def _conductor_of(values, default):
    stack = [values]
    while stack:
        item = stack.pop()
        if isinstance(item, Scalar):
            return item.conductor
        if isinstance(item, dict):
            stack.extend(item.values())
        elif isinstance(item, (list, tuple)):
            stack.extend(item)
    return default


def _dense(group, values, arity, conductor):
    """Normalize a nested list, a {(g, h, ...): value} dict or a callable to a dense table."""
    n = group.order
    one = Scalar.one(conductor)
    if callable(values):
        def read(idx):
            return values(*idx)
    elif isinstance(values, dict):
        resolved = {}
        for key, v in values.items():
            if len(key) != arity:
                raise InvalidParameter(f"entry {key} needs {arity} group elements")
            resolved[tuple(group.index_of(k) for k in key)] = v
        def read(idx):
            return resolved.get(idx, one)
    else:
        def read(idx):
            item = values
            for i in idx:
                item = item[i]
            return item

    def build(prefix):
        if len(prefix) == arity:
            return as_scalar(read(prefix), conductor)
        return [build(prefix + (i,)) for i in range(n)]
    return build(())


class Cochain2:
    """2-cochain F on G with values in K^x, F(e, g) = F(g, e) = 1."""

    def __init__(self, group, values, conductor=None):
        self.group = group
        self.conductor = conductor or _conductor_of(values, 1)
        self.values = _dense(group, values, 2, self.conductor)
        n, e = group.order, group.identity
        for g in range(n):
            for h in range(n):
                if not self.values[g][h]:
                    raise ZeroValue("cochain value is zero",
                                    witness=(group.labels[g], group.labels[h]))
        for g in range(n):
            if self.values[e][g] != 1 or self.values[g][e] != 1:
                raise NotNormalized("F(e,g) and F(g,e) must be 1", witness=group.labels[g])

    def __call__(self, g, h):
        return self.values[self.group.index_of(g)][self.group.index_of(h)]

    def __mul__(self, other):
        n = self.group.order
        return Cochain2(self.group, [[self.values[g][h] * other.values[g][h] for h in range(n)]
                                     for g in range(n)], self.conductor)

    def __eq__(self, other):
        if not isinstance(other, Cochain2):
            return NotImplemented
        return self.group == other.group and self.values == other.values

    def differences(self, other):
        """Pairs (g, h) where the two tables disagree."""
        n = self.group.order
        return [(self.group.labels[g], self.group.labels[h]) for g in range(n) for h in range(n)
                if self.values[g][h] != other.values[g][h]]

    def is_trivial(self):
        return all(v == 1 for row in self.values for v in row)

    def __repr__(self):
        return f"Cochain2({self.group!r}, conductor={self.conductor})"


class Cocycle3:
    """3-cocycle phi on G; constructed tables are checked by verify_cocycle."""

    def __init__(self, group, values, conductor=None):
        self.group = group
        self.conductor = conductor or _conductor_of(values, 1)
        self.values = _dense(group, values, 3, self.conductor)

    def __call__(self, g, h, k):
        idx = self.group.index_of
        return self.values[idx(g)][idx(h)][idx(k)]

    def __eq__(self, other):
        if not isinstance(other, Cocycle3):
            return NotImplemented
        return self.group == other.group and self.values == other.values

    def is_trivial(self):
        return all(v == 1 for plane in self.values for row in plane for v in row)

    def nontrivial_triples(self):
        n = self.group.order
        lab = self.group.labels
        return [(lab[g], lab[h], lab[k]) for g in range(n) for h in range(n) for k in range(n)
                if self.values[g][h][k] != 1]

    def __repr__(self):
        return f"Cocycle3({self.group!r}, conductor={self.conductor})"


# --------------------------
# VERIFICATION
# --------------------------
def _quadruple_chunks(n, seed, config):
    if n <= config.exhaustive_quadruple_limit:
        return [[(g, h, k, l) for h in range(n) for k in range(n) for l in range(n)]
                for g in range(n)]
    rng = random.Random(seed)
    samples = [tuple(rng.randrange(n) for _ in range(4)) for _ in range(config.random_quadruples)]
    size = max(1, len(samples) // 16)
    return [samples[i:i + size] for i in range(0, len(samples), size)]


def verify_cocycle(group, values, conductor=None, jobs=1, seed=0, config=None):
    """Check the pentagon identity and phi(g,e,h) = 1; every violation is listed."""
    config = config or DEFAULT_CONFIG
    phi = values if isinstance(values, Cocycle3) else Cocycle3(group, values, conductor)
    t = phi.values
    mult, lab, n, e = group.mult, group.labels, group.order, group.identity
    for g in range(n):
        for h in range(n):
            for k in range(n):
                if not t[g][h][k]:
                    raise ZeroValue("cocycle value is zero", witness=(lab[g], lab[h], lab[k]))

    def check(chunk):
        bad = []
        for g, h, k, l in chunk:
            left = t[h][k][l] * t[g][mult[h][k]][l] * t[g][h][k]
            right = t[g][h][mult[k][l]] * t[mult[g][h]][k][l]
            if left != right:
                bad.append((lab[g], lab[h], lab[k], lab[l]))
        return bad

    chunks = _quadruple_chunks(n, seed, config)
    witnesses = run_sweep(check, chunks, jobs)
    normalization = [("normalization", lab[g], lab[h]) for g in range(n) for h in range(n)
                     if t[g][e][h] != 1]
    witnesses.extend(normalization)
    checked = sum(len(c) for c in chunks)
    logger.debug("cocycle sweep: %d quadruples, %d violations", checked, len(witnesses))
    report = CheckReport("cocycle", not witnesses, checked, witnesses,
                         {"exhaustive": n <= config.exhaustive_quadruple_limit})
    if report.passed:
        report.value = phi
    return report


def coboundary_of(F, jobs=1):
    """phi(g,h,k) = F(g,h) F(gh,k) / (F(h,k) F(g,hk))."""
    group, v = F.group, F.values
    mult, n = group.mult, group.order
    table = [[[v[g][h] * v[mult[g][h]][k] / (v[h][k] * v[g][mult[h][k]]) for k in range(n)]
              for h in range(n)] for g in range(n)]
    phi = Cocycle3(group, table, F.conductor)
    report = verify_cocycle(group, phi, jobs=jobs)
    assert report.passed, report.witnesses[:3]
    return phi


def cocycle_identities_check(phi):
    """Derived cocycle identities, checked for all g, h."""
    group, t = phi.group, phi.values
    mult, inv, lab, n, e = group.mult, group.inverses, group.labels, group.order, group.identity
    witnesses = []
    for g in range(n):
        gi = inv[g]
        if t[g][gi][g] * t[gi][g][gi] != 1:
            witnesses.append(("inverse_pair", lab[g]))
        for h in range(n):
            hi = inv[h]
            if t[e][g][h] != 1 or t[g][h][e] != 1:
                witnesses.append(("unit_slots", lab[g], lab[h]))
            if t[g][gi][g] * t[gi][g][h] != t[g][gi][mult[g][h]]:
                witnesses.append(("inverse_shift", lab[g], lab[h]))
            left = t[h][hi][gi] * t[g][h][hi]
            right = t[g][h][mult[hi][gi]] * t[mult[g][h]][hi][gi]
            if left != right:
                witnesses.append(("product_inverse", lab[g], lab[h]))
    return CheckReport("cocycle_identities", not witnesses, n * n, witnesses)


# --------------------------
# NAMED TABLES
# --------------------------
def sign_cochain(group, exponent, conductor=1):
    """F(x, y) = (-1)**exponent(x, y) on residue tuples."""
    res = [group.residues(i) for i in range(group.order)]
    return Cochain2(group, lambda g, h: -1 if exponent(res[g], res[h]) % 2 else 1, conductor)


def trivial_cochain(group, conductor=1):
    return Cochain2(group, lambda g, h: 1, conductor)


def trivial_cocycle(group, conductor=1):
    return Cocycle3(group, lambda g, h, k: 1, conductor)


def complex_cochain(conductor=1):
    return sign_cochain(FiniteGroup.product(2), lambda x, y: x[0] * y[0], conductor)


def quaternion_cochain(conductor=1):
    return sign_cochain(FiniteGroup.product(2, 2),
                        lambda x, y: x[0] * y[0] + (x[0] + x[1]) * y[1], conductor)


def octonion_cochain(conductor=1):
    def exponent(x, y):
        upper = sum(x[i] * y[j] for i in range(3) for j in range(i, 3))
        return upper + y[0] * x[1] * x[2] + x[0] * y[1] * x[2] + x[0] * x[1] * y[2]
    return sign_cochain(FiniteGroup.product(2, 2, 2), exponent, conductor)


def clifford_cochain(n, conductor=1):
    if n < 1:
        raise InvalidParameter(f"clifford needs n >= 1, got {n}")
    return sign_cochain(FiniteGroup.product(*([2] * n)),
                        lambda x, y: sum(x[i] * y[j] for i in range(n) for j in range(i, n)),
                        conductor)


def antiassociative_cocycle(conductor=1):
    """phi(x, y, z) = (-1)**(xyz) on Z2."""
    return Cocycle3(cyclic(2), lambda g, h, k: -1 if g * h * k else 1, conductor)


def z3_cocycle_table(alpha, beta, omega, conductor=3):
    """The Z3 family values, unvalidated; entries with an identity slot are 1."""
    a, b, w = (as_scalar(v, conductor) for v in (alpha, beta, omega))
    return {
        (1, 1, 1): a, (1, 1, 2): b,
        (1, 2, 1): 1 / (w * a), (1, 2, 2): w / b,
        (2, 1, 1): a / (b * w), (2, 1, 2): a * w,
        (2, 2, 1): b / (w * a), (2, 2, 2): w / a,
    }


def z3_cocycle(alpha, beta, omega, conductor=3):
    a, b, w = (as_scalar(v, conductor) for v in (alpha, beta, omega))
    if not a or not b:
        raise InvalidParameter("alpha and beta must be nonzero")
    if w ** 3 != 1:
        raise InvalidParameter(f"omega = {w} is not a cube root of unity")
    group = cyclic(3)
    phi = Cocycle3(group, z3_cocycle_table(a, b, w, conductor), conductor)
    assert verify_cocycle(group, phi).passed
    return phi


def cochain_from_function(group, u, conductor=None):
    """delta(g, h) = u(g) u(h) / u(gh) for a list u with u[e] = 1."""
    conductor = conductor or _conductor_of(list(u), 1)
    u = [as_scalar(x, conductor) for x in u]
    mult = group.mult
    return Cochain2(group, lambda g, h: u[g] * u[h] / u[mult[g][h]], conductor)
