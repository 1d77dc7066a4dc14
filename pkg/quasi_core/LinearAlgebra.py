import numpy as np

from .Errors import InvalidParameter
from .Scalar import Scalar


def zeros(rows, cols, conductor=1):
    M = np.empty((rows, cols), dtype=object)
    zero = Scalar.zero(conductor)
    for i in range(rows):
        for j in range(cols):
            M[i, j] = zero
    return M


def zero_vector(size, conductor=1):
    v = np.empty(size, dtype=object)
    zero = Scalar.zero(conductor)
    for i in range(size):
        v[i] = zero
    return v


def identity_matrix(n, conductor=1):
    M = zeros(n, n, conductor)
    one = Scalar.one(conductor)
    for i in range(n):
        M[i, i] = one
    return M


def stack_rows(rows, cols, conductor=1):
    """Object matrix from a list of equal-length Scalar sequences."""
    M = zeros(len(rows), cols, conductor)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            M[i, j] = v
    return M


def row_reduce(M):
    """Exact reduced row echelon form; returns (R, pivot columns)."""
    R = np.array(M, dtype=object, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if R[i, c]), None)
        if p is None:
            continue
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r, :] = R[r, :] * R[r, c].inverse()
        for i in range(rows):
            if i != r and R[i, c]:
                R[i, :] = R[i, :] - R[i, c] * R[r, :]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M):
    if M.shape[0] == 0 or M.shape[1] == 0:
        return 0
    return len(row_reduce(M)[1])


def nullspace(M, conductor=1):
    rows, cols = M.shape
    if rows == 0:
        R, pivots = zeros(0, cols, conductor), []
    else:
        R, pivots = row_reduce(M)
    basis = []
    for f in range(cols):
        if f in pivots:
            continue
        v = zero_vector(cols, conductor)
        v[f] = Scalar.one(conductor)
        for i, c in enumerate(pivots):
            v[c] = -R[i, f]
        basis.append(v)
    return basis


def solve(M, b, conductor=1):
    """Solve M x = b exactly; returns (particular solution or None, nullspace basis)."""
    rows, cols = M.shape
    if rows == 0:
        return zero_vector(cols, conductor), nullspace(M, conductor)
    A = np.empty((rows, cols + 1), dtype=object)
    A[:, :cols] = M
    A[:, cols] = b
    R, pivots = row_reduce(A)
    if cols in pivots:
        return None, []
    x = zero_vector(cols, conductor)
    for i, c in enumerate(pivots):
        x[c] = R[i, cols]
    return x, nullspace(M, conductor)


def inverse_matrix(M, conductor=1):
    n = M.shape[0]
    A = np.empty((n, 2 * n), dtype=object)
    A[:, :n] = M
    A[:, n:] = identity_matrix(n, conductor)
    R, pivots = row_reduce(A)
    if pivots[:n] != list(range(n)):
        raise InvalidParameter("matrix is not invertible")
    return R[:, n:]


def mat_vec(M, v, conductor=1):
    out = zero_vector(M.shape[0], conductor)
    for i in range(M.shape[0]):
        acc = Scalar.zero(conductor)
        for j in range(M.shape[1]):
            if M[i, j] and v[j]:
                acc = acc + M[i, j] * v[j]
        out[i] = acc
    return out


def mat_mul(A, B, conductor=1):
    out = zeros(A.shape[0], B.shape[1], conductor)
    for j in range(B.shape[1]):
        out[:, j] = mat_vec(A, B[:, j], conductor)
    return out


def matrices_equal(A, B):
    return A.shape == B.shape and all(a == b for a, b in zip(A.flat, B.flat))


class EchelonBasis:
    """Incrementally maintained reduced echelon basis of a subspace of K^n."""

    def __init__(self, size, conductor=1):
        self.size = size
        self.conductor = conductor
        self._rows = []

    def reduce(self, v):
        w = np.array(v, dtype=object, copy=True)
        for p, r in self._rows:
            if w[p]:
                w = w - w[p] * r
        return w

    def contains(self, v):
        return not any(self.reduce(v))

    def add(self, v):
        w = self.reduce(v)
        p = next((i for i in range(self.size) if w[i]), None)
        if p is None:
            return False
        w = w * w[p].inverse()
        self._rows = [(q, r - r[p] * w) if r[p] else (q, r) for q, r in self._rows]
        self._rows.append((p, w))
        self._rows.sort(key=lambda item: item[0])
        return True

    @property
    def dim(self):
        return len(self._rows)

    @property
    def pivots(self):
        return [p for p, _ in self._rows]

    def vectors(self):
        return [r for _, r in self._rows]


# --------------------------
# INTEGER SYSTEMS MOD N
# --------------------------
def _diagonalize(M, b, T):
    """Unimodular row ops (applied to b) and column ops (recorded in T) to diagonal form."""
    m = len(M)
    cols = len(M[0]) if m else 0
    for k in range(min(m, cols)):
        while True:
            best = None
            for i in range(k, m):
                for j in range(k, cols):
                    v = M[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
                if best and best[0] == 1:
                    break
            if best is None:
                return M, b, T
            _, pi, pj = best
            M[k], M[pi] = M[pi], M[k]
            b[k], b[pi] = b[pi], b[k]
            if pj != k:
                for row in M:
                    row[k], row[pj] = row[pj], row[k]
                for row in T:
                    row[k], row[pj] = row[pj], row[k]
            pivot = M[k][k]
            clean = True
            for i in range(k + 1, m):
                q = M[i][k] // pivot
                if q:
                    Mi, Mk = M[i], M[k]
                    for j in range(k, cols):
                        Mi[j] -= q * Mk[j]
                    b[i] -= q * b[k]
                if M[i][k]:
                    clean = False
            for j in range(k + 1, cols):
                q = M[k][j] // pivot
                if q:
                    for row in M:
                        row[j] -= q * row[k]
                    for row in T:
                        row[j] -= q * row[k]
                if M[k][j]:
                    clean = False
            if clean:
                break
    return M, b, T


def solve_mod(matrix, rhs, modulus):
    """Integer x with matrix . x = rhs (mod modulus), or None when no solution exists."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if m == 0:
        return [0] * n
    # matrix . x + modulus . y = rhs over Z
    M = [[int(v) for v in row] + [modulus if i == j else 0 for j in range(m)]
         for i, row in enumerate(matrix)]
    b = [int(v) for v in rhs]
    cols = n + m
    T = [[int(i == j) for j in range(cols)] for i in range(cols)]
    D, b, T = _diagonalize(M, b, T)
    z = [0] * cols
    for i in range(m):
        d = D[i][i]
        if d == 0:
            if b[i]:
                return None
            continue
        if b[i] % d:
            return None
        z[i] = b[i] // d
    return [sum(T[r][c] * z[c] for c in range(cols) if z[c]) % modulus for r in range(n)]
