"""Exact linear algebra over the integers and rationals.

Everything here is deliberately dependency-free: integer matrices use
fraction-free (Bareiss) elimination, rational matrices use Fraction
arithmetic, and lattice membership uses an incremental row-echelon form
over ZZ.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def dot(u, v):
    return sum(a * b for a, b in zip(u, v, strict=True))


def mat_vec(m, v):
    return [dot(row, v) for row in m]


def transpose(m):
    return [list(col) for col in zip(*m)]


def bareiss_det(matrix) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rref(matrix):
    """Reduced row echelon form over QQ.

    Returns (rows, pivot_columns); input rows may be int or Fraction.
    """
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix):
    """Primitive integer basis of the right kernel {x : M x = 0}.

    The kernel is computed over QQ and each basis vector is scaled to a
    primitive integer vector (free variable set to 1 in turn).
    """
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(clear_denominators(v))
    return basis


def int_echelon(matrix):
    """Forward elimination over ZZ by cross-multiplication, rows kept
    primitive by gcd division.  Returns (echelon_rows, pivot_columns)."""
    rows = [list(map(int, r)) for r in matrix if any(r)]
    echelon = []
    pivots = []
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        pivot_row = next((i for i, r in enumerate(rows) if r[col] != 0), None)
        if pivot_row is None:
            col += 1
            continue
        piv = rows.pop(pivot_row)
        g = 0
        for x in piv:
            g = gcd(g, x)
        if g > 1:
            piv = [x // g for x in piv]
        echelon.append(piv)
        pivots.append(col)
        p = piv[col]
        nxt = []
        for r in rows:
            if r[col]:
                r = [a * p - b * r[col] for a, b in zip(r, piv)]
                g = 0
                for x in r:
                    g = gcd(g, x)
                if g > 1:
                    r = [x // g for x in r]
            if any(r):
                nxt.append(r)
        rows = nxt
        col += 1
    return echelon, pivots


def int_kernel_basis(matrix, ncols=None):
    """Primitive integer basis of {x : M x = 0} via integer echelon form."""
    rows = [list(r) for r in matrix]
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(rows[0])
    echelon, pivots = int_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(echelon) - 1, -1, -1):
            row = echelon[r]
            p = pivots[r]
            s = sum(row[c] * x[c] for c in range(p + 1, ncols) if row[c] and x[c])
            x[p] = -Fraction(s, row[p])
        basis.append(clear_denominators(x))
    return basis


def clear_denominators(vec):
    """Scale a rational vector to a primitive integer vector."""
    denoms = 1
    for x in vec:
        x = Fraction(x)
        denoms = denoms * x.denominator // gcd(denoms, x.denominator)
    ints = [int(Fraction(x) * denoms) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def solve_unique(matrix, rhs):
    """Solve A x = b for square invertible A; exact Fractions."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs, strict=True)]
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [rows[i][n] for i in range(n)]


def in_span_f2(vectors, target) -> bool:
    """Membership of target in the GF(2)-span of the given integer vectors."""
    basis = {}  # leading index -> reduced bitmask row
    def insert(bits):
        while bits:
            lead = bits.bit_length() - 1
            if lead in basis:
                bits ^= basis[lead]
            else:
                basis[lead] = bits
                return False
        return True  # reduced to zero: dependent

    for v in vectors:
        insert(sum((x & 1) << i for i, x in enumerate(v)))
    return insert(sum((x & 1) << i for i, x in enumerate(target)))


class IntRowLattice:
    """Integer lattice given by generators, with exact membership testing.

    Rows are kept in echelon form; insertion uses gcd row operations, so
    the structure is a Hermite-style basis of the generated sublattice.
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self.rows = []  # echelon rows, pivot columns strictly increasing

    def add(self, vector):
        v = list(map(int, vector))
        if len(v) != self.dimension:
            raise ValueError("dimension mismatch")
        self._insert(v)

    def _insert(self, v):
        pos = 0
        while True:
            j = _lead(v)
            if j is None:
                return
            while pos < len(self.rows) and _lead(self.rows[pos]) < j:
                pos += 1
            if pos == len(self.rows) or _lead(self.rows[pos]) > j:
                self.rows.insert(pos, v)
                return
            row = self.rows[pos]
            a, b = row[j], v[j]
            if b % a == 0:
                q = b // a
                v = [x - q * y for x, y in zip(v, row)]
            else:
                g, s, t = _xgcd(a, b)
                new_row = [s * x + t * y for x, y in zip(row, v)]
                v = [(-b // g) * x + (a // g) * y for x, y in zip(row, v)]
                self.rows[pos] = new_row

    def __contains__(self, vector):
        v = list(map(int, vector))
        for row in self.rows:
            j = _lead(row)
            if v[j] == 0:
                continue
            if v[j] % row[j] != 0:
                return False
            q = v[j] // row[j]
            v = [x - q * y for x, y in zip(v, row)]
        return all(x == 0 for x in v)


def _lead(v):
    for j, x in enumerate(v):
        if x != 0:
            return j
    return None


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def unimodular_column_reduction(w):
    """Unimodular U with w @ U = (g, 0, ..., 0), g = gcd of the entries.

    Returns (g, U) where U is n x n with columns U[:,0..n-1]; the first
    column satisfies w . U[:,0] = g and the remaining columns span the
    kernel of the covector w.
    """
    n = len(w)
    w = list(map(int, w))
    cols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]  # columns of U
    vals = w[:]
    while True:
        nz = [i for i, x in enumerate(vals) if x != 0]
        if not nz:
            raise ValueError("zero covector")
        if len(nz) == 1:
            k = nz[0]
            if k != 0:
                vals[0], vals[k] = vals[k], vals[0]
                cols[0], cols[k] = cols[k], cols[0]
            if vals[0] < 0:
                vals[0] = -vals[0]
                cols[0] = [-x for x in cols[0]]
            U = [[cols[j][i] for j in range(n)] for i in range(n)]
            return vals[0], U
        nz.sort(key=lambda i: abs(vals[i]))
        i, j = nz[0], nz[1]
        q = vals[j] // vals[i]
        vals[j] -= q * vals[i]
        cols[j] = [x - q * y for x, y in zip(cols[j], cols[i])]
