"""Exact integer linear algebra: incremental rank, kernels, primitives.

Everything works over the rationals but is carried out fraction-free in
big integers (cross-multiplication elimination with gcd reduction), so
no floating point and no precision loss anywhere.
"""

import math
from fractions import Fraction


def gcd_reduce(vec):
    """Divide out the gcd of the entries (zero vector passes through)."""
    vec = tuple(vec)
    g = 0
    for x in vec:
        g = math.gcd(g, abs(x))
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def primitive(vec):
    """Gcd-1 representative with positive leading nonzero entry."""
    v = gcd_reduce(vec)
    for x in v:
        if x:
            if x < 0:
                v = tuple(-y for y in v)
            break
    return v


class IncrementalRank:
    """Streaming exact rank of a growing set of integer vectors.

    Keeps a fraction-free row echelon basis; add() reports whether the
    vector increased the rank.
    """

    def __init__(self, width):
        self.width = width
        self.basis = []   # list of (pivot index, reduced row)

    @property
    def rank(self):
        return len(self.basis)

    def _reduce(self, row):
        row = list(row)
        for piv, b in self.basis:
            if row[piv]:
                f, g = b[piv], row[piv]
                row = [f * x - g * y for x, y in zip(row, b)]
        return gcd_reduce(row)

    def add(self, row):
        row = self._reduce(row)
        for piv, x in enumerate(row):
            if x:
                self.basis.append((piv, tuple(row)))
                self.basis.sort(key=lambda t: t[0])
                return True
        return False

    def contains(self, row):
        """Whether row lies in the span of the vectors seen so far."""
        return not any(self._reduce(row))


def exact_rank(rows):
    ir = IncrementalRank(len(rows[0]) if rows else 0)
    for r in rows:
        ir.add(r)
    return ir.rank


def nullspace(rows, width):
    """Primitive integer basis of {u in Q^width : u . r = 0 for all rows}.

    Gaussian elimination over Fraction followed by free-variable basis
    extraction and denominator clearing.
    """
    mat = [[Fraction(x) for x in r] for r in rows]
    n_rows = len(mat)
    pivots = []   # (row, col)
    piv_r = 0
    for col in range(width):
        sel = None
        for r in range(piv_r, n_rows):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[piv_r], mat[sel] = mat[sel], mat[piv_r]
        pv = mat[piv_r][col]
        mat[piv_r] = [x / pv for x in mat[piv_r]]
        for r in range(n_rows):
            if r != piv_r and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[piv_r])]
        pivots.append((piv_r, col))
        piv_r += 1
        if piv_r == n_rows:
            break
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(width):
        if free in pivot_cols:
            continue
        sol = [Fraction(0)] * width
        sol[free] = Fraction(1)
        for r, c in pivots:
            sol[c] = -mat[r][free]
        lcm = 1
        for x in sol:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        basis.append(primitive(int(x * lcm) for x in sol))
    return basis


def left_kernel_of_columns(columns, k):
    """Kernel of the span of `columns`, each a length-k vector."""
    return nullspace(columns, k)


def rank_of_columns(columns, k, stop_at=None):
    ir = IncrementalRank(k)
    for col in columns:
        if ir.add(col) and stop_at is not None and ir.rank >= stop_at:
            break
    return ir.rank
