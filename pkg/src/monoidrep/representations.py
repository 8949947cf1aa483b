"""Rational matrix representations of finite monoids.

A representation assigns one square matrix over the rationals to every
monoid element so that the identity maps to the identity matrix and
matrices multiply along the Cayley table.  On top of that sit characters
(trace functions), faithfulness tests, tensor powers, symmetric powers
realised on the monomial basis, restriction to local monoids eMe, and the
two counts that drive the coverage theorems: the number of distinct
character values and the number of distinct characteristic polynomials.

Internally produced representations (tensor powers, symmetric powers,
direct sums, restrictions) are homomorphisms by construction, so for
speed the exhaustive product check is skipped for them; ``validate()``
re-runs it on demand and the test suite does exactly that.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .linalg import (
    Echelon,
    Matrix,
    ZERO,
    ONE,
    charpoly,
    complete_homogeneous_from_power_sums,
    kron,
    power_traces,
)
from .monoids import Monoid, local_monoid, nt_monoid, submonoid


class Representation:
    """Matrices indexed by the elements of a finite monoid."""

    def __init__(self, monoid: Monoid, matrices, check=True):
        matrices = tuple(m if isinstance(m, Matrix) else Matrix(m) for m in matrices)
        if len(matrices) != monoid.size:
            raise ValueError("need exactly one matrix per monoid element")
        dim = matrices[monoid.identity].nrows
        for i, m in enumerate(matrices):
            if not m.is_square or m.nrows != dim:
                raise ValueError(f"matrix for element {i} is not {dim}x{dim}")
        self.monoid = monoid
        self.dim = dim
        self.matrices = matrices
        if check:
            self.validate()

    def validate(self):
        """Exhaustively re-check the identity image and all products."""
        if self.matrices[self.monoid.identity] != Matrix.identity(self.dim):
            raise ValueError("identity element does not map to the identity matrix")
        table = self.monoid.table
        for a in range(self.monoid.size):
            ma = self.matrices[a]
            for b in range(self.monoid.size):
                if ma * self.matrices[b] != self.matrices[table[a][b]]:
                    raise ValueError(
                        f"not a homomorphism: matrices at the pair ({a}, {b}) "
                        f"do not multiply to the matrix at {table[a][b]}")
        return self

    def matrix(self, x) -> Matrix:
        return self.matrices[x]

    def __repr__(self):
        return f"Representation(dim={self.dim}, monoid_size={self.monoid.size})"


def build_representation(m: Monoid, matrices) -> Representation:
    """Validated representation from one matrix per element."""
    return Representation(m, matrices, check=True)


def natural_representation(m: Monoid) -> Representation:
    """0/1 matrices of a transformation monoid acting on basis vectors.

    The element mapping point j to f(j) sends basis vector e_j to e_f(j).
    Only monoids built by ``from_transformations`` carry the data needed
    here.
    """
    if m.transformations is None:
        raise ValueError("monoid does not carry transformation data")
    degree = len(m.transformations[0]) if m.transformations else 0
    mats = []
    for f in m.transformations:
        rows = [[ZERO] * degree for _ in range(degree)]
        for j, img in enumerate(f):
            rows[img][j] = ONE
        mats.append(Matrix(rows))
    return Representation(m, mats, check=True)


def matrix_representation(m: Monoid) -> Representation:
    """The defining representation of a matrix-closure monoid."""
    if m.matrix_elements is None:
        raise ValueError("monoid does not carry matrix data")
    return Representation(m, m.matrix_elements, check=True)


def nt_paper_representation(t) -> Representation:
    """The faithful two-dimensional representation of N_t.

    The zero element maps to the zero matrix, the identity to I, and
    element j (2 <= j <= t) to [[0, j], [0, 0]].  Its character takes the
    two values 2 (at the identity) and 0 (everywhere else); note the value
    at the identity is the dimension 2, not 1.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    m = nt_monoid(t)
    mats = [Matrix([[ZERO, ZERO], [ZERO, ZERO]]), Matrix.identity(2)]
    for j in range(2, t + 1):
        mats.append(Matrix([[ZERO, Fraction(j)], [ZERO, ZERO]]))
    return Representation(m, mats, check=True)


def regular_representation(m: Monoid) -> Representation:
    """Left multiplication on the monoid basis; always faithful."""
    n = m.size
    mats = []
    for x in range(n):
        rows = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            rows[m.table[x][j]][j] = ONE
        mats.append(Matrix(rows))
    return Representation(m, mats, check=False)


def trivial_representation(m: Monoid) -> Representation:
    """Every element acting as [[1]] on a one-dimensional space."""
    one = Matrix([[ONE]])
    return Representation(m, (one,) * m.size, check=False)


def is_faithful(rho: Representation):
    """Whether distinct elements get distinct matrices.

    Returns (True, None) or (False, (a, b)) with the first coinciding
    pair in index order.
    """
    seen = {}
    for i, mat in enumerate(rho.matrices):
        if mat in seen:
            return False, (seen[mat], i)
        seen[mat] = i
    return True, None


def character(rho: Representation):
    """Trace of each element matrix, indexed like the monoid."""
    return tuple(m.trace() for m in rho.matrices)


def distinct_character_values(rho: Representation):
    """Sorted tuple of the values taken by the character; r is its length."""
    return tuple(sorted(set(character(rho))))


def distinct_charpolys(rho: Representation):
    """Sorted tuple of the characteristic polynomials of the element
    matrices; s is its length."""
    return tuple(sorted({charpoly(m) for m in rho.matrices}))


def tensor_power(rho: Representation, i) -> Representation:
    """The i-fold Kronecker power; i = 0 is the trivial representation."""
    if i < 0:
        raise ValueError("tensor power exponent must be nonnegative")
    if i == 0:
        return trivial_representation(rho.monoid)
    mats = list(rho.matrices)
    for _ in range(i - 1):
        mats = [kron(a, b) for a, b in zip(mats, rho.matrices)]
    return Representation(rho.monoid, mats, check=False)


def direct_sum(rhos, monoid=None) -> Representation:
    """Block-diagonal sum of representations of one monoid."""
    rhos = list(rhos)
    if not rhos:
        if monoid is None:
            raise ValueError("an empty direct sum needs an explicit monoid")
        return Representation(monoid, (Matrix((), ncols=0),) * monoid.size, check=False)
    base = rhos[0].monoid
    for r in rhos[1:]:
        if r.monoid != base:
            raise ValueError("direct sum needs representations of one monoid")
    dim = sum(r.dim for r in rhos)
    mats = []
    for x in range(base.size):
        rows = [[ZERO] * dim for _ in range(dim)]
        off = 0
        for r in rhos:
            block = r.matrices[x]
            for i in range(r.dim):
                row = rows[off + i]
                brow = block[i]
                for j in range(r.dim):
                    row[off + j] = brow[j]
            off += r.dim
        mats.append(Matrix(rows, ncols=dim))
    return Representation(base, mats, check=False)


def monomial_basis(n, d):
    """Exponent tuples of length n summing to d, in descending lex order.

    For n = 2, d = 2 this is (2,0), (1,1), (0,2) -- i.e. x1^2, x1 x2,
    x2^2.  The count is C(n+d-1, d).
    """
    if n == 0:
        return [()] if d == 0 else []
    out = []

    def rec(prefix, remaining, pos):
        if pos == n - 1:
            out.append(prefix + (remaining,))
            return
        for a in range(remaining, -1, -1):
            rec(prefix + (a,), remaining - a, pos + 1)

    rec((), d, 0)
    return out


def sym_power(rho: Representation, d) -> Representation:
    """Degree-d symmetric power on the monomial basis.

    The column at monomial x^alpha expands prod_j (m . x_j)^(alpha_j) in
    the monomial basis, where m . x_j is the linear form given by column j
    of the element matrix.  Dimension is C(n+d-1, d).
    """
    if d < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    n = rho.dim
    basis = monomial_basis(n, d)
    pos = {mono: k for k, mono in enumerate(basis)}
    dim = len(basis)
    unit = tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))

    mats = []
    for mat in rho.matrices:
        cols = []
        for alpha in basis:
            # expand the product of column linear forms as a sparse
            # polynomial {exponent tuple: coefficient}
            acc = {(0,) * n: ONE}
            for j, a in enumerate(alpha):
                col = [(i, mat[i][j]) for i in range(n) if mat[i][j]]
                for _ in range(a):
                    nxt = {}
                    for mono, c in acc.items():
                        for i, entry in col:
                            key = tuple(e + u for e, u in zip(mono, unit[i]))
                            nxt[key] = nxt.get(key, ZERO) + c * entry
                    acc = nxt
                if not acc:
                    break
            cols.append(acc)
        rows = [[ZERO] * dim for _ in range(dim)]
        for k, acc in enumerate(cols):
            for mono, c in acc.items():
                if c:
                    rows[pos[mono]][k] = c
        mats.append(Matrix(rows, ncols=dim))
    return Representation(rho.monoid, mats, check=False)


def sym_power_character(rho: Representation, x, d) -> Fraction:
    """Trace of the degree-d symmetric power at element x.

    Evaluated as the complete homogeneous symmetric function of the
    eigenvalue multiset through Newton's identities on the power traces
    tr(rho(x)^i), so no eigenvalues are ever extracted and the arithmetic
    stays rational.
    """
    if d == 0:
        return ONE
    return complete_homogeneous_from_power_sums(power_traces(rho.matrices[x], d), d)


def sym_power_dim(n, d):
    return comb(n + d - 1, d) if n > 0 else (1 if d == 0 else 0)


def restrict_to_local(rho: Representation, e) -> Representation:
    """The action of the local monoid eMe on the column space of rho(e).

    The basis of e.V is the canonical echelon basis of the column space
    of the idempotent's matrix; the result is a representation of the
    monoid eMe (labels inherited), whose character is the restriction of
    the original character.
    """
    m = rho.monoid
    members = local_monoid(m, e)  # validates idempotency
    local = submonoid(m, members, e)
    pe = rho.matrices[e]
    ech = Echelon(rho.dim)
    for col in pe.transpose().rows:
        ech.insert(col)
    basis = [tuple(row) for row in ech.rows]
    pivots = list(ech.pivots)
    k = len(basis)
    mats = []
    for x in members:
        mx = rho.matrices[x]
        rows = [[ZERO] * k for _ in range(k)]
        for j, b in enumerate(basis):
            w = mx.apply(b)
            # basis is in RREF, so coordinates are read off pivot columns
            coords = [w[p] for p in pivots]
            residual = list(w)
            for s, c in enumerate(coords):
                if c:
                    for t, val in enumerate(basis[s]):
                        residual[t] -= c * val
            if any(residual):
                raise RuntimeError(
                    "column space of the idempotent is not invariant; "
                    "the input is not a representation")
            for s in range(k):
                rows[s][j] = coords[s]
        mats.append(Matrix(rows, ncols=k))
    return Representation(local, mats, check=True)


def character_kernel(rho: Representation):
    """Elements whose character value equals the dimension.

    Computed twice, independently: as {x : trace = dim} and as
    {x : matrix = I}.  The two sets coincide for every representation
    over a characteristic-zero field; a mismatch means the arithmetic
    itself is broken, so it raises rather than returning.
    """
    dim = Fraction(rho.dim)
    by_trace = tuple(x for x, mat in enumerate(rho.matrices) if mat.trace() == dim)
    ident = Matrix.identity(rho.dim)
    by_matrix = tuple(x for x, mat in enumerate(rho.matrices) if mat == ident)
    if by_trace != by_matrix:
        raise RuntimeError(
            f"character kernel mismatch: trace route {by_trace} vs "
            f"matrix route {by_matrix}")
    return by_trace
