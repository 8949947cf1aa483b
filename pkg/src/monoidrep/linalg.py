"""Exact dense linear algebra over the rationals.

Everything in this module is built on ``fractions.Fraction``: matrices,
univariate polynomials, echelon reduction, characteristic polynomials and
the Newton-identity conversions between power sums, complete homogeneous
symmetric functions and elementary symmetric functions.  There is no
floating point anywhere; every result is exact.

Matrices and polynomials are immutable once constructed, so all functions
here are safe to call from multiple threads.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction


def as_fraction(x) -> Fraction:
    """Coerce an int, string ("p/q" or "p") or Fraction to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


ZERO = Fraction(0)
ONE = Fraction(1)


class Matrix:
    """Immutable dense matrix with exact rational entries.

    Entries are stored as a tuple of row tuples; ``m[i]`` is row ``i``.
    Empty matrices (0 rows and/or 0 columns) are allowed.
    """

    def __init__(self, rows, ncols=None):
        self.rows = tuple(tuple(as_fraction(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(row) != self.ncols for row in self.rows):
                raise ValueError("matrix rows have unequal lengths")
        else:
            self.ncols = 0 if ncols is None else ncols

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n))
                         for i in range(n)))

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(tuple((ZERO,) * ncols for _ in range(nrows)), ncols=ncols)

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, i):
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        return (isinstance(other, Matrix)
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]"
                         for row in self.rows)
        return f"Matrix([{body}])" if self.ncols or self.nrows else "Matrix([])"

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("matrix shapes differ")
        return Matrix(tuple(tuple(a + b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.rows, other.rows)),
                      ncols=self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = as_fraction(c)
        return Matrix(tuple(tuple(c * x for x in row) for row in self.rows),
                      ncols=self.ncols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("inner dimensions differ")
            bt = other.transpose().rows
            return Matrix(tuple(tuple(sum(a * b for a, b in zip(row, col))
                                      for col in bt)
                                for row in self.rows),
                          ncols=other.ncols)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, k):
        if not self.is_square:
            raise ValueError("matrix power needs a square matrix")
        if k < 0:
            raise ValueError("negative matrix powers are not supported")
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def transpose(self):
        if not self.rows:
            return Matrix(tuple(() for _ in range(self.ncols)), ncols=0)
        return Matrix(tuple(zip(*self.rows)), ncols=self.nrows)

    def trace(self):
        if not self.is_square:
            raise ValueError("trace needs a square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), ZERO)

    def flatten(self):
        """Entries in row-major order, as one tuple."""
        return tuple(x for row in self.rows for x in row)

    def apply(self, vec):
        """Matrix-vector product, returning a tuple."""
        if len(vec) != self.ncols:
            raise ValueError("vector length differs from column count")
        return tuple(sum((a * b for a, b in zip(row, vec)), ZERO)
                     for row in self.rows)

    def inverse(self):
        """Inverse by Gauss-Jordan elimination; raises on singular input."""
        if not self.is_square:
            raise ValueError("only square matrices can be inverted")
        n = self.nrows
        aug = [list(row) + [ONE if i == j else ZERO for j in range(n)]
               for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = ONE / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    c = aug[r][col]
                    aug[r] = [a - c * b for a, b in zip(aug[r], aug[col])]
        return Matrix(tuple(tuple(row[n:]) for row in aug), ncols=n)


class Echelon:
    """A row space accumulated one vector at a time, kept in RREF.

    Rows are stored fully reduced with pivot entry 1, ordered by pivot
    column.  Feeding the rows of a matrix through ``insert`` therefore
    yields its reduced row echelon form, and large systems can be reduced
    without ever materialising them.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = []
        self.rows = []

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Reduce ``vec`` modulo the stored row space; returns a list."""
        v = [as_fraction(x) for x in vec]
        for p, row in zip(self.pivots, self.rows):
            c = v[p]
            if c:
                for j in range(p, self.ncols):
                    if row[j]:
                        v[j] -= c * row[j]
        return v

    def contains(self, vec):
        return not any(self.reduce(vec))

    def insert(self, vec):
        """Add ``vec`` to the row space; True if it enlarged the space."""
        v = self.reduce(vec)
        p = next((j for j, c in enumerate(v) if c), None)
        if p is None:
            return False
        inv = ONE / v[p]
        v = [c * inv for c in v]
        for i, row in enumerate(self.rows):
            c = row[p]
            if c:
                self.rows[i] = [a - c * b for a, b in zip(row, v)]
        k = bisect_left(self.pivots, p)
        self.pivots.insert(k, p)
        self.rows.insert(k, v)
        return True

    def kernel_basis(self):
        """Canonical kernel basis of the accumulated constraint rows.

        One vector per free column, free columns in ascending order; the
        vector for free column f has entry 1 there and the negated pivot
        row entries elsewhere.
        """
        pivot_set = set(self.pivots)
        basis = []
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            v = [ZERO] * self.ncols
            v[f] = ONE
            for p, row in zip(self.pivots, self.rows):
                if row[f]:
                    v[p] = -row[f]
            basis.append(tuple(v))
        return basis


def rank(m: Matrix) -> int:
    """Exact rank of a matrix."""
    ech = Echelon(m.ncols)
    for row in m.rows:
        ech.insert(row)
    return ech.rank


def kernel_basis(m: Matrix):
    """Canonical basis of the right kernel {v : m v = 0}.

    Vectors are indexed by the free columns of the RREF of ``m``, in
    ascending column order, each normalised with entry 1 at its free
    column.  Returns a list of tuples; empty for an injective matrix.
    """
    ech = Echelon(m.ncols)
    for row in m.rows:
        ech.insert(row)
    return ech.kernel_basis()


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, left factor major.

    Row (i, k) and column (j, l) of the result, with the pairs flattened
    row-major, hold a[i][j] * b[k][l].
    """
    out = []
    for arow in a.rows:
        for brow in b.rows:
            out.append(tuple(x * y for x in arow for y in brow))
    return Matrix(out, ncols=a.ncols * b.ncols)


class Polynomial:
    """Univariate polynomial over the rationals, coefficients by degree.

    The zero polynomial has an empty coefficient tuple; otherwise the
    leading coefficient is nonzero.
    """

    def __init__(self, coeffs=()):
        c = [as_fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self):
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other):
        # Degree first, then lexicographic on coefficients; only used to
        # order polynomial sets deterministically in reports.
        return (len(self.coeffs), self.coeffs) < (len(other.coeffs), other.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return format_polynomial(self)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[i] + other[i] for i in range(n)))

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[i] - other[i] for i in range(n)))

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_fraction(other)
            return Polynomial(tuple(c * x for x in self.coeffs))
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def __rmul__(self, other):
        return self * other

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [ZERO] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        d = other.degree
        while len(rem) - 1 >= d and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < d:
                break
            c = rem[-1] / lead
            k = len(rem) - 1 - d
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] -= c * b
            rem.pop()
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def degree_reverse(self, n):
        """Coefficient reversal t^n * p(1/t), for a polynomial of degree <= n."""
        if self.degree > n:
            raise ValueError("degree exceeds reversal length")
        padded = list(self.coeffs) + [ZERO] * (n + 1 - len(self.coeffs))
        return Polynomial(tuple(reversed(padded)))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor via the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def format_polynomial(p: Polynomial, var="t"):
    """Human-readable form like "t^2 - 2t + 1"."""
    if p.is_zero:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p[i]
        if not c:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            mag = abs(c)
            if mag == 1:
                coeff = ""
            elif mag.denominator == 1:
                coeff = str(mag)
            else:
                coeff = f"({mag})"
            body = f"{coeff}{var}" if i == 1 else f"{coeff}{var}^{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def charpoly(m: Matrix) -> Polynomial:
    """Characteristic polynomial det(tI - m), monic of degree n.

    Computed by the Faddeev-LeVerrier recurrence, which only ever divides
    by the integers 1..n and so stays exact over the rationals.
    """
    if not m.is_square:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.nrows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = Matrix.identity(n)
    for k in range(1, n + 1):
        am = m * mk
        c = -am.trace() / k
        coeffs[n - k] = c
        mk = am + Matrix.identity(n).scale(c)
    return Polynomial(coeffs)


def power_traces(m: Matrix, k: int):
    """(trace(m), trace(m^2), ..., trace(m^k)) by repeated multiplication."""
    if not m.is_square:
        raise ValueError("power traces need a square matrix")
    if k < 1:
        raise ValueError("k must be at least 1")
    out = []
    mk = m
    for i in range(k):
        if i:
            mk = mk * m
        out.append(mk.trace())
    return tuple(out)


def complete_homogeneous_from_power_sums(p, d: int) -> Fraction:
    """h_d of any value multiset whose power sums are p[0], p[1], ...

    Uses the Newton identity d*h_d = sum_{i=1..d} p_i h_{d-i} with h_0 = 1,
    so it needs the first d power sums and characteristic zero, nothing
    else.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if len(p) < d:
        raise ValueError(f"need {d} power sums, got {len(p)}")
    h = [ONE]
    for k in range(1, d + 1):
        s = sum((as_fraction(p[i - 1]) * h[k - i] for i in range(1, k + 1)), ZERO)
        h.append(s / k)
    return h[d]


def charpoly_from_power_traces(p, n: int) -> Polynomial:
    """Monic degree-n polynomial whose roots have power sums p[0..n-1].

    Newton's identities recover the elementary symmetric functions e_k
    from the power sums; the coefficient of t^(n-k) is then (-1)^k e_k.
    Composing with ``power_traces`` reproduces ``charpoly`` exactly.
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    if len(p) < n:
        raise ValueError(f"need {n} power traces, got {len(p)}")
    e = [ONE]
    for k in range(1, n + 1):
        s = ZERO
        sign = 1
        for i in range(1, k + 1):
            term = e[k - i] * as_fraction(p[i - 1])
            s += term if sign > 0 else -term
            sign = -sign
        e.append(s / k)
    coeffs = [ZERO] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = e[k] if k % 2 == 0 else -e[k]
    return Polynomial(coeffs)
