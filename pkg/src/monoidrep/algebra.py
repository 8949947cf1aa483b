"""The rational monoid algebra: radical, annihilators, coverage checks.

The algebra QM has the monoid elements as basis; its vectors are plain
coefficient tuples.  Two subspaces of QM drive everything here:

* the radical, computed in characteristic zero as the kernel of the trace
  form (x, y) -> trace of left multiplication by x*y on the algebra;
* the annihilator of a module W, the kernel of the linear map sending a
  coefficient vector c to sum_m c_m W(m).

The bridge to representation theory is the containment test:  every
simple QM-module occurs as a composition factor of W exactly when
Ann(W) is contained in Rad(QM).  If every simple occurs, anything
annihilating W annihilates every simple and hence lies in the radical;
conversely a missing simple yields a primitive idempotent killing W,
and a nonzero idempotent is never nilpotent, so the containment fails.
That single test replaces any explicit construction of simple modules.

Verifiers built on it: the tensor-power coverage bound (powers 0..r-1
where r counts distinct character values), the symmetric-power bound
(degrees 0 .. dim*s - 1 where s counts distinct characteristic
polynomials), the positive-power refinement for monoids without zero,
and the coarse |M|-power bound.  Scans for the minimal covering and
minimal faithful power use an incremental constraint chain so tensor
exponents up to |M| stay cheap: the annihilator of V^(tensor k) is the
orthogonal complement of the span of all k-fold entrywise products of
matrix-entry functions M -> Q, a subspace of Q^M that never grows past
dimension |M|.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Echelon, Matrix, ZERO, ONE, as_fraction
from .monoids import Monoid, has_zero
from .representations import (
    Representation,
    direct_sum,
    distinct_character_values,
    distinct_charpolys,
    is_faithful,
    sym_power,
    tensor_power,
)

# Exact Gram matrices cost O(|M|^3); beyond a few hundred elements this
# stops being a desk-scale computation.
SIZE_GUARD = 300


class Subspace:
    """A linear subspace of Q^ambient with a canonical RREF basis.

    Two Subspace objects are equal exactly when they describe the same
    subspace, because the reduced echelon basis is unique.
    """

    def __init__(self, ambient, vectors=()):
        ech = Echelon(ambient)
        for v in vectors:
            if len(v) != ambient:
                raise ValueError("vector length differs from ambient dimension")
            ech.insert(v)
        self.ambient = ambient
        self.basis = tuple(tuple(row) for row in ech.rows)
        self._pivots = tuple(ech.pivots)

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, vec):
        """Residual of vec modulo this subspace, as a tuple."""
        v = [as_fraction(x) for x in vec]
        for p, row in zip(self._pivots, self.basis):
            c = v[p]
            if c:
                for j in range(p, self.ambient):
                    if row[j]:
                        v[j] -= c * row[j]
        return tuple(v)

    def contains(self, vec):
        return not any(self.reduce(vec))

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(ambient={self.ambient}, dim={self.dim})"


def subspace_leq(a: Subspace, b: Subspace):
    """Whether a is contained in b.

    Returns (True, None) or (False, w) where w is the first basis vector
    of a outside b.
    """
    if a.ambient != b.ambient:
        raise ValueError("subspaces live in different ambient spaces")
    for v in a.basis:
        if not b.contains(v):
            return False, v
    return True, None


def left_regular_matrix(m: Monoid, coeffs) -> Matrix:
    """Matrix of left multiplication by sum_x coeffs[x] x on the basis M."""
    n = m.size
    if len(coeffs) != n:
        raise ValueError("coefficient vector length differs from monoid size")
    rows = [[ZERO] * n for _ in range(n)]
    for x, c in enumerate(coeffs):
        c = as_fraction(c)
        if c:
            tx = m.table[x]
            for j in range(n):
                rows[tx[j]][j] += c
    return Matrix(rows, ncols=n)


def algebra_mul(m: Monoid, a, b):
    """Product of two algebra elements (convolution over the table)."""
    n = m.size
    out = [ZERO] * n
    for x, ca in enumerate(a):
        if ca:
            tx = m.table[x]
            for y, cb in enumerate(b):
                if cb:
                    out[tx[y]] += as_fraction(ca) * as_fraction(cb)
    return tuple(out)


def radical_basis(m: Monoid, force=False) -> Subspace:
    """Radical of QM as a subspace, via the trace-form kernel.

    In characteristic zero the radical is exactly the kernel of the
    bilinear form (x, y) -> trace of left multiplication by x*y.  The
    trace of left multiplication by a basis element z is the number of
    fixed points {j : z*j = j}, so the Gram matrix is integral and the
    radical drops out of one exact kernel computation.
    """
    n = m.size
    if n > SIZE_GUARD and not force:
        raise ValueError(
            f"monoid has {n} > {SIZE_GUARD} elements; exact O(n^3) radical "
            "computation refused (pass force=True to override)")
    fix = [sum(1 for j in range(n) if m.table[z][j] == j) for z in range(n)]
    ech = Echelon(n)
    for x in range(n):
        tx = m.table[x]
        ech.insert([Fraction(fix[tx[y]]) for y in range(n)])
    return Subspace(n, ech.kernel_basis())


def annihilator_basis(rho: Representation) -> Subspace:
    """Annihilator of the module in QM: {c : sum_x c_x rho(x) = 0}.

    The defining system has one constraint row per matrix entry position,
    with column x holding that entry of rho(x); rows stream through an
    incremental echelon so only the O(|M|) pivot rows are ever stored.
    """
    n = rho.monoid.size
    ech = Echelon(n)
    dim = rho.dim
    mats = rho.matrices
    for i in range(dim):
        for j in range(dim):
            row = [mats[x][i][j] for x in range(n)]
            if any(row):
                ech.insert(row)
        if ech.rank == n:
            break
    return Subspace(n, ech.kernel_basis())


def all_simples_appear(rho: Representation, radical: Subspace | None = None):
    """Whether every simple QM-module is a composition factor of rho.

    Decided as Ann(rho) <= Rad(QM).  Returns (True, None) or (False, w)
    with w an explicit algebra element annihilating the module without
    being nilpotent -- the auditable witness that some simple is missed.
    """
    if radical is None:
        radical = radical_basis(rho.monoid)
    return subspace_leq(annihilator_basis(rho), radical)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one coverage check, JSON-serialisable."""

    theorem: str
    holds: bool
    r: int | None
    s: int | None
    bound: int
    powers_used: tuple
    dim_rad: int
    dim_ann: int
    witness: tuple | None

    def to_json_dict(self):
        return {
            "theorem": self.theorem,
            "r": self.r,
            "s": self.s,
            "dim_rad": self.dim_rad,
            "dim_ann": self.dim_ann,
            "holds": self.holds,
            "witness": [str(x) for x in self.witness] if self.witness else None,
            "powers_used": list(self.powers_used),
        }


def _require_faithful(rho):
    ok, pair = is_faithful(rho)
    if not ok:
        a, b = pair
        labels = rho.monoid.labels
        raise ValueError(
            f"representation is not faithful: elements {labels[a]!r} and "
            f"{labels[b]!r} have the same matrix")


def verify_tensor_theorem(rho: Representation, powers_cap=None,
                          radical: Subspace | None = None) -> VerificationReport:
    """Check that tensor powers 0..r-1 already reach every simple module.

    r is the number of distinct character values of the (faithful) input.
    A False result would contradict the theorem and therefore signals an
    implementation bug; the report carries the witness for auditing.
    ``radical`` overrides the computed radical (negative-path testing).
    """
    _require_faithful(rho)
    r = len(distinct_character_values(rho))
    if powers_cap is not None and r - 1 > powers_cap:
        raise ValueError(f"tensor bound r-1 = {r - 1} exceeds the cap {powers_cap}")
    w = direct_sum([tensor_power(rho, i) for i in range(r)])
    rad = radical_basis(rho.monoid) if radical is None else radical
    ann = annihilator_basis(w)
    holds, witness = subspace_leq(ann, rad)
    return VerificationReport("tensor", holds, r, None, r - 1,
                              tuple(range(r)), rad.dim, ann.dim, witness)


def verify_symmetric_theorem(rho: Representation, powers_cap=None,
                             radical: Subspace | None = None) -> VerificationReport:
    """Check that symmetric powers 0..dim*s-1 reach every simple module.

    s is the number of distinct characteristic polynomials of the element
    matrices of the (faithful) input.
    """
    _require_faithful(rho)
    s = len(distinct_charpolys(rho))
    bound = rho.dim * s
    if powers_cap is not None and bound - 1 > powers_cap:
        raise ValueError(
            f"symmetric bound dim*s-1 = {bound - 1} exceeds the cap {powers_cap}")
    w = direct_sum([sym_power(rho, d) for d in range(bound)], monoid=rho.monoid)
    rad = radical_basis(rho.monoid) if radical is None else radical
    ann = annihilator_basis(w)
    holds, witness = subspace_leq(ann, rad)
    return VerificationReport("symmetric", holds, None, s, bound - 1,
                              tuple(range(bound)), rad.dim, ann.dim, witness)


def verify_positive_power_refinement(rho: Representation, powers_cap=None,
                                     radical: Subspace | None = None) -> VerificationReport:
    """Check powers 1..r suffice when the monoid has no zero element.

    With a zero element acting as zero the trivial module never occurs in
    a positive tensor power, so such monoids are rejected outright.
    """
    _require_faithful(rho)
    z = has_zero(rho.monoid)
    if z is not None:
        raise ValueError(
            f"monoid has a zero element ({rho.monoid.labels[z]!r}); the "
            "positive-power refinement does not apply")
    r = len(distinct_character_values(rho))
    if powers_cap is not None and r > powers_cap:
        raise ValueError(f"tensor bound r = {r} exceeds the cap {powers_cap}")
    w = direct_sum([tensor_power(rho, i) for i in range(1, r + 1)])
    rad = radical_basis(rho.monoid) if radical is None else radical
    ann = annihilator_basis(w)
    holds, witness = subspace_leq(ann, rad)
    return VerificationReport("positive-refinement", holds, r, None, r,
                              tuple(range(1, r + 1)), rad.dim, ann.dim, witness)


def _entry_functions(rho):
    """Independent basis of the span of x -> rho(x)[i][j] inside Q^M."""
    n = rho.monoid.size
    ech = Echelon(n)
    for i in range(rho.dim):
        for j in range(rho.dim):
            ech.insert([rho.matrices[x][i][j] for x in range(n)])
    return [list(row) for row in ech.rows]


def tensor_annihilator_chain(rho: Representation, kmax):
    """Yield (k, Ann(V^0 + V^1 + ... + V^k)) for k = 0..kmax.

    Never builds a Kronecker power.  The annihilator of the k-th tensor
    power is the orthogonal complement, in Q^M, of the span E_k of all
    k-fold entrywise products of matrix-entry functions; E_{k+1} is
    spanned by products of an E_k basis with an E_1 basis, and the
    accumulated span F_k = E_0 + ... + E_k has the chain's annihilator as
    its kernel.  Once E_k lands inside F_{k-1} the whole chain has
    stabilised and no further products are formed.
    """
    n = rho.monoid.size
    acc = Echelon(n)
    acc.insert([ONE] * n)  # degree 0: the all-ones function
    yield 0, Subspace(n, acc.kernel_basis())
    e1 = _entry_functions(rho)
    ek = [[ONE] * n]
    stable = False
    for k in range(1, kmax + 1):
        if not stable:
            step = Echelon(n)
            for e in ek:
                for g in e1:
                    step.insert([a * b for a, b in zip(e, g)])
            ek = [list(row) for row in step.rows]
            grew = False
            for row in ek:
                if acc.insert(row):
                    grew = True
            if not grew:
                stable = True
        yield k, Subspace(n, acc.kernel_basis())


def symmetric_annihilator_chain(rho: Representation, kmax):
    """Yield (d, Ann(S^0 + ... + S^d)) for d = 0..kmax.

    Symmetric-power dimensions grow polynomially, so each degree is built
    explicitly and its entry rows are folded into one accumulated
    constraint space.
    """
    n = rho.monoid.size
    acc = Echelon(n)
    for d in range(kmax + 1):
        if acc.rank < n:  # once the kernel is zero it stays zero
            sp = sym_power(rho, d)
            for i in range(sp.dim):
                for j in range(sp.dim):
                    row = [sp.matrices[x][i][j] for x in range(n)]
                    if any(row):
                        acc.insert(row)
        yield d, Subspace(n, acc.kernel_basis())


def _power_chain(rho, mode, kmax):
    if mode == "tensor":
        return tensor_annihilator_chain(rho, kmax)
    if mode == "symmetric":
        return symmetric_annihilator_chain(rho, kmax)
    raise ValueError(f"unknown power mode {mode!r}")


def minimal_covering_power(rho: Representation, mode="tensor", cap=None,
                           radical: Subspace | None = None):
    """Least k such that powers 0..k together reach every simple module.

    The coverage theorems guarantee k <= r-1 (tensor) and k <= dim*s-1
    (symmetric) for faithful input, so by default the scan is capped at
    that bound and running past it raises: it would mean the machinery
    itself is broken, which must not pass silently.
    """
    _require_faithful(rho)
    if cap is None:
        if mode == "tensor":
            cap = len(distinct_character_values(rho)) - 1
        else:
            cap = rho.dim * len(distinct_charpolys(rho)) - 1
    if radical is None:
        radical = radical_basis(rho.monoid)
    for k, ann in _power_chain(rho, mode, cap):
        holds, _ = subspace_leq(ann, radical)
        if holds:
            return k
    raise RuntimeError(
        f"no covering power up to {cap} in {mode} mode; this contradicts "
        "the coverage theorem for a faithful representation and indicates "
        "an implementation bug")


def minimal_faithful_power(rho: Representation, mode="tensor", cap=32):
    """Least k with Ann(power 0 + ... + power k) = 0, or None up to cap.

    Unlike the covering power, no bound in terms of r alone exists: for
    the N_t family the answer grows as t-1 however many character values
    there are, which is exactly what the scan exposes.
    """
    _require_faithful(rho)
    for k, ann in _power_chain(rho, mode, cap):
        if ann.dim == 0:
            return k
    return None


def verify_steinberg_bound(rho: Representation,
                           radical: Subspace | None = None) -> VerificationReport:
    """Check the coarse bound: tensor powers 0..|M|-1 reach every simple.

    Uses the incremental constraint chain, so it stays cheap even when
    |M|-1 Kronecker powers would be astronomically large.
    """
    _require_faithful(rho)
    n = rho.monoid.size
    rad = radical_basis(rho.monoid) if radical is None else radical
    ann = None
    for _, ann in tensor_annihilator_chain(rho, n - 1):
        pass
    holds, witness = subspace_leq(ann, rad)
    return VerificationReport("steinberg", holds, None, None, n - 1,
                              tuple(range(n)), rad.dim, ann.dim, witness)
