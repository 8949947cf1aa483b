"""Finite monoids as Cayley tables.

A monoid is stored as an n x n multiplication table over element indices
0..n-1 together with the index of the identity.  Constructors are provided
for raw tables, transformation monoids (closure of self-maps of a finite
set), matrix monoids (closure of exact rational matrices) and the family
N_t = {0, 1, ..., t} in which 1 is the identity and every product of two
non-identity elements is 0.

Element order is deterministic everywhere: the identity first, then the
generators in the order given, then new elements in breadth-first
discovery order.  All structure queries (idempotents, local monoids eMe,
unit groups G_e, their ideals I_e, zero elements) work on any Monoid.
"""

from __future__ import annotations

from .linalg import Matrix


class Monoid:
    """A finite monoid: multiplication table, identity index, labels.

    The table is validated on construction: the identity law is checked
    for every element and associativity for every triple, reporting the
    first violation found.  Instances are immutable in use; all queries
    are pure.
    """

    def __init__(self, table, identity, labels=None,
                 transformations=None, matrix_elements=None):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0:
            raise ValueError("a monoid needs at least the identity element")
        for a, row in enumerate(table):
            if len(row) != n:
                raise ValueError(f"table row {a} has length {len(row)}, expected {n}")
            for b, c in enumerate(row):
                if not isinstance(c, int) or not 0 <= c < n:
                    raise ValueError(f"table entry [{a}][{b}] = {c!r} is out of range")
        if not isinstance(identity, int) or not 0 <= identity < n:
            raise ValueError(f"identity index {identity!r} is out of range")
        for a in range(n):
            if table[identity][a] != a or table[a][identity] != a:
                raise ValueError(f"identity law fails at element {a}")
        for a in range(n):
            ta = table[a]
            for b in range(n):
                tab = table[ta[b]]
                tb = table[b]
                for c in range(n):
                    if tab[c] != ta[tb[c]]:
                        raise ValueError(
                            f"associativity fails at triple ({a}, {b}, {c}): "
                            f"({a}*{b})*{c} = {tab[c]} but {a}*({b}*{c}) = {ta[tb[c]]}")
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("label count differs from monoid size")
        self.table = table
        self.identity = identity
        self.labels = labels
        self.transformations = transformations
        self.matrix_elements = matrix_elements

    @property
    def size(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def label(self, i):
        return self.labels[i]

    def index_of_label(self, label):
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise ValueError(f"no element labelled {label!r}") from None

    def __repr__(self):
        return f"Monoid(size={self.size}, identity={self.identity})"

    def __eq__(self, other):
        return (isinstance(other, Monoid) and self.table == other.table
                and self.identity == other.identity)

    def __hash__(self):
        return hash((self.table, self.identity))


def from_cayley_table(identity, table, labels=None) -> Monoid:
    """Validated monoid from a square table of element indices."""
    return Monoid(table, identity, labels=labels)


def _compose(f, g):
    # apply g first, then f, so that the natural 0/1 matrices multiply
    # in the same order as the monoid product
    return tuple(f[x] for x in g)


def _one_line_label(f):
    return "[" + ",".join(str(x + 1) for x in f) + "]"


def from_transformations(degree, generators) -> Monoid:
    """Closure of self-maps of {1..degree} under composition.

    Generators are given as sequences of 1-based images, e.g. (2, 3, 1)
    for the 3-cycle.  The product f*g acts as "g then f".  Elements are
    labelled in one-line notation "[2,3,1]".
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    gens = []
    for k, g in enumerate(generators):
        g = tuple(g)
        if len(g) != degree or any(not 1 <= x <= degree for x in g):
            raise ValueError(f"generator {k} is not a self-map of 1..{degree}")
        gens.append(tuple(x - 1 for x in g))
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    for g in gens:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
    queue = list(elements)
    pos = 0
    while pos < len(queue):
        a = queue[pos]
        pos += 1
        for g in gens:
            c = _compose(a, g)
            if c not in index:
                index[c] = len(elements)
                elements.append(c)
                queue.append(c)
    table = tuple(tuple(index[_compose(a, b)] for b in elements) for a in elements)
    return Monoid(table, 0, labels=[_one_line_label(f) for f in elements],
                  transformations=tuple(elements))


def from_matrices(generators, cap=10000) -> Monoid:
    """Closure of square rational matrices under exact multiplication.

    The identity matrix is adjoined and elements are labelled "g0", "g1",
    ... in discovery order.  Raises when more than ``cap`` distinct
    matrices appear, since arbitrary rational generators need not generate
    a finite monoid.
    """
    gens = [g if isinstance(g, Matrix) else Matrix(g) for g in generators]
    if not gens:
        raise ValueError("at least one generator matrix is required")
    dim = gens[0].nrows
    for g in gens:
        if not g.is_square or g.nrows != dim:
            raise ValueError("generators must be square matrices of one dimension")
    ident = Matrix.identity(dim)
    elements = [ident]
    index = {ident: 0}
    for g in gens:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
    queue = list(elements)
    pos = 0
    while pos < len(queue):
        a = queue[pos]
        pos += 1
        for g in gens:
            c = a * g
            if c not in index:
                if len(elements) >= cap:
                    raise ValueError(f"cap exceeded: more than {cap} distinct matrices")
                index[c] = len(elements)
                elements.append(c)
                queue.append(c)
    table = tuple(tuple(index[a * b] for b in elements) for a in elements)
    return Monoid(table, 0, labels=[f"g{i}" for i in range(len(elements))],
                  matrix_elements=tuple(elements))


def nt_monoid(t) -> Monoid:
    """The monoid {0, 1, ..., t}: 1 is the identity, xy = 0 otherwise.

    Element i carries label str(i); the identity sits at index 1 and the
    zero element at index 0.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    n = t + 1
    table = tuple(tuple(b if a == 1 else (a if b == 1 else 0) for b in range(n))
                  for a in range(n))
    return Monoid(table, 1, labels=[str(i) for i in range(n)])


def idempotents(m: Monoid):
    """Sorted indices of all elements with e*e = e."""
    return tuple(e for e in range(m.size) if m.table[e][e] == e)


def _require_idempotent(m, e):
    if not 0 <= e < m.size or m.table[e][e] != e:
        raise ValueError(f"element {e} is not an idempotent")


def local_monoid(m: Monoid, e):
    """The set eMe = {e*x*e : x in M}, sorted; a monoid with identity e."""
    _require_idempotent(m, e)
    return tuple(sorted({m.table[m.table[e][x]][e] for x in range(m.size)}))


def unit_group(m: Monoid, e):
    """The group of units G_e of eMe: elements invertible relative to e."""
    _require_idempotent(m, e)
    eme = local_monoid(m, e)
    units = []
    for g in eme:
        if any(m.table[g][h] == e and m.table[h][g] == e for h in eme):
            units.append(g)
    return tuple(units)


def local_ideal(m: Monoid, e):
    """I_e = eMe minus its unit group; an ideal of eMe."""
    _require_idempotent(m, e)
    units = set(unit_group(m, e))
    return tuple(x for x in local_monoid(m, e) if x not in units)


def has_zero(m: Monoid):
    """Index of the two-sided zero element, or None."""
    for z in range(m.size):
        row = m.table[z]
        if all(row[x] == z and m.table[x][z] == z for x in range(m.size)):
            return z
    return None


def submonoid(m: Monoid, members, identity) -> Monoid:
    """Monoid structure on a product-closed subset of m.

    ``members`` must be closed under the ambient product and contain
    ``identity`` acting as a two-sided identity on it.  Labels are
    inherited.  Returns the new monoid; its element i corresponds to
    sorted(members)[i] in the parent.
    """
    members = tuple(sorted(set(members)))
    pos = {x: i for i, x in enumerate(members)}
    if identity not in pos:
        raise ValueError("identity must belong to the subset")
    for a in members:
        for b in members:
            if m.table[a][b] not in pos:
                raise ValueError(
                    f"subset is not closed: {a}*{b} = {m.table[a][b]} is outside")
    table = tuple(tuple(pos[m.table[a][b]] for b in members) for a in members)
    return Monoid(table, pos[identity], labels=[m.labels[x] for x in members])


class MonoidMorphism:
    """A map between monoids, validated to respect products and identity."""

    def __init__(self, source: Monoid, target: Monoid, mapping):
        mapping = tuple(mapping)
        if len(mapping) != source.size:
            raise ValueError("mapping length differs from source size")
        if any(not 0 <= x < target.size for x in mapping):
            raise ValueError("mapping hits an index outside the target")
        if mapping[source.identity] != target.identity:
            raise ValueError("mapping does not send identity to identity")
        for a in range(source.size):
            for b in range(source.size):
                if mapping[source.table[a][b]] != target.table[mapping[a]][mapping[b]]:
                    raise ValueError(
                        f"mapping is not multiplicative at the pair ({a}, {b})")
        self.source = source
        self.target = target
        self.mapping = mapping

    def __call__(self, x):
        return self.mapping[x]

    def __repr__(self):
        return f"MonoidMorphism({self.source!r} -> {self.target!r})"


def is_li_morphism(phi: MonoidMorphism):
    """Whether phi separates each idempotent e from the rest of eMe.

    Returns (True, None), or (False, (e, x)) for the first idempotent e
    and element x in eMe with x != e but phi(x) = phi(e).
    """
    src = phi.source
    for e in idempotents(src):
        fe = phi.mapping[e]
        for x in local_monoid(src, e):
            if x != e and phi.mapping[x] == fe:
                return False, (e, x)
    return True, None
