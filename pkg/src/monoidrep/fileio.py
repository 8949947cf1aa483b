"""JSON input formats for monoids and representations.

Monoid files carry a "type" discriminator:

    {"type": "cayley", "identity": 0, "table": [[0,1],[1,0]]}
    {"type": "transformations", "degree": 3, "generators": [[2,3,1],[2,1,3]]}
    {"type": "nt", "t": 5}
    {"type": "matrices", "dim": 2, "cap": 10000,
     "generators": [[["0","1"],["1","0"]]]}

Transformation generators use 1-based images.  Rational numbers are
strings "p/q" or "p" everywhere; matrices are row-major arrays of such
strings (plain integers are also accepted).

Representation files either name a builtin mode or list matrices keyed by
element label:

    {"mode": "natural"}
    {"mode": "nt-paper"}
    {"dim": 2, "matrices": {"1": [["1","0"],["0","1"]], ...}}

An optional "monoid" key (an inline monoid object or a file path) lets
a representation file stand alone; an explicitly supplied monoid wins.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .linalg import Matrix
from .monoids import (
    Monoid,
    from_cayley_table,
    from_matrices,
    from_transformations,
    nt_monoid,
)
from .representations import (
    Representation,
    build_representation,
    natural_representation,
    nt_paper_representation,
)


def parse_rational(s) -> Fraction:
    """Parse "p/q", "p", or an int into a Fraction."""
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"bad rational {s!r}: {e}") from None
    raise ValueError(f"bad rational {s!r}: expected a string or integer")


def format_rational(q) -> str:
    return str(Fraction(q))


def parse_matrix(rows) -> Matrix:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValueError("a matrix must be an array of row arrays")
    return Matrix([[parse_rational(x) for x in row] for row in rows])


def _require(obj, field, kind=None):
    if field not in obj:
        raise ValueError(f"missing field {field!r}")
    v = obj[field]
    if kind is not None and not isinstance(v, kind):
        raise ValueError(f"field {field!r} has the wrong type")
    return v


def monoid_from_spec(obj) -> Monoid:
    """Build a monoid from a parsed JSON object."""
    if not isinstance(obj, dict):
        raise ValueError("monoid description must be a JSON object")
    kind = _require(obj, "type", str)
    if kind == "cayley":
        table = _require(obj, "table", list)
        identity = _require(obj, "identity", int)
        return from_cayley_table(identity, table, labels=obj.get("labels"))
    if kind == "transformations":
        degree = _require(obj, "degree", int)
        gens = _require(obj, "generators", list)
        return from_transformations(degree, gens)
    if kind == "nt":
        return nt_monoid(_require(obj, "t", int))
    if kind == "matrices":
        gens = [parse_matrix(g) for g in _require(obj, "generators", list)]
        dim = obj.get("dim")
        if dim is not None and any(g.nrows != dim for g in gens):
            raise ValueError(f"a generator does not match the declared dim {dim}")
        return from_matrices(gens, cap=obj.get("cap", 10000))
    raise ValueError(f"unknown monoid type {kind!r}")


def load_json(path):
    try:
        with open(path) as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}") from None


def load_monoid(path) -> Monoid:
    try:
        return monoid_from_spec(load_json(path))
    except ValueError as e:
        raise ValueError(f"{path}: {e}") from None


def representation_from_spec(obj, monoid: Monoid | None = None,
                             base_dir=".") -> Representation:
    """Build a representation from a parsed JSON object.

    When ``monoid`` is None the object must carry a "monoid" key holding
    either an inline monoid object or a path (relative paths resolve
    against ``base_dir``).
    """
    if not isinstance(obj, dict):
        raise ValueError("representation description must be a JSON object")
    if monoid is None:
        ref = _require(obj, "monoid")
        if isinstance(ref, str):
            monoid = load_monoid(os.path.join(base_dir, ref))
        else:
            monoid = monoid_from_spec(ref)
    mode = obj.get("mode")
    if mode == "natural":
        return natural_representation(monoid)
    if mode == "nt-paper":
        rep = nt_paper_representation(monoid.size - 1)
        if rep.monoid != monoid:
            raise ValueError('mode "nt-paper" needs a monoid of type "nt"')
        return rep
    if mode is not None:
        raise ValueError(f"unknown representation mode {mode!r}")
    dim = _require(obj, "dim", int)
    table = _require(obj, "matrices", dict)
    mats = []
    for i, label in enumerate(monoid.labels):
        if label not in table:
            raise ValueError(f"no matrix for element {label!r}")
        mat = parse_matrix(table[label])
        if mat.nrows != dim or mat.ncols != dim:
            raise ValueError(f"matrix for element {label!r} is not {dim}x{dim}")
        mats.append(mat)
    extra = set(table) - set(monoid.labels)
    if extra:
        raise ValueError(f"matrices given for unknown labels: {sorted(extra)}")
    return build_representation(monoid, mats)


def load_representation(path, monoid: Monoid | None = None) -> Representation:
    try:
        return representation_from_spec(load_json(path), monoid,
                                        base_dir=os.path.dirname(path) or ".")
    except ValueError as e:
        msg = str(e)
        raise ValueError(msg if msg.startswith(path) else f"{path}: {e}") from None


def matrix_to_json(m: Matrix):
    return [[format_rational(x) for x in row] for row in m.rows]
