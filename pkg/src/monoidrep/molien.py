"""Molien-type generating functions for symmetric-power characters.

For an element m acting through a matrix A, the generating function of
the symmetric-power character values sum_d trace(S^d(A)) t^d equals
1 / det(I - tA), and det(I - tA) is nothing but the characteristic
polynomial of A with its coefficient order reversed.  This module works
entirely through that reversal, so no determinant is ever expanded
symbolically and all arithmetic stays in Q[t]:

* ``reversed_charpoly``  -- det(I - tA) as a polynomial with constant 1;
* ``element_series``     -- the reciprocal power series, term by term;
* ``weighted_series``    -- an exact rational function sum_m c_m / det(I - tA_m)
  for weights supported on a local monoid eMe;
* ``series_prefix``      -- Taylor coefficients of a rational function via
  the linear recurrence carried by its denominator.
"""

from __future__ import annotations

from .linalg import Polynomial, ZERO, ONE, as_fraction, charpoly, poly_gcd
from .monoids import local_monoid
from .representations import Representation, restrict_to_local


class RationalFunction:
    """Quotient of two polynomials in lowest terms.

    The denominator is normalised to constant term 1 whenever its
    constant term is nonzero (the series-expandable case), otherwise to
    leading coefficient 1, so equal functions compare equal.
    """

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.is_zero:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        scale = den[0] if den[0] else den.coeffs[-1]
        self.num = num * (ONE / scale)
        self.den = den * (ONE / scale)

    @property
    def is_zero(self):
        return self.num.is_zero

    def __eq__(self, other):
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.num * other.num, self.den * other.den)
        return RationalFunction(self.num * as_fraction(other), self.den)

    def __rmul__(self, other):
        return self * other

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"

    def __str__(self):
        return f"({self.num}) / ({self.den})"


def reversed_charpoly(rho: Representation, x) -> Polynomial:
    """det(I - t rho(x)), as the degree-reversed characteristic polynomial.

    The reversal t^n p(1/t) of the monic degree-n characteristic
    polynomial has constant term 1; for a nilpotent matrix it collapses
    to the constant polynomial 1.
    """
    return charpoly(rho.matrices[x]).degree_reverse(rho.dim)


def element_series(rho: Representation, x, nterms: int):
    """First nterms+1 coefficients of 1 / det(I - t rho(x)).

    Coefficient d is the degree-d symmetric-power character value at x.
    """
    if nterms < 0:
        raise ValueError("series length must be nonnegative")
    den = reversed_charpoly(rho, x)
    return _reciprocal_series(den, nterms)


def _reciprocal_series(den: Polynomial, nterms):
    # den has constant term 1 here; s solves den * s = 1 term by term
    out = [ONE]
    for k in range(1, nterms + 1):
        acc = ZERO
        for i in range(1, min(k, den.degree) + 1):
            acc += den[i] * out[k - i]
        out.append(-acc)
    return tuple(out)


def weighted_series(rho: Representation, e, weights) -> RationalFunction:
    """Exact rational function sum_m c_m / det(I - t rho'(m)).

    ``weights`` assigns a rational coefficient to every monoid element
    and must vanish outside the local monoid eMe of the idempotent e;
    rho' is the restriction of rho to eMe acting on the column space of
    rho(e).  Terms sharing a reversed characteristic polynomial are
    grouped first, so the reduced denominator divides the product of the
    distinct reversed polynomials on the support.
    """
    m = rho.monoid
    if len(weights) != m.size:
        raise ValueError("weight vector length differs from monoid size")
    weights = [as_fraction(c) for c in weights]
    members = local_monoid(m, e)
    member_pos = {x: i for i, x in enumerate(members)}
    support = [x for x, c in enumerate(weights) if c]
    outside = [x for x in support if x not in member_pos]
    if outside:
        raise ValueError(
            f"weights supported outside eMe: element "
            f"{m.labels[outside[0]]!r} has a nonzero coefficient")
    local = restrict_to_local(rho, e)
    grouped = {}
    for x in support:
        q = reversed_charpoly(local, member_pos[x])
        grouped[q] = grouped.get(q, ZERO) + weights[x]
    total = RationalFunction(Polynomial(), Polynomial([ONE]))
    for q in sorted(grouped):
        total = total + RationalFunction(Polynomial([grouped[q]]), q)
    return total


def series_prefix(f: RationalFunction, nterms: int):
    """First nterms+1 Taylor coefficients of f at 0, exactly.

    The denominator must not vanish at 0; its coefficients define the
    linear recurrence the series satisfies.
    """
    if nterms < 0:
        raise ValueError("series length must be nonnegative")
    if not f.den[0]:
        raise ValueError("denominator vanishes at 0; no power series there")
    # den is normalised with constant term 1
    rec = _reciprocal_series(f.den, nterms)
    out = []
    for k in range(nterms + 1):
        out.append(sum((f.num[i] * rec[k - i] for i in range(min(k, f.num.degree) + 1)),
                       ZERO))
    return tuple(out)
