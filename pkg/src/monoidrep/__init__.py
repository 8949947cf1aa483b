"""Exact representation theory of finite monoids over the rationals.

The package machine-checks, with exact arithmetic throughout, the two
coverage bounds for a faithful representation V of a finite monoid M:
every simple QM-module occurs as a composition factor among the tensor
powers V^0, ..., V^(r-1) where r counts distinct character values, and
among the symmetric powers S^0(V), ..., S^(dim V * s - 1)(V) where s
counts distinct characteristic polynomials.  It also exposes the N_t
family showing no such bound exists for *faithfulness* of truncated
tensor algebras, together with the supporting machinery: exact rational
linear algebra, Cayley-table monoids and their local structure, monoid
algebra radicals and annihilators, and Molien-type generating functions.
"""

from .linalg import (
    Echelon,
    Matrix,
    Polynomial,
    as_fraction,
    charpoly,
    charpoly_from_power_traces,
    complete_homogeneous_from_power_sums,
    format_polynomial,
    kernel_basis,
    kron,
    poly_gcd,
    power_traces,
    rank,
)
from .monoids import (
    Monoid,
    MonoidMorphism,
    from_cayley_table,
    from_matrices,
    from_transformations,
    has_zero,
    idempotents,
    is_li_morphism,
    local_ideal,
    local_monoid,
    nt_monoid,
    submonoid,
    unit_group,
)
from .representations import (
    Representation,
    build_representation,
    character,
    character_kernel,
    direct_sum,
    distinct_character_values,
    distinct_charpolys,
    is_faithful,
    matrix_representation,
    monomial_basis,
    natural_representation,
    nt_paper_representation,
    regular_representation,
    restrict_to_local,
    sym_power,
    sym_power_character,
    sym_power_dim,
    tensor_power,
    trivial_representation,
)
from .algebra import (
    Subspace,
    VerificationReport,
    algebra_mul,
    all_simples_appear,
    annihilator_basis,
    left_regular_matrix,
    minimal_covering_power,
    minimal_faithful_power,
    radical_basis,
    subspace_leq,
    symmetric_annihilator_chain,
    tensor_annihilator_chain,
    verify_positive_power_refinement,
    verify_steinberg_bound,
    verify_symmetric_theorem,
    verify_tensor_theorem,
)
from .molien import (
    RationalFunction,
    element_series,
    reversed_charpoly,
    series_prefix,
    weighted_series,
)
from .fileio import (
    load_monoid,
    load_representation,
    monoid_from_spec,
    parse_rational,
    representation_from_spec,
)

__version__ = "0.1.0"
