"""How many tensor powers catch every simple module?

For a faithful representation V of a finite monoid whose character takes
r distinct values, the direct sum V^0 + V^1 + ... + V^(r-1) already has
every simple module of the monoid algebra among its composition factors.
The machine-checkable form of that statement is a containment of two
subspaces of QM:

    Ann(V^0 + ... + V^(r-1))  is contained in  Rad(QM).

This script runs the check on the full transformation monoids T_2 and
T_3 and probes how sharp the bound is.
"""

from monoidrep import (
    all_simples_appear,
    direct_sum,
    distinct_character_values,
    from_transformations,
    minimal_covering_power,
    natural_representation,
    radical_basis,
    tensor_power,
    verify_positive_power_refinement,
    verify_steinberg_bound,
    verify_tensor_theorem,
)

t2 = from_transformations(2, [(2, 1), (1, 1)])
rho = natural_representation(t2)

values = distinct_character_values(rho)
print("T_2 character values:", [str(v) for v in values], "so r =", len(values))
print("radical of QT_2:", radical_basis(t2).basis)

report = verify_tensor_theorem(rho)
print(f"powers 0..{report.bound}: holds={report.holds} "
      f"(dim Ann = {report.dim_ann}, dim Rad = {report.dim_rad})")

# How sharp is r - 1 here?  Scan upward from zero powers.
print("minimal covering power:", minimal_covering_power(rho, "tensor"),
      "(bound was", report.bound, ")")

# Powers 0 and 1 alone miss a simple: the witness is an explicit algebra
# element that kills the module but is not nilpotent.
w01 = direct_sum([tensor_power(rho, 0), tensor_power(rho, 1)])
ok, witness = all_simples_appear(w01)
print("powers 0..1 only:", ok, " witness:", witness)

# T_2 has no zero element, so powers 1..r work as well.
print("positive powers refinement:", verify_positive_power_refinement(rho).holds)

# The same check runs on T_3 (27 elements, natural 3-dimensional action)
# in well under a second, and the coarse |M|-power bound is verified
# without ever building a 3^26-dimensional tensor power: annihilators of
# high tensor powers are computed on spans of entrywise products of
# matrix-entry functions instead.
t3 = from_transformations(3, [(2, 3, 1), (2, 1, 3), (1, 1, 3)])
nat3 = natural_representation(t3)
rep3 = verify_tensor_theorem(nat3)
print(f"\nT_3: r = {rep3.r}, module dimension "
      f"{sum(nat3.dim ** i for i in rep3.powers_used)}, holds = {rep3.holds}")
stein = verify_steinberg_bound(nat3)
print(f"T_3 powers 0..{stein.bound}: holds = {stein.holds}")
