"""Coverage is bounded by r; faithfulness is not bounded by anything like it.

For groups, once every simple module appears in W = V^0 + ... + V^k the
module W is automatically faithful (the group algebra is semisimple).
For monoids that implication dies: the N_t family has r = 2 character
values for every t, so two tensor powers always cover all simples, yet
the number of powers needed before W has zero annihilator grows without
bound.

The representation sends 0 to the zero matrix, 1 to the identity and j
to [[0, j], [0, 0]].  Each new tensor power contributes one Vandermonde
row in the values 2..t, so faithfulness arrives exactly at k = t - 1.
"""

from monoidrep import (
    annihilator_basis,
    direct_sum,
    minimal_covering_power,
    minimal_faithful_power,
    nt_paper_representation,
    radical_basis,
    tensor_power,
)

print("t | dim Rad | dim Ann(V^0+V^1) | covering k | faithful k")
print("--+---------+------------------+------------+-----------")
for t in range(2, 11):
    rho = nt_paper_representation(t)
    rad = radical_basis(rho.monoid)
    w = direct_sum([tensor_power(rho, 0), rho])
    ann = annihilator_basis(w)
    cover = minimal_covering_power(rho, "tensor")
    faithful = minimal_faithful_power(rho, "tensor")
    print(f"{t:2} | {rad.dim:7} | {ann.dim:16} | {cover:10} | {faithful}")

print("""
The covering column never moves (r - 1 = 1) while the faithful column
climbs as t - 1: no function of the number of character values alone can
bound it.  From t = 9 on, dimension counting already settles it, since
the 3-dimensional module V^0 + V^1 lives in a 9-dimensional matrix space
but the monoid algebra has t + 1 > 9 dimensions.

The same happens for symmetric powers even though the number of distinct
characteristic polynomials also stays at 2:""")

for t in (4, 6, 8):
    rho = nt_paper_representation(t)
    print(f"  t = {t}: minimal faithful symmetric power =",
          minimal_faithful_power(rho, "symmetric"))
