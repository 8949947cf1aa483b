"""The exact arithmetic substrate: rational matrices and polynomials.

Everything downstream (radicals, annihilators, generating functions)
reduces to kernels, ranks, Kronecker products and characteristic
polynomials over the rationals.  No floating point is involved anywhere,
so every equality below is exact.
"""

from fractions import Fraction

from monoidrep import (
    Matrix,
    charpoly,
    charpoly_from_power_traces,
    complete_homogeneous_from_power_sums,
    kernel_basis,
    kron,
    power_traces,
    rank,
)

# Kernels come out in a canonical form: one vector per free column.
m = Matrix([[1, 1], [1, 1]])
print("kernel of [[1,1],[1,1]]:", kernel_basis(m))

# Rank and nullity always add up to the number of columns.
gram = Matrix([[4, 0, 1, 1], [0, 4, 1, 1], [1, 1, 1, 1], [1, 1, 1, 1]])
print("rank of the T_2 trace-form Gram matrix:", rank(gram),
      " nullity:", len(kernel_basis(gram)))

# The Kronecker product realises the action on a tensor product; its
# trace is the product of the traces.
swap = Matrix([[0, 1], [1, 0]])
print("trace(swap x swap) =", kron(swap, swap).trace(),
      "= trace(swap)^2 =", swap.trace() ** 2)

# Characteristic polynomials via the Faddeev-LeVerrier recurrence, which
# only divides by integers and therefore stays in Q.
fib = Matrix([[0, 1], [1, 1]])
print("charpoly of the Fibonacci companion matrix:", charpoly(fib))

# Newton's identities turn power traces tr(A), tr(A^2), ... back into
# the characteristic polynomial without touching eigenvalues.
a = Matrix([[Fraction(1, 2), 3], [0, -2]])
p = power_traces(a, 2)
print("power traces:", p)
print("rebuilt charpoly:", charpoly_from_power_traces(p, 2))
print("direct charpoly: ", charpoly(a))

# The same identities evaluate complete homogeneous symmetric functions
# of the eigenvalues; h_d of (1, 1) counts degree-d monomials in two
# variables.
for d in range(5):
    print(f"h_{d}(1, 1) =", complete_homogeneous_from_power_sums((2, 2, 2, 2), d))
