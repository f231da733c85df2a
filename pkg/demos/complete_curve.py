# The cover y^n = prod (x - a_i): integer matrices and their eigen-blocks.
import numpy as np

from burau_lab.burau import (
    charpoly_factorization,
    eigen_specialize,
    genus,
    reduced_burau,
    vandermonde_blocks,
)
from burau_lab.freegroup import parse_braid

n, s = 3, 4
b = parse_braid("s1 s2", s)

R = reduced_burau(b, n)
print(f"genus {genus(n, s)}, matrix size {R.dim}")
print(R)

# %% the braid s1 s2 has finite order on this curve
A = np.array(R.rows)
P = np.eye(R.dim, dtype=int)
for k in range(1, 13):
    P = P @ A
    if (P == np.eye(R.dim, dtype=int)).all():
        print("order", k)
        break

# %% eigenspaces: t -> zeta^nu
for nu in range(1, n):
    print(f"nu={nu}:")
    print(eigen_specialize(b, n, nu))

lhs, rhs = charpoly_factorization(b, n)
print("charpoly      ", [str(c) for c in lhs])
print("product of eig", [str(c) for c in rhs])
print("vandermonde residual", vandermonde_blocks(b, n))
