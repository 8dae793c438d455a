# Schur, Q and compound bases in power-sum coordinates.
# Run with: python3 notebooks/01_bases.py

from symbasis import bases
from symbasis.partitions import Partition, enumerate_partitions, split_parity
from symbasis.polyring import pair

# Schur functions of degree 3, written in t_j = p_j / j
for lam in enumerate_partitions(3):
    print(lam, "->", bases.schur(lam))

# they are orthonormal for the Hall pairing
s = [bases.schur(lam) for lam in enumerate_partitions(4)]
print([[pair(f, g) for g in s] for f in s])

# Q-functions only involve odd power sums
print("Q_[2,1] =", bases.qfun((2, 1)))
print("Q_[3,1] =", bases.qfun((3, 1)))

# every partition splits into a strict part and a doubled part
lam = Partition.parse("5^3.4^4.2^7.1")
print(lam, "->", split_parity(lam))

# the compound basis W_lam = Q_{lam^r}(t) S_{lam^d}(t_2, t_4, ...)
for lam in enumerate_partitions(4):
    print("W", lam, "=", bases.w_basis(lam))
