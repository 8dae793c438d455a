# The transition matrix from Schur functions to the compound basis at p = 2.

from symbasis import transition
from symbasis.linalg import determinant, smith_normal_form
from symbasis.partitions import exponent_k

a = transition.build_A(5)
print(a.to_markdown())

g = transition.gram(a)
print(g.to_markdown())

# Gram matrix is block diagonal, blocks keyed by (|lam^r|, |lam^d|)
for key, blk in transition.gram_blocks(g):
    print(key, "det", determinant(blk), "SNF", smith_normal_form(blk))

# |det A_n| = 2^k_n
for n in range(1, 11):
    d = determinant(transition.build_A(n))
    print(n, d, exponent_k(n))

# the (mu, 0) columns are Stembridge's expansion of S_lam(t_odd) in Q-functions
gamma = transition.stembridge_submatrix(transition.build_A(6))
print(gamma.to_markdown())

# everything at once
report = transition.verify_all(8)
for c in report.checks:
    print(c.line())
