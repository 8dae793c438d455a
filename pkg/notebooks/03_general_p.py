# Odd primes: Brauer-Schur data and the p = 3 transition matrix.

from symbasis import modular, transition
from symbasis.fixtures import load_table
from symbasis.linalg import smith_normal_form

store = modular.DatasetStore.from_directory()
ds = store.get(3, 5)
print(ds.source_note)
print(ds.decomposition.to_markdown())
for lam, b in ds.brauer_polys.items():
    print("B", lam, "=", b)

a = transition.build_A_p(5, 3, store)
print(a.to_markdown())
print(transition.gram(a).to_markdown())

# rebuild the dataset from the printed matrix and compare
table = load_table("A5_p3")
again = modular.derive_bootstrap(table.matrix, 3, 5)
print(again.brauer_polys == ds.brauer_polys)

# Cartan matrix C = D^T D
print(smith_normal_form(modular.cartan(ds)))

for c in transition.verify_all(5, 3, store).checks:
    print(c.line())
