"""Modular-representation data: decomposition matrices and Brauer-Schur polynomials.

Brauer characters are not computed here.  A :class:`ModularDataset` carries
them for one ``(p, n)`` as data, either as Brauer-Schur polynomials, as a
decomposition matrix, or both, together with a provenance note.  Datasets
live in JSON files laid out as ``<root>/p{p}/n{n}.json``.

Two ways of producing data are supported:

* transcription of published decomposition matrices (the shipped ``p = 2``
  files), from which the Brauer-Schur polynomials follow by solving
  ``S^(p)_lam = sum_mu d_{lam mu} B_mu`` on the p-regular rows;
* :func:`derive_bootstrap`, which inverts a known transition matrix
  ``A^(p)_n`` and factors the resulting compound basis.
"""

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .bases import p_reduced_schur, schur
from .errors import DataNotFoundError, DatasetError
from .linalg import ExactMatrix, inverse, solve_expansion
from .partitions import Partition, enumerate_partitions, is_prime, split_p
from .polyring import Poly

DATA_ENV = "SYMBASIS_DATA_DIR"


def package_data_dir():
    return Path(__file__).resolve().parent / "data" / "modular"


def default_data_dir():
    """Dataset root: ``$SYMBASIS_DATA_DIR`` if set, else the bundled data."""
    env = os.environ.get(DATA_ENV)
    return Path(env) if env else package_data_dir()


@dataclass
class ModularDataset:
    p: int
    n: int
    regular: list
    decomposition: ExactMatrix = None
    brauer_polys: dict = None
    source_note: str = ""
    _derived: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.regular = [Partition(x) for x in self.regular]
        if self.brauer_polys is not None:
            self.brauer_polys = {Partition(k): v for k, v in self.brauer_polys.items()}

    # lookup -----------------------------------------------------------------
    def brauer_poly(self, lam, p=None):
        """``B^(p)_lam``, from the polynomial table or else from the decomposition matrix."""
        lam = Partition(lam)
        if p is not None and p != self.p:
            raise DataNotFoundError(f"dataset is for p={self.p}, not p={p}")
        if self.brauer_polys and lam in self.brauer_polys:
            return self.brauer_polys[lam]
        if lam.weight == self.n and self.decomposition is not None and lam in self.regular:
            return self.polys_from_decomposition()[lam]
        raise DataNotFoundError(
            f"no Brauer-Schur polynomial for {lam} in dataset (p={self.p}, n={self.n})")

    def covers(self, lam):
        lam = Partition(lam)
        if self.brauer_polys and lam in self.brauer_polys:
            return True
        return lam.weight == self.n and self.decomposition is not None and lam in self.regular

    def polys_from_decomposition(self):
        if self._derived is None:
            self._derived = brauer_from_decomposition(self.decomposition, self.p)
        return self._derived

    # validation -------------------------------------------------------------
    def validate(self):
        """Raise :class:`DatasetError` on the first violated invariant."""
        p, n = self.p, self.n
        if not is_prime(p):
            raise DatasetError(f"p={p} is not prime", "p")
        expected = enumerate_partitions(n, "regular", p)
        if set(self.regular) != set(expected) or len(self.regular) != len(expected):
            raise DatasetError(f"regular labels are not the {p}-regular partitions of {n}",
                               "regular")
        if self.decomposition is None and not self.brauer_polys:
            raise DatasetError("dataset has neither decomposition nor brauer_polys",
                               "decomposition")
        if self.decomposition is not None:
            self._validate_decomposition()
        if self.brauer_polys:
            self._validate_polys()
        if self.decomposition is not None and self.brauer_polys:
            self._validate_consistency()
        return self

    def _validate_decomposition(self):
        d = self.decomposition
        rows = enumerate_partitions(self.n)
        if set(d.row_labels) != set(rows) or len(d.row_labels) != len(rows):
            raise DatasetError("decomposition rows must be P(n)", "decomposition")
        if list(d.col_labels) != list(self.regular):
            raise DatasetError("decomposition columns must match regular labels",
                               "decomposition")
        for i, lam in enumerate(d.row_labels):
            for j, mu in enumerate(d.col_labels):
                x = d.entries[i][j]
                if Fraction(x).denominator != 1 or x < 0:
                    raise DatasetError(f"entry {x} at ({lam}, {mu}) is not a nonnegative integer",
                                       "decomposition", lam)
                if x and mu != lam and lam.dominates(mu):
                    raise DatasetError(f"entry at ({lam}, {mu}) breaks unitriangularity",
                                       "decomposition", lam)
            if lam in self.regular and d.entry(lam, lam) != 1:
                raise DatasetError(f"diagonal entry for {lam} is not 1", "decomposition", lam)

    def _validate_polys(self):
        p = self.p
        for lam, poly in self.brauer_polys.items():
            if not lam.is_regular(p):
                raise DatasetError(f"{lam} is not {p}-regular", "brauer_polys", lam)
            if not poly or not poly.is_homogeneous(lam.weight):
                raise DatasetError(f"B_{lam} is not homogeneous of degree {lam.weight}",
                                   "brauer_polys", lam)
            if any(j % p == 0 for j in poly.variables()):
                raise DatasetError(f"B_{lam} uses a variable t_j with {p} | j",
                                   "brauer_polys", lam)
        missing = [mu for mu in self.regular if mu not in self.brauer_polys]
        if missing and self.decomposition is None:
            raise DatasetError(f"no polynomial for regular label {missing[0]}",
                               "brauer_polys", missing[0])

    def _validate_consistency(self):
        d = self.decomposition
        for i, lam in enumerate(d.row_labels):
            rhs = Poly()
            for j, mu in enumerate(d.col_labels):
                if d.entries[i][j]:
                    rhs = rhs + self.brauer_poly(mu) * d.entries[i][j]
            if rhs != p_reduced_schur(lam, self.p):
                raise DatasetError(f"reduced Schur function of {lam} does not match "
                                   "decomposition times Brauer-Schur polynomials",
                                   "brauer_polys", lam)

    # serialisation ------------------------------------------------------------
    def to_json(self):
        polys = None
        if self.brauer_polys is not None:
            polys = {str(k): v.to_json() for k, v in sorted(
                self.brauer_polys.items(), key=lambda kv: (-kv[0].weight, tuple(-x for x in kv[0])))}
        return {"p": self.p, "n": self.n,
                "regular": [list(x) for x in self.regular],
                "decomposition": None if self.decomposition is None else self.decomposition.to_json(),
                "brauer_polys": polys,
                "source_note": self.source_note}

    @classmethod
    def from_json(cls, data):
        dec = data.get("decomposition")
        polys = data.get("brauer_polys")
        return cls(
            p=int(data["p"]), n=int(data["n"]),
            regular=[Partition(x) for x in data["regular"]],
            decomposition=None if dec is None else ExactMatrix.from_json(dec).as_int(),
            brauer_polys=None if polys is None else {
                Partition.parse(k): Poly.from_json(v) for k, v in polys.items()},
            source_note=data.get("source_note", ""))


def load(path):
    """Read and validate a dataset file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise DatasetError(f"cannot parse {path}: {exc}") from exc
    return ModularDataset.from_json(data).validate()


def save(dataset, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(dataset.to_json(), indent=1) + "\n")
    return path


def dataset_path(p, n, root=None):
    root = default_data_dir() if root is None else Path(root)
    return root / f"p{p}" / f"n{n}.json"


class DatasetStore:
    """A collection of datasets answering Brauer-Schur lookups by label.

    For weights below ``p`` the group algebra is semisimple in characteristic
    ``p``, so ``B_lam`` equals the ordinary Schur function; the store answers
    those without data.
    """

    def __init__(self, datasets=()):
        self.datasets = list(datasets)

    @classmethod
    def from_directory(cls, root=None):
        root = default_data_dir() if root is None else Path(root)
        found = sorted(root.glob("p*/n*.json")) if root.exists() else []
        return cls(load(path) for path in found)

    @classmethod
    def from_files(cls, paths, include_default=True):
        store = cls.from_directory() if include_default else cls()
        for path in paths:
            store.add(load(path))
        return store

    def add(self, dataset):
        # later additions take precedence
        self.datasets.insert(0, dataset)
        return self

    def get(self, p, n):
        for ds in self.datasets:
            if ds.p == p and ds.n == n:
                return ds
        raise DataNotFoundError(f"no dataset for (p={p}, n={n})")

    def has(self, p, n):
        return any(ds.p == p and ds.n == n for ds in self.datasets)

    def brauer_poly(self, lam, p):
        lam = Partition(lam)
        for ds in self.datasets:
            if ds.p == p and ds.covers(lam):
                return ds.brauer_poly(lam)
        if lam.weight < p:
            return schur(lam)
        raise DataNotFoundError(
            f"no Brauer-Schur data for {lam} (p={p}, n0={lam.weight})")


def as_store(data):
    if data is None:
        return DatasetStore.from_directory()
    if isinstance(data, ModularDataset):
        return DatasetStore([data])
    return data


# ----------------------------------------------------------------- derivations

def brauer_from_decomposition(decomposition, p):
    """Solve ``S^(p)_lam = sum_mu d_{lam mu} B_mu`` on the p-regular rows."""
    regular = list(decomposition.col_labels)
    square = decomposition.select(regular, regular)
    inv = inverse(square)
    reduced = {lam: p_reduced_schur(lam, p) for lam in regular}
    out = {}
    for i, mu in enumerate(inv.row_labels):
        poly = Poly()
        for j, lam in enumerate(inv.col_labels):
            if inv.entries[i][j]:
                poly = poly + reduced[lam] * inv.entries[i][j]
        out[mu] = poly
    return out


def decomposition_from_polys(polys, p, n):
    regular = enumerate_partitions(n, "regular", p)
    rows = enumerate_partitions(n)
    mat = solve_expansion([p_reduced_schur(lam, p) for lam in rows],
                          [polys[mu] for mu in regular], rows, regular)
    if not mat.is_integral():
        raise DatasetError("derived decomposition matrix is not integral", "decomposition")
    return mat.as_int()


def factor_scaled_schur(w, nu, p):
    """Write ``w = B(t) * S_nu(t_p, t_2p, ...)`` with ``B`` free of ``t_{jp}``.

    Raises :class:`DatasetError` when no such factorisation exists.
    """
    if not nu:
        return w
    c = schur(nu).substitute_scale(p)
    # monomials split uniquely into a p-free part and a p-divisible part
    anchor, anchor_coef = next(iter(sorted(c.terms.items())))
    b = {}
    for mono, coef in w.terms.items():
        free = tuple((j, m) for j, m in mono if j % p)
        div = tuple((j, m) for j, m in mono if j % p == 0)
        if div == anchor:
            b[free] = coef / anchor_coef
    b = Poly(b)
    if b * c != w:
        raise DatasetError(f"compound basis element does not factor through S_{nu}(t_(p))",
                           "brauer_polys", nu)
    return b


def derive_bootstrap(a_matrix, p, n, source_note=""):
    """Recover Brauer-Schur polynomials from a transition matrix ``A^(p)_n``.

    ``a_matrix`` must have rows labelled by ``P(n)`` and columns by split
    pairs.  The compound basis is ``W = A^{-1} S``; each ``W`` for the pair
    ``(mu, nu)`` is factored as ``B_mu(t) S_nu(t_(p))``.
    """
    if a_matrix.shape[0] != a_matrix.shape[1]:
        raise ValueError("transition matrix must be square")
    inv = inverse(a_matrix)
    targets = {lam: schur(lam) for lam in a_matrix.row_labels}
    polys = {}
    for i, pair in enumerate(inv.row_labels):
        w = Poly()
        for j, lam in enumerate(inv.col_labels):
            if inv.entries[i][j]:
                w = w + targets[lam] * inv.entries[i][j]
        mu, nu = pair
        b = factor_scaled_schur(w, nu, p)
        if mu in polys and polys[mu] != b:
            raise DatasetError(f"inconsistent Brauer-Schur polynomials for {mu}",
                               "brauer_polys", mu)
        polys[mu] = b
    if polys.get(Partition(), Poly.const(1)) != Poly.const(1):
        raise DatasetError("compound basis element for the empty label is not S_nu(t_(p))",
                           "brauer_polys", Partition())
    polys = {mu: b for mu, b in polys.items() if mu}
    regular = enumerate_partitions(n, "regular", p)
    missing = [mu for mu in regular if mu not in polys]
    if missing:
        raise DatasetError(f"transition matrix has no column for ({missing[0]}, ∅)",
                           "regular", missing[0])
    dataset = ModularDataset(
        p=p, n=n, regular=regular,
        decomposition=decomposition_from_polys(polys, p, n),
        brauer_polys=polys,
        source_note=source_note or f"derived from a {n}x{n}-partition transition matrix at p={p}")
    return dataset.validate()


def cartan(dataset):
    """``C = D^T D`` indexed by the regular labels."""
    if dataset.decomposition is None:
        raise DataNotFoundError(f"dataset (p={dataset.p}, n={dataset.n}) has no decomposition")
    d = dataset.decomposition
    return d.T @ d
