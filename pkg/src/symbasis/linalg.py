"""Exact dense linear algebra with labelled rows and columns.

Everything is over :class:`fractions.Fraction` or Python ints.  Determinants
use fraction-free (Bareiss) elimination; Smith and Hermite normal forms use
plain integer elimination, which is fine for the matrix sizes that occur here
(at most a few hundred rows).
"""

import csv
import io
import json
from fractions import Fraction
from math import gcd

from .errors import RankDeficiencyError, StructureError
from .partitions import Partition, SplitPair


# --------------------------------------------------------------------- labels

def label_to_json(label):
    if isinstance(label, SplitPair):
        return label.to_json()
    if isinstance(label, Partition):
        return list(label)
    return label


def label_from_json(data):
    if isinstance(data, list) and len(data) == 2 and all(isinstance(x, list) for x in data):
        return SplitPair(Partition(data[0]), Partition(data[1]))
    if isinstance(data, list):
        return Partition(data)
    return data


def label_text(label, compact=False):
    if compact and isinstance(label, Partition):
        return f"({label.compact()})"
    if compact and hasattr(label, "compact"):
        return label.compact()
    return str(label)


def _num_text(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class ExactMatrix:
    """A dense matrix of exact rationals with row and column labels."""

    def __init__(self, entries, row_labels=None, col_labels=None):
        rows = [[_exact(x) for x in row] for row in entries]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else (len(col_labels) if col_labels is not None else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged entries")
        self.row_labels = list(range(nrows)) if row_labels is None else list(row_labels)
        self.col_labels = list(range(ncols)) if col_labels is None else list(col_labels)
        if len(self.row_labels) != nrows or len(self.col_labels) != ncols:
            raise ValueError("label count does not match entries")
        if len(set(self.row_labels)) != nrows or len(set(self.col_labels)) != ncols:
            raise ValueError("labels must be unique")
        self.entries = rows

    @property
    def shape(self):
        return len(self.row_labels), len(self.col_labels)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def entry(self, row_label, col_label):
        return self.entries[self.row_labels.index(row_label)][self.col_labels.index(col_label)]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.row_labels == other.row_labels and self.col_labels == other.col_labels
                and self.entries == other.entries)

    def __repr__(self):
        return f"ExactMatrix({self.to_list()!r})"

    def to_list(self):
        return [[_plain(x) for x in row] for row in self.entries]

    def is_integral(self):
        return all(_is_int(x) for row in self.entries for x in row)

    def as_int(self):
        if not self.is_integral():
            raise ValueError("matrix has non-integral entries")
        return ExactMatrix([[int(x) for x in row] for row in self.entries],
                           self.row_labels, self.col_labels)

    def transpose(self):
        return ExactMatrix([list(col) for col in zip(*self.entries)] if self.entries
                           else [], self.col_labels, self.row_labels)

    T = property(transpose)

    def __matmul__(self, other):
        if self.shape[1] != other.shape[0]:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries)) if other.entries else [()] * other.shape[1]
        out = [[sum((a * b for a, b in zip(row, col)), 0) for col in cols]
               for row in self.entries]
        return ExactMatrix(out, self.row_labels, other.col_labels)

    def select(self, rows=None, cols=None):
        """Submatrix on the given row and column labels (in the order given)."""
        rows = self.row_labels if rows is None else list(rows)
        cols = self.col_labels if cols is None else list(cols)
        ri = [self.row_labels.index(r) for r in rows]
        ci = [self.col_labels.index(c) for c in cols]
        return ExactMatrix([[self.entries[i][j] for j in ci] for i in ri], rows, cols)

    def relabel(self, rows=None, cols=None):
        return ExactMatrix(self.entries, self.row_labels if rows is None else rows,
                           self.col_labels if cols is None else cols)

    # serialisation ------------------------------------------------------------
    def to_json(self):
        return {"rows": [label_to_json(l) for l in self.row_labels],
                "cols": [label_to_json(l) for l in self.col_labels],
                "entries": [[_num_text(x) for x in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls([[Fraction(x) for x in row] for row in data["entries"]],
                   [label_from_json(l) for l in data["rows"]],
                   [label_from_json(l) for l in data["cols"]])

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + [label_text(c) for c in self.col_labels])
        for label, row in zip(self.row_labels, self.entries):
            writer.writerow([label_text(label)] + [_num_text(x) for x in row])
        return buf.getvalue()

    def to_markdown(self):
        head = [""] + [label_text(c, compact=True) for c in self.col_labels]
        lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
        for label, row in zip(self.row_labels, self.entries):
            cells = [label_text(label, compact=True)] + [_num_text(x) for x in row]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"


def _exact(x):
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _plain(x):
    return int(x) if _is_int(x) else x


def _is_int(x):
    return isinstance(x, int) or Fraction(x).denominator == 1


def identity(labels):
    labels = list(labels)
    k = len(labels)
    return ExactMatrix([[int(i == j) for j in range(k)] for i in range(k)], labels, labels)


# ----------------------------------------------------------------- determinant

def _rows(m):
    return m.entries if isinstance(m, ExactMatrix) else [list(r) for r in m]


def determinant(m):
    """Exact determinant by Bareiss elimination after clearing denominators."""
    rows = _rows(m)
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ValueError("determinant needs a square matrix")
    if size == 0:
        return 1
    scale = Fraction(1)
    work = []
    for row in rows:
        den = 1
        for x in row:
            den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
        scale /= den
        work.append([int(Fraction(x) * den) for x in row])
    sign = 1
    prev = 1
    for k in range(size - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if work[i][k]), None)
            if swap is None:
                return 0
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = pivot
    return _exact(sign * work[-1][-1] * scale)


# ---------------------------------------------------------------------- solve

def solve_expansion(targets, basis, row_labels=None, col_labels=None):
    """Coefficients ``X`` with ``targets[i] = sum_j X[i, j] * basis[j]``.

    The polynomials are compared in monomial coordinates over the union of
    their supports.  A dependent basis, or a target outside the span, raises
    :class:`RankDeficiencyError` naming the offending label.
    """
    row_labels = list(range(len(targets))) if row_labels is None else list(row_labels)
    col_labels = list(range(len(basis))) if col_labels is None else list(col_labels)
    monos = set()
    for f in list(targets) + list(basis):
        monos |= f.monomials()
    monos = sorted(monos)
    k, r = len(basis), len(targets)
    # augmented system: one row per monomial, columns = basis | targets
    aug = [[b.coefficient(mono) for b in basis] + [t.coefficient(mono) for t in targets]
           for mono in monos]
    pivots = []
    row = 0
    for col in range(k):
        piv = next((i for i in range(row, len(aug)) if aug[i][col]), None)
        if piv is None:
            raise RankDeficiencyError(
                f"basis element {label_text(col_labels[col])} is dependent on earlier ones",
                col_labels[col])
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / Fraction(aug[row][col])
        aug[row] = [x * inv for x in aug[row]]
        for i in range(len(aug)):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append(row)
        row += 1
    for i in range(row, len(aug)):
        for t in range(r):
            if aug[i][k + t]:
                raise RankDeficiencyError(
                    f"target {label_text(row_labels[t])} is outside the span of the basis",
                    row_labels[t])
    x = [[aug[pivots[j]][k + t] for j in range(k)] for t in range(r)]
    return ExactMatrix(x, row_labels, col_labels)


def inverse(m):
    """Exact inverse of a square matrix (labels swap roles)."""
    rows = [list(map(Fraction, r)) for r in m.entries]
    size = len(rows)
    if m.shape != (size, size):
        raise ValueError("inverse needs a square matrix")
    aug = [r + [Fraction(int(i == j)) for j in range(size)] for i, r in enumerate(rows)]
    for col in range(size):
        piv = next((i for i in range(col, size) if aug[i][col]), None)
        if piv is None:
            raise RankDeficiencyError("matrix is singular", m.col_labels[col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(size):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return ExactMatrix([r[size:] for r in aug], m.col_labels, m.row_labels)


# ----------------------------------------------------------- normal forms

def _int_rows(m):
    rows = _rows(m)
    out = []
    for row in rows:
        new = []
        for x in row:
            if not _is_int(x):
                raise ValueError("normal forms need integer entries")
            new.append(int(x))
        out.append(new)
    return out


def smith_normal_form(m):
    """Elementary divisors ``d_1 | d_2 | ... | d_r`` of an integer matrix.

    Returns ``min(rows, cols)`` nonnegative integers; zeros (rank deficiency)
    come last.
    """
    a = _int_rows(m)
    nr = len(a)
    nc = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(nr, nc):
        # pivot: smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, nc):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # divisibility repair: p must divide the whole remaining block
                bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t into the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, nr) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, nc) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    diag.extend([0] * (min(nr, nc) - len(diag)))
    return diag


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_normal_form(m, keep_zero_columns=False):
    """Column-style Hermite normal form of an integer matrix.

    The result ``H = M U`` (``U`` unimodular) is in lower column-echelon form:
    each nonzero column has a positive leading entry strictly below the
    previous column's, and entries left of a pivot in its row lie in
    ``[0, pivot)``.  Two integer matrices are column-equivalent over ``Z``
    exactly when their forms agree.
    """
    a = _int_rows(m)
    nr = len(a)
    nc = len(a[0]) if a else 0
    cols = [[a[i][j] for i in range(nr)] for j in range(nc)]
    piv_col = 0
    for i in range(nr):
        if piv_col >= nc:
            break
        for j in range(piv_col + 1, nc):
            if cols[j][i] == 0:
                continue
            x, y = cols[piv_col][i], cols[j][i]
            g, s, t = _xgcd(x, y)
            u, v = x // g, y // g
            cp, cj = cols[piv_col], cols[j]
            cols[piv_col] = [s * p + t * q for p, q in zip(cp, cj)]
            cols[j] = [-v * p + u * q for p, q in zip(cp, cj)]
        pivot = cols[piv_col][i]
        if pivot == 0:
            continue
        if pivot < 0:
            cols[piv_col] = [-x for x in cols[piv_col]]
            pivot = -pivot
        for j in range(piv_col):
            q = cols[j][i] // pivot
            if q:
                cols[j] = [x - q * y for x, y in zip(cols[j], cols[piv_col])]
        piv_col += 1
    if not keep_zero_columns:
        cols = cols[:piv_col]
    else:
        cols = cols[:piv_col] + [[0] * nr for _ in range(nc - piv_col)]
    return ExactMatrix([[c[i] for c in cols] for i in range(nr)] if cols
                       else [[] for _ in range(nr)],
                       m.row_labels if isinstance(m, ExactMatrix) else None,
                       None if not cols else list(range(len(cols))))


def column_equivalent(a, b):
    return hermite_normal_form(a).entries == hermite_normal_form(b).entries


# ---------------------------------------------------------------------- blocks

def block_decompose(m, key):
    """Split a square matrix into diagonal blocks by ``key(label)``.

    Returns ``[(k, block), ...]`` in order of first appearance.  Any nonzero
    entry joining two different keys raises :class:`StructureError`.
    """
    if m.row_labels != m.col_labels:
        raise ValueError("block_decompose needs identical row and column labels")
    keys = [key(label) for label in m.row_labels]
    for i, ki in enumerate(keys):
        for j, kj in enumerate(keys):
            if ki != kj and m.entries[i][j]:
                raise StructureError(
                    f"nonzero entry {m.entries[i][j]} at ({label_text(m.row_labels[i])}, "
                    f"{label_text(m.col_labels[j])}) between blocks {ki} and {kj}",
                    (i, j))
    order = []
    for k in keys:
        if k not in order:
            order.append(k)
    out = []
    for k in order:
        labels = [l for l, kk in zip(m.row_labels, keys) if kk == k]
        out.append((k, m.select(labels, labels)))
    return out


def block_assemble(blocks, labels):
    """Inverse of :func:`block_decompose` for a given overall label order."""
    index = {}
    for _, block in blocks:
        for i, ri in enumerate(block.row_labels):
            for j, cj in enumerate(block.col_labels):
                index[ri, cj] = block.entries[i][j]
    return ExactMatrix([[index.get((r, c), 0) for c in labels] for r in labels],
                       labels, labels)
