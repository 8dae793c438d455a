"""Transition matrices between the Schur basis and the compound bases.

``A_n`` expresses ``S_lam`` in ``W_mu = Q_{mu^r}(t) S_{mu^d}(t')``;
``A_n^(p)`` does the same for ``W^(p)_mu = B_{mu^{r(p)}}(t) S_{mu^{d(p)}}(t_(p))``.
Columns are labelled by split pairs ``(mu, nu)`` and rows by partitions, both
in canonical order.

:func:`verify_all` turns every determinant, block and elementary-divisor law
into a :class:`~symbasis.report.Check`; a failed law is recorded, not raised.
"""

from collections import Counter
from dataclasses import dataclass, field
from math import prod

from .bases import schur, w_pair, w_pair_p
from .errors import DataNotFoundError, InvariantViolation, StructureError
from .linalg import (ExactMatrix, block_decompose, determinant, hermite_normal_form,
                     smith_normal_form, solve_expansion)
from .modular import as_store, cartan
from .partitions import (enumerate_partitions, exponent_delta, exponent_fiber, exponent_k,
                         exponent_k_glaisher, glaisher_excess, split_pairs)
from .report import Check, Report


def build_A(n):
    """``A_n`` for ``p = 2`` with the Q-function compound basis."""
    rows = enumerate_partitions(n)
    cols = split_pairs(n, 2)
    a = solve_expansion([schur(lam) for lam in rows], [w_pair(c) for c in cols], rows, cols)
    if not a.is_integral():
        raise InvariantViolation(f"A_{n} has non-integral entries")
    return a.as_int()


def build_A_p(n, p, data=None):
    """``A_n^(p)`` in the Brauer-Schur compound basis.

    ``data`` is a dataset, a :class:`~symbasis.modular.DatasetStore`, or
    ``None`` for the bundled data.  Missing Brauer-Schur data raises
    :class:`DataNotFoundError` naming the weight that is missing.
    """
    store = as_store(data)
    rows = enumerate_partitions(n)
    cols = split_pairs(n, p)
    basis = [w_pair_p(c, p, store) for c in cols]
    a = solve_expansion([schur(lam) for lam in rows], basis, rows, cols)
    if not a.is_integral():
        raise InvariantViolation(f"A_{n}^({p}) has non-integral entries")
    return a.as_int()


def stembridge_submatrix(a):
    """Columns ``(mu, ∅)`` of ``A_n``; all entries must be nonnegative."""
    cols = [c for c in a.col_labels if not c.second]
    gamma = a.select(None, cols)
    for i, row in enumerate(gamma.entries):
        for j, x in enumerate(row):
            if x < 0:
                raise InvariantViolation(
                    f"negative Stembridge coefficient {x} at ({gamma.row_labels[i]}, {cols[j]})")
    return gamma.relabel(cols=[c.first for c in cols])


def gram(a):
    """``A^T A``."""
    return a.T @ a


def block_key(label):
    return (label.n0, label.n1)


def gram_blocks(g):
    return block_decompose(g, block_key)


def principal_divisors(n, p=2):
    """The predicted elementary divisors ``{p^{excess(lam)}}`` over p-regular ``lam``."""
    return sorted(p ** glaisher_excess(lam, p) for lam in enumerate_partitions(n, "regular", p))


def _power_exponent(value, p):
    """``k`` with ``|value| = p^k``, else ``None``."""
    value = abs(int(value))
    if value == 0:
        return None
    k = 0
    while value % p == 0:
        value //= p
        k += 1
    return k if value == 1 else None


@dataclass
class TransitionReport:
    n: int
    p: int
    matrix: ExactMatrix = None
    k: int = None
    det: int = None
    checks: list = field(default_factory=list)
    blocks: dict = field(default_factory=dict)
    basis: str = "q"

    def _status(self, prefix):
        hits = [c for c in self.checks if c.name.startswith(prefix)]
        return bool(hits) and all(c.passed for c in hits)

    @property
    def det_ok(self):
        return self._status("det")

    @property
    def integral_ok(self):
        return self._status("integral")

    @property
    def block_ok(self):
        return self._status("block")

    @property
    def ok(self):
        return all(c.status != "fail" for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if c.status == "fail"]

    def to_json(self, matrix_ref=None):
        out = {"n": self.n, "p": self.p, "basis": self.basis, "k": self.k,
               "det": self.det, "ok": self.ok,
               "checks": [c.to_json() for c in self.checks],
               "blocks": {f"{a},{b}": v for (a, b), v in self.blocks.items()}}
        if matrix_ref is not None:
            out["matrix_ref"] = str(matrix_ref)
        return out


def verify_all(n, p=2, data=None, basis=None):
    """Build the transition matrix and check every determinant/block/divisor law.

    For ``p = 2`` the default basis is the Q-function one (``basis="q"``);
    ``basis="brauer"`` uses Brauer-Schur data instead.  For ``p > 2`` Brauer
    data is required; when it is missing the checks are reported as skipped.
    """
    basis = basis or ("q" if p == 2 else "brauer")
    report = TransitionReport(n=n, p=p, basis=basis, k=exponent_k(n, p))
    try:
        a = build_A(n) if basis == "q" else build_A_p(n, p, data)
    except DataNotFoundError as exc:
        report.checks.append(Check.skipped(f"build A_{n}^({p})", str(exc)))
        return report
    report.matrix = a
    report.checks.append(Check.compare("integral entries", a.is_integral(), True))

    det = determinant(a)
    report.det = int(det)
    report.checks.append(Check.compare(f"det |A_{n}| = {p}^k", _power_exponent(det, p),
                                       report.k, note=f"sign {'+' if det > 0 else '-'}"))
    if p == 2:
        report.checks.append(Check.compare("det exponent: sum l(d) = sum l(~r) - l(r)",
                                           report.k, exponent_k_glaisher(n)))

    g = gram(a)
    try:
        blocks = gram_blocks(g)
    except StructureError as exc:
        report.checks.append(Check("block diagonal", "fail", note=str(exc)))
        return report
    report.checks.append(Check.compare("block diagonal", True, True))

    block_dets = []
    for (n0, n1), blk in blocks:
        bdet = int(determinant(blk))
        block_dets.append(bdet)
        expected = exponent_delta(n0, n1, p)
        divisors = smith_normal_form(blk)
        report.blocks[(n0, n1)] = {"det": bdet, "expected_exponent": expected,
                                   "divisors": divisors}
        report.checks.append(Check.compare(f"block ({n0},{n1}) |det| = {p}^Delta",
                                           _power_exponent(bdet, p), expected))
        if p == 2:
            report.checks.append(Check.compare(f"block ({n0},{n1}) fiber exponent = Delta",
                                               exponent_fiber(n0, n1), expected))
        if n1 == 0:
            report.checks.append(Check.compare(f"block ({n0},0) elementary divisors",
                                               divisors, principal_divisors(n0, p)))
    report.checks.append(Check.compare("block product = det^2", prod(block_dets), report.det ** 2))
    return report


def compare_decomposition(n, dataset=None):
    """Compare the Stembridge matrix with a ``p = 2`` decomposition matrix.

    Checks column-equivalence over ``Z`` (equal Hermite forms) and equality
    of the elementary divisors of ``Gamma^T Gamma`` and ``D^T D``.
    """
    report = Report(f"Stembridge vs decomposition n={n}")
    gamma = stembridge_submatrix(build_A(n))
    g = gram(gamma)
    report.add(Check.compare(f"SNF(G_{n}) = Glaisher powers", smith_normal_form(g),
                             principal_divisors(n, 2)))
    reason = f"no decomposition matrix for (p=2, n={n})"
    if dataset is None:
        try:
            dataset = as_store(None).get(2, n)
        except DataNotFoundError as exc:
            reason = str(exc)
    if dataset is None or dataset.decomposition is None:
        report.add(Check.skipped(f"HNF(Gamma_{n}) = HNF(D_{n})", reason))
        report.add(Check.skipped(f"SNF(G_{n}) = SNF(C_{n})", reason))
        return report
    if dataset.p != 2 or dataset.n != n:
        raise ValueError(f"dataset is for (p={dataset.p}, n={dataset.n}), need (2, {n})")
    d = dataset.decomposition.select(gamma.row_labels, gamma.col_labels)
    report.add(Check.compare(f"HNF(Gamma_{n}) = HNF(D_{n})",
                             hermite_normal_form(gamma).to_list(),
                             hermite_normal_form(d).to_list()))
    report.add(Check.compare(f"SNF(G_{n}) = SNF(C_{n})", smith_normal_form(g),
                             smith_normal_form(cartan(dataset))))
    return report


def signs(nmax):
    """Observed sign of ``det A_n`` for ``n = 1..nmax`` (recorded, never asserted)."""
    return {n: (1 if determinant(build_A(n)) > 0 else -1) for n in range(1, nmax + 1)}


def divisor_table(n, p=2, data=None):
    """Elementary divisors of every Gram block, as multisets of exponents."""
    a = build_A(n) if (p == 2 and data is None) else build_A_p(n, p, data)
    out = {}
    for key, blk in gram_blocks(gram(a)):
        out[key] = dict(sorted(Counter(_power_exponent(d, p) for d in smith_normal_form(blk)).items()))
    return out
