"""Schur functions, Q-functions, the compound bases and their character oracles.

In the ``t`` coordinates the one-row generating functions are::

    sum_r h_r z^r = exp(sum_j t_j z^j)
    sum_r e_r z^r = exp(sum_j (-1)^(j-1) t_j z^j)
    sum_r Q_r z^r = exp(sum_{j odd} t_j z^j)

``S_lam`` is the Jacobi-Trudi determinant ``det(h_{lam_i - i + j})`` (or the
dual form in ``e`` when the conjugate is shorter).  ``Q_lam`` is assembled
from the two-row functions

    Q_(a,b) = Q_a Q_b + 2 sum_{i=1}^{b} (-1)^i Q_{a+i} Q_{b-i}

by a Pfaffian, padding odd-length ``lam`` with a zero part.  With this sign
convention the ``Q_lam`` are pairwise orthogonal for ``<,>'`` and reproduce
the small transition tables.

Characters are never used to build anything: ``chi`` (Murnaghan-Nakayama)
and ``zeta`` (coefficient extraction from ``Q``) serve as oracles.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import InvariantViolation
from .partitions import Partition, enumerate_partitions, split_p, split_parity
from .polyring import Poly, mono_factorial, power_sum_monomial


def _as_partition(lam):
    return lam if isinstance(lam, Partition) else Partition(lam)


def _exp_series_coefficient(r, allowed, sign):
    """Coefficient of ``z^r`` in ``exp(sum_{j in allowed} sign(j) t_j z^j)``."""
    terms = {}
    for rho in enumerate_partitions(r):
        if not all(allowed(x) for x in rho):
            continue
        mono = power_sum_monomial(rho)
        c = Fraction(1, mono_factorial(mono))
        for x in rho:
            c *= sign(x)
        terms[mono] = c
    return Poly(terms)


@lru_cache(maxsize=None)
def complete_h(r):
    """``h_r`` in the ``t`` coordinates (``h_0 = 1``, ``h_r = 0`` for ``r < 0``)."""
    if r < 0:
        return Poly()
    return _exp_series_coefficient(r, lambda j: True, lambda j: 1)


@lru_cache(maxsize=None)
def elementary_e(r):
    if r < 0:
        return Poly()
    return _exp_series_coefficient(r, lambda j: True, lambda j: -1 if j % 2 == 0 else 1)


@lru_cache(maxsize=None)
def q_one_row(r):
    """``Q_r``: only odd-index variables occur."""
    if r < 0:
        return Poly()
    return _exp_series_coefficient(r, lambda j: j % 2 == 1, lambda j: 1)


def poly_det(matrix):
    """Determinant of a square matrix of :class:`Poly` by Laplace expansion
    memoised over the set of used columns (``O(2^n n)`` products)."""
    size = len(matrix)
    memo = {}

    def minor(row, used):
        if row == size:
            return Poly.const(1)
        if used in memo:
            return memo[used]
        total = Poly()
        pos = 0
        for col in range(size):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if entry:
                term = entry * minor(row + 1, used | (1 << col))
                total = total - term if pos % 2 else total + term
            pos += 1
        memo[used] = total
        return total

    return minor(0, 0)


@lru_cache(maxsize=None)
def schur(lam):
    """``S_lam(t)``, homogeneous of degree ``|lam|``."""
    lam = _as_partition(lam)
    conj = lam.conjugate()
    if len(conj) < len(lam):
        rows, entry = conj, elementary_e
    else:
        rows, entry = lam, complete_h
    k = len(rows)
    if k == 0:
        return Poly.const(1)
    matrix = [[entry(rows[i] - i + j) for j in range(k)] for i in range(k)]
    return poly_det(matrix)


# ------------------------------------------------------------ character oracles

@lru_cache(maxsize=None)
def _mn(lam, rho):
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in beads:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((target if c == b else c for c in beta), reverse=True)
        new_lam = tuple(new_beta[i] - (length - 1 - i) for i in range(length))
        new_lam = Partition(x for x in new_lam if x > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def murnaghan_nakayama(lam, rho):
    """``chi^lam_rho`` by border-strip removal."""
    lam, rho = _as_partition(lam), _as_partition(rho)
    if lam.weight != rho.weight:
        raise ValueError(f"weights differ: {lam} vs {rho}")
    return _mn(lam, rho)


def schur_from_characters(lam):
    """``S_lam = sum_rho chi^lam_rho t^m / prod m!``, used only as an oracle."""
    lam = _as_partition(lam)
    terms = {}
    for rho in enumerate_partitions(lam.weight):
        mono = power_sum_monomial(rho)
        terms[mono] = Fraction(murnaghan_nakayama(lam, rho), mono_factorial(mono))
    return Poly(terms)


def character_extract(lam, rho):
    """``chi^lam_rho`` read back from the coefficients of :func:`schur`."""
    mono = power_sum_monomial(rho)
    value = schur(_as_partition(lam)).coefficient(mono) * mono_factorial(mono)
    if value.denominator != 1:
        raise InvariantViolation(f"non-integral character at {lam}, {rho}")
    return value.numerator


# ------------------------------------------------------------------ Q-functions

@lru_cache(maxsize=None)
def q_two_row(a, b):
    """``Q_(a,b)`` for ``a > b >= 0``."""
    total = q_one_row(a) * q_one_row(b)
    for i in range(1, b + 1):
        term = q_one_row(a + i) * q_one_row(b - i)
        total = total + term.scale(2 * (-1) ** i)
    return total


def _pfaffian(entry, indices):
    memo = {}

    def pf(rest):
        if not rest:
            return Poly.const(1)
        if rest in memo:
            return memo[rest]
        first, others = rest[0], rest[1:]
        total = Poly()
        for pos, j in enumerate(others):
            sub = others[:pos] + others[pos + 1:]
            term = entry(first, j) * pf(sub)
            total = total - term if pos % 2 else total + term
        memo[rest] = total
        return total

    return pf(tuple(indices))


@lru_cache(maxsize=None)
def qfun(lam):
    """``Q_lam(t)`` for a strict partition ``lam``."""
    lam = _as_partition(lam)
    if not lam.is_strict():
        raise ValueError(f"{lam} is not strict")
    if len(lam) == 0:
        return Poly.const(1)
    if len(lam) == 1:
        return q_one_row(lam[0])
    parts = list(lam) + ([0] if len(lam) % 2 else [])
    return _pfaffian(lambda i, j: q_two_row(parts[i], parts[j]), range(len(parts)))


def spin_exponent(lam, rho):
    """The power of 2 in front of ``zeta^lam_rho``: ``(l(lam) - l(rho) + eps) / 2``."""
    diff = len(lam) - len(rho)
    eps = diff % 2
    return (diff + eps) // 2


def spin_char_extract(lam, rho):
    """``zeta^lam_rho`` recovered from the coefficients of ``Q_lam``."""
    lam, rho = _as_partition(lam), _as_partition(rho)
    if not lam.is_strict() or not rho.is_odd() or lam.weight != rho.weight:
        raise ValueError(f"need strict lam and odd rho of equal weight: {lam}, {rho}")
    mono = power_sum_monomial(rho)
    value = qfun(lam).coefficient(mono) * mono_factorial(mono) / Fraction(2) ** spin_exponent(lam, rho)
    if value.denominator != 1:
        raise InvariantViolation(f"non-integral spin character at {lam}, {rho}")
    return value.numerator


# ------------------------------------------------------------- compound bases

@lru_cache(maxsize=None)
def w_basis(lam):
    """``W_lam = Q_{lam^r}(t) S_{lam^d}(t')``."""
    r, d = split_parity(_as_partition(lam))
    return qfun(r) * schur(d).substitute_double()


def w_pair(pair):
    """``W`` addressed by its split pair ``(mu, nu)``: ``Q_mu(t) S_nu(t')``."""
    mu, nu = pair
    return qfun(_as_partition(mu)) * schur(_as_partition(nu)).substitute_double()


def p_reduced_schur(lam, p):
    """``S_lam`` with every ``t_{jp}`` set to zero."""
    return schur(_as_partition(lam)).reduce_p(p)


def brauer_schur(lam, data, p=None):
    """``B^(p)_lam`` looked up in ``data`` (a dataset or a dataset store)."""
    lam = _as_partition(lam)
    p = data.p if p is None else p
    if not lam.is_regular(p):
        raise ValueError(f"{lam} is not {p}-regular")
    return data.brauer_poly(lam, p)


def w_basis_p(lam, p, data):
    """``W^(p)_lam = B^(p)_{lam^{r(p)}}(t) S_{lam^{d(p)}}(t_p, t_2p, ...)``."""
    r, d = split_p(_as_partition(lam), p)
    return w_pair_p((r, d), p, data)


def w_pair_p(pair, p, data):
    mu, nu = pair
    return brauer_schur(mu, data, p) * schur(_as_partition(nu)).substitute_scale(p)


def clear_caches():
    for fn in (complete_h, elementary_e, q_one_row, schur, _mn, q_two_row, qfun, w_basis):
        fn.cache_clear()


def dimension(lam):
    """Number of standard tableaux of shape ``lam`` (hook length formula)."""
    lam = _as_partition(lam)
    conj = lam.conjugate()
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(lam.weight) // hooks
