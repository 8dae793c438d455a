"""Partitions, their classification, and the splitting bijections.

A partition is stored as a weakly decreasing tuple of positive integers.
Multiplicities are derived on demand.  The canonical order on partitions of
a fixed weight is reverse lexicographic, so ``(n)`` comes first and
``(1^n)`` last.

Three maps are provided:

* :func:`split_p` sends ``lam`` to ``(lam^{r(p)}, lam^{d(p)})`` where
  ``m_i(r) = m_i(lam) mod p`` and ``m_i(d) = m_i(lam) // p``.  For ``p = 2``
  this is :func:`split_parity`.
* :func:`split_even_odd` sends ``lam`` to (odd parts, halves of even parts).
* :func:`glaisher` sends a p-regular partition to a p-class-regular one by
  replacing each part ``p^a q`` (``q`` prime to ``p``) by ``p^a`` copies of ``q``.
"""

import re
from collections import Counter
from functools import lru_cache
from typing import NamedTuple

from .errors import InvariantViolation
from .report import Check, Report

#: Upper bound on the weight accepted by :func:`enumerate_partitions`.
WEIGHT_LIMIT = 64

KINDS = ("all", "strict", "odd", "regular", "class_regular")


class Partition(tuple):
    """An integer partition as an immutable, weakly decreasing tuple."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_multiplicities(cls, mult):
        parts = []
        for i in sorted(mult, reverse=True):
            parts.extend([i] * mult[i])
        return cls(parts)

    @classmethod
    def parse(cls, text):
        """Parse ``"[5,4,4,2,1]"`` or the exponent shorthand ``"5.4^2.2.1"``."""
        text = text.strip()
        if text in ("", "[]", "()", "0", "∅"):
            return cls()
        if text[0] in "[(":
            body = text.strip("[]() ")
            if not body:
                return cls()
            return cls(int(x) for x in body.split(","))
        parts = []
        for token in re.split(r"[.\s]+", text):
            if not token:
                continue
            base, _, exp = token.partition("^")
            parts.extend([int(base)] * (int(exp) if exp else 1))
        return cls(sorted(parts, reverse=True))

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def multiplicities(self):
        """Map ``i -> m_i`` for the parts that occur."""
        return dict(Counter(self))

    def multiplicity(self, i):
        return self.count(i)

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def is_strict(self):
        return all(self[i] > self[i + 1] for i in range(len(self) - 1))

    def is_odd(self):
        return all(x % 2 for x in self)

    def is_regular(self, p):
        return all(m < p for m in Counter(self).values())

    def is_class_regular(self, p):
        return all(x % p for x in self)

    def dominates(self, other):
        """True if ``self`` dominates ``other`` (equal weights assumed)."""
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self):
        return f"Partition({list(self)})"

    def compact(self):
        """Compact text as in printed tables: ``(5^3 4^4 1)`` becomes ``5^34^41``."""
        if not self:
            return "∅"
        sep = "" if self[0] < 10 else ","
        out = []
        for i, m in sorted(Counter(self).items(), reverse=True):
            out.append(f"{i}^{m}" if m > 1 else f"{i}")
        return sep.join(out)

    def to_json(self):
        return list(self)


EMPTY = Partition()


class SplitPair(NamedTuple):
    """A pair of partitions produced by one of the splitting maps."""

    first: Partition
    second: Partition

    @property
    def n0(self):
        return self.first.weight

    @property
    def n1(self):
        return self.second.weight

    def __str__(self):
        return f"({self.first},{self.second})"

    def compact(self):
        return f"({self.first.compact()},{self.second.compact()})"

    def to_json(self):
        return [list(self.first), list(self.second)]


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def _check_prime(p):
    if not is_prime(p):
        raise ValueError(f"p must be a prime, got {p!r}")


def _as_partition(lam):
    return lam if isinstance(lam, Partition) else Partition(lam)


@lru_cache(maxsize=None)
def _all_partitions(n, largest):
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _all_partitions(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def enumerate_partitions(n, kind="all", p=2, limit=None):
    """All partitions of ``n`` of the given kind, in canonical order.

    ``kind`` is one of ``all``, ``strict``, ``odd``, ``regular`` (no part
    repeated ``p`` or more times) or ``class_regular`` (no part divisible by
    ``p``).  ``p`` is only consulted for the last two.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = WEIGHT_LIMIT if limit is None else limit
    if n > limit:
        raise ValueError(f"weight {n} exceeds the configured limit {limit}")
    if kind not in KINDS:
        raise ValueError(f"unknown partition kind {kind!r}")
    if kind in ("regular", "class_regular"):
        _check_prime(p)
    parts = _all_partitions(n, n)
    if kind == "all":
        return list(parts)
    test = {
        "strict": Partition.is_strict,
        "odd": Partition.is_odd,
        "regular": lambda lam: lam.is_regular(p),
        "class_regular": lambda lam: lam.is_class_regular(p),
    }[kind]
    return [lam for lam in parts if test(lam)]


def canonical_key(lam):
    """Sort key realising the canonical order (heavier first, then reverse lex)."""
    return (-lam.weight, tuple(-x for x in lam))


def pair_key(pair):
    """Sort key for split pairs: ``n1`` ascending, then each component canonically."""
    return (pair.n1, canonical_key(pair.first), canonical_key(pair.second))


# ---------------------------------------------------------------- splitting maps

def split_p(lam, p):
    """``lam -> (lam^{r(p)}, lam^{d(p)})``."""
    _check_prime(p)
    lam = _as_partition(lam)
    r, d = {}, {}
    for i, m in Counter(lam).items():
        if m % p:
            r[i] = m % p
        if m // p:
            d[i] = m // p
    return SplitPair(Partition.from_multiplicities(r), Partition.from_multiplicities(d))


def merge_p(pair, p):
    """Inverse of :func:`split_p`."""
    first, second = pair
    mult = Counter(first)
    for i, m in Counter(second).items():
        mult[i] += p * m
    return Partition.from_multiplicities(mult)


def split_parity(lam):
    """``lam -> (lam^r, lam^d)``: odd-multiplicity parts once, and half the rest."""
    return split_p(lam, 2)


def merge_parity(pair):
    return merge_p(pair, 2)


def split_even_odd(lam):
    """``lam -> (lam^o, lam^e)``: the odd parts, and the halves of the even parts."""
    lam = _as_partition(lam)
    return SplitPair(Partition(x for x in lam if x % 2),
                     Partition(x // 2 for x in lam if x % 2 == 0))


def merge_even_odd(pair):
    odd, half = pair
    return Partition(sorted(list(odd) + [2 * x for x in half], reverse=True))


def glaisher(lam, p=2):
    """Send a p-regular partition to the p-class-regular partition of the same weight."""
    _check_prime(p)
    lam = _as_partition(lam)
    if not lam.is_regular(p):
        raise ValueError(f"{lam} is not {p}-regular")
    parts = []
    for x in lam:
        power = 1
        while x % p == 0:
            x //= p
            power *= p
        parts.extend([x] * power)
    return Partition(sorted(parts, reverse=True))


def inverse_glaisher(rho, p=2):
    """Inverse of :func:`glaisher`: write each multiplicity in base ``p``."""
    _check_prime(p)
    rho = _as_partition(rho)
    if not rho.is_class_regular(p):
        raise ValueError(f"{rho} is not {p}-class-regular")
    parts = []
    for q, m in Counter(rho).items():
        power = 1
        while m:
            parts.extend([q * power] * (m % p))
            m //= p
            power *= p
    return Partition(sorted(parts, reverse=True))


def split_pairs(n, p=2):
    """Every pair in ``P^{r(p)}(n0) x P(n1)`` with ``n0 + p*n1 = n``, in pair order."""
    _check_prime(p)
    out = []
    for n1 in range(n // p + 1):
        n0 = n - p * n1
        for mu in enumerate_partitions(n0, "regular", p):
            for nu in enumerate_partitions(n1):
                out.append(SplitPair(mu, nu))
    return out


def fiber(n0, n1, p=2):
    """``P(n0, n1)``: partitions of ``n0 + p*n1`` whose split lands in weights ``(n0, n1)``."""
    _check_prime(p)
    return [lam for lam in enumerate_partitions(n0 + p * n1)
            if split_p(lam, p).n0 == n0]


# ----------------------------------------------------------- length statistics

def _len_glaisher_r(lam):
    return len(glaisher(split_parity(lam).first, 2))


_STATS = {
    "l": len,
    "l(r)": lambda lam: len(split_parity(lam).first),
    "l(d)": lambda lam: len(split_parity(lam).second),
    "l(o)": lambda lam: len(split_even_odd(lam).first),
    "l(e)": lambda lam: len(split_even_odd(lam).second),
    "l(~r)": _len_glaisher_r,
}


def _sum(lams, expr):
    total = 0
    for lam in lams:
        s = {k: f(lam) for k, f in _STATS.items()}
        total += expr(s)
    return total


_TOTAL_FAMILY = [
    ("l(lam)", lambda s: s["l"]),
    ("l(r)+2l(d)", lambda s: s["l(r)"] + 2 * s["l(d)"]),
    ("l(o)+l(e)", lambda s: s["l(o)"] + s["l(e)"]),
    ("l(~r)+l(e)", lambda s: s["l(~r)"] + s["l(e)"]),
]
_DOUBLE_D_FAMILY = [
    ("2l(d)", lambda s: 2 * s["l(d)"]),
    ("2l(e)", lambda s: 2 * s["l(e)"]),
    ("l(o)+l(e)-l(r)", lambda s: s["l(o)"] + s["l(e)"] - s["l(r)"]),
    ("l(~r)-l(r)+l(e)", lambda s: s["l(~r)"] - s["l(r)"] + s["l(e)"]),
]


def _chain(report, label, lams, family):
    base_name, base = family[0]
    lhs = _sum(lams, base)
    for name, expr in family[1:]:
        report.add(Check.compare(f"{label}: sum {base_name} = sum {name}",
                                 lhs, _sum(lams, expr)))


def verify_length_identities(n):
    """Check the four length-identity families over ``P(n)`` and every fiber.

    Over ``P(n)`` both families are checked in full; over each fiber
    ``P(n0, n1)`` the first family drops its Glaisher term and the second
    keeps only ``2l(d) = l(o)+l(e)-l(r)``, since those are the forms that
    hold fiberwise.
    """
    report = Report(f"length identities n={n}")
    everything = enumerate_partitions(n)
    _chain(report, f"P({n})", everything, _TOTAL_FAMILY)
    _chain(report, f"P({n})", everything, _DOUBLE_D_FAMILY)
    for n1 in range(n // 2 + 1):
        n0 = n - 2 * n1
        lams = fiber(n0, n1, 2)
        _chain(report, f"P({n0},{n1})", lams, _TOTAL_FAMILY[:3])
        _chain(report, f"P({n0},{n1})", lams, [_DOUBLE_D_FAMILY[0], _DOUBLE_D_FAMILY[2]])
    return report


# ------------------------------------------------------------------- exponents

def glaisher_excess(mu, p=2):
    """``(l(~mu) - l(mu)) / (p - 1)``; the division is always exact."""
    diff = len(glaisher(mu, p)) - len(mu)
    if diff % (p - 1):
        raise InvariantViolation(f"Glaisher length excess of {mu} not divisible by {p - 1}")
    return diff // (p - 1)


def exponent_k(n, p=2):
    """Sum over ``P(n)`` of the length of ``lam^{d(p)}``."""
    _check_prime(p)
    return sum(len(split_p(lam, p).second) for lam in enumerate_partitions(n))


def exponent_k_glaisher(n):
    """Alternative form for ``p = 2``: sum over ``P(n)`` of ``l(~r) - l(r)``."""
    total = 0
    for lam in enumerate_partitions(n):
        r = split_parity(lam).first
        total += len(glaisher(r, 2)) - len(r)
    return total


def exponent_delta(n0, n1, p=2):
    """Sum over ``P^{r(p)}(n0) x P(n1)`` of Glaisher excess of ``mu`` plus ``l(nu)``."""
    _check_prime(p)
    regular = enumerate_partitions(n0, "regular", p)
    rest = enumerate_partitions(n1)
    excess = sum(glaisher_excess(mu, p) for mu in regular)
    lengths = sum(len(nu) for nu in rest)
    return excess * len(rest) + lengths * len(regular)


def exponent_fiber(n0, n1):
    """The ``p = 2`` block exponent written over the fiber ``P(n0, n1)``."""
    total = 0
    for lam in fiber(n0, n1, 2):
        r, d = split_parity(lam)
        total += len(glaisher(r, 2)) - len(r) + len(d)
    return total
