"""Exact polynomials in the power-sum coordinates ``t_1, t_2, ...``.

``deg t_j = j``.  Coefficients are :class:`fractions.Fraction`.  A monomial
is a tuple of ``(j, m_j)`` pairs sorted by ``j`` with every ``m_j > 0``; the
empty tuple is the constant monomial.

Two pairings are provided.  On monomials they are diagonal::

    <t^m, t^m>  = prod_j m_j! / j**m_j          (variant "schur")
    <t^m, t^m>' = prod_j m_j! * (2/j)**m_j      (variant "q")

which is what ``F(d)G(t)|_{t=0}`` gives for ``d = (d/dt_1, d/dt_2 / 2, ...)``
and ``2d`` respectively.  :func:`pair_literal` applies the differential
operator term by term and is kept as a cross-check.
"""

import json
from fractions import Fraction
from math import factorial


def monomial(exps):
    """Build a monomial from a mapping ``j -> m_j`` (zero exponents dropped)."""
    return tuple(sorted((int(j), int(m)) for j, m in dict(exps).items() if m))


def mono_degree(mono):
    return sum(j * m for j, m in mono)


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for j, m in b:
        exps[j] = exps.get(j, 0) + m
    return tuple(sorted(exps.items()))


def _mono_sort_key(mono):
    # graded lex: degree, then exponent vector m_1, m_2, ... (larger first)
    top = mono[-1][0] if mono else 0
    exps = dict(mono)
    return (-mono_degree(mono), tuple(-exps.get(j, 0) for j in range(1, top + 1)))


class Poly:
    """A polynomial with exact rational coefficients.  Treat as immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in dict(terms).items():
                c = Fraction(c)
                if c:
                    clean[tuple(mono)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def var(cls, j, power=1):
        return cls({((j, power),): 1} if power else {(): 1})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _mono_sort_key(kv[0]))

    def coefficient(self, mono):
        return self._terms.get(tuple(mono), Fraction(0))

    def monomials(self):
        return set(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = mono_mul(ma, mb)
                s = out.get(mono, 0) + ca * cb
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return Poly._raw(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Poly()
        return Poly._raw({m: c * v for m, v in self._terms.items()})

    def __pow__(self, k):
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    # grading ----------------------------------------------------------------
    def degrees(self):
        return {mono_degree(m) for m in self._terms}

    @property
    def degree(self):
        """The common degree of a homogeneous polynomial, else ``None``."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self, n=None):
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (n is None or n in degs)

    def variables(self):
        return {j for mono in self._terms for j, _ in mono}

    # substitutions ----------------------------------------------------------
    def substitute_scale(self, k):
        """``t_j -> t_{k j}``.  With ``k = 2`` this produces ``F(t')``."""
        if k == 1:
            return self
        return Poly._raw({tuple((k * j, m) for j, m in mono): c
                          for mono, c in self._terms.items()})

    def substitute_double(self):
        return self.substitute_scale(2)

    def reduce_p(self, p):
        """Set every ``t_j`` with ``p | j`` to zero."""
        return Poly._raw({mono: c for mono, c in self._terms.items()
                          if all(j % p for j, _ in mono)})

    def divide_monomial_var(self, k):
        """Return ``(Q, R)`` with ``Q`` the part of ``self`` whose monomials use only
        variables ``t_{k j}``, contracted by ``t_{kj} -> t_j``, and ``R`` the rest."""
        q, r = {}, {}
        for mono, c in self._terms.items():
            if all(j % k == 0 for j, _ in mono):
                q[tuple((j // k, m) for j, m in mono)] = c
            else:
                r[mono] = c
        return Poly._raw(q), Poly._raw(r)

    # rendering --------------------------------------------------------------
    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self.items():
            body = "*".join(f"t{j}" if m == 1 else f"t{j}^{m}" for j, m in mono)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not body:
                text = str(a)
            elif a == 1:
                text = body
            elif a.denominator == 1:
                text = f"{a.numerator}*{body}"
            elif a.numerator == 1:
                text = f"{body}/{a.denominator}"
            else:
                text = f"{a.numerator}*{body}/{a.denominator}"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def to_json(self):
        return [{"exps": {str(j): m for j, m in mono}, "coef": _frac_str(c)}
                for mono, c in self.items()]

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls({monomial({int(j): int(m) for j, m in term["exps"].items()}):
                    Fraction(term["coef"]) for term in data})


def _frac_str(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def power_sum_monomial(rho):
    """``t^m`` for the partition ``rho = (1^{m_1} 2^{m_2} ...)``."""
    exps = {}
    for part in rho:
        exps[part] = exps.get(part, 0) + 1
    return monomial(exps)


def mono_factorial(mono):
    """``prod_j m_j!``."""
    out = 1
    for _, m in mono:
        out *= factorial(m)
    return out


def mono_norm(mono, variant="schur"):
    if variant == "schur":
        out = Fraction(1)
        for j, m in mono:
            out *= Fraction(factorial(m), j ** m)
        return out
    if variant == "q":
        out = Fraction(1)
        for j, m in mono:
            out *= factorial(m) * Fraction(2, j) ** m
        return out
    raise ValueError(f"unknown pairing variant {variant!r}")


def pair(f, g, variant="schur"):
    """``<F, G>`` (variant ``schur``) or ``<F, G>'`` (variant ``q``)."""
    small, big = (f, g) if len(f) <= len(g) else (g, f)
    total = Fraction(0)
    for mono, c in small._terms.items():
        d = big._terms.get(mono)
        if d is not None:
            total += c * d * mono_norm(mono, variant)
    return total


def _differentiate(g, j, scale):
    out = {}
    for mono, c in g._terms.items():
        exps = dict(mono)
        m = exps.get(j, 0)
        if not m:
            continue
        if m == 1:
            del exps[j]
        else:
            exps[j] = m - 1
        key = tuple(sorted(exps.items()))
        out[key] = out.get(key, 0) + c * m * scale
    return Poly(out)


def pair_literal(f, g, variant="schur"):
    """Evaluate ``F(c d)G(t)`` at ``t = 0`` by repeated differentiation."""
    factor = {"schur": 1, "q": 2}[variant]
    total = Fraction(0)
    for mono, c in f._terms.items():
        h = g
        for j, m in mono:
            for _ in range(m):
                h = _differentiate(h, j, Fraction(factor, j))
        total += c * h.coefficient(())
    return total
