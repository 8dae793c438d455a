from itertools import product

import pytest
from hypothesis import given, strategies as st

from symbasis.partitions import (EMPTY, Partition, SplitPair, canonical_key, enumerate_partitions,
                                 exponent_delta, exponent_fiber, exponent_k, exponent_k_glaisher,
                                 fiber, glaisher, glaisher_excess, inverse_glaisher, merge_even_odd,
                                 merge_p, merge_parity, split_even_odd, split_p, split_pairs,
                                 split_parity, verify_length_identities)

P = Partition.parse


def brute_partitions(n):
    """All partitions of n by filtering every multiplicity vector (independent of the generator)."""
    out = set()
    for mult in product(*[range(n // i + 1) for i in range(1, n + 1)]):
        if sum((i + 1) * m for i, m in enumerate(mult)) == n:
            out.add(Partition.from_multiplicities({i + 1: m for i, m in enumerate(mult) if m}))
    return out


@pytest.mark.parametrize("n", range(0, 11))
def test_enumeration_matches_brute_force(n):
    parts = enumerate_partitions(n)
    assert len(parts) == len(set(parts))
    assert set(parts) == brute_partitions(n)
    assert parts == sorted(parts, key=canonical_key)


def test_enumerate_examples():
    assert enumerate_partitions(4) == [P("4"), P("3.1"), P("2^2"), P("2.1^2"), P("1^4")]
    assert enumerate_partitions(0, "strict") == [EMPTY]
    assert set(enumerate_partitions(5, "regular", 3)) == {
        P("5"), P("4.1"), P("3.2"), P("3.1^2"), P("2^2.1")}


def test_two_specialisations():
    for n in range(13):
        assert enumerate_partitions(n, "regular", 2) == enumerate_partitions(n, "strict")
        assert enumerate_partitions(n, "class_regular", 2) == enumerate_partitions(n, "odd")


def test_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_partitions(4, "regular", 4)
    with pytest.raises(ValueError):
        enumerate_partitions(65)
    assert len(enumerate_partitions(3, limit=3)) == 3
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_parse_forms():
    assert P("[5,4,4,2,1]") == Partition([5, 4, 4, 2, 1])
    assert P("5.4^2.2") == Partition([5, 4, 4, 2])
    assert P("[]") == EMPTY
    assert str(P("5.4^2.2")) == "[5,4,4,2]"


def test_split_parity_example():
    lam = P("5^3.4^4.2^7.1")
    assert split_parity(lam) == SplitPair(P("5.2.1"), P("5.4^2.2^3"))
    strict = Partition([8, 6, 4, 3, 1])
    assert split_parity(strict) == (strict, EMPTY)


def test_split_even_odd_example():
    lam = P("5^3.4^4.2^7.1")
    assert split_even_odd(lam) == (P("5^3.1"), P("2^4.1^7"))
    assert split_even_odd(P("5.3.1")) == (P("5.3.1"), EMPTY)


def test_split_p_example():
    lam = P("5^3.4^4.2^11.1^2")
    assert split_p(lam, 3) == (P("4.2^2.1^2"), P("5.4.2^3"))
    for mu in enumerate_partitions(7, "regular", 3):
        assert split_p(mu, 3) == (mu, EMPTY)
    with pytest.raises(ValueError):
        split_p(lam, 6)


def test_glaisher_examples():
    assert glaisher(Partition([8, 6, 4, 3, 1]), 2) == P("3^3.1^13")
    assert glaisher(P("5"), 2) == P("5")
    assert glaisher(P("3.2"), 3) == P("2.1^3")
    with pytest.raises(ValueError):
        glaisher(P("2^2"), 2)


@pytest.mark.parametrize("n", range(0, 13))
def test_parity_split_is_bijection(n):
    images = [split_parity(lam) for lam in enumerate_partitions(n)]
    assert len(set(images)) == len(images)
    assert set(images) == set(split_pairs(n, 2))
    assert all(im.first.is_strict() and im.n0 + 2 * im.n1 == n for im in images)
    assert all(merge_parity(split_parity(lam)) == lam for lam in enumerate_partitions(n))


@pytest.mark.parametrize("n", range(0, 13))
def test_even_odd_split_is_bijection(n):
    target = {SplitPair(o, e) for k in range(n // 2 + 1)
              for o in enumerate_partitions(n - 2 * k, "odd") for e in enumerate_partitions(k)}
    images = [split_even_odd(lam) for lam in enumerate_partitions(n)]
    assert len(set(images)) == len(images) and set(images) == target
    assert all(merge_even_odd(split_even_odd(lam)) == lam for lam in enumerate_partitions(n))


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", range(0, 11))
def test_split_p_is_bijection(n, p):
    images = [split_p(lam, p) for lam in enumerate_partitions(n)]
    assert len(set(images)) == len(images)
    assert set(images) == set(split_pairs(n, p))
    assert all(merge_p(split_p(lam, p), p) == lam for lam in enumerate_partitions(n))


@pytest.mark.parametrize("n", range(0, 13))
def test_split_p_two_agrees_with_parity(n):
    for lam in enumerate_partitions(n):
        assert split_p(lam, 2) == split_parity(lam)


@pytest.mark.parametrize("n", range(0, 13))
def test_euler_glaisher_two(n):
    strict = enumerate_partitions(n, "strict")
    odd = enumerate_partitions(n, "odd")
    assert len(strict) == len(odd)
    assert {glaisher(lam, 2) for lam in strict} == set(odd)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", range(0, 11))
def test_glaisher_general_p(n, p):
    regular = enumerate_partitions(n, "regular", p)
    images = [glaisher(lam, p) for lam in regular]
    assert set(images) == set(enumerate_partitions(n, "class_regular", p))
    assert len(set(images)) == len(images)
    for lam, rho in zip(regular, images):
        assert (len(rho) - len(lam)) % (p - 1) == 0
        assert inverse_glaisher(rho, p) == lam


def test_fiber_examples():
    sizes = {(n0, n1): len(fiber(n0, n1, 2)) for n0, n1 in [(4, 0), (2, 1), (0, 2)]}
    assert sizes == {(4, 0): 2, (2, 1): 1, (0, 2): 2}
    assert fiber(2, 1, 2) == [P("2.1^2")]
    assert sum(sizes.values()) == 5
    assert set(enumerate_partitions(6, "strict")) <= set(fiber(6, 0, 2))
    assert len(fiber(5, 0, 3)) == 5


def test_exponent_k_table():
    assert [exponent_k(n) for n in range(1, 9)] == [0, 1, 1, 4, 5, 11, 15, 28]
    assert exponent_k(0) == exponent_k(0, 3) == 0
    assert exponent_k(5, 3) == 2
    for n in range(13):
        assert exponent_k(n) == exponent_k_glaisher(n)


def test_exponent_delta():
    assert exponent_delta(5, 0, 3) == 2
    assert exponent_delta(2, 1, 3) == 2
    assert exponent_delta(3, 1, 2) == 3
    for k in range(6):
        assert exponent_delta(0, k, 3) == sum(len(nu) for nu in enumerate_partitions(k))
    assert [glaisher_excess(mu, 3) for mu in enumerate_partitions(5, "regular", 3)] == [0, 0, 1, 1, 0]


@pytest.mark.parametrize("n", range(0, 13))
def test_delta_equals_fiber_form(n):
    for n1 in range(n // 2 + 1):
        assert exponent_delta(n - 2 * n1, n1, 2) == exponent_fiber(n - 2 * n1, n1)


@pytest.mark.parametrize("n", range(0, 13))
def test_length_identities(n):
    report = verify_length_identities(n)
    assert report.ok, [c.line() for c in report.failures]
    if n == 0:
        assert all(c.lhs == c.rhs == 0 for c in report.checks)


def test_length_identity_values_n4():
    # direct: sum of lengths over P(4) = 1 + 2 + 2 + 3 + 4
    report = verify_length_identities(4)
    first = report.checks[0]
    assert first.lhs == 12


@given(st.lists(st.integers(1, 9), max_size=12))
def test_split_weights(parts):
    lam = Partition(sorted(parts, reverse=True))
    for p in (2, 3, 5):
        r, d = split_p(lam, p)
        assert r.weight + p * d.weight == lam.weight
        assert r.is_regular(p)
    o, e = split_even_odd(lam)
    assert o.weight + 2 * e.weight == lam.weight
