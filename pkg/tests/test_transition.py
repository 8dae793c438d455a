import json

import pytest

from symbasis.bases import schur, w_pair, w_pair_p
from symbasis.errors import DataNotFoundError
from symbasis.fixtures import align, load_table, names
from symbasis.linalg import ExactMatrix, determinant
from symbasis.modular import DatasetStore
from symbasis.partitions import enumerate_partitions, exponent_k
from symbasis.polyring import Poly
from symbasis.transition import (build_A, build_A_p, compare_decomposition, divisor_table, gram,
                                 principal_divisors, signs, stembridge_submatrix, verify_all)

def test_fixture_names():
    assert names() == ["A2", "A3", "A4", "A5", "A5_p3",
                       "gram2", "gram3", "gram4", "gram5", "gram5_p3"]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_golden_tables(n):
    a = build_A(n)
    table = load_table(f"A{n}")
    assert align(a, table).to_list() == table.matrix.to_list()
    gtable = load_table(f"gram{n}")
    assert align(gram(a), gtable).to_list() == gtable.matrix.to_list()


def test_golden_p3():
    a = build_A_p(5, 3)
    table = load_table("A5_p3")
    assert align(a, table).to_list() == table.matrix.to_list()
    gtable = load_table("gram5_p3")
    assert align(gram(a), gtable).to_list() == gtable.matrix.to_list()


def test_small_values():
    assert build_A(1).to_list() == [[1]]
    assert build_A(2).to_list() == [[1, 1], [1, -1]]
    assert gram(build_A(2)).to_list() == [[2, 0], [0, 2]]


@pytest.mark.parametrize("n", range(1, 8))
def test_round_trip_expansion(n):
    a = build_A(n)
    for i, lam in enumerate(a.row_labels):
        rhs = Poly()
        for j, pair in enumerate(a.col_labels):
            if a.entries[i][j]:
                rhs = rhs + w_pair(pair) * a.entries[i][j]
        assert rhs == schur(lam)


def test_stembridge_examples():
    assert stembridge_submatrix(build_A(2)).to_list() == [[1], [1]]
    assert stembridge_submatrix(build_A(4)).to_list() == [[1, 0], [1, 1], [0, 1], [1, 1], [1, 0]]


@pytest.mark.parametrize("n", range(1, 9))
def test_stembridge_positive(n):
    gamma = stembridge_submatrix(build_A(n))
    assert gamma.col_labels == enumerate_partitions(n, "strict")
    assert all(x >= 0 and int(x) == x for row in gamma.entries for x in row)
    for mu in gamma.col_labels:
        assert gamma.entry(mu, mu) >= 1


@pytest.mark.parametrize("n", range(1, 6))
def test_brauer_variant_p2(n):
    report = verify_all(n, 2, DatasetStore.from_directory(), basis="brauer")
    assert report.ok and report.basis == "brauer"
    assert report.det is not None


def test_w_pair_p_matches_columns():
    store = DatasetStore.from_directory()
    a = build_A_p(5, 3, store)
    for pair in a.col_labels:
        assert w_pair_p(pair, 3, store).is_homogeneous(5)


def test_missing_data():
    with pytest.raises(DataNotFoundError):
        build_A_p(4, 3, DatasetStore())
    report = verify_all(4, 3, DatasetStore())
    assert report.ok
    assert [c.status for c in report.checks] == ["skipped"]


@pytest.mark.parametrize("n", range(1, 13))
def test_verify_all_p2(n):
    report = verify_all(n)
    assert report.ok, [c.line() for c in report.failures]
    assert abs(report.det) == 2 ** exponent_k(n)


def test_verify_all_p3():
    report = verify_all(5, 3)
    assert report.ok, [c.line() for c in report.failures]
    assert report.det == 9
    assert report.blocks[(5, 0)]["det"] == 9 and report.blocks[(2, 1)]["det"] == 9
    assert principal_divisors(5, 3) == [1, 1, 1, 3, 3]


def test_report_json():
    report = verify_all(4)
    data = json.loads(json.dumps(report.to_json("A4.json")))
    assert data["matrix_ref"] == "A4.json"
    assert data["ok"] is True and data["k"] == 4
    assert data["blocks"]["0,2"]["divisors"] == [1, 8]
    assert all(set(c) >= {"name", "pass", "lhs", "rhs"} for c in data["checks"])


def test_divisor_tables():
    assert divisor_table(4) == {(4, 0): {0: 1, 3: 1}, (2, 1): {2: 1}, (0, 2): {0: 1, 3: 1}}
    assert divisor_table(6)[(0, 3)] == {1: 2, 4: 1}


@pytest.mark.parametrize("n", range(1, 6))
def test_compare_decomposition(n):
    report = compare_decomposition(n)
    assert report.ok and not report.skips


def test_compare_decomposition_skips_without_data(tmp_path, monkeypatch):
    monkeypatch.setenv("SYMBASIS_DATA_DIR", str(tmp_path))
    report = compare_decomposition(7)
    assert report.ok
    assert len(report.skips) == 2


def test_signs_recorded():
    s = signs(5)
    assert set(s.values()) <= {1, -1}
    assert s[2] == -1 and s[4] == 1


def test_det_nonzero():
    for n in range(1, 9):
        assert determinant(build_A(n)) != 0
    assert isinstance(build_A(3), ExactMatrix)
