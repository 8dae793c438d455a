import json

import pytest

from symbasis.bases import qfun, schur
from symbasis.errors import DataNotFoundError, DatasetError
from symbasis.fixtures import load_table
from symbasis.linalg import ExactMatrix, identity, smith_normal_form
from symbasis.modular import (DATA_ENV, DatasetStore, ModularDataset, cartan, dataset_path,
                              derive_bootstrap, load, package_data_dir, save)
from symbasis.partitions import Partition, enumerate_partitions
from symbasis.polyring import Poly
from symbasis.transition import build_A, gram, stembridge_submatrix

P = Partition.parse
t1 = Poly.var(1)


def shipped(p, n):
    return load(package_data_dir() / f"p{p}" / f"n{n}.json")


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 5)])
def test_shipped_files_validate_and_round_trip(p, n, tmp_path):
    ds = shipped(p, n)
    assert (ds.p, ds.n) == (p, n)
    assert ds.source_note
    again = load(save(ds, tmp_path / "x.json"))
    assert again.to_json() == ds.to_json()


def test_negative_entry_rejected(tmp_path):
    data = shipped(2, 3).to_json()
    data["decomposition"]["entries"][2][0] = "-1"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(DatasetError) as info:
        load(path)
    assert info.value.field == "decomposition"


def test_inconsistent_payloads_rejected():
    ds = shipped(3, 5)
    polys = dict(ds.brauer_polys)
    polys[P("4.1")] = polys[P("4.1")] + t1 ** 5
    bad = ModularDataset(3, 5, ds.regular, ds.decomposition, polys, "tampered")
    with pytest.raises(DatasetError):
        bad.validate()


def test_wrong_regular_labels_rejected():
    with pytest.raises(DatasetError):
        ModularDataset(2, 3, [P("2.1")], None, {P("2.1"): t1 ** 3}, "").validate()


def test_poly_with_divisible_variable_rejected():
    polys = {P("2"): Poly.var(2)}
    with pytest.raises(DatasetError):
        ModularDataset(2, 2, [P("2")], None, polys, "").validate()


def test_bootstrap_closed_loop_p3():
    table = load_table("A5_p3")
    ds = derive_bootstrap(table.matrix, 3, 5)
    assert ds.to_json()["brauer_polys"] == shipped(3, 5).to_json()["brauer_polys"]
    assert ds.decomposition == shipped(3, 5).decomposition
    assert ds.decomposition.entry(P("2.2.1"), P("5")) == 1
    assert ds.decomposition.entry(P("1^5"), P("3.2")) == 1


def test_bootstrap_from_q_basis_p2():
    ds = derive_bootstrap(build_A(2), 2, 2)
    assert ds.brauer_polys[P("2")] == qfun((2,))
    ds1 = derive_bootstrap(build_A(1), 2, 1)
    assert ds1.brauer_polys[P("1")] == t1


def test_bootstrap_rejects_bad_matrix():
    a = build_A(3)
    wrong = ExactMatrix([[1 if i == j else 0 for j in range(3)] for i in range(3)],
                        a.row_labels, a.col_labels)
    with pytest.raises(DatasetError):
        derive_bootstrap(wrong, 2, 3)


def test_cartan_examples():
    for n in range(1, 6):
        c = cartan(shipped(2, n))
        gamma = stembridge_submatrix(build_A(n))
        assert smith_normal_form(c) == smith_normal_form(gram(gamma))
    assert smith_normal_form(cartan(shipped(3, 5))) == [1, 1, 1, 3, 3]
    assert cartan(shipped(2, 1)) == identity([P("1")])


def test_store_lookup_and_fallback():
    store = DatasetStore.from_directory()
    assert store.has(2, 5) and store.has(3, 5)
    assert store.brauer_poly(P("2"), 3) == schur((2,))
    with pytest.raises(DataNotFoundError):
        store.get(3, 7)
    with pytest.raises(DataNotFoundError):
        store.brauer_poly(P("4"), 3)


def test_decomposition_only_dataset_gives_polys():
    ds = shipped(2, 3)
    assert ds.brauer_polys is None
    b = ds.brauer_poly(P("3"))
    assert b.is_homogeneous(3) and all(j % 2 for j in b.variables())


def test_env_override(tmp_path, monkeypatch):
    save(shipped(2, 2), tmp_path / "p2" / "n2.json")
    monkeypatch.setenv(DATA_ENV, str(tmp_path))
    assert dataset_path(2, 2) == tmp_path / "p2" / "n2.json"
    store = DatasetStore.from_directory()
    assert store.has(2, 2) and not store.has(2, 3)


def test_regular_labels_match_enumeration():
    for n in range(1, 6):
        assert shipped(2, n).regular == enumerate_partitions(n, "strict")
