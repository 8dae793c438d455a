"""Published small tables, stored in their original label order.

Each fixture file holds the matrix as printed plus ``row_perm``/``col_perm``:
position ``i`` in the printed order is position ``perm[i]`` in the canonical
order used by :mod:`symbasis.transition`.
"""

import json
from dataclasses import dataclass
from pathlib import Path

from .linalg import ExactMatrix

FIXTURE_DIR = Path(__file__).resolve().parent / "data" / "tables"


@dataclass
class Table:
    name: str
    p: int
    n: int
    matrix: ExactMatrix
    row_perm: list
    col_perm: list


def names():
    return sorted(path.stem for path in FIXTURE_DIR.glob("*.json"))


def load_table(name_or_path):
    path = Path(name_or_path)
    if not path.suffix:
        path = FIXTURE_DIR / f"{name_or_path}.json"
    data = json.loads(path.read_text())
    return Table(data["name"], data["p"], data["n"], ExactMatrix.from_json(data).as_int(),
                 data["row_perm"], data["col_perm"])


def align(computed, table):
    """Reorder ``computed`` into the table's printed order using the stored permutations.

    The permutations are checked against the labels so a stale fixture cannot
    silently compare the wrong entries.
    """
    rows = [computed.row_labels[i] for i in table.row_perm]
    cols = [computed.col_labels[j] for j in table.col_perm]
    if rows != table.matrix.row_labels or cols != table.matrix.col_labels:
        raise ValueError(f"fixture {table.name}: stored permutation does not match labels")
    return computed.select(rows, cols)
