"""Exact transition matrices between Schur functions and compound Q/Brauer-Schur bases."""

from .bases import (brauer_schur, murnaghan_nakayama, p_reduced_schur, qfun, schur,
                    spin_char_extract, w_basis, w_basis_p)
from .errors import (DataNotFoundError, DatasetError, InvariantViolation, RankDeficiencyError,
                     StructureError)
from .linalg import (ExactMatrix, block_decompose, determinant, hermite_normal_form,
                     smith_normal_form, solve_expansion)
from .modular import DatasetStore, ModularDataset, cartan, derive_bootstrap, load, save
from .partitions import (Partition, SplitPair, enumerate_partitions, exponent_delta, exponent_k,
                         fiber, glaisher, split_even_odd, split_p, split_parity,
                         verify_length_identities)
from .polyring import Poly, pair
from .transition import (build_A, build_A_p, compare_decomposition, gram, stembridge_submatrix,
                         verify_all)

__version__ = "0.1.0"
