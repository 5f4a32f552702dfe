"""The worked examples E1-E3 as matrices, also shipped as JSON files.

* E1: ``T`` is a partial isometry.
* E2: ``A`` is T-hermitian (hence T-normal and T-EP) for E1's ``T``, but not EP.
* E3: ``A`` is T-EP for the shift ``T`` but not T-normal.
"""
import json
from importlib import resources

import numpy as np

from .serialize import matrix_from_dict

E1_T = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 1]], dtype=np.complex128)
E2_A = np.array([[0, 1, 1], [0, 0, 0], [0, 1, 1]], dtype=np.complex128)
E2_T = E1_T
E3_T = np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]], dtype=np.complex128)
E3_A = np.array([[0, 1, 1], [0, 0, 1], [0, 0, 0]], dtype=np.complex128)

FILES = ("E1.T.json", "E2.A.json", "E3.A.json", "E3.T.json")


def fixture_path(name: str):
    """Filesystem path of a shipped fixture such as ``"E3.A.json"``."""
    return resources.files("tepkit").joinpath("data").joinpath(name)


def load_fixture(name: str) -> np.ndarray:
    return matrix_from_dict(json.loads(fixture_path(name).read_text()), name)
