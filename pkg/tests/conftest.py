import os

import hypothesis
import numpy as np
import pytest

from burstcodes.gf import PrimeField
from burstcodes.linalg import Matrix, block, hconcat, identity, ones, zeros
from burstcodes.construct import Code, generator_recursive

np.seterr(all="warn")

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def Z2():
    return PrimeField(2)


@pytest.fixture
def Z3():
    return PrimeField(3)


@pytest.fixture
def Z5():
    return PrimeField(5)


@pytest.fixture
def code_3_2(Z2):
    """The [3,2] binary code with G = [[1,0,1],[0,1,1]]."""
    return Code.manual(Matrix.from_rows([[1, 0, 1], [0, 1, 1]], Z2))


@pytest.fixture
def code_7_3(Z2):
    return generator_recursive(3, 7, Z2)


@pytest.fixture
def matrix_file(tmp_path):
    """Write matrix text to a temp file and return its path as a str."""

    def _write(text: str, name: str = "G.txt") -> str:
        path = tmp_path / name
        path.write_bytes(text.encode("ascii"))
        return str(path)

    return _write


@pytest.fixture
def example_28x45(Z2):
    """The 28 x 45 binary example assembled block by block from identities."""
    I5, I6 = identity(5, Z2), identity(6, Z2)
    P56 = hconcat(I5, ones(5, 1, Z2))

    def O(rows, cols):
        return zeros(rows, cols, Z2)

    return block(
        [
            [I6, O(6, 5), O(6, 6), O(6, 6), O(6, 5), I6, O(6, 5), O(6, 6)],
            [O(5, 6), I5, O(5, 6), O(5, 6), O(5, 5), O(5, 6), I5, O(5, 6)],
            [O(6, 6), O(6, 5), I6, O(6, 6), O(6, 5), O(6, 6), O(6, 5), I6],
            [O(6, 6), O(6, 5), O(6, 6), I6, O(6, 5), I6, O(6, 5), I6],
            [O(5, 6), O(5, 5), O(5, 6), O(5, 6), I5, O(5, 6), I5, P56],
        ]
    )
