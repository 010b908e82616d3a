from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from source.Cli.AlgebraFile import load_algebra
from source.CoreAlgebra import FiniteAlgebra
from source.Logging import LoggerComposer

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
CONFIG = ROOT / "config.yaml"


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.alg")


@pytest.fixture(autouse=True)
def fresh_logging():
    yield
    LoggerComposer.reset()


@pytest.fixture
def one_element() -> FiniteAlgebra:
    return load_algebra(fixture_path("one-element"))


@pytest.fixture
def two_chain() -> FiniteAlgebra:
    return load_algebra(fixture_path("two-chain"))


@pytest.fixture
def powerset() -> FiniteAlgebra:
    return load_algebra(fixture_path("powerset-of-2"))


@pytest.fixture
def godel_fodor() -> FiniteAlgebra:
    return load_algebra(fixture_path("godel-fodor-chain"))


@pytest.fixture
def perturbed() -> FiniteAlgebra:
    return load_algebra(fixture_path("perturbed-distributivity"))


@pytest.fixture
def lukasiewicz_three() -> FiniteAlgebra:
    return FiniteAlgebra(size=3, top=2, arrow=[[2, 2, 2], [1, 2, 2], [0, 1, 2]], labels=("0", "1/2", "1"))


def godel_chain(size: int) -> FiniteAlgebra:
    """x→y = ⊤ if x ≤ y else y on the chain 0 < 1 < ... < size-1."""
    x, y = np.meshgrid(np.arange(size), np.arange(size), indexing="ij")
    return FiniteAlgebra(size=size, top=size - 1, arrow=np.where(x <= y, size - 1, y))


@pytest.fixture
def godel_three() -> FiniteAlgebra:
    return godel_chain(3)


@pytest.fixture
def sbci_not_pbci() -> FiniteAlgebra:
    return FiniteAlgebra(size=2, top=1, arrow=[[1, 1], [0, 1]], double_arrow=[[0, 1], [0, 1]])


@st.composite
def algebras(draw, max_size: int = 3, two_operation: bool = False) -> FiniteAlgebra:
    size = draw(st.integers(min_value=1, max_value=max_size))
    cells = st.lists(st.integers(0, size - 1), min_size=size * size, max_size=size * size)
    arrow = np.array(draw(cells)).reshape(size, size)
    double = np.array(draw(cells)).reshape(size, size) if two_operation else None
    top = draw(st.integers(0, size - 1))
    return FiniteAlgebra(size=size, top=top, arrow=arrow, double_arrow=double)
