from __future__ import annotations

from pathlib import Path

import pytest

from pointed_hopf.algebra import build_algebra
from pointed_hopf.cartan import a2_datum, taft_datum
from pointed_hopf.double import DrinfeldDouble
from pointed_hopf.hopf import DualAlgebra

DATUMS = Path(__file__).resolve().parent.parent / "datums"


@pytest.fixture(scope="session")
def datums_dir() -> Path:
    return DATUMS


@pytest.fixture(scope="session")
def taft3():
    return build_algebra(taft_datum(3))


@pytest.fixture(scope="session")
def taft3_dual(taft3):
    return DualAlgebra(taft3)


@pytest.fixture(scope="session")
def taft3_double(taft3, taft3_dual):
    return DrinfeldDouble(taft3, taft3_dual)


@pytest.fixture(scope="session")
def a2():
    return build_algebra(a2_datum())


@pytest.fixture(scope="session")
def a2_dual(a2):
    return DualAlgebra(a2)


@pytest.fixture(scope="session")
def a2_double(a2, a2_dual):
    return DrinfeldDouble(a2, a2_dual)
