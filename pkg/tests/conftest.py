import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from mvd import DecisionTable, Measure, parse_table

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def t0_path() -> str:
    return os.path.join(DATA_DIR, "t0.mvd")


@pytest.fixture(scope="session")
def t0(t0_path) -> DecisionTable:
    with open(t0_path, "r", encoding="utf-8") as handle:
        return parse_table(handle.read())


@pytest.fixture(scope="session")
def depth() -> Measure:
    return Measure.depth()
