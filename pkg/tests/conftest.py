from __future__ import annotations

import pytest

from topolayers import (
    complete_graph,
    decompose,
    decomposition_to_document,
    enumerate_isometric_cycles,
    select_planar_cycle_system,
)
from topolayers.fixtures import load_fixture


@pytest.fixture(scope="session")
def k7():
    return complete_graph(7, name="K7")


@pytest.fixture(scope="session")
def k8():
    return complete_graph(8, name="K8")


@pytest.fixture(scope="session")
def k10():
    return complete_graph(10, name="K10")


@pytest.fixture(scope="session")
def k7_pool(k7):
    return enumerate_isometric_cycles(k7)


@pytest.fixture(scope="session")
def k8_pool(k8):
    return enumerate_isometric_cycles(k8)


@pytest.fixture(scope="session")
def k7_system(k7, k7_pool):
    return select_planar_cycle_system(k7, k7_pool, load_fixture("k7")["system"])


@pytest.fixture(scope="session")
def k7_decomposition(k7, k7_pool):
    return decompose(k7, strategy="thickness", pin=load_fixture("k7"), pool=k7_pool)


@pytest.fixture(scope="session")
def k8_decomposition(k8, k8_pool):
    return decompose(k8, strategy="thickness", pin=load_fixture("k8"), pool=k8_pool)


@pytest.fixture(scope="session")
def k10_decomposition(k10):
    return decompose(k10, strategy="thickness", pin=load_fixture("k10"))


@pytest.fixture(scope="session")
def k7_document(k7_decomposition):
    return decomposition_to_document(k7_decomposition)
