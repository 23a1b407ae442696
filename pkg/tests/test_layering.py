from __future__ import annotations

import pytest

from topolayers.cycles import normalize_ring
from topolayers.fixtures import load_fixture
from topolayers.graphs import complete_graph, edge_between, parse_graph
from topolayers.layering import (
    DecompositionError,
    decompose,
    layer_edge_partition,
    region_system,
    split_regions,
    strip_imaginary_region,
)
from topolayers.planar import hamiltonian_rim
from topolayers.routing import Drawing, insert_connection, shortest_route
from topolayers.verify import verify_system

K7_SEQUENCES = {
    (1, 4): [23],
    (2, 4): [8],
    (2, 5): [9, 10],
    (2, 6): [11, 12, 13],
    (3, 6): [14, 15],
    (4, 6): [24, 25],
}
K7_HOSTS = {
    23: 13,
    8: 15,
    9: 15,
    10: 18,
    11: 15,
    12: 18,
    13: 20,
    14: 1,
    15: 6,
    24: 13,
    25: 4,
}


def _replayed_inner(k7, k7_system):
    d = Drawing.from_system(k7, k7_system)
    ring, inside, _ = hamiltonian_rim(k7_system, k7, load_fixture("k7")["hamiltonian"])
    split_regions(d, ring, inside)
    inner = lambda: sorted(f for f, s in d.side.items() if s == "inner")
    for chord in ((2, 4), (2, 5), (2, 6)):
        insert_connection(d, *chord, shortest_route(d, *chord, inner()))
    return d


def test_strip_residual_rim(k7, k7_system):
    d = _replayed_inner(k7, k7_system)
    face_ids, ring = strip_imaginary_region(d, chord=(3, 6))
    assert sorted(face_ids) == [1, 5, 15]
    assert normalize_ring(ring) == normalize_ring([6, 1, 3, 2, 7])
    assert verify_system(region_system(d, face_ids)).ok


def test_k7_thickness_two_layers(k7_decomposition):
    d = k7_decomposition
    assert len(d.layers) == 2
    for layer in d.layers:
        rep = verify_system(layer.system)
        assert rep.ok, rep.lines()


def test_k7_sequences_and_hosts(k7, k7_decomposition):
    d = k7_decomposition
    got = {d.chords[eid]: seq for eid, seq in d.sequences.items()}
    assert got == K7_SEQUENCES
    for w, host_eid in K7_HOSTS.items():
        kind, ref = d.drawing.imaginary[w]["carrier"]
        assert (kind, ref) == ("edge", host_eid)


def test_k7_partition(k7, k7_decomposition):
    part = layer_edge_partition(k7_decomposition)
    assert sorted(eid for ids in part.values() for eid in ids) == sorted(k7.edges)
    assert sorted(part[2]) == [3, 8, 9, 10, 14, 17]


def test_k8_counts_and_empty_rim(k8_decomposition):
    d = k8_decomposition
    assert len(d.layers) == 2
    assert len(d.layers[0].realized) == 18
    counts = {eid: len(seq) for eid, seq in d.sequences.items()}
    assert counts == {24: 1, 4: 2, 3: 3, 9: 4, 11: 2, 10: 3, 17: 1, 12: 2, 15: 3, 21: 7}
    assert d.layers[-1].system.rim is None
    assert not d.layers[-1].system.gf2_cycle_sum()
    for layer in d.layers:
        assert verify_system(layer.system).ok


def test_k10_three_layers(k10, k10_decomposition):
    d = k10_decomposition
    assert len(d.layers) <= 3
    for layer in d.layers:
        rep = verify_system(layer.system)
        assert rep.ok, rep.lines()
    part = layer_edge_partition(d)
    assert sorted(eid for ids in part.values() for eid in ids) == sorted(k10.edges)


def test_inner_only_strategy(k7, k7_pool):
    d = decompose(k7, strategy="inner-only", pin=load_fixture("k7"), pool=k7_pool)
    assert len(d.layers) >= 2
    for layer in d.layers:
        assert verify_system(layer.system).ok
    part = layer_edge_partition(d)
    assert sorted(eid for ids in part.values() for eid in ids) == sorted(k7.edges)


def test_planar_input_single_layer():
    g = complete_graph(4)
    d = decompose(g)
    assert len(d.layers) == 1
    assert not d.drawing.imaginary
    assert sorted(d.layers[0].realized) == sorted(g.edges)


def test_unpinned_k7():
    d = decompose(complete_graph(7))
    assert len(d.layers) == 2
    for layer in d.layers:
        assert verify_system(layer.system).ok


def test_decompose_rejects_separable():
    g = parse_graph("1 2\n2 3\n3 1\n3 4\n4 5\n5 3\n")
    with pytest.raises(DecompositionError, match="nonseparable"):
        decompose(g)


def test_decompose_rejects_unknown_strategy(k7):
    with pytest.raises(DecompositionError):
        decompose(k7, strategy="magic")


def test_decompose_deterministic(k7, k7_pool, k7_decomposition):
    d2 = decompose(k7, strategy="thickness", pin=load_fixture("k7"), pool=k7_pool)
    assert d2.sequences == k7_decomposition.sequences
    assert [sorted(l.realized) for l in d2.layers] == [
        sorted(l.realized) for l in k7_decomposition.layers
    ]
