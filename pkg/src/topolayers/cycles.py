"""Oriented cycles and isometric-cycle enumeration.

A Cycle is a closed directed walk given by its arcs.  The candidate pool
for planarization consists of the isometric cycles of the input graph:
cycles on which the cycle metric agrees with the graph metric for every
vertex pair.  In a complete graph these are exactly the triangles.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from .graphs import Graph, edge_between

Arc = Tuple[int, int]
Segment = Tuple[int, int]  # undirected: (min, max)


def seg(a: int, b: int) -> Segment:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Cycle:
    id: int
    arcs: Tuple[Arc, ...]

    def __post_init__(self) -> None:
        for (a, b), (c, d) in zip(self.arcs, self.arcs[1:] + self.arcs[:1]):
            if b != c:
                raise ValueError(f"cycle c{self.id}: arcs do not chain at v{b}")

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(a for a, _ in self.arcs)

    @property
    def segments(self) -> FrozenSet[Segment]:
        return frozenset(seg(a, b) for a, b in self.arcs)

    def reversed(self, new_id: int | None = None) -> "Cycle":
        rev = tuple((b, a) for a, b in reversed(self.arcs))
        return Cycle(self.id if new_id is None else new_id, rev)

    def edge_ids(self, g: Graph) -> Tuple[int, ...]:
        """Sorted original edge ids; only valid while all arcs are graph edges."""
        ids = []
        for a, b in self.arcs:
            eid = edge_between(g, a, b)
            if eid is None:
                raise ValueError(f"cycle c{self.id}: ({a},{b}) is not a graph edge")
            ids.append(eid)
        return tuple(sorted(ids))


def ring_cycle(cid: int, ring: List[int]) -> Cycle:
    """Cycle from an ordered vertex ring."""
    arcs = tuple(
        (ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))
    )
    return Cycle(cid, arcs)


def canonical_ring(vs: List[int]) -> List[int]:
    """Rotate/reflect a vertex ring: start at min vertex, then smaller neighbor."""
    k = vs.index(min(vs))
    vs = vs[k:] + vs[:k]
    if len(vs) > 2 and vs[-1] < vs[1]:
        vs = [vs[0]] + vs[:0:-1]
    return vs


def normalize_ring(vs: List[int]) -> Tuple[int, ...]:
    """Orientation-normalized cyclic sequence (for comparisons)."""
    return tuple(canonical_ring(list(vs)))


def _distances(g: Graph) -> Dict[int, Dict[int, int]]:
    adj: Dict[int, List[int]] = {v: [] for v in g.vertices}
    for u, v in g.edges.values():
        adj[u].append(v)
        adj[v].append(u)
    dist: Dict[int, Dict[int, int]] = {}
    for s in g.vertices:
        d = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if w not in d:
                    d[w] = d[u] + 1
                    q.append(w)
        dist[s] = d
    return dist


def _is_isometric(ring: List[int], dist: Dict[int, Dict[int, int]]) -> bool:
    k = len(ring)
    for i in range(k):
        for j in range(i + 1, k):
            on_cycle = min(j - i, k - (j - i))
            if dist[ring[i]].get(ring[j]) != on_cycle:
                return False
    return True


def enumerate_isometric_cycles(g: Graph) -> List[Cycle]:
    """All isometric cycles, ids assigned in (length, lex edge-id set) order.

    An isometric cycle is never longer than 2*diam(G)+1, which bounds the
    simple-cycle enumeration.
    """
    dist = _distances(g)
    diam = max(max(d.values()) for d in dist.values())
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges.values())
    found = []
    for ring in nx.simple_cycles(G, length_bound=2 * diam + 1):
        if len(ring) < 3:
            continue
        if _is_isometric(ring, dist):
            found.append(canonical_ring(ring))
    keyed = []
    for ring in found:
        eids = tuple(
            sorted(
                edge_between(g, ring[i], ring[(i + 1) % len(ring)])
                for i in range(len(ring))
            )
        )
        keyed.append(((len(ring), eids), ring))
    keyed.sort(key=lambda t: t[0])
    return [ring_cycle(i, ring) for i, (_, ring) in enumerate(keyed, start=1)]


__all__ = [
    "Arc",
    "Segment",
    "Cycle",
    "seg",
    "ring_cycle",
    "canonical_ring",
    "normalize_ring",
    "enumerate_isometric_cycles",
]
