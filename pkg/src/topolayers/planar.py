"""Maximal planar subgraph as an oriented cycle system.

A CycleSystem is a sphere drawing given combinatorially: a set of facial
cycles plus one distinguished rim (the face everything else is drawn
inside of).  Every covered edge lies on exactly two members, traversed in
opposite directions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .cycles import Cycle, Segment, canonical_ring, ring_cycle, seg
from .graphs import Graph, edge_between


class PlanarizationError(ValueError):
    pass


@dataclass
class CycleSystem:
    n: int  # original vertex count; vertices above n are imaginary
    cycles: Dict[int, Cycle]
    rim: Optional[Cycle]  # None once the drawing closes up the whole sphere

    def members(self) -> List[Cycle]:
        out = sorted(self.cycles.values(), key=lambda c: c.id)
        if self.rim is not None:
            out.append(self.rim)
        return out

    def coverage(self) -> Dict[Segment, List[int]]:
        cov: Dict[Segment, List[int]] = {}
        for c in self.members():
            for s in (seg(a, b) for a, b in c.arcs):
                cov.setdefault(s, []).append(c.id)
        return cov

    def segments(self) -> Set[Segment]:
        return set(self.coverage())

    def vertices(self) -> Set[int]:
        vs: Set[int] = set()
        for c in self.members():
            vs.update(c.vertices)
        return vs

    def gf2_cycle_sum(self) -> FrozenSet[Segment]:
        """Symmetric difference of all cycle edge sets (rim excluded)."""
        acc: Set[Segment] = set()
        for c in self.cycles.values():
            acc.symmetric_difference_update(c.segments)
        return frozenset(acc)


def orient_cycles(
    rings: Dict[int, Sequence[int]], rim_id: int
) -> Tuple[Dict[int, Cycle], Cycle]:
    """Assign consistent orientations to a double cover given as vertex rings.

    The rim is oriented from its smallest vertex toward its larger
    neighbour; everything else is forced by the rule that a shared edge is
    traversed oppositely by its two faces.
    """
    cands = {cid: ring_cycle(cid, canonical_ring(list(vs))) for cid, vs in rings.items()}
    cov: Dict[Segment, List[int]] = {}
    for c in cands.values():
        for s in c.segments:
            cov.setdefault(s, []).append(c.id)
    for s, who in cov.items():
        if len(who) != 2:
            raise PlanarizationError(
                f"edge ({s[0]},{s[1]}) lies on {len(who)} cycles, expected 2"
            )
    # rim direction: min vertex toward its larger ring neighbor
    rim_ring = list(cands[rim_id].vertices)
    if rim_ring[1] < rim_ring[-1]:
        rim_ring = [rim_ring[0]] + rim_ring[:0:-1]
    cands[rim_id] = ring_cycle(rim_id, rim_ring)

    flip: Dict[int, bool] = {rim_id: False}
    q = deque([rim_id])
    arcs_of = {cid: set(c.arcs) for cid, c in cands.items()}
    while q:
        cid = q.popleft()
        for s in cands[cid].segments:
            other = [w for w in cov[s] if w != cid]
            oid = other[0] if other else cid
            if oid == cid or oid in flip:
                continue
            same_dir = (s in arcs_of[cid]) == (s in arcs_of[oid])
            # after flips the two traversal directions must differ
            flip[oid] = flip[cid] != same_dir
            q.append(oid)
    if len(flip) < len(cands):
        raise PlanarizationError("cycle system is not edge-connected")
    oriented = {
        cid: (c.reversed() if flip[cid] else c) for cid, c in cands.items()
    }
    # final consistency check
    dirs: Dict[Segment, List[Tuple[int, int]]] = {}
    for c in oriented.values():
        for a, b in c.arcs:
            dirs.setdefault(seg(a, b), []).append((a, b))
    for s, ds in dirs.items():
        if len(ds) != 2 or ds[0] == ds[1]:
            raise PlanarizationError(
                f"inconsistent orientation across edge ({s[0]},{s[1]})"
            )
    rim = oriented.pop(rim_id)
    return oriented, rim


def _check_euler(sys_: CycleSystem) -> None:
    nv = len(sys_.vertices())
    ne = len(sys_.segments())
    nf = len(sys_.cycles) + (1 if sys_.rim is not None else 0)
    if nv - ne + nf != 2:
        raise PlanarizationError(f"Euler check failed: {nv} - {ne} + {nf} != 2")


def _pool_lookup(pool: Sequence[Cycle]) -> Dict[Tuple[int, ...], Cycle]:
    return {tuple(canonical_ring(list(c.vertices))): c for c in pool}


def select_planar_cycle_system(
    g: Graph, pool: Sequence[Cycle], pin: Optional[dict] = None
) -> CycleSystem:
    """Pick facial cycles of a maximal planar subgraph.

    With a pin (fixture mapping), the listed rings are taken verbatim from
    the pool and oriented.  Without one, a greedy edge-insertion search
    with incremental planarity testing finds a maximal planar subgraph and
    its embedding supplies the faces.
    """
    if pin is not None:
        lookup = _pool_lookup(pool)
        rings: Dict[int, Sequence[int]] = {}
        ids = []
        for vs in list(pin["cycles"]) + [pin["rim"]]:
            key = tuple(canonical_ring(list(vs)))
            if key not in lookup:
                raise PlanarizationError(
                    f"pinned ring {list(vs)} is not an isometric cycle of the graph"
                )
            ids.append(lookup[key].id)
            rings[lookup[key].id] = vs
        rim_id = ids[-1]
        cycles, rim = orient_cycles(rings, rim_id)
        sys_ = CycleSystem(n=g.n, cycles=cycles, rim=rim)
    else:
        kept = nx.Graph()
        kept.add_nodes_from(g.vertices)
        for eid, (u, v) in sorted(g.edges.items()):
            kept.add_edge(u, v)
            ok, _ = nx.check_planarity(kept)
            if not ok:
                kept.remove_edge(u, v)
        _, emb = nx.check_planarity(kept)
        faces = []
        seen_darts = set()
        for u, v in emb.edges:
            if (u, v) in seen_darts:
                continue
            ring = emb.traverse_face(u, v, mark_half_edges=seen_darts)
            faces.append(ring)
        faces.sort(key=lambda r: (len(r), tuple(canonical_ring(list(r)))))
        rings = {i: r for i, r in enumerate(faces, start=1)}
        rim_id = 1  # smallest face doubles as the rim; the sphere has no outside
        cycles = {}
        for cid, r in rings.items():
            cycles[cid] = ring_cycle(cid, list(r))
        rim = cycles.pop(rim_id)
        sys_ = CycleSystem(n=g.n, cycles=cycles, rim=rim)
    for s in sys_.segments():
        if edge_between(g, *s) is None:
            raise PlanarizationError(f"system uses non-edge ({s[0]},{s[1]})")
    _check_euler(sys_)
    if sys_.gf2_cycle_sum() != sys_.rim.segments:
        raise PlanarizationError("GF(2) sum of cycles does not equal the rim")
    return sys_


def _ring_from_segments(segs: Set[Segment]) -> Optional[List[int]]:
    """Ordered vertex ring if segs form one simple closed curve, else None."""
    if not segs:
        return None
    adj: Dict[int, List[int]] = {}
    for a, b in segs:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(ns) != 2 for ns in adj.values()):
        return None
    start = min(adj)
    ring = [start]
    prev, cur = None, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        nxt = nxt[0] if nxt else prev
        if nxt == start:
            break
        ring.append(nxt)
        prev, cur = cur, nxt
        if len(ring) > len(segs):
            return None
    if len(ring) != len(segs):
        return None
    return canonical_ring(ring)


def hamiltonian_rim(
    sys_: CycleSystem,
    g: Graph,
    pin_ring: Optional[Sequence[int]] = None,
    budget: int = 200_000,
) -> Tuple[List[int], List[int], List[int]]:
    """Find a Hamiltonian ring that is a GF(2) sum of system cycles.

    Returns (ordered ring, inside cycle ids, outside cycle ids).  The
    inside cycles are exactly the summands; the rim face always counts as
    outside.
    """
    ids = sorted(sys_.cycles)
    if pin_ring is not None:
        target = {
            seg(pin_ring[i], pin_ring[(i + 1) % len(pin_ring)])
            for i in range(len(pin_ring))
        }
        inside = _solve_gf2_subset(sys_, target)
        if inside is None:
            raise PlanarizationError("pinned ring is not a sum of system cycles")
        ring = canonical_ring(list(pin_ring))
        outside = [i for i in ids if i not in inside]
        return ring, sorted(inside), outside
    # enumerate candidate Hamiltonian cycles of the covered subgraph and
    # keep the first that is a subset sum
    segs = sys_.segments()
    adj: Dict[int, List[int]] = {v: [] for v in range(1, g.n + 1)}
    for a, b in segs:
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    tried = 0

    def extend(path: List[int], used: Set[int]) -> Optional[List[int]]:
        nonlocal tried
        tried += 1
        if tried > budget:
            raise PlanarizationError("Hamiltonian ring search budget exhausted")
        if len(path) == g.n:
            return path if path[0] in adj[path[-1]] else None
        for w in adj[path[-1]]:
            if w not in used:
                got = extend(path + [w], used | {w})
                if got is not None:
                    return got
        return None

    for second in adj[1]:
        found = extend([1, second], {1, second})
        if found is None:
            continue
        target = {
            seg(found[i], found[(i + 1) % len(found)]) for i in range(len(found))
        }
        inside = _solve_gf2_subset(sys_, target)
        if inside is not None:
            ring = canonical_ring(found)
            outside = [i for i in ids if i not in inside]
            return ring, sorted(inside), outside
    raise PlanarizationError("no Hamiltonian ring found in the planar subgraph")


def _solve_gf2_subset(
    sys_: CycleSystem, target: Set[Segment]
) -> Optional[List[int]]:
    """Cycle ids whose GF(2) edge-set sum equals target, if any."""
    cols = sorted(sys_.segments())
    col_ix = {s: i for i, s in enumerate(cols)}
    rows: List[Tuple[int, int]] = []  # (bitset, tag-bitset over cycle index)
    ids = sorted(sys_.cycles)
    for k, cid in enumerate(ids):
        bits = 0
        for s in sys_.cycles[cid].segments:
            bits |= 1 << col_ix[s]
        rows.append((bits, 1 << k))
    want = 0
    for s in target:
        if s not in col_ix:
            return None
        want |= 1 << col_ix[s]
    tags = 0
    work = list(rows)
    for col in range(len(cols)):
        pivot = None
        for i, (bits, _) in enumerate(work):
            if (bits >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        pb, pt = work.pop(pivot)
        if (want >> col) & 1:
            want ^= pb
            tags ^= pt
        work = [
            ((b ^ pb, t ^ pt) if (b >> col) & 1 else (b, t)) for b, t in work
        ]
    if want != 0:
        return None
    return [ids[k] for k in range(len(ids)) if (tags >> k) & 1]


__all__ = [
    "CycleSystem",
    "PlanarizationError",
    "orient_cycles",
    "select_planar_cycle_system",
    "hamiltonian_rim",
]
