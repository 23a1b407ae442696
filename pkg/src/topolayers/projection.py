"""Chord projections on a coordinate basis and the crossing relation.

The coordinate basis is an ordered ring of vertices (usually a
Hamiltonian ring of the planar subgraph).  A chord projects onto the
shorter of the two rim arcs between its endpoints; two chords cross
exactly when their projections intersect properly (non-empty, neither
contains the other).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .graphs import Graph, edge_between


class ProjectionError(ValueError):
    pass


@dataclass(frozen=True)
class Basis:
    ring: Tuple[int, ...]
    labels: Tuple[int, ...]  # label of ring edge i = (ring[i], ring[i+1])

    @property
    def pos(self) -> Dict[int, int]:
        return {v: i for i, v in enumerate(self.ring)}

    def __len__(self) -> int:
        return len(self.ring)


def basis_from_ring(ring: Sequence[int], g: Optional[Graph] = None) -> Basis:
    """Basis over a vertex ring; ring edges labelled by graph edge id when
    available, otherwise by position."""
    labels = []
    k = len(ring)
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        eid = edge_between(g, a, b) if g is not None else None
        labels.append(eid if eid is not None else -(i + 1))
    return Basis(tuple(ring), tuple(labels))


def project_chord(basis: Basis, chord: Tuple[int, int]) -> FrozenSet[int]:
    """Labels of the shorter rim arc between the chord endpoints.

    Equal arcs tie-break to the lexicographically smaller sorted label
    list.
    """
    pos = basis.pos
    u, v = chord
    if u not in pos or v not in pos:
        missing = u if u not in pos else v
        raise ProjectionError(f"chord endpoint v{missing} is not on the basis ring")
    if u == v:
        raise ProjectionError("degenerate chord")
    i, j = sorted((pos[u], pos[v]))
    k = len(basis)
    arc1 = [basis.labels[t] for t in range(i, j)]
    arc2 = [basis.labels[t % k] for t in range(j, i + k)]
    if len(arc1) != len(arc2):
        pick = arc1 if len(arc1) < len(arc2) else arc2
    else:
        pick = arc1 if sorted(arc1) <= sorted(arc2) else arc2
    return frozenset(pick)


def chords_cross(
    basis: Basis, c1: Tuple[int, int], c2: Tuple[int, int]
) -> bool:
    """Proper intersection of the two projections."""
    p1 = project_chord(basis, c1)
    p2 = project_chord(basis, c2)
    inter = p1 & p2
    return bool(inter) and inter != p1 and inter != p2


def crossing_counts(
    basis: Basis, chords: Dict[int, Tuple[int, int]]
) -> Dict[int, int]:
    """Number of crossings per chord (keyed like the input)."""
    counts = {cid: 0 for cid in chords}
    for a, b in combinations(sorted(chords), 2):
        if chords_cross(basis, chords[a], chords[b]):
            counts[a] += 1
            counts[b] += 1
    return counts


def select_noncrossing(
    basis: Basis, chords: Dict[int, Tuple[int, int]]
) -> Tuple[List[int], List[int]]:
    """Iteratively drop the worst-crossing chord until none cross.

    Ties: larger crossing count, then larger projection, then smaller
    edge id.  Returns (kept ids sorted, removal order).
    """
    alive = dict(chords)
    removed: List[int] = []
    while True:
        counts = crossing_counts(basis, alive)
        worst = max(counts.values(), default=0)
        if worst == 0:
            break
        victim = min(
            (cid for cid in alive if counts[cid] == worst),
            key=lambda cid: (-len(project_chord(basis, alive[cid])), cid),
        )
        removed.append(victim)
        del alive[victim]
    return sorted(alive), removed


def brute_force_max_noncrossing(
    basis: Basis, chords: Dict[int, Tuple[int, int]]
) -> List[int]:
    """Exhaustive maximum non-crossing subset (reference oracle, <= 20 chords).

    Among maximum subsets, the lexicographically smallest sorted id list
    wins.
    """
    ids = sorted(chords)
    if len(ids) > 20:
        raise ProjectionError("brute force limited to 20 chords")
    conflict = {
        cid: {
            oid
            for oid in ids
            if oid != cid and chords_cross(basis, chords[cid], chords[oid])
        }
        for cid in ids
    }
    best: List[int] = []

    def grow(i: int, cur: List[int], banned: set) -> None:
        nonlocal best
        if len(cur) + (len(ids) - i) < len(best):
            return
        if i == len(ids):
            if len(cur) > len(best) or (len(cur) == len(best) and cur < best):
                best = list(cur)
            return
        cid = ids[i]
        if cid not in banned:
            grow(i + 1, cur + [cid], banned | conflict[cid])
        grow(i + 1, cur, banned)

    grow(0, [], set())
    return best


__all__ = [
    "Basis",
    "ProjectionError",
    "basis_from_ring",
    "project_chord",
    "chords_cross",
    "crossing_counts",
    "select_noncrossing",
    "brute_force_max_noncrossing",
]
