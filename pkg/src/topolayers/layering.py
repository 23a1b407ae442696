"""Layer construction: regions, stripping, and the decomposition loop.

Layer 1 is the maximal planar subgraph.  Each further layer re-projects
the remaining chords on the Hamiltonian ring, routes what it can inside,
then outside, then through any channel of conjugate faces that avoids the
connections already drawn in the same layer; what is left opens the next
layer with a fresh ban set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .cycles import Cycle, Segment, canonical_ring, ring_cycle, seg
from .graphs import Graph, edge_between, validate_nonseparable
from .planar import (
    CycleSystem,
    hamiltonian_rim,
    select_planar_cycle_system,
)
from .projection import basis_from_ring, select_noncrossing
from .routing import (
    Drawing,
    RoutingError,
    imaginary_sequence,
    insert_connection,
    route_from_conjugates,
    shortest_route,
)


class DecompositionError(ValueError):
    pass


@dataclass
class Layer:
    index: int
    realized: List[int]  # original edge ids drawn in this layer
    system: CycleSystem  # drawing snapshot at the end of the layer
    ring: Optional[List[int]] = None  # basis ring used (layers >= 2)


@dataclass
class Decomposition:
    g: Graph
    strategy: str
    layers: List[Layer]
    chords: Dict[int, Tuple[int, int]]  # edge id -> endpoints, for routed chords
    sequences: Dict[int, List[int]]  # edge id -> imaginary vertices, from min end
    drawing: Drawing = field(repr=False, default=None)


def layer_edge_partition(d: Decomposition) -> Dict[int, List[int]]:
    return {layer.index: sorted(layer.realized) for layer in d.layers}


def _boundary_ring(faces: Sequence[Cycle]) -> Optional[List[int]]:
    acc: Set[Segment] = set()
    for c in faces:
        acc.symmetric_difference_update(c.segments)
    if not acc:
        return None
    adj: Dict[int, List[int]] = {}
    for a, b in acc:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(ns) != 2 for ns in adj.values()):
        return None
    start = min(adj)
    ring, prev, cur = [start], None, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        step = nxt[0] if nxt else prev
        if step == start:
            break
        ring.append(step)
        prev, cur = cur, step
        if len(ring) > len(acc):
            return None
    return canonical_ring(ring) if len(ring) == len(acc) else None


def region_system(drawing: Drawing, face_ids: Sequence[int]) -> CycleSystem:
    """The faces as a CycleSystem with the region boundary as rim (id 0)."""
    faces = [drawing.faces[fid] for fid in sorted(face_ids)]
    ring = _boundary_ring(faces)
    if ring is None:
        raise DecompositionError("region boundary is not a single closed walk")
    rim = ring_cycle(0, ring)
    # rim must oppose the interior traversal of its edges
    probe = rim.arcs[0]
    for c in faces:
        if probe in c.arcs:
            rim = rim.reversed()
            break
    return CycleSystem(n=drawing.g.n, cycles={c.id: c for c in faces}, rim=rim)


def strip_imaginary_region(
    drawing: Drawing, chord: Optional[Tuple[int, int]] = None
) -> Tuple[List[int], List[int]]:
    """Faces free of imaginary vertices that can host further routing.

    The rim face is excluded; links whose shared edge touches a chord
    endpoint are cut, since a route cannot cross there anyway.  With a
    chord, the component holding both endpoints is returned; without one,
    the component with the lexicographically smallest boundary.  Returns
    (face ids, boundary ring).
    """
    cands = {
        fid
        for fid in drawing.faces
        if fid != drawing.rim_id and not drawing.has_imaginary(fid)
    }
    avoid = set(chord) if chord else set()
    by_seg: Dict[Segment, List[int]] = {}
    for fid in sorted(cands):
        for s in drawing.faces[fid].segments:
            by_seg.setdefault(s, []).append(fid)
    parent = {fid: fid for fid in cands}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, who in by_seg.items():
        if len(who) == 2 and not (s[0] in avoid or s[1] in avoid):
            a, b = find(who[0]), find(who[1])
            if a != b:
                parent[max(a, b)] = min(a, b)
    comps: Dict[int, List[int]] = {}
    for fid in cands:
        comps.setdefault(find(fid), []).append(fid)
    scored = []
    for members in comps.values():
        ring = _boundary_ring([drawing.faces[fid] for fid in members])
        if ring is None:
            continue
        scored.append((sorted(members), ring))
    if chord is not None:
        u, v = chord
        hits = [
            (m, r)
            for m, r in scored
            if any(u in drawing.faces[f].vertices for f in m)
            and any(v in drawing.faces[f].vertices for f in m)
            and u in r
            and v in r
        ]
        if not hits:
            raise DecompositionError(
                f"no residual region can host chord ({u},{v})"
            )
        hits.sort(key=lambda t: sorted(seg(a, b) for a, b in zip(t[1], t[1][1:] + t[1][:1])))
        return hits[0]
    if not scored:
        raise DecompositionError("no residual region with a closed boundary")
    scored.sort(key=lambda t: sorted(seg(a, b) for a, b in zip(t[1], t[1][1:] + t[1][:1])))
    return scored[0]


def split_regions(
    drawing: Drawing, ring: Sequence[int], inside: Sequence[int]
) -> Tuple[Set[int], Set[int]]:
    """Tag faces inner/outer of the Hamiltonian ring; tags survive splits."""
    inner = set(inside)
    for fid in drawing.faces:
        drawing.side[fid] = "inner" if fid in inner else "outer"
    return (
        {f for f, s in drawing.side.items() if s == "inner"},
        {f for f, s in drawing.side.items() if s == "outer"},
    )


def expanded_ring(drawing: Drawing, ring: Sequence[int]) -> List[int]:
    """The ring as it currently runs, with subdivision vertices included."""
    out: List[int] = []
    for i in range(len(ring)):
        a, b = ring[i], ring[(i + 1) % len(ring)]
        eid = edge_between(drawing.g, a, b)
        segs = [s for s, ck in drawing.carrier.items() if ck == ("edge", eid)]
        adj: Dict[int, List[int]] = {}
        for x, y in segs:
            adj.setdefault(x, []).append(y)
            adj.setdefault(y, []).append(x)
        path, prev = [a], None
        while path[-1] != b:
            step = [w for w in adj[path[-1]] if w != prev]
            if len(step) != 1:
                raise DecompositionError(f"ring edge e{eid} is not a path")
            prev = path[-1]
            path.append(step[0])
        out.extend(path[:-1])
    return out


def _side_faces(drawing: Drawing, side: str) -> Set[int]:
    return {fid for fid, s in drawing.side.items() if s == side}


def _route_greedy(
    drawing: Drawing,
    pool: Dict[int, Tuple[int, int]],
    face_ids: Optional[Set[int]],
    recompute_faces=None,
) -> List[int]:
    """Route chords shortest-first until none fits; returns routed edge ids."""
    done: List[int] = []
    while True:
        best = None
        faces = recompute_faces() if recompute_faces else face_ids
        for eid in sorted(set(pool) - set(done)):
            u, v = pool[eid]
            r = shortest_route(drawing, u, v, faces)
            if r is not None and (best is None or len(r) < len(best[2])):
                best = (eid, (u, v), r)
        if best is None:
            return done
        eid, (u, v), r = best
        insert_connection(drawing, u, v, r)
        done.append(eid)


def _run_plan_layer(
    drawing: Drawing, layer_plan: dict, remaining: Dict[int, Tuple[int, int]]
) -> List[int]:
    routed: List[int] = []
    by_pair = {tuple(sorted(uv)): eid for eid, uv in remaining.items()}
    if "imaginary_base" in layer_plan:
        drawing.next_vertex_id = max(drawing.next_vertex_id, layer_plan["imaginary_base"])
    for step in layer_plan.get("steps", []):
        if "imaginary_base" in step:
            drawing.next_vertex_id = max(drawing.next_vertex_id, step["imaginary_base"])
        region = step.get("region", {"kind": "all"})
        chords = [tuple(c["chord"]) for c in step["chords"]]
        face_ids: Optional[Set[int]] = None
        if region["kind"] == "side":
            face_ids = _side_faces(drawing, region["side"])
        elif region["kind"] == "strip":
            members, _ = strip_imaginary_region(drawing, tuple(sorted(chords[0])))
            face_ids = set(members)
        elif region["kind"] != "all":
            raise DecompositionError(f"unknown region kind {region['kind']!r}")
        for entry in step["chords"]:
            s, t = entry["chord"]
            eid = by_pair.get(tuple(sorted((s, t))))
            if eid is None or eid not in remaining:
                raise DecompositionError(f"planned chord ({s},{t}) is not pending")
            if "conjugates" in entry:
                route = route_from_conjugates(drawing, s, t, entry["conjugates"])
            else:
                faces = (
                    _side_faces(drawing, region["side"])
                    if region["kind"] == "side"
                    else face_ids
                )
                route = shortest_route(drawing, s, t, faces)
                if route is None:
                    raise DecompositionError(
                        f"planned chord ({s},{t}) has no route in its region"
                    )
            insert_connection(drawing, s, t, route)
            del remaining[eid]
            routed.append(eid)
    return routed


def decompose(
    g: Graph,
    strategy: str = "thickness",
    pin: Optional[dict] = None,
    pool: Optional[Sequence[Cycle]] = None,
    max_layers: int = 16,
) -> Decomposition:
    """Full layered drawing of a nonseparable graph."""
    if strategy not in ("thickness", "inner-only"):
        raise DecompositionError(f"unknown strategy {strategy!r}")
    report = validate_nonseparable(g)
    if not report.ok:
        raise DecompositionError(
            "input is not nonseparable: " + "; ".join(report.problems())
        )
    if pool is None:
        from .cycles import enumerate_isometric_cycles

        pool = enumerate_isometric_cycles(g)
    pin = pin or {}
    sys_ = select_planar_cycle_system(g, pool, pin.get("system"))
    ring, inside, _ = hamiltonian_rim(sys_, g, pin.get("hamiltonian"))
    drawing = Drawing.from_system(g, sys_)
    split_regions(drawing, ring, inside)

    region_eids = sorted(edge_between(g, *s) for s in sys_.segments())
    chords = {
        eid: uv for eid, uv in g.edges.items() if eid not in set(region_eids)
    }
    layers = [Layer(1, realized=region_eids, system=sys_)]
    remaining = dict(chords)

    # pinned routing plans describe thickness-style schedules; the
    # inner-only strategy always schedules generically
    planned = (pin.get("plan") or {}).get("layers", []) if strategy == "thickness" else []
    layer_index = 1
    while remaining:
        layer_index += 1
        if layer_index > max_layers:
            raise DecompositionError("layer budget exhausted")
        drawing.banned.clear()
        if planned:
            routed = _run_plan_layer(drawing, planned.pop(0), remaining)
        else:
            routed = []
            ring_now = expanded_ring(drawing, ring)
            basis = basis_from_ring(ring_now)
            sides = ["inner"] if strategy == "inner-only" else ["inner", "outer"]
            for side in sides:
                cand = {eid: remaining[eid] for eid in sorted(remaining)}
                if not cand:
                    break
                kept, _ = select_noncrossing(basis, cand)
                pool_k = {eid: cand[eid] for eid in kept}
                done = _route_greedy(
                    drawing,
                    pool_k,
                    None,
                    recompute_faces=lambda side=side: _side_faces(drawing, side),
                )
                for eid in done:
                    del remaining[eid]
                routed.extend(done)
            if strategy == "thickness":
                done = _route_greedy(
                    drawing,
                    {eid: remaining[eid] for eid in sorted(remaining)},
                    None,
                    recompute_faces=lambda: None,
                )
                for eid in done:
                    del remaining[eid]
                routed.extend(done)
        if not routed:
            raise DecompositionError(
                f"no remaining chord is routable in layer {layer_index}"
            )
        layers.append(
            Layer(
                layer_index,
                realized=sorted(routed),
                system=drawing.snapshot(),
                ring=list(ring),
            )
        )
    sequences = {
        eid: imaginary_sequence(drawing, uv) for eid, uv in chords.items()
    }
    return Decomposition(
        g=g,
        strategy=strategy,
        layers=layers,
        chords=chords,
        sequences=sequences,
        drawing=drawing,
    )


__all__ = [
    "DecompositionError",
    "Layer",
    "Decomposition",
    "decompose",
    "layer_edge_partition",
    "split_regions",
    "strip_imaginary_region",
    "region_system",
    "expanded_ring",
]
