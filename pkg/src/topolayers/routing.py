"""Chord routing through the mixed cycle graph.

A chord that cannot be drawn without crossings is routed as a sequence of
conjugate faces; every conjugate edge crossed receives a fresh imaginary
vertex that subdivides it, and every face along the route splits in two.
The drawing is kept as a sphere: the faces of the current system plus the
rim face, each a simple oriented cycle, every edge on exactly two faces.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .cycles import Cycle, Segment, seg
from .graphs import Graph, edge_between
from .planar import CycleSystem

Carrier = Tuple[str, object]  # ("edge", edge id) or ("conn", (u, v))


class RoutingError(ValueError):
    pass


@dataclass
class Drawing:
    g: Graph
    faces: Dict[int, Cycle]
    rim_id: Optional[int]  # id of the face playing the drawing rim, if intact
    carrier: Dict[Segment, Carrier]
    side: Dict[int, str] = field(default_factory=dict)  # "inner" / "outer"
    banned: Set[Segment] = field(default_factory=set)
    next_cycle_id: int = 0
    next_vertex_id: int = 0
    routed: List[Tuple[int, int]] = field(default_factory=list)
    imaginary: Dict[int, dict] = field(default_factory=dict)

    @classmethod
    def from_system(cls, g: Graph, sys_: CycleSystem) -> "Drawing":
        faces = dict(sys_.cycles)
        rim_id = None
        if sys_.rim is not None:
            faces[sys_.rim.id] = sys_.rim
            rim_id = sys_.rim.id
        carrier: Dict[Segment, Carrier] = {}
        for c in faces.values():
            for a, b in c.arcs:
                s = seg(a, b)
                eid = edge_between(g, *s)
                if eid is None:
                    raise RoutingError(f"drawing edge ({s[0]},{s[1]}) is not a graph edge")
                carrier[s] = ("edge", eid)
        return cls(
            g=g,
            faces=faces,
            rim_id=rim_id,
            carrier=carrier,
            next_cycle_id=max(faces) + 1,
            next_vertex_id=g.n + 1,
        )

    def to_system(self) -> CycleSystem:
        faces = dict(self.faces)
        rim = faces.pop(self.rim_id) if self.rim_id is not None else None
        return CycleSystem(n=self.g.n, cycles=faces, rim=rim)

    def snapshot(self) -> CycleSystem:
        return self.to_system()

    def faces_with(self, v: int, among: Optional[Set[int]] = None) -> List[int]:
        return sorted(
            fid
            for fid, c in self.faces.items()
            if v in c.vertices and (among is None or fid in among)
        )

    def is_imaginary(self, v: int) -> bool:
        return v > self.g.n

    def has_imaginary(self, fid: int) -> bool:
        return any(v > self.g.n for v in self.faces[fid].vertices)


def conjugate_edge(c1: Cycle, c2: Cycle) -> Segment:
    """The single shared edge of two conjugate cycles."""
    shared = c1.segments & c2.segments
    if len(shared) != 1:
        raise RoutingError(
            f"c{c1.id} and c{c2.id} share {len(shared)} edges, not conjugate"
        )
    return next(iter(shared))


@dataclass
class MixedCycleGraph:
    """Cycle nodes joined by unbanned conjugate edges, plus vertex incidences."""

    links: Dict[int, List[Tuple[int, Segment]]]
    vertex_faces: Dict[int, List[int]]


def build_mixed_cycle_graph(
    drawing: Drawing,
    face_ids: Optional[Set[int]] = None,
    banned: Optional[Set[Segment]] = None,
    avoid_vertices: Sequence[int] = (),
) -> MixedCycleGraph:
    if face_ids is None:
        face_ids = set(drawing.faces)
    if banned is None:
        banned = drawing.banned
    avoid = set(avoid_vertices)
    by_seg: Dict[Segment, List[int]] = {}
    for fid in sorted(face_ids):
        for s in drawing.faces[fid].segments:
            by_seg.setdefault(s, []).append(fid)
    links: Dict[int, List[Tuple[int, Segment]]] = {fid: [] for fid in face_ids}
    for s, who in by_seg.items():
        if len(who) != 2 or s in banned or s[0] in avoid or s[1] in avoid:
            continue
        a, b = who
        # conjugate means sharing exactly this one edge
        if len(drawing.faces[a].segments & drawing.faces[b].segments) != 1:
            continue
        links[a].append((b, s))
        links[b].append((a, s))
    for fid in links:
        links[fid].sort()
    vertex_faces: Dict[int, List[int]] = {}
    for fid in sorted(face_ids):
        for v in drawing.faces[fid].vertices:
            vertex_faces.setdefault(v, []).append(fid)
    return MixedCycleGraph(links=links, vertex_faces=vertex_faces)


def shortest_route(
    drawing: Drawing,
    s: int,
    t: int,
    face_ids: Optional[Set[int]] = None,
) -> Optional[List[int]]:
    """Fewest faces from a face holding s to a face holding t.

    Conjugate links over banned edges or edges touching s/t are unusable.
    Ties resolve to the lexicographically smallest face-id sequence.
    Returns None when the chord cannot be routed in the given face set.
    """
    if s == t:
        raise RoutingError("degenerate chord")
    if seg(s, t) in drawing.carrier:
        raise RoutingError(f"({s},{t}) is already an edge of the drawing")
    mcg = build_mixed_cycle_graph(drawing, face_ids, avoid_vertices=(s, t))
    sources = mcg.vertex_faces.get(s, [])
    targets = set(mcg.vertex_faces.get(t, []))
    if not sources or not targets:
        return None
    # backward BFS from the target faces, then greedy lex-smallest forward walk
    dist = {fid: 0 for fid in targets}
    q = deque(sorted(targets))
    while q:
        fid = q.popleft()
        for nb, _ in mcg.links[fid]:
            if nb not in dist:
                dist[nb] = dist[fid] + 1
                q.append(nb)
    reachable = [fid for fid in sources if fid in dist]
    if not reachable:
        return None
    best = min(dist[fid] for fid in reachable)
    cur = min(fid for fid in reachable if dist[fid] == best)
    route = [cur]
    while dist[cur] > 0:
        cur = min(nb for nb, _ in mcg.links[cur] if dist.get(nb) == dist[cur] - 1)
        route.append(cur)
    return route


def route_from_conjugates(
    drawing: Drawing, s: int, t: int, conjugates: Sequence[Tuple[int, int]]
) -> List[int]:
    """Reconstruct a face route from its conjugate-edge chain (fixture pins)."""
    if not conjugates:
        both = [
            fid
            for fid, c in drawing.faces.items()
            if s in c.vertices and t in c.vertices
        ]
        if len(both) != 1:
            raise RoutingError(
                f"pinned zero-crossing route for ({s},{t}) is ambiguous: {sorted(both)}"
            )
        return both
    cov: Dict[Segment, List[int]] = {}
    for fid, c in drawing.faces.items():
        for sg in c.segments:
            cov.setdefault(sg, []).append(fid)
    route: List[int] = []
    for a, b in conjugates:
        sg = seg(a, b)
        who = cov.get(sg, [])
        if len(who) != 2:
            raise RoutingError(f"pinned conjugate ({a},{b}) lies on {len(who)} faces")
        if not route:
            first = [f for f in who if s in drawing.faces[f].vertices]
            if len(first) != 1:
                raise RoutingError(
                    f"pinned route for ({s},{t}): cannot anchor at v{s}"
                )
            route.append(first[0])
        if route[-1] not in who:
            raise RoutingError(
                f"pinned route for ({s},{t}): conjugate ({a},{b}) does not "
                f"continue from c{route[-1]}"
            )
        route.append(who[0] if who[1] == route[-1] else who[1])
    if t not in drawing.faces[route[-1]].vertices:
        raise RoutingError(f"pinned route for ({s},{t}) does not reach v{t}")
    return route


@dataclass
class InsertionRecord:
    chord: Tuple[int, int]
    route: List[int]
    imaginary_ids: List[int]
    new_faces: List[int]
    replaced: List[int]


def insert_connection(drawing: Drawing, s: int, t: int, route: Sequence[int]) -> InsertionRecord:
    """Realize chord (s,t) along a face route, splitting every route face.

    Each conjugate edge along the route gets a fresh imaginary vertex of
    degree 4; each route face splits into two at its entry/exit pair.
    """
    route = list(route)
    if not route:
        raise RoutingError("empty route")
    if s == t:
        raise RoutingError("degenerate chord")
    if seg(s, t) in drawing.carrier:
        raise RoutingError(f"({s},{t}) is already an edge of the drawing")
    if len(set(route)) != len(route):
        raise RoutingError("route revisits a face")
    if s not in drawing.faces[route[0]].vertices:
        raise RoutingError(f"v{s} is not on the first route face c{route[0]}")
    if t not in drawing.faces[route[-1]].vertices:
        raise RoutingError(f"v{t} is not on the last route face c{route[-1]}")
    conjs = [
        conjugate_edge(drawing.faces[a], drawing.faces[b])
        for a, b in zip(route, route[1:])
    ]
    for cs in conjs:
        if cs in drawing.banned:
            raise RoutingError(f"conjugate edge ({cs[0]},{cs[1]}) is banned")
        if s in cs or t in cs:
            raise RoutingError("degenerate crossing")

    chord_key = seg(s, t)
    ws = []
    for cs in conjs:
        w = drawing.next_vertex_id
        drawing.next_vertex_id += 1
        ws.append(w)
        drawing.imaginary[w] = {
            "host": cs,
            "carrier": drawing.carrier[cs],
            "chord": chord_key,
        }
    work = {fid: list(drawing.faces[fid].arcs) for fid in route}
    for i, cs in enumerate(conjs):
        w = ws[i]
        for fid in (route[i], route[i + 1]):
            arcs = work[fid]
            for k, (a, b) in enumerate(arcs):
                if seg(a, b) == cs:
                    arcs[k : k + 1] = [(a, w), (w, b)]
                    break
            else:
                raise RoutingError("conjugate edge missing from route face")
        ck = drawing.carrier.pop(cs)
        drawing.carrier[seg(cs[0], w)] = ck
        drawing.carrier[seg(w, cs[1])] = ck
        drawing.banned.discard(cs)

    record = InsertionRecord(
        chord=(s, t), route=route, imaginary_ids=ws, new_faces=[], replaced=list(route)
    )
    for k, fid in enumerate(route):
        entry = s if k == 0 else ws[k - 1]
        exit_ = ws[k] if k < len(ws) else t
        if entry == exit_:
            raise RoutingError("degenerate crossing")
        arcs = work[fid]
        verts = [a for a, _ in arcs]
        arcs = arcs[verts.index(entry):] + arcs[: verts.index(entry)]
        j = [a for a, _ in arcs].index(exit_)
        path1, path2 = arcs[:j], arcs[j:]
        a_id = drawing.next_cycle_id
        b_id = drawing.next_cycle_id + 1
        drawing.next_cycle_id += 2
        drawing.faces[a_id] = Cycle(a_id, tuple(path1) + ((exit_, entry),))
        drawing.faces[b_id] = Cycle(b_id, ((entry, exit_),) + tuple(path2))
        tag = drawing.side.get(fid)
        if tag is not None:
            drawing.side[a_id] = tag
            drawing.side[b_id] = tag
        del drawing.faces[fid]
        drawing.side.pop(fid, None)
        if drawing.rim_id == fid:
            drawing.rim_id = None
        drawing.carrier[seg(entry, exit_)] = ("conn", chord_key)
        drawing.banned.add(seg(entry, exit_))
        record.new_faces.extend([a_id, b_id])
    drawing.routed.append((s, t))
    return record


def connection_path(drawing: Drawing, chord: Tuple[int, int]) -> List[int]:
    """Vertices along the realized chord from its smaller endpoint.

    Includes crossings inserted by later layers, since subdivided
    connection arcs inherit the chord as their carrier.
    """
    key = seg(*chord)
    adj: Dict[int, List[int]] = {}
    for (a, b), ck in drawing.carrier.items():
        if ck == ("conn", key):
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    if not adj:
        raise RoutingError(f"chord ({key[0]},{key[1]}) has no realized connection")
    path = [key[0]]
    prev = None
    while path[-1] != key[1]:
        step = [w for w in adj[path[-1]] if w != prev]
        if len(step) != 1:
            raise RoutingError(f"connection of ({key[0]},{key[1]}) is not a path")
        prev = path[-1]
        path.append(step[0])
    return path


def imaginary_sequence(drawing: Drawing, chord: Tuple[int, int]) -> List[int]:
    """Imaginary vertices crossed by the chord, ordered from min(u,v)."""
    return connection_path(drawing, chord)[1:-1]


__all__ = [
    "Drawing",
    "MixedCycleGraph",
    "InsertionRecord",
    "RoutingError",
    "conjugate_edge",
    "build_mixed_cycle_graph",
    "shortest_route",
    "route_from_conjugates",
    "insert_connection",
    "connection_path",
    "imaginary_sequence",
]
