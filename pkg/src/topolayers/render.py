"""Deterministic SVG pictures of decomposition layers.

Geometry is a convenience projection only: ring vertices sit on a regular
polygon, interior original vertices at Tutte barycentric positions, and
every imaginary vertex at the straight-line intersection of its host
segment with its own chord.  No randomness, no timestamps.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

import numpy as np

SIZE = 600.0
MARGIN = 60.0


class RenderError(ValueError):
    pass


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _base_positions(doc: dict) -> Dict[int, Tuple[float, float]]:
    layers = doc["layers"]
    ring: Optional[List[int]] = None
    for layer in layers:
        if layer.get("ring"):
            ring = layer["ring"]
            break
    if ring is None:
        rim = layers[0]["system"].get("rim")
        if rim is None:
            raise RenderError("document has neither a ring nor a rim to anchor")
        ring = [a for a, _ in rim["arcs"]]
    n = doc["graph"]["n"]
    r = SIZE / 2 - MARGIN
    pos: Dict[int, Tuple[float, float]] = {}
    for i, v in enumerate(ring):
        ang = 2 * np.pi * i / len(ring) - np.pi / 2
        pos[v] = (SIZE / 2 + r * np.cos(ang), SIZE / 2 + r * np.sin(ang))
    interior = [v for v in range(1, n + 1) if v not in pos]
    if interior:
        # Tutte: each interior vertex at the average of its layer-1 neighbours
        nbrs: Dict[int, List[int]] = {v: [] for v in interior}
        for c in layers[0]["system"]["cycles"] + (
            [layers[0]["system"]["rim"]] if layers[0]["system"]["rim"] else []
        ):
            for a, b in c["arcs"]:
                if a in nbrs:
                    nbrs[a].append(b)
                if b in nbrs:
                    nbrs[b].append(a)
        ix = {v: i for i, v in enumerate(interior)}
        A = np.zeros((len(interior), len(interior)))
        bx = np.zeros(len(interior))
        by = np.zeros(len(interior))
        for v in interior:
            i = ix[v]
            A[i, i] = len(set(nbrs[v]))
            for w in set(nbrs[v]):
                if w in ix:
                    A[i, ix[w]] -= 1.0
                else:
                    bx[i] += pos[w][0]
                    by[i] += pos[w][1]
        xs = np.linalg.solve(A, bx)
        ys = np.linalg.solve(A, by)
        for v in interior:
            pos[v] = (float(xs[ix[v]]), float(ys[ix[v]]))
    return pos


def _carrier_paths(doc: dict) -> Dict[tuple, List[int]]:
    """Walk the final drawing segments of each carrier back into a path."""
    edges = {eid: (u, v) for eid, u, v in doc["graph"]["edges"]}
    groups: Dict[tuple, List[Tuple[int, int]]] = {}
    for a, b, kind, ref in doc["carrier"]:
        key = (kind, ref if kind == "edge" else tuple(ref))
        groups.setdefault(key, []).append((a, b))
    paths: Dict[tuple, List[int]] = {}
    for key, segs in groups.items():
        kind, ref = key
        u, v = edges[ref] if kind == "edge" else ref
        adj: Dict[int, List[int]] = {}
        for a, b in segs:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        path = [min(u, v)]
        prev = None
        while path[-1] != max(u, v):
            nxt = [w for w in adj[path[-1]] if w != prev]
            prev = path[-1]
            path.append(nxt[0])
        paths[key] = path
    return paths


def _imaginary_positions(
    doc: dict, pos: Dict[int, Tuple[float, float]]
) -> Dict[int, Tuple[float, float]]:
    """Crossing markers: spaced along the host edge by subdivision order;
    markers on connection hosts relax to the midpoint of their path
    neighbours so every marker sits on both polylines through it."""
    paths = _carrier_paths(doc)
    out: Dict[int, Tuple[float, float]] = {}
    pending: List[Tuple[int, tuple]] = []
    for entry in doc["imaginary"]:
        kind, ref = entry["carrier"]
        key = (kind, ref if kind == "edge" else tuple(ref))
        path = paths[key]
        if kind == "edge":
            t = path.index(entry["id"]) / (len(path) - 1)
            p, q = pos[path[0]], pos[path[-1]]
            out[entry["id"]] = (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
        else:
            u, v = key[1]
            out[entry["id"]] = (
                (pos[u][0] + pos[v][0]) / 2,
                (pos[u][1] + pos[v][1]) / 2,
            )
            pending.append((entry["id"], key))
    for _ in range(64):
        for w, key in pending:
            path = paths[key]
            i = path.index(w)
            ps = [
                out[x] if x in out else pos[x]
                for x in (path[i - 1], path[i + 1])
            ]
            out[w] = ((ps[0][0] + ps[1][0]) / 2, (ps[0][1] + ps[1][1]) / 2)
    return out


def render_svg(doc: dict, layer_index: int) -> str:
    layers = {layer["index"]: layer for layer in doc["layers"]}
    if layer_index not in layers:
        raise RenderError(f"document has no layer {layer_index}")
    layer = layers[layer_index]
    pos = _base_positions(doc)
    ipos = _imaginary_positions(doc, pos)
    edges = {eid: (u, v) for eid, u, v in doc["graph"]["edges"]}
    sequences = {int(k): v for k, v in doc["sequences"].items()}
    lines: List[Tuple[Tuple[float, float], Tuple[float, float]]] = []
    polylines: List[List[Tuple[float, float]]] = []
    used_imaginary = set()
    if layer_index == 1:
        segs = sorted(
            {
                tuple(sorted((a, b)))
                for c in layer["system"]["cycles"]
                + ([layer["system"]["rim"]] if layer["system"]["rim"] else [])
                for a, b in c["arcs"]
            }
        )
        for a, b in segs:
            lines.append((pos[a], pos[b]))
    else:
        ring = layer.get("ring") or []
        for i in range(len(ring)):
            a, b = ring[i], ring[(i + 1) % len(ring)]
            lines.append((pos[a], pos[b]))
        for eid in layer["realized"]:
            u, v = edges[eid]
            pts = [pos[min(u, v)]]
            for w in sequences.get(eid, []):
                pts.append(ipos[w])
                used_imaginary.add(w)
            pts.append(pos[max(u, v)])
            polylines.append(pts)
    body: List[str] = []
    for (x1, y1), (x2, y2) in lines:
        body.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="black" stroke-width="1.2"/>'
        )
    for pts in polylines:
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        body.append(
            f'<polyline points="{coords}" fill="none" stroke="crimson" stroke-width="1.2"/>'
        )
    for v in sorted(pos):
        x, y = pos[v]
        body.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="black"/>')
        body.append(
            f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" font-size="11">v{v}</text>'
        )
    for w in sorted(used_imaginary):
        x, y = ipos[w]
        body.append(
            f'<circle class="imaginary" cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.5" fill="crimson"/>'
        )
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(SIZE)}" '
        f'height="{int(SIZE)}" viewBox="0 0 {int(SIZE)} {int(SIZE)}">'
    )
    return "\n".join([head] + body + ["</svg>"]) + "\n"


__all__ = ["RenderError", "render_svg"]
