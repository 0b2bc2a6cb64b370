"""Combinatorial plane graphs: rotation systems, faces, degeneracy orders,
and the seeded triangulation generators used to build test corpora.

Conventions used throughout the package:

* vertices are dense integers 0..n-1; external names live in `labels`;
* `rotation[v]` lists the neighbors of v in clockwise order as drawn
  (y axis pointing up);
* faces are traced by the rule next(u->v) = (v, clockwise successor of u
  at v); under the clockwise convention inner faces come out in clockwise
  vertex order and the outer face in counterclockwise order;
* `outer_face` is stored exactly as traced, so for a triangulation with
  outer triple (v1, v2, vn) "clockwise" the stored cycle is [v1, vn, v2].
"""
from __future__ import annotations

import random
from dataclasses import dataclass

import networkx as nx

from .errors import InconsistentRotation, MalformedInput, NotPlanar

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _normalize_cycle(cycle):
    """Rotate a cyclic sequence so its lexicographically minimal rotation
    comes first. Direction is preserved."""
    seq = tuple(cycle)
    if not seq:
        return seq
    best = min(range(len(seq)), key=lambda i: seq[i:] + seq[:i])
    return seq[best:] + seq[:best]


@dataclass(frozen=True)
class PlaneGraph:
    """Immutable plane graph with a validated rotation system."""

    n: int
    edges: frozenset
    rotation: tuple
    outer_face: tuple
    base_edge: Edge | None = None
    labels: tuple | None = None

    # -- construction -----------------------------------------------------

    @staticmethod
    def build(n, edges, rotation, outer_face, base_edge=None, labels=None,
              validate=True) -> "PlaneGraph":
        edges = frozenset(edge_key(u, v) for u, v in edges)
        rotation = tuple(tuple(r) for r in rotation)
        g = PlaneGraph(
            n=n,
            edges=edges,
            rotation=tuple(_normalize_cycle(r) for r in rotation),
            outer_face=_normalize_cycle(outer_face),
            base_edge=tuple(base_edge) if base_edge is not None else None,
            labels=tuple(labels) if labels is not None else None,
        )
        if validate:
            g.check()
        return g

    def check(self):
        """Raise unless the rotation system is a consistent embedding."""
        if self.n < 1:
            raise MalformedInput("graph needs at least one vertex")
        if len(self.rotation) != self.n:
            raise MalformedInput("rotation must list every vertex")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise MalformedInput(f"edge ({u},{v}) out of range")
            if u == v:
                raise MalformedInput(f"self-loop at {u}")
            if (u, v) in seen:
                raise MalformedInput(f"parallel edge ({u},{v})")
            seen.add((u, v))
        for v, rot in enumerate(self.rotation):
            nbrs = {u for e in self.edges for u in e if v in e} - {v}
            if set(rot) != nbrs or len(rot) != len(nbrs):
                raise InconsistentRotation(
                    f"rotation at {v} is not a permutation of its neighbors")
        if not self._connected():
            raise MalformedInput("graph must be connected")
        faces = self.faces()
        if self.n - len(self.edges) + len(faces) != 2:
            raise InconsistentRotation(
                "rotation system fails Euler's formula")
        if _normalize_cycle(self.outer_face) not in {
                _normalize_cycle(f) for f in faces}:
            raise InconsistentRotation("outer_face is not a face")
        if self.base_edge is not None:
            if edge_key(*self.base_edge) not in self.edges:
                raise MalformedInput("base_edge is not an edge")

    def _connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.rotation[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    # -- basic queries -----------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: int):
        return self.rotation[v]

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def adjacency(self) -> dict:
        adj = {v: set() for v in range(self.n)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def faces(self):
        """All face cycles of the rotation system (vertex sequences)."""
        if self.n == 1:
            return [(0,)]
        nxt = {}
        for v, rot in enumerate(self.rotation):
            d = len(rot)
            for i, u in enumerate(rot):
                nxt[(u, v)] = (v, rot[(i + 1) % d])
        faces = []
        seen = set()
        for dart in sorted(nxt):
            if dart in seen:
                continue
            cyc = []
            cur = dart
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur[0])
                cur = nxt[cur]
            faces.append(tuple(cyc))
        return faces

    def face_of_dart(self, u: int, v: int):
        """The face cycle containing the directed edge (u, v)."""
        cyc = [u]
        cur = (u, v)
        while True:
            tail, head = cur
            rot = self.rotation[head]
            nxt = rot[(rot.index(tail) + 1) % len(rot)]
            cur = (head, nxt)
            if cur == (u, v) or len(cyc) > 2 * len(self.edges) + 1:
                break
            cyc.append(head)
        return tuple(cyc)

    def is_triangulation(self) -> bool:
        return (self.n >= 3 and len(self.edges) == 3 * self.n - 6
                and all(len(f) == 3 for f in self.faces()))

    def induced_rotation(self, keep) -> dict:
        """Rotation system of the induced subgraph (original vertex ids)."""
        keep = set(keep)
        return {v: tuple(u for u in self.rotation[v] if u in keep)
                for v in keep}

    def mirrored(self) -> "PlaneGraph":
        """The reflected embedding (all rotations reversed)."""
        return PlaneGraph.build(
            self.n, self.edges,
            [tuple(reversed(r)) for r in self.rotation],
            tuple(reversed(self.outer_face)),
            base_edge=self.base_edge, labels=self.labels)


# -- ingestion ---------------------------------------------------------------


def load_graph(document: dict) -> PlaneGraph:
    """Validate an input document and produce a PlaneGraph.

    When no rotation is supplied a combinatorial embedding is computed and
    verified; inputs without any plane embedding raise NotPlanar.
    """
    if not isinstance(document, dict):
        raise MalformedInput("expected a JSON object")
    try:
        n = int(document["n"])
    except (KeyError, TypeError, ValueError):
        raise MalformedInput("missing or invalid vertex count 'n'")
    raw_edges = document.get("edges")
    if not isinstance(raw_edges, list):
        raise MalformedInput("'edges' must be a list of pairs")
    edges = []
    seen = set()
    for item in raw_edges:
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(x, int) for x in item)):
            raise MalformedInput(f"bad edge entry {item!r}")
        u, v = item
        if u == v:
            raise MalformedInput(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInput(f"edge ({u},{v}) out of range")
        k = edge_key(u, v)
        if k in seen:
            raise MalformedInput(f"parallel edge ({u},{v})")
        seen.add(k)
        edges.append((u, v))

    base_edge = document.get("base_edge")
    if base_edge is not None:
        base_edge = tuple(base_edge)
        if len(base_edge) != 2 or edge_key(*base_edge) not in seen:
            raise MalformedInput("base_edge is not an edge of the graph")

    labels = document.get("labels")
    if labels is not None:
        if len(labels) != n:
            raise MalformedInput("labels must name every vertex")
        labels = tuple(str(x) for x in labels)

    raw_rot = document.get("rotation")
    if raw_rot is not None:
        rotation = _rotation_from_indices(n, edges, raw_rot)
    else:
        rotation = _embed(n, edges)

    outer = document.get("outer_face")
    if outer is not None:
        outer = tuple(outer)
        rotation, outer = _match_outer(n, edges, rotation, outer)
    else:
        probe = PlaneGraph.build(n, edges, rotation, _any_outer(n, edges, rotation),
                                 validate=False)
        outer = min(_normalize_cycle(f) for f in probe.faces())
    return PlaneGraph.build(n, edges, rotation, outer,
                            base_edge=base_edge, labels=labels)


def _rotation_from_indices(n, edges, raw_rot):
    if len(raw_rot) != n:
        raise MalformedInput("rotation must list every vertex")
    rotation = []
    for v, idxs in enumerate(raw_rot):
        nbrs = []
        for i in idxs:
            if not isinstance(i, int) or not (0 <= i < len(edges)):
                raise MalformedInput(f"bad edge index {i!r} at vertex {v}")
            a, b = edges[i]
            if v not in (a, b):
                raise InconsistentRotation(
                    f"edge {i} is not incident to vertex {v}")
            nbrs.append(b if a == v else a)
        rotation.append(tuple(nbrs))
    return rotation


def _embed(n, edges):
    """Compute a combinatorial embedding, or raise NotPlanar."""
    if n <= 2 or not edges:
        return [tuple(sorted({b if a == v else a for a, b in edges if v in (a, b)}))
                for v in range(n)]
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise NotPlanar("the edge set admits no plane embedding")
    return [tuple(emb.neighbors_cw_order(v)) if g.degree(v) else ()
            for v in range(n)]


def _any_outer(n, edges, rotation):
    probe = PlaneGraph(n=n, edges=frozenset(edge_key(*e) for e in edges),
                       rotation=tuple(tuple(r) for r in rotation),
                       outer_face=())
    return probe.faces()[0]


def _match_outer(n, edges, rotation, outer):
    """Find the requested outer face among traced faces, mirroring the
    embedding when the cycle is given with opposite orientation."""
    probe = PlaneGraph(n=n, edges=frozenset(edge_key(*e) for e in edges),
                       rotation=tuple(tuple(r) for r in rotation),
                       outer_face=())
    norm = {_normalize_cycle(f) for f in probe.faces()}
    if _normalize_cycle(outer) in norm:
        return rotation, outer
    if _normalize_cycle(tuple(reversed(outer))) in norm:
        mirrored = [tuple(reversed(r)) for r in rotation]
        return mirrored, outer
    raise InconsistentRotation("outer_face is not a face of the embedding")


def serialize(g: PlaneGraph) -> dict:
    """Emit the input-schema document for a PlaneGraph (exact round-trip)."""
    edges = sorted(g.edges)
    index = {e: i for i, e in enumerate(edges)}
    doc = {
        "n": g.n,
        "edges": [list(e) for e in edges],
        "rotation": [[index[edge_key(v, u)] for u in g.rotation[v]]
                     for v in range(g.n)],
        "outer_face": list(g.outer_face),
    }
    if g.base_edge is not None:
        doc["base_edge"] = list(g.base_edge)
    if g.labels is not None:
        doc["labels"] = list(g.labels)
    return doc


# -- degeneracy orders -------------------------------------------------------


@dataclass(frozen=True)
class DegeneracyOrder:
    order: tuple
    k: int
    maximal: bool


def degeneracy_order(g: PlaneGraph, k: int) -> DegeneracyOrder | None:
    """Min-degree peeling with a bucket queue.

    Returns a k-degenerate order when one exists (vertices listed so that
    each has at most k earlier neighbors), flagged maximal when every
    vertex has exactly min(i-1, k) earlier neighbors. Ties break toward
    the lowest vertex id so outputs are reproducible.
    """
    if k < 1:
        raise MalformedInput("k must be at least 1")
    deg = {v: g.degree(v) for v in range(g.n)}
    adj = g.adjacency()
    buckets = [set() for _ in range(g.n)]
    for v, d in deg.items():
        buckets[d].add(v)
    removed = []
    alive = set(range(g.n))
    removal_deg = {}
    for _ in range(g.n):
        d = next(i for i, b in enumerate(buckets) if b)
        if d > k:
            return None
        v = min(buckets[d])
        buckets[d].discard(v)
        alive.discard(v)
        removal_deg[v] = d
        removed.append(v)
        for u in adj[v]:
            if u in alive:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets[deg[u]].add(u)
    order = tuple(reversed(removed))
    maximal = all(removal_deg[order[i]] == min(i, k) for i in range(g.n))
    return DegeneracyOrder(order=order, k=k, maximal=maximal)


# -- corpus generators -------------------------------------------------------


def random_triangulation(n: int, seed: int) -> PlaneGraph:
    """Seeded maximally planar graph with a fixed embedding.

    Grown by random vertex insertions along a canonical boundary; the last
    vertex always covers the whole boundary so the outer face is a triangle
    and the edge count lands on 3n-6. Deterministic per (n, seed).
    """
    if n < 3:
        raise MalformedInput("a triangulation needs at least 3 vertices")
    rng = random.Random((n, seed))
    edges = [(0, 1)]
    boundary = [0, 1]
    for v in range(2, n):
        if v == n - 1:
            lo, hi = 0, len(boundary) - 1
        else:
            lo = rng.randrange(0, len(boundary) - 1)
            hi = rng.randrange(lo + 1, len(boundary))
        for w in boundary[lo:hi + 1]:
            edges.append((w, v))
        boundary = boundary[:lo + 1] + [v] + boundary[hi:]
    rotation = _embed(n, edges)
    probe = PlaneGraph(n=n, edges=frozenset(edge_key(*e) for e in edges),
                       rotation=tuple(tuple(r) for r in rotation),
                       outer_face=())
    target = {0, 1, n - 1} if n > 3 else {0, 1, 2}
    outer = next(f for f in probe.faces() if set(f) == target and len(f) == 3)
    return PlaneGraph.build(n, edges, rotation, outer, base_edge=(0, 1))


def random_planar_3tree(n: int, seed: int) -> PlaneGraph:
    """Seeded stacked triangulation (planar 3-tree) on n >= 4 vertices."""
    if n < 4:
        raise MalformedInput("a planar 3-tree needs at least 4 vertices")
    rng = random.Random((n, seed, "3tree"))
    edges = [(0, 1), (1, 2), (0, 2)]
    faces = [(0, 1, 2)]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces.pop(i)
        edges += [(a, v), (b, v), (c, v)]
        faces += [(a, b, v), (b, c, v), (a, c, v)]
    rotation = _embed(n, edges)
    probe = PlaneGraph(n=n, edges=frozenset(edge_key(*e) for e in edges),
                       rotation=tuple(tuple(r) for r in rotation),
                       outer_face=())
    outer = next(f for f in probe.faces() if set(f) == {0, 1, 2})
    return PlaneGraph.build(n, edges, rotation, outer, base_edge=(0, 1))
