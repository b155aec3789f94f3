"""Surface graphs, rotation systems, and the hypermap/surface conversions.

A :class:`SurfaceGraph` is a multigraph embedded on a closed surface, with
labeled edges and an explicit face list; faces are stored as mod-2 boundary
supports (edge-label sets), so an edge whose two face incidences coincide
cancels out of that face's set.  A :class:`RotationGraph` encodes an
embedding the combinatorial way: a cyclic order of edge-ends around every
vertex.  Edge ``j`` (1-based) has edge-ends ``2j-1`` at its first endpoint
and ``2j`` at its second; these ids double as dart labels when a graph is
reinterpreted as a hypermap.

The conversion from a hypermap to its equivalent surface graph is executed
combinatorially: the output's edges pair each nonspecial dart with its
tau-predecessor's vertex, and its faces are read off the face-boundary
matrix, which is exactly the merged-face boundary the drawing-based
procedure produces.  :func:`intermediate_surface` materializes the pre-merge
stage (all darts kept as edges, hyperedges as extra faces) for DOT export
and debugging.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._jsonfmt import compact_json
from .chain import boundary_pair, nonspecial_darts
from .css import CodeParams, CssCode, build_canonical, params, stabilizer_equal
from .hypermap import (
    Hypermap,
    NotConnectedError,
    Permutation,
    SpecialDartSet,
    choose_special_darts,
)


@dataclass(frozen=True)
class SurfaceGraph:
    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]
    faces: tuple[frozenset[int], ...]

    def __post_init__(self):
        edges = tuple((int(a), int(b), int(label)) for a, b, label in self.edges)
        faces = tuple(frozenset(int(x) for x in face) for face in self.faces)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "faces", faces)
        if self.vertex_count < 1:
            raise ValueError("graph needs at least one vertex")
        labels = [label for _, _, label in edges]
        if len(set(labels)) != len(labels):
            raise ValueError("edge labels must be distinct")
        label_set = set(labels)
        for a, b, label in edges:
            if not (1 <= a <= self.vertex_count and 1 <= b <= self.vertex_count):
                raise ValueError(f"edge {label} endpoint out of range")
        for face in faces:
            if not face <= label_set:
                raise ValueError(f"face {sorted(face)} uses unknown edge labels")
        # Closed surface, observed mod 2: an edge lies on two face incidences,
        # so it shows up in exactly two face sets or cancels out of one.
        for label in labels:
            uses = sum(label in face for face in faces)
            if uses not in (0, 2):
                raise ValueError(
                    f"edge {label} appears in {uses} faces; expected 0 or 2"
                )

    @property
    def edge_labels(self) -> tuple[int, ...]:
        return tuple(sorted(label for _, _, label in self.edges))


@dataclass(frozen=True)
class RotationGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        rotation = tuple(tuple(int(h) for h in cycle) for cycle in self.rotation)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "rotation", rotation)
        if self.vertex_count < 1:
            raise ValueError("graph needs at least one vertex")
        if len(rotation) != self.vertex_count:
            raise ValueError(
                f"{len(rotation)} rotation cycles for {self.vertex_count} vertices"
            )
        for a, b in edges:
            if not (1 <= a <= self.vertex_count and 1 <= b <= self.vertex_count):
                raise ValueError(f"edge ({a},{b}) endpoint out of range")
        n_ends = 2 * len(edges)
        seen: dict[int, int] = {}
        for v, cycle in enumerate(rotation, start=1):
            for h in cycle:
                if not 1 <= h <= n_ends:
                    raise ValueError(f"edge-end {h} out of range 1..{n_ends}")
                if h in seen:
                    raise ValueError(f"edge-end {h} listed at two vertices")
                seen[h] = v
        if len(seen) != n_ends:
            raise ValueError("rotation must list every edge-end exactly once")
        for h, v in seen.items():
            if self.end_vertex(h) != v:
                raise ValueError(
                    f"edge-end {h} belongs at vertex {self.end_vertex(h)}, listed at {v}"
                )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def end_vertex(self, h: int) -> int:
        """Vertex carrying edge-end ``h``."""
        a, b = self.edges[(h - 1) // 2]
        return a if h % 2 == 1 else b

    def sigma(self) -> Permutation:
        """Next-end-around-the-vertex permutation of all edge-ends."""
        return Permutation.from_cycles(self.rotation, 2 * len(self.edges))

    def end_swap(self) -> Permutation:
        """Involution pairing the two ends of every edge."""
        return Permutation.from_cycles(
            [(2 * j - 1, 2 * j) for j in range(1, len(self.edges) + 1)],
            2 * len(self.edges),
        )


def rotation_faces(G: RotationGraph) -> tuple[tuple[int, ...], ...]:
    """Faces of the embedded graph, as edge-end orbits of the face traversal."""
    if not G.edges:
        raise ValueError("face traversal needs at least one edge")
    return (G.sigma() * G.end_swap()).orbits().orbits


def rotation_to_surface(G: RotationGraph) -> SurfaceGraph:
    """Forget the rotation system, keeping the face list it induces.

    Edges are labeled by their 1-based edge index; each face becomes the
    mod-2 support of the edges its boundary traverses.
    """
    faces = []
    for orbit in rotation_faces(G):
        support: set[int] = set()
        for h in orbit:
            support ^= {(h + 1) // 2}
        faces.append(frozenset(support))
    edges = tuple((a, b, j) for j, (a, b) in enumerate(G.edges, start=1))
    return SurfaceGraph(G.vertex_count, edges, tuple(faces))


def surface_code(G: SurfaceGraph) -> CssCode:
    """Surface code of an embedded graph.

    ``hx`` is the vertex-edge incidence matrix (a loop's endpoints coincide
    and cancel to a zero column) and ``hz`` the face-edge incidence matrix;
    columns are ordered by ascending edge label.
    """
    labels = G.edge_labels
    col = {label: k for k, label in enumerate(labels)}
    hx = np.zeros((G.vertex_count, len(labels)), dtype=np.uint8)
    for a, b, label in G.edges:
        hx[a - 1, col[label]] ^= 1
        hx[b - 1, col[label]] ^= 1
    hz = np.zeros((len(G.faces), len(labels)), dtype=np.uint8)
    for f, face in enumerate(G.faces):
        for label in face:
            hz[f, col[label]] = 1
    return CssCode(hx, hz)


def hypermap_to_surface(H: Hypermap, S: SpecialDartSet | None = None) -> SurfaceGraph:
    """Equivalent surface graph of a canonical hypermap code.

    Vertices are the hypermap's vertex orbits; every nonspecial dart ``d``
    becomes an edge labeled ``d`` joining the vertices of ``d`` and of
    ``tau^-1(d)``; the faces are the face-boundary supports, one per
    hypermap face.  The surface code of the output is the canonical code.
    """
    if S is None:
        S = choose_special_darts(H)
    basis = nonspecial_darts(H, S)
    tau_inv = H.tau.inverse()
    edges = tuple(
        (H.incident_vertex(d) + 1, H.incident_vertex(tau_inv(d)) + 1, d)
        for d in basis
    )
    bp = boundary_pair(H, S)
    faces = tuple(
        frozenset(basis[k] for k in np.flatnonzero(bp.p2[f]))
        for f in range(bp.p2.shape[0])
    )
    return SurfaceGraph(len(H.vertices()), edges, faces)


def intermediate_surface(H: Hypermap, S: SpecialDartSet | None = None) -> SurfaceGraph:
    """Pre-merge stage of the conversion, for inspection and DOT export.

    Every dart (special ones included) is still an edge, and every hyperedge
    contributes an extra face bounded by its darts; deleting the special
    edges and merging across them yields :func:`hypermap_to_surface`.
    """
    if S is None:
        S = choose_special_darts(H)
    tau_inv = H.tau.inverse()
    edges = tuple(
        (H.incident_vertex(d) + 1, H.incident_vertex(tau_inv(d)) + 1, d)
        for d in range(1, H.n_darts + 1)
    )
    faces = [frozenset(orbit) for orbit in H.faces().orbits]
    faces += [frozenset(orbit) for orbit in H.hyperedges().orbits]
    return SurfaceGraph(len(H.vertices()), edges, tuple(faces))


def graph_to_hypermap(G: RotationGraph) -> tuple[Hypermap, SpecialDartSet]:
    """Reinterpret an embedded graph as a hypermap with 2-dart hyperedges.

    Edge-ends become darts; the end-swap involution is the hyperedge
    permutation, the rotation the vertex permutation.  The special dart of
    each edge is the end at its smaller endpoint (the first end for loops),
    so the equivalent surface graph of the result recovers the input.
    """
    if not G.edges:
        raise NotConnectedError("graph has no edges")
    H = Hypermap(G.sigma(), G.end_swap())
    preferred = [
        (2 * j - 1) if a <= b else (2 * j)
        for j, (a, b) in enumerate(G.edges, start=1)
    ]
    return H, choose_special_darts(H, preferred=preferred)


@dataclass(frozen=True)
class EquivalenceReport:
    equal: bool
    graph: SurfaceGraph
    hypermap_code: CssCode
    surface_code: CssCode
    hypermap_params: CodeParams
    surface_params: CodeParams


def verify_equivalence(H: Hypermap, S: SpecialDartSet | None = None) -> EquivalenceReport:
    """Build the canonical code and its surface code and compare stabilizers."""
    if S is None:
        S = choose_special_darts(H)
    hmap_code = build_canonical(H, S)
    graph = hypermap_to_surface(H, S)
    surf_code = surface_code(graph)
    return EquivalenceReport(
        equal=stabilizer_equal(hmap_code, surf_code),
        graph=graph,
        hypermap_code=hmap_code,
        surface_code=surf_code,
        hypermap_params=params(hmap_code),
        surface_params=params(surf_code),
    )


def toric_rotation_graph(rows: int, cols: int) -> RotationGraph:
    """Square-lattice graph on the torus with the standard rotation system.

    ``rows * cols`` vertices, one rightward and one downward edge per vertex
    (wrapping around), and rotation order east, north, west, south at every
    vertex.  The induced embedding has ``rows * cols`` faces and genus 1.
    """
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be positive")

    def vid(x: int, y: int) -> int:
        return (x % rows) * cols + (y % cols) + 1

    edges: list[tuple[int, int]] = []
    right_edge: dict[tuple[int, int], int] = {}
    down_edge: dict[tuple[int, int], int] = {}
    for x in range(rows):
        for y in range(cols):
            right_edge[(x, y)] = len(edges) + 1
            edges.append((vid(x, y), vid(x, y + 1)))
            down_edge[(x, y)] = len(edges) + 1
            edges.append((vid(x, y), vid(x + 1, y)))

    rotation = []
    for x in range(rows):
        for y in range(cols):
            east = 2 * right_edge[(x, y)] - 1
            north = 2 * down_edge[((x - 1) % rows, y)]
            west = 2 * right_edge[(x, (y - 1) % cols)]
            south = 2 * down_edge[(x, y)] - 1
            rotation.append((east, north, west, south))
    return RotationGraph(rows * cols, tuple(edges), tuple(rotation))


# --- DOT and JSON export --------------------------------------------------------


def surface_graph_dot(G: SurfaceGraph) -> str:
    lines = ["graph surface {"]
    for f, face in enumerate(G.faces, start=1):
        body = " ".join(map(str, sorted(face))) if face else "(empty)"
        lines.append(f"  // face {f}: {body}")
    for a, b, label in G.edges:
        lines.append(f'  v{a} -- v{b} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def rotation_graph_dot(G: RotationGraph) -> str:
    lines = ["graph rotation {"]
    for v, cycle in enumerate(G.rotation, start=1):
        lines.append(f"  // vertex {v} rotation: {' '.join(map(str, cycle))}")
    for j, (a, b) in enumerate(G.edges, start=1):
        lines.append(f'  v{a} -- v{b} [label="{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def surface_graph_to_json(G: SurfaceGraph) -> dict:
    return {
        "vertices": G.vertex_count,
        "edges": [[a, b, label] for a, b, label in G.edges],
        "faces": [sorted(face) for face in G.faces],
    }


def surface_graph_from_json(data: dict) -> SurfaceGraph:
    if not isinstance(data, dict):
        raise ValueError("surface graph JSON must be an object")
    try:
        return SurfaceGraph(
            int(data["vertices"]),
            tuple((a, b, label) for a, b, label in data["edges"]),
            tuple(frozenset(face) for face in data["faces"]),
        )
    except KeyError as missing:
        raise ValueError(f"surface graph JSON missing key {missing}") from None


def rotation_graph_to_json(G: RotationGraph) -> dict:
    return {
        "vertices": G.vertex_count,
        "edges": [[a, b] for a, b in G.edges],
        "rotation": [list(cycle) for cycle in G.rotation],
    }


def rotation_graph_from_json(data: dict) -> RotationGraph:
    if not isinstance(data, dict):
        raise ValueError("rotation graph JSON must be an object")
    try:
        return RotationGraph(
            int(data["vertices"]),
            tuple((a, b) for a, b in data["edges"]),
            tuple(tuple(cycle) for cycle in data["rotation"]),
        )
    except KeyError as missing:
        raise ValueError(f"rotation graph JSON missing key {missing}") from None


def load_surface_graph(path) -> SurfaceGraph:
    return surface_graph_from_json(json.loads(Path(path).read_text()))


def save_surface_graph(path, G: SurfaceGraph) -> None:
    Path(path).write_text(compact_json(surface_graph_to_json(G)))


def load_rotation_graph(path) -> RotationGraph:
    return rotation_graph_from_json(json.loads(Path(path).read_text()))


def save_rotation_graph(path, G: RotationGraph) -> None:
    Path(path).write_text(compact_json(rotation_graph_to_json(G)))
