"""Shared test helpers: seeded random generators for property-style tests."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from hypermap_codes import (
    Hypermap,
    NotConnectedError,
    Permutation,
    RotationGraph,
    build_canonical,
    choose_special_darts,
    params,
)
from hypermap_codes import gf2

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def torus_hypermap():
    """The 8-dart torus worked example with special darts (3, 7)."""
    H = Hypermap.from_cycles(8, [[1, 8, 3, 6], [2, 5, 4, 7]], [[1, 2, 3, 4], [5, 6, 7, 8]])
    return H, choose_special_darts(H, preferred=[3, 7])


def random_permutation(rng, n):
    image = list(range(1, n + 1))
    rng.shuffle(image)
    return Permutation(tuple(image))


def random_hypermap(rng, min_darts=2, max_darts=20):
    """A random connected hypermap (retry until the pair acts transitively)."""
    while True:
        n = rng.randint(min_darts, max_darts)
        try:
            return Hypermap(random_permutation(rng, n), random_permutation(rng, n))
        except NotConnectedError:
            continue


def random_invertible(rng, n):
    while True:
        M = np.array([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)], dtype=np.uint8)
        if gf2.rank(M) == n:
            return M


def random_css_code(rng, min_darts=2, max_darts=20, max_qubits=None, require_logical=False):
    """Canonical code of a random hypermap, optionally filtered on n and k."""
    while True:
        H = random_hypermap(rng, min_darts, max_darts)
        code = build_canonical(H)
        if code.n == 0:
            continue
        if max_qubits is not None and code.n > max_qubits:
            continue
        if require_logical and params(code).k == 0:
            continue
        return code


def random_rotation_graph(rng, max_edges=8):
    """A random connected multigraph (loops allowed) with a random rotation."""
    n_vertices = rng.randint(1, 4)
    edges = [(rng.randint(1, v - 1), v) for v in range(2, n_vertices + 1)]
    while len(edges) < rng.randint(max(1, len(edges)), max_edges):
        edges.append((rng.randint(1, n_vertices), rng.randint(1, n_vertices)))
    at_vertex = {v: [] for v in range(1, n_vertices + 1)}
    for j, (a, b) in enumerate(edges, start=1):
        at_vertex[a].append(2 * j - 1)
        at_vertex[b].append(2 * j)
    rotation = []
    for v in range(1, n_vertices + 1):
        ends = at_vertex[v]
        rng.shuffle(ends)
        rotation.append(tuple(ends))
    return RotationGraph(n_vertices, tuple(edges), tuple(rotation))
