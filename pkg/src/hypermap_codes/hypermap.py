"""Hypermaps encoded as a pair of permutations acting on darts.

A hypermap is the embedding of a hypergraph's bipartite representation on a
closed surface, stored purely as ``(sigma, tau)`` acting on darts labeled
``1..n``.  Orbits of ``sigma`` are the vertices, orbits of ``tau`` the
hyperedges, and orbits of ``sigma * tau^-1`` the faces of the embedding.
Vertices, hyperedges and faces are identified by their 0-based position in
the orbit partition, which orders orbits by smallest contained dart; dart
labels themselves are always 1-based.

Construction validates everything: permutations must be bijections and the
group generated by ``sigma`` and ``tau`` must act transitively on the darts
(a connected hypermap).  Invalid data cannot be represented.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ._jsonfmt import compact_json


class NotBijectiveError(ValueError):
    """The given images do not form a permutation."""


class NotConnectedError(ValueError):
    """The permutation pair does not act transitively on the darts."""


class NonIntegerGenusError(ValueError):
    """The orbit counts are inconsistent with a closed orientable surface."""


class DuplicateHyperedgeError(ValueError):
    """Two chosen special darts lie on the same hyperedge."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1..n}`` stored by its image tuple."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        object.__setattr__(self, "image", image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise NotBijectiveError(f"images {image} are not a bijection on 1..{len(image)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Permutation":
        """Build from disjoint cycles of 1-based labels; fixed points may be omitted."""
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = [int(x) for x in cycle]
            for x in cycle:
                if not 1 <= x <= n:
                    raise ValueError(f"cycle entry {x} out of range 1..{n}")
                if x in seen:
                    raise NotBijectiveError(f"label {x} appears in two cycles")
                seen.add(x)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                image[a - 1] = b
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, dart: int) -> int:
        if not 1 <= dart <= self.n:
            raise ValueError(f"dart {dart} out of range 1..{self.n}")
        return self.image[dart - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for d, img in enumerate(self.image, start=1):
            inv[img - 1] = d
        return Permutation(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(p * q)(d) = p(q(d))``."""
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.image[other.image[d] - 1] for d in range(self.n)))

    def orbits(self) -> "OrbitPartition":
        seen = [False] * self.n
        orbits: list[tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            d = self(start)
            while d != start:
                cycle.append(d)
                seen[d - 1] = True
                d = self(d)
            orbits.append(tuple(cycle))
        return OrbitPartition(tuple(orbits))

    def cycle_notation(self) -> str:
        parts = [f"({' '.join(map(str, orb))})" for orb in self.orbits().orbits if len(orb) > 1]
        return "".join(parts) if parts else "id"


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits of a permutation, each cycle starting at its smallest dart.

    Orbits are ordered by smallest contained dart, which fixes the
    vertex/hyperedge/face numbering used by every matrix in the package.
    """

    orbits: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        index: dict[int, int] = {}
        for k, orbit in enumerate(self.orbits):
            for d in orbit:
                index[d] = k
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.orbits)

    def orbit_index(self, dart: int) -> int:
        """0-based position of the orbit containing ``dart``."""
        try:
            return self._index[dart]
        except KeyError:
            raise ValueError(f"dart {dart} not in partition") from None


@dataclass(frozen=True)
class SpecialDartSet:
    """One designated dart per hyperedge, listed in hyperedge order."""

    darts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "darts", tuple(int(d) for d in self.darts))

    def __iter__(self):
        return iter(self.darts)

    def __len__(self) -> int:
        return len(self.darts)

    def __contains__(self, dart: int) -> bool:
        return dart in self.darts


@dataclass(frozen=True)
class Hypermap:
    sigma: Permutation
    tau: Permutation

    def __post_init__(self):
        if self.sigma.n != self.tau.n:
            raise ValueError(
                f"sigma acts on {self.sigma.n} darts but tau on {self.tau.n}"
            )
        n = self.sigma.n
        if n == 0:
            raise NotConnectedError("a hypermap needs at least one dart")
        # Union-find over the generator images checks transitivity.
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for d in range(1, n + 1):
            for image in (self.sigma(d), self.tau(d)):
                a, b = find(d - 1), find(image - 1)
                if a != b:
                    parent[a] = b
        roots = {find(x) for x in range(n)}
        if len(roots) != 1:
            raise NotConnectedError(
                f"darts split into {len(roots)} components under sigma and tau"
            )

    @classmethod
    def from_cycles(cls, n: int, sigma_cycles, tau_cycles) -> "Hypermap":
        return cls(
            Permutation.from_cycles(sigma_cycles, n),
            Permutation.from_cycles(tau_cycles, n),
        )

    @property
    def n_darts(self) -> int:
        return self.sigma.n

    def face_permutation(self) -> Permutation:
        """The permutation ``sigma * tau^-1`` whose orbits are the faces."""
        return self.sigma * self.tau.inverse()

    def vertices(self) -> OrbitPartition:
        return self.sigma.orbits()

    def hyperedges(self) -> OrbitPartition:
        return self.tau.orbits()

    def faces(self) -> OrbitPartition:
        return self.face_permutation().orbits()

    def counts(self) -> tuple[int, int, int, int]:
        """``(|V|, |E|, |F|, |W|)``: vertex, hyperedge, face, and dart counts."""
        return (
            len(self.vertices()),
            len(self.hyperedges()),
            len(self.faces()),
            self.n_darts,
        )

    def genus(self) -> int:
        v, e, f, w = self.counts()
        chi = v + e + f - w
        if (2 - chi) % 2 != 0:
            raise NonIntegerGenusError(f"Euler characteristic {chi} gives odd 2-2g")
        g = (2 - chi) // 2
        if g < 0:
            raise NonIntegerGenusError(f"Euler characteristic {chi} gives genus {g} < 0")
        return g

    def incident_vertex(self, dart: int) -> int:
        """0-based index of the vertex orbit on which ``dart`` is incident."""
        if not 1 <= dart <= self.n_darts:
            raise ValueError(f"dart {dart} out of range 1..{self.n_darts}")
        return self.vertices().orbit_index(dart)

    def incident_edge(self, dart: int) -> int:
        """0-based index of the hyperedge orbit on which ``dart`` is incident."""
        if not 1 <= dart <= self.n_darts:
            raise ValueError(f"dart {dart} out of range 1..{self.n_darts}")
        return self.hyperedges().orbit_index(dart)


def check_special_darts(H: Hypermap, S: SpecialDartSet) -> None:
    """Require exactly one dart of ``S`` on every hyperedge of ``H``."""
    edges = H.hyperedges()
    if len(S.darts) != len(edges):
        raise ValueError(f"{len(S.darts)} special darts for {len(edges)} hyperedges")
    claimed: dict[int, int] = {}
    for d in S.darts:
        if not 1 <= d <= H.n_darts:
            raise ValueError(f"special dart {d} out of range 1..{H.n_darts}")
        k = edges.orbit_index(d)
        if k in claimed:
            raise DuplicateHyperedgeError(
                f"darts {claimed[k]} and {d} lie on the same hyperedge"
            )
        claimed[k] = d


def choose_special_darts(H: Hypermap, preferred=None) -> SpecialDartSet:
    """Pick one special dart per hyperedge.

    The default is the smallest dart of each hyperedge orbit; ``preferred``
    darts override the default in their own orbits.  Two preferred darts on
    the same hyperedge raise :class:`DuplicateHyperedgeError`.
    """
    edges = H.hyperedges()
    chosen = [orbit[0] for orbit in edges.orbits]
    if preferred is not None:
        claimed: dict[int, int] = {}
        for d in preferred:
            d = int(d)
            if not 1 <= d <= H.n_darts:
                raise ValueError(f"special dart {d} out of range 1..{H.n_darts}")
            k = edges.orbit_index(d)
            if k in claimed:
                raise DuplicateHyperedgeError(
                    f"darts {claimed[k]} and {d} lie on the same hyperedge"
                )
            claimed[k] = d
            chosen[k] = d
    return SpecialDartSet(tuple(chosen))


# --- JSON file format ----------------------------------------------------------


def hypermap_to_json(H: Hypermap, special: SpecialDartSet | None = None) -> dict:
    """JSON object for a hypermap; singleton cycles are omitted."""
    data = {
        "darts": H.n_darts,
        "sigma": [list(orb) for orb in H.sigma.orbits().orbits if len(orb) > 1],
        "tau": [list(orb) for orb in H.tau.orbits().orbits if len(orb) > 1],
    }
    if special is not None:
        data["special"] = list(special.darts)
    return data


def hypermap_from_json(data: dict) -> tuple[Hypermap, SpecialDartSet | None]:
    if not isinstance(data, dict):
        raise ValueError("hypermap JSON must be an object")
    try:
        n = int(data["darts"])
        sigma_cycles = data["sigma"]
        tau_cycles = data["tau"]
    except KeyError as missing:
        raise ValueError(f"hypermap JSON missing key {missing}") from None
    H = Hypermap.from_cycles(n, sigma_cycles, tau_cycles)
    special = None
    if "special" in data and data["special"] is not None:
        special = choose_special_darts(H, preferred=data["special"])
    return H, special


def load_hypermap(path) -> tuple[Hypermap, SpecialDartSet | None]:
    return hypermap_from_json(json.loads(Path(path).read_text()))


def save_hypermap(path, H: Hypermap, special: SpecialDartSet | None = None) -> None:
    Path(path).write_text(compact_json(hypermap_to_json(H, special)))
