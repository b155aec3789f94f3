"""CSS stabilizer codes built from hypermap boundary pairs.

A :class:`CssCode` is the pair of generator matrices ``(hx, hz)`` with
``hx @ hz^t = 0``; rows are generators, columns are qubits.  Dependent rows
are kept, since the row spaces are what define the code; :func:`reduced`
drops them for display.  The canonical code of a hypermap places one qubit
on each nonspecial dart; any invertible basis change of the underlying
quotient space is realized on the code by a CNOT circuit obtained from the
elementary-factor decomposition of the change matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import gf2
from .chain import apply_basis_change, boundary_pair
from .hypermap import Hypermap, SpecialDartSet, choose_special_darts


@dataclass(frozen=True)
class CssCode:
    hx: np.ndarray
    hz: np.ndarray

    def __post_init__(self):
        hx = gf2.as_matrix(self.hx).copy()
        hz = gf2.as_matrix(self.hz).copy()
        if hx.shape[1] != hz.shape[1]:
            raise ValueError(
                f"hx has {hx.shape[1]} columns but hz has {hz.shape[1]}"
            )
        if np.any((hx @ hz.T) % 2):
            raise ValueError("hx and hz are not orthogonal over GF(2)")
        hx.setflags(write=False)
        hz.setflags(write=False)
        object.__setattr__(self, "hx", hx)
        object.__setattr__(self, "hz", hz)

    @property
    def n(self) -> int:
        return self.hx.shape[1]


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int | None = None
    dx: int | None = None
    dz: int | None = None


@dataclass(frozen=True)
class CnotGate:
    """CNOT acting on 1-based qubit labels, ``control != target``."""

    control: int
    target: int

    def __post_init__(self):
        if self.control < 1 or self.target < 1:
            raise ValueError("qubit labels are 1-based")
        if self.control == self.target:
            raise ValueError("control and target must differ")


@dataclass(frozen=True)
class CnotCircuit:
    gates: tuple[CnotGate, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if g.control > self.n or g.target > self.n:
                raise ValueError(f"gate {g} exceeds {self.n} qubits")
        if len(self.gates) > self.n * self.n:
            raise ValueError(f"{len(self.gates)} gates exceed the n^2 bound")

    def __len__(self) -> int:
        return len(self.gates)


def build_canonical(H: Hypermap, S: SpecialDartSet | None = None) -> CssCode:
    """Canonical code of a hypermap: qubits on nonspecial darts.

    With ``S`` omitted the default special darts (smallest per hyperedge)
    are used.  ``hx`` is the vertex boundary matrix and ``hz`` rows are the
    face boundaries; the code length is ``|W| - |E|``.
    """
    if S is None:
        S = choose_special_darts(H)
    bp = boundary_pair(H, S)
    return CssCode(bp.p1, bp.p2)


def reduced(code: CssCode) -> CssCode:
    """Row-reduce both sectors and drop zero rows (display form)."""

    def reduce_one(M):
        R, pivots = gf2.row_echelon(M)
        return R[: len(pivots)]

    return CssCode(reduce_one(code.hx), reduce_one(code.hz))


def params(code: CssCode, with_distance: bool = False) -> CodeParams:
    """Code parameters; ``k = n - rank(hx) - rank(hz)``.

    With ``with_distance`` the brute-force oracle fills ``d``/``dx``/``dz``;
    they stay ``None`` for codes without logical operators (``k = 0``).
    """
    n = code.n
    k = n - gf2.rank(code.hx) - gf2.rank(code.hz)
    if not with_distance or k == 0:
        return CodeParams(n=n, k=k)
    from .distance import distance_split

    dx, dz = distance_split(code)
    return CodeParams(n=n, k=k, d=min(dx, dz), dx=dx, dz=dz)


def cnot_circuit(T) -> CnotCircuit:
    """CNOT realization of a basis change matrix.

    Gate ``l`` is ``(control i_l, target j_l)`` where the elementary factors
    of ``T`` multiply out to ``T`` in gate order.
    """
    T = gf2.as_matrix(T)
    factors = gf2.decompose_elementary(T)
    return CnotCircuit(tuple(CnotGate(f.i, f.j) for f in factors), T.shape[0])


def apply_cnot(code: CssCode, gate: CnotGate) -> CssCode:
    """Column action of one CNOT: control into target on hx, target into control on hz."""
    if gate.control > code.n or gate.target > code.n:
        raise ValueError(f"gate {gate} exceeds {code.n} qubits")
    c, t = gate.control - 1, gate.target - 1
    hx = np.array(code.hx)
    hz = np.array(code.hz)
    hx[:, t] ^= hx[:, c]
    hz[:, c] ^= hz[:, t]
    return CssCode(hx, hz)


def transform(code: CssCode, T) -> CssCode:
    """Apply the CNOT circuit of ``T`` gate by gate.

    The result equals rebuilding the code from the basis-changed boundary
    pair; both routes are exercised by the tests.
    """
    circuit = cnot_circuit(T)
    if circuit.n != code.n:
        raise ValueError(f"basis change acts on {circuit.n} qubits, code has {code.n}")
    for gate in circuit.gates:
        code = apply_cnot(code, gate)
    return code


def _same_row_space(A, B) -> bool:
    ra, rb = gf2.rank(A), gf2.rank(B)
    return ra == rb and gf2.rank(np.vstack([A, B])) == ra


def stabilizer_equal(a: CssCode, b: CssCode) -> bool:
    """True iff both sectors span the same row spaces."""
    if a.n != b.n:
        raise ValueError(f"codes act on {a.n} and {b.n} qubits")
    return _same_row_space(a.hx, b.hx) and _same_row_space(a.hz, b.hz)


def code_from_boundary_change(H: Hypermap, S: SpecialDartSet, T) -> CssCode:
    """Noncanonical code via the boundary-pair route (independent of CNOTs)."""
    bp = apply_basis_change(boundary_pair(H, S), T)
    return CssCode(bp.p1, bp.p2)


# --- stabilizer block file format ---------------------------------------------


def format_stabilizer(code: CssCode) -> str:
    return "Hx\n" + gf2.format_matrix(code.hx) + "Hz\n" + gf2.format_matrix(code.hz)


def parse_stabilizer(text: str) -> CssCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    blocks: dict[str, list[str]] = {}
    current: list[str] | None = None
    for ln in lines:
        if ln in ("Hx", "Hz"):
            if ln in blocks:
                raise ValueError(f"duplicate {ln} section")
            current = blocks.setdefault(ln, [])
        elif current is None:
            raise ValueError(f"unexpected line {ln!r} before Hx/Hz section")
        else:
            current.append(ln)
    for name in ("Hx", "Hz"):
        if name not in blocks:
            raise ValueError(f"missing {name} section")
    hx = gf2.parse_matrix("\n".join(blocks["Hx"]))
    hz = gf2.parse_matrix("\n".join(blocks["Hz"]))
    return CssCode(hx, hz)


def read_stabilizer(path) -> CssCode:
    return parse_stabilizer(Path(path).read_text())


def write_stabilizer(path, code: CssCode) -> None:
    Path(path).write_text(format_stabilizer(code))
