"""Brute-force minimum-distance oracle for CSS codes.

The distance is ``d = min(dx, dz)`` with ``dz`` the minimum weight of a
vector in the kernel of ``hx`` outside the row space of ``hz`` and ``dx``
the mirror image.  The search scans Hamming weights in ascending order, so
it terminates at the first weight class holding a logical operator; inputs
are guarded at ``n <= 24`` qubits.

The inner enumeration runs on a compiled kernel when the extension module
built from ``_distance_core.pyx`` is available, otherwise on the
pure-Python twin in ``_distance_py``; ``BACKEND`` records the choice.
:func:`distance_exhaustive` is a deliberately independent full-enumeration
implementation kept for cross-checking the oracle on small codes.
"""

from __future__ import annotations

import numpy as np

from . import gf2

try:
    from ._distance_core import min_logical_weight as _default_kernel

    BACKEND = "compiled"
except ImportError:  # extension not built; fall back to pure Python
    from ._distance_py import min_logical_weight as _default_kernel

    BACKEND = "python"

MAX_ORACLE_QUBITS = 24
MAX_EXHAUSTIVE_QUBITS = 16


class CodeTooLargeError(ValueError):
    """The code exceeds the brute-force enumeration guard."""


class NoLogicalOperatorError(ValueError):
    """The code has no logical operators (k = 0), so no distance."""


def _packed_sector(stab, excl):
    """Pack one sector's search inputs into integer bitmasks.

    The check matrix is row-reduced first so column masks fit comfortably in
    a machine word; the excluded row space is packed in reduced echelon form
    together with its pivot columns.
    """
    n = stab.shape[1]
    R, pivots = gf2.row_echelon(stab)
    R = R[: len(pivots)]
    cols = [int.from_bytes(np.packbits(R[:, j], bitorder="little").tobytes(), "little") for j in range(n)]
    E, epivots = gf2.row_echelon(excl)
    E = E[: len(epivots)]
    rows = [int.from_bytes(np.packbits(E[r], bitorder="little").tobytes(), "little") for r in range(E.shape[0])]
    return n, cols, rows, list(epivots)


def _sector_min_weight(stab, excl, kernel=None) -> int:
    kernel = kernel or _default_kernel
    n, cols, rows, pivots = _packed_sector(stab, excl)
    return int(kernel(n, cols, rows, pivots))


def distance_split(code, kernel=None) -> tuple[int, int]:
    """``(dx, dz)`` for a code with logical operators in both sectors."""
    n = code.hx.shape[1]
    if n > MAX_ORACLE_QUBITS:
        raise CodeTooLargeError(
            f"{n} qubits exceed the n <= {MAX_ORACLE_QUBITS} brute-force guard"
        )
    dz = _sector_min_weight(code.hx, code.hz, kernel)
    dx = _sector_min_weight(code.hz, code.hx, kernel)
    if (dx == 0) != (dz == 0):
        raise AssertionError("one-sided logical sector; inconsistent code")
    if dx == 0:
        raise NoLogicalOperatorError("code has no logical operators (k = 0)")
    return dx, dz


def distance_bruteforce(code, kernel=None) -> int:
    """Minimum distance ``min(dx, dz)`` by weight-ordered enumeration."""
    dx, dz = distance_split(code, kernel)
    return min(dx, dz)


def distance_exhaustive(code) -> int:
    """Independent cross-check: full enumeration of all 2^n - 1 candidates.

    Kernel membership is decided row by row (parity of each check against
    the candidate) and row-space membership by augmented-rank elimination,
    sharing no code path with the weight-ordered search.
    """
    n = code.hx.shape[1]
    if n > MAX_EXHAUSTIVE_QUBITS:
        raise CodeTooLargeError(
            f"{n} qubits exceed the n <= {MAX_EXHAUSTIVE_QUBITS} exhaustion guard"
        )
    hx_rows = [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in code.hx]
    hz_rows = [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in code.hz]

    def unpack(mask):
        return np.array([(mask >> j) & 1 for j in range(n)], dtype=np.uint8)

    best = None
    for mask in range(1, 1 << n):
        weight = mask.bit_count()
        if best is not None and weight >= best:
            continue
        in_ker_x = all((row & mask).bit_count() % 2 == 0 for row in hx_rows)
        if in_ker_x and not gf2.row_space_contains(code.hz, unpack(mask)):
            best = weight
            continue
        in_ker_z = all((row & mask).bit_count() % 2 == 0 for row in hz_rows)
        if in_ker_z and not gf2.row_space_contains(code.hx, unpack(mask)):
            best = weight
    if best is None:
        raise NoLogicalOperatorError("code has no logical operators (k = 0)")
    return best
