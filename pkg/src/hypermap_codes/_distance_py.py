"""Pure-Python weight-ordered logical-operator search.

Fallback twin of the compiled kernel in ``_distance_core``; both expose the
same ``min_logical_weight`` signature and return identical values.  Vectors
are packed into Python ints, bit ``j`` for qubit column ``j``.
"""

from __future__ import annotations

from itertools import combinations


def min_logical_weight(n, stab_cols, excl_rows, excl_pivots):
    """Minimum weight of ``v != 0`` with ``H v = 0`` and ``v`` outside a row space.

    Args:
        n: number of qubit columns.
        stab_cols: per-column bitmasks of the check matrix ``H`` (column ``j``
            packed over the matrix rows).
        excl_rows: reduced-echelon rows of the excluded row space, packed
            over the ``n`` columns.
        excl_pivots: pivot column of each row in ``excl_rows``.

    Returns:
        The minimum weight, or 0 when no such vector exists.
    """
    for w in range(1, n + 1):
        for combo in combinations(range(n), w):
            syndrome = 0
            for j in combo:
                syndrome ^= stab_cols[j]
            if syndrome:
                continue
            v = 0
            for j in combo:
                v |= 1 << j
            for row, p in zip(excl_rows, excl_pivots):
                if (v >> p) & 1:
                    v ^= row
            if v:
                return w
    return 0
