"""Benchmark of the distance oracle's compiled kernel against the pure fallback.

Both backends run the same weight-ordered search on identical packed inputs;
this script times them side by side on codes of increasing difficulty.  The
deep case is the [[23,1,7]] CSS code built from the binary Golay code, whose
search has to climb to weight 7 before finding a logical operator.

Run:  python3 benchmarks/bench_distance.py [--repeats N]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from hypermap_codes import _distance_py, gf2
from hypermap_codes.css import CssCode, build_canonical, params
from hypermap_codes.distance import distance_split
from hypermap_codes.hypermap import Hypermap, NotConnectedError, Permutation
from hypermap_codes.surface import rotation_to_surface, surface_code, toric_rotation_graph

try:
    from hypermap_codes import _distance_core

    COMPILED = _distance_core.min_logical_weight
except ImportError:
    COMPILED = None

# Binary Golay code generator polynomial, coefficients from x^0 to x^11.
GOLAY_G = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]


def golay_css() -> CssCode:
    """[[23,1,7]] CSS code: both sectors generated by the Golay code's dual."""
    G = np.zeros((12, 23), dtype=np.uint8)
    for r in range(12):
        G[r, r : r + 12] = GOLAY_G
    H = gf2.kernel_basis(G)  # 11 x 23, spans the dual, which the code contains
    return CssCode(H, H)


def random_hypermap_code(seed: int, lo: int, hi: int) -> CssCode:
    rng = random.Random(seed)
    while True:
        n = rng.randint(24, 30)
        image = list(range(1, n + 1))
        rng.shuffle(image)
        sigma = Permutation(tuple(image))
        rng.shuffle(image)
        tau = Permutation(tuple(image))
        try:
            H = Hypermap(sigma, tau)
        except NotConnectedError:
            continue
        code = build_canonical(H)
        if lo <= code.n <= hi and params(code).k >= 1:
            return code


def cases():
    yield "toric 2x2", surface_code(rotation_to_surface(toric_rotation_graph(2, 2)))
    yield "toric 3x3", surface_code(rotation_to_surface(toric_rotation_graph(3, 3)))
    yield "random hypermap", random_hypermap_code(2024, 18, 22)
    yield "golay [[23,1,7]]", golay_css()


def time_backend(code, kernel, repeats: int) -> tuple[float, tuple[int, int]]:
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = distance_split(code, kernel=kernel)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3, help="timing repeats per case")
    args = parser.parse_args()

    backends = []
    if COMPILED is not None:
        backends.append(("compiled", COMPILED))
    else:
        print("note: compiled kernel not built; timing the fallback only\n")
    backends.append(("python", _distance_py.min_logical_weight))

    header = f"{'code':<20} {'n':>3} {'k':>2} {'d':>2}"
    for name, _ in backends:
        header += f" {name + ' [s]':>14}"
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))

    for label, code in cases():
        p = params(code)
        times = []
        dist = None
        for _, kernel in backends:
            seconds, (dx, dz) = time_backend(code, kernel, args.repeats)
            times.append(seconds)
            if dist is None:
                dist = min(dx, dz)
            else:
                assert dist == min(dx, dz), "backends disagree"
        row = f"{label:<20} {p.n:>3} {p.k:>2} {dist:>2}"
        for seconds in times:
            row += f" {seconds:>14.6f}"
        if len(times) == 2:
            row += f" {times[1] / times[0]:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
