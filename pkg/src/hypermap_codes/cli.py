"""Command-line interface.

Exit codes: 0 on success, 1 when a semantically valid input fails a
verification (unequal stabilizers), 2 on malformed or invalid input.
Reports are line-oriented ``key=value`` where machine-readable.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import css, gf2, surface
from .distance import distance_split
from .hypermap import Hypermap, SpecialDartSet, choose_special_darts, load_hypermap, save_hypermap


def _parse_dart_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"bad dart list {text!r}, expected comma-separated labels") from None


def _load_hypermap_and_special(path, special_flag) -> tuple[Hypermap, SpecialDartSet]:
    H, special = load_hypermap(path)
    if special_flag is not None:
        special = choose_special_darts(H, preferred=_parse_dart_list(special_flag))
    elif special is None:
        special = choose_special_darts(H)
    return H, special


def _format_darts(darts) -> str:
    return ",".join(map(str, darts))


def cmd_info(args) -> int:
    H, special = load_hypermap(args.hypermap)
    v, e, f, w = H.counts()
    print(f"V={v} E={e} F={f} W={w} genus={H.genus()}")
    if special is None:
        special = choose_special_darts(H)
    print(f"special={_format_darts(special.darts)}")
    return 0


def cmd_build(args) -> int:
    H, special = _load_hypermap_and_special(args.hypermap, args.special)
    code = css.build_canonical(H, special)
    if args.basis_change is not None:
        T = gf2.read_matrix(args.basis_change)
        code = css.transform(code, T)
    if args.reduce:
        code = css.reduced(code)
    p = css.params(code, with_distance=args.distance)
    line = f"n={p.n} k={p.k}"
    if args.distance:
        if p.d is None:
            line += " d=none"
        else:
            line += f" d={p.d} dx={p.dx} dz={p.dz}"
    print(line)
    if args.out:
        css.write_stabilizer(args.out, code)
        print(f"wrote={args.out}")
    else:
        sys.stdout.write(css.format_stabilizer(code))
    return 0


def cmd_to_surface(args) -> int:
    H, special = _load_hypermap_and_special(args.hypermap, args.special)
    if args.special is None:
        print(f"special={_format_darts(special.darts)}")
    G = surface.hypermap_to_surface(H, special)
    print(f"vertices={G.vertex_count} edges={len(G.edges)} faces={len(G.faces)}")
    surface.save_surface_graph(args.out_graph, G)
    print(f"wrote={args.out_graph}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(surface.surface_graph_dot(G))
        print(f"wrote={args.dot}")
    if args.intermediate_dot:
        inter = surface.intermediate_surface(H, special)
        with open(args.intermediate_dot, "w") as fh:
            fh.write(surface.surface_graph_dot(inter))
        print(f"wrote={args.intermediate_dot}")
    return 0


def cmd_from_graph(args) -> int:
    G = surface.load_rotation_graph(args.graph)
    H, special = surface.graph_to_hypermap(G)
    v, e, f, w = H.counts()
    print(f"V={v} E={e} F={f} W={w} genus={H.genus()}")
    print(f"special={_format_darts(special.darts)}")
    save_hypermap(args.out, H, special)
    print(f"wrote={args.out}")
    return 0


def cmd_verify(args) -> int:
    H, special = _load_hypermap_and_special(args.hypermap, args.special)
    report = surface.verify_equivalence(H, special)
    print(f"equal={'true' if report.equal else 'false'}")
    hp, sp = report.hypermap_params, report.surface_params
    print(f"hypermap_code n={hp.n} k={hp.k}")
    print(f"surface_code n={sp.n} k={sp.k}")
    if report.equal:
        return 0
    _print_row_space_diff(report.hypermap_code, report.surface_code)
    return 1


def _print_row_space_diff(a: css.CssCode, b: css.CssCode) -> None:
    for sector, ma, mb in (("Hx", a.hx, b.hx), ("Hz", a.hz, b.hz)):
        for name, src, other in (("hypermap", ma, mb), ("surface", mb, ma)):
            for row in src:
                if not gf2.row_space_contains(other, row):
                    bits = " ".join(map(str, row))
                    print(f"diff {sector} {name}-only-row: {bits}")


def cmd_decompose(args) -> int:
    T = gf2.read_matrix(args.matrix)
    circuit = css.cnot_circuit(T)
    for gate in circuit.gates:
        print(f"CNOT {gate.control} {gate.target}")
    print(f"gates={len(circuit)} bound={circuit.n * circuit.n}")
    return 0


def cmd_distance(args) -> int:
    code = css.read_stabilizer(args.stabilizer)
    dx, dz = distance_split(code)
    print(f"d={min(dx, dz)} dx={dx} dz={dz}")
    return 0


def cmd_compare(args) -> int:
    a = css.read_stabilizer(args.stabilizer_a)
    b = css.read_stabilizer(args.stabilizer_b)
    equal = css.stabilizer_equal(a, b)
    print(f"equal={'true' if equal else 'false'}")
    if equal:
        return 0
    _print_row_space_diff(a, b)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypermap-codes",
        description="Hypermap-homology CSS codes and their surface-code equivalents.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="orbit counts, genus and default special darts")
    p.add_argument("hypermap", help="hypermap JSON file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("build", help="build the stabilizer matrices of a hypermap code")
    p.add_argument("hypermap", help="hypermap JSON file")
    p.add_argument("--special", help="comma-separated special darts, one per hyperedge")
    p.add_argument("--basis-change", help="matrix file with an invertible basis change")
    p.add_argument("--reduce", action="store_true", help="drop dependent generator rows")
    p.add_argument("--distance", action="store_true", help="run the brute-force distance oracle")
    p.add_argument("--out", help="stabilizer output file (stdout when omitted)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("to-surface", help="convert a hypermap to its equivalent surface graph")
    p.add_argument("hypermap", help="hypermap JSON file")
    p.add_argument("--special", help="comma-separated special darts")
    p.add_argument("--out-graph", required=True, help="surface graph JSON output")
    p.add_argument("--dot", help="DOT output for the surface graph")
    p.add_argument(
        "--intermediate-dot",
        help="DOT output for the pre-merge graph (special edges still present)",
    )
    p.set_defaults(func=cmd_to_surface)

    p = sub.add_parser("from-graph", help="reinterpret an embedded graph as a hypermap")
    p.add_argument("graph", help="rotation graph JSON file")
    p.add_argument("--out", required=True, help="hypermap JSON output")
    p.set_defaults(func=cmd_from_graph)

    p = sub.add_parser("verify", help="check hypermap code == surface code of its graph")
    p.add_argument("hypermap", help="hypermap JSON file")
    p.add_argument("--special", help="comma-separated special darts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="CNOT circuit of an invertible matrix")
    p.add_argument("matrix", help="matrix file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("distance", help="brute-force distance of a stabilizer file")
    p.add_argument("stabilizer", help="stabilizer block file")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("compare", help="row-space equality of two stabilizer files")
    p.add_argument("stabilizer_a")
    p.add_argument("stabilizer_b")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
