"""Command-line interface.

Verbs: group (structure info), spectrum (eigenvalue clusters at a simplex
point), embed (mesh export), minimize, curve (CSV samples along an
equal-length curve), sweep (CSV over a barycentric grid), verify (named
check suites as JSON).  Numeric output uses 15 significant digits.
"""

import argparse
import csv
import json
import sys

import numpy as np

from .coxeter import BUILTIN_NAMES, build_group, cayley_graph
from .mesh import build_cayley_mesh, cayley_faces, export_obj, export_off
from .randwalk import build_operator, simplex_point, uniform_point
from .solids import curve_point, minimize_lambda1, sweep_lambda1
from .spectral import (
    check_faithful,
    edge_class_lengths,
    lambda1_cluster,
    spectral_representation,
    spectrum_clusters,
)
from .verify import SUITE_NAMES, run_suite


def _fmt(x):
    return f"{x:.15g}"


def _parse_point(args):
    if args.point is not None:
        weights = np.array([float(t) for t in args.point.split(",")])
    elif args.x is not None or args.y is not None or args.z is not None:
        if None in (args.x, args.y, args.z):
            raise SystemExit("either give all of --x/--y/--z or none")
        weights = np.array([args.x, args.y, args.z])
    else:
        return None
    return simplex_point(weights)


def _add_group_arg(parser):
    parser.add_argument("--group", choices=BUILTIN_NAMES, default="H3")


def _add_point_args(parser):
    parser.add_argument("--point", help="comma-separated class weights x,y,z")
    parser.add_argument("--x", type=float)
    parser.add_argument("--y", type=float)
    parser.add_argument("--z", type=float)


def cmd_group(args):
    group = build_group(args.group)
    graph = cayley_graph(group)
    census = {}
    for f in cayley_faces(graph):
        census[len(f)] = census.get(len(f), 0) + 1
    print(f"group {args.group}")
    print(f"order {group.order}")
    print(f"edges {len(graph.edges)}")
    print(f"edge classes {graph.n_classes}")
    faces = sum(census.values())
    print("faces", " ".join(f"{size}-gon:{census[size]}" for size in sorted(census)))
    print(f"euler {group.order - len(graph.edges) + faces}")
    return 0


def cmd_spectrum(args):
    group = build_group(args.group)
    graph = cayley_graph(group)
    x = _parse_point(args) or uniform_point(graph.n_classes)
    op = build_operator(graph, x)
    print("point", " ".join(_fmt(w) for w in x.weights))
    for c in spectrum_clusters(op):
        print(f"{_fmt(c.eigenvalue)} multiplicity {c.multiplicity}")
    return 0


def cmd_embed(args):
    group = build_group(args.group)
    graph = cayley_graph(group)
    x = _parse_point(args) or uniform_point(graph.n_classes)
    op = build_operator(graph, x)
    if args.eigenvalue == "second":
        cluster = lambda1_cluster(op)
    else:
        cluster = spectrum_clusters(op)[int(args.eigenvalue)]
    emb = spectral_representation(op, cluster)
    mesh = build_cayley_mesh(
        emb,
        graph,
        metadata={
            "group": args.group,
            "point": [float(w) for w in x.weights],
            "eigenvalue": float(cluster.eigenvalue),
            "class_lengths": edge_class_lengths(emb, graph),
        },
    )
    writer = export_off if args.format == "off" else export_obj
    nbytes = writer(mesh, args.out)
    print(f"wrote {nbytes} bytes to {args.out}")
    print("eigenvalue", _fmt(cluster.eigenvalue), "multiplicity", cluster.multiplicity)
    print("faithful", check_faithful(emb))
    print("class lengths", " ".join(_fmt(v) for v in mesh.metadata["class_lengths"]))
    return 0


def cmd_minimize(args):
    group = build_group(args.group)
    res = minimize_lambda1(group)
    print("closed form X0", " ".join(_fmt(w) for w in res.closed_form.x.weights))
    print("closed form lambda1", _fmt(res.closed_form.lam))
    print("optimized X", " ".join(_fmt(w) for w in res.optimized.x.weights))
    print("optimized lambda1", _fmt(res.optimized.lam))
    print("gradient norm", _fmt(res.closed_form.gradient_norm))
    print("equilateral", res.closed_form.equilateral)
    print("iterations", res.iterations)
    return 0


def cmd_curve(args):
    group = build_group(args.group)
    ts = np.geomspace(args.t_min, args.t_max, args.samples)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "x", "y", "z", "lambda1", "len1", "len2", "len3"])
        for t in ts:
            s = curve_point(args.curve, float(t), group)
            writer.writerow(
                [_fmt(t), *(_fmt(w) for w in s.x.weights), _fmt(s.lam),
                 *(_fmt(v) for v in s.class_lengths)]
            )
    print(f"wrote {args.samples} samples to {args.out}")
    return 0


def cmd_sweep(args):
    group = build_group(args.group)
    rows = sweep_lambda1(group, args.grid)
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "z", "lambda1", "mult", "len1", "len2", "len3"])
        for row in rows:
            writer.writerow(
                [
                    *(_fmt(w) for w in row["x"].weights),
                    _fmt(row["lambda1"]),
                    row["multiplicity"],
                    *(_fmt(v) for v in row["class_lengths"]),
                ]
            )
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_verify(args):
    report = run_suite(args.suite)
    print(json.dumps(report, indent=2))
    return 0 if report["passed"] else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="coxspec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="build a group and print its structure")
    _add_group_arg(p)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("spectrum", help="eigenvalue clusters at a simplex point")
    _add_group_arg(p)
    _add_point_args(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("embed", help="export a spectral embedding as a mesh")
    _add_group_arg(p)
    _add_point_args(p)
    p.add_argument("--eigenvalue", default="second",
                   help="'second' or a cluster index (0 = top)")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("off", "obj"), default="off")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("minimize", help="minimize the second eigenvalue over the simplex")
    _add_group_arg(p)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("curve", help="sample an equal-length curve to CSV")
    _add_group_arg(p)
    p.add_argument("--curve", choices=("C1", "C2", "C3"), required=True)
    p.add_argument("--t-min", type=float, default=0.1)
    p.add_argument("--t-max", type=float, default=10.0)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("sweep", help="grid sweep of lambda_1 to CSV")
    _add_group_arg(p)
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a named check suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
