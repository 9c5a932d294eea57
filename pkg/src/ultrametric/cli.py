"""Command-line front end.

Exit status is 0 on success, 1 when the input cannot be parsed or is not an
ultrametric, and 2 for usage errors (bad options, unknown point labels,
unreadable files).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .classify import classify
from .core import UltrametricSpace, format_weight, multispectrum, set_distance, spectrum
from .errors import UltrametricError
from .generate import GeneratorSpec, generate_space
from .hausdorff import hausdorff, hausdorff_oracle, hausdorff_via_path
from .io import export_tree_dot, load_space, serialize_space, tree_to_dict
from .msp import (
    balls_from_path,
    kruskal_mst,
    msp_greedy,
    msp_tree_guided,
)
from .tree import ballean, build_representing_tree


class UsageError(Exception):
    pass


def _labels(space: UltrametricSpace, text: str) -> frozenset[int]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names:
        raise UsageError("empty point list")
    try:
        return space.point_set(names)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _emit(args, text: str, data) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _ball_text(space, ball) -> str:
    names = ",".join(space.labels[p] for p in sorted(ball.points))
    return f"{format_weight(ball.diameter)}\t{{{names}}}"


def cmd_validate(args) -> None:
    space = args.load()
    sp = spectrum(space)
    _emit(args, f"ultrametric: OK (n={space.n}, |Sp|={len(sp)})",
          {"valid": True, "n": space.n, "spectrum_size": len(sp)})


def cmd_spectrum(args) -> None:
    space = args.load()
    if args.multi:
        ms = multispectrum(space)
        _emit(args, "\n".join(f"{format_weight(w)}\t{k}" for w, k in ms.items()),
              {format_weight(w): k for w, k in ms.items()})
    else:
        sp = [format_weight(w) for w in spectrum(space)]
        _emit(args, " ".join(sp), sp)


def cmd_tree(args) -> None:
    tree = build_representing_tree(args.load())
    if args.format == "json":
        print(json.dumps(tree_to_dict(tree), indent=2))
    else:
        sys.stdout.write(export_tree_dot(tree))


def cmd_balls(args) -> None:
    space = args.load()
    if args.from_path is not None:
        balls = balls_from_path(msp_greedy(space, _single(space, args.from_path)))
    else:
        balls = ballean(build_representing_tree(space))
    balls = sorted(balls, key=lambda b: (-b.diameter, min(b.points), -len(b.points)))
    _emit(args, "\n".join(_ball_text(space, b) for b in balls),
          [{"diameter": format_weight(b.diameter), "points": [space.labels[p] for p in sorted(b.points)]}
           for b in balls])


def _single(space, name: str) -> int:
    pts = _labels(space, name)
    if len(pts) != 1:
        raise UsageError(f"expected one point label, got {name!r}")
    return next(iter(pts))


def cmd_msp(args) -> None:
    space = args.load()
    start = _single(space, args.start) if args.start else 0
    if args.algorithm == "tree":
        path = msp_tree_guided(space, build_representing_tree(space), start)
    else:
        path = msp_greedy(space, start)
    weights = [format_weight(w) for w in path.spectrum]
    text = "\n".join([
        " ".join(path.labels()),
        " ".join(weights),
        f"total {format_weight(path.total_weight)}",
    ])
    _emit(args, text, {"order": path.labels(), "spectrum": weights,
                       "total": format_weight(path.total_weight)})


def cmd_mst(args) -> None:
    space = args.load()
    mst = kruskal_mst(space)
    rows = [(space.labels[u], space.labels[v], format_weight(w)) for u, v, w in mst.edges]
    text = "\n".join("\t".join(r) for r in rows) + f"\ntotal {format_weight(mst.total_weight)}"
    _emit(args, text.lstrip("\n"), {"edges": [list(r) for r in rows],
                                    "total": format_weight(mst.total_weight)})


def cmd_classify(args) -> None:
    report = classify(args.load())
    data = report.as_dict()
    _emit(args, "\n".join(f"{k}={str(v).lower()}" for k, v in data.items()), data)


def cmd_hausdorff(args) -> None:
    space = args.load()
    a, b = _labels(space, args.a), _labels(space, args.b)
    if args.method == "oracle":
        value = hausdorff_oracle(space, a, b)
    elif args.method == "path":
        value = hausdorff_via_path(space, msp_greedy(space, 0), a, b)
    else:
        value = hausdorff(space, build_representing_tree(space), a, b)
    _emit(args, format_weight(value), {"hausdorff": format_weight(value)})


def cmd_dist(args) -> None:
    space = args.load()
    value = set_distance(space, _labels(space, args.a), _labels(space, args.b))
    _emit(args, format_weight(value), {"distance": format_weight(value)})


def cmd_gen(args) -> None:
    pool: tuple = ()
    if args.labels:
        pool = tuple(t.strip() for t in args.labels.split(",") if t.strip())
    spec = GeneratorSpec(n=args.n, label_pool=pool, branching=args.branching, seed=args.seed)
    sys.stdout.write(serialize_space(generate_space(spec), args.format))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ultrametric", description="Finite ultrametric space toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, formats=("text", "json"), with_file=True):
        p = sub.add_parser(name, help=help_text)
        if with_file:
            p.add_argument("file", help="space file (matrix text or JSON)")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the ultrametric axioms")
    p = add("spectrum", cmd_spectrum, "print the spectrum")
    p.add_argument("--multi", action="store_true", help="pair counts per distance")
    add("tree", cmd_tree, "representing tree as DOT or JSON", formats=("dot", "json"))
    p = add("balls", cmd_balls, "list every closed ball")
    p.add_argument("--from-path", metavar="START", help="read balls off the greedy path from START")
    p = add("msp", cmd_msp, "minimum spanning path")
    p.add_argument("--start", help="label of the first point (default: first point)")
    p.add_argument("--algorithm", choices=("greedy", "tree"), default="greedy")
    add("mst", cmd_mst, "Kruskal minimum spanning tree")
    add("classify", cmd_classify, "special-class report")
    p = add("hausdorff", cmd_hausdorff, "Hausdorff distance between two point sets")
    p.add_argument("--a", required=True, help="comma-separated labels")
    p.add_argument("--b", required=True, help="comma-separated labels")
    p.add_argument("--method", choices=("tree", "oracle", "path"), default="tree")
    p = add("dist", cmd_dist, "distance between two point sets")
    p.add_argument("--a", required=True, help="comma-separated labels")
    p.add_argument("--b", required=True, help="comma-separated labels")
    p = add("gen", cmd_gen, "random space from a seeded tree", formats=("matrix", "json"), with_file=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--labels", help="comma-separated label pool, e.g. 1,2,3.5")
    p.add_argument("--branching", type=int, default=3)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    def load():
        try:
            return load_space(args.file)
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None

    args.load = load
    try:
        args.func(args)
    except UsageError as exc:
        print(f"ultrametric {args.command}: {exc}", file=sys.stderr)
        return 2
    except UltrametricError as exc:
        print(f"ultrametric {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
