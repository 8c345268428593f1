"""Command-line front end: ``tropcurves count|paths|render|verify``."""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd

from . import counts
from .lattice import (
    DegeneratePolygon,
    LatticePolygon,
    boundary_nonvertex_count,
    double_area,
    dual_curve_components,
    interior_count,
    interior_count_scan,
    pick_identity_holds,
)
from .paths import enumerate_paths, has_big_step, mikhalkin_multiplicity, mikhalkin_subdivisions
from .subdivisions import (
    closed_form_multiplicity,
    generate_subdivisions,
    genus,
    is_irreducible,
    subdivision_multiplicity,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


@dataclass
class PathRow:
    id: int
    points: list[list[int]]
    multiplicity: Fraction
    subdivisions: int


@dataclass
class RunReport:
    degree: int
    pipeline: str
    value: Fraction
    paths: list[PathRow] = field(default_factory=list)
    elapsed_ms: int = 0

    def to_json(self) -> str:
        # elapsed time is left out so the output is byte-stable
        doc = {
            "degree": self.degree,
            "pipeline": self.pipeline,
            "value": _exact(self.value),
            "paths": [
                {"id": r.id, "points": r.points, "multiplicity": _exact(r.multiplicity), "subdivisions": r.subdivisions}
                for r in self.paths
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def _exact(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def build_report(d: int, pipeline: str, workers: int | None = None) -> RunReport:
    t0 = time.perf_counter()
    paths = enumerate_paths(d)
    rows: list[PathRow] = []
    if pipeline == "corollary":
        value = Fraction(counts.n_via_corollary(d, workers))
        scale = comb(d - 1, 2)
        for i, p in enumerate(paths):
            if not has_big_step(p):
                continue
            n_sub = len(generate_subdivisions(p))
            rows.append(PathRow(i, _pts(p), counts.corollary_contribution(p) / scale, n_sub))
    else:
        tallies = counts.tallies(d, workers)
        value = Fraction(counts.PIPELINES[pipeline](d, workers))
        pick = {
            "ntrop": lambda t: t.irreducible_mult,
            "large_j": lambda t: t.large_j,
            "small_j": lambda t: t.small_j,
        }[pipeline]
        for i, (p, t) in enumerate(zip(paths, tallies)):
            rows.append(PathRow(i, _pts(p), Fraction(pick(t)), t.subdivisions))
    if sum((r.multiplicity for r in rows), Fraction(0)) != value:
        raise counts.ConsistencyError("per-path contributions do not add up to the total")
    if value.denominator != 1:
        raise counts.ConsistencyError(f"non-integral total {value}")
    return RunReport(d, pipeline, value, rows, int((time.perf_counter() - t0) * 1000))


def _pts(p) -> list[list[int]]:
    return [[q.x, q.y] for q in p.points]


def cross_check(d: int, workers: int | None = None) -> list[str]:
    """Disagreements between pipelines (empty list when all agree)."""
    problems = []
    n = counts.n_trop(d, workers)
    large, small = counts.e_trop_large_j(d, workers), counts.e_trop_small_j(d, workers)
    if large != comb(d - 1, 2) * n:
        problems.append(f"large_j {large} != C({d - 1},2) * ntrop = {comb(d - 1, 2) * n}")
    if large != small:
        problems.append(f"large_j {large} != small_j {small}")
    if d >= 3:
        cor = counts.n_via_corollary(d, workers)
        if cor != n:
            problems.append(f"corollary {cor} != ntrop {n}")
    return problems


# --- subcommands ------------------------------------------------------------


def cmd_count(args) -> int:
    if args.pipeline == "corollary" and args.degree < 3:
        print("error: the corollary pipeline needs degree >= 3", file=sys.stderr)
        return EXIT_USAGE
    report = build_report(args.degree, args.pipeline, args.workers)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(f"degree {report.degree}  pipeline {report.pipeline}  paths {len(report.paths)}")
        print(f"value = {_exact(report.value)}   ({report.elapsed_ms} ms)")
    if args.cross_check:
        problems = cross_check(args.degree, args.workers)
        for msg in problems:
            print(f"cross-check FAILED: {msg}", file=sys.stderr)
        if problems:
            return EXIT_FAIL
        print("cross-check ok", file=sys.stderr)
    return EXIT_OK


def cmd_paths(args) -> int:
    d = args.degree
    paths = enumerate_paths(d)
    tallies = counts.tallies(d)
    rows = [
        PathRow(i, _pts(p), Fraction(t.irreducible_mult), t.subdivisions)
        for i, (p, t) in enumerate(zip(paths, tallies))
        if not args.big_steps_only or has_big_step(p)
    ]
    total = sum(r.multiplicity for r in rows)
    if args.json:
        sys.stdout.write(RunReport(d, "paths", total, rows).to_json())
        return EXIT_OK
    print(f"{'id':>5}  {'mult':>6}  {'subdiv':>6}  points")
    for r in rows:
        pts = " ".join(f"({x},{y})" for x, y in r.points)
        print(f"{r.id:>5}  {_exact(r.multiplicity):>6}  {r.subdivisions:>6}  {pts}")
    print(f"{len(rows)} paths, total multiplicity {_exact(total)}")
    return EXIT_OK


def cmd_render(args) -> int:
    from .svg import render_subdivision

    paths = enumerate_paths(args.degree)
    if not 0 <= args.path_id < len(paths):
        print(f"error: path id {args.path_id} out of range 0..{len(paths) - 1}", file=sys.stderr)
        return EXIT_USAGE
    path = paths[args.path_id]
    subs = generate_subdivisions(path)
    if not 0 <= args.subdivision < len(subs):
        print(f"error: path {args.path_id} has {len(subs)} subdivisions", file=sys.stderr)
        return EXIT_USAGE
    text = render_subdivision(subs[args.subdivision], path)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {args.out}")
    return EXIT_OK


def _random_polygon(rng: random.Random) -> LatticePolygon:
    while True:
        a, b, c = [(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(3)]
        pts = [a, b, c]
        if rng.random() < 0.5:
            pts.append((a[0] + c[0] - b[0], a[1] + c[1] - b[1]))
        try:
            return LatticePolygon.of(pts)
        except DegeneratePolygon:
            continue


def verify_pick(trials: int, seed: int) -> list[str]:
    rng = random.Random(seed)
    bad = []
    for k in range(trials):
        p = _random_polygon(rng)
        if not pick_identity_holds(p) or interior_count(p) != interior_count_scan(p):
            bad.append(f"trial {k}: {p}")
    return bad


def verify_walls(trials: int, seed: int) -> list[str]:
    from .elliptic import side_determinants, wall_determinants, wall_determinants_from_matrices, wall_identity_holds

    rng = random.Random(seed)
    bad = []
    for k in range(trials):
        u, v1, v2 = [(rng.randint(-10, 10), rng.randint(-10, 10)) for _ in range(3)]
        n, m = rng.randint(1, 7), rng.randint(1, 7)
        while gcd(n, m) != 1:
            n, m = rng.randint(1, 7), rng.randint(1, 7)
        if not wall_identity_holds(u, v1, v2, n, m):
            bad.append(f"trial {k}: identity fails at u={u} v1={v1} v2={v2} n={n} m={m}")
            continue
        dets = wall_determinants_from_matrices(u, v1, v2, n, m)
        closed = tuple(wall_determinants(u, v1, v2, n, m)) + tuple(side_determinants(u, v1, v2, n, m))
        if tuple(dets[k2] for k2 in ("A1", "A2", "B3", "B4", "A3", "A4")) != closed:
            bad.append(f"trial {k}: matrix determinants differ at u={u} v1={v1} v2={v2} n={n} m={m}")
    return bad


def verify_oracles(d: int) -> list[str]:
    bad = []
    for i, p in enumerate(enumerate_paths(d)):
        subs = generate_subdivisions(p)
        explicit = sum(subdivision_multiplicity(s) for s in subs)
        closed = closed_form_multiplicity(p)
        rec = mikhalkin_multiplicity(p)
        if not explicit == closed == rec:
            bad.append(f"path {i}: recursion {rec}, closed form {closed}, explicit {explicit}")
        irr = sum(subdivision_multiplicity(s) for s in subs if is_irreducible(s))
        rec_irr = sum(
            subdivision_multiplicity_cells(cells) for cells in mikhalkin_subdivisions(p)
            if dual_curve_components(cells) == 1
        )
        if irr != rec_irr:
            bad.append(f"path {i}: irreducible recursion {rec_irr}, explicit {irr}")
    return bad


def subdivision_multiplicity_cells(cells) -> int:
    out = 1
    for c in cells:
        if c.is_triangle:
            out *= double_area(c)
    return out


def verify_factors(d: int) -> list[str]:
    bad = []
    target = comb(d - 1, 2)
    for i, p in enumerate(enumerate_paths(d)):
        for j, s in enumerate(generate_subdivisions(p)):
            where = f"path {i} subdivision {j}"
            if genus(s) != 0:
                bad.append(f"{where}: genus {genus(s)}")
                continue
            if sum(double_area(c) for c in s.cells) != d * d:
                bad.append(f"{where}: cells do not tile")
            if not all(pick_identity_holds(c) for c in s.cells):
                bad.append(f"{where}: Pick identity fails")
            if any(interior_count(t) or boundary_nonvertex_count(t) != double_area(t) - 1 for t in s.triangles):
                bad.append(f"{where}: a triangle is not a column triangle")
            if counts.elliptic_factor_large_j(s) != target:
                bad.append(f"{where}: large-j factor {counts.elliptic_factor_large_j(s)} != {target}")
    return bad


def cmd_verify(args) -> int:
    if args.suite == "pick":
        bad = verify_pick(args.trials, args.seed)
    elif args.suite == "walls":
        bad = verify_walls(args.trials, args.seed)
    elif args.suite == "oracles":
        bad = verify_oracles(args.degree)
    else:
        bad = verify_factors(args.degree)
    for line in bad[:20]:
        print(f"FAIL {line}")
    if bad:
        print(f"{args.suite}: {len(bad)} failures (seed {args.seed})")
        return EXIT_FAIL
    print(f"{args.suite}: ok")
    return EXIT_OK


# --- argument parsing -------------------------------------------------------


def _degree(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if d < 1:
        raise argparse.ArgumentTypeError("degree must be at least 1")
    return d


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropcurves", description="Count plane tropical curves through points.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="evaluate a counting pipeline")
    p.add_argument("-d", "--degree", type=_degree, required=True)
    p.add_argument("--pipeline", choices=sorted(counts.PIPELINES), default="ntrop")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cross-check", action="store_true", help="compare against the other pipelines")
    p.add_argument("--workers", type=int, default=None, help="worker processes for per-path work")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("paths", help="list lattice paths")
    p.add_argument("-d", "--degree", type=_degree, required=True)
    p.add_argument("--big-steps-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("render", help="draw a subdivision as SVG")
    p.add_argument("-d", "--degree", type=_degree, required=True)
    p.add_argument("--path-id", type=int, required=True)
    p.add_argument("--subdivision", type=int, default=0, help="index among the path's subdivisions")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["pick", "walls", "oracles", "factors"])
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-d", "--degree", type=_degree, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
