"""Deterministic command-line front end.

Subcommands::

    ladder-exact   exact bundles and symmetric differences on the abstract
                   ladder (plain and cubulated variants)
    cayley         build a Cayley ball, locate the ladder, audit convexity,
                   and report ray-bundle symmetric-difference growth
    delta          empirical slim-triangle constant on a chosen graph
    export-ball    dump a ball's labelled edge list for external tools

Reports embed the parsed configuration and the package version, contain no
timestamps, and are byte-identical across reruns of the same configuration.
Exit codes: 0 all checks passed, 1 a mathematical self-check failed,
2 usage or configuration error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import asdict, dataclass
from typing import Optional

from . import __version__
from .bundles import check_convexity, locate_ladder, symdiff_growth, truncated_ray_bundle
from .cayley import DEFAULT_VERTEX_CAP, build_ball, write_edge_list
from .errors import MarginError, MathCheckError, UsageError, VertexCapExceeded
from .ladder import (
    LEVELS,
    NEG_END,
    POS_END,
    LadderCoord,
    LadderGraph,
    bundle_rows,
    ray_bundle_exact,
    sym_diff_exact,
    sym_diff_window_counts,
)
from .slim import BallSpace, LadderSpace, report_line, slim_constant
from .words import FREE_PS, GAMMA, parse_presentation


@dataclass
class RunConfig:
    """Parsed configuration echoed into every report header."""

    command: str
    radius: int = 8
    truncation: int = 200
    cubulated: bool = False
    variant: str = "both"
    end: str = "+"
    x: str = "TOP:0"
    y: str = "MID:0"
    graph: str = "cayley"
    presentation: str = "gamma"
    presentation_file: Optional[str] = None
    out_format: str = "json"
    out: Optional[str] = None
    cap: int = DEFAULT_VERTEX_CAP
    seed: int = 0
    samples: int = 1000
    exhaustive: bool = False


def parse_coord(text: str) -> LadderCoord:
    level, _, idx = text.partition(":")
    level = level.strip().upper()
    if level not in LEVELS:
        raise UsageError(f"coordinate level must be one of {LEVELS}, got {text!r}")
    try:
        return LadderCoord(int(idx), level)
    except ValueError:
        raise UsageError(f"bad coordinate index in {text!r}") from None


def format_coord(c: LadderCoord) -> str:
    return f"{c.level}:{c.index}"


def parse_end(text: str) -> int:
    if text == "+":
        return POS_END
    if text == "-":
        return NEG_END
    raise UsageError(f"end must be '+' or '-', got {text!r}")


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_report(report: dict, out: Optional[str]) -> None:
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", out)


def _csv_lines(rows: list[tuple]) -> str:
    return "".join(",".join(str(c) for c in row) + "\n" for row in rows)


# -- ladder-exact -------------------------------------------------------------


def cmd_ladder_exact(cfg: RunConfig) -> int:
    if cfg.truncation < 5:
        raise UsageError(f"--N must be at least 5 to leave a usable window, got {cfg.truncation}")
    end = parse_end(cfg.end)
    x = parse_coord(cfg.x)
    y = parse_coord(cfg.y)
    n_max = cfg.truncation - 4
    window = (0, n_max)
    variants = ("plain", "cubulated") if cfg.variant == "both" else (cfg.variant,)

    sections = {}
    csv_rows: list[tuple] = [("variant", "index", "level", "in_bundle_x", "in_bundle_y", "in_symdiff")]
    for name in variants:
        graph = LadderGraph(cfg.truncation, cubulated=(name == "cubulated"))
        bundle_x = ray_bundle_exact(graph, x, end, window)
        bundle_y = ray_bundle_exact(graph, y, end, window)
        diff = bundle_x ^ bundle_y
        counts = sym_diff_window_counts(graph, x, y, end, n_max)
        sections[name] = {
            "window": list(window),
            "bundle_x": sorted(format_coord(c) for c in bundle_x),
            "bundle_y": sorted(format_coord(c) for c in bundle_y),
            "symdiff": sorted(format_coord(c) for c in diff),
            "symdiff_window_counts": [list(c) for c in counts],
        }
        for row in bundle_rows(graph, x, y, end, window):
            csv_rows.append((name,) + row)

    if cfg.out_format == "csv":
        _emit(_csv_lines(csv_rows), cfg.out)
    else:
        report = {
            "command": "ladder-exact",
            "version": __version__,
            "config": asdict(cfg),
            "variants": sections,
        }
        _json_report(report, cfg.out)
    return 0


# -- cayley -------------------------------------------------------------------


def cmd_cayley(cfg: RunConfig) -> int:
    if cfg.radius < 0:
        raise UsageError(f"--radius must be >= 0, got {cfg.radius}")
    end = parse_end(cfg.end)
    xc = parse_coord(cfg.x)
    yc = parse_coord(cfg.y)
    ball = build_ball(GAMMA, cfg.radius, cap=cfg.cap)
    ladder = locate_ladder(ball)
    convexity = check_convexity(ball, ladder)

    report = {
        "command": "cayley",
        "version": __version__,
        "config": asdict(cfg),
        "radius": ball.radius,
        "vertices": ball.vertex_count,
        "ladder_coordinates": len(ladder),
        "end": cfg.end,
        "convexity": convexity.to_dict(),
        "violations": [list(v) for v in convexity.violations],
        "uncertified_pairs": convexity.uncertified_pairs,
        "source": None,
        "bundle": [],
        "bundle_y": [],
        "margins": None,
        "k_max": None,
        "symdiff_counts": [],
        "symdiff": [],
        "note": None,
    }

    x = ladder.to_vertex.get(xc)
    y = ladder.to_vertex.get(yc)
    if x is None or y is None:
        report["note"] = "source coordinates not inside the ball; growth table empty"
    else:
        report["source"] = x
        try:
            rx = truncated_ray_bundle(ball, ladder, x, end)
            ry = truncated_ray_bundle(ball, ladder, y, end)
            growth = symdiff_growth(ball, ladder, x, y, end, rx, ry)
        except MarginError as exc:
            report["note"] = f"bundles skipped: {exc}; raise --radius for a usable margin"
        else:
            report["bundle"] = list(rx.bundle)
            report["bundle_y"] = list(ry.bundle)
            report["margins"] = {"x": rx.margins, "y": ry.margins}
            report["k_max"] = growth.k_max
            report["symdiff_counts"] = [list(c) for c in growth.counts]
            report["symdiff"] = list(growth.symdiff)

    if cfg.out_format == "csv":
        rows: list[tuple] = [("field", "value")]
        for key in sorted(report):
            if key in ("config", "convexity", "margins"):
                continue
            value = report[key]
            if isinstance(value, list):
                value = " ".join(
                    ":".join(str(p) for p in item) if isinstance(item, list) else str(item)
                    for item in value
                )
            rows.append((key, value))
        _emit(_csv_lines(rows), cfg.out)
    else:
        _json_report(report, cfg.out)
    return 0 if convexity.ok else 1


# -- delta --------------------------------------------------------------------


def cmd_delta(cfg: RunConfig) -> int:
    if cfg.graph in ("cayley", "free-tree"):
        spec = GAMMA if cfg.graph == "cayley" else FREE_PS
        ball = build_ball(spec, cfg.radius, cap=cfg.cap)
        space = BallSpace(ball)
    elif cfg.graph == "ladder":
        space = LadderSpace(LadderGraph(cfg.truncation, cubulated=cfg.cubulated))
    else:
        raise UsageError(f"--graph must be cayley, free-tree or ladder, got {cfg.graph!r}")

    if cfg.exhaustive:
        if cfg.graph == "ladder" and 3 * (2 * (cfg.truncation - 2) + 1) > 150:
            raise UsageError("exhaustive ladder sampling is impractical past --N 25; use --samples")
        sample = space.exhaustive_sample()
    else:
        sample = space.random_sample(cfg.samples, cfg.seed)
    delta_hat = slim_constant(space, sample)

    line = report_line(delta_hat, sample) + "\n"
    if cfg.out_format == "json":
        _json_report(
            {
                "command": "delta",
                "version": __version__,
                "config": asdict(cfg),
                "delta_hat": delta_hat,
                "triples": len(sample.triples),
                "mode": sample.mode,
                "seed": sample.seed,
                "report_line": line.strip(),
            },
            cfg.out,
        )
    else:
        _emit(line, cfg.out)
    return 0


# -- export-ball ---------------------------------------------------------------


def cmd_export_ball(cfg: RunConfig) -> int:
    if cfg.presentation_file is not None:
        with open(cfg.presentation_file, "r", encoding="utf-8") as fh:
            try:
                spec = parse_presentation(fh.read())
            except ValueError as exc:
                raise UsageError(f"bad presentation file: {exc}") from None
    elif cfg.presentation == "gamma":
        spec = GAMMA
    elif cfg.presentation == "free-ps":
        spec = FREE_PS
    else:
        raise UsageError(f"--presentation must be gamma or free-ps, got {cfg.presentation!r}")
    ball = build_ball(spec, cfg.radius, cap=cfg.cap)
    buf = io.StringIO()
    write_edge_list(ball, buf)
    _emit(buf.getvalue(), cfg.out)
    return 0


# -- argument parsing -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raybundles",
        description="Finite-scale checks of geodesic ray-bundle divergence on ladders",
    )
    parser.add_argument("--version", action="version", version=f"raybundles {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="out_format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", default=None, help="write the report to this path instead of stdout")

    p = sub.add_parser("ladder-exact", help="exact bundles and symmetric differences on the ladder")
    p.add_argument("--N", dest="truncation", type=int, default=200, help="index truncation (default 200)")
    p.add_argument("--end", choices=("+", "-"), default="+")
    p.add_argument("--x", default="TOP:0", help="first source, LEVEL:index (default TOP:0)")
    p.add_argument("--y", default="MID:0", help="second source, LEVEL:index (default MID:0)")
    p.add_argument("--variant", choices=("both", "plain", "cubulated"), default="both")
    p.add_argument(
        "--cubulated", dest="variant", action="store_const", const="cubulated",
        help="shorthand for --variant cubulated",
    )
    add_common(p)

    p = sub.add_parser("cayley", help="ball construction, convexity audit, bundle growth")
    p.add_argument("--radius", type=int, default=8)
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP, help="vertex cap (default 5e7)")
    p.add_argument("--end", choices=("+", "-"), default="+")
    p.add_argument("--x", default="TOP:0")
    p.add_argument("--y", default="MID:0")
    add_common(p)

    p = sub.add_parser("delta", help="empirical slim-triangle constant")
    p.add_argument("--graph", choices=("cayley", "free-tree", "ladder"), default="cayley")
    p.add_argument("--radius", type=int, default=6, help="ball radius for cayley/free-tree")
    p.add_argument("--N", dest="truncation", type=int, default=10, help="ladder truncation")
    p.add_argument("--cubulated", action="store_true")
    p.add_argument("--exhaustive", action="store_true", help="all valid triples instead of sampling")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(out_format="text")
    p.add_argument("--format", dest="out_format", choices=("json", "text"))
    p.add_argument("--out", default=None)

    p = sub.add_parser("export-ball", help="write the labelled edge list of a ball")
    p.add_argument("--radius", type=int, default=4)
    p.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP)
    p.add_argument("--presentation", choices=("gamma", "free-ps"), default="gamma")
    p.add_argument("--presentation-file", default=None, help="parse the presentation from this file")
    p.add_argument("--out", default=None)
    return parser


_COMMANDS = {
    "ladder-exact": cmd_ladder_exact,
    "cayley": cmd_cayley,
    "delta": cmd_delta,
    "export-ball": cmd_export_ball,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fields = {f: getattr(args, f) for f in RunConfig.__dataclass_fields__ if hasattr(args, f)}
    cfg = RunConfig(**fields)
    try:
        return _COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VertexCapExceeded as exc:
        print(f"resource cap: {exc}; lower --radius or raise --cap", file=sys.stderr)
        return 3
    except MathCheckError as exc:
        print(f"mathematical self-check failed: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
