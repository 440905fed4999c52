"""Command-line interface.

Subcommands
-----------
measure
    Evaluate every applicable measure for one state and emit a JSON document.
surface
    Sample a measure field, extract a constant-level triangle mesh to a
    Wavefront OBJ file, and emit mesh statistics as JSON.
dynamics
    Sweep the decoherence probability and emit coherence trajectories as CSV.
verify
    Run the closed-form-versus-oracle suites and report worst deviations.

Exit codes: 0 on success, 1 when a verification suite fails, 2 for invalid or
unphysical input.  Repeated invocations with identical flags produce
byte-identical output, regardless of ``--threads``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import channels, geometry, measures, states, verification
from .measures import MeasureKind

_CSV_COLUMNS = ("bf", "pf", "bpf", "gad")


def _default_threads() -> int:
    return os.cpu_count() or 1


def _add_threads(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--threads",
        type=int,
        default=_default_threads(),
        help="worker thread cap; results do not depend on it (default: CPU count)",
    )


def _add_state_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--c1", type=float, required=True, help="correlation c1 in [-1, 1]")
    parser.add_argument("--c2", type=float, required=True, help="correlation c2 in [-1, 1]")
    parser.add_argument("--c3", type=float, required=True, help="correlation c3 in [-1, 1]")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohgeom",
        description=(
            "Coherence and discord measures for two-qubit Bell-diagonal and X "
            "states, their decoherence dynamics, and constant-coherence level "
            "surfaces exported as triangle meshes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="evaluate all measures for one state")
    _add_state_args(m)
    m.add_argument("--r", type=float, default=0.0, help="first Bloch z component")
    m.add_argument("--s", type=float, default=0.0, help="second Bloch z component")
    m.add_argument("--out", help="write the JSON document here instead of stdout")
    _add_threads(m)

    s = sub.add_parser("surface", help="extract a constant-level surface mesh")
    s.add_argument(
        "--measure",
        default="rel-ent",
        choices=[k.value for k in MeasureKind],
        help="field to sample (default: rel-ent)",
    )
    s.add_argument("--level", type=float, required=True, help="level value in (0, 1]")
    s.add_argument(
        "--resolution", type=int, default=64, help="grid nodes per axis (default: 64)"
    )
    s.add_argument("--r", type=float, help="sample the X-state slice at this r")
    s.add_argument("--s", type=float, help="sample the X-state slice at this s")
    s.add_argument(
        "--channel",
        choices=[k.value for k in channels.ChannelKind],
        help="pre-map the grid through this channel before sampling",
    )
    s.add_argument("--p", type=float, help="channel probability for --channel")
    s.add_argument("--out", required=True, help="output OBJ path")
    s.add_argument("--stats-out", help="write the stats JSON here instead of stdout")
    _add_threads(s)

    d = sub.add_parser("dynamics", help="coherence of the evolved state versus p")
    _add_state_args(d)
    d.add_argument(
        "--channel",
        default="all",
        choices=list(_CSV_COLUMNS) + ["all"],
        help="channel column(s) to emit (default: all)",
    )
    d.add_argument(
        "--steps", type=int, default=101, help="points on the p grid (default: 101)"
    )
    d.add_argument("--out", help="write the CSV here instead of stdout")
    _add_threads(d)

    v = sub.add_parser("verify", help="run the oracle cross-check suites")
    v.add_argument(
        "--samples",
        type=int,
        default=10000,
        help="random states per sampled suite (default: 10000)",
    )
    _add_threads(v)

    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="ascii", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_measure(args) -> int:
    params = states.require_physical_x((args.r, args.s, args.c1, args.c2, args.c3))
    rho = states.x_density(params)
    is_bell = params.r == 0.0 and params.s == 0.0
    doc = {
        "c1": params.c1,
        "c2": params.c2,
        "c3": params.c3,
        "r": params.r,
        "s": params.s,
        "l1": measures.l1_coherence(rho),
        "trace_norm": measures.trace_norm_coherence_x(rho),
        "relative_entropy": (
            measures.bell_relative_entropy(params[2:])
            if is_bell
            else measures.x_relative_entropy(params)
        ),
    }
    if is_bell:
        doc["discord"] = measures.discord_bell(params[2:])
        doc["discord_equals_coherence"] = measures.discord_equals_coherence(params[2:])
    doc["region"] = geometry.classify_point(params[2:]).value
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def _cmd_surface(args, parser: argparse.ArgumentParser) -> int:
    measure = MeasureKind(args.measure)
    if not 0.0 < args.level <= 1.0:
        parser.error(f"--level must lie in (0, 1], got {args.level}")
    if args.resolution < 8:
        parser.error("--resolution must be at least 8")
    slice_rs = None
    if args.r is not None or args.s is not None:
        slice_rs = (args.r or 0.0, args.s or 0.0)
        if measure in (MeasureKind.DISCORD, MeasureKind.TRACE_NORM):
            parser.error(f"--measure {measure.value} cannot be combined with --r/--s")
        if args.channel is not None:
            parser.error("--channel cannot be combined with --r/--s")
    if (args.channel is None) != (args.p is None):
        parser.error("--channel and --p must be given together")
    if args.level < 2.0 / args.resolution:
        print(
            f"warning: level {args.level} is below the grid feature size "
            f"{2.0 / args.resolution:.4g}; consider a higher --resolution",
            file=sys.stderr,
        )

    grid = geometry.sample_field(
        measure,
        args.resolution,
        slice=slice_rs,
        channel=args.channel,
        p=args.p,
        threads=max(1, args.threads),
    )
    mesh = geometry.extract_isosurface(grid, args.level)

    metadata = {
        "measure": measure.value,
        "level": float(args.level),
        "resolution": int(args.resolution),
        "r": None if slice_rs is None else slice_rs[0],
        "s": None if slice_rs is None else slice_rs[1],
    }
    if args.channel is not None:
        metadata["channel"] = args.channel
        metadata["p"] = float(args.p)
    geometry.export_obj(mesh, args.out, metadata)

    stats = geometry.surface_stats(mesh)
    doc = {
        "total_area": stats["total_area"],
        "entangled_area_fraction": stats["entangled_area_fraction"],
        "vertex_count": stats["vertex_count"],
        "triangle_count": stats["triangle_count"],
        "measure": measure.value,
        "level": float(args.level),
        "resolution": int(args.resolution),
        "r": None if slice_rs is None else slice_rs[0],
        "s": None if slice_rs is None else slice_rs[1],
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.stats_out)
    return 0


def _cmd_dynamics(args) -> int:
    if args.steps < 2:
        raise states.DomainError("--steps must be at least 2")
    params = states.require_physical_bell((args.c1, args.c2, args.c3))
    grid = channels.default_p_grid(args.steps)
    columns = list(_CSV_COLUMNS) if args.channel == "all" else [args.channel]
    curves = {
        name: channels.dynamics_trajectory(params, name, grid) for name in columns
    }
    lines = ["p," + ",".join(f"C_{name}" for name in columns)]
    for idx, p in enumerate(grid):
        row = [repr(p)] + [repr(curves[name][idx][1]) for name in columns]
        lines.append(",".join(row))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    results = verification.run_all(samples=args.samples)
    for result in results:
        print(result.line())
    failed = [r.name for r in results if not r.passed]
    if failed:
        print("FAIL: " + ", ".join(failed))
        return 1
    print("all suites passed")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be at least 1")
    try:
        if args.command == "measure":
            return _cmd_measure(args)
        if args.command == "surface":
            return _cmd_surface(args, parser)
        if args.command == "dynamics":
            return _cmd_dynamics(args)
        return _cmd_verify(args)
    except states.DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
