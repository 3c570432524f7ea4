"""Command-line surface.

Subcommands: ann, hilbert, saturate, certify, scan, generic-hf.
Exit codes: 0 success, 1 property violation found, 2 input error,
3 node budget exhausted (certify/scan only; the verdict is then UNDECIDED,
never NONEXISTENT).

Every command is deterministic given its inputs and seed; JSON output is
canonical (sorted keys, no whitespace), so repeated runs and different
--threads values produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .apolar import DualElement, DualSubspace, annihilator_degree
from .certifier import (
    VERDICT_CANDIDATE,
    VERDICT_NONEXISTENT,
    VERDICT_UNDECIDED,
    certify,
    lower_bound_scan,
)
from .exactla import DEFAULT_PRIME, Field
from .monideal import MonomialIdeal
from .points import PointConfiguration, check_generic_hf, hilbert_function_points
from .ring import Space, Window, format_degree, parse_degree


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


@dataclass(frozen=True)
class SessionConfig:
    """Validated shared options of one invocation.  The field's prime is
    checked on parse; randomized commands declare their seed as a required
    argument, so a missing seed never reaches this object."""

    space: Space
    field: Field
    seed: int | None = None
    window: Window | None = None
    max_nodes: int | None = None
    threads: int = 1
    emit_json: str | None = None

    def emit(self, obj) -> None:
        if self.emit_json:
            Path(self.emit_json).write_text(canonical_json(obj))


def _window_from_args(args, space: Space, default_box=None) -> Window | None:
    box = getattr(args, "window_box", None)
    total = getattr(args, "window_total", None)
    if box and total is not None:
        raise ValueError("give at most one of --window-box and --window-total")
    if total is not None:
        return Window.total(space.k, total)
    if box and box != "auto":
        return Window.box(parse_degree(box, space.k))
    if default_box is not None:
        return Window.box(default_box)
    return None


def _session(args, default_box=None, need_window=False) -> SessionConfig:
    space = Space.parse(args.space)
    window = _window_from_args(args, space, default_box)
    if need_window and window is None:
        raise ValueError("a window is required (--window-box or --window-total)")
    return SessionConfig(
        space=space,
        field=Field.parse(args.field),
        seed=getattr(args, "seed", None),
        window=window,
        max_nodes=getattr(args, "max_nodes", None),
        threads=getattr(args, "threads", 1),
        emit_json=getattr(args, "emit_json", None),
    )


def _load_target(args, cfg: SessionConfig) -> DualSubspace:
    if getattr(args, "target", None):
        return DualSubspace.span([DualElement.parse(cfg.space, cfg.field, args.target)])
    path = getattr(args, "target_file", None)
    if not path:
        raise ValueError("give --target or --target-file")
    data = json.loads(Path(path).read_text())
    if isinstance(data, list):
        elements = [DualElement.from_json(cfg.space, cfg.field, d) for d in data]
    else:
        elements = [DualElement.from_json(cfg.space, cfg.field, data)]
    return DualSubspace.span(elements)


# ---------------------------------------------------------------------------

def cmd_ann(args) -> int:
    cfg = _session(args)
    E = _load_target(args, cfg)
    D = parse_degree(args.degree, cfg.space.k)
    ann = annihilator_degree(E, D)
    monos = cfg.space.monomials(D)
    for row in ann.space.rows:
        parts = []
        for c, e in zip(row, monos):
            if c == 0:
                continue
            mono = cfg.space.format_exponent(e)
            parts.append(mono if c == cfg.field.one else f"{cfg.field.format(c)}*{mono}")
        print(" + ".join(parts) if parts else "0")
    cfg.emit({
        "schema": "multiapolar.ann/1",
        "space": cfg.space.to_json(),
        "field": str(cfg.field),
        "degree": list(D),
        "target": E.to_json(),
        "dim": ann.dim,
        "codim": ann.codim,
        "basis": ann.space.basis_json(),
    })
    return 0


def cmd_hilbert(args) -> int:
    cfg = _session(args, need_window=True)
    if bool(args.ideal_file) == bool(args.points_file):
        raise ValueError("give exactly one of --ideal-file and --points-file")
    field = cfg.field
    table = []
    if args.ideal_file:
        ideal = MonomialIdeal.from_text(cfg.space, Path(args.ideal_file).read_text())
        source = {"ideal": ideal.to_json()}
        for D in cfg.window:
            table.append({"degree": list(D), "dim": cfg.space.dim_degree(D),
                          "h": ideal.hilbert_function(D)})
    else:
        Z = PointConfiguration.from_json(cfg.space,
                                         json.loads(Path(args.points_file).read_text()))
        field = Z.field  # the configuration file is self-describing
        source = {"points": Z.to_json()}
        for D in cfg.window:
            table.append({"degree": list(D), "dim": cfg.space.dim_degree(D),
                          "h": hilbert_function_points(Z, D)})
    for row in table:
        print(f"{format_degree(tuple(row['degree']))}\t{row['h']}")
    cfg.emit({"schema": "multiapolar.hilbert/1", "space": cfg.space.to_json(),
              "field": str(field), "window": cfg.window.to_json(),
              "table": table, **source})
    return 0


def cmd_saturate(args) -> int:
    cfg = _session(args)
    ideal = MonomialIdeal.from_text(cfg.space, Path(args.ideal_file).read_text())
    sat = ideal.saturate()
    print(sat.to_text())
    cfg.emit({"schema": "multiapolar.saturate/1", "space": cfg.space.to_json(),
              "input": ideal.to_json(), "saturation": sat.to_json(),
              "was_saturated": sat == ideal})
    return 0


def _verdict_line(r: int, verdict: str) -> str:
    if verdict == VERDICT_NONEXISTENT:
        return f"r={r}: necessary condition for r fails (NONEXISTENT)"
    if verdict == VERDICT_CANDIDATE:
        return f"r={r}: necessary condition for r passes (CANDIDATE witness; not a membership proof)"
    return f"r={r}: UNDECIDED (node budget exhausted)"


def cmd_certify(args) -> int:
    cfg = _session(args)
    E = _load_target(args, cfg)
    window = cfg.window if cfg.window is not None else Window.box(E.degree)
    cert = certify(E, args.r, window, cfg.max_nodes)
    print(_verdict_line(args.r, cert.verdict))
    cfg.emit(cert.to_json())
    return 3 if cert.verdict == VERDICT_UNDECIDED else 0


def cmd_scan(args) -> int:
    cfg = _session(args)
    E = _load_target(args, cfg)
    window = cfg.window if cfg.window is not None else Window.box(E.degree)
    report = lower_bound_scan(E, args.r_max, window, cfg.max_nodes, cfg.threads)
    for row in report["rows"]:
        print(_verdict_line(row["r"], row["verdict"]))
    print(f"lower bound: border rank >= {report['lower_bound']}")
    cfg.emit(report)
    return 3 if report["undecided"] else 0


def cmd_generic_hf(args) -> int:
    cfg = _session(args, need_window=True)
    report = check_generic_hf(cfg.space, args.r, cfg.window, args.trials,
                              cfg.seed, field=cfg.field, threads=cfg.threads)
    print(f"passed {report['passed']}/{report['trials']} trials "
          f"(fraction {report['pass_fraction']})")
    cfg.emit(report)
    return 0 if report["passed"] == report["trials"] else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiapolar",
        description="Exact multigraded apolarity and border-rank certification "
                    "on products of projective spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, field_default="Q"):
        p.add_argument("--space", required=True, help="e.g. P2 or P1xP1")
        p.add_argument("--field", default=field_default, help="Q or p=PRIME")
        p.add_argument("--emit-json", default=None, help="write canonical JSON here")

    p = sub.add_parser("ann", help="basis of the annihilator in one degree")
    common(p)
    p.add_argument("--target", default=None, help="monomial text, e.g. 'x0^1 x1^1 x2^2'")
    p.add_argument("--target-file", default=None, help="JSON dual element(s)")
    p.add_argument("--degree", required=True, help="d or d1,...,dk")
    p.set_defaults(fn=cmd_ann)

    p = sub.add_parser("hilbert", help="Hilbert function table over a window")
    common(p)
    p.add_argument("--ideal-file", default=None)
    p.add_argument("--points-file", default=None)
    p.add_argument("--window-box", default=None, help="d1,...,dk")
    p.add_argument("--window-total", type=int, default=None)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("saturate", help="saturate a monomial ideal")
    common(p)
    p.add_argument("--ideal-file", required=True)
    p.set_defaults(fn=cmd_saturate)

    p = sub.add_parser("certify", help="necessary-condition search for one r")
    common(p)
    p.add_argument("--target", default=None)
    p.add_argument("--target-file", default=None)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--window-box", default="auto")
    p.add_argument("--max-nodes", type=int, default=None)
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("scan", help="certify r = 1..r_max and report the bound")
    common(p)
    p.add_argument("--target", default=None)
    p.add_argument("--target-file", default=None)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--window-box", default="auto")
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=cmd_scan)

    p = sub.add_parser("generic-hf", help="seeded generic Hilbert function trials")
    common(p, field_default=f"p={DEFAULT_PRIME}")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--window-box", default=None)
    p.add_argument("--window-total", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=cmd_generic_hf)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return int(exc.code) if exc.code else 0
    try:
        return args.fn(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
