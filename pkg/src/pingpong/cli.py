"""Command-line interface. JSON on stdout, diagnostics on stderr.

Exit status: 0 success, 1 invalid input or failed check, 2 unreadable input
or bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from pingpong import config as config_mod
from pingpong import realize, search
from pingpong.config import ConfigFormatError, Configuration, InvalidConfiguration
from pingpong.freegroup import Word
from pingpong.orders import CentralElement, circular_order, linear_compare
from pingpong.surface import classify


class UsageError(Exception):
    pass


class Failure(Exception):
    def __init__(self, payload: Any, message: str):
        self.payload = payload
        super().__init__(message)


def _emit(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load_config(path: str) -> Configuration:
    try:
        cfg = config_mod.loads(_read(path))
    except ConfigFormatError as e:
        raise UsageError(f"{path}: {e}") from None
    problems = config_mod.validate(cfg)
    if problems:
        raise Failure({"valid": False, "violations": problems}, f"{path}: invalid configuration")
    return cfg


def cmd_validate(args: argparse.Namespace) -> Any:
    cfg = _load_config(args.path)
    return {"valid": True, "rank": cfg.rank, "m": cfg.m}


def cmd_classify(args: argparse.Namespace) -> Any:
    cfg = _load_config(args.path)
    verdict = classify(cfg)
    if args.pretty:
        print(f"configuration  {cfg}")
        print(f"boundary count {verdict.boundary_count}")
        print(f"euler char     {verdict.chi}")
        print(f"genus          {verdict.genus}")
        print(f"isolated       {'yes' if verdict.isolated else 'no'}")
        for cyc in verdict.boundary_cycles:
            print("  cycle " + " -> ".join(map(str, cyc)))
        return None
    return verdict.to_dict()


def cmd_realize(args: argparse.Namespace) -> Any:
    cfg = _load_config(args.path)
    r = realize.standard_realization(cfg, args.layout)
    doc = realize.realization_to_dict(r)
    if args.out:
        Path(args.out).write_text(realize.dumps_action(doc) + "\n")
        return {"out": args.out, "layout": args.layout, "mu": realize.circle.fmt(r.mu)}
    return doc


def cmd_extract(args: argparse.Namespace) -> Any:
    try:
        doc = json.loads(_read(args.path))
        maps, domains = realize.action_from_dict(doc)
    except (json.JSONDecodeError, ValueError) as e:
        raise UsageError(f"{args.path}: {e}") from None
    try:
        cfg = realize.extract_config(maps, domains)
    except realize.ExtractionError as e:
        raise Failure({"violations": [v.to_dict() for v in e.violations]}, "not a ping-pong action") from None
    return config_mod.to_dict(cfg)


def cmd_order(args: argparse.Namespace) -> Any:
    cfg = _load_config(args.path)
    r = realize.standard_realization(cfg, args.layout)
    try:
        if args.linear:
            if len(args.elements) != 2:
                raise UsageError("--linear takes two elements 'g:m' 'h:l'")
            u, v = (CentralElement.parse(e, cfg.rank) for e in args.elements)
            return {"value": linear_compare(r, u, v)}
        if len(args.elements) != 3:
            raise UsageError("order takes three words")
        words = [Word.parse("" if e == "1" else e, cfg.rank) for e in args.elements]
    except ValueError as e:
        raise UsageError(str(e)) from None
    return {"value": circular_order(r, *words)}


def cmd_survey(args: argparse.Namespace) -> Any:
    if args.max_k is None and args.bound is None:
        raise UsageError("give --max-k or --bound")
    try:
        if args.sample:
            report = search.sample_survey(
                args.rank, args.sample, seed=args.seed, max_k=args.max_k, max_m=args.bound, strict=False
            )
        else:
            bound = search.SearchBound(args.rank, max_k=args.max_k, max_m=args.bound)
            report = search.survey(bound, ceiling=args.ceiling, jobs=args.jobs, strict=False)
    except search.BoundTooLarge as e:
        raise Failure({"error": str(e)}, str(e)) from None
    except ValueError as e:
        raise UsageError(str(e)) from None
    payload = report.to_dict()
    if report.parity_violations or report.defects:
        raise Failure(payload, "parity violations or internal defects found")
    if args.pretty:
        print(f"rank {report.rank}: {report.total} configurations")
        for b, n in sorted(report.histogram.items()):
            print(f"  boundary count {b:>3}: {n}")
        print(f"isolated: {len(report.isolated)}")
        return None
    return payload


def cmd_diagram(args: argparse.Namespace) -> Any:
    from pingpong.diagram import render_svg

    cfg = _load_config(args.path)
    svg = render_svg(cfg, args.layout)
    Path(args.out).write_text(svg)
    return {"out": args.out, "arcs": cfg.m, "word": [str(x) for x in cfg.word]}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pingpong", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_path(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("path")
        return sp

    with_path("validate", "check a configuration file").set_defaults(func=cmd_validate)

    sp = with_path("classify", "boundary count, Euler characteristic and isolation verdict")
    sp.add_argument("--pretty", action="store_true")
    sp.set_defaults(func=cmd_classify)

    sp = with_path("realize", "emit the piecewise-linear action file")
    sp.add_argument("--layout", choices=sorted(realize.LAYOUTS), default="standard")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_realize)

    with_path("extract", "read a configuration off an action file").set_defaults(func=cmd_extract)

    sp = with_path("order", "circular order of three words, or --linear comparison of two 'g:m' elements")
    sp.add_argument("elements", nargs="+")
    sp.add_argument("--linear", action="store_true")
    sp.add_argument("--layout", choices=sorted(realize.LAYOUTS), default="standard")
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("survey", help="classify every configuration within a bound")
    sp.add_argument("--rank", type=int, required=True)
    sp.add_argument("--max-k", type=int)
    sp.add_argument("--bound", type=int, help="maximum total number of arcs m")
    sp.add_argument("--ceiling", type=int, default=search.DEFAULT_CEILING)
    sp.add_argument("--sample", type=int, help="classify this many random configurations instead")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--pretty", action="store_true")
    sp.set_defaults(func=cmd_survey)

    sp = with_path("diagram", "draw the domains and Gamma cycles as SVG")
    sp.add_argument("--out", required=True)
    sp.add_argument("--layout", choices=sorted(realize.LAYOUTS), default="standard")
    sp.set_defaults(func=cmd_diagram)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Failure as e:
        _emit(e.payload)
        print(f"error: {e}", file=sys.stderr)
        return 1
    except InvalidConfiguration as e:
        _emit({"valid": False, "violations": e.violations})
        return 1
    if payload is not None:
        _emit(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
