"""Command-line front end.

Results go to stdout as JSON (DOT for ``export-dot``); logs go to stderr.
Failures print ``{"error": kind, "message": ...}`` and exit with status 2.
``campaign`` exits with status 1 when any violation was found.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import domination as dom
from . import grundy as gr
from .campaign import DEFAULT_GRID, CampaignConfig, run_campaign
from .digraph import Digraph, DigraphError
from .fixtures import FIXTURE_NAMES, UnknownFixture, fixture
from .formats import (
    ParseError,
    digraph_to_json,
    dumps,
    family_to_json,
    format_edge_list,
    labeling_to_json,
    read_edge_list,
    to_dot,
)
from .pld import LabeledPld, PldError, build_pld, line_digraph, pld_from_json

SEED_ENV = "PLDKERNELS_SEED"
log = logging.getLogger("pldkernels")


class CliError(Exception):
    def __init__(self, kind: str, message: str, **extra):
        super().__init__(message)
        self.kind = kind
        self.extra = extra


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("OptionConflict", message)


def _grid(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for chunk in text.replace(";", " ").split():
        k, l = chunk.split(",")
        pairs.append((int(k), int(l)))
    return tuple(pairs)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pldkernels", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp, needs_kl=False):
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", "-i", help="edge-list file (1-based)")
        src.add_argument("--fixture", "-f", help=f"one of {', '.join(FIXTURE_NAMES)}")
        sp.add_argument("--output", "-o", help="write here instead of stdout")
        if needs_kl:
            sp.add_argument("--k", type=int, required=True)
            sp.add_argument("--l", type=int, required=True)
        return sp

    sp = with_input(sub.add_parser("build-pld", help="build a partial line digraph from an (A', phi) JSON file"))
    sp.add_argument("--map", "-m", help="PartialLineMap JSON; fig1 defaults to its own map")
    with_input(sub.add_parser("line-digraph", help="line digraph (A' = A)"))
    with_input(sub.add_parser("kernels", help="all (k,l)-kernels"), needs_kl=True)
    with_input(sub.add_parser("semikernels", help="all nonempty semikernels"))
    with_input(sub.add_parser("grundy", help="all (k,l)-Grundy functions"), needs_kl=True)
    with_input(sub.add_parser("fibonacci", help="number of independent sets, empty set included"))
    sp = with_input(sub.add_parser("independent", help="all k-independent sets"))
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--include-empty", action="store_true")
    sp = with_input(sub.add_parser("export-dot", help="DOT for the digraph, or for its line digraph"))
    sp.add_argument("--line", action="store_true", help="export the line digraph instead")

    sp = sub.add_parser("fixtures", help="list the reference fixtures, or print one as an edge list")
    sp.add_argument("--name")
    sp.add_argument("--output", "-o")

    sp = sub.add_parser("campaign", help="run the theorem campaign")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--p", type=float, default=0.3, help="arc probability")
    sp.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV}, else 0")
    sp.add_argument("--pld-cap", type=int, default=200)
    sp.add_argument("--grid", type=_grid, default=DEFAULT_GRID, help='(k,l) pairs, e.g. "2,1 3,2"')
    sp.add_argument("--fixtures", nargs="*", default=None, help="run on these fixtures instead of random digraphs")
    sp.add_argument("--output", "-o")
    return p


def _load(args) -> Digraph:
    if args.fixture is not None:
        return fixture(args.fixture).digraph
    return read_edge_list(args.input)


def _pld_json(pld: LabeledPld) -> dict:
    return {
        "digraph": digraph_to_json(pld.digraph),
        "vertex_arcs": [[u + 1, v + 1] for u, v in pld.vertex_label],
        "map": pld.source.to_json(),
    }


def _emit(text: str, output) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _run(args) -> tuple[int, str]:
    cmd = args.command
    if cmd == "fixtures":
        if args.name is None:
            return 0, dumps(list(FIXTURE_NAMES)) + "\n"
        fx = fixture(args.name)
        out = {"name": fx.name, "digraph": digraph_to_json(fx.digraph), "edge_list": format_edge_list(fx.digraph)}
        if fx.pld_map is not None:
            out["map"] = fx.pld_map.to_json()
        if fx.grundy is not None:
            out["grundy"] = {"labeling": labeling_to_json(fx.grundy), "k": fx.grundy_kl[0], "l": fx.grundy_kl[1]}
        return 0, dumps(out) + "\n"

    if cmd == "campaign":
        seed = args.seed if args.seed is not None else int(os.environ.get(SEED_ENV, "0"))
        cfg = CampaignConfig(
            trials=args.trials if args.fixtures is None else 0,
            max_n=args.max_n,
            arc_probability=args.p,
            seed=seed,
            pld_cap=args.pld_cap,
            kl_grid=args.grid,
            fixtures=tuple(args.fixtures or FIXTURE_NAMES) if args.fixtures is not None else (),
        )
        report = run_campaign(cfg)
        return (1 if report.violations else 0), dumps(report.to_json()) + "\n"

    D = _load(args)
    if cmd == "export-dot":
        target = line_digraph(D).digraph if args.line else D
        return 0, to_dot(target)
    if cmd == "line-digraph":
        return 0, dumps(_pld_json(line_digraph(D))) + "\n"
    if cmd == "build-pld":
        if args.map is not None:
            pmap = pld_from_json(D, json.loads(Path(args.map).read_text()))
        elif args.fixture is not None and fixture(args.fixture).pld_map is not None:
            pmap = fixture(args.fixture).pld_map
        else:
            raise CliError("OptionConflict", "build-pld needs --map")
        return 0, dumps(_pld_json(build_pld(pmap))) + "\n"
    if cmd == "kernels":
        fam = dom.enumerate_kl_kernels(D, args.k, args.l)
        return 0, dumps({"k": args.k, "l": args.l, "count": len(fam), "sets": family_to_json(fam)}) + "\n"
    if cmd == "semikernels":
        fam = dom.enumerate_semikernels(D)
        return 0, dumps({"count": len(fam), "sets": family_to_json(fam)}) + "\n"
    if cmd == "independent":
        fam = dom.enumerate_k_independent_sets(D, args.k, args.include_empty)
        return 0, dumps({"k": args.k, "count": len(fam), "sets": family_to_json(fam)}) + "\n"
    if cmd == "fibonacci":
        return 0, dumps({"fibonacci_number": dom.fibonacci_number(D)}) + "\n"
    if cmd == "grundy":
        fns = gr.enumerate_kl_grundy(D, args.k, args.l)
        return 0, dumps({"k": args.k, "l": args.l, "count": len(fns),
                         "functions": [labeling_to_json(g) for g in fns]}) + "\n"
    raise CliError("OptionConflict", f"unknown command {cmd}")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
        status, text = _run(args)
        _emit(text, getattr(args, "output", None))
        return status
    except CliError as exc:
        err = {"error": exc.kind, "message": str(exc), **exc.extra}
    except ParseError as exc:
        err = {"error": "ParseError", "message": str(exc), "line": exc.line}
    except (DigraphError, PldError) as exc:
        err = {"error": "ValidationError", "kind": type(exc).__name__, "message": str(exc)}
    except UnknownFixture as exc:
        err = {"error": "UnknownFixture", "message": str(exc)}
    except (ValueError, OSError) as exc:
        err = {"error": "ValidationError", "kind": type(exc).__name__, "message": str(exc)}
    sys.stdout.write(dumps(err) + "\n")
    return 2


if __name__ == "__main__":
    sys.exit(main())
