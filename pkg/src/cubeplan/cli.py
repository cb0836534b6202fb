"""Command-line client for the reconfiguration service.

The CLI is a thin client: it parses flat files into the same request models
the HTTP endpoints accept, invokes the endpoint handlers in-process, and
renders the responses back to files or stdout. `cubeplan serve` runs the
same app over HTTP.

Exit codes: 0 success; 1 validation/expectation failure; 2 parse error;
3 infeasible input; 4 internal assertion (a violated planner guarantee).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from fastapi import HTTPException

from . import service
from .errors import InfeasibleError, InternalAssertionError, ParseError
from .fileio import format_cfg, format_trace, load_cfg, load_trace
from .schemas import (AnalyzeRequest, CanonicalizeRequest, ConfigModel,
                      GenerateRequest, OracleRequest, PlanRequest, StatsRequest,
                      TraceModel, ValidateRequest)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_INTERNAL = 4

_HTTP_EXIT = {"invalid": EXIT_PARSE, "infeasible": EXIT_INFEASIBLE, "internal": EXIT_INTERNAL}


def _config_model(path: str) -> ConfigModel:
    return ConfigModel.from_core(load_cfg(path))


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _cmd_canonicalize(args) -> int:
    req = CanonicalizeRequest(config=_config_model(args.infile))
    resp = service.canonicalize(req)
    moves = [m.to_core() for m in resp.trace.moves]
    _write(args.out, format_trace(resp.trace.d, moves))
    print(f"moves {resp.move_count}", file=sys.stderr)
    return EXIT_OK


def _cmd_plan(args) -> int:
    req = PlanRequest(source=_config_model(args.source), target=_config_model(args.target))
    resp = service.plan(req)
    moves = [m.to_core() for m in resp.trace.moves]
    _write(args.out, format_trace(resp.trace.d, moves))
    print(f"moves {resp.move_count}", file=sys.stderr)
    return EXIT_OK


def _cmd_validate(args) -> int:
    d, moves = load_trace(args.trace)
    req = ValidateRequest(
        config=_config_model(args.config),
        trace=TraceModel(d=d, moves=[{"kind": m.kind, "src": m.src, "dst": m.dst,
                                      "pivot": m.pivot, "supports": m.supports}
                                     for m in moves]),
        expect=_config_model(args.expect) if args.expect else None,
    )
    resp = service.validate(req)
    if not resp.ok:
        where = "" if resp.error_index is None else f" at move {resp.error_index}"
        print(f"invalid{where}: {resp.error_kind}: {resp.detail or ''}", file=sys.stderr)
        return EXIT_FAILED
    sys.stdout.write(format_cfg(resp.final.to_core()))
    return EXIT_OK


def _cmd_gen(args) -> int:
    req = GenerateRequest(n=args.n, d=args.d, seed=args.seed, style=args.style)
    resp = service.generate(req)
    _write(args.out, format_cfg(resp.config.to_core()))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    resp = service.analyze(AnalyzeRequest(config=_config_model(args.infile)))
    art = " ".join(",".join(str(x) for x in c) for c in resp.articulation) or "-"
    print(f"n {resp.n}")
    print(f"d {resp.d}")
    print(f"b_out {resp.boundary_count}")
    print(f"holes {resp.hole_count}")
    print(f"articulation {art}")
    print(f"nonarticulate {resp.nonarticulate_count}")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    req = OracleRequest(source=_config_model(args.source), target=_config_model(args.target),
                        max_states=args.max_states)
    resp = service.oracle_endpoint(req)
    print(f"reachable {str(resp.reachable).lower()}")
    print(f"min_moves {resp.min_moves if resp.min_moves is not None else '-'}")
    print(f"states_explored {resp.states_explored}")
    print(f"exhausted {str(resp.exhausted).lower()}")
    return EXIT_OK


def _cmd_stats(args) -> int:
    n_list = [int(x) for x in args.n.split(",") if x]
    req = StatsRequest(d=args.d, n_list=n_list, trials=args.trials, seed=args.seed,
                       style=args.style)
    resp = service.stats_endpoint(req)
    sys.stdout.write(resp.csv)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run(service.app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubeplan",
                                     description="Sliding-cube lattice reconfiguration toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canonicalize", help="reconfigure a configuration into a straight chain")
    p.add_argument("--in", dest="infile", required=True, help="input .cfg")
    p.add_argument("--out", required=True, help="output .trace ('-' for stdout)")
    p.set_defaults(fn=_cmd_canonicalize)

    p = sub.add_parser("plan", help="plan a reconfiguration between two configurations")
    p.add_argument("--from", dest="source", required=True, help="source .cfg")
    p.add_argument("--to", dest="target", required=True, help="target .cfg")
    p.add_argument("--out", required=True, help="output .trace ('-' for stdout)")
    p.set_defaults(fn=_cmd_plan)

    p = sub.add_parser("validate", help="replay a trace against a configuration")
    p.add_argument("--config", required=True, help="initial .cfg")
    p.add_argument("--trace", required=True, help=".trace to replay")
    p.add_argument("--expect", help="optional .cfg the replay must end at")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("gen", help="generate a random connected configuration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--style", default="blob", choices=("blob", "tree", "serpentine"))
    p.add_argument("--out", required=True, help="output .cfg ('-' for stdout)")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("analyze", help="report boundary/articulation structure")
    p.add_argument("--in", dest="infile", required=True, help="input .cfg")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("oracle", help="exact small-instance reachability check")
    p.add_argument("--from", dest="source", required=True, help="source .cfg")
    p.add_argument("--to", dest="target", required=True, help="target .cfg")
    p.add_argument("--max-states", type=int, default=5_000_000)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("stats", help="canonicalization benchmark CSV")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", required=True, help="comma-separated module counts")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--style", default="blob", choices=("blob", "tree", "serpentine"))
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InternalAssertionError as exc:
        print(f"internal assertion: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except HTTPException as exc:
        detail = exc.detail if isinstance(exc.detail, dict) else {}
        code = detail.get("code", "invalid")
        print(f"{code}: {detail.get('message', exc.detail)}", file=sys.stderr)
        return _HTTP_EXIT.get(code, EXIT_PARSE)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
