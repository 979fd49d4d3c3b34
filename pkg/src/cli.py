#!/usr/bin/env python3
# Copyright 2026 Canonical Ltd.
# See LICENSE file for licensing details.

"""Command line front end for the thin loop toolkit.

Every invocation prints exactly one JSON document on standard output. Exit codes: 0 on
success, 1 for domain or validation errors, 2 for usage errors.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from constants import (
    DEFAULT_DENOM_BOUND,
    DEFAULT_LOG_LEVEL,
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_USAGE_ERROR,
    LOG_LEVELS,
    MAX_ORACLE_LEN,
)
from errors import ThinLoopError, UsageError
from geometry import SimplicialComplex, format_point
from sampling import SplitMix64, random_loop, random_loop_upto
from thin_group import (
    Rule,
    core,
    cyclic_core,
    eq,
    inv,
    milnor_reduce,
    mul,
    power,
    reduce_all_orders,
    reduce_word,
    w_reduce,
)
from utils import load_complex, load_word, points_to_json, word_to_json
from words import WordKind, length, uniform_breakpoints

logger = logging.getLogger(__name__)


@dataclass
class RunReport:
    """Outcome of one command line invocation."""

    command: str
    inputs: List[str]
    result: Any
    exit_code: int

    def render(self) -> str:
        """Return the JSON document printed on standard output."""
        return json.dumps(self.result, sort_keys=True)


class _Parser(argparse.ArgumentParser):
    """Argument parser raising UsageError instead of exiting."""

    def error(self, message: str):  # type: ignore[override]
        """Raise instead of printing usage and exiting."""
        raise UsageError(message)


def fuzz_confluence(
    complex_: SimplicialComplex,
    max_len: int,
    trials: int,
    seed: int,
    denom_bound: int = DEFAULT_DENOM_BOUND,
) -> Dict[str, Any]:
    """Compare greedy cores against exhaustive reduction on random loops.

    Returns the trial count, the number of non-confluent words and those words, which serve as
    reproducers.
    """
    master = SplitMix64(seed)
    counterexamples = []
    for _ in range(trials):
        w = random_loop_upto(complex_, max_len, master.next(), denom_bound)
        if reduce_all_orders(w, max_len) != {core(w).word}:
            logger.warning("Non-confluent word found: %s", points_to_json(list(w.points)))
            counterexamples.append(word_to_json(w))
    logger.info("Ran %d confluence trials, %d non-confluent", trials, len(counterexamples))
    return {
        "trials": trials,
        "non_confluent": len(counterexamples),
        "counterexamples": counterexamples,
    }


def _validate(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    return {
        "valid": True,
        "ambient_dim": complex_.ambient_dim,
        "vertices": len(complex_.vertices),
        "simplices": len(complex_.simplices),
        "basepoint": complex_.basepoint,
    }


def _core(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    w = load_word(complex_, args.word, WordKind.PATH if args.path else None)
    reduced, trace = reduce_word(w, Rule.THIN)
    result: Dict[str, Any] = {
        "core": points_to_json(list(reduced.points)),
        "trivial": len(reduced) == 1,
    }
    if w.kind == WordKind.PATH:
        result["endpoint"] = format_point(reduced.points[-1])
    if args.trace:
        result["trace"] = [step.to_dict() for step in trace]
    return result


def _eq(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    a = load_word(complex_, args.a, WordKind.LOOP)
    b = load_word(complex_, args.b, WordKind.LOOP)
    return {"equal": eq(a, b)}


def _mul(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    a = core(load_word(complex_, args.a, WordKind.LOOP))
    b = core(load_word(complex_, args.b, WordKind.LOOP))
    return {"product": points_to_json(list(mul(a, b).points))}


def _inv(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    a = core(load_word(complex_, args.a, WordKind.LOOP))
    return {"inverse": points_to_json(list(inv(a).points))}


def _pow(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    a = core(load_word(complex_, args.a, WordKind.LOOP))
    return {"power": points_to_json(list(power(a, args.n).points)), "n": args.n}


def _len(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    w = load_word(complex_, args.word)
    return {"length": length(w), "filtration_index": w.filtration_index}


def _uniform(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    param = uniform_breakpoints(load_word(complex_, args.word))
    return {
        "breakpoints": list(param.breakpoints.breakpoints),
        "total_length": param.total_length,
    }


def _cyclic(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    free = cyclic_core(load_word(complex_, args.word, WordKind.LOOP))
    return {"cycle": points_to_json(list(free.cycle)), "trivial": free.is_trivial}


def _milnor(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    reduced = milnor_reduce(load_word(complex_, args.word, WordKind.LOOP))
    return {"reduced": points_to_json(list(reduced.points))}


def _w_reduce(args: argparse.Namespace) -> Dict[str, Any]:
    complex_ = load_complex(args.complex)
    reduced = w_reduce(load_word(complex_, args.word))
    return {"reduced": points_to_json(list(reduced.points))}


def _rand(args: argparse.Namespace) -> Dict[str, Any]:
    if args.steps < 0 or args.denom < 1:
        raise UsageError("--steps must be >= 0 and --denom >= 1")
    complex_ = load_complex(args.complex)
    return word_to_json(random_loop(complex_, args.steps, args.seed, args.denom))


def _fuzz(args: argparse.Namespace) -> Dict[str, Any]:
    if args.max_len < 1 or args.trials < 0 or args.denom < 1:
        raise UsageError("--max-len and --denom must be >= 1, --trials >= 0")
    complex_ = load_complex(args.complex)
    return fuzz_confluence(complex_, args.max_len, args.trials, args.seed, args.denom)


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with one subcommand per operation."""
    parser = _Parser(prog="thin-loops", description=__doc__)
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=DEFAULT_LOG_LEVEL)
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, *files: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name)
        sub.set_defaults(handler=handler, files=files)
        sub.add_argument("complex", type=Path)
        for f in files:
            sub.add_argument(f, type=Path)
        return sub

    command("validate", _validate)
    core_cmd = command("core", _core, "word")
    core_cmd.add_argument("--path", action="store_true", help="reduce as a path")
    core_cmd.add_argument("--trace", action="store_true", help="include the reduction trace")
    command("eq", _eq, "a", "b")
    command("mul", _mul, "a", "b")
    command("inv", _inv, "a")
    command("pow", _pow, "a").add_argument("n", type=int)
    command("len", _len, "word")
    command("uniform", _uniform, "word")
    command("cyclic", _cyclic, "word")
    command("milnor", _milnor, "word")
    command("w-reduce", _w_reduce, "word")

    rand = command("rand", _rand)
    rand.add_argument("--steps", type=int, required=True)
    rand.add_argument("--seed", type=int, required=True)
    rand.add_argument("--denom", type=int, default=DEFAULT_DENOM_BOUND)

    fuzz = command("fuzz-confluence", _fuzz)
    fuzz.add_argument("--max-len", type=int, default=MAX_ORACLE_LEN)
    fuzz.add_argument("--trials", type=int, required=True)
    fuzz.add_argument("--seed", type=int, required=True)
    fuzz.add_argument("--denom", type=int, default=DEFAULT_DENOM_BOUND)
    return parser


def run(argv: Sequence[str]) -> RunReport:
    """Execute one invocation and return its report; never raises for bad input."""
    command = argv[0] if argv else ""
    inputs: List[str] = []
    try:
        args = build_parser().parse_args(list(argv))
        command = args.command
        inputs = [str(args.complex)] + [str(getattr(args, f)) for f in args.files]
        return RunReport(command, inputs, args.handler(args), EXIT_OK)
    except UsageError as e:
        logger.error("Usage error: %s", e)
        return RunReport(command, inputs, e.to_dict(), EXIT_USAGE_ERROR)
    except ThinLoopError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return RunReport(command, inputs, e.to_dict(), EXIT_DOMAIN_ERROR)
    except ValidationError as e:
        logger.error("Validation failed: %s", e)
        errors = [{"loc": [str(x) for x in err["loc"]], "msg": err["msg"]} for err in e.errors()]
        result = {"error": "ValidationError", "message": str(e), "errors": errors}
        return RunReport(command, inputs, result, EXIT_DOMAIN_ERROR)
    except ArithmeticError as e:
        # Exact input whose lengths do not fit a float.
        logger.error("%s: %s", type(e).__name__, e)
        result = {"error": type(e).__name__, "message": str(e)}
        return RunReport(command, inputs, result, EXIT_DOMAIN_ERROR)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI, print the JSON document and return the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    level = DEFAULT_LOG_LEVEL
    if "--log-level" in argv:
        position = argv.index("--log-level")
        if position + 1 < len(argv) and argv[position + 1] in LOG_LEVELS:
            level = argv[position + 1]
    logging.basicConfig(stream=sys.stderr, level=level)

    report = run(argv)
    print(report.render())
    return report.exit_code


if __name__ == "__main__":  # pragma: nocover
    sys.exit(main())
