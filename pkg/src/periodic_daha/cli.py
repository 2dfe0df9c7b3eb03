"""Command-line front end: ``periodic-daha {shapes,tableaux,verify,reconstruct,classify}``.

Exit codes: 0 success, 1 a verification failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from typing import Iterator, Optional, Sequence, TextIO

from .classification import classify, isomorphic
from .daha_module import (
    CheckResult,
    irreducibility_witness,
    parse_q,
    verify_defining_relations,
    verify_intertwiners,
    weight_decomposition_check,
)
from .diagrams import ShapePair, enumerate_shapes, validate
from .exceptions import DAHAError, InternalInvariant, InvalidInput
from .tableaux import ContentFunction, enumerate_standard, reconstruct

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2
SUITES = ("relations", "intertwiners", "weights", "irreducibility")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INVALID)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from exc


def _load_shape(path: str) -> ShapePair:
    shape = ShapePair.from_dict(_load_json(path))
    validate(shape)
    return shape


def _workers() -> int:
    raw = os.environ.get("DAHA_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError as exc:
        raise InvalidInput(f"DAHA_THREADS={raw!r} is not an integer") from exc
    return max(1, min(cap, os.cpu_count() or 1))


def _dump(obj, out: TextIO) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _require(args, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise InvalidInput(f"--{name.replace('_', '-')} is required for '{args.command}'")


def cmd_shapes(args, out: TextIO) -> int:
    _require(args, "n", "m", "ell")
    _dump([s.to_dict() for s in enumerate_shapes(args.n, args.m, args.ell)], out)
    return EXIT_OK


def cmd_tableaux(args, out: TextIO) -> int:
    _require(args, "shape")
    shape = _load_shape(args.shape[0])
    found = enumerate_standard(shape, args.max_length, args.r_range)
    _dump([t.to_dict() for t, _ in found], out)
    return EXIT_OK


def _suite_results(suite: str, shape: ShapePair, q, args, workers: int) -> Iterator[CheckResult]:
    if suite == "relations":
        yield from verify_defining_relations(shape, q, args.max_length,
                                             r_range=args.r_range, workers=workers)
    elif suite == "intertwiners":
        yield from verify_intertwiners(shape, q, args.max_length,
                                       r_range=args.r_range, workers=workers)
    elif suite == "weights":
        yield from weight_decomposition_check(shape, args.max_length, q,
                                              r_range=args.r_range, workers=workers)
    else:
        yield irreducibility_witness(shape, q, args.max_length, r_range=args.r_range).as_check()


def cmd_verify(args, out: TextIO) -> int:
    _require(args, "shape", "q")
    q = parse_q(args.q)
    shape = _load_shape(args.shape[0])
    workers = _workers()
    suites = SUITES if args.suite == "all" else (args.suite,)
    code = EXIT_OK
    for suite in suites:
        for result in _suite_results(suite, shape, q, args, workers):
            record = {"suite": suite, **result.to_dict()}
            out.write(json.dumps(record) + "\n")
            out.flush()
            if not result.passed:
                code = EXIT_FAIL
    return code


def cmd_reconstruct(args, out: TextIO) -> int:
    _require(args, "content")
    f = ContentFunction.from_dict(_load_json(args.content))
    shape, tableau, (p0, r) = reconstruct(f)
    _dump({"shape": shape.to_dict(), "tableau": tableau.to_dict(),
           "anchor": {"content": p0, "row": r}}, out)
    return EXIT_OK


def cmd_classify(args, out: TextIO) -> int:
    if args.shape:
        if len(args.shape) != 2:
            raise InvalidInput("classify takes exactly two --shape files to compare")
        a, b = (_load_shape(p) for p in args.shape)
        _dump(isomorphic(a, b).to_dict(), out)
    else:
        _require(args, "n", "kappa")
        _dump([s.to_dict() for s in classify(args.n, args.kappa)], out)
    return EXIT_OK


COMMANDS = {
    "shapes": cmd_shapes,
    "tableaux": cmd_tableaux,
    "verify": cmd_verify,
    "reconstruct": cmd_reconstruct,
    "classify": cmd_classify,
}


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="periodic-daha",
                     description="Calibrated DAHA modules from periodic skew shapes.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--n", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--ell", type=int)
    parser.add_argument("--kappa", type=int)
    parser.add_argument("--shape", action="append", metavar="FILE",
                        help="shape JSON file; give two to 'classify' for an isomorphism verdict")
    parser.add_argument("--content", metavar="FILE", help="content-function JSON file")
    parser.add_argument("--q", help='rational parameter as "num/den"')
    parser.add_argument("--max-length", type=_non_negative, default=3)
    parser.add_argument("--r-range", type=_non_negative, default=None)
    parser.add_argument("--suite", choices=SUITES + ("all",), default="all")
    parser.add_argument("--out", metavar="FILE")
    return parser


@contextlib.contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with _output(args.out) as out:
            return COMMANDS[args.command](args, out)
    except BrokenPipeError:
        # the reader went away before the report was complete
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_FAIL
    except InternalInvariant as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (DAHAError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
