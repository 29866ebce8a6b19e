"""Batch command line: validate, build, recover, roundtrip, decompose, radcube, random, export.

Exit codes: 0 success, 1 parse error, 2 validation failure, 3 obstruction
(non-symmetric input, missing roots, degenerate pairing), 4 internal
checker failure.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path as FsPath

from mskit import formats
from mskit.brauer import ConfigurationError, build_algebra, build_relations
from mskit.decompose import DecompositionError, decompose_multiserial, verify_multiserial
from mskit.fields import FieldError, field_by_name
from mskit.modules import RepresentationError
from mskit.presentation import PresentationError
from mskit.quiver import QuiverError
from mskit.radcube import (
    GramDegeneracyError,
    GramError,
    extract_presentation,
    normalize_arr,
    validate_gram,
)
from mskit.randgen import random_configuration
from mskit.recovery import RecoveryError, config_isomorphic, recover_configuration

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_OBSTRUCTION = 3
EXIT_CHECKER = 4


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return FsPath(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliFailure(EXIT_PARSE, f"cannot read {path}: {exc}")


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        FsPath(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_by_kind(path: str, text: str):
    try:
        if path.endswith(".bcfg"):
            return formats.parse_configuration(text)
        if path.endswith(".qpres"):
            return formats.parse_presentation(text)
        if path.endswith(".gram"):
            return formats.parse_gram(text)
    except formats.ParseError as exc:
        raise CliFailure(EXIT_PARSE, f"{path}: {exc}")
    except (QuiverError, FieldError) as exc:
        raise CliFailure(EXIT_PARSE, f"{path}: {exc}")
    except (PresentationError, ConfigurationError) as exc:
        raise CliFailure(EXIT_VALIDATION, f"{path}: {exc}")
    raise CliFailure(EXIT_PARSE, f"{path}: unknown file extension")


def cmd_validate(args) -> int:
    path = args.path
    text = _read(path)
    if path.endswith(".qrep"):
        if not args.presentation:
            raise CliFailure(EXIT_PARSE, "validating a .qrep needs --presentation")
        pres = _parse_by_kind(args.presentation, _read(args.presentation))
        try:
            rep = formats.parse_representation(text, pres)
        except formats.ParseError as exc:
            raise CliFailure(EXIT_PARSE, f"{path}: {exc}")
        problems = rep.violations()
    elif path.endswith(".bcfg"):
        try:
            cfg = formats.parse_configuration(text)
        except formats.ParseError as exc:
            raise CliFailure(EXIT_PARSE, f"{path}: {exc}")
        problems = cfg.violations()
    elif path.endswith(".gram"):
        try:
            spec = formats.parse_gram(text)
        except (formats.ParseError, QuiverError, FieldError) as exc:
            raise CliFailure(EXIT_PARSE, f"{path}: {exc}")
        problems = validate_gram(spec)
    elif path.endswith(".qpres"):
        # construction already validates; surface the violation list on failure
        try:
            formats.parse_presentation(text)
            problems = []
        except formats.ParseError as exc:
            raise CliFailure(EXIT_PARSE, f"{path}: {exc}")
        except PresentationError as exc:
            problems = str(exc).split("; ")
    else:
        raise CliFailure(EXIT_PARSE, f"{path}: unknown file extension")
    if problems:
        for p in problems:
            print(f"VIOLATION: {p}")
        return EXIT_VALIDATION
    print("OK")
    return EXIT_OK


def cmd_build(args) -> int:
    cfg = _parse_by_kind(args.path, _read(args.path))
    try:
        cfg.validate()
        field = field_by_name(args.field)
        pres = build_algebra(cfg, field)
        rels = build_relations(cfg)
    except (ConfigurationError, PresentationError) as exc:
        raise CliFailure(EXIT_VALIDATION, str(exc))
    except FieldError as exc:
        raise CliFailure(EXIT_PARSE, str(exc))
    n1, n2, n3 = rels.counts()
    print(f"# relations: {n1} cycle-power differences, {n2} overflows, {n3} dead pairs")
    for p, q in rels.type_one:
        print(f"# type one: {p} - {q}")
    for p in rels.type_two:
        print(f"# type two: {p}")
    for a, b in rels.type_three:
        print(f"# type three: {a}{b}")
    _write_or_print(formats.print_presentation(pres), args.out)
    return EXIT_OK


def cmd_recover(args) -> int:
    pres = _parse_by_kind(args.path, _read(args.path))
    try:
        cfg = recover_configuration(pres)
    except RecoveryError as exc:
        raise CliFailure(EXIT_OBSTRUCTION, str(exc))
    _write_or_print(formats.print_configuration(cfg), args.out)
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    cfg = _parse_by_kind(args.path, _read(args.path))
    try:
        cfg.validate()
        field = field_by_name(args.field)
        pres = build_algebra(cfg, field)
        back = recover_configuration(pres)
    except ConfigurationError as exc:
        raise CliFailure(EXIT_VALIDATION, str(exc))
    except RecoveryError as exc:
        raise CliFailure(EXIT_CHECKER, f"recovery failed on a built algebra: {exc}")
    if not config_isomorphic(cfg, back):
        raise CliFailure(EXIT_CHECKER, "recovered configuration is not isomorphic")
    print("roundtrip OK: recovered configuration is isomorphic")
    return EXIT_OK


def cmd_decompose(args) -> int:
    pres = _parse_by_kind(args.pres, _read(args.pres))
    try:
        rep = formats.parse_representation(_read(args.rep), pres)
    except formats.ParseError as exc:
        raise CliFailure(EXIT_PARSE, f"{args.rep}: {exc}")
    problems = rep.violations()
    if problems:
        for p in problems:
            print(f"VIOLATION: {p}")
        return EXIT_VALIDATION
    try:
        parts = decompose_multiserial(rep)
    except DecompositionError as exc:
        raise CliFailure(EXIT_CHECKER, str(exc))
    for k, u in enumerate(parts, start=1):
        dims = ", ".join(f"{v}:{u.dim_at(v)}" for v in pres.quiver.vertices if u.dim_at(v))
        print(f"uniserial {k}: dim {u.dim()} ({dims})")
    verdict = verify_multiserial(rep, parts)
    print(f"verdict: {'PASS' if verdict else 'FAIL'}")
    return EXIT_OK if verdict else EXIT_CHECKER


def cmd_radcube(args) -> int:
    spec = _parse_by_kind(args.path, _read(args.path))
    problems = validate_gram(spec)
    if problems:
        for p in problems:
            print(f"VIOLATION: {p}")
        return EXIT_VALIDATION
    try:
        arr = normalize_arr(spec)
        pres = extract_presentation(spec, arr)
        cfg = recover_configuration(pres)
    except (GramDegeneracyError, RecoveryError) as exc:
        raise CliFailure(EXIT_OBSTRUCTION, str(exc))
    except GramError as exc:
        raise CliFailure(EXIT_CHECKER, str(exc))
    for block in arr.blocks:
        if len(block) == 1:
            print(f"# block: self-paired {block[0]}")
        else:
            print(f"# block: hyperbolic pair {block[0]}, {block[1]}")
    for ob in arr.obstructions:
        print(f"# obstruction: {ob}")
    print(f"# algebra dimension: {pres.dimension()}")
    _write_or_print(formats.print_configuration(cfg), args.out)
    return EXIT_OK


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    cfg = random_configuration(rng, args.polygons, args.maxval, args.maxmu)
    _write_or_print(formats.print_configuration(cfg), args.out)
    return EXIT_OK


def cmd_export(args) -> int:
    if args.path.endswith(".qrep"):
        if not args.presentation:
            raise CliFailure(EXIT_PARSE, "exporting a .qrep needs --presentation")
        pres = _parse_by_kind(args.presentation, _read(args.presentation))
        try:
            obj = formats.parse_representation(_read(args.path), pres)
        except formats.ParseError as exc:
            raise CliFailure(EXIT_PARSE, f"{args.path}: {exc}")
    else:
        obj = _parse_by_kind(args.path, _read(args.path))
    if args.dot:
        if hasattr(obj, "quiver"):
            quiver = obj.quiver
        elif hasattr(obj, "pres"):
            quiver = obj.pres.quiver
        else:
            from mskit.brauer import build_quiver

            obj.validate()
            quiver = build_quiver(obj)
        _write_or_print(formats.to_dot(quiver), args.out)
    else:
        _write_or_print(formats.to_json(obj), args.out)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mskit",
        description="quiver algebras in special shape: configurations, recovery, decomposition",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a .bcfg/.qpres/.qrep/.gram file")
    p.add_argument("path")
    p.add_argument("--presentation", help="presentation file for .qrep inputs")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build", help="build the algebra of a configuration")
    p.add_argument("path")
    p.add_argument("-o", "--out")
    p.add_argument("--field", default="Q")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("recover", help="recover a configuration from a presentation")
    p.add_argument("path")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("roundtrip", help="build then recover and compare")
    p.add_argument("path")
    p.add_argument("--field", default="Q")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("decompose", help="decompose a module radical into uniserials")
    p.add_argument("pres")
    p.add_argument("rep")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("radcube", help="configuration of a radical-cube-zero Gram spec")
    p.add_argument("path")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_radcube)

    p = sub.add_parser("random", help="generate a random valid configuration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--polygons", type=int, default=4)
    p.add_argument("--maxval", type=int, default=5)
    p.add_argument("--maxmu", type=int, default=3)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("export", help="export a file as DOT or JSON")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--dot", action="store_true")
    group.add_argument("--json", action="store_true")
    p.add_argument("--presentation", help="presentation file for .qrep inputs")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (RepresentationError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
