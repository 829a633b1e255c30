"""Command-line interface.

Polynomials are given as digit strings, lowest degree first: ``101001`` is
X^5 + X^2 + 1. Exit status is 0 on success, 1 when a check ran and failed,
2 on bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codes, enumerators, families, gray
from .codes import QuaternaryCode
from .gray import BinaryCode
from .z4poly import BinPoly, Z4Poly, default_primitive, generator_poly_g, hensel_lift


class InputError(Exception):
    pass


def _positive(s: str) -> int:
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e


def _load_code(path: str) -> QuaternaryCode | BinaryCode:
    text = _read_text(path)
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    try:
        if head == "Z4":
            return codes.parse_code(text)
        if head == "F2":
            return gray.parse_binary_code(text)
    except ValueError as e:
        raise InputError(f"parse failure in {path}: {e}") from e
    raise InputError(f"parse failure in {path}: unknown code format")


def _load_z4(path: str) -> QuaternaryCode:
    c = _load_code(path)
    if not isinstance(c, QuaternaryCode):
        raise InputError("expected a Z4 code file")
    return c


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _code_text(c) -> str:
    return codes.format_code(c) if isinstance(c, QuaternaryCode) else gray.format_binary_code(c)


def _h2(args) -> BinPoly | None:
    if getattr(args, "h2", None) is None:
        return None
    try:
        return BinPoly.from_digits(args.h2)
    except ValueError as e:
        raise InputError(str(e)) from e


def _enum_text(args, e) -> str:
    if args.format == "json":
        return json.dumps(e.to_json(), indent=2)
    return str(e)


def cmd_lift(args) -> int:
    h2 = _h2(args)
    try:
        h = hensel_lift(h2)
    except ValueError as e:
        raise InputError(str(e)) from e
    _emit(args, h.to_digits())
    return 0


def cmd_genpoly(args) -> int:
    try:
        if args.h is not None:
            h = Z4Poly.from_digits(args.h)
            m = h.degree
        else:
            m = args.m if args.m is not None else _h2(args).degree
            h2 = _h2(args) or default_primitive(m)
            h = hensel_lift(h2)
        g = generator_poly_g(h, m)
    except (ValueError, AttributeError) as e:
        raise InputError(str(e) if isinstance(e, ValueError) else "need --m, --h2 or --h") from e
    _emit(args, g.to_digits())
    return 0


def cmd_build(args) -> int:
    kind = args.kind
    try:
        if kind in ("kerdock", "preparata"):
            if args.m is None:
                raise InputError("--m is required")
            f = families.kerdock_quaternary if kind == "kerdock" else families.preparata_quaternary
            c = f(args.m, _h2(args))
        elif kind == "octacode":
            c = families.octacode()
        elif kind == "nr":
            c = families.nordstrom_robinson()
        elif kind == "rm":
            if args.m is None or args.r is None:
                raise InputError("--r and --m are required")
            c = gray.reed_muller(args.r, args.m)
        else:
            if args.g is None or args.n is None:
                raise InputError("--g and --n are required")
            c = codes.cyclic_code(Z4Poly.from_digits(args.g), args.n)
            if args.extend:
                c = codes.extend_parity(c)
    except ValueError as e:
        raise InputError(str(e)) from e
    _emit(args, _code_text(c))
    return 0


def cmd_dual(args) -> int:
    _emit(args, codes.format_code(codes.dual(_load_z4(args.input))))
    return 0


def cmd_gray(args) -> int:
    _emit(args, gray.format_binary_code(gray.gray_image(_load_z4(args.input), args.cap)))
    return 0


def cmd_swe(args) -> int:
    _emit(args, _enum_text(args, enumerators.swe(_load_z4(args.input), args.cap)))
    return 0


def cmd_hwe(args) -> int:
    c = _load_code(args.input)
    if isinstance(c, QuaternaryCode):
        e = families.gray_image_hwe(c, args.cap)
    else:
        e = enumerators.hwe_direct(c.codewords(args.cap), c.length)
    _emit(args, _enum_text(args, e))
    return 0


def cmd_macwilliams(args) -> int:
    try:
        e = enumerators.enumerator_from_json(_read_text(args.input))
    except (ValueError, KeyError) as ex:
        raise InputError(f"parse failure in {args.input}: {ex}") from ex
    size = args.size if args.size is not None else e.total
    if args.kind == "swe":
        if not isinstance(e, enumerators.TrivariateWeightEnumerator):
            raise InputError("expected a symmetrized (n0/n1/n2) enumerator")
        out = enumerators.macwilliams_swe(e, size)
    else:
        if not isinstance(e, enumerators.BivariateWeightEnumerator):
            raise InputError("expected a bivariate (x/y) enumerator")
        out = enumerators.binary_macwilliams(e, size)
    _emit(args, _enum_text(args, out))
    return 0


def cmd_mindist(args) -> int:
    c = _load_code(args.input)
    if isinstance(c, QuaternaryCode):
        d = codes.min_lee_weight_search(c, args.wmax, workers=args.workers)
    else:
        d = gray.min_distance_binary(c, args.cap, limit=args.wmax)
    _emit(args, str(d) if d is not None else f"distance > {args.wmax}")
    return 0


def cmd_span(args) -> int:
    _emit(args, gray.format_binary_code(gray.gray_image_linear_span(_load_z4(args.input))))
    return 0


def cmd_check(args) -> int:
    what = args.what
    if what == "family":
        if args.m is None:
            raise InputError("--m is required")
        rep = families.verify_family(args.m, _h2(args), workers=args.workers)
        _emit(args, json.dumps(rep.to_json(), indent=2) if args.format == "json" else str(rep))
        return 0 if rep.passed else 1
    if what == "trace-crosscheck":
        if args.m is None:
            raise InputError("--m is required")
        ok = families.trace_crosscheck(args.m, _h2(args))
    elif args.input is None:
        raise InputError("--input is required")
    elif what == "self-dual":
        c = _load_z4(args.input)
        ok = codes.equal_as_sets(c, codes.dual(c))
    elif what == "image-linear":
        ok = gray.image_is_linear(_load_z4(args.input))
    elif what == "swap":
        c = _load_code(args.input)
        if not (isinstance(c, BinaryCode) and c.linear):
            raise InputError("swap check needs a linear F2 code")
        ok = gray.swap_condition_holds(c)
    else:
        c = _load_code(args.input)
        if isinstance(c, QuaternaryCode):
            c = gray.gray_image(c, args.cap)
        ok = gray.is_distance_invariant(c, args.cap)
    if args.format == "json":
        _emit(args, json.dumps({"check": what, "pass": bool(ok)}))
    else:
        _emit(args, f"{what}: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write result here instead of stdout")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--cap", type=_positive, default=codes.DEFAULT_CAP,
                        help="largest code to enumerate")
    common.add_argument("--wmax", type=_positive, default=6, help="weight search limit")
    common.add_argument("--workers", type=_positive, default=1)

    p = argparse.ArgumentParser(prog="z4codes", description="Linear codes over Z4 and their Gray images")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("lift", parents=[common], help="Hensel lift a primitive binary polynomial")
    s.add_argument("--h2", required=True, help="binary digits, lowest degree first")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("genpoly", parents=[common], help="generator polynomial g(X)")
    s.add_argument("--m", type=int)
    s.add_argument("--h2")
    s.add_argument("--h", help="Z4 digits of an already lifted h")
    s.set_defaults(func=cmd_genpoly)

    s = sub.add_parser("build", parents=[common], help="build a code")
    s.add_argument("kind", choices=["kerdock", "preparata", "octacode", "nr", "rm", "cyclic"])
    s.add_argument("--m", type=int)
    s.add_argument("--h2")
    s.add_argument("--r", type=int)
    s.add_argument("--g", help="cyclic generator, Z4 digits")
    s.add_argument("--n", type=int)
    s.add_argument("--extend", action="store_true", help="append a parity coordinate")
    s.set_defaults(func=cmd_build)

    for name, func, helptext in [("dual", cmd_dual, "dual code"),
                                 ("gray", cmd_gray, "Gray image"),
                                 ("swe", cmd_swe, "symmetrized weight enumerator"),
                                 ("hwe", cmd_hwe, "Hamming weight enumerator of the binary image"),
                                 ("mindist", cmd_mindist, "minimum Lee / Hamming distance"),
                                 ("span", cmd_span, "binary linear span of the Gray image")]:
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("-i", "--input", required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("macwilliams", parents=[common], help="MacWilliams transform of an enumerator")
    s.add_argument("kind", choices=["swe", "binary"])
    s.add_argument("-i", "--input", required=True, help="enumerator JSON")
    s.add_argument("--size", type=_positive, help="code size (default: enumerator total)")
    s.set_defaults(func=cmd_macwilliams)

    s = sub.add_parser("check", parents=[common], help="run a verification")
    s.add_argument("what", choices=["self-dual", "image-linear", "swap", "distance-invariant",
                                    "family", "trace-crosscheck"])
    s.add_argument("-i", "--input")
    s.add_argument("--m", type=int)
    s.add_argument("--h2")
    s.set_defaults(func=cmd_check)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except codes.CodeTooLarge as e:
        print(f"error: cap exceeded: {e}", file=sys.stderr)
        return 2
    except enumerators.InvalidEnumerator as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: invalid input: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
