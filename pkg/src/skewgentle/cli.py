"""Command-line front end.

Exit codes: 0 success (and ``Finite`` for ``decide``), 1 negative verdict
(``Infinite``, validation failure, not a brick, failed verification),
2 input error, 3 internal error. ``decide`` answers through the exit code on
purpose so shell pipelines can branch on representation type.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import RepresentationFiniteError, SkewGentleError
from .linrep import FieldSpec, end_dim, hom_dim, parse_representation, serialize_representation
from .polarization import polarize, serialize_polarized
from .presentation import build_qsp, parse_presentation, validate_skew_gentle
from .reduction import classify_case, minimize_band, quotient_support
from .strings import decide_rep_type, enumerate_strings, string_type
from .witness import realize, verify_witness, witness_family

OK, NEGATIVE, INPUT_ERROR, INTERNAL_ERROR = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _presentation(path: str, *, valid: bool = True):
    p = parse_presentation(_read(path))
    if valid:
        report = validate_skew_gentle(p)
        if not report.passed:
            raise InputError("not a valid skew-gentle presentation\n" + report.format().rstrip())
    return p


def cmd_validate(args) -> int:
    report = validate_skew_gentle(_presentation(args.file, valid=False))
    sys.stdout.write(report.format())
    return OK if report.passed else NEGATIVE


def cmd_polarize(args) -> int:
    sys.stdout.write(serialize_polarized(polarize(_presentation(args.file))))
    return OK


def decide_lines(p) -> list[str]:
    rt = decide_rep_type(p)
    lines = [f"verdict: {rt.verdict}"]
    if rt.finite:
        return lines
    m = minimize_band(p, rt.band)
    case = classify_case(quotient_support(p, m), m)
    lines += [f"band: {rt.band}", f"minimal: {m}", f"case: {case.tag}"]
    if case.s is not None:
        lines.append(f"s: {case.s}")
    if case.t is not None:
        lines.append(f"t: {case.t}")
    o = case.orientation
    if o is not None:
        lines.append(f"pinches: x={o.x} y={o.y}")
        if o.omega:
            lines.append(f"beta1: {'towards' if o.beta1_towards_x else 'away from'} x")
    return lines


def cmd_decide(args) -> int:
    lines = decide_lines(_presentation(args.file))
    print("\n".join(lines))
    return OK if lines[0] == "verdict: Finite" else NEGATIVE


def cmd_witness(args) -> int:
    p = _presentation(args.file)
    field = FieldSpec.parse(args.field)
    try:
        d = witness_family(p)
    except RepresentationFiniteError as exc:
        print(f"verdict: Finite\n{exc}")
        return NEGATIVE
    print(f"family: {d}")
    if args.nmax is not None:
        report = verify_witness(d, args.nmax, [field])
        print(report.format())
        return OK if report.passed else NEGATIVE
    m = realize(d, args.n, field)
    text = serialize_representation(m)
    e = end_dim(m)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    print(f"n={args.n} field={field} end_dim={e}")
    return OK if e == 1 else NEGATIVE


def cmd_hom(args) -> int:
    m = parse_representation(_read(args.m))
    n = parse_representation(_read(args.n))
    print(f"dim Hom = {hom_dim(m, n)}")
    return OK


def cmd_brick(args) -> int:
    m = parse_representation(_read(args.file))
    e = end_dim(m)
    print(f"end_dim: {e}\nbrick: {'yes' if e == 1 else 'no'}")
    return OK if e == 1 else NEGATIVE


def cmd_enumerate(args) -> int:
    p = _presentation(args.file)
    g = build_qsp(p)
    strings = enumerate_strings(g, args.max_len)
    print(f"count: {len(strings)}")
    for w in strings:
        print(f"{w} {string_type(w, g)}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skewgentle", description=__doc__.split("\n")[0])
    ap.add_argument("--format", choices=["text"], default="text", help="report format")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the skew-gentle axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("polarize", help="print the polarized quiver with its linear relations")
    s.add_argument("file")
    s.set_defaults(func=cmd_polarize)

    s = sub.add_parser("decide", help="representation type, minimal band and case")
    s.add_argument("file")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("witness", help="realize or verify the infinite brick family")
    s.add_argument("file")
    s.add_argument("--n", type=int, default=1, help="family member to realize")
    s.add_argument("--field", default="Q", help="Q or F<p>, p an odd prime")
    s.add_argument("--nmax", type=int, help="verify members 1..NMAX instead of printing one")
    s.add_argument("--out", help="write the representation here instead of stdout")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("hom", help="dimension of Hom(M, N)")
    s.add_argument("m")
    s.add_argument("n")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("brick", help="brick test for a representation file")
    s.add_argument("file")
    s.set_defaults(func=cmd_brick)

    s = sub.add_parser("enumerate", help="list strings with their (r,s) types")
    s.add_argument("file")
    s.add_argument("--max-len", type=int, default=4)
    s.set_defaults(func=cmd_enumerate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        # every input-side error of the package (parsing, characteristic 2,
        # preconditions) is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (SkewGentleError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
