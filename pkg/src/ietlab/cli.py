"""Command-line front end: generate, index, verify, experiment.

Exit codes: 0 success, 1 internal error, 2 invalid parameters or usage,
3 oracle mismatch, 4 a verification verdict failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import BlockParseError, InsufficientCoefficientsError, ParameterError
from .exactreal import CFExpansion, QuadraticReal, cf_expand, parse_quadratic
from .repetitions import brute_force_index, word_index_estimate
from .sturmian import (
    RotationParams,
    SturmianParams,
    block_decompose,
    characteristic_prefix,
    rotation_word,
    standard_word,
    sturmian_index_formula,
    sturmian_word,
)
from .threeiet import (
    bound_check,
    rotation_coding_image,
    threeiet_word,
    validate_params,
    verify_projections,
)
from .words import Word

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_ORACLE = 3
EXIT_VERDICT = 4

GENERATE_KINDS = ("sturmian", "rotation", "3iet", "characteristic", "standard")
VERIFY_CHECKS = ("abmp", "bounds", "blocks", "theorem3")
EXPERIMENT_KINDS = ("ell-sweep", "bounds-grid", "index-convergence")


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------

def _number(text: str, flag: str) -> QuadraticReal:
    try:
        return parse_quadratic(text)
    except ParameterError as exc:
        raise ParameterError(f"{flag}: {exc}") from None


def _number_list(text: str, flag: str) -> list[QuadraticReal]:
    items = [piece for piece in text.split(",") if piece.strip()]
    if not items:
        raise ParameterError(f"{flag}: empty list")
    return [_number(piece, flag) for piece in items]


def _cf_flag(text: str) -> CFExpansion:
    try:
        values = [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError:
        raise ParameterError("--cf: coefficients must be integers") from None
    if not values or values[0] != 0:
        raise ParameterError("--cf: the leading coefficient must be 0 (values in (0,1))")
    if any(a < 1 for a in values[1:]):
        raise ParameterError("--cf: partial quotients after the first must be >= 1")
    if len(values) < 2:
        raise ParameterError("--cf: at least one partial quotient is required")
    return CFExpansion.from_quotients(values[1:])


def _int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError:
        raise ParameterError(f"{flag}: entries must be integers") from None
    if not values:
        raise ParameterError(f"{flag}: empty list")
    return values


def _require(args, names: dict[str, str], kind: str):
    missing = [flag for attr, flag in names.items() if getattr(args, attr) is None]
    if missing:
        raise ParameterError(f"{kind} requires {', '.join(missing)}")


def _fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _fraction_decimal(value: Fraction) -> str:
    return QuadraticReal(value.numerator, 0, 0, value.denominator).decimal()


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="ascii", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(header: list[str], rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(
            ["true" if v is True else "false" if v is False else str(v) for v in (row[h] for h in header)]
        )
    return buffer.getvalue()


def _rows_to_json(kind: str, header: list[str], rows: list[dict]) -> str:
    ordered = [{h: row[h] for h in header} for row in rows]
    return json.dumps({"experiment": kind, "rows": ordered}) + "\n"


# ---------------------------------------------------------------------------
# word construction shared by generate/index
# ---------------------------------------------------------------------------

def _build_word(args) -> Word:
    kind = args.kind
    if kind == "sturmian":
        _require(args, {"eps": "--eps", "length": "-N"}, "generate sturmian")
        params = SturmianParams(_number(args.eps, "--eps"), _number(args.x0, "--x0"))
        return sturmian_word(params, args.length)
    if kind == "rotation":
        _require(args, {"alpha": "--alpha", "beta": "--beta", "length": "-N"}, "generate rotation")
        params = RotationParams(
            _number(args.alpha, "--alpha"),
            _number(args.beta, "--beta"),
            _number(args.x0, "--x0"),
        )
        return rotation_word(params, args.length)
    if kind == "3iet":
        _require(args, {"eps": "--eps", "ell": "--ell", "length": "-N"}, "generate 3iet")
        params = validate_params(
            _number(args.eps, "--eps"),
            _number(args.ell, "--ell"),
            _number(args.x0, "--x0"),
        )
        return threeiet_word(params, args.length)
    if kind == "characteristic":
        _require(args, {"cf": "--cf", "length": "-N"}, "generate characteristic")
        return characteristic_prefix(_cf_flag(args.cf), args.length)
    if kind == "standard":
        _require(args, {"cf": "--cf", "level": "--level"}, "generate standard")
        return standard_word(_cf_flag(args.cf), args.level)
    raise ParameterError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_generate(args) -> int:
    word = _build_word(args)
    _emit(word.text + "\n", args.out)
    return EXIT_OK


def _cmd_index(args) -> int:
    sources = [args.word is not None, args.file is not None, args.kind is not None]
    if sum(sources) != 1:
        raise ParameterError("index needs exactly one of --word, --file or --kind")
    if args.word is not None:
        word = Word.from_text(args.word)
    elif args.file is not None:
        try:
            with open(args.file, "r", encoding="ascii") as handle:
                lines = [line.strip() for line in handle if line.strip()]
        except UnicodeDecodeError:
            raise ParameterError(f"{args.file}: words must be plain ASCII") from None
        if not lines:
            raise ParameterError(f"{args.file}: no word found")
        word = Word.from_text(lines[0])
    else:
        word = _build_word(args)
    report = word_index_estimate(word)
    _emit(report.to_json() + "\n", args.out)
    if args.oracle:
        reference = brute_force_index(word)
        if reference != report.index_estimate:
            print(
                f"oracle mismatch: estimate {report.index_estimate} "
                f"!= brute force {reference}",
                file=sys.stderr,
            )
            return EXIT_ORACLE
    return EXIT_OK


def _verify_theorem3(args) -> tuple[dict, bool]:
    if args.eps is not None:
        eps = _number(args.eps, "--eps")
        cf = cf_expand(eps, max(args.nmax or 1, 8))
    elif args.cf is not None:
        cf = _cf_flag(args.cf)
    else:
        raise ParameterError("verify theorem3 requires --eps or --cf")
    length = args.length or 2000
    n_max = args.nmax
    if n_max is None:
        # extend until the convergent denominator covers the prefix length
        n_max = 1
        q_prev, q_cur = 1, cf.coefficient(1)
        try:
            while q_cur < length:
                n_max += 1
                q_prev, q_cur = q_cur, cf.coefficient(n_max) * q_cur + q_prev
            cf.coefficient(n_max + 1)
        except InsufficientCoefficientsError:
            n_max = len(cf.quotients) - 1
    try:
        if n_max < 0:
            raise InsufficientCoefficientsError("empty expansion")
        cf.coefficient(n_max + 1)
    except InsufficientCoefficientsError:
        raise ParameterError("not enough continued-fraction coefficients") from None
    formula = sturmian_index_formula(cf, n_max)
    prefix = characteristic_prefix(cf, length)
    estimate = word_index_estimate(prefix).index_estimate
    passed = estimate <= formula.truncated_sup
    report = {
        "check": "theorem3",
        "prefix_length": length,
        "index_num": estimate.numerator,
        "index_den": estimate.denominator,
        "index_decimal": _fraction_decimal(estimate),
        "formula": formula.to_json_dict(),
        "estimate_leq_sup": passed,
        "passed": passed,
    }
    return report, passed


def _cmd_verify(args) -> int:
    if args.check == "abmp":
        _require(args, {"eps": "--eps", "ell": "--ell", "length": "-N"}, "verify abmp")
        params = validate_params(
            _number(args.eps, "--eps"),
            _number(args.ell, "--ell"),
            _number(args.x0, "--x0"),
        )
        projection = verify_projections(params, args.length, args.nmax or 10)
        report = {"check": "abmp", **projection.to_json_dict()}
        passed = projection.passed
    elif args.check == "bounds":
        _require(args, {"eps": "--eps", "ell": "--ell", "length": "-N"}, "verify bounds")
        params = validate_params(
            _number(args.eps, "--eps"),
            _number(args.ell, "--ell"),
            _number(args.x0, "--x0"),
        )
        bound = bound_check(params, args.length)
        report = {"check": "bounds", **bound.to_json_dict()}
        passed = bound.passed
    elif args.check == "blocks":
        _require(args, {"cf": "--cf", "level": "--level", "length": "-N"}, "verify blocks")
        cf = _cf_flag(args.cf)
        prefix = characteristic_prefix(cf, args.length)
        try:
            parse = block_decompose(prefix, cf, args.level)
        except BlockParseError as exc:
            report = {"check": "blocks", "error": str(exc), "passed": False}
            _emit(json.dumps(report) + "\n", args.out)
            return EXIT_VERDICT
        round_trip = parse.reconstruct() == prefix.text[: parse.consumed]
        passed = round_trip and parse.tail_length < len(parse.long_block)
        report = {"check": "blocks", **parse.to_json_dict(), "round_trip": round_trip,
                  "passed": passed}
    else:
        report, passed = _verify_theorem3(args)
    _emit(json.dumps(report) + "\n", args.out)
    return EXIT_OK if passed else EXIT_VERDICT


def _experiment_ell_sweep(args) -> tuple[list[str], list[dict]]:
    _require(args, {"eps": "--eps", "ell": "--ell", "length": "-N"}, "ell-sweep")
    eps = _number(args.eps, "--eps")
    ells = _number_list(args.ell, "--ell")
    x0 = _number(args.x0, "--x0")
    grid = [validate_params(eps, ell, x0) for ell in ells]
    header = [
        "ell", "ell_decimal",
        "b_frequency", "b_frequency_decimal",
        "word_index", "word_index_decimal",
        "collapsed_index", "collapsed_index_decimal",
    ]
    rows = []
    for params in grid:
        word = threeiet_word(params, args.length)
        frequency = Fraction(word.count("B"), len(word))
        own = word_index_estimate(word).index_estimate
        collapsed = word_index_estimate(rotation_coding_image(word, 0)).index_estimate
        rows.append({
            "ell": str(params.ell),
            "ell_decimal": params.ell.decimal(),
            "b_frequency": _fraction_str(frequency),
            "b_frequency_decimal": _fraction_decimal(frequency),
            "word_index": _fraction_str(own),
            "word_index_decimal": _fraction_decimal(own),
            "collapsed_index": _fraction_str(collapsed),
            "collapsed_index_decimal": _fraction_decimal(collapsed),
        })
    return header, rows


def _experiment_bounds_grid(args) -> tuple[list[str], list[dict]]:
    _require(args, {"eps": "--eps", "ell": "--ell", "length": "-N"}, "bounds-grid")
    eps_values = _number_list(args.eps, "--eps")
    ells = _number_list(args.ell, "--ell")
    x0 = _number(args.x0, "--x0")
    grid = [validate_params(eps, ell, x0) for eps in eps_values for ell in ells]
    header = [
        "eps", "ell", "largest_coefficient", "lower", "upper",
        "index", "index_decimal", "max_integer_power",
        "upper_ok", "power_ok", "lower_reached",
    ]
    rows = []
    for params in grid:
        bound = bound_check(params, args.length)
        rows.append({
            "eps": str(params.epsilon),
            "ell": str(params.ell),
            "largest_coefficient": bound.largest_coefficient,
            "lower": bound.lower,
            "upper": bound.upper,
            "index": _fraction_str(bound.index_estimate),
            "index_decimal": _fraction_decimal(bound.index_estimate),
            "max_integer_power": bound.max_power,
            "upper_ok": bound.upper_ok,
            "power_ok": bound.power_ok,
            "lower_reached": bound.lower_reached,
        })
    return header, rows


def _experiment_index_convergence(args) -> tuple[list[str], list[dict]]:
    _require(args, {"eps": "--eps", "ell": "--ell", "lengths": "--lengths"}, "index-convergence")
    eps = _number(args.eps, "--eps")
    ell = _number(args.ell, "--ell")
    x0 = _number(args.x0, "--x0")
    lengths = _int_list(args.lengths, "--lengths")
    if any(n < 1 for n in lengths):
        raise ParameterError("--lengths: entries must be >= 1")
    params = validate_params(eps, ell, x0)
    cf = cf_expand(params.epsilon, 8)
    if not cf.is_periodic:
        raise ParameterError("the continued-fraction period of epsilon was not found")
    largest, _ = cf.max_coefficient()
    lower = largest // 2
    word = threeiet_word(params, max(lengths))
    header = ["length", "index", "index_decimal", "reached_lower"]
    rows = []
    for n in lengths:
        estimate = word_index_estimate(word[:n]).index_estimate
        rows.append({
            "length": n,
            "index": _fraction_str(estimate),
            "index_decimal": _fraction_decimal(estimate),
            "reached_lower": estimate >= lower,
        })
    return header, rows


def _cmd_experiment(args) -> int:
    if args.experiment == "ell-sweep":
        header, rows = _experiment_ell_sweep(args)
    elif args.experiment == "bounds-grid":
        header, rows = _experiment_bounds_grid(args)
    else:
        header, rows = _experiment_index_convergence(args)
    if args.format == "csv":
        _emit(_rows_to_csv(header, rows), args.out)
    else:
        _emit(_rows_to_json(args.experiment, header, rows), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def _add_common_value_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--eps", help="slope literal, e.g. '(-1+1*sqrt(5))/2'")
    parser.add_argument("--ell", help="interval length literal (or comma list)")
    parser.add_argument("--alpha", help="rotation literal")
    parser.add_argument("--beta", help="cut point literal")
    parser.add_argument("--x0", default="0", help="starting point literal (default 0)")
    parser.add_argument("--cf", help="continued fraction '0,a1,a2,...'")
    parser.add_argument("--level", type=int, help="standard-word level n")
    parser.add_argument("-N", "--length", dest="length", type=int, help="prefix length")
    parser.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ietlab",
        description="Exact generation and repetition analysis of interval-exchange words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="print a generated word")
    p_gen.add_argument("kind", choices=GENERATE_KINDS)
    _add_common_value_flags(p_gen)
    p_gen.set_defaults(handler=_cmd_generate)

    p_idx = sub.add_parser("index", help="repetition index report as JSON")
    p_idx.add_argument("--word", help="the word itself, as text")
    p_idx.add_argument("--file", help="file containing one word per line (first used)")
    p_idx.add_argument("--kind", choices=GENERATE_KINDS, help="generate the word instead")
    p_idx.add_argument("--oracle", action="store_true",
                       help="cross-check with the brute-force oracle (exit 3 on mismatch)")
    _add_common_value_flags(p_idx)
    p_idx.set_defaults(handler=_cmd_index)

    p_ver = sub.add_parser("verify", help="run a verification check, exit 4 on failure")
    p_ver.add_argument("check", choices=VERIFY_CHECKS)
    p_ver.add_argument("--nmax", type=int, help="depth of certificates or formula terms")
    _add_common_value_flags(p_ver)
    p_ver.set_defaults(handler=_cmd_verify)

    p_exp = sub.add_parser("experiment", help="parameter sweeps with CSV/JSON output")
    p_exp.add_argument("experiment", choices=EXPERIMENT_KINDS)
    p_exp.add_argument("--lengths", help="comma list of prefix lengths")
    p_exp.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common_value_flags(p_exp)
    p_exp.set_defaults(handler=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - internal failure contract
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
