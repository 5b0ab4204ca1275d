"""Command-line interface.

Subcommands:
    survey     classify primes up to x and print experimental vs conjectured ratios
    table      reproduce one of the reference tables (g1, hpm, g3)
    density    evaluate a closed-form density exactly and numerically
    classify   one-line classification record for a single prime
    wieferich  scan a Wieferich set up to a limit
    bernoulli  exact Bernoulli number
    genocchi   exact Genocchi-type integer

Exit codes: 0 success, 1 computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import classify as classify_mod
from . import density as density_mod
from .exactseq import bernoulli, genocchi_number
from .survey import (
    SurveyConfig,
    SurveyError,
    emit_table,
    run_survey,
    run_table,
)

_DENSITY_KINDS = (
    "g",
    "primroot",
    "hminus",
    "hminus-total",
    "near-1",
    "near-2",
    "sq2",
    "rho",
    "g-conj",
    "hminus-conj",
    "hplus-conj",
    "g-lower",
    "hminus-lower",
    "hplus-lower",
)

_VARIANT_ALIASES = {"g": "G", "hminus": "Hminus", "hplus": "Hplus"}


def _parse_progression(text: str) -> tuple[int, int]:
    try:
        d_str, a_str = text.replace(":", ",").split(",")
        return int(d_str), int(a_str)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"progression must look like 'd,a', got {text!r}"
        ) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genocchi",
        description="Irregular-prime surveys, congruence oracles, and exact densities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sv = sub.add_parser("survey", help="classify primes up to x and print ratio rows")
    sv.add_argument("--ell", type=int, required=True)
    sv.add_argument("--x", type=int, required=True)
    sv.add_argument(
        "--progression",
        type=_parse_progression,
        action="append",
        metavar="D,A",
        help="restrict to primes = A mod D (repeatable; default all primes)",
    )
    sv.add_argument(
        "--variant",
        action="append",
        choices=sorted(_VARIANT_ALIASES),
        help="sequence family to count (repeatable; default g)",
    )
    sv.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sv.add_argument("--threads", type=int, default=0)
    sv.add_argument("--cache-dir", default=None)
    sv.add_argument("--quiet", action="store_true")
    sv.add_argument("--deterministic", action="store_true")

    tb = sub.add_parser("table", help="reproduce a reference table")
    tb.add_argument("--which", choices=("g1", "hpm", "g3"), required=True)
    tb.add_argument("--x", type=int, default=100_000)
    tb.add_argument("--format", choices=("text", "csv", "json"), default="text")
    tb.add_argument("--threads", type=int, default=0)
    tb.add_argument("--cache-dir", default=None)
    tb.add_argument("--quiet", action="store_true")
    tb.add_argument("--deterministic", action="store_true")

    de = sub.add_parser("density", help="evaluate a closed-form density")
    de.add_argument("--kind", choices=_DENSITY_KINDS, required=True)
    de.add_argument("--ell", type=int, required=True)
    de.add_argument("--d", type=int, default=1)
    de.add_argument("--a", type=int, default=1)

    cl = sub.add_parser("classify", help="classification record for one prime")
    cl.add_argument("--ell", type=int, required=True)
    cl.add_argument("--p", type=int, required=True)

    wf = sub.add_parser("wieferich", help="scan a Wieferich set")
    wf.add_argument("--ell", type=int, required=True)
    wf.add_argument("--limit", type=int, required=True)
    wf.add_argument("--variant", choices=("base", "plus", "minus"), default="base")

    bn = sub.add_parser("bernoulli", help="exact Bernoulli number")
    bn.add_argument("--n", type=int, required=True)

    gn = sub.add_parser("genocchi", help="exact Genocchi-type integer")
    gn.add_argument("--ell", type=int, required=True)
    gn.add_argument("--n", type=int, required=True)

    return parser


def _cmd_survey(args) -> int:
    cfg = SurveyConfig(
        ell=args.ell,
        x=args.x,
        progressions=tuple(args.progression or [(1, 1)]),
        variants=tuple(_VARIANT_ALIASES[v] for v in (args.variant or ["g"])),
        threads=args.threads,
        cache_dir=args.cache_dir,
        output_format=args.format,
        quiet=args.quiet,
        deterministic=args.deterministic,
    )
    rows = run_survey(cfg)
    sys.stdout.write(emit_table("survey", rows, args.format, args.deterministic))
    return 0


def _cmd_table(args) -> int:
    rows = run_table(
        args.which,
        args.x,
        threads=args.threads,
        cache_dir=args.cache_dir,
        quiet=args.quiet,
        deterministic=args.deterministic,
    )
    sys.stdout.write(emit_table(args.which, rows, args.format, args.deterministic))
    return 0


def _cmd_density(args) -> int:
    kind, ell, d, a = args.kind, args.ell, args.d, args.a
    linear = {
        "g": lambda: density_mod.delta_g(ell, d, a),
        "primroot": lambda: density_mod.alpha_primroot(ell, d, a),
        "hminus": lambda: density_mod.alpha_minus(ell, d, a),
        "hminus-total": lambda: density_mod.delta_minus_total(ell, d, a),
        "near-1": lambda: density_mod.delta_near_primroot(ell, 1),
        "near-2": lambda: density_mod.delta_near_primroot(ell, 2),
        "sq2": lambda: density_mod.delta_ell_sq_2(ell),
    }
    ratio = {
        "g-conj": lambda: density_mod.conjectured_ratio("G" if (d, a) == (1, 1) else "G_progression", ell, d, a),
        "hminus-conj": lambda: density_mod.conjectured_ratio("Hminus", ell, d, a),
        "hplus-conj": lambda: density_mod.conjectured_ratio("Hplus", ell, d, a),
        "g-lower": lambda: density_mod.lower_bound_ratio("G" if (d, a) == (1, 1) else "G_progression", ell, d, a),
        "hminus-lower": lambda: density_mod.lower_bound_ratio("Hminus", ell, d, a),
        "hplus-lower": lambda: density_mod.lower_bound_ratio("Hplus", ell, d, a),
    }
    if kind in linear:
        value = linear[kind]()
        print(f"{value} = {value.value():.9f}")
    elif kind == "rho":
        rho = density_mod.rho_plus_one(ell)
        print(f"{rho} = {float(rho):.9f}")
    else:
        print(f"{ratio[kind]():.9f}")
    return 0


def _cmd_classify(args) -> int:
    p = args.p
    b = bool(classify_mod.b_irregular_pairs(p)) if p >= 5 else False
    c = classify_mod.classify_prime(args.ell, p, b)
    print(
        f"p={c.p} ell={c.ell} ord={c.ord_ell} ord_sq={c.ord_ell_sq} "
        f"jacobi={c.jacobi_ell_p} B={int(c.b_irregular)} G={int(c.g_irregular)} "
        f"H={int(c.h_irregular)} H-={int(c.h_minus_irregular)} H+={int(c.h_plus_irregular)}"
    )
    return 0


def _cmd_wieferich(args) -> int:
    hits = classify_mod.wieferich_search(args.ell, args.limit, args.variant)
    print(" ".join(map(str, hits)) if hits else "(none)")
    return 0


def _cmd_bernoulli(args) -> int:
    print(bernoulli(args.n))
    return 0


def _cmd_genocchi(args) -> int:
    print(genocchi_number(args.ell, args.n))
    return 0


_COMMANDS = {
    "survey": _cmd_survey,
    "table": _cmd_table,
    "density": _cmd_density,
    "classify": _cmd_classify,
    "wieferich": _cmd_wieferich,
    "bernoulli": _cmd_bernoulli,
    "genocchi": _cmd_genocchi,
}


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, SurveyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
