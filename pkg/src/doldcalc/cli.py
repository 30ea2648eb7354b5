"""Command line interface.

Exit codes: 0 success, 1 not realizable, 2 usage or parse error, 3 I/O error.
The default worker count comes from ``DOLDCALC_JOBS``.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .doldcore import (
    DEFAULT_HORIZON_CAP,
    HorizonError,
    algebraic_periods,
    dold_to_spectrum,
    genus_of,
    periodic_point_bounds,
    spectrum_to_dold,
)
from .genus_opt import GenusWitness, min_genus_exact, min_genus_odd, upper_bound_genus
from .literals import (
    ParseError,
    format_dold,
    format_set,
    format_spectrum,
    parse_dold,
    parse_set,
    parse_spectrum,
)
from .numtheory import cyclotomic
from .spectra_enum import default_jobs, export_catalog, summarize
from .symplectic import char_poly, realize_spectrum, verify_realization

EXIT_OK, EXIT_UNREALIZABLE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


@dataclass(frozen=True)
class CliConfig:
    fmt: str = "text"
    jobs: int = 1
    horizon_cap: int = DEFAULT_HORIZON_CAP
    output: str | None = None

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("parallelism must be at least 1")
        if self.horizon_cap < 1:
            raise ValueError("horizon cap must be at least 1")


class UsageError(Exception):
    pass


def _emit(text: str, out) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _genus_text(r) -> str:
    try:
        return str(genus_of(r))
    except (ValueError, ArithmeticError):
        return "n/a"


def _describe(dold, spectrum) -> dict:
    problems = spectrum.violations()
    return {
        "spectrum": format_spectrum(spectrum),
        "dold": format_dold(dold),
        "genus": _genus_text(spectrum),
        "realizable": not problems,
        "diagnostics": problems,
        "ap": format_set(algebraic_periods(dold)),
        "mper": format_set(algebraic_periods(dold, odd_only=True)),
    }


def _render(info: dict, fmt: str, out) -> None:
    if fmt == "json":
        _emit(json.dumps(info), out)
        return
    for key, value in info.items():
        if isinstance(value, bool):
            value = "yes" if value else "no"
        elif isinstance(value, list):
            value = "; ".join(value) if value else "-"
        _emit(f"{key}: {value}", out)


def cmd_convert(args, cfg: CliConfig, out, err) -> int:
    if args.spectrum is not None:
        spectrum = parse_spectrum(args.spectrum)
        dold = spectrum_to_dold(spectrum)
    else:
        dold = parse_dold(args.dold)
        spectrum = dold_to_spectrum(dold)
    info = _describe(dold, spectrum)
    _render(info, cfg.fmt, out)
    if args.require_realizable and not info["realizable"]:
        return EXIT_UNREALIZABLE
    return EXIT_OK


def _summary_line(g: int, sp: int, ap: int, odd: int) -> str:
    return f"genus {g}: #Sp={sp} #AP={ap} #AP_odd={odd}"


def cmd_catalog(args, cfg: CliConfig, out, err) -> int:
    if args.genus < 1:
        raise UsageError("genus must be at least 1")
    aps: set[frozenset[int]] = set()
    odd: set[frozenset[int]] = set()

    def observe(rec):
        aps.add(rec.ap)
        odd.add(rec.mper)

    try:
        if cfg.output:
            with open(cfg.output, "wb") as sink:
                count = export_catalog(args.genus, cfg.fmt, sink, cfg.jobs, observe)
        else:
            sink = getattr(out, "buffer", None)
            if sink is None:
                sink = io.BytesIO()
                count = export_catalog(args.genus, cfg.fmt, sink, cfg.jobs, observe)
                out.write(sink.getvalue().decode("ascii"))
            else:
                out.flush()
                count = export_catalog(args.genus, cfg.fmt, sink, cfg.jobs, observe)
                sink.flush()
    except OSError as exc:
        _emit(f"error: {exc}", err)
        return EXIT_IO
    _emit(_summary_line(args.genus, count, len(aps), len(odd)), err)
    return EXIT_OK


def _witness_info(w: GenusWitness, target, odd: bool) -> dict:
    return {
        "target": format_set(target),
        "mode": "odd" if odd else "exact",
        "genus": w.genus,
        "dold": format_dold(w.dold),
        "spectrum": format_spectrum(w.spectrum),
        "ap": format_set(w.dold.support),
    }


def cmd_min_genus(args, cfg: CliConfig, out, err) -> int:
    target = parse_set(args.set)
    if not target:
        raise UsageError("target set must be nonempty")
    if args.odd:
        if any(n % 2 == 0 for n in target):
            raise UsageError("--odd needs a set of odd integers")
        w = min_genus_odd(target, cfg.jobs)
    elif args.upper_bound:
        w = upper_bound_genus(target)
    else:
        w = min_genus_exact(target)
    info = _witness_info(w, target, args.odd)
    if cfg.fmt == "json":
        _emit(json.dumps(info), out)
    else:
        for key, value in info.items():
            _emit(f"{key}: {value}", out)
    return EXIT_OK


def cmd_realize(args, cfg: CliConfig, out, err) -> int:
    if args.spectrum is not None:
        spectrum = parse_spectrum(args.spectrum)
    else:
        spectrum = dold_to_spectrum(parse_dold(args.dold))
    problems = spectrum.violations()
    if problems or not spectrum:
        _emit("not realizable: " + ("; ".join(problems) or "empty spectrum"), err)
        return EXIT_UNREALIZABLE
    A, omega = realize_spectrum(spectrum)
    try:
        report = verify_realization(A, omega, spectrum, cfg.horizon_cap)
    except HorizonError as exc:
        raise UsageError(str(exc)) from exc
    if cfg.fmt == "json":
        payload = {
            "spectrum": format_spectrum(spectrum),
            "matrix": [[str(x) for x in row] for row in A.rows],
            "form": omega.layout,
            "char_poly": str(char_poly(A)),
            "checks": {
                "symplectic": report.symplectic,
                "char_poly": report.char_poly,
                "lefschetz": report.lefschetz,
            },
        }
        _emit(json.dumps(payload), out)
    else:
        _emit(f"spectrum: {format_spectrum(spectrum)}", out)
        _emit(f"size: {A.shape[0]}", out)
        _emit(A.to_grid(), out)
        _emit("form: paired layout, blocks [[0,1],[-1,0]] on the diagonal", out)
        _emit(f"char_poly: {char_poly(A)}", out)
        for name in ("symplectic", "char_poly", "lefschetz"):
            _emit(f"check {name}: {'pass' if getattr(report, name) else 'FAIL'}", out)
    return EXIT_OK if report.ok else EXIT_UNREALIZABLE


def cmd_bounds(args, cfg: CliConfig, out, err) -> int:
    report = periodic_point_bounds(parse_dold(args.dold))
    if cfg.fmt == "json":
        _emit(json.dumps([{"n": b.n, "kind": b.kind, "bound": b.bound} for b in report]), out)
        return EXIT_OK
    _emit("n\tkind\tbound", out)
    for b in report:
        _emit(f"{b.n}\t{b.kind}\t{b.bound}", out)
    return EXIT_OK


def cmd_summary(args, cfg: CliConfig, out, err) -> int:
    if args.g_from < 1 or args.g_to < args.g_from:
        raise UsageError("need 1 <= g_from <= g_to")
    rows = [summarize(g, cfg.jobs) for g in range(args.g_from, args.g_to + 1)]
    if cfg.fmt == "json":
        _emit(
            json.dumps(
                [
                    {"genus": s.genus, "sp": s.count_spectra, "ap": s.count_ap_sets,
                     "ap_odd": s.count_mper_sets}
                    for s in rows
                ]
            ),
            out,
        )
    elif cfg.fmt == "csv":
        _emit("genus,sp,ap,ap_odd", out)
        for s in rows:
            _emit(f"{s.genus},{s.count_spectra},{s.count_ap_sets},{s.count_mper_sets}", out)
    else:
        _emit(f"{'g':>3} {'#Sp':>9} {'#AP':>8} {'#AP_odd':>8}", out)
        for s in rows:
            _emit(
                f"{s.genus:>3} {s.count_spectra:>9} {s.count_ap_sets:>8} {s.count_mper_sets:>8}",
                out,
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=None, help="worker processes")

    p = argparse.ArgumentParser(
        prog="doldcalc",
        description="Dold coefficients, root spectra and minimal genus computations.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("convert", parents=[common], help="convert between Dold sequence and spectrum")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--spectrum", help="multiset {3,4} or pairs 3:1,4:1")
    src.add_argument("--dold", help="pairs 15:-2 or dense tuple (3,1,-1,-1)")
    c.add_argument("--require-realizable", action="store_true")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_convert)

    c = sub.add_parser("catalog", parents=[common], help="all admissible data for one genus")
    c.add_argument("genus", type=int)
    c.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    c.add_argument("-o", "--output", help="output file (default: stdout)")
    c.set_defaults(func=cmd_catalog)

    c = sub.add_parser("min-genus", parents=[common], help="minimal genus for a set of periods")
    c.add_argument("set", help="target set, e.g. {1,2}")
    mode = c.add_mutually_exclusive_group()
    mode.add_argument("--odd", action="store_true", help="match only the odd periods")
    mode.add_argument("--upper-bound", action="store_true", help="closed-form bound only")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_min_genus)

    c = sub.add_parser("realize", parents=[common], help="integer symplectic matrix for a spectrum")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--spectrum")
    src.add_argument("--dold")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--horizon-cap", type=int, default=DEFAULT_HORIZON_CAP)
    c.set_defaults(func=cmd_realize)

    c = sub.add_parser("bounds", parents=[common], help="periodic point lower bounds")
    c.add_argument("dold")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_bounds)

    c = sub.add_parser("summary", parents=[common], help="counts per genus")
    c.add_argument("g_from", type=int)
    c.add_argument("g_to", type=int)
    c.add_argument("--format", choices=["text", "csv", "json"], default="text")
    c.set_defaults(func=cmd_summary)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = CliConfig(
            fmt=args.format,
            jobs=args.jobs if args.jobs is not None else default_jobs(),
            horizon_cap=getattr(args, "horizon_cap", DEFAULT_HORIZON_CAP),
            output=getattr(args, "output", None),
        )
        return args.func(args, cfg, out, err)
    except (ParseError, UsageError, ValueError) as exc:
        _emit(f"error: {exc}", err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
