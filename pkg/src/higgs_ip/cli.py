"""Command-line interface.

    higgs-ip compute --genus 2 --quantity ip_m
    higgs-ip verify --genus-range 2..30
    higgs-ip table --genus-range 2..5 --format csv

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 internal
arithmetic error (a division that had to be exact was not, or a series
coefficient that had to be an integer was not).
"""

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import engine
from .errors import ArithmeticFailure, CheckFailure, UsageError
from .polyring import Polynomial, format_latex, format_text
from .spaces import Genus

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_ARITHMETIC = 3

FORMATS = ("json", "csv", "latex", "text")


def parse_genus_range(text):
    """``"A..B"`` (inclusive) or a single ``"A"``."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad genus range {text!r}; expected A..B") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty genus range {text!r}")
    if a < 2:
        raise argparse.ArgumentTypeError(f"genus must be >= 2, got {a}")
    return list(range(a, b + 1))


def _genus_arg(text):
    try:
        return Genus(int(text))
    except (ValueError, UsageError):
        raise argparse.ArgumentTypeError(f"genus must be an integer >= 2, got {text!r}") from None


def _quantity_arg(text):
    if text not in engine.QUANTITIES:
        raise argparse.ArgumentTypeError(
            f"unknown quantity {text!r}; choose from {', '.join(engine.QUANTITIES)}")
    return text


def build_parser():
    parser = argparse.ArgumentParser(
        prog="higgs-ip",
        description="Intersection Poincaré polynomials of rank-2 Higgs moduli spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default=None,
                       help="default: text on a terminal, json when --output is given")
        p.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
        p.add_argument("--order", type=int, default=None,
                       help="truncation order for series quantities (default 6g-2)")

    p = sub.add_parser("compute", help="compute one quantity for one genus")
    p.add_argument("--genus", "-g", type=_genus_arg, required=True)
    p.add_argument("--quantity", "-q", type=_quantity_arg, default="ip_m")
    common(p)

    p = sub.add_parser("verify", help="run the cross-check suite over a genus range")
    p.add_argument("--genus-range", "-r", type=parse_genus_range, required=True)
    p.add_argument("--jobs", "-j", type=int, default=1)
    common(p)

    p = sub.add_parser("table", help="tabulate a quantity over a genus range")
    p.add_argument("--genus-range", "-r", type=parse_genus_range, required=True)
    p.add_argument("--quantity", "-q", type=_quantity_arg, default="ip_m")
    p.add_argument("--jobs", "-j", type=int, default=1)
    common(p)
    return parser


# --------------------------------------------------------------------------
# rendering

def report_csv(reports):
    width = max((len(r.coefficients) for r in reports), default=1) or 1
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["genus", "degree"] + [f"c{i}" for i in range(width)])
    for r in reports:
        w.writerow([r.genus, r.degree] + r.polynomial.padded(width))
    return buf.getvalue()


def _latex_line(r):
    lhs = "IP_{t}(\\mathbf{M})" if r.quantity_name in ("ip_m", "ip_m_closed") else r.quantity_name
    return f"\\item $g={r.genus}$ : ${lhs}={format_latex(r.polynomial)}$"


def report_latex(reports):
    lines = ["\\begin{itemize}"]
    for r in reports:
        lines.append(_latex_line(r))
    lines.append("\\end{itemize}")
    return "\n".join(lines) + "\n"


def report_text(reports, with_genus):
    lines = []
    for r in reports:
        prefix = f"g={r.genus}: " if with_genus else ""
        if r.parts is not None:
            lines.append(f"{prefix}plus: {format_text(Polynomial(r.parts['plus']))}")
            lines.append(f"{prefix}minus: {format_text(Polynomial(r.parts['minus']))}")
        else:
            lines.append(prefix + format_text(r.polynomial))
    return "\n".join(lines) + "\n"


def render_reports(reports, fmt, single):
    if fmt == "json":
        doc = reports[0].to_dict() if single else [r.to_dict() for r in reports]
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        return report_csv(reports)
    if fmt == "latex":
        return report_latex(reports)
    return report_text(reports, with_genus=not single)


def render_checks(results, fmt):
    if fmt == "json":
        doc = {
            "passed": all(r.passed for r in results),
            "results": [
                {"genus": r.genus, "check": r.name, "passed": r.passed, "detail": r.detail,
                 "index": r.index, "expected": None if r.expected is None else str(r.expected),
                 "found": None if r.found is None else str(r.found)}
                for r in results
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["genus", "check", "passed", "detail"])
        for r in results:
            w.writerow([r.genus, r.name, "PASS" if r.passed else "FAIL", r.detail])
        return buf.getvalue()
    lines = [str(r) for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results)} checks, {failed} failed")
    return "\n".join(lines) + "\n"


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _map(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


class _Compute:
    # picklable callable for the process pool
    def __init__(self, quantity, order):
        self.quantity, self.order = quantity, order

    def __call__(self, g):
        return engine.compute(self.quantity, g, self.order)


# --------------------------------------------------------------------------
# commands

def run_compute(args):
    report = engine.compute(args.quantity, args.genus, args.order)
    _emit(render_reports([report], args.format, single=True), args.output)
    return EXIT_OK


def run_verify(args):
    per_genus = _map(engine.verify_genus, args.genus_range, args.jobs)
    results = [r for rs in per_genus for r in rs]
    fmt = "text" if args.format in ("text", "latex") else args.format
    _emit(render_checks(results, fmt), args.output)
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(f"check failed: {r}", file=sys.stderr)
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def run_table(args):
    reports = _map(_Compute(args.quantity, args.order), args.genus_range, args.jobs)
    _emit(render_reports(reports, args.format, single=False), args.output)
    return EXIT_OK


COMMANDS = {"compute": run_compute, "verify": run_verify, "table": run_table}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    if args.format is None:
        args.format = "json" if args.output else "text"
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CheckFailure as exc:
        print(f"check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except ArithmeticFailure as exc:
        print(f"arithmetic error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ARITHMETIC
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
