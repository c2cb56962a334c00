"""Command-line front end: ``rnkit solve``, ``rnkit scan``, ``rnkit verify``.

stdout carries data only; diagnostics go to stderr and pass/fail is
reported through the exit status.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field

from rnkit import classifier, suite
from rnkit.classifier import Classification, Instance, InvalidInstance
from rnkit.qforms import DEFAULT_Z_BOUND

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DISCREPANCY = 3

FORMATS = ("text", "json", "csv")


def default_n_max() -> int:
    raw = os.environ.get("RNKIT_DEFAULT_NMAX")
    return int(raw) if raw else classifier.DEFAULT_N_MAX


@dataclass
class OutputRecord:
    """Serializable result of ``solve``; integers travel as decimal strings."""

    command: str
    d1: int
    d2: int
    n_max: int
    z_bound: int
    solutions: list[tuple[int, int, int, str, str]]  # x, m, n, case, provenance
    count: int
    theorem_b_exception: bool
    theorem_a_exception: bool
    discrepancy: bool
    consistent: bool
    elapsed_ms: int
    notes: list[str] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)

    @classmethod
    def from_classification(cls, c: Classification, command: str, elapsed_ms: int) -> OutputRecord:
        return cls(
            command=command,
            d1=c.instance.d1,
            d2=c.instance.d2,
            n_max=c.n_max,
            z_bound=c.z_bound,
            solutions=[(e.solution.x, e.solution.m, e.solution.n, e.case, e.provenance) for e in c.entries],
            count=c.count,
            theorem_b_exception=c.theorem_b_exception,
            theorem_a_exception=c.theorem_a_exception,
            discrepancy=c.has_discrepancy,
            consistent=c.consistent,
            elapsed_ms=elapsed_ms,
            notes=list(c.notes),
            discrepancies=list(c.discrepancies),
        )

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "instance": {"d1": str(self.d1), "d2": str(self.d2)},
            "bounds": {"n_max": str(self.n_max), "z_bound": str(self.z_bound)},
            "solutions": [
                {"x": str(x), "m": str(m), "n": str(n), "case": case, "provenance": prov}
                for x, m, n, case, prov in self.solutions
            ],
            "count": str(self.count),
            "verdicts": {
                "theorem_b_exception": self.theorem_b_exception,
                "theorem_a_exception": self.theorem_a_exception,
                "discrepancy": self.discrepancy,
                "consistent": self.consistent,
            },
            "elapsed_ms": str(self.elapsed_ms),
            "notes": self.notes,
            "discrepancies": self.discrepancies,
        }

    @classmethod
    def from_dict(cls, d: dict) -> OutputRecord:
        v = d["verdicts"]
        return cls(
            command=d["command"],
            d1=int(d["instance"]["d1"]),
            d2=int(d["instance"]["d2"]),
            n_max=int(d["bounds"]["n_max"]),
            z_bound=int(d["bounds"]["z_bound"]),
            solutions=[
                (int(s["x"]), int(s["m"]), int(s["n"]), s["case"], s.get("provenance", ""))
                for s in d["solutions"]
            ],
            count=int(d["count"]),
            theorem_b_exception=v["theorem_b_exception"],
            theorem_a_exception=v.get("theorem_a_exception", False),
            discrepancy=v["discrepancy"],
            consistent=v.get("consistent", True),
            elapsed_ms=int(d["elapsed_ms"]),
            notes=list(d.get("notes", [])),
            discrepancies=list(d.get("discrepancies", [])),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d1", "d2", "x", "m", "n", "case"])
        for x, m, n, case, _ in self.solutions:
            w.writerow([self.d1, self.d2, x, m, n, case])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"D1 x^2 + D2^m = 2^(n+2) with (D1, D2) = ({self.d1}, {self.d2}), n <= {self.n_max}"]
        for x, m, n, case, prov in self.solutions:
            lines.append(f"(x, m, n) = ({x}, {m}, {n})  {case}  [{prov}]")
        flags = []
        if self.theorem_b_exception:
            flags.append("Theorem B exception")
        if self.theorem_a_exception:
            flags.append("Theorem A exception")
        if not self.consistent:
            flags.append("INCONSISTENT with stated bound")
        suffix = f"  ({', '.join(flags)})" if flags else ""
        lines.append(f"N({self.d1}, {self.d2}) = {self.count}{suffix}")
        lines += [f"note: {n}" for n in self.notes]
        lines += [f"DISCREPANCY: {d}" for d in self.discrepancies]
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return {"json": lambda: self.to_json() + "\n", "csv": self.to_csv, "text": self.to_text}[fmt]()


def _elapsed_ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def cmd_solve(args, out=sys.stdout, err=sys.stderr) -> int:
    start = time.perf_counter()
    try:
        inst = Instance(args.d1, args.d2)
    except InvalidInstance as exc:
        print(f"invalid instance: {exc}", file=err)
        return EXIT_USAGE
    if args.n_max < 1 or args.z_bound < 1:
        print("invalid bounds: --n-max and --z-bound must be >= 1", file=err)
        return EXIT_USAGE
    c = classifier.classify(inst, args.n_max, args.z_bound)
    command = f"solve --d1 {args.d1} --d2 {args.d2} --n-max {args.n_max} --z-bound {args.z_bound}"
    rec = OutputRecord.from_classification(c, command, _elapsed_ms(start))
    out.write(rec.render(args.format))
    if c.has_discrepancy:
        for d in c.discrepancies:
            print(f"discrepancy: {d}", file=err)
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_scan(args, out=sys.stdout, err=sys.stderr) -> int:
    start = time.perf_counter()
    if args.d_max < 3:
        print("invalid bounds: --d-max must be >= 3", file=err)
        return EXIT_USAGE
    rows = classifier.scan(args.d_max, args.n_max, args.jobs)
    bad = [r for r in rows if not r.consistent]
    summary = f"summary: instances={len(rows)} inconsistent={len(bad)}"
    if args.format == "json":
        doc = {
            "command": f"scan --d-max {args.d_max} --n-max {args.n_max}",
            "bounds": {"d_max": str(args.d_max), "n_max": str(args.n_max)},
            "rows": [
                {
                    "d1": str(r.d1),
                    "d2": str(r.d2),
                    "count": str(r.count),
                    "exception": r.exception,
                    "consistent": r.consistent,
                }
                for r in rows
            ],
            "summary": {"instances": str(len(rows)), "inconsistent": str(len(bad))},
            "elapsed_ms": str(_elapsed_ms(start)),
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["d1", "d2", "count", "exception", "consistent"])
        for r in rows:
            w.writerow([r.d1, r.d2, r.count, int(r.exception), int(r.consistent)])
        print(summary, file=err)
    else:
        for r in rows:
            mark = " *" if r.exception else ""
            flag = "" if r.consistent else "  INCONSISTENT"
            out.write(f"({r.d1}, {r.d2}): {r.count}{mark}{flag}\n")
        out.write(summary + "\n")
    return EXIT_OK if not bad else EXIT_FAIL


def _parse_bound(text: str) -> tuple[str, object]:
    key, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    if value.lower() in ("true", "false"):
        return key, value.lower() == "true"
    try:
        return key, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bound {key} must be an integer") from None


def cmd_verify(args, out=sys.stdout, err=sys.stderr) -> int:
    start = time.perf_counter()
    if args.all == bool(args.lemma):
        print("give exactly one of --lemma or --all", file=err)
        return EXIT_USAGE
    ids = suite.LEMMA_IDS if args.all else args.lemma
    unknown = [i for i in ids if i not in suite.LEMMA_IDS]
    if unknown:
        print(f"unknown lemma id(s): {', '.join(unknown)}", file=err)
        return EXIT_USAGE
    overrides = dict(args.bound or [])
    reports = []
    for lemma in ids:
        try:
            reports.append(suite.run_lemma(lemma, **overrides))
        except TypeError as exc:
            print(f"bad bound override for {lemma}: {exc}", file=err)
            return EXIT_USAGE
    ok = all(r.confirmed for r in reports)
    if args.format == "json":
        doc = {
            "command": "verify " + ("--all" if args.all else " ".join(f"--lemma {i}" for i in ids)),
            "reports": [r.to_dict() for r in reports],
            "all_confirmed": ok,
            "elapsed_ms": str(_elapsed_ms(start)),
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in reports:
            found = ", ".join(str(t) for t in sorted(r.found)) or "none"
            out.write(f"Lemma {r.lemma}: {r.verdict}; found {found}; bounds {r.bounds}\n")
            if r.note:
                out.write(f"  note: {r.note}\n")
        out.write(f"{sum(r.confirmed for r in reports)}/{len(reports)} confirmed within bounds\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rnkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve and classify one instance")
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--z-bound", type=int, default=DEFAULT_Z_BOUND)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("scan", help="brute-force census of all instances up to --d-max")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run bounded lemma checks")
    p.add_argument("--lemma", action="append", metavar="ID")
    p.add_argument("--all", action="store_true")
    p.add_argument("--bound", action="append", type=_parse_bound, metavar="NAME=VALUE")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n_max", 0) is None:
        args.n_max = default_n_max()
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
