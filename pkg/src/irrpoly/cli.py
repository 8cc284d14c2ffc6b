"""Command-line front end.

Exit status: 0 when every requested check holds, 1 when at least one fails
(the failures are listed in the output), 2 on usage or domain errors.  A
completed ``scan`` exits 0; its failure list is what locates the onset.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import bounds
from .arith import least_prime_factor
from .count import DEFAULT_BIT_CAP, PrimePower, count_table, irreducible_count
from .errors import CapacityError, DomainError
from .inequal import PROPERTIES, DecisionConfig
from .oracle import SIEVE_CAP, build_field, sieve_irreducible_counts
from .thresholds import scan_onset

CHECK_ALIASES = {
    "rootmono": "root_increasing",
    "rootratio": "root_ratio_decreasing",
    "logconvex": "ratio_increasing",
}
LEMMA_CHECKS = ("lemma21", "lemma22", "lemma23", "lemma24", "pnchain", "smallqchain")
# smallest index each check is defined at
CHECK_MIN_N = {"lemma21": 2, "lemma22": 2, "lemma23": 5, "lemma24": 6, "pnchain": 6, "smallqchain": 389}


@dataclass
class Report:
    command: str
    q: Optional[int] = None
    checked_range: Optional[list[int]] = None
    failures: list[int] = field(default_factory=list)
    method_counts: dict = field(default_factory=lambda: {"exact": 0, "certified": 0})
    property: Optional[str] = None
    onset: Optional[int] = None
    caveat: Optional[bool] = None
    columns: list[str] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("property", "onset", "caveat"):
            if out[key] is None:
                del out[key]
        out["rows"] = [{k: _cell(v) for k, v in row.items()} for row in self.rows]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(**data)


def _cell(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    return value


def serialize_report(reports, fmt: str) -> bytes:
    if isinstance(reports, Report):
        reports = [reports]
    if fmt == "json":
        payload = [r.to_dict() for r in reports]
        text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(reports[0].columns)
        for r in reports:
            for row in r.rows:
                writer.writerow([_csv_cell(row[c]) for c in r.columns])
        text = buf.getvalue().rstrip("\n")
    else:
        text = "\n\n".join(_text(r) for r in reports)
    return (text + "\n").encode()


def _csv_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def _text(r: Report) -> str:
    if r.command == "count":
        return str(r.rows[0]["count"])
    head = [f"{r.command}" + (f" q={r.q}" if r.q is not None else "")]
    if r.property:
        head[0] += f" property={r.property}"
    if r.checked_range:
        head.append(f"checked n in {r.checked_range[0]}..{r.checked_range[1]}")
    if r.onset is not None:
        head.append(f"onset: {r.onset}" + (" (caveat: last failure near horizon)" if r.caveat else ""))
    if r.command in ("table", "oracle", "bounds"):
        head.append("  ".join(r.columns))
        head += ["  ".join(str(_csv_cell(row[c])) for c in r.columns) for row in r.rows]
    if r.command != "table":
        head.append(f"failures: {r.failures if r.failures else 'none'}")
        head.append(f"methods: exact={r.method_counts['exact']} certified={r.method_counts['certified']}")
    return "\n".join(head)


def parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use a..b") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or invalid range {text!r}")
    return lo, hi


def parse_q_set(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad q set {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int)
    common.add_argument("--q-set", type=parse_q_set)
    common.add_argument("--n", type=int)
    common.add_argument("--n-range", type=parse_range)
    common.add_argument("--n-max", type=int)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--precision-bits", type=int, default=128)
    common.add_argument("--exact-only", action="store_true")
    common.add_argument("--allow-nonprimepower", action="store_true")
    common.add_argument("--bit-cap", type=int, default=DEFAULT_BIT_CAP)

    parser = argparse.ArgumentParser(prog="irrpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("count", parents=[common], help="N_n(q) for one n")
    sub.add_parser("table", parents=[common], help="N_n(q) for n = 1..n_max")
    v = sub.add_parser("verify", parents=[common], help="check an inequality over a range of n")
    v.add_argument("--check", required=True, choices=sorted(CHECK_ALIASES) + list(LEMMA_CHECKS))
    s = sub.add_parser("scan", parents=[common], help="onset index of a monotonicity property")
    s.add_argument("--property", required=True, choices=sorted(CHECK_ALIASES) + sorted(PROPERTIES))
    sub.add_parser("bounds", parents=[common], help="error-term quantities per n")
    o = sub.add_parser("oracle", parents=[common], help="brute-force sieve counts")
    o.add_argument("--compare", action="store_true", help="add the formula column and check agreement")
    return parser


def _field_orders(args, warn_nonprimepower: bool) -> list[int]:
    qs = args.q_set if args.q_set else ([args.q] if args.q is not None else [])
    if not qs:
        raise DomainError("one of --q or --q-set is required")
    for q in qs:
        pp = PrimePower.of(q, permissive=args.allow_nonprimepower)
        if not pp.validated and warn_nonprimepower:
            print(f"warning: {q} is not a prime power; results have no field interpretation",
                  file=sys.stderr)
    return qs


def _n_range(args, default_lo: int = 1) -> tuple[int, int]:
    if args.n_range:
        return args.n_range
    if args.n is not None:
        return args.n, args.n
    if args.n_max is not None:
        return default_lo, args.n_max
    raise DomainError("one of --n, --n-range or --n-max is required")


def _config(args) -> DecisionConfig:
    return DecisionConfig(start_bits=args.precision_bits, exact_only=args.exact_only,
                          bit_cap=args.bit_cap)


def cmd_count(args) -> list[Report]:
    (q,) = _field_orders(args, False)[:1]
    if args.n is None:
        raise DomainError("--n is required")
    value = irreducible_count(args.n, q)
    return [Report("count", q, [args.n, args.n], columns=["n", "count"],
                   rows=[{"n": args.n, "count": value}])]


def cmd_table(args) -> list[Report]:
    out = []
    lo, hi = _n_range(args)
    for q in _field_orders(args, False):
        table = count_table(q, hi, args.bit_cap)
        rows = [{"n": n, "count": c} for n, c in table.rows() if n >= lo]
        out.append(Report("table", q, [lo, hi], columns=["n", "count"], rows=rows))
    return out


def _lemma_holds(check: str, n: int, q: int, precision: int) -> bool:
    if check == "lemma21":
        return bounds.check_eq21(n, q).holds and bounds.residual(n, q).c_bound_ok
    if check == "lemma22":
        return bounds.check_eq22(n, q, precision)
    if check == "lemma23":
        return all(bounds.check_eq23(n, q))
    if check == "lemma24":
        return bounds.check_eq24(n, q)
    if check == "pnchain":
        return all(bounds.check_pn_chain(n, q))
    return all(bounds.check_smallq_chain(n, q))


def cmd_verify(args) -> list[Report]:
    config = _config(args)
    lo, hi = _n_range(args)
    check = args.check
    out = []
    for q in _field_orders(args, True):
        methods = Counter({"exact": 0, "certified": 0})
        rows, failures = [], []
        if check in CHECK_ALIASES:
            decider = PROPERTIES[CHECK_ALIASES[check]]
            start = lo
        else:
            start = max(lo, CHECK_MIN_N[check])
            if check == "pnchain" and q < 9 or check == "smallqchain" and q > 8:
                raise DomainError(f"--check {check} does not apply to q={q}")
        if start > hi:
            raise DomainError(f"--check {check} is defined only for n >= {CHECK_MIN_N[check]}")
        for n in range(start, hi + 1):
            if check in CHECK_ALIASES:
                verdict = decider(n, q, config)
                holds, method = verdict.holds, verdict.method
            else:
                holds, method = _lemma_holds(check, n, q, args.precision_bits), "exact"
            methods[method] += 1
            rows.append({"q": q, "n": n, "holds": holds, "method": method})
            if not holds:
                failures.append(n)
        out.append(Report("verify", q, [start, hi], failures, dict(methods), property=check,
                          columns=["q", "n", "holds", "method"], rows=rows))
    return out


def cmd_scan(args) -> list[Report]:
    config = _config(args)
    prop = CHECK_ALIASES.get(args.property, args.property)
    if args.n_max is None:
        raise DomainError("--n-max is required")
    out = []
    for q in _field_orders(args, True):
        rep = scan_onset(prop, q, args.n_max, config)
        failed = set(rep.failures)
        rows = [{"q": q, "n": n, "holds": n not in failed} for n in range(1, args.n_max + 1)]
        out.append(Report("scan", q, [1, args.n_max], rep.failures, rep.method_counts,
                          property=prop, onset=rep.onset, caveat=rep.caveat,
                          columns=["q", "n", "holds"], rows=rows))
    return out


def cmd_bounds(args) -> list[Report]:
    lo, hi = _n_range(args, default_lo=2)
    lo = max(lo, 2)
    out = []
    for q in _field_orders(args, True):
        rows, failures = [], []
        for n in range(lo, hi + 1):
            r = bounds.residual(n, q)
            eq21 = bounds.check_eq21(n, q).holds
            eq22 = bounds.check_eq22(n, q, args.precision_bits)
            g_lo, g_hi = bounds.eq25_lower_bound(n, q, args.precision_bits)
            sign = "+" if g_lo > 0 else "-" if g_hi < 0 else "?"
            rows.append({"n": n, "p": least_prime_factor(n), "L": r.L,
                         "residual": f"{r.residual_num}/{r.residual_den}",
                         "eq21": eq21, "residual_bound": r.c_bound_ok, "eq22": eq22,
                         "gap_lower": f"{float(g_lo):.6e}", "gap_sign": sign})
            if not (eq21 and r.c_bound_ok and eq22):
                failures.append(n)
        out.append(Report("bounds", q, [lo, hi], failures, {"exact": hi - lo + 1, "certified": 0},
                          columns=list(rows[0]) if rows else [], rows=rows))
    return out


def cmd_oracle(args) -> list[Report]:
    out = []
    for q in _field_orders(args, False):
        p, k = PrimePower.of(q).p, PrimePower.of(q).k
        n_max = args.n_max if args.n_max is not None else _n_range(args)[1]
        sieve = sieve_irreducible_counts(build_field(p, k), n_max, SIEVE_CAP)
        columns = ["n", "sieve"]
        rows, failures = [], []
        for n, s in enumerate(sieve, start=1):
            row = {"n": n, "sieve": s}
            if args.compare:
                f = irreducible_count(n, q)
                row.update(formula=f, agree=(f == s))
                if f != s:
                    failures.append(n)
            rows.append(row)
        if args.compare:
            columns += ["formula", "agree"]
        out.append(Report("oracle", q, [1, n_max], failures, {"exact": n_max, "certified": 0},
                          columns=columns, rows=rows))
    return out


COMMANDS = {"count": cmd_count, "table": cmd_table, "verify": cmd_verify,
            "scan": cmd_scan, "bounds": cmd_bounds, "oracle": cmd_oracle}


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout.buffer
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "oracle" and args.allow_nonprimepower:
        print("error: the oracle needs a genuine prime-power field", file=sys.stderr)
        return 2
    try:
        reports = COMMANDS[args.command](args)
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    stdout.write(serialize_report(reports, args.format))
    stdout.flush()
    # a scan's failures are its data (they locate the onset), not a failed check
    if args.command == "scan":
        return 0
    return 1 if any(r.failures for r in reports) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
