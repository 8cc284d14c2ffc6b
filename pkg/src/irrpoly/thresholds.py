"""Empirical onset indices for the monotonicity properties."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .count import PrimePower, order_of
from .errors import DomainError
from .inequal import DEFAULT_CONFIG, PROPERTIES, DecisionConfig

# onset of root-ratio decrease observed for small q; every larger q gives 4
EXPECTED_ROOT_RATIO_ONSET = {2: 14, 3: 8, 4: 6, 5: 6}
CAVEAT_FRACTION = 0.10


def expected_root_ratio_onset(q: int) -> int:
    return EXPECTED_ROOT_RATIO_ONSET.get(q, 4)


@dataclass
class OnsetReport:
    property: str
    q: int
    n_max: int
    onset: int
    failures: list[int]
    caveat: bool
    method_counts: dict = field(default_factory=dict)


def scan_onset(prop: str, q: int | PrimePower, n_max: int,
               config: DecisionConfig = DEFAULT_CONFIG) -> OnsetReport:
    """Evaluate ``prop`` at every n in [1, n_max].

    The onset is the smallest m such that the property holds on all of
    [m, n_max]; ``caveat`` is set when the last failure sits within 10% of
    the horizon, where a longer scan could plausibly move the onset.
    """
    if prop not in PROPERTIES:
        raise DomainError(f"unknown property {prop!r}; expected one of {sorted(PROPERTIES)}")
    if n_max < 2:
        raise DomainError(f"scan horizon must be >= 2, got {n_max}")
    decider = PROPERTIES[prop]
    q = order_of(q)
    failures = []
    methods: Counter = Counter({"exact": 0, "certified": 0})
    for n in range(1, n_max + 1):
        verdict = decider(n, q, config)
        methods[verdict.method] += 1
        if not verdict.holds:
            failures.append(n)
    onset = failures[-1] + 1 if failures else 1
    caveat = bool(failures) and failures[-1] >= n_max - CAVEAT_FRACTION * n_max
    return OnsetReport(prop, q, n_max, onset, failures, caveat, dict(methods))


@dataclass
class RemarkRow:
    q: int
    onset: int
    expected: int
    match: bool
    caveat: bool


def remark_table(q_set, n_max: int, config: DecisionConfig = DEFAULT_CONFIG) -> list[RemarkRow]:
    rows = []
    for q in q_set:
        report = scan_onset("root_ratio_decreasing", q, n_max, config)
        expected = expected_root_ratio_onset(report.q)
        rows.append(RemarkRow(report.q, report.onset, expected, report.onset == expected, report.caveat))
    return rows


def format_remark_table(rows: list[RemarkRow]) -> str:
    lines = [f"{'q':>4} {'onset':>6} {'expected':>8}  status"]
    for r in rows:
        status = "ok" if r.match else "MISMATCH"
        if r.caveat:
            status += " (horizon too short to trust)"
        lines.append(f"{r.q:>4} {r.onset:>6} {r.expected:>8}  {status}")
    return "\n".join(lines)
