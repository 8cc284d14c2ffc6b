import pytest
from hypothesis import given, settings, strategies as st

from irrpoly.errors import DomainError
from irrpoly.inequal import PROPERTIES
from irrpoly.thresholds import format_remark_table, remark_table, scan_onset


@pytest.mark.parametrize("prop, q, n_max, onset", [
    ("root_ratio_decreasing", 2, 500, 14),
    ("root_ratio_decreasing", 5, 500, 6),
    ("ratio_increasing", 9, 388, 1),
])
def test_scan_examples(prop, q, n_max, onset):
    report = scan_onset(prop, q, n_max)
    assert report.onset == onset
    assert not report.caveat


def test_ratio_increasing_onset_for_q2():
    report = scan_onset("ratio_increasing", 2, 500)
    assert 9 <= report.onset <= 19
    assert report.onset == 19
    assert report.failures == [2, 4, 6, 8, 10, 12, 14, 16, 18]


def test_report_invariants():
    report = scan_onset("root_ratio_decreasing", 3, 60)
    assert report.onset == max(report.failures) + 1
    decider = PROPERTIES[report.property]
    assert all(not decider(n, 3).holds for n in report.failures)
    assert sum(report.method_counts.values()) == 60


def test_short_horizon_sets_caveat():
    rows = remark_table([2], 13)
    # last failure is the horizon itself, so the onset lands one past it
    assert rows[0].caveat and rows[0].onset == 14
    assert "horizon too short" in format_remark_table(rows)


def test_remark_table_small_q():
    rows = remark_table([2, 3, 4, 5], 100)
    assert [r.onset for r in rows] == [14, 8, 6, 6]
    assert all(r.match for r in rows)


def test_unknown_property_and_horizon():
    with pytest.raises(DomainError):
        scan_onset("bogus", 2, 10)
    with pytest.raises(DomainError):
        scan_onset("root_increasing", 2, 1)


def test_deterministic():
    assert scan_onset("root_increasing", 4, 80) == scan_onset("root_increasing", 4, 80)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(sorted(PROPERTIES)), st.sampled_from([2, 3, 4, 9]),
       st.integers(2, 80), st.integers(2, 80))
def test_failures_agree_on_shared_prefix(prop, q, a, b):
    ra, rb = scan_onset(prop, q, a), scan_onset(prop, q, b)
    m = min(a, b)
    assert [n for n in ra.failures if n <= m] == [n for n in rb.failures if n <= m]
