"""Acceptance gate: one test per criterion, each printing a verdict line.

The differential corpus (1000 seeded instances) is generated once and
shared by the equality, round-trip and counter criteria.
"""

import io
import math
import statistics
import time
from itertools import product
from random import Random

import pytest

from sbwt_lcs import (
    build_index,
    decode_spectrum,
    extended_spectrum,
    lcs_basic,
    lcs_linear,
    lcs_linear_endpoints,
    lcs_super,
    left_contract,
    load_index,
    lookup,
    naive_lcs,
    naive_subset_sequence,
    save_index,
)
from sbwt_lcs.index import ColexInterval
from sbwt_lcs.queries import SuffixInterval
from sbwt_lcs.stats import BuildStats

from conftest import (
    WORKED_LCS,
    WORKED_MATRIX_ROWS,
    WORKED_STRINGS,
    WORKED_SUBSETS,
    brute_l_intervals,
    random_instance,
    suffix_intervals,
)

SUITE_SIZE = 1000
SUITE_SEED = 1729


@pytest.fixture(scope="module")
def suite():
    """Run every construction path over the randomized corpus once.

    Returns per-criterion violation lists plus the wall time of the loop.
    """
    rng = Random(SUITE_SEED)
    mismatches = []
    round_trip_failures = []
    counter_violations = []
    started = time.perf_counter()
    for trial in range(SUITE_SIZE):
        strings, k = random_instance(rng)
        spectrum = extended_spectrum(strings, k)
        index = build_index(spectrum)
        tag = f"trial {trial} (k={k}, n={index.n})"

        reference = naive_lcs(spectrum)
        sb, ss, sl, se = BuildStats(), BuildStats(), BuildStats(), BuildStats()
        produced = [
            ("basic", lcs_basic(index, sb)),
            ("super", lcs_super(index, 2, ss)),
            ("linear", lcs_linear(index, sl)),
            ("linear-endpoints", lcs_linear_endpoints(index, se)),
        ]
        ref_bytes = reference.tobytes()
        for name, values in produced:
            if values.tobytes() != ref_bytes:
                mismatches.append(f"{tag}: {name} differs from naive")

        if decode_spectrum(index).kmers != spectrum.kmers:
            round_trip_failures.append(f"{tag}: decode(build) is not identity")
        buf = io.BytesIO()
        save_index(index, buf)
        buf.seek(0)
        if load_index(buf) != index:
            round_trip_failures.append(f"{tag}: load(save) is not identity")

        expected_phase2 = math.ceil(max(0, k - 2) / 2)
        checks = [
            (sb.rounds == k, f"basic rounds {sb.rounds} != k={k}"),
            (sb.lcs_writes == index.n, f"basic finalized {sb.lcs_writes} != n"),
            (ss.rounds == expected_phase2, f"super rounds {ss.rounds} != {expected_phase2}"),
            (sl.intervals_pushed <= index.n, f"linear pushed {sl.intervals_pushed} > n"),
            (sl.lcs_writes == index.n, f"linear wrote {sl.lcs_writes} != n"),
            (se.intervals_pushed <= index.n, f"endpoints pushed {se.intervals_pushed} > n"),
            (se.lcs_writes == index.n, f"endpoints wrote {se.lcs_writes} != n"),
        ]
        for ok, msg in checks:
            if not ok:
                counter_violations.append(f"{tag}: {msg}")
    elapsed = time.perf_counter() - started
    return {
        "mismatches": mismatches,
        "round_trips": round_trip_failures,
        "counters": counter_violations,
        "elapsed": elapsed,
    }


def test_c1_golden_example(report):
    started = time.perf_counter()
    spectrum = extended_spectrum(WORKED_STRINGS, 4)
    index = build_index(spectrum)
    problems = []
    if index.n != 18:
        problems.append(f"n={index.n}")
    if naive_subset_sequence(spectrum) != WORKED_SUBSETS:
        problems.append("subset sequence differs")
    for base, expected in WORKED_MATRIX_ROWS.items():
        row = index.matrix.row(base)
        got = "".join("1" if row.test(i) else "0" for i in range(index.n))
        if got != expected:
            problems.append(f"matrix row {base} differs")
    for name, fn in (
        ("naive", lambda: naive_lcs(spectrum)),
        ("basic", lambda: lcs_basic(index)),
        ("super", lambda: lcs_super(index, 2)),
        ("linear", lambda: lcs_linear(index)),
        ("linear-endpoints", lambda: lcs_linear_endpoints(index)),
    ):
        if list(fn()) != WORKED_LCS:
            problems.append(f"{name} LCS differs")
    elapsed = time.perf_counter() - started
    if elapsed >= 1.0:
        problems.append(f"took {elapsed:.2f}s")
    report("golden-example", not problems, f"{elapsed*1000:.0f} ms")
    assert not problems, problems


def test_c2_differential_suite(suite, report):
    ok = not suite["mismatches"] and suite["elapsed"] < 60.0
    report(
        "differential-suite",
        ok,
        f"{SUITE_SIZE} instances, {suite['elapsed']:.1f} s",
    )
    assert suite["elapsed"] < 60.0, f"suite took {suite['elapsed']:.1f}s"
    assert not suite["mismatches"], suite["mismatches"][:5]


def test_c3_round_trips(suite, report):
    report("round-trips", not suite["round_trips"])
    assert not suite["round_trips"], suite["round_trips"][:5]


def test_c4_lemma_suite(report):
    rng = Random(31337)
    violations = []
    instances = 0
    while instances < 30:
        strings, k = random_instance(rng, k=rng.choice([2, 3, 4, 5, 6, 8, 12, 31, 33, 63]))
        spectrum = extended_spectrum(strings, k)
        n = len(spectrum.kmers)
        if n > 2000:
            continue
        instances += 1
        values = lcs_linear(build_index(spectrum))
        intervals = suffix_intervals(spectrum)
        best = brute_l_intervals(intervals)
        for endpoint, (lo, rep) in best.items():
            if endpoint < n and values[endpoint] != len(rep) - 1:
                violations.append(
                    f"endpoint-value: k={k} endpoint={endpoint} rep={rep!r} "
                    f"lcs={values[endpoint]}"
                )
            if len(rep) >= 2:
                parent = rep[:-1]
                plo, phi = intervals[parent]
                if best[phi] != (plo, parent):
                    violations.append(f"suffix-closure: k={k} rep={rep!r}")
    report("lemma-suite", not violations, f"{instances} instances")
    assert not violations, violations[:5]


def test_c5_counter_bounds(suite, report):
    report("counter-bounds", not suite["counters"])
    assert not suite["counters"], suite["counters"][:5]


def test_c6_query_suite(report):
    problems = []
    # exhaustive membership for every k up to 8
    for k in range(1, 9):
        rng = Random(1000 + k)
        strings, _ = random_instance(rng, k=k)
        spectrum = extended_spectrum(strings, k)
        index = build_index(spectrum)
        ranks = {x: i + 1 for i, x in enumerate(spectrum.kmers)}
        for combo in product("ACGT", repeat=k):
            q = "".join(combo)
            if lookup(index, q) != ranks.get(q):
                problems.append(f"lookup k={k} {q}")
    # contraction against the brute-force interval oracle
    rng = Random(4242)
    checked = 0
    while checked < 8:
        strings, k = random_instance(rng, k=rng.randint(2, 8))
        spectrum = extended_spectrum(strings, k)
        if len(spectrum.kmers) > 2000:
            continue
        checked += 1
        values = naive_lcs(spectrum)
        intervals = suffix_intervals(spectrum)
        for suffix, (lo, hi) in intervals.items():
            for t in range(1, len(suffix) + 1):
                got = left_contract(
                    values, SuffixInterval(ColexInterval(lo, hi), len(suffix)), t
                )
                if (got.interval.lo, got.interval.hi) != intervals[suffix[t - 1 :]]:
                    problems.append(f"contract k={k} suffix={suffix!r} t={t}")
    report("query-suite", not problems)
    assert not problems, problems[:5]


def test_c7_scaling_trend(report):
    started = time.perf_counter()
    rng = Random(2024)
    text = "".join(rng.choice("ACGT") for _ in range(1_000_000 + 127))

    def median_ms(index, fn):
        times = []
        for _ in range(5):
            t0 = time.perf_counter()
            fn(index)
            times.append((time.perf_counter() - t0) * 1000.0)
        return statistics.median(times)

    medians = {}
    for k in (16, 128):
        index = build_index(extended_spectrum([text], k))
        assert abs(index.n - 1_000_000) < 5_000, f"n={index.n} strayed from 10^6"
        medians[("basic", k)] = median_ms(index, lcs_basic)
        medians[("linear", k)] = median_ms(index, lcs_linear)
        del index
    basic_ratio = medians[("basic", 128)] / medians[("basic", 16)]
    linear_ratio = medians[("linear", 128)] / medians[("linear", 16)]
    elapsed = time.perf_counter() - started
    ok = basic_ratio >= 3.0 and linear_ratio <= 2.0 and elapsed < 600.0
    report(
        "scaling-trend",
        ok,
        f"basic x{basic_ratio:.2f} (>=3.0), linear x{linear_ratio:.2f} (<=2.0), "
        f"{elapsed:.0f} s",
    )
    assert basic_ratio >= 3.0, f"basic ratio {basic_ratio:.2f}"
    assert linear_ratio <= 2.0, f"linear ratio {linear_ratio:.2f}"
    assert elapsed < 600.0, f"trend check took {elapsed:.0f}s"
