"""Acceptance gate: one test per deliverable criterion.

Each test prints exactly one pass/fail line (visible with -s or -rA, and
mirrored by the test verdict itself).  Frozen tuples in this file come
from one-time independent oracle runs: digit-sum recounts for the
histograms, exact bigint repunits for the lambda values, and scalar
recomputation for the coverage witnesses.
"""

import time
from fractions import Fraction
from math import gcd, log

import numpy as np

import factexp as fx

GRID = [
    (p, m)
    for p in fx.primes_up_to(100)
    if p > 2
    for m in range(2, 51)
    if m % p != 0
]

BUILD_CAP = 1 << 20  # acceptance builds value tables up to this base


def _line(num: int, title: str, ok: bool, detail: str) -> None:
    print(f"criterion {num} [{title}]: {'PASS' if ok else 'FAIL'} ({detail})")


def repunit(p: int, j: int) -> int:
    return (p**j - 1) // (p - 1)


def test_criterion_1_exact_identity_suite():
    t0 = time.monotonic()
    top = 10**5
    problems = []
    for p in (2, 3, 5, 7, 11, 13, 47):
        ns = np.arange(top + 1, dtype=np.int64)
        floor_sum = fx.exponent_range(0, top + 1, p)
        digit_total = np.zeros(top + 1, dtype=np.int64)
        weight_total = np.zeros(top + 1, dtype=np.int64)
        pj, w = 1, 0  # w runs through (p^j - 1)/(p - 1)
        while pj <= top:
            d = (ns // pj) % p
            digit_total += d
            weight_total += d * w
            pj, w = pj * p, w * p + 1
        if not np.array_equal(floor_sum, weight_total):
            problems.append(f"digit-weight mismatch at p={p}")
        if not np.array_equal(floor_sum, (ns - digit_total) // (p - 1)):
            problems.append(f"digit-sum mismatch at p={p}")
        for n in (0, 1, p - 1, p, min(p**3 + 1, top), top):
            if fx.legendre_exponent(n, p) != int(floor_sum[n]):
                problems.append(f"scalar mismatch at n={n}, p={p}")
            if (n - fx.digit_sum(n, p)) // (p - 1) != int(floor_sum[n]):
                problems.append(f"scalar digit-sum mismatch at n={n}, p={p}")
    elapsed = time.monotonic() - t0
    ok = not problems and elapsed < 5.0
    _line(1, "exact identity suite", ok,
          f"7 primes, n <= 1e5, three formulas, {elapsed:.2f}s" +
          (f"; problems: {problems[:3]}" if problems else ""))
    assert ok, problems


def test_criterion_2_construction_congruence():
    pairs = [(3, 2), (5, 2), (7, 2), (3, 5), (5, 3), (7, 4), (13, 10)]
    t0 = time.monotonic()
    failures = []
    for p, m in pairs:
        rep = fx.verify_congruence(p, m, 10**6)
        if not rep.passed:
            failures.append((p, m, rep.counterexample))
    elapsed = time.monotonic() - t0
    ok = not failures and elapsed < 30.0
    _line(2, "construction congruence", ok,
          f"7 pairs, n < 1e6 each, {elapsed:.1f}s" +
          (f"; counterexamples: {failures}" if failures else ""))
    assert ok, failures


def test_criterion_3_grid_invariants():
    problems = []
    entries = []

    for p, m in GRID:
        cert = fx.lambda_index(p, m)
        # minimality re-proved with exact bigint repunits
        if any(repunit(p, j) % m == 0 for j in range(1, cert.lam)):
            problems.append(f"lambda({p},{m}) not minimal")
        if repunit(p, cert.lam) % m != 0:
            problems.append(f"lambda({p},{m}) not divisible")
        if not 2 <= cert.lam <= cert.mu <= m:
            problems.append(f"bound chain broken for ({p},{m})")

        q = p**cert.lam
        if q <= BUILD_CAP:
            built = fx.build_function(p, m)
            if fx.derive_invariants(built.f, m) != (0, 1):
                problems.append(f"invariants off for ({p},{m})")
            entries.append(fx.KimEntry.make(built.f, m))
        else:
            # too big to tabulate; evaluate the defining gcd on a subset.
            # F = f(1) exactly, and a unit gcd over any subset of the
            # d-defining terms forces d = 1 over the full list.
            weights = []
            w = 0
            for _ in range(cert.lam):
                weights.append(w)
                w = w * p + 1
            weights = tuple(weights)
            F = fx.folded_value(1, p, weights)
            if F != 0:
                problems.append(f"F != 0 for ({p},{m})")
            d = gcd(m, (q - 1) * F)
            for r in (2, 3, p, p + 1):
                d = gcd(d, fx.folded_value(r, p, weights) - r * F)
            if d != 1:
                problems.append(f"d != 1 for ({p},{m})")

    # joint hypotheses for every distinct-prime pair of tabulated entries
    pair_count = 0
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            a, b = entries[i], entries[j]
            if gcd(a.q, b.q) != 1:
                continue  # same underlying prime
            pair_count += 1
            report = fx.check_system(fx.KimSystem((a, b)))
            if not report.all_pass:
                problems.append(f"pair hypothesis failed: q={a.q},{b.q} m={a.m},{b.m}")

    # one wide system: every odd prime below 100 at modulus 2
    wide = fx.KimSystem(
        tuple(fx.KimEntry.make(fx.build_function(p, 2).f, 2) for p in fx.primes_up_to(100) if p > 2)
    )
    if not fx.check_system(wide).all_pass:
        problems.append("24-entry parity system failed")
    # sanity: a repeated prime must be flagged, not silently accepted
    clash = fx.KimSystem((entries[0], entries[0]))
    if fx.check_system(clash).all_pass:
        problems.append("repeated base not flagged")

    ok = not problems
    _line(3, "construction grid invariants", ok,
          f"{len(GRID)} grid entries, {len(entries)} tabulated, "
          f"{pair_count} distinct-prime pairs" +
          (f"; problems: {problems[:5]}" if problems else ""))
    assert ok, problems[:20]


def test_criterion_4_error_exponents():
    problems = []
    if fx.construction_error_exponent(1, 3, 2) != Fraction(1, 349920):
        problems.append("delta(1,3,2) wrong")
    exact_cmp = 0
    overflowed = 0
    for p, m in GRID:
        lam = fx.lambda_index(p, m).lam
        try:
            delta = fx.construction_error_exponent(1, p, m)
        except OverflowError:
            overflowed += 1
            if lam > m:  # the comparison reduces to lambda <= m
                problems.append(f"lambda > m at ({p},{m})")
            continue
        exact_cmp += 1
        if delta > fx.kim_error_exponent(1, p**lam, m):
            problems.append(f"delta exceeds system bound at ({p},{m})")
    ok = not problems
    _line(4, "error exponents", ok,
          f"delta(1,3,2) = 1/349920; {exact_cmp} exact comparisons, "
          f"{overflowed} entries past 64-bit rationals reduced to lambda <= m" +
          (f"; problems: {problems[:5]}" if problems else ""))
    assert ok, problems


FROZEN_1E7 = (1251760, 1251645, 1250344, 1248493, 1248881, 1249589, 1251420, 1247868)
FROZEN_1E4 = (1336, 1313, 1263, 1205, 1226, 1175, 1240, 1242)


def test_criterion_5_equidistribution_desk_scale():
    t0 = time.monotonic()
    big = fx.joint_histogram(
        fx.ScanConfig(primes=(3, 5, 7), mods=(2, 2, 2), limit=10**7), threads=1
    )
    small = fx.joint_histogram(
        fx.ScanConfig(primes=(3, 5, 7), mods=(2, 2, 2), limit=10**4), threads=1
    )
    elapsed = time.monotonic() - t0
    rep_big = fx.discrepancy(big)
    rep_small = fx.discrepancy(small)
    problems = []
    if big.counts != FROZEN_1E7:
        problems.append("1e7 counts drifted from frozen fixture")
    if small.counts != FROZEN_1E4:
        problems.append("1e4 counts drifted from frozen fixture")
    if not rep_big.max_rel_dev <= 0.02:
        problems.append(f"rel dev {rep_big.max_rel_dev:.4f} > 0.02")
    if not rep_big.max_rel_dev < rep_small.max_rel_dev:
        problems.append("deviation did not shrink with N")
    if elapsed >= 60.0:
        problems.append(f"too slow: {elapsed:.1f}s")
    ok = not problems
    _line(5, "equidistribution desk scale", ok,
          f"rel dev {rep_big.max_rel_dev:.5f} at 1e7 vs {rep_small.max_rel_dev:.5f} "
          f"at 1e4, single-threaded {elapsed:.1f}s" +
          (f"; problems: {problems}" if problems else ""))
    assert ok, problems


def test_criterion_6_single_congruence_balance():
    hist = fx.joint_histogram(fx.ScanConfig(primes=(3,), mods=(2,), limit=10**6))
    even = hist.count_of((0,))
    deviation = abs(even - 500000)
    ok = even == 500607 and deviation <= 10**4
    _line(6, "single congruence balance", ok,
          f"count(e_3 even, n < 1e6) = {even}, |dev| = {deviation} <= 1e4")
    assert ok, even


COVERAGE_PRIMES = (3, 5, 7, 11, 13)
FROZEN_WITNESSES = (
    0, 3, 6, 5, 10, 27, 7, 174, 63, 104, 55, 33, 11, 12, 56, 57,
    48, 45, 69, 44, 24, 22, 187, 119, 20, 14, 15, 42, 39, 13, 40, 185,
)
N32 = 188  # smallest limit below which all 32 parity patterns appear


def test_criterion_7_parity_pattern_coverage():
    report = fx.pattern_coverage(COVERAGE_PRIMES, N32)
    problems = []
    if not report.complete:
        problems.append("not all patterns covered at N32")
    if report.minimal != FROZEN_WITNESSES:
        problems.append("witness table drifted from frozen fixture")
    if report.covered_prefix != 5:
        problems.append(f"covered prefix {report.covered_prefix} != 5")
    if fx.pattern_coverage(COVERAGE_PRIMES, N32 - 1).complete:
        problems.append("N32 is not minimal")
    # each witness re-proved by scalar recomputation
    for code, n in enumerate(report.minimal):
        for i, p in enumerate(COVERAGE_PRIMES):
            if fx.legendre_exponent(n, p) % 2 != (code >> i) & 1:
                problems.append(f"witness {n} wrong for pattern {code:05b}")
    ok = not problems
    _line(7, "parity pattern coverage", ok,
          f"32 patterns over {COVERAGE_PRIMES} all witnessed below {N32}" +
          (f"; problems: {problems[:3]}" if problems else ""))
    assert ok, problems


def test_criterion_8_deterministic_aggregation():
    problems = []
    runs = 0
    # the full chunk-size set at desk scale, including single-element chunks
    small_n = 10**4
    reference = None
    for chunk in (1, 10**3, 10**6, small_n):
        for threads in (1, 8):
            counts = fx.joint_histogram(
                fx.ScanConfig(primes=(3, 5, 7), mods=(2, 2, 2), limit=small_n,
                              chunk_size=chunk),
                threads=threads,
            ).counts
            runs += 1
            if reference is None:
                reference = counts
            elif counts != reference:
                problems.append(f"divergence at chunk={chunk}, threads={threads}")
    # above 1e6 the 1e6-chunking genuinely differs from whole-range
    big_n = 1_500_000
    reference = None
    for chunk in (10**3, 10**6, big_n):
        for threads in (1, 8):
            counts = fx.joint_histogram(
                fx.ScanConfig(primes=(3, 5, 7), mods=(2, 2, 2), limit=big_n,
                              chunk_size=chunk),
                threads=threads,
            ).counts
            runs += 1
            if reference is None:
                reference = counts
            elif counts != reference:
                problems.append(f"divergence at N=1.5e6, chunk={chunk}, threads={threads}")
    ok = not problems
    _line(8, "deterministic aggregation", ok,
          f"{runs} runs across chunk sizes and 1 vs 8 threads, all bit-identical" +
          (f"; problems: {problems}" if problems else ""))
    assert ok, problems


def test_criterion_9_coverage_formulas():
    problems = []
    if fx.coverage_depth(10**100, 1.0) != 0:
        problems.append("depth at 1e100 not 0")
    depths = [fx.coverage_depth(10**e, 20.0) for e in (300, 1000, 3000, 10**4, 10**5, 10**6)]
    if any(a > b for a, b in zip(depths, depths[1:])):
        problems.append(f"depth not monotone on grid: {depths}")
    threshold = fx.coverage_log_threshold(fx.CoverageParams(c1=1.0, c3=1.0, k=1), 3)
    expected = 349920 * log(18)  # 480 * 3^6 * (ln 2 + 2 ln 3)
    if not abs(threshold - expected) <= 1e-6 * expected:
        problems.append(f"threshold {threshold} != {expected}")
    # the witness bound itself is astronomically out of reach: even at
    # k = 1 every-pattern coverage is only guaranteed past e^(1e6), so
    # these formulas are verified at formula level, never by scanning
    if not threshold > 10**6:
        problems.append("threshold unexpectedly small")
    ok = not problems
    _line(9, "coverage formulas", ok,
          f"depth grid {depths}, log-threshold {threshold:.1f} > 1e6 "
          "(formula level only; no scan can reach it)" +
          (f"; problems: {problems}" if problems else ""))
    assert ok, problems
