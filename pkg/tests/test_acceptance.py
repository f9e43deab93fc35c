"""Acceptance suite: eleven exhaustive criteria, one test and one
printed [PASS]/[FAIL] line each.  Integer results are compared exactly;
complex sums within 1e-6 * q.  Each criterion also enforces its wall-time
cap (JIT warmup happens once in a fixture and is not charged).

Criterion 9 contains a sub-assertion that is genuinely false at q = 16
(every b a sum of two nonzero cubes; the five nonzero cubes are
counterexamples, since the count bound q - 2 sqrt(q) - 2 = 6 degenerates
to the axis-solution count there).  It is asserted as stated and is the
suite's one expected failure; see notes in the repository README.
"""

import time
from contextlib import contextmanager
from math import sqrt

import numpy as np
import pytest

from trslab import chars
from trslab import codes as cd
from trslab import deepholes as dh
from trslab import kernels
from trslab.checks import RunConfig, run_check
from trslab.field import make_field


@pytest.fixture(scope="module", autouse=True)
def _warm_kernels():
    kernels.warmup(make_field(2, 2).tables())


@contextmanager
def criterion(num: int, desc: str, cap_s: float):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] criterion {num:2d}: {desc}")
        raise
    elapsed = time.perf_counter() - t0
    print(f"[PASS] criterion {num:2d}: {desc} ({elapsed:.1f}s / cap {cap_s:.0f}s)")
    assert elapsed < cap_s, f"criterion {num} exceeded its {cap_s}s budget: {elapsed:.1f}s"


def test_c01_covering_radius():
    with criterion(1, "covering radius equals n - k (q in {4,8}, full grid + 20 random sets)", 60):
        r = run_check("thm4")
        assert r.verdict == "PASS", r.witnesses[:5]
        assert r.counts["instances"] == (1 * 3 + 5 * 7) + 40


def test_c02_standard_deep_holes():
    with criterion(2, "standard syndromes accepted by the subset criterion up to q = 16", 60):
        r = run_check("thm5")
        assert r.verdict == "PASS", r.witnesses[:5]
        assert r.counts["instances"] == 1 * 3 + 5 * 7 + 13 * 15
        # (0,..,0,a) for general a: det(subset | a*w) = a * det(subset | w),
        # so a = 1 decides the whole family; sweep all a explicitly at q <= 8
        for p, m in ((2, 2), (2, 3)):
            ctx = make_field(p, m)
            for k in range(2, ctx.q - 1):
                code = cd.full_field_code(ctx, k, 1)
                for a in range(1, ctx.q):
                    w = [0] * (ctx.q - k - 1) + [a]
                    assert dh.is_deep_hole_prop8(code, w).is_deep_hole, (ctx.q, k, a)


def test_c03_master_oracle_equivalence():
    with criterion(3, "subset criterion == coset distance oracle (q=8, all k, all theta)", 300):
        ctx = make_field(2, 3)
        classes_checked = 0
        for k in range(2, 7):
            for theta in range(1, 8):
                code = cd.full_field_code(ctx, k, theta)
                classes, hits, _ = dh.prop8_all_classes(code)
                words = cd.coset_representatives(code, classes)
                dists = cd.error_distances(code, words)
                agree = (hits < 0) == (dists == code.r)
                assert agree.all(), (k, theta, classes[~agree][:3])
                classes_checked += classes.shape[0]
        assert classes_checked == sum((8**r - 1) // 7 for r in range(2, 7)) * 7


def test_c04_even_completeness():
    with criterion(4, "q=16, k in {11,12}, all theta: only the standard class", 120):
        r = run_check("thm-even-range", RunConfig(jobs=4))
        assert r.verdict == "PASS", r.witnesses[:5]
        assert r.counts["deep_hole_classes"] == 2 * 15


def test_c05_even_boundaries():
    with criterion(5, "even boundary families: q=8 k in {5,6}; q=16 k=13", 60):
        f8 = make_field(2, 3)
        for theta in range(1, 8):
            code = cd.full_field_code(f8, 5, theta)
            found = [s.w for s in dh.enumerate_deep_holes(code)]
            assert found == sorted([(0, 0, 1), (0, 1, f8.inv(theta))]), (5, theta, found)
            code = cd.full_field_code(f8, 6, theta)
            found = [s.w for s in dh.enumerate_deep_holes(code)]
            assert len(found) == 1 + 8 // 2 == 5, (6, theta, found)
            assert found == dh.expected_boundary_classes(f8, 6, theta)
            # 5 classes x (q-1) scalings = 35 deep-hole syndromes per theta
            assert len(found) * 7 == 35
        f16 = make_field(2, 4)
        for theta in range(1, 16):
            code = cd.full_field_code(f16, 13, theta)
            found = [s.w for s in dh.enumerate_deep_holes(code)]
            assert found == [(0, 0, 1)], (13, theta, found)


def test_c06_rejection_family_witnesses():
    with criterion(6, "q=16, k in {11,12}: rejection-family members refuted with witnesses", 120):
        r = run_check("prop10")
        assert r.verdict == "PASS", r.witnesses[:5]
        assert r.counts["members_rejected"] == 2 * 15 * 2 * 16
        assert r.families == ["identity-backed-pattern:theta_inv"]
        r9 = run_check("prop9")
        assert r9.verdict == "PASS", r9.witnesses[:5]


def test_c07_odd_boundaries():
    with criterion(7, "odd boundary families at q in {17,19,23} (eta rules)", 120):
        r = run_check("thm10")
        assert r.verdict == "PASS", r.witnesses[:5]
        # eta(-3) = -1 at q = 17, so the extra k=q-3 family must appear there
        f17 = make_field(17, 1)
        assert f17.quadratic_character(f17.neg(3)) == -1
        code = cd.full_field_code(f17, 14, 2)
        found = [s.w for s in dh.enumerate_deep_holes(code)]
        assert (0, 1, f17.inv(f17.mul(3, 2))) in found


def test_c08_odd_completeness():
    with criterion(8, "q=25, k=21, 8 thetas: only the standard class survives", 600):
        r = run_check("thm9", RunConfig(jobs=8))
        assert r.verdict == "PASS", r.witnesses[:5]
        assert r.counts["deep_hole_classes"] == 8


def test_c09_character_sums():
    with criterion(9, "character sums: Gauss, quadric counts, cubic lemmas, Fermat cubic", 60):
        failures = []

        r = run_check("gauss")
        if r.verdict != "PASS":
            failures.append(("gauss", r.witnesses[:5]))
        # direct magnitude assertions at the stated fields
        for p, m in ((3, 2), (2, 4), (5, 2)):
            ctx = make_field(p, m)
            chi = chars.canonical_additive(ctx)
            psi = chars.MultiplicativeCharacter(ctx, 1)
            g = chars.gauss_sum(psi, chi)
            if abs(abs(g) - sqrt(ctx.q)) > chars.sum_tol(ctx.q):
                failures.append(("gauss-magnitude", ctx.q))

        r = run_check("prop4")
        if r.verdict != "PASS":
            failures.append(("prop4", r.witnesses[:5]))

        for cid in ("lemA10", "lemA11"):
            r = run_check(cid)
            if r.verdict != "PASS":
                failures.append((cid, r.witnesses[:5]))

        # Fermat cubic at q = 16: count bound, and the representability
        # sub-assertion as stated (expected to fail on the nonzero cubes)
        ctx = make_field(2, 4)
        for b in range(16):
            count = chars.count_fermat_cubic(ctx, b)
            if not chars.fermat_cubic_bound_ok(ctx, count):
                failures.append(("fermat-bound", b, count))
        not_representable = [
            b for b in range(16) if chars.fermat_cubic_nonzero_pair(ctx, b) is None
        ]
        if not_representable:
            failures.append(("fermat-representability-q16", not_representable))

        assert not failures, failures


def test_c10_identity_suite():
    with criterion(10, "twisted determinant + syndrome quadratic identities", 60):
        r = run_check("lem4")
        assert r.verdict == "PASS", r.witnesses[:5]
        assert r.counts["identity_checks"] >= 470000


def test_c11_vanishing_polynomial():
    with criterion(11, "obstruction polynomial vanishes exactly for deep-hole syndromes", 10):
        r = run_check("lem5")
        assert r.verdict == "PASS", r.witnesses[:5]
        assert r.counts["zero_evals"] == 2000 and r.counts["nonzero_found"] == 2


def test_supporting_witness_lemmas():
    # not numbered criteria, but the remaining registry checks must hold
    for cid in ("lem8", "lem9", "lemA13", "prop2"):
        r = run_check(cid)
        assert r.verdict == "PASS", (cid, r.witnesses[:5])
