import math

import numpy as np
import pytest

from trslab import chars
from trslab.field import make_field


# ---------------------------------------------------------------------------
# character basics
# ---------------------------------------------------------------------------


def test_trivial_additive_character_is_one():
    f = make_field(3, 2)
    chi0 = chars.AdditiveCharacter(f, 0)
    assert all(abs(chi0(x) - 1) < chars.CHAR_TOL for x in range(f.q))


def test_even_characteristic_values_are_plus_minus_one():
    f = make_field(2, 3)
    chi = chars.canonical_additive(f)
    for x in range(8):
        expect = -1.0 if f.trace(x) else 1.0
        assert chi(x) == expect


def test_multiplicative_character_conventions():
    f = make_field(3, 2)
    psi = chars.MultiplicativeCharacter(f, 1)
    assert psi(0) == 0
    for x in range(1, f.q):
        assert abs(abs(psi(x)) - 1) < chars.CHAR_TOL
    # psi_{(q-1)/2} agrees with the quadratic character
    eta = chars.quadratic_character(f)
    for x in range(1, f.q):
        assert abs(eta(x) - f.quadratic_character(x)) < chars.CHAR_TOL


def test_character_homomorphism():
    rng = np.random.default_rng(3)
    f = make_field(5, 2)
    chi = chars.AdditiveCharacter(f, 7)
    psi = chars.MultiplicativeCharacter(f, 3)
    for _ in range(200):
        x, y = (int(v) for v in rng.integers(0, f.q, size=2))
        assert abs(chi(f.add(x, y)) - chi(x) * chi(y)) < 1e-9
        if x and y:
            assert abs(psi(f.mul(x, y)) - psi(x) * psi(y)) < 1e-9


def test_orthogonality_exhaustive():
    for p, m in [(2, 3), (2, 4), (3, 2), (5, 1)]:
        f = make_field(p, m)
        for a in range(1, f.q):
            total = chars.AdditiveCharacter(f, a).values().sum()
            assert abs(total) < chars.sum_tol(f.q)


# ---------------------------------------------------------------------------
# Gauss sums
# ---------------------------------------------------------------------------


def test_gauss_magnitude_q9():
    f = make_field(3, 2)
    chi = chars.canonical_additive(f)
    for i in range(1, f.q - 1):
        g = chars.gauss_sum(chars.MultiplicativeCharacter(f, i), chi)
        assert abs(abs(g) - 3.0) < chars.sum_tol(9)


def test_gauss_translation_rule():
    rng = np.random.default_rng(4)
    f = make_field(3, 2)
    psi = chars.MultiplicativeCharacter(f, 1)
    for _ in range(30):
        a = int(rng.integers(1, f.q))
        b = int(rng.integers(0, f.q))
        lhs = chars.gauss_sum(psi, chars.AdditiveCharacter(f, f.mul(a, b)))
        rhs = psi(a).conjugate() * chars.gauss_sum(psi, chars.AdditiveCharacter(f, b))
        assert abs(lhs - rhs) < chars.sum_tol(f.q)


def test_gauss_trivial_psi_gives_minus_one():
    f = make_field(2, 4)
    psi0 = chars.MultiplicativeCharacter(f, 0)
    chi = chars.canonical_additive(f)
    assert abs(chars.gauss_sum(psi0, chi) + 1) < chars.sum_tol(16)


# ---------------------------------------------------------------------------
# monomial sums and the Weil bound
# ---------------------------------------------------------------------------


def test_linear_sum_vanishes():
    f = make_field(2, 4)
    assert abs(chars.monomial_sum(f, 5, 0, 1)) < chars.sum_tol(16)


def test_cubic_monomial_sum_q8_is_zero():
    f = make_field(2, 3)
    for a in range(1, 8):
        assert abs(chars.monomial_sum(f, a, 0, 3)) < chars.sum_tol(8)


def test_cubic_monomial_bound_q16():
    f = make_field(2, 4)
    rng = np.random.default_rng(5)
    for _ in range(10):
        a = int(rng.integers(1, 16))
        assert abs(chars.monomial_sum(f, a, 0, 3)) <= 2 * 4 + 1e-6


def test_monomial_sum_rejects_zero_a():
    with pytest.raises(ValueError):
        chars.monomial_sum(make_field(2, 3), 0, 0, 3)


def test_weil_bound_for_quadratic_character_of_split_polynomials():
    # f = prod (x - r_i), squarefree with d distinct roots: |sum eta(a f(c))| <= (d-1) sqrt(q)
    rng = np.random.default_rng(6)
    for p, m in [(3, 2), (13, 1), (17, 1)]:
        f = make_field(p, m)
        eta = chars.quadratic_character(f)
        for d in (2, 3, 4):
            for _ in range(10):
                roots = [int(v) for v in rng.choice(f.q, size=d, replace=False)]
                a = int(rng.integers(1, f.q))
                total = 0j
                for c in range(f.q):
                    val = a
                    for rt in roots:
                        val = f.mul(val, f.sub(c, rt))
                    total += eta(val)
                assert abs(total) <= (d - 1) * math.sqrt(f.q) + 1e-6


# ---------------------------------------------------------------------------
# quadratic sums (closed forms vs brute force)
# ---------------------------------------------------------------------------


def test_quadratic_sum_odd_pure_square_case():
    f = make_field(3, 2)
    chi = chars.canonical_additive(f)
    eta = chars.quadratic_character(f)
    expect = chars.gauss_sum(eta, chi)
    assert abs(chars.quadratic_sum_closed(f, 1, 0, 0) - expect) < chars.sum_tol(9)


def test_quadratic_sum_odd_random_vs_brute():
    rng = np.random.default_rng(7)
    f = make_field(3, 2)
    for _ in range(100):
        a2 = int(rng.integers(1, 9))
        a1, a0 = (int(v) for v in rng.integers(0, 9, size=2))
        cf = chars.quadratic_sum_closed(f, a2, a1, a0)
        bf = chars.quadratic_sum_brute(f, a2, a1, a0)
        assert abs(cf - bf) < chars.sum_tol(9)


def test_quadratic_sum_even_condition():
    f = make_field(2, 3)
    b = 1
    for a2 in range(1, 8):
        for a1 in range(8):
            cond = f.add(f.mul(b, a2), f.mul(f.mul(b, b), f.mul(a1, a1)))
            cf = chars.quadratic_sum_closed_even(f, a2, a1, 0, b)
            if cond != 0:
                assert cf == 0
            else:
                assert abs(cf - 8) < chars.sum_tol(8)
            bf = chars.quadratic_sum_brute(f, a2, a1, 0, b)
            assert abs(cf - bf) < chars.sum_tol(8)


def test_quadratic_sum_parity_guards():
    with pytest.raises(ValueError):
        chars.quadratic_sum_closed(make_field(2, 3), 1, 0, 0)
    with pytest.raises(ValueError):
        chars.quadratic_sum_closed_even(make_field(3, 2), 1, 0, 0, 1)
    with pytest.raises(ValueError):
        chars.quadratic_sum_closed_even(make_field(2, 3), 1, 0, 0, 0)


# ---------------------------------------------------------------------------
# point counts
# ---------------------------------------------------------------------------


def test_count_quadric_example_q5():
    f = make_field(5, 1)
    assert chars.count_quadric(f, 1, 1, 0) == 9
    assert chars.count_quadric_brute(f, 1, 1, 0) == 9


def test_count_quadric_nonzero_b_value():
    f = make_field(17, 1)
    for a1 in range(1, 17):
        for a2 in range(1, 17):
            if f.quadratic_character(f.neg(f.mul(a1, a2))) == 1:
                assert chars.count_quadric(f, a1, a2, 5) == 16
                break


def test_count_quadric_random_vs_brute():
    rng = np.random.default_rng(8)
    f = make_field(17, 1)
    for _ in range(100):
        a1 = int(rng.integers(1, 17))
        a2 = int(rng.integers(1, 17))
        b = int(rng.integers(0, 17))
        assert chars.count_quadric(f, a1, a2, b) == chars.count_quadric_brute(f, a1, a2, b)


def test_count_quadric_guards():
    with pytest.raises(ValueError):
        chars.count_quadric(make_field(2, 3), 1, 1, 0)
    with pytest.raises(ValueError):
        chars.count_quadric(make_field(5, 1), 0, 1, 0)


# ---------------------------------------------------------------------------
# cubic sums / cubic surface counts (even q)
# ---------------------------------------------------------------------------


def test_cubic_sum_closed_cases():
    f8 = make_field(2, 3)
    for a in range(1, 8):
        assert chars.cubic_sum_closed(f8, a) == 0
    f16 = make_field(2, 4)
    # m = 4, m/2 even: cubes give -2 sqrt(q), non-cubes +sqrt(q)
    for a in range(1, 16):
        v = chars.cubic_sum_closed(f16, a)
        if int(f16.log[a]) % 3 == 0:
            assert v == -8
        else:
            assert v == 4


def test_cubic_sum_vs_brute_exhaustive():
    for p, m in [(2, 3), (2, 4), (2, 6)]:
        f = make_field(p, m)
        for a in range(1, f.q):
            cf = chars.cubic_sum_closed(f, a)
            bf = chars.cubic_sum_brute(f, a)
            assert abs(cf - bf) < chars.sum_tol(f.q), (f.q, a)


def test_count_surface_cubic_cases_and_brute():
    f8 = make_field(2, 3)
    for a in range(1, 8):
        assert chars.count_surface_cubic(f8, a) == 6
        assert chars.count_surface_cubic_brute(f8, a) == 6
    f16 = make_field(2, 4)
    noncube = next(a for a in range(1, 16) if int(f16.log[a]) % 3 != 0)
    assert chars.count_surface_cubic(f16, noncube) == 18
    for p, m in [(2, 4), (2, 6)]:
        f = make_field(p, m)
        for a in range(1, f.q):
            assert chars.count_surface_cubic(f, a) == chars.count_surface_cubic_brute(f, a)


# ---------------------------------------------------------------------------
# Fermat cubic counts
# ---------------------------------------------------------------------------


def test_fermat_cubic_bijective_case():
    # 3 does not divide q - 1 = 7, so cubing is a bijection and b = 0 has q solutions
    f = make_field(2, 3)
    assert chars.count_fermat_cubic(f, 0) == 8


def test_fermat_cubic_bound_q16():
    f = make_field(2, 4)
    for b in range(16):
        assert chars.fermat_cubic_bound_ok(f, chars.count_fermat_cubic(f, b))


def test_fermat_cubic_representability_boundary():
    # q = 16 sits exactly on the bound q - 2 sqrt(q) - 2 = 6: the five nonzero
    # cubes have only axis solutions, every other b has an off-axis pair.
    f = make_field(2, 4)
    cubes = {a for a in range(1, 16) if int(f.log[a]) % 3 == 0}
    missing = {b for b in range(16) if chars.fermat_cubic_nonzero_pair(f, b) is None}
    assert missing == cubes
    assert len(missing) == 5
    # strictly above the boundary the representation always exists
    f32 = make_field(2, 5)
    assert all(chars.fermat_cubic_nonzero_pair(f32, b) is not None for b in range(32))
