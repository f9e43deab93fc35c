import numpy as np
import pytest

from trslab.field import FieldCtx, enumerate_field, make_field, parse_field_spec
from trslab.field import _is_irreducible


FIELDS_UNDER_TEST = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (5, 1), (5, 2), (17, 1)]


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def test_gf2_default_modulus():
    f = make_field(2, 1)
    assert f.modulus == (1, 1)  # x + 1
    assert sorted(f.elements()) == [0, 1]
    assert f.add(1, 1) == 0


def test_gf8_default_modulus_is_smallest_irreducible():
    f = make_field(2, 3)
    assert f.modulus == (1, 1, 0, 1)  # x^3 + x + 1
    # oracle: scan all 8 monic cubics in index order, nonzero constant term
    for idx in range(8):
        coeffs = [idx & 1, (idx >> 1) & 1, (idx >> 2) & 1, 1]
        if coeffs[0] == 0:
            continue
        if _is_irreducible(coeffs, 2):
            assert tuple(coeffs) == f.modulus
            break


def test_nonprime_characteristic_rejected():
    with pytest.raises(ValueError, match="prime"):
        make_field(4, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError, match="reducible"):
        make_field(2, 3, (1, 0, 0, 1))  # x^3 + 1 = (x+1)(x^2+x+1)


def test_size_cap():
    with pytest.raises(ValueError, match="2\\^16"):
        make_field(2, 17)


def test_explicit_modulus_must_be_monic_of_right_degree():
    with pytest.raises(ValueError, match="monic"):
        make_field(2, 3, (1, 1, 1))


# ---------------------------------------------------------------------------
# arithmetic examples
# ---------------------------------------------------------------------------


def test_gf8_multiplication_example():
    f = make_field(2, 3)
    # x * x^2 = x^3 = x + 1 under x^3 + x + 1
    assert f.mul(2, 4) == 3


def test_lagrange_power():
    for p, m in FIELDS_UNDER_TEST:
        f = make_field(p, m)
        for a in range(1, f.q):
            assert f.pow(a, f.q - 1) == 1


def test_pow_zero_conventions():
    f = make_field(2, 3)
    assert f.pow(0, 0) == 1
    assert f.pow(0, 5) == 0
    with pytest.raises(ValueError):
        f.pow(3, -1)


def test_inverse_of_zero_rejected():
    f = make_field(3, 2)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_out_of_range_elements_rejected():
    f = make_field(2, 3)
    with pytest.raises(ValueError, match="out of range"):
        f.add(8, 1)


def test_inverses_exhaustive_small():
    for p, m in [(2, 3), (3, 2), (5, 1)]:
        f = make_field(p, m)
        for a in range(1, f.q):
            assert f.mul(a, f.inv(a)) == 1


def test_distributivity_randomized():
    rng = np.random.default_rng(42)
    for p, m in FIELDS_UNDER_TEST:
        f = make_field(p, m)
        for _ in range(1000):
            a, b, c = (int(x) for x in rng.integers(0, f.q, size=3))
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_frobenius_additive_exhaustive():
    for p, m in [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (5, 2), (7, 2)]:
        f = make_field(p, m)
        if f.q > 64:
            continue
        for a in range(f.q):
            for b in range(f.q):
                lhs = f.pow(f.add(a, b), p)
                rhs = f.add(f.pow(a, p), f.pow(b, p))
                assert lhs == rhs


# ---------------------------------------------------------------------------
# trace and quadratic character
# ---------------------------------------------------------------------------


def test_trace_examples():
    f8 = make_field(2, 3)
    assert f8.trace(0) == 0
    assert f8.trace(1) == 1  # m = 3 is odd
    # x + x^2 + x^4 with x^4 = x^2 + x: total 0
    assert f8.trace(2) == 0


def test_trace_lands_in_prime_subfield_and_is_additive():
    rng = np.random.default_rng(0)
    for p, m in FIELDS_UNDER_TEST:
        f = make_field(p, m)
        for a in range(f.q):
            t = f.trace(a)
            assert 0 <= t < p
            assert f.pow(t, p) == t
        for _ in range(200):
            a, b = (int(x) for x in rng.integers(0, f.q, size=2))
            assert f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % p


def test_trace_fibers_have_size_q_over_p():
    for p, m in [(2, 3), (2, 4), (3, 2), (5, 2)]:
        f = make_field(p, m)
        fibers = {}
        for a in range(f.q):
            fibers.setdefault(f.trace(a), 0)
            fibers[f.trace(a)] += 1
        assert sorted(fibers) == list(range(p))
        assert all(v == f.q // p for v in fibers.values())


def test_quadratic_character_examples():
    f5 = make_field(5, 1)
    assert f5.quadratic_character(4) == 1  # 4 = 2^2
    f17 = make_field(17, 1)
    squares = {pow(x, 2, 17) for x in range(1, 17)}
    assert len(squares) == 8
    assert f17.quadratic_character(14) == (1 if 14 in squares else -1) == -1
    assert f17.quadratic_character(0) == 0


def test_quadratic_character_of_primitive_is_minus_one():
    for p, m in [(3, 2), (5, 1), (5, 2), (17, 1)]:
        f = make_field(p, m)
        assert f.quadratic_character(f.primitive) == -1


def test_quadratic_character_multiplicative_and_balanced():
    rng = np.random.default_rng(1)
    for p, m in [(3, 2), (5, 2), (17, 1)]:
        f = make_field(p, m)
        plus = sum(1 for a in range(1, f.q) if f.quadratic_character(a) == 1)
        assert plus == (f.q - 1) // 2
        for _ in range(300):
            a, b = (int(x) for x in rng.integers(1, f.q, size=2))
            assert f.quadratic_character(f.mul(a, b)) == f.quadratic_character(
                a
            ) * f.quadratic_character(b)


def test_quadratic_character_rejected_in_characteristic_two():
    f = make_field(2, 3)
    with pytest.raises(ValueError):
        f.quadratic_character(1)


# ---------------------------------------------------------------------------
# enumeration, tables, serialization
# ---------------------------------------------------------------------------


def test_enumerate_field():
    assert enumerate_field(make_field(2, 1)) == [0, 1]
    f4 = make_field(2, 2)
    elems = enumerate_field(f4)
    assert len(set(elems)) == 4
    assert elems[0] == 0 and elems[1] == 1
    f8 = make_field(2, 3)
    assert enumerate_field(f8)[1] == 1


def test_exp_log_tables():
    for p, m in FIELDS_UNDER_TEST:
        f = make_field(p, m)
        if f.q == 2:
            continue
        seen = {int(f.exp[j]) for j in range(f.q - 1)}
        assert len(seen) == f.q - 1  # primitive element generates F*
        for a in range(1, f.q):
            assert int(f.exp[f.log[a]]) == a


def test_descriptor_and_parse_roundtrip():
    f = make_field(2, 3)
    assert f.descriptor() == "2^3/1101"
    g = parse_field_spec("2^3/1101")
    assert g == f
    h = parse_field_spec("17")
    assert h.q == 17
    k = parse_field_spec("2^4")
    assert k.modulus == (1, 1, 0, 0, 1)


def test_vectorized_ops_match_scalar():
    rng = np.random.default_rng(9)
    for p, m in [(2, 4), (3, 2), (5, 2)]:
        f = make_field(p, m)
        a = rng.integers(0, f.q, size=50)
        b = rng.integers(0, f.q, size=50)
        add = f.add_arr(a, b)
        mul = f.mul_arr(a, b)
        sub = f.sub_arr(a, b)
        for i in range(50):
            assert int(add[i]) == f.add(int(a[i]), int(b[i]))
            assert int(mul[i]) == f.mul(int(a[i]), int(b[i]))
            assert int(sub[i]) == f.sub(int(a[i]), int(b[i]))
        for e in (0, 1, 2, 3, 7):
            pw = f.pow_arr(a, e)
            for i in range(50):
                assert int(pw[i]) == f.pow(int(a[i]), e)


def test_kernel_tables_consistent():
    for p, m in [(2, 3), (5, 2)]:
        f = make_field(p, m)
        t = f.tables()
        for a in range(f.q):
            assert int(t.neg[a]) == f.neg(a)
            if a:
                assert int(t.inv[a]) == f.inv(a)
            for b in range(f.q):
                assert int(t.add[a, b]) == f.add(a, b)
                assert int(t.mul[a, b]) == f.mul(a, b)


def test_context_equality_and_hash():
    assert make_field(2, 3) == make_field(2, 3)
    assert make_field(2, 3) != make_field(2, 2)
    assert hash(make_field(2, 3)) == hash(make_field(2, 3))
