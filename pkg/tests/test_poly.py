import itertools
import random

import pytest

from covrad.gf import field_create, field_for_size
from covrad.poly import (NEG_INF, Poly, evaluate_word, from_roots, hamming,
                         interpolate, lagrange_basis, weight)


def naive_lagrange(ctx, D, values):
    """Expansion oracle: sum of y_j * prod (x - x_m)/(x_j - x_m)."""
    n = len(D)
    coeffs = [0] * n
    for j in range(n):
        num = [1]
        den = 1
        for m in range(n):
            if m == j:
                continue
            nxt = [0] * (len(num) + 1)
            for i, c in enumerate(num):
                nxt[i] = ctx.add(nxt[i], ctx.mul(ctx.neg(D[m]), c))
                nxt[i + 1] = ctx.add(nxt[i + 1], c)
            num = nxt
            den = ctx.mul(den, ctx.sub(D[j], D[m]))
        s = ctx.mul(values[j], ctx.inv(den))
        for i in range(len(num)):
            coeffs[i] = ctx.add(coeffs[i], ctx.mul(s, num[i]))
    return coeffs


def test_evaluate_squares_mod5():
    ctx = field_create(5)
    f = Poly(ctx, [0, 0, 1])
    assert evaluate_word(f, ctx.elements()) == (1, 4, 4, 1, 0)


def test_evaluate_zero_poly():
    ctx = field_create(5)
    assert evaluate_word(Poly(ctx), ctx.elements()) == (0,) * 5


def test_evaluate_cubic_mod7():
    ctx = field_create(7)
    f = Poly(ctx, [0, 1, 0, 1])  # x^3 + x
    expect = tuple((x**3 + x) % 7 for x in ctx.elements())
    assert evaluate_word(f, ctx.elements()) == expect


def test_evaluate_duplicate_points_rejected():
    ctx = field_create(5)
    with pytest.raises(ValueError, match="duplicate"):
        evaluate_word(Poly(ctx, [1]), (1, 1, 2))


def test_zero_poly_degree_marker():
    ctx = field_create(5)
    z = Poly(ctx)
    assert z.degree == NEG_INF
    assert z.degree < 0 and z.degree < -10**9
    assert Poly(ctx, [3]).degree == 0
    assert Poly(ctx, [0, 0, 2, 0]).degree == 2


def test_interpolate_round_trip_square():
    ctx = field_create(5)
    D = ctx.elements()
    vals = evaluate_word(Poly(ctx, [0, 0, 1]), D)
    assert interpolate(ctx, D, vals) == Poly(ctx, [0, 0, 1])


def test_interpolate_zero_values():
    ctx = field_create(5)
    f = interpolate(ctx, (1, 2), (0, 0))
    assert f.is_zero()


def test_interpolate_length_mismatch():
    ctx = field_create(5)
    with pytest.raises(ValueError, match="mismatch"):
        interpolate(ctx, (1, 2, 3), (0, 0))


def test_interpolate_random_round_trip_f7():
    ctx = field_create(7)
    D = ctx.elements()
    rng = random.Random(7)
    for _ in range(50):
        vals = tuple(rng.randrange(7) for _ in D)
        f = interpolate(ctx, D, vals)
        assert evaluate_word(f, D) == vals
        assert f.degree == NEG_INF or f.degree <= 6


def test_interpolation_bijection_exhaustive_f5():
    # every word of F_5^5 has exactly one interpolant of degree <= 4
    ctx = field_create(5)
    D = ctx.elements()
    seen = set()
    for coeffs in itertools.product(range(5), repeat=5):
        seen.add(evaluate_word(Poly(ctx, coeffs), D))
    assert len(seen) == 5**5


def test_interpolate_matches_naive_oracle():
    for q in (5, 9):
        ctx = field_for_size(q)
        D = ctx.elements()
        rng = random.Random(q)
        for _ in range(20):
            vals = tuple(rng.randrange(q) for _ in D)
            got = interpolate(ctx, D, vals)
            expect = naive_lagrange(ctx, D, vals)
            assert list(got.coeffs) + [0] * (q - len(got.coeffs)) == expect


def test_round_trip_small_subsets():
    ctx = field_create(9 // 3, 2)
    D = (1, 3, 7)
    for vals in itertools.product(range(9), repeat=3):
        f = interpolate(ctx, D, vals)
        assert evaluate_word(f, D) == vals
        assert f.degree == NEG_INF or f.degree <= 2


def test_coefficient_access():
    ctx = field_create(5)
    f = Poly(ctx, [0, 3, 1])  # x^2 + 3x
    assert f.coefficient(1) == 3
    assert f.coefficient(2) == 1
    assert f.coefficient(5) == 0
    with pytest.raises(ValueError):
        f.coefficient(-1)


def test_coefficient_matches_lagrange_basis_formula():
    # extracting coefficient k-1 after interpolation agrees with the direct
    # basis-coefficient combination
    ctx = field_create(3, 2)
    D = ctx.elements()
    k = 4
    basis = lagrange_basis(ctx, D)
    rng = random.Random(9)
    for _ in range(10):
        vals = [rng.randrange(9) for _ in D]
        f = interpolate(ctx, D, vals)
        direct = 0
        for j, v in enumerate(vals):
            direct = ctx.add(direct, ctx.mul(v, basis[j][k - 1]))
        assert f.coefficient(k - 1) == direct


def test_from_roots_example_f5():
    ctx = field_create(5)
    # (x-1)(x-4) = x^2 - 5x + 4 = x^2 + 4
    assert from_roots(ctx, {1, 4}, 1) == Poly(ctx, [4, 0, 1])


def test_from_roots_empty_set():
    ctx = field_create(5)
    assert from_roots(ctx, (), 1) == Poly(ctx, [1])


def test_from_roots_subleading_coefficient_is_minus_sum():
    ctx = field_create(7)
    f = from_roots(ctx, {1, 2, 4}, 1)
    assert f.degree == 3
    assert f.coefficient(2) == ctx.neg((1 + 2 + 4) % 7)  # = 0
    assert f.coefficient(2) == 0


def test_from_roots_vanishes_exactly_on_roots():
    ctx = field_create(9 // 3, 2)
    S = (1, 4, 6)
    f = from_roots(ctx, S, 2)
    for x in ctx.elements():
        assert (f(x) == 0) == (x in S)


def test_from_roots_repeated_root_rejected():
    ctx = field_create(5)
    with pytest.raises(ValueError, match="repeated"):
        from_roots(ctx, (1, 1), 1)
    with pytest.raises(ValueError, match="nonzero"):
        from_roots(ctx, (1, 2), 0)


def test_weight_and_hamming():
    assert weight((0, 1, 2, 0, 3)) == 3
    assert hamming((1, 2, 3), (1, 0, 3)) == 1
    with pytest.raises(ValueError):
        hamming((1, 2), (1, 2, 3))


def test_poly_arithmetic():
    ctx = field_create(5)
    f = Poly(ctx, [1, 2])
    g = Poly(ctx, [4, 3])
    assert (f + g) == Poly(ctx, [0, 0])
    assert (f - f).is_zero()
    assert (f * g) == Poly(ctx, [4, 1, 1])  # (2x+1)(3x+4) = 6x^2+11x+4
    assert f.scale(2) == Poly(ctx, [2, 4])


def test_wire_format():
    ctx = field_create(5)
    f = Poly(ctx, [0, 0, 3])
    assert f.to_text() == "0,0,3"
    assert Poly(ctx).to_text() == "0"
