import itertools

import pytest

from covrad.gf import field_create, field_for_size
from covrad.poly import Poly, evaluate_word, hamming
from covrad.ssp import nearest_codeword_deg_k, ssp_solve, validate_certificate


def field_sum(ctx, items):
    s = 0
    for x in items:
        s = ctx.add(s, x)
    return s


def test_tiny_field_lexicographic_witness():
    # exhaustive path: first valid subset in canonical order
    ctx = field_create(5)
    assert ssp_solve(ctx, 2, 0) == {1, 4}


def test_full_field_zero_sum():
    for q in (5, 7, 9):
        ctx = field_for_size(q)
        S = ssp_solve(ctx, q, 0)
        assert S == set(ctx.elements())
        assert field_sum(ctx, S) == 0


def test_full_field_nonzero_target_rejected():
    ctx = field_create(5)
    with pytest.raises(ValueError, match="unsolvable"):
        ssp_solve(ctx, 5, 1)


def test_k_out_of_range():
    ctx = field_create(5)
    with pytest.raises(ValueError):
        ssp_solve(ctx, 0, 0)
    with pytest.raises(ValueError):
        ssp_solve(ctx, 6, 0)


def test_exhaustive_coverage_f7_k3():
    # all 35 subsets cover every target
    ctx = field_create(7)
    sums = {field_sum(ctx, S) for S in itertools.combinations(range(7), 3)}
    assert sums == set(range(7))
    for g in range(7):
        S = ssp_solve(ctx, 3, g)
        assert validate_certificate(ctx, S, 3, g)


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13])
def test_totality_grid(q):
    ctx = field_for_size(q)
    for k in range(1, q):
        for g in range(q):
            S = ssp_solve(ctx, k, g)
            assert validate_certificate(ctx, S, k, g), (q, k, g)


def test_determinism():
    ctx = field_create(11)
    for k in (2, 5, 9):
        for g in range(11):
            assert ssp_solve(ctx, k, g) == ssp_solve(ctx, k, g)


def test_certificate_validator_rejects_bad():
    ctx = field_create(7)
    assert not validate_certificate(ctx, {1, 2}, 3, 3)      # wrong size
    assert not validate_certificate(ctx, {1, 2, 3}, 3, 0)   # wrong sum
    assert not validate_certificate(ctx, [1, 1, 2], 3, 4)   # repeats
    assert validate_certificate(ctx, {1, 2, 3}, 3, 6)


def test_nearest_codeword_example_f5():
    # f = x^2 + x, v = 0: the difference f - g factors over two roots and
    # the witness sits at distance q - k = 3 on the first q coordinates
    ctx = field_create(5)
    f = Poly(ctx, [0, 1, 1])
    g = nearest_codeword_deg_k(f, 0, 2)
    assert g.degree < 2 or (g.degree == 1)
    assert g.coefficient(1) == 0
    diff = f - g
    roots = [x for x in ctx.elements() if diff(x) == 0]
    assert len(roots) == 2
    uf = evaluate_word(f, ctx.elements()) + (0,)
    ug = evaluate_word(g, ctx.elements()) + (0,)
    assert hamming(uf, ug) == 3


def test_nearest_codeword_monomials():
    for q in (5, 7, 9):
        ctx = field_for_size(q)
        for k in range(2, q - 1):
            f = Poly(ctx, [0] * k + [1])
            for v in range(q):
                g = nearest_codeword_deg_k(f, v, k)
                assert g.coefficient(k - 1) == v
                diff = f - g
                assert diff.degree == k
                roots = {x for x in ctx.elements() if diff(x) == 0}
                assert len(roots) == k
                uf = evaluate_word(f, ctx.elements()) + (v,)
                ug = evaluate_word(g, ctx.elements()) + (v,)
                assert hamming(uf, ug) == q - k


def test_nearest_codeword_wrong_degree():
    ctx = field_create(5)
    with pytest.raises(ValueError, match="deg f"):
        nearest_codeword_deg_k(Poly(ctx, [1, 1]), 0, 2)
