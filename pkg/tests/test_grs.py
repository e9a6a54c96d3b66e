import random

import pytest

from mdsdual.construct import TheoremParams, build_eval_set
from mdsdual.field import FieldError, eta, field_new
from mdsdual.grs import (CriterionError, GrsCode, dual_multipliers, extend_by_two,
                         extended_self_dual_from_criterion, generator_matrix,
                         self_dual_from_criterion, self_orthogonal_from_witness)
from mdsdual.poly import Poly, l_value
from mdsdual.verify import is_self_dual, is_self_orthogonal, rank


def _rows(ctx, a, v, k, extended=False):
    rows = []
    for j in range(k):
        row = [ctx.mul(x, ctx.pow(y, j)) for x, y in zip(v, a)]
        if extended:
            row.append(1 if j == k - 1 else 0)
        rows.append(row)
    return rows


def _dot(ctx, x, y):
    return ctx.sum(ctx.mul(s, t) for s, t in zip(x, y))


def _all_orthogonal(ctx, A, B):
    return all(_dot(ctx, x, y) == 0 for x in A for y in B)


def test_generator_matrix_examples(gf9):
    x = gf9.elem([0, 1])
    code = GrsCode(gf9, (0, 1), (x, 1), 1)
    assert generator_matrix(code) == [[x, 1]]
    ext = GrsCode(gf9, (0,), (x,), 1, extended=True)
    assert generator_matrix(ext) == [[x, 1]]


def test_generator_matrix_matches_naive(gf49):
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randrange(1, 10)
        a = rng.sample(range(49), n)
        v = [rng.randrange(1, 49) for _ in range(n)]
        ext = rng.random() < 0.5
        k = rng.randrange(1, n + 1)
        code = GrsCode(gf49, a, v, k, ext)
        assert generator_matrix(code) == _rows(gf49, a, v, k, ext)


def test_rank_of_random_grs(gf25):
    rng = random.Random(9)
    for _ in range(100):
        a = rng.sample(range(25), 6)
        v = [rng.randrange(1, 25) for _ in range(6)]
        assert rank(gf25, generator_matrix(GrsCode(gf25, a, v, 3))) == 3


def test_invalid_codes_rejected(gf9):
    with pytest.raises(ValueError):
        GrsCode(gf9, (1, 1), (1, 1), 1)
    with pytest.raises(ValueError):
        GrsCode(gf9, (1, 2), (1, 0), 1)
    with pytest.raises(ValueError):
        GrsCode(gf9, (1, 2), (1, 1), 3)


def test_self_dual_example_gf9(gf9):
    code = self_dual_from_criterion(gf9, (0, 1))
    x = gf9.elem([0, 1])
    assert code.v == (x, 1) and code.k == 1
    assert _dot(gf9, code.v, code.v) == 0
    assert is_self_dual(code).passed


def test_self_dual_from_theorem_set(gf25):
    S = build_eval_set(TheoremParams(gf25, "T31", 4, 8, 1, 2)).elements
    code = self_dual_from_criterion(gf25, S)
    assert (code.n, code.k) == (12, 6)
    assert is_self_dual(code, mode="full").passed


@pytest.mark.parametrize("p,m", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_self_dual_criterion_random_sets(p, m):
    """Constant character gives a self-dual code; mixed gives witnesses."""
    ctx = field_new(p, m)
    rng = random.Random(p + m)
    built = refused = 0
    for _ in range(400):
        n = 2 * rng.randrange(1, min(ctx.q // 2, 8) + 1)
        a = rng.sample(range(ctx.q), n)
        chars = [eta(ctx, l_value(ctx, a, x)) for x in a]
        if len(set(chars)) == 1:
            code = self_dual_from_criterion(ctx, a)
            G = _rows(ctx, code.a, code.v, code.k)
            assert _all_orthogonal(ctx, G, G)
            assert rank(ctx, G) == n // 2
            built += 1
        else:
            with pytest.raises(CriterionError) as exc:
                self_dual_from_criterion(ctx, a)
            i, j = exc.value.witnesses
            assert chars[i] != chars[j]
            refused += 1
    assert built and refused


def test_self_dual_rejects_odd_length(gf9):
    with pytest.raises(CriterionError):
        self_dual_from_criterion(gf9, (0, 1, 2))


def test_extended_singleton(gf25):
    for alpha in (0, 1, gf25.theta):
        code = extended_self_dual_from_criterion(gf25, (alpha,))
        assert (code.n, code.k) == (2, 1)
        assert is_self_dual(code).passed


def test_extended_from_theorem_set(gf25):
    S = build_eval_set(TheoremParams(gf25, "T31", 4, 8, 1, 1)).elements
    assert len(S) == 9
    code = extended_self_dual_from_criterion(gf25, S)
    assert (code.n, code.k) == (10, 5)
    assert is_self_dual(code, mode="full").passed


def test_extended_criterion_witness(gf25):
    rng = random.Random(0)
    for _ in range(200):
        a = rng.sample(range(25), 3)
        bad = [i for i, x in enumerate(a)
               if eta(gf25, gf25.neg(l_value(gf25, a, x))) != 1]
        if bad:
            with pytest.raises(CriterionError) as exc:
                extended_self_dual_from_criterion(gf25, a)
            assert list(exc.value.witnesses) == bad
            return
    pytest.fail("no mixed-character triple found")


@pytest.mark.parametrize("p,m", [(5, 1), (7, 1), (3, 2)])
def test_extended_criterion_random_sets(p, m):
    ctx = field_new(p, m)
    rng = random.Random(31)
    built = 0
    for _ in range(300):
        n = 2 * rng.randrange(0, 5) + 1
        a = rng.sample(range(ctx.q), n)
        try:
            code = extended_self_dual_from_criterion(ctx, a)
        except CriterionError:
            continue
        G = _rows(ctx, code.a, code.v, code.k, extended=True)
        assert _all_orthogonal(ctx, G, G)
        built += 1
    assert built


def test_extend_by_two_examples(gf25):
    for family, e1, e2 in (("T31", 4, 8), ("T32", 4, 4)):
        S = build_eval_set(TheoremParams(gf25, family, e1, e2, 1, 2 if family == "T31" else 1))
        assert len(S.elements) == 12
        code = extend_by_two(gf25, S.elements)
        assert (code.n, code.k) == (14, 7)
        assert code.a[-1] == 0
        assert is_self_dual(code, mode="full").passed
    with pytest.raises(FieldError):
        extend_by_two(gf25, (0, 1))


@pytest.mark.parametrize("p,m", [(5, 1), (7, 1), (3, 2), (11, 1)])
def test_l_with_zero_appended(p, m):
    ctx = field_new(p, m)
    rng = random.Random(8)
    for _ in range(300):
        S = rng.sample(range(1, ctx.q), 2 * rng.randrange(1, 6))
        T = S + [0]
        for a in S:
            assert l_value(ctx, T, a) == ctx.mul(a, l_value(ctx, S, a))
        assert l_value(ctx, T, 0) == ctx.product(S)


def test_self_orthogonal_examples(gf25):
    S = build_eval_set(TheoremParams(gf25, "T31", 4, 8, 1, 2)).elements
    x = Poly((0, 1))
    for k in range(1, 6):
        code = self_orthogonal_from_witness(gf25, S, k, x)
        assert (code.n, code.k) == (12, k)
        assert is_self_orthogonal(code).passed
    pre = self_orthogonal_from_witness(gf25, S, 6, Poly((0, gf25.neg(1))), extended=True)
    assert (pre.n, pre.k) == (13, 6)
    assert is_self_orthogonal(pre).passed
    with pytest.raises(CriterionError):
        self_orthogonal_from_witness(gf25, S, 6, x)
    with pytest.raises(CriterionError) as exc:
        self_orthogonal_from_witness(gf25, S, 2, Poly((gf25.neg(S[3]), 1)))
    assert exc.value.witnesses == (3,)


@pytest.mark.parametrize("p,m", [(5, 1), (7, 1), (3, 2)])
def test_self_orthogonal_random_witnesses(p, m):
    ctx = field_new(p, m)
    rng = random.Random(12)
    built = 0
    for _ in range(1500):
        n = rng.randrange(2, 9)
        a = rng.sample(range(ctx.q), n)
        ext = rng.random() < 0.5
        k = rng.randrange(1, ((n + 1) // 2 if ext else n // 2) + 1)
        if ext:
            deg = n - 2 * k + 1
            omega = Poly(tuple(rng.randrange(ctx.q) for _ in range(deg)) + (ctx.neg(1),))
        else:
            omega = Poly(tuple(rng.randrange(ctx.q) for _ in range(n - 2 * k + 1)))
            if omega.is_zero():
                continue
        try:
            code = self_orthogonal_from_witness(ctx, a, k, omega, extended=ext)
        except CriterionError:
            continue
        G = _rows(ctx, code.a, code.v, code.k, ext)
        assert _all_orthogonal(ctx, G, G)
        built += 1
    assert built >= 30


def test_dual_multipliers_example(gf9):
    assert dual_multipliers(GrsCode(gf9, (0, 1), (1, 1), 1)) == (2, 1)
    with pytest.raises(ValueError):
        dual_multipliers(GrsCode(gf9, (0,), (1,), 1, extended=True))


@pytest.mark.parametrize("p,m", [(5, 1), (7, 1), (3, 2)])
def test_dual_multipliers_orthogonal(p, m):
    ctx = field_new(p, m)
    rng = random.Random(21)
    for _ in range(1000):
        n = rng.randrange(2, 11)
        a = rng.sample(range(ctx.q), n)
        v = [rng.randrange(1, ctx.q) for _ in range(n)]
        k = rng.randrange(1, n)
        code = GrsCode(ctx, a, v, k)
        u = dual_multipliers(code)
        assert _all_orthogonal(ctx, _rows(ctx, a, v, k), _rows(ctx, a, u, n - k))


def test_self_dual_multipliers_proportional(gf25):
    S = build_eval_set(TheoremParams(gf25, "T31", 4, 8, 1, 2)).elements
    code = self_dual_from_criterion(gf25, S)
    u = dual_multipliers(code)
    ratios = {gf25.div(x, y) for x, y in zip(u, code.v)}
    assert len(ratios) == 1


def test_export_round_trip(gf81):
    rng = random.Random(2)
    a = rng.sample(range(81), 7)
    code = GrsCode(gf81, a, [rng.randrange(1, 81) for _ in a], 3, True, {"variant": "x"})
    d = code.to_dict()
    assert d["n"] == 8 and len(d["a"][0]) == 4
    assert GrsCode.from_dict(d) == code
