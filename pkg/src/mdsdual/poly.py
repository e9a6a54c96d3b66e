"""Dense univariate polynomials over GF(q) and the L_S machinery.

``L_S(a)`` is the product of ``a - b`` over ``b`` in ``S`` other than ``a``;
it equals the derivative of the vanishing polynomial of ``S`` at ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import FieldError


@dataclass(frozen=True)
class Poly:
    """Ascending coefficients (element codes), trailing zeros trimmed."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def to_list(self, ctx):
        return [ctx.coeffs(c) for c in self.coeffs]

    @classmethod
    def from_list(cls, ctx, data):
        return cls(tuple(ctx.elem(c) for c in data))


def constant(c):
    return Poly((c,))


def monomial(ctx, c, deg):
    return Poly((0,) * deg + (c,))


def poly_add(ctx, f, g):
    a, b = f.coeffs, g.coeffs
    n = max(len(a), len(b))
    a = a + (0,) * (n - len(a))
    b = b + (0,) * (n - len(b))
    return Poly(tuple(ctx.add(x, y) for x, y in zip(a, b)))


def poly_neg(ctx, f):
    return Poly(tuple(ctx.neg(c) for c in f.coeffs))


def poly_sub(ctx, f, g):
    return poly_add(ctx, f, poly_neg(ctx, g))


def poly_mul(ctx, f, g):
    if f.is_zero() or g.is_zero():
        return Poly()
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return Poly(tuple(out))


def poly_eval(ctx, f, x):
    y = 0
    for c in reversed(f.coeffs):
        y = ctx.add(ctx.mul(y, x), c)
    return y


def poly_derivative(ctx, f):
    # formal derivative: i * a_i with i reduced mod p
    return Poly(tuple(ctx.scale(c, i) for i, c in enumerate(f.coeffs))[1:])


def compose_power(ctx, g, f):
    """g(x^f)."""
    out = [0] * (f * g.degree + 1) if not g.is_zero() else []
    for i, c in enumerate(g.coeffs):
        out[i * f] = c
    return Poly(tuple(out))


def _check_distinct(S):
    if len(set(S)) != len(S):
        seen = set()
        for x in S:
            if x in seen:
                raise FieldError(f"duplicate element {x} in evaluation set")
            seen.add(x)


def vanishing_poly(ctx, S):
    """Monic polynomial with roots exactly S."""
    S = list(S)
    _check_distinct(S)
    f = Poly((1,))
    for a in S:
        f = poly_mul(ctx, f, Poly((ctx.neg(a), 1)))
    return f


def l_value(ctx, S, a):
    """prod_{b in S, b != a} (a - b)."""
    if a not in S:
        raise FieldError("a is not in S")
    out = 1
    for b in S:
        if b != a:
            out = ctx.mul(out, ctx.sub(a, b))
    return out


def split_l_value(ctx, S1, S2, b):
    """L_{S1 u S2}(b) assembled from the part containing b."""
    s1, s2 = set(S1), set(S2)
    if s1 & s2:
        raise FieldError("S1 and S2 overlap")
    if b in s1:
        return ctx.mul(l_value(ctx, S1, b), poly_eval(ctx, vanishing_poly(ctx, S2), b))
    if b in s2:
        return ctx.mul(l_value(ctx, S2, b), poly_eval(ctx, vanishing_poly(ctx, S1), b))
    raise FieldError("b lies in neither set")


def coset_union_poly(ctx, e, f, reps):
    """Vanishing polynomial of the union of cosets xi * <theta^e>.

    Each coset of the order-f subgroup contributes x^f - xi^f, so the
    product is g(x^f) with g = prod (x - xi^f).
    """
    if e * f != ctx.q - 1:
        raise FieldError(f"e * f must equal q - 1 = {ctx.q - 1}")
    powers = []
    for xi in reps:
        if xi == 0:
            raise FieldError("coset representative must be nonzero")
        powers.append(ctx.pow(xi, f))
    if len(set(powers)) != len(powers):
        raise FieldError("coset representatives repeat a coset")
    g = Poly((1,))
    for c in powers:
        g = poly_mul(ctx, g, Poly((ctx.neg(c), 1)))
    return compose_power(ctx, g, f)


def coset_elements(ctx, xi, e, f):
    """xi * theta^(e j) for j = 1..f."""
    return [ctx.mul(xi, ctx.theta_pow(e * j)) for j in range(1, f + 1)]


def l_values(ctx, S, block=256):
    """All L_S(a), a in S, in order.

    Direct O(|S|^2) product; with tables it runs as blocked numpy sums of
    discrete logs.
    """
    S = list(S)
    _check_distinct(S)
    n = len(S)
    if not ctx.has_tables or n < 16:
        return [l_value(ctx, S, a) for a in S]
    arr = np.asarray(S, dtype=np.int64)
    qm1 = ctx.q - 1
    out = np.empty(n, dtype=np.int64)
    for lo in range(0, n, block):
        hi = min(n, lo + block)
        diff = ctx.sub_arr(arr[lo:hi, None], arr[None, :])
        logs = ctx.log_arr(diff)
        # the diagonal a - a = 0 has log -1 in the table; drop it
        idx = np.arange(lo, hi)
        logs[idx - lo, idx] = 0
        out[lo:hi] = logs.sum(axis=1) % qm1
    return [ctx._exp[int(k)] for k in out]
