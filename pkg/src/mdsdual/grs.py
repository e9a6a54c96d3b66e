"""Generalized Reed-Solomon codes and their self-duality criteria.

A code is stored as (a, v, k, extended).  Row j of the generator matrix is
``(v_1 a_1^j, ..., v_n a_n^j)``, plus a trailing ``[j == k-1]`` coordinate
when the code is extended, so the extended coordinate carries the x^(k-1)
coefficient of the message polynomial.

All constructions pick ``v_i`` as a square root of ``c_i / L_a(a_i)`` for a
suitable ``c_i``; then the power sums ``sum v_i^2 a_i^m`` vanish for the
range of m that self-orthogonality needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import field as ff
from .field import FieldCtx, FieldError, eta
from .poly import l_values, poly_eval


class CriterionError(ValueError):
    """A character criterion failed; ``witnesses`` are offending indices."""

    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


@dataclass(frozen=True, eq=False)
class GrsCode:
    ctx: FieldCtx
    a: tuple
    v: tuple
    k: int
    extended: bool = False
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        a, v = tuple(self.a), tuple(self.v)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "v", v)
        if len(a) != len(v):
            raise ValueError("a and v differ in length")
        if len(set(a)) != len(a):
            raise ValueError("evaluation points must be distinct")
        if any(x == 0 for x in v):
            raise ValueError("multipliers must be nonzero")
        limit = self.ctx.q + 1 if self.extended else self.ctx.q
        if not 0 <= self.k <= self.n or self.n > limit:
            raise ValueError(f"invalid dimension/length k={self.k}, n={self.n}")

    @property
    def n(self):
        return len(self.a) + (1 if self.extended else 0)

    def __eq__(self, other):
        return (isinstance(other, GrsCode) and self.ctx is other.ctx
                and (self.a, self.v, self.k, self.extended)
                == (other.a, other.v, other.k, other.extended))

    def __hash__(self):
        return hash((self.a, self.v, self.k, self.extended))

    def __repr__(self):
        tag = "extended " if self.extended else ""
        return f"<{tag}GRS [{self.n},{self.k}] over {self.ctx!r}>"

    def to_dict(self):
        ctx = self.ctx
        return {
            "field": ctx.to_dict(),
            "n": self.n,
            "k": self.k,
            "extended": self.extended,
            "a": [ctx.coeffs(x) for x in self.a],
            "v": [ctx.coeffs(x) for x in self.v],
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, d):
        ctx = ff.field_from_dict(d["field"])
        code = cls(ctx, tuple(ctx.elem(c) for c in d["a"]),
                   tuple(ctx.elem(c) for c in d["v"]), d["k"],
                   bool(d["extended"]), dict(d.get("provenance", {})))
        if code.n != d["n"]:
            raise ValueError("recorded length does not match the data")
        return code


def generator_matrix(code):
    ctx, k = code.ctx, code.k
    rows = []
    powers = [1] * len(code.a)
    for j in range(k):
        row = [ctx.mul(v, x) for v, x in zip(code.v, powers)]
        if code.extended:
            row.append(1 if j == k - 1 else 0)
        rows.append(row)
        powers = [ctx.mul(x, a) for x, a in zip(powers, code.a)]
    return rows


def _roots_of(ctx, values, what):
    """sqrt of each value; CriterionError listing the non-squares."""
    bad = [i for i, x in enumerate(values) if x == 0 or eta(ctx, x) != 1]
    if bad:
        raise CriterionError(f"{what} is not a nonzero square at indices {bad[:8]}", bad)
    return tuple(ff.sqrt(ctx, x) for x in values)


def self_dual_from_criterion(ctx, a, provenance=None):
    """[n, n/2] self-dual GRS code when eta(L_a) is constant on a.

    v_i^2 = lam / L_a(a_i) with lam = 1 or theta matching the common character.
    """
    a = tuple(a)
    n = len(a)
    if n % 2:
        raise CriterionError(f"length {n} is odd")
    if n == 0:
        raise CriterionError("empty evaluation set")
    L = l_values(ctx, a)
    chars = [eta(ctx, x) for x in L]
    if len(set(chars)) > 1:
        i = chars.index(1)
        j = chars.index(-1)
        raise CriterionError(f"eta(L) differs at indices {i} and {j}", (i, j))
    lam = 1 if chars[0] == 1 else ctx.theta
    v = _roots_of(ctx, [ctx.div(lam, x) for x in L], "lambda / L")
    return GrsCode(ctx, a, v, n // 2, False, dict(provenance or {}))


def extended_self_dual_from_criterion(ctx, a, provenance=None):
    """[|a|+1, (|a|+1)/2] extended self-dual code, |a| odd, v_i^2 = 1/(-L_a(a_i))."""
    a = tuple(a)
    n = len(a)
    if n % 2 == 0:
        raise CriterionError(f"evaluation set size {n} must be odd")
    L = l_values(ctx, a)
    v = _roots_of(ctx, [ctx.inv(ctx.neg(x)) for x in L], "1 / (-L)")
    return GrsCode(ctx, a, v, (n + 1) // 2, True, dict(provenance or {}))


def self_orthogonal_from_witness(ctx, a, k, omega, extended=False, provenance=None):
    """Self-orthogonal (extended) GRS code from a polynomial witness omega.

    Non-extended: deg omega <= n - 2k.  Extended: omega has degree n - 2k + 1
    and leading coefficient -1.  In both cases v_i^2 = omega(a_i) / L_a(a_i),
    which must be a nonzero square.
    """
    a = tuple(a)
    n = len(a)
    if omega.is_zero():
        raise CriterionError("omega must be nonzero")
    if extended:
        if not 1 <= k <= (n + 1) // 2:
            raise CriterionError(f"k = {k} outside 1..{(n + 1) // 2}")
        want = n - 2 * k + 1
        if omega.degree != want or omega.coeffs[-1] != ctx.neg(1):
            raise CriterionError(f"omega must be -x^{want} + lower terms")
    else:
        if not 1 <= k <= n // 2:
            raise CriterionError(f"k = {k} outside 1..{n // 2}")
        if omega.degree > n - 2 * k:
            raise CriterionError(f"deg omega = {omega.degree} exceeds n - 2k = {n - 2 * k}")
    w = [poly_eval(ctx, omega, x) for x in a]
    zeros = [i for i, x in enumerate(w) if x == 0]
    if zeros:
        raise CriterionError(f"omega vanishes at indices {zeros[:8]}", zeros)
    L = l_values(ctx, a)
    v = _roots_of(ctx, [ctx.div(x, y) for x, y in zip(w, L)], "omega * L")
    return GrsCode(ctx, a, v, k, extended, dict(provenance or {}))


def extend_by_two(ctx, S, provenance=None):
    """Self-dual code of length |S| + 2 as the extended code on S + (0,).

    Needs |S| even, 0 not in S, eta(-a L_S(a)) = 1 on S and eta(-prod S) = 1;
    these are exactly the extended criterion on S + (0,).
    """
    S = tuple(S)
    if len(S) % 2:
        raise CriterionError(f"|S| = {len(S)} must be even")
    if 0 in S:
        raise FieldError("0 must not lie in S")
    return extended_self_dual_from_criterion(ctx, S + (0,), provenance)


def dual_multipliers(code):
    """u with GRS_{n-k}(a, u) the dual of GRS_k(a, v): u_i = 1/(v_i L_a(a_i))."""
    if code.extended:
        raise ValueError("dual multipliers are defined here for plain GRS codes only")
    ctx = code.ctx
    L = l_values(ctx, code.a)
    return tuple(ctx.inv(ctx.mul(v, x)) for v, x in zip(code.v, L))
