"""Coset-union evaluation sets and the self-dual / self-orthogonal constructions.

Notation: q - 1 = e1*f1 = e2*f2, alpha = theta^e1, beta = theta^e2,
gamma = theta^(e1/2), A = <alpha>, B = <beta>, D1 = e1/gcd(e1,e2),
D2 = e2/gcd(e1,e2).  The evaluation set is

    S = M u N,  M = U_mu beta^(i_mu) A,  N = U_nu gamma^(2 j_nu + 1) B,

with |S| = n1 = s*f1 + t*f2.  Two families of parameters are supported:
``T31`` (2e2 | e1(r-1), e1 | e2(r+1)) and ``T32`` (2e2 | e1(r+1),
e1 | e2(r-1)); both need v2(e1) = l >= 2 and 2^l | e2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from sympy import divisors

from . import grs
from .field import FieldCtx, eta
from .poly import Poly, l_values

FAMILIES = ("T31", "T32")
SELF_DUAL_VARIANTS = ("n", "n+1", "n+2")
SO_VARIANTS = ("so1", "asd", "so3")


class ParameterError(ValueError):
    """Raised when parameters fail the structural or parity hypotheses."""

    def __init__(self, message, conditions=()):
        super().__init__(message)
        self.conditions = tuple(conditions)


def v2(x):
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class TheoremParams:
    ctx: FieldCtx
    family: str
    e1: int
    e2: int
    s: int
    t: int
    i_indices: tuple = None
    j_indices: tuple = None

    def __post_init__(self):
        if self.i_indices is None:
            object.__setattr__(self, "i_indices", tuple(range(self.s)))
        if self.j_indices is None:
            object.__setattr__(self, "j_indices", tuple(range(self.t)))
        object.__setattr__(self, "i_indices", tuple(self.i_indices))
        object.__setattr__(self, "j_indices", tuple(self.j_indices))

    @property
    def r(self):
        return self.ctx.r

    @property
    def f1(self):
        return (self.ctx.q - 1) // self.e1

    @property
    def f2(self):
        return (self.ctx.q - 1) // self.e2

    @property
    def l(self):
        return v2(self.e1)

    @property
    def D1(self):
        return self.e1 // math.gcd(self.e1, self.e2)

    @property
    def D2(self):
        return self.e2 // math.gcd(self.e1, self.e2)

    @property
    def n1(self):
        return self.s * self.f1 + self.t * self.f2

    def as_dict(self):
        return {"family": self.family, "e1": self.e1, "f1": self.f1, "e2": self.e2,
                "f2": self.f2, "s": self.s, "t": self.t,
                "i_indices": list(self.i_indices), "j_indices": list(self.j_indices)}


@dataclass
class CaseReport:
    params: TheoremParams
    errors: list = field(default_factory=list)    # (condition, message)
    variants: dict = field(default_factory=dict)  # variant -> bool
    failed: dict = field(default_factory=dict)    # variant -> condition names

    @property
    def structurally_valid(self):
        return not self.errors

    def applies(self, variant):
        return self.structurally_valid and self.variants.get(variant, False)

    def to_dict(self):
        return {"errors": [list(e) for e in self.errors],
                "variants": dict(self.variants),
                "failed": {k: list(v) for k, v in self.failed.items()}}


def cosets_distinct(D1, indices):
    """beta^i A are pairwise distinct cosets iff the i are distinct mod D1."""
    residues = [i % D1 for i in indices]
    return len(set(residues)) == len(residues)


def _parities(p):
    """Integer quantities whose parity the hypotheses test."""
    r, t, s = p.r, p.t, p.s
    h = (r + 1) // 2
    x = t * p.e1 * (r + 1) // (2 * p.e2)  # (r+1)/2 * t*e1/e2, integral for T32
    return {
        "T31 base": (s - 1) * (r + 1),                  # must be 0 mod 4
        "(r+1)/2 (t e1/e2 + 1)": x + h,
        "(r+1)/2 (t e1/e2 + t)": x + h * t,
        "(t-1)(r+1)/2": (t - 1) * h,
        "t(r+1)e1/(2e2)": x,
        "(r+1)/2": h,
    }


def validate(params):
    """Check structural invariants and report which variants apply."""
    p = params
    q = p.ctx.q
    rep = CaseReport(p)
    err = rep.errors
    if p.family not in FAMILIES:
        err.append(("family", f"unknown family {p.family!r}"))
        return rep
    if p.e1 <= 0 or (q - 1) % p.e1:
        err.append(("e1 divides q-1", f"e1 = {p.e1} does not divide q - 1 = {q - 1}"))
    if p.e2 <= 0 or (q - 1) % p.e2:
        err.append(("e2 divides q-1", f"e2 = {p.e2} does not divide q - 1 = {q - 1}"))
    if err:
        return rep
    l, r = p.l, p.r
    if l < 2:
        err.append(("valuation", f"v2(e1) = {l} but must be at least 2"))
    elif p.e2 % (1 << l):
        err.append(("valuation", f"v2(e1) = {l} but 2^{l} does not divide e2 = {p.e2}"))
    if p.family == "T31":
        pair = [("2e2 | e1(r-1)", (p.e1 * (r - 1)) % (2 * p.e2) == 0),
                ("e1 | e2(r+1)", (p.e2 * (r + 1)) % p.e1 == 0)]
    else:
        pair = [("2e2 | e1(r+1)", (p.e1 * (r + 1)) % (2 * p.e2) == 0),
                ("e1 | e2(r-1)", (p.e2 * (r - 1)) % p.e1 == 0)]
    for name, ok in pair:
        if not ok:
            err.append(("divisibility", f"{name} fails for e1 = {p.e1}, e2 = {p.e2}, r = {r}"))
    if not 1 <= p.s <= p.D1:
        err.append(("index range", f"s = {p.s} outside 1..D1 = {p.D1}"))
    if not 1 <= p.t <= p.D2:
        err.append(("index range", f"t = {p.t} outside 1..D2 = {p.D2}"))
    if len(p.i_indices) != p.s:
        err.append(("index range", f"{len(p.i_indices)} i-indices for s = {p.s}"))
    if len(p.j_indices) != p.t:
        err.append(("index range", f"{len(p.j_indices)} j-indices for t = {p.t}"))
    if not cosets_distinct(p.D1, p.i_indices):
        err.append(("distinctness", f"i-indices {list(p.i_indices)} repeat mod D1 = {p.D1}"))
    if not cosets_distinct(p.D2, p.j_indices):
        err.append(("distinctness", f"j-indices {list(p.j_indices)} repeat mod D2 = {p.D2}"))
    if err:
        return rep

    par = _parities(p)
    even = lambda name: par[name] % 2 == 0
    n1_even = p.n1 % 2 == 0
    conds = {}
    if p.family == "T31":
        base = ("4 | (s-1)(r+1)", par["T31 base"] % 4 == 0)
        conds["n"] = [base, ("n1 even", n1_even)]
        conds["n+1"] = [base, ("n1 odd", not n1_even)]
        conds["n+2"] = [base, ("n1 even", n1_even)]
        conds["so1"] = [base, ("n1 even", n1_even)]
        conds["asd"] = [base, ("n1 even", n1_even)]
        conds["so3"] = [base, ("n1 odd", not n1_even)]
    else:
        c1 = ("(r+1)/2 (t e1/e2 + 1) even", even("(r+1)/2 (t e1/e2 + 1)"))
        c2 = ("(r+1)/2 (t e1/e2 + t) even", even("(r+1)/2 (t e1/e2 + t)"))
        c3 = ("(t-1)(r+1)/2 even", even("(t-1)(r+1)/2"))
        conds["n"] = [c1, ("n1 even", n1_even)]
        conds["n+1"] = [c2, c3, ("n1 odd", not n1_even)]
        conds["n+2"] = [c2, c3, ("n1 even", n1_even)]
        conds["so1"] = [c1, ("n1 even", n1_even)]
        # the almost-self-dual case states its own, stronger parity demands
        conds["asd"] = [("t(r+1)e1/(2e2) even", even("t(r+1)e1/(2e2)")),
                        ("(r+1)/2 even", even("(r+1)/2")), ("n1 even", n1_even)]
        conds["so3"] = [c2, c3, ("n1 odd", not n1_even)]
    for variant, cs in conds.items():
        bad = [name for name, ok in cs if not ok]
        rep.variants[variant] = not bad
        if bad:
            rep.failed[variant] = bad
    return rep


def _require(params, variant):
    rep = validate(params)
    if not rep.structurally_valid:
        names = [c for c, _ in rep.errors]
        raise ParameterError("; ".join(m for _, m in rep.errors), names)
    if not rep.variants.get(variant, False):
        names = rep.failed.get(variant, ["unknown variant"])
        raise ParameterError(f"variant {variant!r} not available: needs "
                             + ", ".join(names), names)
    return rep


@dataclass(frozen=True)
class EvalSet:
    elements: tuple
    plan: TheoremParams
    m_size: int  # the first m_size elements form M

    @property
    def M(self):
        return self.elements[:self.m_size]

    @property
    def N(self):
        return self.elements[self.m_size:]

    def __len__(self):
        return len(self.elements)


def build_eval_set(params):
    """S = M then N, each coset listed by ascending exponent 1..f."""
    rep = validate(params)
    if not rep.structurally_valid:
        raise ParameterError("; ".join(m for _, m in rep.errors),
                             [c for c, _ in rep.errors])
    p, ctx = params, params.ctx
    qm1 = ctx.q - 1
    half = p.e1 // 2
    exps = []
    for i in p.i_indices:
        exps.extend((p.e2 * i + p.e1 * j) % qm1 for j in range(1, p.f1 + 1))
    m_size = len(exps)
    for j in p.j_indices:
        exps.extend((half * (2 * j + 1) + p.e2 * k) % qm1 for k in range(1, p.f2 + 1))
    assert len(set(exps)) == len(exps), "M and N overlap or a coset repeats"
    elements = tuple(ctx.theta_pow(e) for e in exps)
    return EvalSet(elements, p, m_size)


@dataclass
class CharacterProfile:
    m_chars: set
    n_chars: set
    predicted_m: int
    predicted_n: int

    @property
    def constant(self):
        return len(self.m_chars | self.n_chars) == 1

    @property
    def agrees(self):
        return self.m_chars <= {self.predicted_m} and self.n_chars <= {self.predicted_n}

    def to_dict(self):
        return {"m_chars": sorted(self.m_chars), "n_chars": sorted(self.n_chars),
                "predicted_m": self.predicted_m, "predicted_n": self.predicted_n,
                "constant": self.constant, "agrees": self.agrees}


def predicted_characters(params):
    """Closed-form eta(L_S) on the M and N classes."""
    par = _parities(params)
    sign = lambda x: -1 if x % 2 else 1
    if params.family == "T31":
        return sign(par["T31 base"] // 2), 1
    return sign(par["(r+1)/2 (t e1/e2 + t)"]), sign(par["(t-1)(r+1)/2"])


def character_profile(ctx, S, L=None):
    """Directly computed eta(L_S(a)) per class against the predictions.

    Disagreement is reported rather than raised.
    """
    if L is None:
        L = l_values(ctx, S.elements)
    chars = [eta(ctx, x) for x in L]
    pm, pn = predicted_characters(S.plan)
    return CharacterProfile(set(chars[:S.m_size]), set(chars[S.m_size:]), pm, pn)


def construct_code(params, variant):
    """Self-dual code of length n1, n1 + 1 or n1 + 2."""
    _require(params, variant)
    S = build_eval_set(params)
    prov = {"theorem": params.family, **params.as_dict(), "variant": variant}
    ctx = params.ctx
    if variant == "n":
        return grs.self_dual_from_criterion(ctx, S.elements, prov)
    if variant == "n+1":
        return grs.extended_self_dual_from_criterion(ctx, S.elements, prov)
    return grs.extend_by_two(ctx, S.elements, prov)


def _so1_omega(params):
    ctx, r = params.ctx, params.r
    if params.family == "T32" and (r + 1) % 4:
        return Poly((ctx.theta_pow(params.t * (r + 1) // 2 + 1),))
    return Poly((0, 1))


def construct_self_orthogonal(params, k, variant):
    """[n1, k] (variant "so1") or [n1 + 1, k] on S u {0} (variant "so3")."""
    _require(params, variant)
    ctx = params.ctx
    S = build_eval_set(params)
    prov = {"theorem": params.family, **params.as_dict(), "variant": variant, "k": k}
    if variant == "so1":
        kmax = params.n1 // 2 - 1
        a, omega = S.elements, _so1_omega(params)
    elif variant == "so3":
        kmax = (params.n1 + 1) // 2 - 1
        a, omega = S.elements + (0,), Poly((ctx.theta_pow(params.e1 // 2),))
    else:
        raise ParameterError(f"unknown self-orthogonal variant {variant!r}")
    if not 1 <= k <= kmax:
        raise ParameterError(f"k = {k} outside 1..{kmax}", ["k range"])
    prov["omega"] = omega.to_list(ctx)
    return grs.self_orthogonal_from_witness(ctx, a, k, omega, False, prov)


def construct_almost_self_dual(params):
    """[n1 + 1, n1/2] extended code with omega(x) = -x."""
    _require(params, "asd")
    ctx = params.ctx
    S = build_eval_set(params)
    omega = Poly((0, ctx.neg(1)))
    prov = {"theorem": params.family, **params.as_dict(), "variant": "asd",
            "omega": omega.to_list(ctx)}
    return grs.self_orthogonal_from_witness(ctx, S.elements, params.n1 // 2, omega,
                                            True, prov)


def valid_params(ctx, family):
    """All structurally valid parameter sets with default indices.

    Structural validity depends on (e1, e2) alone once s and t are in range.
    """
    q = ctx.q
    out = []
    for e1 in divisors(q - 1):
        if v2(e1) < 2:
            continue
        for e2 in divisors(q - 1):
            if not validate(TheoremParams(ctx, family, e1, e2, 1, 1)).structurally_valid:
                continue
            g = math.gcd(e1, e2)
            out.extend(TheoremParams(ctx, family, e1, e2, s, t)
                       for s in range(1, e1 // g + 1) for t in range(1, e2 // g + 1))
    return out
