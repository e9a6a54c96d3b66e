"""Batch checks: small-field sweeps and the published example lengths."""

from __future__ import annotations

from dataclasses import dataclass

from . import construct as cs
from .enumeration import lengths_theorem
from .field import field_for_r
from .poly import l_values
from .verify import is_almost_self_dual, is_self_dual, is_self_orthogonal

# r -> (family, lengths the family is reported to reach)
EXAMPLE_LENGTHS = {
    149: ("T31", (7504, 8180, 4944, 6172, 9018)),
    151: ("T32", (7148, 9592, 6616, 10040, 8288)),
}

SMALL_R = (5, 7, 9, 11, 13)


@dataclass
class SweepResult:
    q: int
    params: cs.TheoremParams
    variant: str
    k: int
    passed: bool
    profile_agrees: bool
    detail: object = None
    code: object = None

    def label(self):
        p = self.params
        return (f"q={self.q} {p.family} e1={p.e1} e2={p.e2} s={p.s} t={p.t} "
                f"variant={self.variant} k={self.k}")


def _so_ks(kmax):
    return sorted({1, kmax}) if kmax >= 1 else []


def sweep_field(ctx, families=cs.FAMILIES, orthogonal=True):
    """Construct and fully verify every applicable variant over one field."""
    for family in families:
        for params in cs.valid_params(ctx, family):
            rep = cs.validate(params)
            S = cs.build_eval_set(params)
            prof = cs.character_profile(ctx, S, l_values(ctx, S.elements))
            for variant in cs.SELF_DUAL_VARIANTS:
                if rep.applies(variant):
                    code = cs.construct_code(params, variant)
                    v = is_self_dual(code, mode="full")
                    yield SweepResult(ctx.q, params, variant, code.k, v.passed,
                                      prof.agrees, v.witness, code)
            if not orthogonal:
                continue
            for variant, kmax in (("so1", params.n1 // 2 - 1),
                                  ("so3", (params.n1 + 1) // 2 - 1)):
                if rep.applies(variant):
                    for k in _so_ks(kmax):
                        code = cs.construct_self_orthogonal(params, k, variant)
                        v = is_self_orthogonal(code)
                        yield SweepResult(ctx.q, params, variant, k, v.passed,
                                          prof.agrees, v.witness, code)
            if rep.applies("asd"):
                code = cs.construct_almost_self_dual(params)
                v = is_almost_self_dual(code)
                yield SweepResult(ctx.q, params, "asd", code.k, v.passed,
                                  prof.agrees, v.witness, code)


def example_membership():
    """(r, n, present) for every published example length."""
    out = []
    for r, (family, lengths) in EXAMPLE_LENGTHS.items():
        have = {rec.n for rec in lengths_theorem(r * r, family)}
        out.extend((r, n, n in have) for n in lengths)
    return out


def example_instance(r, n, samples=10_000, seed=0):
    """Build the witness code for a published length and verify it by sampling."""
    family, _ = EXAMPLE_LENGTHS[r]
    recs = {rec.n: rec for rec in lengths_theorem(r * r, family)}
    rec = recs[n]
    e1, _, e2, _, s, t, variant = rec.witness
    ctx = field_for_r(r)
    params = cs.TheoremParams(ctx, family, e1, e2, s, t)
    S = cs.build_eval_set(params)
    prof = cs.character_profile(ctx, S)
    code = cs.construct_code(params, variant)
    verdict = is_self_dual(code, mode="sampled", samples=samples, seed=seed)
    return code, prof, verdict
