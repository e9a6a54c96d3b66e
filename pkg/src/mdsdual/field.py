"""Exact arithmetic in GF(q), q = r^2 = p^(2m) with p odd.

Elements are plain ints: the coefficient list (c_0, ..., c_{2m-1}) of a
residue class modulo the field's modulus polynomial, packed as
``c_0 + c_1 p + ... + c_{2m-1} p^(2m-1)``.  Integer order on these codes is
the lexicographic order of the descending tuple (c_{2m-1}, ..., c_0), which is
what every deterministic tie-break in this package uses.

Fields up to ``TABLE_LIMIT`` elements carry exp/log tables (plain lists for
scalar work, numpy arrays for the vectorised ``*_arr`` helpers).  Larger fields
fall back to polynomial arithmetic and Tonelli-Shanks.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field

import numpy as np
from sympy import factorint, isprime

TABLE_LIMIT = 1 << 22
DEFAULT_SIZE_CAP = 1 << 31


class FieldError(ValueError):
    pass


# --- GF(p)[x] helpers (ascending coefficient lists) ---------------------------

def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f, g, p):
    """Remainder of f modulo g over GF(p); g need not be monic."""
    f = _trim(list(f))
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        _trim(f)
    return f


def _pmulmod(a, b, g, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod(out, g, p)


def _ppowmod(a, e, g, p):
    result = [1]
    base = _pmod(a, g, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, g, p)
        base = _pmulmod(base, base, g, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(f, p):
    """Rabin's test for a monic ascending coefficient list over GF(p)."""
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]
    if _ppowmod(x, p ** n, f, p) != _pmod(x, f, p):
        return False
    for ell in factorint(n):
        h = _ppowmod(x, p ** (n // ell), f, p)
        h += [0] * (2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def _smallest_irreducible(p, n):
    # codes ordered by (c_{n-1}, ..., c_0), i.e. plain integer order
    for code in range(p ** n):
        f = [(code // p ** i) % p for i in range(n)] + [1]
        if f[0] and is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {n} over GF({p})")


# --- the field ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldCtx:
    """GF(p^(2m)) with a fixed modulus and primitive element ``theta``."""

    p: int
    m: int
    modulus: tuple
    theta: int
    q_minus_1_factors: dict = dc_field(repr=False)
    _exp: list | None = dc_field(default=None, repr=False)
    _log: list | None = dc_field(default=None, repr=False)
    _exp_np: np.ndarray | None = dc_field(default=None, repr=False)
    _log_np: np.ndarray | None = dc_field(default=None, repr=False)

    @property
    def degree(self):
        return 2 * self.m

    @property
    def r(self):
        return self.p ** self.m

    @property
    def q(self):
        return self.p ** (2 * self.m)

    @property
    def has_tables(self):
        return self._exp is not None

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"

    # conversion

    def coeffs(self, a):
        p = self.p
        return [(a // p ** i) % p for i in range(self.degree)]

    def elem(self, coeffs):
        if len(coeffs) > self.degree:
            raise FieldError(f"expected at most {self.degree} coefficients")
        return sum((c % self.p) * self.p ** i for i, c in enumerate(coeffs))

    def from_int(self, c):
        """Embed an integer via GF(p)."""
        return c % self.p

    def to_dict(self):
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus),
                "theta": self.coeffs(self.theta)}

    # scalar arithmetic

    def add(self, a, b):
        p, out, w = self.p, 0, 1
        for _ in range(self.degree):
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
            w *= p
        return out

    def neg(self, a):
        p, out, w = self.p, 0, 1
        for _ in range(self.degree):
            out += ((-a) % p) * w
            a //= p
            w *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, a, c):
        """Multiply by the integer c (an element of GF(p))."""
        c %= self.p
        p, out, w = self.p, 0, 1
        for _ in range(self.degree):
            out += ((a % p) * c % p) * w
            a //= p
            w *= p
        return out

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self.elem(_pmulmod(self.coeffs(a), self.coeffs(b),
                                  list(self.modulus), self.p))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        e %= self.q - 1
        return self.elem(_ppowmod(self.coeffs(a), e, list(self.modulus),
                                  self.p))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def theta_pow(self, k):
        if self._exp is not None:
            return self._exp[k % (self.q - 1)]
        return self.pow(self.theta, k % (self.q - 1))

    def log(self, a):
        """Discrete log base theta (tables required)."""
        if a == 0:
            raise FieldError("log of zero")
        if self._log is None:
            raise FieldError("discrete log needs tables")
        return self._log[a]

    def order(self, a):
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.q - 1
        for ell, k in self.q_minus_1_factors.items():
            for _ in range(k):
                if self.pow(a, n // ell) == 1:
                    n //= ell
                else:
                    break
        return n

    def product(self, items):
        return functools.reduce(self.mul, items, 1)

    def sum(self, items):
        return functools.reduce(self.add, items, 0)

    # vectorised helpers over numpy int64 arrays of element codes

    def _digits(self, a):
        p = self.p
        return [(a // p ** i) % p for i in range(self.degree)]

    def _undigits(self, ds):
        p = self.p
        out = np.zeros_like(ds[0])
        for i, d in enumerate(ds):
            out += (d % p) * p ** i
        return out

    def add_arr(self, a, b):
        return self._undigits([x + y for x, y in zip(self._digits(a),
                                                      self._digits(b))])

    def sub_arr(self, a, b):
        return self._undigits([x - y for x, y in zip(self._digits(a),
                                                      self._digits(b))])

    def neg_arr(self, a):
        return self._undigits([-x for x in self._digits(a)])

    def sum_arr(self, a, axis=None):
        return self._undigits([d.sum(axis=axis) for d in
                               self._digits(np.asarray(a, dtype=np.int64))])

    def mul_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._exp_np is None:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b)
        la, lb = self._log_np[a], self._log_np[b]
        out = self._exp_np[(la + lb) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def log_arr(self, a):
        """Discrete logs of nonzero elements (tables required)."""
        if self._log_np is None:
            raise FieldError("discrete log needs tables")
        return self._log_np[np.asarray(a, dtype=np.int64)]

    def exp_arr(self, k):
        if self._exp_np is None:
            return np.vectorize(self.theta_pow, otypes=[np.int64])(k)
        return self._exp_np[np.asarray(k, dtype=np.int64) % (self.q - 1)]


@functools.lru_cache(maxsize=None)
def field_new(p, m, size_cap=DEFAULT_SIZE_CAP):
    """Build GF(p^(2m)) deterministically.

    The modulus is the lexicographically smallest monic irreducible of degree
    2m and theta the smallest element (in code order) of order q - 1.
    """
    if not isinstance(p, int) or not isinstance(m, int):
        raise FieldError("p and m must be integers")
    if p == 2 or p < 2:
        raise FieldError("p must be odd")
    if not isprime(p):
        raise FieldError(f"p = {p} is not prime")
    if m < 1:
        raise FieldError("m must be positive")
    q = p ** (2 * m)
    if q > size_cap:
        raise FieldError(f"q = {q} exceeds the field size cap {size_cap}")

    modulus = _smallest_irreducible(p, 2 * m)
    factors = factorint(q - 1)
    probe = FieldCtx(p, m, modulus, 0, factors)
    theta = None
    for a in range(1, q):
        if all(probe.pow(a, (q - 1) // ell) != 1 for ell in factors):
            theta = a
            break
    assert theta is not None
    if q > TABLE_LIMIT:
        return FieldCtx(p, m, modulus, theta, factors)

    exp = [0] * (q - 1)
    log = [-1] * q
    x = 1
    for k in range(q - 1):
        exp[k] = x
        log[x] = k
        x = probe.mul(x, theta)
    assert x == 1
    return FieldCtx(p, m, modulus, theta, factors, exp, log,
                    np.array(exp, dtype=np.int64), np.array(log, dtype=np.int64))


def field_for_r(r):
    """GF(r^2) for an odd prime power r."""
    f = factorint(r)
    if len(f) != 1:
        raise FieldError(f"r = {r} is not a prime power")
    (p, e), = f.items()
    return field_new(p, e)


def field_from_dict(d):
    ctx = field_new(d["p"], d["m"])
    if list(ctx.modulus) != list(d["modulus"]) or ctx.coeffs(ctx.theta) != list(d["theta"]):
        raise FieldError("serialized field does not match the canonical construction")
    return ctx


# --- quadratic character, square roots, Frobenius -----------------------------

def eta(ctx, a):
    """Quadratic character: +1 on nonzero squares, -1 on non-squares."""
    if a == 0:
        raise FieldError("eta is undefined at 0")
    if ctx.has_tables:
        return 1 if ctx._log[a] % 2 == 0 else -1
    return 1 if ctx.pow(a, (ctx.q - 1) // 2) == 1 else -1


def sqrt(ctx, a):
    """Square root; of the two roots the one with the smaller code."""
    if a == 0:
        return 0
    if eta(ctx, a) != 1:
        raise FieldError("not a square")
    if ctx.has_tables:
        b = ctx._exp[ctx._log[a] // 2]
    else:
        b = _tonelli_shanks(ctx, a)
    return min(b, ctx.neg(b))


def _tonelli_shanks(ctx, a):
    q = ctx.q
    s, Q = 0, q - 1
    while Q % 2 == 0:
        Q //= 2
        s += 1
    c = ctx.pow(ctx.theta, Q)  # theta is a non-square
    x = ctx.pow(a, (Q + 1) // 2)
    t = ctx.pow(a, Q)
    M = s
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = ctx.mul(t2, t2)
            i += 1
        b = ctx.pow(c, 1 << (M - i - 1))
        x = ctx.mul(x, b)
        c = ctx.mul(b, b)
        t = ctx.mul(t, c)
        M = i
    return x


def frob_r(ctx, a):
    """a -> a^r, the involution of GF(r^2) fixing GF(r)."""
    return ctx.pow(a, ctx.r)
