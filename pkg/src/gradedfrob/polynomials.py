"""Univariate polynomials (coefficient lists, constant term first) and root finding."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

import numpy as np

from .fields import Field, Mod, PrimeField


def trim(f):
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def evaluate(f, x):
    acc = 0 * x
    for c in reversed(f):
        acc = acc * x + c
    return acc


def poly_mul(f, g, zero):
    if not f or not g:
        return []
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
    return trim(out)


def poly_divmod(f, g):
    f = trim(f)
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    zero = g[-1] - g[-1]
    if len(f) < len(g):
        return [], f
    q = [zero] * (len(f) - len(g) + 1)
    r = list(f)
    inv = 1 / g[-1]
    for k in range(len(f) - len(g), -1, -1):
        c = r[k + len(g) - 1] * inv
        q[k] = c
        if c:
            for j, b in enumerate(g):
                r[k + j] = r[k + j] - c * b
    return trim(q), trim(r[: len(g) - 1])


def poly_gcd(f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, poly_divmod(f, g)[1]
    if f:
        inv = 1 / f[-1]
        f = [c * inv for c in f]
    return f


def poly_powmod(base, e: int, mod, one):
    result = [one]
    base = poly_divmod(base, mod)[1]
    zero = one - one
    while e:
        if e & 1:
            result = poly_divmod(poly_mul(result, base, zero), mod)[1]
        base = poly_divmod(poly_mul(base, base, zero), mod)[1]
        e >>= 1
    return result


def _rational_roots(f):
    """Distinct rational roots of f (rational coefficients), verified exactly.

    A primitive integer polynomial a_n x^n + ... has every rational root of the
    form k / a_n with k an integer; floating-point approximations locate k and
    exact evaluation confirms it.
    """
    f = [Fraction(c) for c in trim(f)]
    roots = []
    while len(f) > 1 and f[0] == 0:
        roots.append(Fraction(0))
        f = f[1:]
    if len(f) <= 1:
        return sorted(set(roots))
    den = 1
    for c in f:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    lead = ints[-1]
    approx = np.roots([float(c) for c in reversed(ints)])
    seen = set(roots)
    for z in approx:
        if abs(z.imag) > 1e-6 * max(1.0, abs(z.real)):
            continue
        k0 = round(z.real * lead)
        for k in (k0, k0 - 1, k0 + 1):
            cand = Fraction(k, lead)
            if cand in seen:
                continue
            if evaluate(f, cand) == 0:
                seen.add(cand)
                break
    return sorted(seen)


def _fp_roots(f, p: int, rng: random.Random):
    one = Mod(1, p)
    zero = Mod(0, p)
    f = trim([Mod(int(c), p) if isinstance(c, Mod) else one * c for c in f])
    if len(f) <= 1:
        return []
    if p <= 97:
        return [Mod(a, p) for a in range(p) if not evaluate(f, Mod(a, p))]
    # restrict to the product of distinct linear factors: gcd(f, x^p - x)
    xp = poly_powmod([zero, one], p, f, one)
    h = poly_gcd(f, trim(_sub(xp, [zero, one])))
    roots = []
    stack = [h]
    while stack:
        g = stack.pop()
        if len(g) <= 1:
            continue
        if len(g) == 2:
            roots.append(-g[0] / g[1])
            continue
        while True:
            a = Mod(rng.randrange(p), p)
            t = poly_powmod([a, one], (p - 1) // 2, g, one)
            d = poly_gcd(g, trim(_sub(t, [one])))
            if 1 < len(d) < len(g):
                stack.append(d)
                stack.append(poly_divmod(g, d)[0])
                break
    return sorted(roots, key=int)


def _sub(f, g):
    n = max(len(f), len(g))
    zero = (f or g)[0] - (f or g)[0]
    f = list(f) + [zero] * (n - len(f))
    g = list(g) + [zero] * (n - len(g))
    return [a - b for a, b in zip(f, g)]


def roots_in_field(f, field: Field, rng: random.Random | None = None):
    """Distinct roots of f lying in the base field."""
    if isinstance(field, PrimeField):
        return _fp_roots(f, field.p, rng or random.Random(0))
    return _rational_roots(f)
