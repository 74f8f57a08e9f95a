"""Truncated multivariate power series with exact rational coefficients.

A series is a dict mapping exponent tuples to nonzero Fractions.  Truncation
is driven by a `keep` predicate on exponent tuples; every operation drops the
terms for which it returns False, so keep must be downward closed
(keep(e) implies keep of anything componentwise smaller).
"""

from fractions import Fraction
from math import comb


def degree_cap(cap, idxs=None):
    """keep predicate: total degree over the given variable indexes <= cap."""

    def keep(exps):
        if idxs is None:
            return sum(exps) <= cap
        return sum(exps[i] for i in idxs) <= cap

    return keep


def combine_caps(*keeps):
    return lambda exps: all(k(exps) for k in keeps)


def monomial(exps, coeff=1):
    coeff = Fraction(coeff)
    return {tuple(exps): coeff} if coeff else {}


def one(nvars):
    return monomial((0,) * nvars)


def add(a, b):
    out = dict(a)
    for e, c in b.items():
        c2 = out.get(e, 0) + c
        if c2:
            out[e] = c2
        else:
            out.pop(e, None)
    return out


def scale(a, coeff):
    coeff = Fraction(coeff)
    if not coeff:
        return {}
    return {e: c * coeff for e, c in a.items()}


def mul(a, b, keep):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if not keep(e):
                continue
            c = out.get(e, 0) + c1 * c2
            if c:
                out[e] = c
            else:
                out.pop(e, None)
    return out


def binomial_factor(exps, power, keep):
    """(1 - x^exps)^power truncated; power may be negative."""
    exps = tuple(exps)
    assert any(exps)
    nvars = len(exps)
    if not keep(exps):
        return one(nvars)
    out = {}
    k = 0
    while True:
        e = tuple(k * x for x in exps)
        if k > 0 and not keep(e):
            break
        if power >= 0:
            if k > power:
                break
            c = Fraction((-1) ** k * comb(power, k))
        else:
            c = Fraction(comb(k - power - 1, -power - 1))
        out[e] = c
        k += 1
    return out


def product(factors, nvars, keep):
    out = one(nvars)
    for f in factors:
        out = mul(out, f, keep)
    return out


def substitute(a, var, target_var):
    """Fold variable `var` into `target_var` (e.g. set t = q)."""
    out = {}
    for e, c in a.items():
        e2 = list(e)
        e2[target_var] += e2[var]
        e2[var] = 0
        e2 = tuple(e2)
        c2 = out.get(e2, 0) + c
        if c2:
            out[e2] = c2
        else:
            out.pop(e2, None)
    return out


def coefficient(a, exps):
    return a.get(tuple(exps), Fraction(0))


def restrict(a, keep):
    return {e: c for e, c in a.items() if keep(e)}
