"""Independent reference computations in sympy.

Root data come from textbook Cartan matrices rather than from the package,
and divided differences are computed by literal substitution and
cancellation, so agreement is a genuine cross-check.
"""

from __future__ import annotations

from fractions import Fraction

import sympy as sp

from schubdiag.polyring import Poly


def to_sympy(p: Poly, syms) -> sp.Expr:
    out = sp.Integer(0)
    for e, c in p.terms.items():
        c = Fraction(c)
        term = sp.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s**k
        out += term
    return sp.expand(out)


def from_sympy(expr, syms) -> Poly:
    poly = sp.Poly(sp.expand(expr), *syms)
    terms = {}
    for mon, c in poly.terms():
        c = sp.Rational(c)
        terms[tuple(mon)] = Fraction(int(c.p), int(c.q))
    return Poly(len(syms), terms)


def simple_data(family: str, rank: int, syms):
    """(simple roots as sympy expressions, simple reflections as substitution dicts)."""
    x = syms
    if family == "G2":
        a1, a2 = x
        roots = [a1, a2]
        refl = [{a1: -a1, a2: a2 + 3 * a1}, {a1: a1 + a2, a2: -a2}]
        return roots, refl
    n = rank + 1 if family == "A" else rank
    roots = [x[i] - x[i + 1] for i in range(n - 1)]
    refl = [{x[i]: x[i + 1], x[i + 1]: x[i]} for i in range(n - 1)]
    if family == "B":
        roots.append(x[n - 1])
        refl.append({x[n - 1]: -x[n - 1]})
    elif family == "C":
        roots.append(2 * x[n - 1])
        refl.append({x[n - 1]: -x[n - 1]})
    elif family == "D":
        roots.append(x[n - 2] + x[n - 1])
        refl.append({x[n - 2]: -x[n - 1], x[n - 1]: -x[n - 2]})
    return roots, refl


def ddiff(expr, i: int, roots, refl):
    """Divided difference by literal substitution; ``i`` is 1-based."""
    f = sp.expand(expr)
    g = f.subs(refl[i - 1], simultaneous=True)
    q = sp.cancel((f - g) / roots[i - 1])
    num, den = sp.fraction(q)
    assert den.is_number, f"division by {roots[i - 1]} not exact"
    return sp.expand(num / den)


def ddiff_word(expr, word, roots, refl):
    for i in reversed(word):
        expr = ddiff(expr, i, roots, refl)
    return expr
