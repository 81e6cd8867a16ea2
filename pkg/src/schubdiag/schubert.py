"""Divided differences and Schubert-class coefficients on G/B and G/B x G/B.

Conventions
-----------
``d_w = d_{i1} o ... o d_{ik}`` for a reduced word ``i1...ik`` of ``w``.
Schubert representatives are ``sigma_w = d_{w^-1 w0}(prod(alpha > 0) / |W|)``,
so ``d_i sigma_w = sigma_{w s_i}`` whenever the length drops.  The coefficient
of ``sigma_u`` in the class of a homogeneous ``f`` with ``deg f = l(u)`` is the
constant ``d_u(f)``; for two-factor classes the coefficient of
``sigma_u (x) sigma_v`` is ``d^x_u d^y_v (f)``.  Poincare duality reads
``d_{w0}(sigma_u sigma_v) = delta(v, w0 u)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polyring import Coeff, Exp, Poly, _norm, exact_divide, monomials, product, substitute_linear
from .rootsys import RootSystem, WeylElement, WeylGroup, weyl_group


class DegreeMismatch(ValueError):
    pass


def _blocks(rs: RootSystem, p: Poly) -> int:
    if p.nvars == rs.coord_dim:
        return 1
    if p.nvars == 2 * rs.coord_dim:
        return 2
    raise ValueError(f"{p.nvars} variables do not match {rs.name} (coordinate dimension {rs.coord_dim})")


@functools.lru_cache(maxsize=None)
def _operator(rs: RootSystem, i: int, nblocks: int, block: int) -> tuple[list[tuple[int, ...]], Poly]:
    """Substitution images and root linear form for s_i acting on one block."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"simple reflection index {i} out of range for {rs.name}")
    d = rs.coord_dim
    n = d * nblocks
    off = d * block
    s = rs.simple_reflections[i - 1]
    images = []
    for j in range(n):
        v = [0] * n
        if off <= j < off + d:
            for k in range(d):
                v[off + k] = s[k][j - off]
        else:
            v[j] = 1
        images.append(tuple(v))
    root = [0] * n
    for k, c in enumerate(rs.simple_roots[i - 1]):
        root[off + k] = c
    return images, Poly.linear(root)


def simple_reflection_action(rs: RootSystem, i: int, p: Poly, block: int = 0) -> Poly:
    images, _ = _operator(rs, i, _blocks(rs, p), block)
    return substitute_linear(p, images, p.nvars)


def weyl_action(rs: RootSystem, w: WeylElement, p: Poly, block: int = 0) -> Poly:
    """w . p, with w acting on the chosen block of variables."""
    d = rs.coord_dim
    n = p.nvars
    off = d * block
    cols = w.images()
    images = []
    for j in range(n):
        v = [0] * n
        if off <= j < off + d:
            for k in range(d):
                v[off + k] = cols[j - off][k]
        else:
            v[j] = 1
        images.append(tuple(v))
    return substitute_linear(p, images, n)


def divided_difference(rs: RootSystem, i: int, p: Poly, block: int = 0) -> Poly:
    """(p - s_i p) / alpha_i, computed by exact division."""
    images, root = _operator(rs, i, _blocks(rs, p), block)
    if p.is_zero():
        return p
    diff = p - substitute_linear(p, images, p.nvars)
    return exact_divide(diff, root)


def _check_reduced(W: WeylGroup, word: Sequence[int]) -> WeylElement:
    w = W.from_word(word)
    if w.length != len(word):
        raise ValueError(f"word not reduced: {''.join(map(str, word))}")
    return w


def divided_difference_word(rs: RootSystem, word: Sequence[int], p: Poly, block: int = 0) -> Poly:
    """The composition d_{i1} o ... o d_{ik} applied to ``p`` (rightmost first)."""
    _check_reduced(weyl_group(rs), word)
    for i in reversed(tuple(word)):
        p = divided_difference(rs, i, p, block)
        if p.is_zero():
            break
    return p


def divided_difference_element(rs: RootSystem, w: WeylElement, p: Poly, block: int = 0) -> Poly:
    return divided_difference_word(rs, w.word, p, block)


def roots_product(rs: RootSystem) -> Poly:
    return product((Poly.linear(a) for a in rs.positive_roots), rs.coord_dim)


def point_class_rep(rs: RootSystem) -> Poly:
    return roots_product(rs).scale(Fraction(1, len(weyl_group(rs))))


def schubert_class_rep(rs: RootSystem, w: WeylElement) -> Poly:
    W = weyl_group(rs)
    target = W.mul(W.inverse(w), W.longest)
    return divided_difference_word(rs, target.word, point_class_rep(rs))


def schubert_reps(rs: RootSystem) -> dict[WeylElement, Poly]:
    """Representatives of all Schubert classes, walking down from the point class."""
    W = weyl_group(rs)
    reps = {W.longest: point_class_rep(rs)}
    for w in reversed(W.elements):
        if w not in reps:
            continue
        for i in range(1, rs.rank + 1):
            ws = W.from_word(w.word + (i,))
            if ws.length < w.length and ws not in reps:
                reps[ws] = divided_difference(rs, i, reps[w])
    return reps


def _constant(p: Poly) -> Coeff:
    if not p.is_constant():
        raise AssertionError("coefficient extraction left a nonconstant polynomial")
    return p.constant_term()


def extract_coefficient(rs: RootSystem, p: Poly, u: WeylElement) -> Coeff:
    """Coefficient of sigma_u in the class of the homogeneous polynomial ``p``."""
    if _blocks(rs, p) != 1:
        raise ValueError("single-factor extraction expects x-variables only")
    if not p.is_homogeneous():
        raise DegreeMismatch("polynomial is not homogeneous")
    if not p.is_zero() and p.degree() != u.length:
        raise DegreeMismatch(f"degree {p.degree()} does not match length {u.length}")
    return _constant(divided_difference_word(rs, u.word, p))


def extract_pair_coefficient(rs: RootSystem, p: Poly, u: WeylElement, v: WeylElement) -> Coeff:
    """Coefficient of sigma_u (x) sigma_v, by direct composition d^x_u d^y_v."""
    if _blocks(rs, p) != 2:
        raise ValueError("pair extraction expects a polynomial over x;y")
    if not p.is_homogeneous():
        raise DegreeMismatch("polynomial is not homogeneous")
    if not p.is_zero() and p.degree() != u.length + v.length:
        raise DegreeMismatch(f"degree {p.degree()} != l(u) + l(v) = {u.length + v.length}")
    d = rs.coord_dim
    # Only the part of x-degree l(u) (hence y-degree l(v)) can survive to a constant.
    part = Poly(p.nvars, {e: c for e, c in p.terms.items() if sum(e[:d]) == u.length}, _trusted=True)
    q = divided_difference_word(rs, v.word, part, block=1)
    q = divided_difference_word(rs, u.word, q, block=0)
    return _constant(q)


class CoefficientTable:
    """Memoized top-degree functionals ``m -> d_w(m)`` on coordinate monomials.

    ``functional(w)`` maps each monomial of degree ``l(w)`` to the constant
    ``d_w(m)``.  Built by ``d_w = d_{w s_i} o d_i`` where ``i`` is the last
    letter of the stored reduced word of ``w``.  Results do not depend on
    the memo (it only caches pure values).
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.W = weyl_group(rs)
        d = rs.coord_dim
        self._tables: dict[WeylElement, dict[Exp, Coeff]] = {self.W.identity: {(0,) * d: 1}}
        self._dd: dict[tuple[int, Exp], dict[Exp, Coeff]] = {}
        self._monomials: dict[int, list[Exp]] = {}

    def _mons(self, k: int) -> list[Exp]:
        if k not in self._monomials:
            self._monomials[k] = list(monomials(self.rs.coord_dim, k))
        return self._monomials[k]

    def _dd_mono(self, i: int, m: Exp) -> dict[Exp, Coeff]:
        key = (i, m)
        if key not in self._dd:
            self._dd[key] = divided_difference(self.rs, i, Poly(len(m), {m: 1}, _trusted=True)).terms
        return self._dd[key]

    def functional(self, w: WeylElement) -> dict[Exp, Coeff]:
        table = self._tables.get(w)
        if table is not None:
            return table
        chain = []
        cur = w
        while cur not in self._tables:
            chain.append(cur)
            cur = self.W.from_word(cur.word[:-1])
        for elem in reversed(chain):
            i = elem.word[-1]
            parent = self._tables[self.W.from_word(elem.word[:-1])]
            table = {}
            for m in self._mons(elem.length):
                s = 0
                for mm, c in self._dd_mono(i, m).items():
                    v = parent.get(mm)
                    if v:
                        s += c * v
                if s:
                    table[m] = s
            self._tables[elem] = table
        return self._tables[w]

    def apply(self, w: WeylElement, p: Poly) -> Coeff:
        """d_w(p) for p over x-coordinates, using only the degree-l(w) part."""
        L = self.functional(w)
        s = 0
        for e, c in p.terms.items():
            v = L.get(e)
            if v:
                s += c * v
        return _norm(s)

    def coefficients(self, p: Poly) -> dict[WeylElement, Coeff]:
        if _blocks(self.rs, p) != 1:
            raise ValueError("single-factor coefficients expect x-variables only")
        if not p.is_homogeneous():
            raise DegreeMismatch("polynomial is not homogeneous")
        out = {}
        if p.is_zero():
            return out
        for u in self.W.by_length(p.degree()):
            c = self.apply(u, p)
            if c:
                out[u] = c
        return out

    def pair_coefficients(self, p: Poly) -> dict[tuple[WeylElement, WeylElement], Coeff]:
        """All nonzero coefficients of sigma_u (x) sigma_v, l(u) + l(v) = deg p."""
        if _blocks(self.rs, p) != 2:
            raise ValueError("pair coefficients expect a polynomial over x;y")
        if not p.is_homogeneous():
            raise DegreeMismatch("polynomial is not homogeneous")
        out: dict[tuple[WeylElement, WeylElement], Coeff] = {}
        if p.is_zero():
            return out
        D = p.degree()
        d = self.rs.coord_dim
        grouped: dict[int, dict[Exp, dict[Exp, Coeff]]] = {}
        for e, c in p.terms.items():
            ex, ey = e[:d], e[d:]
            grouped.setdefault(sum(ex), {}).setdefault(ex, {})[ey] = c
        for k in sorted(grouped):
            us = self.W.by_length(k)
            vs = self.W.by_length(D - k)
            if not us or not vs:
                continue
            rows = grouped[k]
            for v in vs:
                Lv = self.functional(v)
                reduced: dict[Exp, Coeff] = {}
                for ex, row in rows.items():
                    s = 0
                    for ey, c in row.items():
                        t = Lv.get(ey)
                        if t:
                            s += c * t
                    if s:
                        reduced[ex] = s
                if not reduced:
                    continue
                for u in us:
                    Lu = self.functional(u)
                    s = 0
                    for ex, c in reduced.items():
                        t = Lu.get(ex)
                        if t:
                            s += c * t
                    if s:
                        out[(u, v)] = _norm(s)
        return out


@functools.lru_cache(maxsize=None)
def coefficient_table(rs: RootSystem) -> CoefficientTable:
    return CoefficientTable(rs)


def top_coefficient(rs: RootSystem, p: Poly) -> Coeff:
    """d_{w0}(p) for a polynomial over x-coordinates (only the top-degree part counts)."""
    return coefficient_table(rs).apply(weyl_group(rs).longest, p)


def class_equal(rs: RootSystem, p: Poly, q: Poly) -> tuple[bool, list[tuple[WeylElement, WeylElement | None, Coeff, Coeff]]]:
    """Compare two classes by their Schubert coefficients; also returns the differing entries."""
    if p.nvars != q.nvars:
        raise ValueError("polynomials live in different rings")
    for f in (p, q):
        if not f.is_homogeneous():
            raise DegreeMismatch("polynomial is not homogeneous")
    if not p.is_zero() and not q.is_zero() and p.degree() != q.degree():
        raise DegreeMismatch(f"degrees differ: {p.degree()} vs {q.degree()}")
    table = coefficient_table(rs)
    if _blocks(rs, p) == 2:
        cp, cq = table.pair_coefficients(p), table.pair_coefficients(q)
        diffs = [
            (u, v, cp.get((u, v), 0), cq.get((u, v), 0))
            for (u, v) in sorted(set(cp) | set(cq), key=_pair_key)
            if cp.get((u, v), 0) != cq.get((u, v), 0)
        ]
    else:
        cp1, cq1 = table.coefficients(p), table.coefficients(q)
        diffs = [
            (u, None, cp1.get(u, 0), cq1.get(u, 0))
            for u in sorted(set(cp1) | set(cq1), key=lambda w: (w.length, w.word))
            if cp1.get(u, 0) != cq1.get(u, 0)
        ]
    return not diffs, diffs


def _pair_key(uv):
    u, v = uv
    return (u.length, u.word, v.word)


@dataclass(frozen=True)
class ClassExpansion:
    system: RootSystem
    degree: int
    coefficients: dict  # WeylElement -> q, or (WeylElement, WeylElement) -> q

    @property
    def is_pair(self) -> bool:
        return any(isinstance(k, tuple) for k in self.coefficients)

    def entries(self) -> list[tuple[WeylElement, WeylElement | None, Fraction]]:
        rows = []
        for k, c in self.coefficients.items():
            u, v = k if isinstance(k, tuple) else (k, None)
            rows.append((u, v, Fraction(c)))
        rows.sort(key=lambda r: (r[0].length, r[0].word, r[1].word if r[1] is not None else ()))
        return rows

    def to_json(self) -> dict:
        return {
            "system": self.system.name,
            "degree": self.degree,
            "entries": [
                {
                    "u_word": list(u.word),
                    "v_word": list(v.word) if v is not None else None,
                    "num": c.numerator,
                    "den": c.denominator,
                }
                for u, v, c in self.entries()
            ],
        }


def expand(rs: RootSystem, p: Poly) -> ClassExpansion:
    """Full Schubert expansion of a homogeneous polynomial over x or x;y."""
    nb = _blocks(rs, p)
    if not p.is_homogeneous():
        raise DegreeMismatch("inhomogeneous input")
    deg = max(p.degree(), 0)
    N = rs.num_positive
    if deg > nb * N:
        raise DegreeMismatch(f"degree {deg} exceeds {nb * N}")
    table = coefficient_table(rs)
    coeffs = table.coefficients(p) if nb == 1 else table.pair_coefficients(p)
    return ClassExpansion(rs, deg, dict(coeffs))
