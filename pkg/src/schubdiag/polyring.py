"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` is a map from dense exponent tuples to nonzero coefficients.
Coefficients are ``int`` whenever integral and :class:`fractions.Fraction`
otherwise; nothing here ever touches floating point.

Two-alphabet rings Q[x; y] are the same type with ``nvars = 2 * d``: the
first ``d`` variables are the x-block and the last ``d`` the y-block.
"""

from __future__ import annotations

import contextlib
import contextvars
from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

Exp = tuple[int, ...]
Coeff = int | Fraction

_TERM_LIMIT: contextvars.ContextVar[int | None] = contextvars.ContextVar("term_limit", default=None)


class InexactDivision(ArithmeticError):
    pass


class TermLimitExceeded(RuntimeError):
    pass


@contextlib.contextmanager
def term_limit(n: int | None):
    """Abort any product whose result would exceed ``n`` terms."""
    token = _TERM_LIMIT.set(n)
    try:
        yield
    finally:
        _TERM_LIMIT.reset(token)


def _norm(c) -> Coeff:
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"not an exact rational: {c!r}")


def _div(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


def _check_limit(n: int) -> None:
    lim = _TERM_LIMIT.get()
    if lim is not None and n > lim:
        raise TermLimitExceeded(f"polynomial exceeds term limit ({n} > {lim})")


def _add_exp(a: Exp, b: Exp) -> Exp:
    return tuple([i + j for i, j in zip(a, b)])


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exp, object] | None = None, *, _trusted: bool = False):
        self.nvars = nvars
        if _trusted:
            self.terms = terms  # type: ignore[assignment]
            return
        clean: dict[Exp, Coeff] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have length {nvars}")
            if any(k < 0 for k in e):
                raise ValueError(f"negative exponent in {e}")
            c = _norm(c)
            if c:
                clean[e] = _norm(clean.get(e, 0) + c)
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> Poly:
        return cls(nvars, {}, _trusted=True)

    @classmethod
    def const(cls, c, nvars: int) -> Poly:
        c = _norm(c)
        return cls(nvars, {(0,) * nvars: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, i: int, nvars: int) -> Poly:
        """The variable with 0-based index ``i``."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, _trusted=True)

    @classmethod
    def linear(cls, vec: Sequence) -> Poly:
        """The linear form sum(vec[i] * x_i)."""
        n = len(vec)
        terms = {}
        for i, c in enumerate(vec):
            c = _norm(c)
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms, _trusted=True)

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> Poly:
        return cls(len(exp), {tuple(exp): c})

    # -- basic queries ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Exp, Coeff]]:
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> Poly:
        return Poly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d}, _trusted=True)

    def coefficient(self, exp: Sequence[int]) -> Coeff:
        return self.terms.get(tuple(exp), 0)

    def constant_term(self) -> Coeff:
        return self.terms.get((0,) * self.nvars, 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def denominator(self) -> int:
        """Least common denominator of the coefficients."""
        from math import lcm

        d = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                d = lcm(d, c.denominator)
        return d

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return Poly.const(other, self.nvars)

    def __add__(self, other) -> Poly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return Poly(self.nvars, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> Poly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def scale(self, c) -> Poly:
        c = _norm(c)
        if not c:
            return Poly.zero(self.nvars)
        if c == 1:
            return self
        return Poly(self.nvars, {e: _norm(v * c) for e, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        if len(self.terms) < len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        out: dict[Exp, Coeff] = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple([i + j for i, j in zip(ea, eb)])
                out[e] = get(e, 0) + ca * cb
            _check_limit(len(out))
        out = {e: _norm(c) for e, c in out.items() if c}
        return Poly(self.nvars, out, _trusted=True)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Poly:
        if isinstance(other, Poly):
            return exact_divide(self, other)
        return self.scale(Fraction(1) / _norm(other))

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self.terms == Poly.const(other, self.nvars).terms
        except TypeError:
            return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # -- transformations --------------------------------------------------

    def substitute_linear(self, images: Sequence[Sequence], nvars_out: int | None = None) -> Poly:
        return substitute_linear(self, images, nvars_out)

    def evaluate(self, point: Sequence) -> Coeff:
        return evaluate(self, point)

    def embed(self, nvars: int, offset: int = 0) -> Poly:
        """Re-index into a ring with ``nvars`` variables, shifting by ``offset``."""
        if offset + self.nvars > nvars:
            raise ValueError("embedding does not fit")
        pre, post = (0,) * offset, (0,) * (nvars - offset - self.nvars)
        return Poly(nvars, {pre + e + post: c for e, c in self.terms.items()}, _trusted=True)

    def restrict(self, start: int, stop: int) -> Poly:
        """Keep only terms supported on variables ``start..stop-1`` and drop the others."""
        out = {}
        for e, c in self.terms.items():
            if any(e[:start]) or any(e[stop:]):
                continue
            out[e[start:stop]] = c
        return Poly(stop - start, out, _trusted=True)

    # -- display ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exp, Coeff]]:
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or default_names(self.nvars)
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.format()!r})"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for e, c in self.sorted_terms():
            f = Fraction(c)
            terms.append({"exp": list(e), "num": f.numerator, "den": f.denominator})
        return {"nvars": self.nvars, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> Poly:
        try:
            nvars = int(data["nvars"])
            terms = {}
            for t in data["terms"]:
                den = int(t.get("den", 1))
                if den <= 0:
                    raise ValueError("denominator must be positive")
                e = tuple(int(k) for k in t["exp"])
                if e in terms:
                    raise ValueError(f"duplicate exponent {list(e)}")
                terms[e] = Fraction(int(t["num"]), den)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polynomial: {exc}") from exc
        return cls(nvars, terms)


def default_names(nvars: int) -> list[str]:
    return [f"x{i + 1}" for i in range(nvars)]


def block_names(d: int, first: str = "x", second: str = "y") -> list[str]:
    return [f"{first}{i + 1}" for i in range(d)] + [f"{second}{i + 1}" for i in range(d)]


def variables(nvars: int) -> list[Poly]:
    return [Poly.var(i, nvars) for i in range(nvars)]


def monomials(nvars: int, degree: int) -> Iterator[Exp]:
    """All exponent tuples of the given total degree, graded-lex descending."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return iter(out)


def product(polys: Iterable[Poly], nvars: int) -> Poly:
    out = Poly.const(1, nvars)
    for p in polys:
        out = out * p
    return out


# -- substitution ---------------------------------------------------------


def substitute_linear(p: Poly, images: Sequence[Sequence], nvars_out: int | None = None) -> Poly:
    """Replace variable ``j`` of ``p`` by the linear form ``images[j]``."""
    if len(images) != p.nvars:
        raise ValueError(f"need {p.nvars} image vectors, got {len(images)}")
    if nvars_out is None:
        nvars_out = len(images[0]) if images else 0
    images = [[_norm(c) for c in v] for v in images]
    for v in images:
        if len(v) != nvars_out:
            raise ValueError("image vectors have inconsistent length")

    supports = [[(k, c) for k, c in enumerate(v) if c] for v in images]
    if all(len(s) <= 1 for s in supports):
        return _substitute_monomial(p, supports, nvars_out)

    lin = [Poly.linear(v) for v in images]
    powers: dict[tuple[int, int], Poly] = {}

    def power(j: int, k: int) -> Poly:
        if (j, k) not in powers:
            powers[(j, k)] = lin[j] if k == 1 else power(j, k - 1) * lin[j]
        return powers[(j, k)]

    out: dict[Exp, Coeff] = {}
    for e, c in p.terms.items():
        term = Poly.const(c, nvars_out)
        for j, k in enumerate(e):
            if k:
                term = term * power(j, k)
        for te, tc in term.terms.items():
            out[te] = out.get(te, 0) + tc
    return Poly(nvars_out, {e: _norm(c) for e, c in out.items() if c}, _trusted=True)


def _substitute_monomial(p: Poly, supports, nvars_out: int) -> Poly:
    out: dict[Exp, Coeff] = {}
    for e, c in p.terms.items():
        ne = [0] * nvars_out
        coeff = c
        for j, k in enumerate(e):
            if not k:
                continue
            if not supports[j]:
                coeff = 0
                break
            t, a = supports[j][0]
            ne[t] += k
            if a != 1:
                coeff = coeff * a**k
        if coeff:
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + coeff
    return Poly(nvars_out, {e: _norm(c) for e, c in out.items() if c}, _trusted=True)


def evaluate(p: Poly, point: Sequence) -> Coeff:
    if len(point) != p.nvars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {p.nvars} variables")
    point = [_norm(v) for v in point]
    total: Coeff = 0
    for e, c in p.terms.items():
        t = c
        for v, k in zip(point, e):
            if k:
                t = t * v**k
        total += t
    return _norm(total)


def diagonal_substitute(p: Poly) -> Poly:
    """Set the y-block equal to the x-block; the result lives in the x-block only."""
    if p.nvars % 2:
        raise ValueError("diagonal substitution needs an even number of variables")
    d = p.nvars // 2
    out: dict[Exp, Coeff] = {}
    for e, c in p.terms.items():
        ne = tuple([a + b for a, b in zip(e[:d], e[d:])])
        out[ne] = out.get(ne, 0) + c
    return Poly(d, {e: _norm(c) for e, c in out.items() if c}, _trusted=True)


def block_degree_part(p: Poly, d: int, xdeg: int) -> Poly:
    """Terms of a two-block polynomial whose x-degree equals ``xdeg``."""
    return Poly(p.nvars, {e: c for e, c in p.terms.items() if sum(e[:d]) == xdeg}, _trusted=True)


# -- division -------------------------------------------------------------


def exact_divide(p: Poly, q: Poly) -> Poly:
    """The quotient p / q, raising :class:`InexactDivision` on a nonzero remainder."""
    if p.nvars != q.nvars:
        raise ValueError(f"variable-count mismatch: {p.nvars} vs {q.nvars}")
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return Poly.zero(p.nvars)
    if len(q.terms) == 1:
        return _divide_monomial(p, q)
    if q.is_homogeneous() and q.degree() == 1:
        return _divide_linear(p, q)
    return _divide_general(p, q)


def _divide_monomial(p: Poly, q: Poly) -> Poly:
    (qe, qc), = q.terms.items()
    out = {}
    for e, c in p.terms.items():
        ne = tuple([a - b for a, b in zip(e, qe)])
        if any(k < 0 for k in ne):
            raise InexactDivision("inexact division")
        out[ne] = _div(c, qc)
    return Poly(p.nvars, out, _trusted=True)


def _divide_linear(p: Poly, q: Poly) -> Poly:
    # Write q = c*x_k + r with r free of x_k and peel off powers of x_k from the top.
    n = p.nvars
    lin = {e.index(1): c for e, c in q.terms.items()}
    k = max(lin)
    c = lin.pop(k)
    rest = [(i, a) for i, a in lin.items()]

    slices: dict[int, dict[Exp, Coeff]] = {}
    for e, v in p.terms.items():
        j = e[k]
        base = e[:k] + (0,) + e[k + 1:]
        slices.setdefault(j, {})[base] = v
    top = max(slices)
    quotient: dict[Exp, Coeff] = {}
    carry: dict[Exp, Coeff] = {}  # r * q_j from the previous step
    for j in range(top, -1, -1):
        cur = dict(slices.get(j, {}))
        for e, v in carry.items():
            s = cur.get(e, 0) - v
            if s:
                cur[e] = s
            else:
                cur.pop(e, None)
        if j == 0:
            if any(cur.values()):
                raise InexactDivision("inexact division")
            break
        qj = {e: _div(v, c) for e, v in cur.items() if v}
        carry = {}
        for e, v in qj.items():
            quotient[e[:k] + (j - 1,) + e[k + 1:]] = v
            for i, a in rest:
                ne = list(e)
                ne[i] += 1
                ne = tuple(ne)
                carry[ne] = carry.get(ne, 0) + a * v
    return Poly(n, {e: _norm(v) for e, v in quotient.items() if v}, _trusted=True)


def _divide_general(p: Poly, q: Poly) -> Poly:
    lead_e, lead_c = max(q.terms.items(), key=lambda t: t[0])
    rem = dict(p.terms)
    quotient: dict[Exp, Coeff] = {}
    while rem:
        e = max(rem)
        c = rem[e]
        shift = tuple([a - b for a, b in zip(e, lead_e)])
        if any(k < 0 for k in shift):
            raise InexactDivision("inexact division")
        f = _div(c, lead_c)
        quotient[shift] = f
        for qe, qc in q.terms.items():
            ne = _add_exp(qe, shift)
            s = rem.get(ne, 0) - f * qc
            if s:
                rem[ne] = _norm(s)
            else:
                rem.pop(ne, None)
    return Poly(p.nvars, quotient, _trusted=True)


# -- symmetric functions --------------------------------------------------


def elementary_symmetric(k: int, gens: Sequence[Poly]) -> Poly:
    """e_k(gens); e_0 = 1 and e_k = 0 for k < 0 or k > len(gens)."""
    if not gens:
        raise ValueError("need at least one generator to fix the ring")
    n = gens[0].nvars
    if k < 0 or k > len(gens):
        return Poly.zero(n)
    e = [Poly.const(1, n)] + [Poly.zero(n)] * k
    for g in gens:
        for j in range(k, 0, -1):
            e[j] = e[j] + e[j - 1] * g
    return e[k]


def elementary_symmetric_squares(k: int, gens: Sequence[Poly]) -> Poly:
    """e'_k: the elementary symmetric polynomial in the squares of ``gens``."""
    return elementary_symmetric(k, [g * g for g in gens])
