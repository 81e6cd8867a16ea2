"""Explicit representatives of the diagonal class of G/B and their verification.

Every candidate is a polynomial over the two alphabets x (first factor) and
y (second factor).  For G2 the alphabets are (a1, a2; b1, b2), the simple
roots of the two factors.  A candidate represents ``sign * [Delta]`` exactly
when its Schubert coefficients form the Kronecker pattern
``c(u, v) = sign * delta(v, w0 u)``; the sign is measured, never assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .polyring import Coeff, Poly, diagonal_substitute, elementary_symmetric, exact_divide, product, variables
from .rootsys import G2_BRIDGE, RootSystem, build, orbit, stabilizer, weyl_group
from .schubert import coefficient_table, schubert_reps, top_coefficient

SOURCES = (
    "typeA",
    "fultonC",
    "deconciniC",
    "deconciniD",
    "grahamG2",
    "prop29G2",
    "deconciniG2",
    "prop29G2_stabilizer",
    "deconciniG2_signfix",
    "generic",
)


class ZeroClass(ValueError):
    pass


@dataclass(frozen=True)
class DiagonalCandidate:
    system: RootSystem
    source: str
    poly: Poly
    expected_global_factor: Fraction = Fraction(1)
    note: str = ""

    @property
    def ident(self) -> str:
        return f"{self.system.name}:{self.source}"

    def degree(self) -> int:
        return self.poly.degree()


@dataclass
class VerificationReport:
    candidate: str
    system: str
    order: int
    diag_eval_constant: Coeff
    kronecker_ok: bool
    global_sign: int
    pair_count: int
    mismatches: list = field(default_factory=list)

    @property
    def diag_eval_ok(self) -> bool:
        return self.diag_eval_constant == self.global_sign * self.order

    @property
    def passed(self) -> bool:
        return self.kronecker_ok and self.diag_eval_ok

    def to_json(self) -> dict:
        return {
            "candidate": self.candidate,
            "system": self.system,
            "weyl_order": self.order,
            "diag_eval_constant": str(Fraction(self.diag_eval_constant)),
            "diag_eval_ok": self.diag_eval_ok,
            "kronecker_ok": self.kronecker_ok,
            "global_sign": self.global_sign,
            "pairs_checked": self.pair_count,
            "mismatches": [
                {"u_word": list(u), "v_word": list(v), "got": str(Fraction(g)), "expected": str(Fraction(e))}
                for u, v, g, e in self.mismatches
            ],
            "passed": self.passed,
        }


def _xy(d: int) -> tuple[list[Poly], list[Poly]]:
    vs = variables(2 * d)
    return vs[:d], vs[d:]


# -- type A ---------------------------------------------------------------


def type_a_product(n: int) -> DiagonalCandidate:
    """prod_{i<j} (x_i - y_j), the top double Schubert polynomial, on Fl(n)."""
    if not 2 <= n <= 5:
        raise ValueError("type_a_product supports 2 <= n <= 5")
    x, y = _xy(n)
    p = product((x[i] - y[j] for i in range(n) for j in range(i + 1, n)), 2 * n)
    return DiagonalCandidate(build("A", n - 1), "typeA", p)


# -- type C ---------------------------------------------------------------


def _det(m: list[list[Poly]], nvars: int) -> Poly:
    n = len(m)
    total = Poly.zero(nvars)
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = product((m[i][perm[i]] for i in range(n)), nvars)
        total = total - term if inv % 2 else total + term
    return total


def fulton_w(n: int) -> Poly:
    """det[e_{n+1+j-2i}(x) + e_{n+1+j-2i}(y)], with e_0 = 1 and e_k = 0 off 0..n."""
    x, y = _xy(n)
    m = [
        [elementary_symmetric(n + 1 + j - 2 * i, x) + elementary_symmetric(n + 1 + j - 2 * i, y) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return _det(m, 2 * n)


def fulton_c(n: int) -> DiagonalCandidate:
    if not 2 <= n <= 3:
        raise ValueError("fulton_c supports n = 2, 3")
    x, y = _xy(n)
    vandermonde = product((x[i] - y[j] for i in range(n) for j in range(i + 1, n)), 2 * n)
    return DiagonalCandidate(build("C", n), "fultonC", vandermonde * fulton_w(n))


def deconcini_c(n: int) -> DiagonalCandidate:
    if not 2 <= n <= 3:
        raise ValueError("deconcini_c supports n = 2, 3")
    x, y = _xy(n)
    p = product((x[i] * x[i] - y[j] * y[j] for i in range(n) for j in range(i + 1, n)), 2 * n)
    p = p * product((x[i] + y[i] for i in range(n)), 2 * n)
    return DiagonalCandidate(build("C", n), "deconciniC", p)


# -- type D ---------------------------------------------------------------


def deconcini_d_factor(n: int, i: int) -> Poly:
    """W_i with its 1/x_i removed by exact division (i is 1-based)."""
    x, y = _xy(n)
    nv = 2 * n
    k = i - 1
    first = (x[k] + y[k]) * product((x[k] * x[k] - y[j] * y[j] for j in range(k + 1, n)), nv)
    second = product(x[k:], nv) - product(y[k:], nv)
    second = second * product(y[k + 1:], nv)
    if (n - i) % 2:
        second = -second
    numerator = first + second
    return exact_divide(numerator, x[k]).scale(Fraction(1, 2))


def deconcini_d(n: int = 4, allow_large: bool = False) -> DiagonalCandidate:
    if n != 4 and not (allow_large and n == 5):
        raise ValueError("deconcini_d supports n = 4 (n = 5 with allow_large)")
    p = product((deconcini_d_factor(n, i) for i in range(1, n)), 2 * n)
    return DiagonalCandidate(build("D", n), "deconciniD", p)


# -- G2 -------------------------------------------------------------------


def g2_bridge_images() -> list[tuple[Fraction, ...]]:
    """Images of (x1, x2, x3, y1, y2, y3) in (a1, a2, b1, b2)."""
    out = []
    for block in range(2):
        for row in G2_BRIDGE:
            v = [Fraction(0)] * 4
            v[2 * block], v[2 * block + 1] = row
            out.append(tuple(v))
    return out


def from_g2_x_coordinates(p: Poly) -> Poly:
    """Transport a polynomial in (x1, x2, x3; y1, y2, y3) to (a1, a2; b1, b2)."""
    return p.substitute_linear(g2_bridge_images(), 4)


def graham_g2() -> DiagonalCandidate:
    x1, x2, x3, y1, y2, y3 = variables(6)
    p = (x1 - y2) * (x1 - y3) * (x2 - y3) * (x1 * x2 * x3 + y1 * y2 * y3)
    p = p.scale(Fraction(-27, 2))
    return DiagonalCandidate(build("G2"), "grahamG2", from_g2_x_coordinates(p), Fraction(-27, 2))


def _g2_vars():
    return variables(4)


def prop29_g2() -> DiagonalCandidate:
    """The expression exactly as printed, last factor a2 - (3 b1 + b2)."""
    a1, a2, b1, b2 = _g2_vars()
    p = (a1 + b1) * (a1 - (2 * b1 + b2)) * (a1 + (2 * b1 + b2)) * (a1 - (b1 + b2)) * (a1 + (b1 + b2))
    p = (p * (a2 - (3 * b1 + b2))).scale(Fraction(1, 2))
    return DiagonalCandidate(build("G2"), "prop29G2", p, Fraction(1, 2))


def deconcini_g2() -> DiagonalCandidate:
    a1, a2, b1, b2 = _g2_vars()
    s, t = 2 * b1 + b2, b1 + b2
    p = (a1 + b1) * (a1 * a1 - s * s) * (a1 * a1 - t * t) * (a2 - (3 * b1 + b2))
    return DiagonalCandidate(build("G2"), "deconciniG2", p.scale(Fraction(1, 2)), Fraction(1, 2))


def prop29_g2_from_stabilizer() -> DiagonalCandidate:
    """Rebuild the G2 expression from its orbit/stabilizer recipe.

    One factor ``a1 - mu(b)`` for every ``mu != a1`` in the W-orbit of a1, and
    one factor ``a2 - s(b2)`` for the nontrivial element ``s`` of the
    stabilizer of a1.  Differs from the printed expression only by the sign
    inside the last factor, since s(a2) = -(3 a1 + a2).
    """
    rs = build("G2")
    a1, a2, b1, b2 = _g2_vars()

    def in_b(v) -> Poly:
        return v[0] * b1 + v[1] * b2

    factors = [a1 - in_b(mu) for mu in sorted(orbit(rs, (1, 0)), reverse=True) if mu != (1, 0)]
    stab = [w for w in stabilizer(rs, (1, 0)) if w.length > 0]
    (s,) = stab
    factors.append(a2 - in_b(s.act((0, 1))))
    p = product(factors, 4).scale(Fraction(1, 2))
    return DiagonalCandidate(build("G2"), "prop29G2_stabilizer", p, Fraction(1, 2))


def deconcini_g2_signfix() -> DiagonalCandidate:
    a1, a2, b1, b2 = _g2_vars()
    s, t = 2 * b1 + b2, b1 + b2
    p = (a1 + b1) * (a1 * a1 - s * s) * (a1 * a1 - t * t) * (a2 + (3 * b1 + b2))
    return DiagonalCandidate(build("G2"), "deconciniG2_signfix", p.scale(Fraction(1, 2)), Fraction(1, 2))


def g2_candidates() -> tuple[DiagonalCandidate, DiagonalCandidate, DiagonalCandidate]:
    """The three published G2 expressions (grahamG2, prop29G2, deconciniG2) exactly as printed."""
    return graham_g2(), prop29_g2(), deconcini_g2()


# -- generic --------------------------------------------------------------


def generic_diagonal(rs: RootSystem) -> DiagonalCandidate:
    """sum_w sigma_w(x) sigma_{w0 w}(y)."""
    W = weyl_group(rs)
    reps = schubert_reps(rs)
    d = rs.coord_dim
    total = Poly.zero(2 * d)
    for w in W:
        dual = W.mul(W.longest, w)
        total = total + reps[w].embed(2 * d, 0) * reps[dual].embed(2 * d, d)
    return DiagonalCandidate(rs, "generic", total)


# -- verification ---------------------------------------------------------


def verify(candidate: DiagonalCandidate) -> VerificationReport:
    rs = candidate.system
    W = weyl_group(rs)
    N = rs.num_positive
    p = candidate.poly
    if not p.is_homogeneous() or (not p.is_zero() and p.degree() != N):
        raise ValueError(f"candidate must be homogeneous of degree {N}")
    coeffs = coefficient_table(rs).pair_coefficients(p)
    if not coeffs:
        raise ZeroClass("zero class")
    w0 = W.longest
    lead = coeffs.get((W.identity, w0))
    if lead is None:
        lead = coeffs[min(coeffs, key=lambda uv: (uv[0].length, uv[0].word, uv[1].word))]
    sign = 1 if lead > 0 else -1

    expected = {(u, W.mul(w0, u)): sign for u in W}
    mismatches = []
    for u, v in sorted(set(coeffs) | set(expected), key=lambda uv: (uv[0].length, uv[0].word, uv[1].word)):
        got, want = coeffs.get((u, v), 0), expected.get((u, v), 0)
        if got != want:
            mismatches.append((u.word, v.word, got, want))
    pair_count = sum(len(W.by_length(k)) * len(W.by_length(N - k)) for k in range(N + 1))
    diag = top_coefficient(rs, diagonal_substitute(p))
    return VerificationReport(
        candidate=candidate.ident,
        system=rs.name,
        order=len(W),
        diag_eval_constant=diag,
        kronecker_ok=not mismatches,
        global_sign=sign,
        pair_count=pair_count,
        mismatches=mismatches,
    )


# -- integrality conjecture ------------------------------------------------


COUNTEREXAMPLE_WORD = (2, 1, 2)


def graham_conjecture_class() -> Poly:
    """(x1 x2 x3 + y1 y2 y3) / 2 transported to (a1, a2; b1, b2)."""
    x1, x2, x3, y1, y2, y3 = variables(6)
    return from_g2_x_coordinates((x1 * x2 * x3 + y1 * y2 * y3).scale(Fraction(1, 2)))


def graham_counterexample() -> Fraction:
    """Leading coefficient of sigma_{s2 s1 s2} in (x1x2x3 + y1y2y3)/2 (s1 = short reflection)."""
    from .schubert import divided_difference_word

    rs = build("G2")
    q = divided_difference_word(rs, COUNTEREXAMPLE_WORD, graham_conjecture_class(), block=0)
    if not q.is_constant():
        raise AssertionError("x-degree 3 part did not reduce to a constant")
    return Fraction(q.constant_term())


def build_candidate(system: str | RootSystem | None, source: str, allow_large: bool = False) -> DiagonalCandidate:
    """Dispatch used by the command line."""
    from .rootsys import from_string

    rs = from_string(system) if isinstance(system, str) else system
    if source == "generic":
        if rs is None:
            raise ValueError("generic diagonal needs a root system")
        return generic_diagonal(rs)
    makers = {
        "typeA": lambda: type_a_product(rs.rank + 1),
        "fultonC": lambda: fulton_c(rs.rank),
        "deconciniC": lambda: deconcini_c(rs.rank),
        "deconciniD": lambda: deconcini_d(rs.rank, allow_large),
        "grahamG2": graham_g2,
        "prop29G2": prop29_g2,
        "deconciniG2": deconcini_g2,
        "prop29G2_stabilizer": prop29_g2_from_stabilizer,
        "deconciniG2_signfix": deconcini_g2_signfix,
    }
    families = {"typeA": "A", "fultonC": "C", "deconciniC": "C", "deconciniD": "D"}
    if source not in makers:
        raise ValueError(f"unknown formula {source!r}; choose from {', '.join(SOURCES)}")
    want = families.get(source, "G2")
    if rs is not None and rs.family != want:
        raise ValueError(f"formula {source} is for type {want}, not {rs.name}")
    if rs is None and want != "G2":
        raise ValueError(f"formula {source} needs --type")
    return makers[source]()
