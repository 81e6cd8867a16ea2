"""Root systems of types A, B, C, D and G2 with their Weyl groups.

Realizations (all roots are integer vectors, all reflections integer matrices):

* ``A_{n-1}``: n coordinates, alpha_i = x_i - x_{i+1}
* ``B_n``: alpha_i = x_i - x_{i+1} (i < n), alpha_n = x_n
* ``C_n``: alpha_n = 2 x_n
* ``D_n``: alpha_n = x_{n-1} + x_n
* ``G2``: native coordinates (a1 short, a2 long), <a1, a2^v> = -1, <a2, a1^v> = -3

Weyl group elements are integer matrices acting on coordinate column vectors.
Simple reflection indices are 1-based everywhere (``s1``, ``s2``, ...).
"""

from __future__ import annotations

import functools
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple
Matrix = tuple[tuple[int, ...], ...]

DEFAULT_WEYL_CAP = 50_000

RANK_BOUNDS = {"A": (1, 6), "B": (2, 5), "C": (2, 5), "D": (4, 5), "G2": (2, 2)}

# a1 = x1 - x2, a2 = -2x1 + x2 + x3 on x1 + x2 + x3 = 0; rows give x1, x2, x3 in (a1, a2).
G2_BRIDGE: tuple[tuple[Fraction, Fraction], ...] = (
    (Fraction(0), Fraction(-1, 3)),
    (Fraction(-1), Fraction(-1, 3)),
    (Fraction(1), Fraction(2, 3)),
)


class UnsupportedRootSystem(ValueError):
    pass


class WeylGroupTooLarge(RuntimeError):
    pass


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _mat_vec(a: Matrix, v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _vec_norm(v: Iterable) -> tuple:
    out = []
    for c in v:
        c = Fraction(c)
        out.append(c.numerator if c.denominator == 1 else c)
    return tuple(out)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    coord_dim: int
    simple_roots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    fundamental_weights: tuple[tuple, ...]
    gram: Matrix
    linear_relation: tuple[int, ...] | None = None
    coord_names: tuple[str, ...] = field(default=(), compare=False)

    @property
    def name(self) -> str:
        return "G2" if self.family == "G2" else f"{self.family}{self.rank}"

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        return Fraction(sum(u[i] * self.gram[i][j] * v[j] for i in range(self.coord_dim) for j in range(self.coord_dim)))

    def pairing(self, v: Sequence, alpha: Sequence) -> Fraction:
        """<v, alpha^v> = 2 (v, alpha) / (alpha, alpha)."""
        return 2 * self.inner(v, alpha) / self.inner(alpha, alpha)

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(int(self.pairing(ai, aj)) for aj in self.simple_roots) for ai in self.simple_roots
        )

    def reflection_matrix(self, alpha: Sequence) -> Matrix:
        cols = []
        for j in range(self.coord_dim):
            e = [0] * self.coord_dim
            e[j] = 1
            k = self.pairing(e, alpha)
            cols.append([Fraction(e[i]) - k * alpha[i] for i in range(self.coord_dim)])
        rows = []
        for i in range(self.coord_dim):
            row = []
            for j in range(self.coord_dim):
                c = cols[j][i]
                if c.denominator != 1:
                    raise ValueError("reflection is not integral in these coordinates")
                row.append(int(c))
            rows.append(tuple(row))
        return tuple(rows)

    @functools.cached_property
    def simple_reflections(self) -> tuple[Matrix, ...]:
        return tuple(self.reflection_matrix(a) for a in self.simple_roots)

    @functools.cached_property
    def roots(self) -> frozenset[tuple[int, ...]]:
        pos = set(self.positive_roots)
        return frozenset(pos | {tuple(-c for c in r) for r in pos})

    def is_root(self, v: Sequence) -> bool:
        return tuple(v) in self.roots

    def is_positive_root(self, v: Sequence) -> bool:
        return tuple(v) in set(self.positive_roots)

    def simple_coordinates(self, v: Sequence) -> tuple[Fraction, ...]:
        """Coefficients of ``v`` in the basis of simple roots (v must lie in their span)."""
        return _solve(self.simple_roots, v)

    def root_to_string(self, v: Sequence) -> str:
        names = self.coord_names or tuple(f"x{i + 1}" for i in range(self.coord_dim))
        parts = []
        for c, nm in zip(v, names):
            if not c:
                continue
            if c == 1:
                parts.append(f"+{nm}")
            elif c == -1:
                parts.append(f"-{nm}")
            else:
                parts.append(f"{'+' if c > 0 else '-'}{abs(c)}{nm}")
        s = "".join(parts) or "0"
        return s[1:] if s.startswith("+") else s

    def to_json(self) -> dict:
        return {
            "system": self.name,
            "family": self.family,
            "rank": self.rank,
            "coord_dim": self.coord_dim,
            "coordinates": list(self.coord_names),
            "simple_roots": [list(r) for r in self.simple_roots],
            "positive_roots": [list(r) for r in self.positive_roots],
            "fundamental_weights": [[str(c) for c in w] for w in self.fundamental_weights],
            "linear_relation": list(self.linear_relation) if self.linear_relation else None,
        }


def _solve(columns: Sequence[Sequence[int]], v: Sequence) -> tuple[Fraction, ...]:
    """Solve sum_j c_j columns[j] = v exactly (the system must be consistent)."""
    m, n = len(v), len(columns)
    rows = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(v[i])] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, m):
        if rows[i][n] != 0:
            raise ValueError(f"{tuple(v)} is not in the span of the simple roots")
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][n]
    return tuple(sol)


def parse_system(ident: str) -> tuple[str, int]:
    """Parse identifiers such as ``"A3"``, ``"C2"`` or ``"G2"``."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", ident or "")
    if not m:
        raise UnsupportedRootSystem(f"unsupported root system: {ident!r}")
    fam, rank = m.group(1).upper(), int(m.group(2))
    if fam == "G":
        if rank != 2:
            raise UnsupportedRootSystem(f"unsupported root system: {ident!r}")
        return "G2", 2
    return fam, rank


def from_string(ident: str) -> RootSystem:
    return build(*parse_system(ident))


@functools.lru_cache(maxsize=None)
def build(family: str, rank: int = 2) -> RootSystem:
    family = family.upper()
    if family == "G":
        family = "G2"
    if family not in RANK_BOUNDS:
        raise UnsupportedRootSystem(f"unsupported root system: {family}{rank}")
    lo, hi = RANK_BOUNDS[family]
    if not lo <= rank <= hi:
        raise UnsupportedRootSystem(f"unsupported root system: {family}{rank}")

    half = Fraction(1, 2)
    relation = None
    if family == "G2":
        dim = 2
        simple = [(1, 0), (0, 1)]
        gram = ((2, -3), (-3, 6))
        weights = [(2, 1), (3, 2)]
        names = ("a1", "a2")
    else:
        n = rank + 1 if family == "A" else rank
        dim = n
        gram = _identity(n)
        names = tuple(f"x{i + 1}" for i in range(n))

        def unit(*pairs):
            v = [0] * n
            for i, c in pairs:
                v[i] += c
            return tuple(v)

        simple = [unit((i, 1), (i + 1, -1)) for i in range(n - 1)]
        partial = [tuple(1 if j <= i else 0 for j in range(n)) for i in range(n)]
        if family == "A":
            weights = partial[: n - 1]
            relation = tuple([1] * n)
        elif family == "B":
            simple.append(unit((n - 1, 1)))
            weights = partial[: n - 1] + [tuple(half for _ in range(n))]
        elif family == "C":
            simple.append(unit((n - 1, 2)))
            weights = partial[:n]
        else:  # D
            simple.append(unit((n - 2, 1), (n - 1, 1)))
            weights = partial[: n - 2] + [
                tuple([half] * (n - 1) + [-half]),
                tuple([half] * n),
            ]

    probe = RootSystem(
        family=family,
        rank=rank,
        coord_dim=dim,
        simple_roots=tuple(simple),
        positive_roots=(),
        fundamental_weights=tuple(_vec_norm(w) for w in weights),
        gram=gram,
        linear_relation=relation,
        coord_names=names,
    )
    # All roots form the orbit of the simple roots under the simple reflections.
    refl = probe.simple_reflections
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for s in refl:
                img = _mat_vec(s, r)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    positive = []
    for r in seen:
        coeffs = probe.simple_coordinates(r)
        if all(c >= 0 for c in coeffs):
            positive.append((sum(coeffs), tuple(int(c) for c in coeffs), r))
    positive.sort(key=lambda t: (t[0], tuple(-c for c in t[1])))
    return RootSystem(
        family=family,
        rank=rank,
        coord_dim=dim,
        simple_roots=tuple(simple),
        positive_roots=tuple(r for _, _, r in positive),
        fundamental_weights=probe.fundamental_weights,
        gram=gram,
        linear_relation=relation,
        coord_names=names,
    )


def expected_order(rs: RootSystem) -> int:
    from math import factorial

    if rs.family == "A":
        return factorial(rs.rank + 1)
    if rs.family in ("B", "C"):
        return 2**rs.rank * factorial(rs.rank)
    if rs.family == "D":
        return 2 ** (rs.rank - 1) * factorial(rs.rank)
    return 12


@dataclass(frozen=True, eq=False)
class WeylElement:
    matrix: Matrix
    word: tuple[int, ...]
    length: int

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def act(self, v: Sequence) -> tuple:
        return _vec_norm(_mat_vec(self.matrix, v))

    def images(self) -> list[tuple[int, ...]]:
        """Column j is the image of coordinate vector e_j (used for substitutions)."""
        return [tuple(col) for col in zip(*self.matrix)]

    def word_string(self) -> str:
        return "".join(str(i) for i in self.word) or "e"

    def to_json(self) -> dict:
        return {"word": list(self.word), "matrix": [list(r) for r in self.matrix], "length": self.length}

    def __repr__(self) -> str:
        return f"WeylElement({self.word_string()})"


class WeylGroup:
    """All elements of W(rs), sorted by (length, lex-minimal reduced word)."""

    def __init__(self, rs: RootSystem, elements: Sequence[WeylElement]):
        self.rs = rs
        self.elements = list(elements)
        self.index = {w.matrix: k for k, w in enumerate(self.elements)}
        self.identity = self.elements[0]
        self.longest = self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def lookup(self, matrix: Matrix) -> WeylElement:
        return self.elements[self.index[matrix]]

    def mul(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self.lookup(_mat_mul(u.matrix, v.matrix))

    def inverse(self, w: WeylElement) -> WeylElement:
        # Weyl matrices are orthogonal for the Gram form; invert by word reversal.
        return self.from_word(tuple(reversed(w.word)))

    def from_word(self, word: Sequence[int]) -> WeylElement:
        m = _identity(self.rs.coord_dim)
        refl = self.rs.simple_reflections
        for i in word:
            if not 1 <= i <= self.rs.rank:
                raise ValueError(f"simple reflection index {i} out of range")
            m = _mat_mul(m, refl[i - 1])
        return self.lookup(m)

    def by_length(self, k: int) -> list[WeylElement]:
        return [w for w in self.elements if w.length == k]

    def length_counts(self) -> list[int]:
        c = Counter(w.length for w in self.elements)
        return [c[k] for k in range(max(c) + 1)]

    def inversions(self, w: WeylElement) -> int:
        """Number of positive roots sent to negative roots."""
        pos = set(self.rs.positive_roots)
        return sum(1 for a in self.rs.positive_roots if tuple(-c for c in _mat_vec(w.matrix, a)) in pos)


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> list[WeylElement]:
    """Breadth-first closure under right multiplication by simple reflections.

    Parents at each level are scanned in lex order of their words and
    generators in increasing order, so every element gets its lex-minimal
    reduced word.
    """
    refl = rs.simple_reflections
    ident = _identity(rs.coord_dim)
    seen = {ident: ()}
    level = [(ident, ())]
    out = [WeylElement(ident, (), 0)]
    depth = 0
    while level:
        depth += 1
        nxt = []
        for m, word in level:
            for i, s in enumerate(refl, start=1):
                mm = _mat_mul(m, s)
                if mm in seen:
                    continue
                w = word + (i,)
                seen[mm] = w
                nxt.append((mm, w))
                if len(seen) > cap:
                    raise WeylGroupTooLarge(f"Weyl group too large (more than {cap} elements)")
        nxt.sort(key=lambda t: t[1])
        out.extend(WeylElement(m, w, depth) for m, w in nxt)
        level = nxt
    return out


@functools.lru_cache(maxsize=None)
def _group_cached(rs: RootSystem, cap: int) -> WeylGroup:
    return WeylGroup(rs, enumerate_weyl(rs, cap))


_REGISTERED: dict[RootSystem, WeylGroup] = {}


def register_group(group: WeylGroup) -> None:
    """Install a pre-validated enumeration (e.g. loaded from disk)."""
    _REGISTERED[group.rs] = group


def weyl_group(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> WeylGroup:
    if expected_order(rs) > cap:
        raise WeylGroupTooLarge(f"Weyl group too large ({expected_order(rs)} > {cap})")
    if rs in _REGISTERED:
        return _REGISTERED[rs]
    return _group_cached(rs, cap)


def weyl_elements(rs: RootSystem, cap: int = DEFAULT_WEYL_CAP) -> list[WeylElement]:
    return list(weyl_group(rs, cap).elements)


def longest_element(rs: RootSystem) -> WeylElement:
    return weyl_group(rs).longest


def orbit(rs: RootSystem, v: Sequence) -> set[tuple]:
    v = _vec_norm(v)
    if len(v) != rs.coord_dim:
        raise ValueError(f"vector must have {rs.coord_dim} coordinates")
    return {w.act(v) for w in weyl_group(rs)}


def stabilizer(rs: RootSystem, v: Sequence) -> list[WeylElement]:
    v = _vec_norm(v)
    return [w for w in weyl_group(rs) if w.act(v) == v]


def reflection(rs: RootSystem, root: Sequence) -> WeylElement:
    root = tuple(root)
    if not rs.is_root(root):
        raise ValueError(f"{root} is not a root of {rs.name}")
    return weyl_group(rs).lookup(rs.reflection_matrix(root))
