"""Chern-root calculus for type-A flag bundles Fl_d(E) -> X.

Bundles are multisets of Chern-root linear forms in Q[x; y] (x: first copy
of the flag bundle, y: second copy).  Hom(A, B) has roots b - a, direct sum
is multiset union, and total Chern classes are truncated graded products.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .polyring import Poly, variables


@dataclass(frozen=True)
class FlagType:
    n: int
    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(self.d)
        object.__setattr__(self, "d", d)
        if not d or d[-1] != self.n:
            raise ValueError(f"flag must end at n = {self.n}: {d}")
        if d[0] <= 0 or any(a >= b for a, b in zip(d, d[1:])):
            raise ValueError(f"flag must satisfy 0 < d_1 < ... < d_k = n: {d}")

    @property
    def k(self) -> int:
        return len(self.d)

    @classmethod
    def parse(cls, n: int, text: str) -> FlagType:
        d = [int(t) for t in text.replace(" ", "").split(",") if t]
        if not d or d[-1] != n:
            d.append(n)
        return cls(n, tuple(d))

    @classmethod
    def complete(cls, n: int) -> FlagType:
        return cls(n, tuple(range(1, n + 1)))


def all_flags(n: int) -> list[FlagType]:
    """All 2^(n-1) flag types for rank n."""
    out = []
    for r in range(n):
        for c in combinations(range(1, n), r):
            out.append(FlagType(n, c + (n,)))
    return out


def dim_grassmann(dim_x: int, d: int, n: int) -> int:
    if not 0 < d < n:
        raise ValueError(f"need 0 < d < n, got d={d}, n={n}")
    return dim_x + d * (n - d)


def dim_flag(dim_x: int, flag: FlagType) -> int:
    d = (0,) + flag.d
    return dim_x + sum((d[i] - d[i - 1]) * (flag.n - d[i]) for i in range(1, flag.k))


def dim_flag_tower(dim_x: int, flag: FlagType) -> int:
    """Dimension via the tower G_{d1}(E), G_{d2-d1}(Q_1), ... of Grassmann bundles."""
    dim = dim_x
    prev = 0
    for di in flag.d:
        rank, step = flag.n - prev, di - prev
        if step < rank:  # the last step G_rank(Q) is the base itself
            dim = dim_grassmann(dim, step, rank)
        prev = di
    return dim


def rank_h_sides(flag: FlagType) -> tuple[int, int]:
    """(sum of ranks of the two Hom sums, closed form); equal whenever phi is onto."""
    n, d, k = flag.n, flag.d, flag.k
    lhs = sum(d[i] * (n - d[i]) for i in range(k - 1)) - sum(d[i] * (n - d[i + 1]) for i in range(k - 2))
    dd = (0,) + d
    rhs = sum((dd[i] - dd[i - 1]) * (n - dd[i]) for i in range(1, k))
    return lhs, rhs


def rank_h(flag: FlagType) -> int:
    lhs, rhs = rank_h_sides(flag)
    if lhs != rhs:
        raise AssertionError(f"rank identity violated for {flag}: {lhs} != {rhs}")
    return lhs


def point_bundle_rank_check(dim_x: int, d: int, n: int) -> int:
    """rank(pi^* G) + d * rank(Q) for the bundle pi^* G + Q^{+d} on G_d(E)."""
    if not 0 < d < n:
        raise ValueError(f"need 0 < d < n, got d={d}, n={n}")
    rank = dim_x + d * (n - d)
    if rank != dim_grassmann(dim_x, d, n):
        raise AssertionError("point bundle rank differs from dim G_d(E)")
    return rank


@dataclass(frozen=True)
class ChernModel:
    """Chern roots of the tautological bundles on Fl_d(E) x_X Fl_d(E), X a point.

    ``convention="quotient"`` (default): x_a, y_b are first Chern classes of the
    tautological quotient line bundles, so the a-th sub-line has Chern root
    -x_a and Hom(S_i, Q_j) has roots x_a - y_b.  ``convention="sub"`` uses
    the sub-line Chern roots directly, giving roots y_b - x_a.
    """

    flag: FlagType
    convention: str = "quotient"

    def __post_init__(self):
        if self.convention not in ("quotient", "sub"):
            raise ValueError(f"unknown convention {self.convention!r}")

    @property
    def nvars(self) -> int:
        return 2 * self.flag.n

    @property
    def sign(self) -> int:
        return -1 if self.convention == "quotient" else 1

    def x_roots(self) -> list[Poly]:
        return [v.scale(self.sign) for v in variables(self.nvars)[: self.flag.n]]

    def y_roots(self) -> list[Poly]:
        return [v.scale(self.sign) for v in variables(self.nvars)[self.flag.n:]]

    def sub_roots(self, i: int) -> list[Poly]:
        """Chern roots of p_1^* S_i (i is 1-based)."""
        return self.x_roots()[: self.flag.d[i - 1]]

    def quotient_roots(self, i: int) -> list[Poly]:
        """Chern roots of p_2^* Q_i."""
        return self.y_roots()[self.flag.d[i - 1]:]

    def hom_roots(self, i: int, j: int) -> list[Poly]:
        """Chern roots of Hom(p_1^* S_i, p_2^* Q_j)."""
        return [b - a for a in self.sub_roots(i) for b in self.quotient_roots(j)]

    def source_roots(self) -> list[Poly]:
        k = self.flag.k
        return [r for i in range(1, k) for r in self.hom_roots(i, i)]

    def target_roots(self) -> list[Poly]:
        k = self.flag.k
        return [r for i in range(1, k - 1) for r in self.hom_roots(i, i + 1)]


def total_chern(roots: list[Poly], nvars: int, truncation: int) -> list[Poly]:
    """Graded components c_0..c_truncation of prod(1 + r)."""
    comps = [Poly.const(1, nvars)] + [Poly.zero(nvars) for _ in range(truncation)]
    for r in roots:
        for k in range(truncation, 0, -1):
            comps[k] = comps[k] + comps[k - 1] * r
    return comps


def series_inverse(comps: list[Poly]) -> list[Poly]:
    """Graded inverse of 1 + c_1 + c_2 + ... up to the same truncation."""
    nv = comps[0].nvars
    inv = [Poly.const(1, nv)]
    for k in range(1, len(comps)):
        acc = Poly.zero(nv)
        for j in range(1, k + 1):
            acc = acc + comps[j] * inv[k - j]
        inv.append(-acc)
    return inv


def graded_product(a: list[Poly], b: list[Poly]) -> list[Poly]:
    nv = a[0].nvars
    out = []
    for k in range(min(len(a), len(b))):
        acc = Poly.zero(nv)
        for j in range(k + 1):
            acc = acc + a[j] * b[k - j]
        out.append(acc)
    return out


def chern_h(model: ChernModel, truncation: int | None = None) -> list[Poly]:
    """c(H) = c(source) / c(target) for H = Ker(phi), graded up to ``truncation``."""
    r = rank_h(model.flag)
    if truncation is None:
        truncation = r
    if truncation < r:
        raise ValueError(f"truncation {truncation} is below rank(H) = {r}")
    num = total_chern(model.source_roots(), model.nvars, truncation)
    den = total_chern(model.target_roots(), model.nvars, truncation)
    return graded_product(num, series_inverse(den))


def top_chern_h(model: ChernModel) -> Poly:
    return chern_h(model)[rank_h(model.flag)]


def typec_point_bundle_top_chern(n: int) -> Poly:
    """c_top(L_1 + L_2^{+3} + ... + L_n^{+(2n-1)}) with c_1(L_i) = x_i."""
    if not 2 <= n <= 3:
        raise ValueError("supported for n = 2, 3")
    xs = variables(n)
    roots = [xs[i] for i in range(n) for _ in range(2 * i + 1)]
    return total_chern(roots, n, len(roots))[len(roots)]
