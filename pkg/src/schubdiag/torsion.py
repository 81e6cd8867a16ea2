"""Torsion index of simply connected G from the top degree of the characteristic map.

The image of S(X(T)) in H^{2N}(G/B; Z) = Z [pt] is generated by the classes of
degree-N monomials in the fundamental weights, and such a monomial m maps to
``d_{w0}(m) [pt]``.  The torsion index is the gcd of these integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .flagbundle import typec_point_bundle_top_chern
from .polyring import Poly, monomials
from .rootsys import RootSystem, build
from .schubert import top_coefficient

MAX_RANK = 4


@dataclass
class TorsionReport:
    system: str
    N: int
    monomial_count: int
    gcd: int
    witness: tuple[int, ...]
    evaluated: int
    coefficients: list[tuple[tuple[int, ...], int]] | None = field(default=None)

    def to_json(self) -> dict:
        out = {
            "system": self.system,
            "N": self.N,
            "monomial_count": self.monomial_count,
            "monomials_evaluated": self.evaluated,
            "torsion_index": self.gcd,
            "witness_exponents": list(self.witness),
        }
        if self.coefficients is not None:
            out["coefficients"] = [{"exp": list(e), "value": v} for e, v in self.coefficients]
        return out


def weight_monomial_values(rs: RootSystem):
    """Yield (exponents, d_{w0}(prod omega_i^e_i)) in graded-lex order."""
    N = rs.num_positive
    weights = [Poly.linear(w) for w in rs.fundamental_weights]
    powers = []
    for w in weights:
        ps = [Poly.const(1, rs.coord_dim)]
        for _ in range(N):
            ps.append(ps[-1] * w)
        powers.append(ps)
    for e in monomials(rs.rank, N):
        m = Poly.const(1, rs.coord_dim)
        for i, k in enumerate(e):
            if k:
                m = m * powers[i][k]
        val = Fraction(top_coefficient(rs, m))
        if val.denominator != 1:
            raise AssertionError(f"non-integral top coefficient {val} for weight monomial {e}")
        yield e, int(val)


def torsion_index(rs: RootSystem, full: bool = False, max_rank: int = MAX_RANK) -> TorsionReport:
    """gcd over degree-N weight monomials of d_{w0}(m).

    Stops as soon as the running gcd is 1 unless ``full`` is set.  The
    witness is the monomial at which the running gcd first reached its final
    value.
    """
    if rs.rank > max_rank:
        raise ValueError(f"rank {rs.rank} exceeds the torsion rank cap {max_rank}")
    N = rs.num_positive
    total = sum(1 for _ in monomials(rs.rank, N))
    g = 0
    witness = None
    seen = 0
    values = [] if full else None
    for e, v in weight_monomial_values(rs):
        seen += 1
        ng = gcd(g, v)
        if ng != g:
            g, witness = ng, e
        if values is not None:
            values.append((e, v))
        if g == 1 and not full:
            break
    if g == 0:
        raise AssertionError("all top coefficients vanished")
    return TorsionReport(rs.name, N, total, g, witness, seen, values)


def type_c_point_certificate(n: int) -> Fraction:
    """d_{w0}(x1 x2^3 ... xn^(2n-1)) in type C_n; 1 certifies the point class."""
    rs = build("C", n)
    return Fraction(top_coefficient(rs, typec_point_bundle_top_chern(n)))
