"""Locate the sign that decides whether the printed G2 product represents the diagonal.

Prints the orbit of a1, its stabilizer, and the verification outcome of the
product for both choices of sign inside the last factor a2 -/+ (3 b1 + b2).
"""

from fractions import Fraction

from schubdiag.diagonal import DiagonalCandidate, verify
from schubdiag.polyring import product, variables
from schubdiag.rootsys import build, orbit, stabilizer


def main():
    rs = build("G2")
    print("orbit of a1:", sorted(orbit(rs, (1, 0))))
    for w in stabilizer(rs, (1, 0)):
        print(f"stabilizer element s_{w.word_string()}: a2 -> {rs.root_to_string(w.act((0, 1)))}")
    a1, a2, b1, b2 = variables(4)
    head = [a1 + b1, a1 - (2 * b1 + b2), a1 + (2 * b1 + b2), a1 - (b1 + b2), a1 + (b1 + b2)]
    for label, last in (("a2 - (3b1 + b2)", a2 - (3 * b1 + b2)), ("a2 + (3b1 + b2)", a2 + (3 * b1 + b2))):
        p = product(head + [last], 4).scale(Fraction(1, 2))
        rep = verify(DiagonalCandidate(rs, "study", p))
        print(f"last factor {label}: diag = {rep.diag_eval_constant}, kronecker = {rep.kronecker_ok}, "
              f"mismatching pairs = {len(rep.mismatches)}")


if __name__ == "__main__":
    main()
