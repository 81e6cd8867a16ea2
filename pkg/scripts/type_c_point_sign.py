"""Top coefficient of the type-C point monomials under both variable orders."""

from schubdiag.polyring import Poly
from schubdiag.rootsys import build
from schubdiag.schubert import top_coefficient


def main():
    for n in (2, 3, 4):
        rs = build("C", n)
        inc = tuple(2 * i + 1 for i in range(n))
        dec = inc[::-1]
        print(f"C{n}: d_w0(x^{list(inc)}) = {top_coefficient(rs, Poly.monomial(inc))}, "
              f"d_w0(x^{list(dec)}) = {top_coefficient(rs, Poly.monomial(dec))}")


if __name__ == "__main__":
    main()
