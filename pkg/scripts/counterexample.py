"""Schubert expansion of (x1 x2 x3 + y1 y2 y3)/2 on G2 x G2, showing every non-integral coefficient."""

from schubdiag.diagonal import graham_conjecture_class, graham_counterexample
from schubdiag.rootsys import build
from schubdiag.schubert import expand


def main():
    rs = build("G2")
    exp = expand(rs, graham_conjecture_class())
    for u, v, c in exp.entries():
        flag = "" if c.denominator == 1 else "   <- not integral"
        print(f"{str(c):>6}  sigma_{u.word_string()} (x) sigma_{v.word_string()}{flag}")
    print("leading coefficient on sigma_212 (x) 1:", graham_counterexample())


if __name__ == "__main__":
    main()
