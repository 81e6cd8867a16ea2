"""Torsion indices from the top degree of the characteristic map."""

import argparse
import time

from schubdiag.rootsys import from_string
from schubdiag.torsion import torsion_index

DEFAULT = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("systems", nargs="*", default=DEFAULT)
    ap.add_argument("--full", action="store_true", help="evaluate every weight monomial")
    args = ap.parse_args()
    for name in args.systems:
        t0 = time.perf_counter()
        rep = torsion_index(from_string(name), full=args.full)
        print(
            f"{name:3} t = {rep.gcd}  N = {rep.N:2d}  evaluated {rep.evaluated:4d}/{rep.monomial_count:<4d}"
            f" witness {list(rep.witness)}  {time.perf_counter() - t0:.2f}s"
        )


if __name__ == "__main__":
    main()
