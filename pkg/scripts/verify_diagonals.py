"""Verify every diagonal-class formula and print one line per candidate."""

import argparse
import time

from schubdiag.diagonal import (
    deconcini_c,
    deconcini_d,
    deconcini_g2,
    deconcini_g2_signfix,
    fulton_c,
    generic_diagonal,
    graham_g2,
    prop29_g2,
    prop29_g2_from_stabilizer,
    type_a_product,
    verify,
)
from schubdiag.rootsys import from_string


def candidates(include_d: bool):
    for n in (2, 3, 4):
        yield type_a_product(n)
    for n in (2, 3):
        yield fulton_c(n)
        yield deconcini_c(n)
    if include_d:
        yield deconcini_d(4)
    yield from (graham_g2(), prop29_g2(), deconcini_g2(), prop29_g2_from_stabilizer(), deconcini_g2_signfix())
    for name in ("A1", "A2", "A3", "B2", "C2", "B3", "G2"):
        yield generic_diagonal(from_string(name))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--skip-d", action="store_true", help="skip the D4 product")
    args = ap.parse_args()
    print(f"{'candidate':28} {'|W|':>5} {'diag':>6} {'sign':>5} {'kronecker':>9} {'mismatch':>8} {'time':>7}")
    for cand in candidates(not args.skip_d):
        t0 = time.perf_counter()
        rep = verify(cand)
        dt = time.perf_counter() - t0
        print(
            f"{cand.ident:28} {rep.order:5d} {str(rep.diag_eval_constant):>6} {rep.global_sign:+5d}"
            f" {str(rep.kronecker_ok):>9} {len(rep.mismatches):8d} {dt:6.2f}s"
        )


if __name__ == "__main__":
    main()
