from fractions import Fraction

import pytest
import sympy as sp

from schubdiag.diagonal import (
    ZeroClass,
    DiagonalCandidate,
    build_candidate,
    deconcini_c,
    deconcini_d_factor,
    deconcini_g2,
    deconcini_g2_signfix,
    fulton_c,
    fulton_w,
    g2_bridge_images,
    generic_diagonal,
    graham_conjecture_class,
    graham_counterexample,
    graham_g2,
    prop29_g2,
    prop29_g2_from_stabilizer,
    type_a_product,
    verify,
)
from schubdiag.polyring import Poly, diagonal_substitute, variables
from schubdiag.rootsys import build, from_string
from schubdiag.schubert import class_equal, divided_difference_word, top_coefficient


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_a_product_verifies(n):
    rep = verify(type_a_product(n))
    assert rep.kronecker_ok and rep.global_sign == 1
    assert rep.diag_eval_constant == rep.order


def test_type_a_generic_matches_product():
    ok, _ = class_equal(build("A", 2), generic_diagonal(build("A", 2)).poly, type_a_product(3).poly)
    assert ok


@pytest.mark.parametrize("n", [2, 3])
def test_type_c_formulas(n):
    for cand in (fulton_c(n), deconcini_c(n)):
        rep = verify(cand)
        assert rep.passed and abs(rep.diag_eval_constant) == 2**n * [1, 1, 2, 6][n]
        assert cand.degree() == n * n
    ok, diffs = class_equal(build("C", n), fulton_c(n).poly, deconcini_c(n).poly)
    assert ok, diffs


def test_c2_diagonal_substitution_is_roots_product():
    x1, x2 = variables(2)
    assert diagonal_substitute(deconcini_c(2).poly) == 4 * x1 * x2 * (x1 - x2) * (x1 + x2)


def test_fulton_w_uses_truncated_elementary_symmetric():
    x1, x2, y1, y2 = variables(4)
    # n = 2: det [[e2, 0], [1 + 1, e1]] over x and y
    e1 = x1 + x2 + y1 + y2
    e2 = x1 * x2 + y1 * y2
    assert fulton_w(2) == e2 * e1


@pytest.mark.parametrize("i", [1, 2, 3])
def test_deconcini_d_factors_are_polynomial(i):
    f = deconcini_d_factor(4, i)
    assert f.is_homogeneous() and f.degree() == 2 * (4 - i)


def test_deconcini_d_factor_matches_sympy_rational_form():
    xs = sp.symbols("x1:5")
    ys = sp.symbols("y1:5")
    n, i = 4, 2
    k = i - 1
    w = sp.Rational(1, 2) * (
        (1 + ys[k] / xs[k]) * sp.prod([xs[k] ** 2 - ys[j] ** 2 for j in range(k + 1, n)])
        + (-1) ** (n - i) * (sp.prod(xs[k:]) - sp.prod(ys[k:])) * sp.prod(ys[k + 1:]) / xs[k]
    )
    w = sp.cancel(w)
    assert sp.fraction(w)[1] == 1
    from oracle import from_sympy

    assert from_sympy(w, list(xs) + list(ys)) == deconcini_d_factor(n, i)


def test_graham_g2_verifies_with_negative_sign():
    rep = verify(graham_g2())
    assert rep.kronecker_ok and rep.global_sign == -1 and rep.diag_eval_constant == -12


def test_printed_g2_expressions_do_not_verify():
    # measured: the printed last factor a2 - (3 b1 + b2) kills the class
    for cand in (prop29_g2(), deconcini_g2()):
        rep = verify(cand)
        assert not rep.kronecker_ok and rep.diag_eval_constant == 0
    assert prop29_g2().poly == deconcini_g2().poly


def test_printed_g2_at_diagonal():
    a1, a2 = variables(2)
    got = diagonal_substitute(prop29_g2().poly)
    assert got == -3 * a1 * a1 * a2 * (a1 + a2) * (2 * a1 + a2) * (3 * a1 + a2)
    assert top_coefficient(build("G2"), got) == 0


def test_g2_sign_corrected_expressions_verify():
    for cand in (prop29_g2_from_stabilizer(), deconcini_g2_signfix()):
        rep = verify(cand)
        assert rep.passed and rep.global_sign == 1 and rep.diag_eval_constant == 12
    assert prop29_g2_from_stabilizer().poly == deconcini_g2_signfix().poly
    ok, _ = class_equal(build("G2"), graham_g2().poly, -prop29_g2_from_stabilizer().poly)
    assert ok


def test_g2_bridge():
    imgs = g2_bridge_images()
    x1, x2, x3 = imgs[:3]
    # x1 - x2 = a1 and -2 x1 + x2 + x3 = a2; x1 + x2 + x3 = 0
    assert tuple(a - b for a, b in zip(x1, x2)) == (1, 0, 0, 0)
    assert tuple(-2 * a + b + c for a, b, c in zip(x1, x2, x3)) == (0, 1, 0, 0)
    assert tuple(a + b + c for a, b, c in zip(x1, x2, x3)) == (0, 0, 0, 0)


def test_cubic_under_bridge_has_small_denominator():
    p = graham_conjecture_class().restrict(0, 2)
    assert 54 % p.denominator() == 0


def test_counterexample_is_non_integral():
    value = graham_counterexample()
    assert value.denominator != 1
    assert value == Fraction(1, 9)
    # the y-only half dies under any x-operator
    y = graham_conjecture_class()
    a1, a2, b1, b2 = variables(4)
    pure_y = Poly(4, {e: c for e, c in y.terms.items() if e[0] == e[1] == 0})
    assert divided_difference_word(build("G2"), (2, 1, 2), pure_y, block=0).is_zero()


def test_counterexample_other_word_vanishes():
    q = divided_difference_word(build("G2"), (1, 2, 1), graham_conjecture_class(), block=0)
    assert q.is_zero()


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "C2", "B3", "G2"])
def test_generic_diagonal(name):
    rep = verify(generic_diagonal(from_string(name)))
    assert rep.passed and rep.global_sign == 1


def test_generic_a1():
    cand = generic_diagonal(build("A", 1))
    x1, x2, y1, y2 = variables(4)
    ok, _ = class_equal(build("A", 1), cand.poly, x1 + y1)
    assert ok


def test_zero_class():
    with pytest.raises(ZeroClass, match="zero class"):
        verify(DiagonalCandidate(build("A", 1), "typeA", Poly.zero(4)))


def test_wrong_degree_rejected():
    x1, x2, y1, y2 = variables(4)
    with pytest.raises(ValueError):
        verify(DiagonalCandidate(build("A", 1), "typeA", x1 * y1))


def test_build_candidate_dispatch():
    assert build_candidate("A2", "typeA").system.name == "A2"
    assert build_candidate(None, "grahamG2").system.name == "G2"
    with pytest.raises(ValueError):
        build_candidate("A2", "fultonC")
    with pytest.raises(ValueError):
        build_candidate("A2", "nonsense")
    with pytest.raises(ValueError):
        build_candidate("D5", "deconciniD")


def test_report_json_lists_mismatches():
    out = verify(prop29_g2()).to_json()
    assert out["kronecker_ok"] is False and len(out["mismatches"]) == 15
    assert out["diag_eval_constant"] == "0"
