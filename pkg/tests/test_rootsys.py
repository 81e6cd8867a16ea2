from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubdiag.rootsys import (
    UnsupportedRootSystem,
    WeylGroupTooLarge,
    build,
    enumerate_weyl,
    expected_order,
    from_string,
    orbit,
    parse_system,
    reflection,
    stabilizer,
    weyl_group,
)

SYSTEMS = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2"]
ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "B4": 384,
          "C2": 8, "C3": 48, "C4": 384, "D4": 192, "G2": 12}
NPOS = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "B4": 16,
        "C2": 4, "C3": 9, "C4": 16, "D4": 12, "G2": 6}


def kac_cartan(family, r):
    """Textbook a_ij = <alpha_i^v, alpha_j> (Kac numbering, short root last for B, long for C)."""
    a = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)] for i in range(r)]
    if family == "B":
        a[r - 1][r - 2] = -2
    elif family == "C":
        a[r - 2][r - 1] = -2
    elif family == "D":
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
    elif family == "G2":
        a = [[2, -3], [-1, 2]]
    return a


@pytest.mark.parametrize("name", SYSTEMS)
def test_orders_and_positive_roots(name):
    rs = from_string(name)
    assert rs.num_positive == NPOS[name]
    W = weyl_group(rs)
    assert len(W) == ORDERS[name] == expected_order(rs)
    assert W.longest.length == rs.num_positive


@pytest.mark.parametrize("name", SYSTEMS)
def test_cartan_matrix_matches_textbook(name):
    rs = from_string(name)
    kac = kac_cartan(rs.family, rs.rank)
    got = rs.cartan_matrix()
    # ours is <alpha_i, alpha_j^v>, the transpose of the textbook convention
    assert [[got[j][i] for j in range(rs.rank)] for i in range(rs.rank)] == kac


def test_g2_conventions():
    rs = build("G2")
    assert rs.pairing((1, 0), (0, 1)) == -1 and rs.pairing((0, 1), (1, 0)) == -3
    assert rs.positive_roots == ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
    s1, s2 = rs.simple_reflections
    assert [tuple(c) for c in zip(*s1)] == [(-1, 0), (3, 1)]
    assert [tuple(c) for c in zip(*s2)] == [(1, 1), (0, -1)]


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2"])
def test_length_equals_inversions_and_words_reproduce(name):
    rs = from_string(name)
    W = weyl_group(rs)
    for w in W:
        assert W.inversions(w) == w.length == len(w.word)
        assert W.from_word(w.word) == w
        assert W.mul(w, W.inverse(w)) == W.identity


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
def test_longest_element_negates_positive_roots(name):
    rs = from_string(name)
    w0 = weyl_group(rs).longest
    neg = {tuple(-c for c in a) for a in rs.positive_roots}
    assert {w0.act(a) for a in rs.positive_roots} == neg


@given(st.sampled_from(["A2", "B2", "C3", "G2"]), st.data())
def test_group_closure(name, data):
    rs = from_string(name)
    W = weyl_group(rs)
    u = data.draw(st.sampled_from(W.elements))
    v = data.draw(st.sampled_from(W.elements))
    uv = W.mul(u, v)
    assert uv in W.elements
    assert W.inverse(uv) == W.mul(W.inverse(v), W.inverse(u))


@pytest.mark.parametrize("name", SYSTEMS)
def test_roots_are_closed_under_reflections(name):
    rs = from_string(name)
    for s in rs.simple_reflections:
        for r in rs.roots:
            img = tuple(sum(s[i][j] * r[j] for j in range(rs.coord_dim)) for i in range(rs.coord_dim))
            assert rs.is_root(img)


def test_g2_orbit_and_stabilizer():
    rs = build("G2")
    assert orbit(rs, (1, 0)) == {(1, 0), (1, 1), (2, 1), (-1, 0), (-1, -1), (-2, -1)}
    stab = stabilizer(rs, (1, 0))
    assert [w.word for w in stab] == [(), (2, 1, 2, 1, 2)]
    # the non-trivial stabilizer element sends a2 to -(3a1 + a2)
    assert stab[1].act((0, 1)) == (-3, -1)


def test_reflection_in_any_root():
    rs = build("C", 3)
    for r in rs.positive_roots:
        w = reflection(rs, r)
        assert w.act(r) == tuple(-c for c in r)
        assert w.length % 2 == 1
    with pytest.raises(ValueError):
        reflection(rs, (1, 1, 1))


def test_simple_coordinates_are_exact():
    rs = build("B", 3)
    assert rs.simple_coordinates((1, 0, 0)) == (1, 1, 1)
    assert rs.simple_coordinates(rs.fundamental_weights[2]) == (Fraction(1, 2), 1, Fraction(3, 2))


def test_parsing_and_unsupported():
    assert parse_system("a3") == ("A", 3) and parse_system("G2") == ("G2", 2)
    for bad in ["E6", "F4", "G3", "D3", "A0", "", "C9", "xyz"]:
        with pytest.raises(UnsupportedRootSystem, match="unsupported root system"):
            from_string(bad)


def test_weyl_cap():
    with pytest.raises(WeylGroupTooLarge, match="Weyl group too large"):
        weyl_group(build("B", 4), cap=100)
    with pytest.raises(WeylGroupTooLarge):
        enumerate_weyl(build("A", 3), cap=10)


def test_lex_minimal_reduced_words():
    W = weyl_group(build("A", 2))
    assert [w.word for w in W] == [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]
