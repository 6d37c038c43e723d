"""Quadratic algebras in admissible bases, coproducts, and the convolution differential."""

from itertools import product

import pytest

from becochains.algebras import (
    HomWH,
    arnold_basis,
    arnold_mult,
    arnold_normalize,
    convolution,
    coproduct,
    coproduct_component,
    d_w1,
    dims,
    hochschild_d,
    is_admissible_arnold,
    is_admissible_yb,
    parse_word,
    tau,
    w_basis,
    word_text,
    yb_basis,
    yb_normalize,
)


def words(text):
    """Parse 'B12.B23 + B13.B23' into a frozenset of words."""
    if text == "0":
        return frozenset()
    return frozenset(parse_word(part.strip())[1] for part in text.split("+"))


def test_arnold_squares_vanish():
    assert arnold_normalize(((1, 2), (1, 2))) == frozenset()
    assert arnold_normalize(((1, 3), (2, 3), (1, 3))) == frozenset()


def test_arnold_three_term_anchor():
    assert arnold_normalize(((1, 3), (2, 3))) == words("A12.A23 + A12.A13")


def test_arnold_commutativity():
    a = arnold_normalize(((1, 2), (3, 4), (1, 3)))
    b = arnold_normalize(((1, 3), (1, 2), (3, 4)))
    assert a == b


def test_arnold_normalize_is_admissible():
    for raw in product(((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)), repeat=2):
        for w in arnold_normalize(raw):
            assert is_admissible_arnold(w)


def test_arnold_mult_matches_normalize():
    x = words("A13.A24")
    y = words("A12")
    prod = arnold_mult(x, y)
    assert prod == arnold_normalize(((1, 3), (2, 4), (1, 2)))


def test_arnold_associativity_quadratic():
    gens = [((i, j),) for j in range(2, 5) for i in range(1, j)]
    for a, b, c in product(gens, repeat=3):
        left = arnold_mult(arnold_mult({a}, {b}), {c})
        right = arnold_mult({a}, arnold_mult({b}, {c}))
        assert left == right


def poincare_dims_arnold(k, length):
    """Coefficient of x^length in prod_m (1 + m x) for m = 1..k-1."""
    coeffs = [1]
    for m in range(1, k):
        coeffs = [
            (coeffs[d] if d < len(coeffs) else 0)
            + (m * coeffs[d - 1] if d - 1 >= 0 else 0)
            for d in range(len(coeffs) + 1)
        ]
    return coeffs[length] if length < len(coeffs) else 0


def poincare_dims_yb(k, length):
    """Coefficient of x^length in prod_m 1 / (1 - m x) for m = 1..k-1."""
    coeffs = [1] + [0] * length
    for m in range(1, k):
        for d in range(1, length + 1):
            coeffs[d] += m * coeffs[d - 1]
    return coeffs[length]


def test_dims_against_closed_forms():
    for k in (3, 4, 5):
        for length in range(5):
            assert dims("arnold", k, length) == poincare_dims_arnold(k, length)
            assert dims("yb", k, length) == poincare_dims_yb(k, length)


def test_basis_lengths_match_dims():
    assert len(arnold_basis(4, 2)) == 11
    assert len(yb_basis(4, 2)) == 25
    assert len(yb_basis(4, 3)) == 90
    assert len(yb_basis(4, 4)) == 301
    assert all(is_admissible_yb(w) for w in yb_basis(4, 3))
    assert all(is_admissible_arnold(w) for w in arnold_basis(4, 2))


def test_yb_quadratic_anchor():
    assert yb_normalize(((1, 3), (1, 2))) == words("B12.B13 + B13.B23 + B23.B13")


def test_yb_cubic_anchor():
    got = yb_normalize(((1, 2), (2, 4), (2, 3)))
    assert got == words("B12.B23.B24 + B12.B24.B34 + B12.B34.B24")


def test_yb_disjoint_factors_commute():
    assert yb_normalize(((3, 4), (1, 2))) == words("B12.B34")


def test_yb_admissible_words_are_fixed():
    for w in yb_basis(4, 2):
        assert yb_normalize(w) == frozenset({w})


def test_yb_confluence_all_triples():
    """Associativity of the normalized product over all 216 generator triples."""
    gens = [(i, j) for j in range(2, 5) for i in range(1, j)]
    for a, b, c in product(gens, repeat=3):
        ab_c = frozenset()
        for w in yb_normalize((a, b)):
            ab_c = ab_c ^ yb_normalize(w + (c,))
        a_bc = frozenset()
        for w in yb_normalize((b, c)):
            a_bc = a_bc ^ yb_normalize((a,) + w)
        flat = yb_normalize((a, b, c))
        assert ab_c == a_bc == flat


COPRODUCT_DISPLAYS = {
    "B12.B23.B13": [
        ("B12.B13", "B12"), ("B12.B23", "B12"), ("B23.B13", "B12"),
        ("B12.B23", "B13"), ("B23", "B12.B13"), ("B12", "B23.B13"),
    ],
    "B12.B24.B14": [
        ("B12.B14", "B12"), ("B12.B24", "B12"), ("B24.B14", "B12"),
        ("B12.B24", "B14"), ("B24", "B12.B14"), ("B12", "B24.B14"),
    ],
    "B12.B34.B24": [
        ("B34.B24", "B12"), ("B12.B24", "B23"), ("B12.B34", "B23"),
        ("B12.B34", "B24"), ("B24", "B12.B23"), ("B34", "B12.B23"),
        ("B34", "B12.B24"), ("B12", "B34.B24"),
    ],
    "B23.B13.B24": [
        ("B13.B24", "B12"), ("B23.B24", "B12"), ("B23.B24", "B13"),
        ("B23.B13", "B24"), ("B13", "B12.B24"), ("B23", "B12.B24"),
        ("B23", "B13.B24"), ("B24", "B23.B13"),
    ],
    "B23.B24.B14": [
        ("B23.B14", "B12"), ("B23.B24", "B12"), ("B24.B14", "B23"),
        ("B23.B24", "B14"), ("B14", "B12.B23"), ("B24", "B12.B23"),
        ("B24", "B23.B14"), ("B23", "B24.B14"),
    ],
    "B23.B34.B24": [
        ("B23.B24", "B23"), ("B23.B34", "B23"), ("B34.B24", "B23"),
        ("B23.B34", "B24"), ("B34", "B23.B24"), ("B23", "B34.B24"),
    ],
}


def test_coproduct_displays():
    for wtext, display in COPRODUCT_DISPLAYS.items():
        _, w = parse_word(wtext)
        expected = frozenset(
            (parse_word(u)[1], parse_word(v)[1]) for u, v in display
        )
        assert coproduct(4, w) == expected, wtext


def test_coproduct_dualizes_multiplication():
    """(u, v) appears in the coproduct of w iff w appears in u times v."""
    for lu, lv in ((1, 1), (1, 2), (2, 1)):
        us, vs = yb_basis(4, lu), yb_basis(4, lv)
        for w in yb_basis(4, lu + lv):
            got = frozenset(coproduct_component(4, w, lu, lv))
            expected = frozenset(
                (u, v) for u in us for v in vs if w in yb_normalize(u + v)
            )
            assert got == expected


def test_d_w1_matches_dual_multiplication():
    gens = yb_basis(4, 1)
    for w in w_basis(4, 1):
        direct = d_w1(w)
        dualized = frozenset(
            (g1[0], g2[0]) for g1 in gens for g2 in gens
            if w in yb_normalize(g1 + g2)
        )
        assert direct == dualized, w


def test_d_w1_case_examples():
    # square of a single generator
    assert ((1, 2), (1, 2)) in d_w1(((1, 2), (1, 2)))
    # strictly increasing second indices: both product orders
    both = d_w1(((1, 2), (3, 4)))
    assert ((1, 2), (3, 4)) in both and ((3, 4), (1, 2)) in both
    # equal second indices with i larger on the left
    hits = d_w1(((2, 3), (1, 3)))
    assert ((2, 3), (1, 3)) in hits


def test_tau_is_identity_on_generators():
    t = tau(4)
    for w in w_basis(4, 0):
        assert t.apply(w) == frozenset({w})


def test_tau_convolution_square_vanishes():
    t = tau(4)
    assert convolution(t, t).is_zero()


def test_hochschild_squares_to_zero_on_random_maps():
    import random

    rng = random.Random(31)
    basis = arnold_basis(4, 1)
    for _ in range(10):
        f = HomWH(4, 0, 1, tuple(rng.getrandbits(len(basis)) for _ in w_basis(4, 0)))
        assert hochschild_d(hochschild_d(f)).is_zero()
    for _ in range(5):
        basis2 = arnold_basis(4, 1)
        f = HomWH(4, 1, 1, tuple(rng.getrandbits(len(basis2)) for _ in w_basis(4, 1)))
        assert hochschild_d(hochschild_d(f)).is_zero()


def test_homwh_addition_and_equality():
    t = tau(4)
    z = HomWH.zero(4, 0, 1)
    assert t + z == t
    assert t + t == z
    assert (t + t).is_zero()


def test_parse_and_word_text_roundtrip():
    for text in ("B12", "B12.B23", "A12.A34", "B23.B13.B24"):
        kind, w = parse_word(text)
        assert word_text(kind, w) == text


def test_parse_word_rejects_garbage():
    with pytest.raises(ValueError):
        parse_word("B11")
    with pytest.raises(ValueError):
        parse_word("Q12")
