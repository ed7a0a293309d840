from fractions import Fraction

import pytest

from wreathmac.oracle import (
    CharTable,
    FFElem,
    count_points,
    frobenius_count,
    genericity_check,
    sym_char,
    twisted_class,
    wreath_group_char,
    _gl2,
)
from wreathmac.partitions import bipartition_list, partition_list
from wreathmac.symfunc import symgroup_char, wreath_char


def test_ffelem_validation():
    assert FFElem(9, 7).residue == 2
    with pytest.raises(ValueError):
        FFElem(1, 8)
    with pytest.raises(ValueError):
        FFElem(1, 2)


def test_genericity_examples():
    ok, wit = genericity_check([(2,), (1,)], 7, strong=True)
    assert ok and wit is None
    ok, wit = genericity_check([(2,), (3,)], 7, strong=False)
    assert not ok and wit["product"] == 1
    # empty tuples are vacuously generic
    ok, _ = genericity_check([(), ()], 7, strong=True)
    assert ok


def test_rank_one_counts():
    for prime in (5, 7):
        for g, k in ((0, 1), (1, 1), (0, 2)):
            got = count_points(1, g, prime, [1] * (2 * k))
            assert got == (prime - 1) ** (2 * (g + k - 1))


def test_rank_two_count_q7():
    assert count_points(2, 1, 7, [2, 1]) == 2 * 7**4 - 2 * 7**3 - 2 * 7 + 2


def test_rank_two_count_q13_both_orbits():
    prime = 13
    assert pow(5, 2, prime) == prime - 1
    got = count_points(2, 1, prime, [2, 5])
    assert got == prime**6 - 3 * prime**4 + 4 * prime**3 - 3 * prime**2 + 1


def test_twisted_orbit_sizes():
    G = _gl2(7)
    assert len(twisted_class(G, 1).members) == 6  # |GL2|/|SL2| = q - 1
    assert len(twisted_class(G, 2).members) == G.size // 6
    G13 = _gl2(13)
    both = twisted_class(G13, 5)
    assert both.orbits == "both"
    assert len(both.members) == 13**2 * 12
    single = twisted_class(G13, 5, "single")
    assert len(single.members) == G13.size // 24  # split orthogonal centralizer


def test_frobenius_dihedral():
    for m in (3, 5, 7):
        table = CharTable(
            nsub_order=m,
            class_sizes={"refl": m},
            char_degrees=[1],
            char_values=[{"refl": Fraction(1)}],
        )
        assert frobenius_count(table, 0, ["refl", "refl"]) == m
        assert frobenius_count(table, 1, ["refl", "refl"]) == m**3


def test_frobenius_trivial_subgroup():
    table = CharTable(
        nsub_order=1,
        class_sizes={"s": 1},
        char_degrees=[1],
        char_values=[{"s": Fraction(1)}],
    )
    for g in range(3):
        assert frobenius_count(table, g, ["s", "s"]) == 1
    # flipping the extension on an even number of factors changes nothing
    flipped = CharTable(
        nsub_order=1,
        class_sizes={"s": 1},
        char_degrees=[1],
        char_values=[{"s": Fraction(-1)}],
    )
    assert frobenius_count(flipped, 1, ["s", "s"]) == 1


def test_frobenius_rejects_odd_puncture_count():
    table = CharTable(1, {"s": 1}, [1], [{"s": Fraction(1)}])
    with pytest.raises(ValueError):
        frobenius_count(table, 0, ["s"])


def test_murnaghan_nakayama_matches_transition_tables():
    for n in range(6):
        for lam in partition_list(n):
            for mu in partition_list(n):
                assert sym_char(lam, mu) == symgroup_char(lam, mu)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_wreath_characters_cross_validate(m):
    for alpha in bipartition_list(m):
        for beta in bipartition_list(m):
            assert wreath_group_char(m, alpha, beta) == wreath_char(alpha, beta)


def test_sign_character_on_negative_cycles():
    # the second-slot one-column label is the product-of-signs character
    # times the sign of the underlying permutation
    for m in (1, 2, 3):
        alpha = ((), (1,) * m)
        for beta in bipartition_list(m):
            sign_perm = (-1) ** (sum(beta[0]) - len(beta[0]) + sum(beta[1]) - len(beta[1]))
            assert wreath_group_char(m, alpha, beta) == (-1) ** len(beta[1]) * sign_perm


def test_nongeneric_divisibility_failure():
    # a blatantly non-generic configuration trips the exact-division check
    with pytest.raises(ArithmeticError):
        count_points(2, 0, 7, [2, 3])


def test_higher_genus_count_matches_formula():
    # genus-2 commutator convolution path
    from wreathmac.classtypes import parse_simple_type as pt
    from wreathmac.hodge import ProblemSpec, e_polynomial

    count = count_points(2, 2, 7, [2, 1])
    spec = ProblemSpec(2, 1, 2, (pt("0,0:1"), pt("1,0:")))
    e, _ = e_polynomial(spec)
    assert count == e.eval_at(7, 0)


def test_four_punctures_count_matches_formula():
    # 2k = 4 pair-distribution convolution path, nonzero variety
    from wreathmac.classtypes import parse_simple_type as pt
    from wreathmac.hodge import ProblemSpec, e_polynomial

    ok, _ = genericity_check([(2,), (2,), (2,), (3,)], 17, strong=True)
    assert ok
    count = count_points(2, 0, 17, [2, 2, 2, 3])
    spec = ProblemSpec(0, 2, 2, tuple(pt("0,0:1") for _ in range(4)))
    e, _ = e_polynomial(spec)
    assert count == e.eval_at(17, 0) != 0


def test_weakly_generic_breaks_the_formula():
    # at q = 5 the class data is generic but not strongly generic (a squared
    # eigenvalue product hits -1); the count is then half the formula value,
    # demonstrating why strong genericity is required
    ok, wit = genericity_check([(2,), (1,)], 5, strong=False)
    assert ok
    ok, wit = genericity_check([(2,), (1,)], 5, strong=True)
    assert not ok and wit["product"] == 4
    from wreathmac.classtypes import parse_simple_type as pt
    from wreathmac.hodge import ProblemSpec, e_polynomial

    count = count_points(2, 2, 5, [2, 1])
    spec = ProblemSpec(2, 1, 2, (pt("0,0:1"), pt("1,0:")))
    e, _ = e_polynomial(spec)
    assert 2 * count == e.eval_at(5, 0)
