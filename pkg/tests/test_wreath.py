import json
from importlib import resources

import pytest

from wreathmac.algebra import RatFun, poly_from_json
from wreathmac.partitions import bipartition_list, dual2, parse_bipartition
from wreathmac.symfunc import SymFunc2, schur2
from wreathmac.wreath import qt_inner2, wreath_H, wreath_N

q = RatFun.var(0)
t = RatFun.var(1)
one = RatFun.one()


def load_reference():
    with resources.files("wreathmac.fixtures").joinpath("wreath_reference.json").open() as fh:
        return json.load(fh)


def from_fixture(value):
    if isinstance(value, dict):
        return RatFun(poly_from_json(value["num"]), poly_from_json(value["den"]))
    return RatFun.from_poly(poly_from_json(value))


def test_degree_one_family_both_cores():
    for core in (0, 1):
        assert wreath_H(((1,), ()), core).expansion.coeffs == {
            ((1,), ()): one,
            ((), (1,)): q,
        }
        assert wreath_H(((), (1,)), core).expansion.coeffs == {
            ((1,), ()): one,
            ((), (1,)): t,
        }


@pytest.mark.parametrize("core,key", [(0, "wreath_core0_size2"), (1, "wreath_core1_size2")])
def test_degree_two_family(core, key):
    fixture = load_reference()[key]
    for label, row in fixture.items():
        got = wreath_H(parse_bipartition(label), core).expansion.coeffs
        want = {parse_bipartition(b): from_fixture(v) for b, v in row.items()}
        assert got == want


@pytest.mark.parametrize("core,key", [(0, "pair_core0_size2"), (1, "pair_core1_size2")])
def test_pairings_size2(core, key):
    fixture = load_reference()[key]
    for label, value in fixture.items():
        assert wreath_N(parse_bipartition(label), core).total == from_fixture(value)


def test_pairings_size1():
    assert wreath_N(((1,), ()), 0).total == (q**2 - 1) * (q - t)
    assert wreath_N(((), (1,)), 0).total == (t**2 - 1) * (t - q)
    # nabla is trivial in degree 1 and the cotangent factor carries the u
    nb = wreath_N(((1,), ()), 0)
    assert nb.nabla == one
    assert nb.cot_at_one == nb.total


def test_qt_inner_examples():
    H = wreath_H(((1,), ()), 0).expansion
    assert qt_inner2(H, H) == (q**2 - 1) * (q - t)
    H2 = wreath_H(((), (1,)), 0).expansion
    assert qt_inner2(H, H2).is_zero()
    assert qt_inner2(SymFunc2.one(), SymFunc2.one()) == one
    # symmetry of the pairing
    f = schur2(((1,), ())) + schur2(((), (1,))).scale(q)
    g = schur2(((), (1,))).scale(t) - schur2(((1,), ()))
    assert qt_inner2(f, g) == qt_inner2(g, f)


@pytest.mark.parametrize("core", [0, 1])
def test_orthogonality_sizes_up_to_2(core):
    for n in range(3):
        labels = bipartition_list(n)
        for i, a in enumerate(labels):
            for b in labels[i + 1 :]:
                v = qt_inner2(wreath_H(a, core).expansion, wreath_H(b, core).expansion)
                assert v.is_zero(), (a, b)


@pytest.mark.parametrize("core", [0, 1])
def test_orthogonality_size_3_stretch(core):
    labels = bipartition_list(3)
    fams = {bp: wreath_H(bp, core).expansion for bp in labels}
    for i, a in enumerate(labels):
        for b in labels[i + 1 :]:
            assert qt_inner2(fams[a], fams[b]).is_zero(), (a, b)


@pytest.mark.parametrize("core", [0, 1])
def test_parameter_swap_is_label_dual(core):
    for n in range(3):
        for bp in bipartition_list(n):
            swapped = {
                k: c.monomial_map((0, 1, 1, 0))
                for k, c in wreath_H(bp, core).expansion.coeffs.items()
            }
            assert swapped == wreath_H(dual2(bp), core).expansion.coeffs


@pytest.mark.parametrize("core", [0, 1])
def test_schur_positivity(core):
    for n in range(4):
        for bp in bipartition_list(n):
            for coeff in wreath_H(bp, core).expansion.coeffs.values():
                assert len(coeff.den.terms) == 1  # Laurent monomial denominator
                assert all(v > 0 for v in coeff.num.terms.values())


@pytest.mark.parametrize("core", [0, 1])
def test_total_equals_nabla_times_cot(core):
    for n in range(3):
        for bp in bipartition_list(n):
            p = wreath_N(bp, core)
            assert p.nabla * p.cot_at_one == p.total


def test_nabla_values_size2():
    # the non-trivial nabla factors are monomials
    assert wreath_N(((1, 1), ()), 0).nabla == (t**2).inverse()
    assert wreath_N(((), (2,)), 0).nabla == (q**2).inverse()
    assert wreath_N(((1, 1), ()), 1).nabla == (q**2).inverse()
    assert wreath_N(((), (2,)), 1).nabla == (t**2).inverse()
