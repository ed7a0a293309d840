import pytest

from wreathmac.algebra import RatFun
from wreathmac.partitions import bipartition_list, dual2, partition_list, z_stat2
from wreathmac.symfunc import (
    SymFunc1,
    SymFunc2,
    complete2,
    convert_basis,
    embed_diagonal,
    schur2,
    wreath_char,
)

q = RatFun.var(0)
t = RatFun.var(1)
one = RatFun.one()
zero = RatFun.zero()


def test_complete_to_schur_examples():
    assert SymFunc1.basis_elem("h", (2,)).to_basis("s").coeffs == {(2,): one}
    h1sq = SymFunc1.basis_elem("h", (1, 1)).to_basis("s")
    assert h1sq.coeffs == {(2,): one, (1, 1): one}


def test_wreath_power_expansion():
    f = SymFunc2.basis_elem("wp", ((1,), ())).to_basis("s2")
    assert f.coeffs == {((1,), ()): one, ((), (1,)): one}
    f = SymFunc2.basis_elem("wp", ((), (1,))).to_basis("s2")
    assert f.coeffs == {((1,), ()): one, ((), (1,)): RatFun.const(-1)}


@pytest.mark.parametrize("basis", ["s", "p", "h", "m"])
@pytest.mark.parametrize("target", ["s", "p", "h", "m"])
def test_one_alphabet_round_trips(basis, target, rng):
    coeffs = {lam: RatFun.const(rng.randrange(-3, 4)) for lam in partition_list(4)}
    f = SymFunc1(basis, coeffs)
    assert convert_basis(convert_basis(f, target), basis) == f


@pytest.mark.parametrize("basis", ["s2", "p2", "wp"])
@pytest.mark.parametrize("target", ["s2", "p2", "wp"])
def test_two_alphabet_round_trips(basis, target, rng):
    coeffs = {bp: RatFun.const(rng.randrange(-3, 4)) for bp in bipartition_list(3)}
    f = SymFunc2(basis, coeffs)
    assert convert_basis(convert_basis(f, target), basis) == f


def test_embed_diagonal():
    e = embed_diagonal(SymFunc1.basis_elem("h", (1,))).to_basis("s2")
    assert e.coeffs == {((1,), ()): one, ((), (1,)): one}
    e = embed_diagonal(SymFunc1.basis_elem("p", (2,))).to_basis("s2")
    assert e.coeffs == {
        ((2,), ()): one,
        ((1, 1), ()): -one,
        ((), (2,)): one,
        ((), (1, 1)): -one,
    }
    assert embed_diagonal(SymFunc1.one()).to_basis("s2").coeffs == {((), ()): one}


def test_hall_inner():
    assert schur2(((1,), ())).hall_inner(schur2(((1,), ()))) == one
    assert schur2(((1,), ())).hall_inner(schur2(((), (1,)))) == zero
    wp = lambda bp: SymFunc2.basis_elem("wp", bp)
    assert wp(((1,), ())).hall_inner(wp(((1,), ()))) == RatFun.const(2)
    for m in range(3):
        for a in bipartition_list(m):
            for b in bipartition_list(m):
                v = wp(a).hall_inner(wp(b))
                assert v == (RatFun.const(z_stat2(a)) if a == b else zero)


def test_substitute_identity_and_negation(rng):
    ident = [[one, zero], [zero, one]]
    f = SymFunc2("s2", {bp: RatFun.const(rng.randrange(1, 5)) for bp in bipartition_list(2)})
    assert f.alphabet_substitute(ident) == f
    neg = [[zero, -one], [-one, zero]]
    for n in range(4):
        for bp in bipartition_list(n):
            g = schur2(bp).alphabet_substitute(neg).to_basis("s2")
            assert g.coeffs == {dual2(bp): RatFun.const((-1) ** n)}


def test_substitute_complete_by_inverse_matrix():
    # h_((1),()) (P X) = (p1(x0) + q p1(x1)) / (1 - q^2) in degree 1
    c = (one - q * q).inverse()
    P = [[c, c * q], [c * q, c]]
    g = complete2(((1,), ())).alphabet_substitute(P).to_basis("s2")
    assert g.coeffs == {((1,), ()): c, ((), (1,)): q * c}


def test_substitute_multiplicative(rng):
    M = [[q, one - t], [t * q, RatFun.const(2)]]
    f = SymFunc2("s2", {bp: RatFun.const(rng.randrange(-2, 3)) for bp in bipartition_list(1)})
    g = SymFunc2("s2", {bp: RatFun.const(rng.randrange(-2, 3)) for bp in bipartition_list(2)})
    assert (f * g).alphabet_substitute(M) == f.alphabet_substitute(M) * g.alphabet_substitute(M)


def test_substitute_composition_constant_matrices(rng):
    # with constant entries the power twist is trivial; the substitution
    # endomorphisms compose via the reversed matrix product
    def cmat():
        return [
            [RatFun.const(rng.randrange(-2, 3)) for _ in range(2)] for _ in range(2)
        ]

    for _ in range(5):
        A, B = cmat(), cmat()
        BA = [
            [B[i][0] * A[0][j] + B[i][1] * A[1][j] for j in range(2)]
            for i in range(2)
        ]
        f = SymFunc2("s2", {bp: RatFun.const(rng.randrange(-2, 3)) for bp in bipartition_list(2)})
        assert f.alphabet_substitute(B).alphabet_substitute(A) == f.alphabet_substitute(BA)


def test_wreath_char_values():
    assert wreath_char(((1,), ()), ((1,), ())) == 1
    assert wreath_char(((), (1,)), ((1,), ())) == 1
    assert wreath_char(((), (1,)), ((), (1,))) == -1
    for m in range(4):
        top = ((m,) if m else (), ())
        for beta in bipartition_list(m):
            assert wreath_char(top, beta) == 1
    with pytest.raises(ValueError):
        wreath_char(((1,), ()), ((1,), (1,)))


def test_wreath_char_column_orthogonality():
    for m in range(4):
        labels = bipartition_list(m)
        for b in labels:
            for c in labels:
                total = sum(wreath_char(a, b) * wreath_char(a, c) for a in labels)
                assert total == (z_stat2(b) if b == c else 0)


def test_scalar_plethysm_examples():
    s1 = SymFunc1.basis_elem("s", (1,))
    f = s1.scalar_plethysm(one - q).to_basis("s")
    assert f.coeffs == {(1,): one - q}
    assert s1.scalar_plethysm(one) == s1
    # s_(2)[Z/(1-q)] paired against h_2 is 1/((1-q)(1-q^2))
    s2_ = SymFunc1.basis_elem("s", (2,))
    val = s2_.scalar_plethysm((one - q).inverse()).hall_inner(
        SymFunc1.basis_elem("h", (2,))
    )
    assert val == ((one - q) * (one - q * q)).inverse()
