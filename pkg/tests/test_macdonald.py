from wreathmac.algebra import RatFun
from wreathmac.macdonald import N_deformed, N_pairing, macdonald_H, qt_inner1
from wreathmac.partitions import dual, hook_poly, n_stat, partition_list
from wreathmac.symfunc import SymFunc1

q = RatFun.var(0)
t = RatFun.var(1)
one = RatFun.one()


def test_degree_2_expansions():
    assert macdonald_H((2,)).expansion.coeffs == {(2,): one, (1, 1): q}
    assert macdonald_H((1, 1)).expansion.coeffs == {(2,): one, (1, 1): t}
    assert macdonald_H((1,)).expansion.coeffs == {(1,): one}


def test_pairings():
    assert N_pairing((2,)) == (q**2 - 1) * (q - t) * (q - 1) * (1 - t)
    assert N_pairing((1,)) == (q - 1) * (1 - t)
    H2 = macdonald_H((2,)).expansion
    H11 = macdonald_H((1, 1)).expansion
    assert qt_inner1(H2, H2) == N_pairing((2,))
    assert qt_inner1(H2, H11).is_zero()
    assert qt_inner1(SymFunc1.one(), SymFunc1.one()) == one


def test_orthogonality_to_degree_4():
    for n in range(5):
        for lam in partition_list(n):
            for mu in partition_list(n):
                v = qt_inner1(macdonald_H(lam).expansion, macdonald_H(mu).expansion)
                assert v == (N_pairing(lam) if lam == mu else RatFun.zero())


def test_parameter_swap_symmetry():
    swap = (0, 1, 1, 0)
    for n in range(5):
        for lam in partition_list(n):
            swapped = {
                k: c.monomial_map(swap) for k, c in macdonald_H(lam).expansion.coeffs.items()
            }
            assert swapped == macdonald_H(dual(lam)).expansion.coeffs
            assert N_pairing(lam).monomial_map(swap) == N_pairing(dual(lam))
            # the deformed pairing swaps under (z, w) exchange
            assert N_deformed(lam).monomial_map(swap) == N_deformed(dual(lam))


def test_t_inverse_specialization():
    inv1mq = (one - q).inverse()
    for n in range(5):
        for lam in partition_list(n):
            s = SymFunc1.basis_elem("s", lam)
            f = s.scalar_plethysm(inv1mq).evaluate_scalar().inverse()
            lhs = {
                k: c.monomial_map((1, 0, -1, 0))
                for k, c in macdonald_H(lam).expansion.coeffs.items()
            }
            rhs = {
                k: c * f
                for k, c in s.scalar_plethysm(inv1mq).to_basis("s").coeffs.items()
            }
            assert lhs == rhs
            assert N_pairing(lam).monomial_map((1, 0, -1, 0)) == RatFun.monomial(
                (-n, 0)
            ) * f * f
            assert f == hook_poly(lam) / RatFun.monomial((n_stat(lam), 0))


def test_deformed_at_one():
    for n in range(6):
        for lam in partition_list(n):
            at_u1 = N_deformed(lam).monomial_map((1, 0, -1, 0))
            expect = N_pairing(lam).monomial_map((2, 0, -2, 0), ("z", "w"))
            assert at_u1 == expect
