from wreathmac.algebra import RatFun, ZW
from wreathmac.series import (
    invert_series,
    one_param_star_terms,
    one_param_wreath_terms,
    star_series_terms,
    wreath_series_terms,
)

z = RatFun.var(0, ZW)
w = RatFun.var(1, ZW)
q = RatFun.var(0)


def coeff_of(terms, index):
    return next(t.coeff for t in terms if t.index == index)


def test_empty_index_coefficients():
    for g, k in ((0, 1), (1, 1), (0, 2)):
        t1 = wreath_series_terms(1, g, k, 0)
        assert coeff_of(t1, ((), ())) == (z - w) ** (2 * (g + k - 1))
        t0 = wreath_series_terms(0, g, k, 0)
        assert coeff_of(t0, ((), ())) == RatFun.one(ZW)
        ts = star_series_terms(g, k, 0)
        assert coeff_of(ts, ()) == RatFun.one(ZW)


def test_truncation_counts():
    assert len(wreath_series_terms(0, 0, 1, 1)) == 3
    assert len(star_series_terms(0, 1, 2)) == 4


def test_star_coefficient_shape():
    # one-box coefficient: (z-w)^(2(2g+k-1)) over (z^2-1)(1-w^2)
    for g, k in ((0, 2), (1, 1), (1, 2)):
        ts = star_series_terms(g, k, 1)
        got = coeff_of(ts, (1,))
        assert got == (z - w) ** (2 * (2 * g + k - 1)) / ((z**2 - 1) * (1 - w**2))


def test_inverse_coefficients():
    terms = star_series_terms(1, 1, 3)
    inv = invert_series(terms, 3)
    c1 = coeff_of(terms, (1,))
    c2 = coeff_of(terms, (2,))
    assert coeff_of(inv, ()) == RatFun.one(ZW)
    assert coeff_of(inv, ((1,),)) == -c1
    assert coeff_of(inv, ((1,), (1,))) == c1 * c1
    assert coeff_of(inv, ((2,),)) == -c2
    # mixed multiset gets the multinomial weight 2
    pair = next(t for t in inv if len(t.index) == 2 and set(t.index) == {(2,), (1,)})
    assert pair.coeff == 2 * c1 * c2


def test_product_with_inverse_is_one():
    # track the product in the tensor square of the Schur basis (2k = 2)
    for g, k in ((0, 1), (1, 1)):
        maxdeg = 2
        terms = star_series_terms(g, k, maxdeg)
        inv = invert_series(terms, maxdeg)
        tensor = {}
        for a in terms:
            for s in inv:
                if a.size + s.size > maxdeg:
                    continue
                c = a.coeff * s.coeff
                f = (a.factor * s.factor).to_basis("s2")
                for k1, c1 in f.coeffs.items():
                    for k2, c2 in f.coeffs.items():
                        key = (k1, k2)
                        v = tensor.get(key, RatFun.zero(ZW)) + c * c1 * c2
                        tensor[key] = v
        empty = ((), ())
        for (k1, k2), v in tensor.items():
            if (k1, k2) == (empty, empty):
                assert v == RatFun.one(ZW)
            else:
                assert v.is_zero(), (k1, k2, v.text())


def test_one_param_empty_coefficients():
    for g, k in ((0, 1), (1, 1), (0, 2)):
        t1 = one_param_wreath_terms(1, g, k, 0)
        expect = q ** (1 - g - k) * (1 - q) ** (2 * g + 2 * k - 2)
        assert coeff_of(t1, ((), ())) == expect
        t0 = one_param_wreath_terms(0, g, k, 0)
        assert coeff_of(t0, ((), ())) == RatFun.one()


def test_one_param_star_factor():
    terms = one_param_star_terms(0, 1, 1)
    f = next(t.factor for t in terms if t.index == (1,))
    # s_1[(x0+x1)/(1-q)] = (p1(x0) + p1(x1))/(1-q)
    c = (RatFun.one() - q).inverse()
    assert f.to_basis("s2").coeffs == {((1,), ()): c, ((), (1,)): c}
