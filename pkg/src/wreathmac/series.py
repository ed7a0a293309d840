"""Truncated generating series whose pairing against class data produces the
two-variable polynomial and the one-parameter point-count series.

Every term carries an index, a scalar coefficient, and the symmetric
function inserted identically into each puncture alphabet.  Two-parameter
terms live over (z, w): the coefficient substitutes u = z*w, q = z^2,
t = w^2 into the (deformed) self-pairings; the factor is the (wreath)
Macdonald polynomial with q = z^2, t = w^2 in its coefficients.  The
one-parameter terms over q use hook-polynomial coefficients and plethystic
Schur factors.

Term generation is independent per index; lists are ordered by index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import QT, ZW, RatFun, double_to_zw
from .macdonald import N_deformed, N_pairing, macdonald_H
from .partitions import bipartition_list, brace, hook_poly, n_stat, partition_list
from .symfunc import SymFunc1, SymFunc2, embed_diagonal
from .wreath import cot_product_zw, wreath_H, wreath_N


@dataclass(frozen=True)
class SeriesTerm:
    index: object  # BiPartition | Partition | tuple of Partitions (multiset)
    size: int
    coeff: RatFun
    factor: SymFunc2  # Schur basis, same alphabet pair for every puncture


# ---------------------------------------------------------------------------
# two-parameter series


def wreath_series_terms(core: int, g: int, k: int, maxdeg: int) -> list[SeriesTerm]:
    """Terms indexed by 2-partitions: coefficient
    N_{brace}(zw, z^2, w^2)^(g+k-1) / (Ntilde(z^2, w^2) *
    Ntilde(zw, z^2, w^2)^(k-1)), factor the wreath Macdonald polynomial of
    the given core at q = z^2, t = w^2."""
    if k < 1:
        raise ValueError("at least one puncture pair is required")
    out = []
    for n in range(maxdeg + 1):
        for bp in bipartition_list(n):
            num = N_deformed(brace(bp, core)) ** (g + k - 1)
            pairing = wreath_N(bp, core)
            den_plain = double_to_zw(pairing.total)
            den_deformed = double_to_zw(pairing.nabla) * cot_product_zw(bp, core)
            coeff = num / (den_plain * den_deformed ** (k - 1))
            factor = wreath_H(bp, core).expansion.map_coeffs(double_to_zw)
            factor = SymFunc2(factor.basis, factor.coeffs, ZW)
            out.append(SeriesTerm(bp, n, coeff, factor))
    return out


def star_series_terms(g: int, k: int, maxdeg: int) -> list[SeriesTerm]:
    """Terms indexed by partitions: coefficient
    N(zw, z^2, w^2)^(2g+k-1) / N(z^2, w^2), factor the Macdonald polynomial
    on the merged alphabet x0 + x1 at q = z^2, t = w^2."""
    if k < 1:
        raise ValueError("at least one puncture pair is required")
    out = []
    for n in range(maxdeg + 1):
        for lam in partition_list(n):
            coeff = N_deformed(lam) ** (2 * g + k - 1) / double_to_zw(N_pairing(lam))
            f1 = macdonald_H(lam).expansion
            f1 = SymFunc1(f1.basis, {p: double_to_zw(c) for p, c in f1.coeffs.items()}, ZW)
            factor = embed_diagonal(f1).to_basis("s2")
            out.append(SeriesTerm(lam, n, coeff, factor))
    return out


def invert_series(terms: list[SeriesTerm], maxdeg: int) -> list[SeriesTerm]:
    """Formal inverse 1 / (1 + higher terms) of a partition-indexed series
    whose empty-index coefficient is 1, as multiset-indexed terms.

    A multiset S contributes (-1)^len(S) * len(S)!/prod(mult!) * prod coeff
    with factor the product of the members' factors; the weight equals the
    quotient K/N of the statistics of the corresponding type.
    """
    nonempty = [t for t in terms if t.size > 0 and t.size <= maxdeg]
    vars = terms[0].coeff.vars
    out = [
        SeriesTerm((), 0, RatFun.one(vars), SymFunc2.one(vars))
    ]

    def extend(start: int, total: int, chosen: list[SeriesTerm]):
        for i in range(start, len(nonempty)):
            t = nonempty[i]
            if total + t.size > maxdeg:
                continue
            chosen.append(t)
            _emit(chosen)
            extend(i, total + t.size, chosen)
            chosen.pop()

    def _emit(chosen: list[SeriesTerm]):
        ell = len(chosen)
        mult: dict[object, int] = {}
        coeff = RatFun.const(Fraction((-1) ** ell * factorial(ell)), vars)
        factor = SymFunc2.one(vars)
        for t in chosen:
            mult[t.index] = mult.get(t.index, 0) + 1
            coeff = coeff * t.coeff
            factor = factor * t.factor
        for m in mult.values():
            coeff = coeff / factorial(m)
        index = tuple(t.index for t in chosen)
        size = sum(t.size for t in chosen)
        out.append(SeriesTerm(index, size, coeff, factor.to_basis("s2")))

    extend(0, 0, [])
    return out


# ---------------------------------------------------------------------------
# one-parameter series


def _p_matrix(vars=QT) -> list[list[RatFun]]:
    """Inverse of [[1,-q],[-q,1]]: (1/(1-q^2)) [[1, q], [q, 1]]."""
    q = RatFun.var(0, vars)
    c = (RatFun.one(vars) - q * q).inverse()
    return [[c, c * q], [c * q, c]]


def one_param_wreath_terms(core: int, g: int, k: int, maxdeg: int) -> list[SeriesTerm]:
    """q-series terms: coefficient q^(k|a|) q^((1-g-k)|brace|) times
    (hook(brace) q^(-n(brace)))^(2g+2k-2); factor s_a(P X)."""
    P = _p_matrix()
    q = RatFun.var(0)
    out = []
    for n in range(maxdeg + 1):
        for bp in bipartition_list(n):
            lam = brace(bp, core)
            m = sum(lam)
            coeff = (
                q ** (k * n)
                * q ** ((1 - g - k) * m)
                * (hook_poly(lam) * q ** (-n_stat(lam))) ** (2 * g + 2 * k - 2)
            )
            factor = SymFunc2.basis_elem("s2", bp).alphabet_substitute(P).to_basis("s2")
            out.append(SeriesTerm(bp, n, coeff, factor))
    return out


def one_param_star_terms(g: int, k: int, maxdeg: int) -> list[SeriesTerm]:
    """q-series terms: coefficient q^((2-2g-k)|a|) times
    (hook(a)^2 q^(-2n(a)))^(2g+2k-2); factor s_a[(x0+x1)/(1-q)]."""
    q = RatFun.var(0)
    inv1mq = (RatFun.one() - q).inverse()
    out = []
    for n in range(maxdeg + 1):
        for lam in partition_list(n):
            coeff = (
                q ** ((2 - 2 * g - k) * n)
                * (hook_poly(lam) ** 2 * q ** (-2 * n_stat(lam))) ** (2 * g + 2 * k - 2)
            )
            factor = (
                embed_diagonal(SymFunc1.basis_elem("s", lam))
                .scalar_plethysm(inv1mq)
                .to_basis("s2")
            )
            out.append(SeriesTerm(lam, n, coeff, factor))
    return out
