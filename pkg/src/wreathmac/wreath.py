"""Wreath Macdonald polynomials for the rank-2 wreath product at a fixed
2-core, their (q, t) inner product, and the total / cotangent / nabla
decomposition of the self-pairings.

For a fixed core e in {0, 1}, the family indexed by 2-partitions of N is
determined by two triangularity conditions (after alphabet substitution by
[[1,-q],[-q,1]] the Schur support lies above the label; after [[1,-t],[-t,1]]
above the dual label, in the order transported through the 2-core) and the
normalization against the one-row Schur function.  The solver constrains
exactly the non-dominating indices (the order is partial) and fails loudly
unless the solution is unique.

Total self-pairings are computed from the inner product, never from a
closed formula; the nabla factor is recorded as the exact quotient by the
even-hook cotangent product and kept as a rational function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import QT, LaurentPoly, RatFun
from .linsolve import solve_unique
from .partitions import (
    BiPartition,
    bipartition_list,
    brace,
    dual2,
    hooks,
    induced_dominance_geq,
    size2,
)
from .symfunc import SymFunc2


@dataclass(frozen=True)
class WreathMacPoly:
    label: BiPartition
    core: int
    expansion: SymFunc2  # Schur basis over Q(q, t)


@dataclass(frozen=True)
class PairingData:
    label: BiPartition
    core: int
    total: RatFun  # <H, H> under the (q, t) inner product
    cot_at_one: RatFun  # even-hook product at u = 1
    nabla: RatFun  # total / cot_at_one, exact quotient


def _subst_matrix(v: RatFun) -> list[list[RatFun]]:
    one = RatFun.one(v.vars)
    return [[one, -v], [-v, one]]


def qt_inner2(f: SymFunc2, g: SymFunc2) -> RatFun:
    """Hall pairing of f against g twisted by [[0,-1],[-1,0]] [[1,-q],[-q,1]]
    [[1,-t],[-t,1]]; symmetric in f and g."""
    q = RatFun.var(0, f.vars)
    t = RatFun.var(1, f.vars)
    one = RatFun.one(f.vars)
    # product of the three substitution matrices
    m = [[q + t, -(one + q * t)], [-(one + q * t), q + t]]
    return f.hall_inner(g.alphabet_substitute(m))


@lru_cache(maxsize=None)
def _triangularity_tables(n: int):
    """Schur expansions of s_beta([[1,-q],[-q,1]] X) and the t-twin."""
    q = RatFun.var(0)
    t = RatFun.var(1)
    tq = {}
    tt = {}
    for bp in bipartition_list(n):
        s = SymFunc2.basis_elem("s2", bp)
        tq[bp] = s.alphabet_substitute(_subst_matrix(q)).to_basis("s2").coeffs
        tt[bp] = s.alphabet_substitute(_subst_matrix(t)).to_basis("s2").coeffs
    return tq, tt


@lru_cache(maxsize=None)
def wreath_H(alpha: BiPartition, core: int) -> WreathMacPoly:
    alpha = (tuple(alpha[0]), tuple(alpha[1]))
    if core not in (0, 1):
        raise ValueError("core must be 0 or 1")
    n = size2(alpha)
    basis = bipartition_list(n)
    tq, tt = _triangularity_tables(n)
    alpha_d = dual2(alpha)
    zero = RatFun.zero()
    top = ((n,) if n else (), ())

    rows: list[list[RatFun]] = []
    rhs: list[RatFun] = []
    for gamma in basis:
        if not induced_dominance_geq(gamma, alpha, core):
            rows.append([tq[bp].get(gamma, zero) for bp in basis])
            rhs.append(zero)
    for gamma in basis:
        if not induced_dominance_geq(gamma, alpha_d, core):
            rows.append([tt[bp].get(gamma, zero) for bp in basis])
            rhs.append(zero)
    rows.append([RatFun.one() if bp == top else zero for bp in basis])
    rhs.append(RatFun.one())

    sol = solve_unique(rows, rhs)
    coeffs = {bp: c for bp, c in zip(basis, sol) if not c.is_zero()}
    return WreathMacPoly(alpha, core, SymFunc2("s2", coeffs))


def wreath_family(n: int, core: int) -> list[WreathMacPoly]:
    return [wreath_H(bp, core) for bp in bipartition_list(n)]


def cot_product(alpha: BiPartition, core: int) -> RatFun:
    """Even-hook box product of the brace partition, at u = 1, in (q, t)."""
    out = LaurentPoly.const(1, QT)
    for a, l, h in hooks(brace(alpha, core)):
        if h % 2 == 0:
            out = out * (
                LaurentPoly.monomial((a + 1, 0), 1, QT)
                - LaurentPoly.monomial((0, l), 1, QT)
            )
            out = out * (
                LaurentPoly.monomial((a, 0), 1, QT)
                - LaurentPoly.monomial((0, l + 1), 1, QT)
            )
    return RatFun.from_poly(out)


def cot_product_zw(alpha: BiPartition, core: int) -> RatFun:
    """Even-hook box product with u = z*w, q = z^2, t = w^2 substituted."""
    vars = ("z", "w")
    out = LaurentPoly.const(1, vars)
    for a, l, h in hooks(brace(alpha, core)):
        if h % 2 == 0:
            f1 = LaurentPoly.monomial((2 * a + 2, 0), 1, vars) - LaurentPoly.monomial(
                (1, 2 * l + 1), 1, vars
            )
            f2 = LaurentPoly.monomial((2 * a, 0), 1, vars) - LaurentPoly.monomial(
                (-1, 2 * l + 1), 1, vars
            )
            out = out * f1 * f2
    return RatFun(out, LaurentPoly.const(1, vars))


@lru_cache(maxsize=None)
def wreath_N(alpha: BiPartition, core: int) -> PairingData:
    alpha = (tuple(alpha[0]), tuple(alpha[1]))
    H = wreath_H(alpha, core).expansion
    total = qt_inner2(H, H)
    cot1 = cot_product(alpha, core)
    return PairingData(alpha, core, total, cot1, total / cot1)
