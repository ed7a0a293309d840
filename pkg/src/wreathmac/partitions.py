"""Partitions, 2-partitions, hooks, dominance, and the quotient-core
decomposition.

Partitions are tuples of weakly decreasing positive ints; the empty tuple is
the unique partition of 0.  A 2-partition is a pair of partitions.  The
2-quotient is computed from the even/odd split of the beta-numbers
lambda + delta_r, where the number of beta-numbers r is taken odd when the
2-core is (0) and even when the 2-core is (1) (swapping the parity of r
swaps the two components of the quotient).
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import QT, LaurentPoly, RatFun

Partition = tuple[int, ...]
BiPartition = tuple[Partition, Partition]

EMPTY: Partition = ()


def check_partition(lam) -> Partition:
    lam = tuple(int(x) for x in lam if x)
    if any(x < 0 for x in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not a partition: {lam}")
    return lam


def size(lam: Partition) -> int:
    return sum(lam)


def size2(bp: BiPartition) -> int:
    return sum(bp[0]) + sum(bp[1])


def length2(bp: BiPartition) -> int:
    return len(bp[0]) + len(bp[1])


def dual(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def dual2(bp: BiPartition) -> BiPartition:
    """Dual of a 2-partition: swap the components and dualize each."""
    return (dual(bp[1]), dual(bp[0]))


def n_stat(lam: Partition) -> int:
    """The statistic sum_i (i-1)*lambda_i."""
    return sum(i * x for i, x in enumerate(lam))


def z_stat(lam: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type lambda."""
    z = 1
    mult: dict[int, int] = {}
    for x in lam:
        mult[x] = mult.get(x, 0) + 1
        z *= x * mult[x]
    return z


def z_stat2(bp: BiPartition) -> int:
    """Signed-cycle centralizer order: 2^len * z(first) * z(second)."""
    return (1 << length2(bp)) * z_stat(bp[0]) * z_stat(bp[1])


def partitions_of(n: int, max_part: int | None = None):
    """Yield the partitions of n in reverse lexicographic order."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_list(n: int) -> tuple[Partition, ...]:
    return tuple(partitions_of(n))


@lru_cache(maxsize=None)
def bipartition_list(n: int) -> tuple[BiPartition, ...]:
    out = []
    for a in range(n, -1, -1):
        for lam in partition_list(a):
            for mu in partition_list(n - a):
                out.append((lam, mu))
    return tuple(out)


def dominance_geq(lam: Partition, mu: Partition) -> bool:
    """Partial sums of lam weakly dominate those of mu (equal sizes required)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance needs equal sizes: {lam} vs {mu}")
    pa = pb = 0
    for i in range(max(len(lam), len(mu))):
        pa += lam[i] if i < len(lam) else 0
        pb += mu[i] if i < len(mu) else 0
        if pa < pb:
            return False
    return True


# ---------------------------------------------------------------------------
# hooks


def hooks(lam: Partition) -> list[tuple[int, int, int]]:
    """Per box (arm, leg, hook) with hook = arm + leg + 1."""
    lam_d = dual(lam)
    out = []
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = lam_d[j] - i - 1
            out.append((arm, leg, arm + leg + 1))
    return out


def hook_poly(lam: Partition) -> RatFun:
    """prod over boxes of (1 - q^hook), in the (q, t) coefficient field."""
    out = LaurentPoly.const(1, QT)
    for _, _, h in hooks(lam):
        out = out * (LaurentPoly.const(1, QT) - LaurentPoly.monomial((h, 0), 1, QT))
    return RatFun.from_poly(out)


# ---------------------------------------------------------------------------
# 2-core / 2-quotient


def _beta_set(lam: Partition, r: int) -> list[int]:
    if r < len(lam):
        raise ValueError("beta set shorter than the partition")
    return [(lam[i] if i < len(lam) else 0) + r - 1 - i for i in range(r)]


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    r = len(beta)
    return tuple(x for x in (beta[i] - (r - 1 - i) for i in range(r)) if x)


def _quotient_with_r(lam: Partition, r: int) -> BiPartition:
    beta = _beta_set(lam, r)
    evens = sorted((x // 2 for x in beta if x % 2 == 0), reverse=True)
    odds = sorted((x // 2 for x in beta if x % 2 == 1), reverse=True)
    return (_from_beta(evens), _from_beta(odds))


def core_quotient(lam: Partition) -> tuple[int, BiPartition]:
    """2-core size d (core is the staircase (d, d-1, ..., 1)) and 2-quotient.

    The quotient is computed with r odd for core (0) and r even for core (1);
    for larger cores r has parity d + 1.
    """
    lam = tuple(lam)
    quotient = _quotient_with_r(lam, len(lam))
    csize = sum(lam) - 2 * size2(quotient)
    d = 0
    while d * (d + 1) // 2 < csize:
        d += 1
    if d * (d + 1) // 2 != csize:
        raise AssertionError(f"2-core of {lam} is not a staircase")
    r = len(lam)
    if r % 2 != (d + 1) % 2:
        r += 1
    return d, _quotient_with_r(lam, r)


def from_core_quotient(quotient: BiPartition, d: int) -> Partition:
    """Inverse of ``core_quotient``: partition with 2-core (d, ..., 1) and the
    given 2-quotient under the same parity convention."""
    q0, q1 = quotient
    core = tuple(range(d, 0, -1))
    # choose enough beta-numbers of the conventional parity
    r = max(2 * len(q0), 2 * len(q1), len(core), 1)
    r += max(d, 2)  # headroom so both even and odd slots exist
    if r % 2 != (d + 1) % 2:
        r += 1
    core_beta = _beta_set(core, r)
    l0 = sum(1 for x in core_beta if x % 2 == 0)
    l1 = r - l0
    beta = [2 * x for x in _beta_set(q0, l0)] + [2 * x + 1 for x in _beta_set(q1, l1)]
    return _from_beta(beta)


def brace(quotient: BiPartition, e: int) -> Partition:
    """Partition with 2-core (e) (e in {0, 1}) and the given 2-quotient."""
    if e not in (0, 1):
        raise ValueError("core index must be 0 or 1")
    return from_core_quotient(quotient, e)


def induced_dominance_geq(a: BiPartition, b: BiPartition, e: int) -> bool:
    """Dominance order on 2-partitions transported through the 2-core (e)."""
    if size2(a) != size2(b):
        raise ValueError("induced order needs equal sizes")
    return dominance_geq(brace(a, e), brace(b, e))


# ---------------------------------------------------------------------------
# text encoding used by the CLI and the golden fixtures


def partition_str(lam: Partition) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def bipartition_str(bp: BiPartition) -> str:
    return f"({partition_str(bp[0])},{partition_str(bp[1])})"


def parse_partition(s: str) -> Partition:
    s = s.strip()
    if s.startswith("[") and s.endswith("]"):
        body = s[1:-1].strip()
        parts = [int(x) for x in body.split(",") if x.strip()] if body else []
    else:
        parts = [int(x) for x in s.split("+") if x.strip()] if s else []
    return check_partition(parts)


def parse_bipartition(s: str) -> BiPartition:
    s = s.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"malformed 2-partition {s!r}")
    depth = 0
    for i, ch in enumerate(s):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0 and i > 0:
            return (parse_partition(s[1:i]), parse_partition(s[i + 1 : -1]))
    raise ValueError(f"malformed 2-partition {s!r}")
