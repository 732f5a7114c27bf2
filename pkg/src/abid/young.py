"""Partitions inside the staircase (n-1, ..., 1) and the dihedral action on them.

For sl(n) with the lower triangular Borel subalgebra the positive roots are
e_a - e_b with a > b and alpha_i = e_{i+1} - e_i. A partition lambda names the
ideal spanned by the root spaces of e_{n-h+1} - e_j for j <= lambda_h, i.e. the
box in row h and column j is the root alpha_j + ... + alpha_{n-h}.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .abelian import IdealSet, enumerate_ideals, ideal_by_phi
from .dynkin import CenterElement, DiagramAut, act_center, act_diagram, generate_group
from .poset import compose
from .rootsys import RootSystem, root_system

__all__ = [
    "Partition",
    "OutOfStaircase",
    "partitions_in_staircase",
    "in_staircase",
    "conjugate",
    "partition_of_ideal",
    "ideal_of_partition",
    "eps_weight",
    "eps_to_fw",
    "tau",
    "sigma",
    "sigma_formula",
    "sigma_orbit",
    "verify_dihedral",
    "type_a",
]

Partition = tuple[int, ...]


class OutOfStaircase(ValueError):
    pass


def _normalize(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{list(p)} is not weakly decreasing")
    return tuple(x for x in p if x > 0)


def in_staircase(n: int, lam: Sequence[int]) -> bool:
    lam = _normalize(lam)
    return not lam or lam[0] + len(lam) <= n


def _check(n: int, lam: Sequence[int]) -> Partition:
    lam = _normalize(lam)
    if not in_staircase(n, lam):
        raise OutOfStaircase(f"{list(lam)} does not fit in the staircase for n={n}")
    return lam


def partitions_in_staircase(n: int) -> list[Partition]:
    """All partitions with lambda_1 + m <= n, sorted by size and then lexicographically."""
    out: list[Partition] = []

    def rec(prefix: list[int], cap: int) -> None:
        out.append(tuple(prefix))
        for x in range(1, cap + 1):
            # adding a row of length x: need first part + new length <= n
            first = prefix[0] if prefix else x
            if first + len(prefix) + 1 <= n:
                prefix.append(x)
                rec(prefix, x)
                prefix.pop()

    rec([], n - 1)
    return sorted(out, key=lambda p: (sum(p), p))


def conjugate(lam: Sequence[int]) -> Partition:
    lam = _normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def type_a(n: int) -> RootSystem:
    """Root system of sl(n), i.e. type A_{n-1}."""
    if n < 2:
        raise ValueError("need n >= 2")
    return root_system("A", n - 1)


def _box_root(n: int, h: int, j: int) -> tuple[int, ...]:
    return tuple(int(j <= k <= n - h) for k in range(1, n))


def ideal_of_partition(rs: RootSystem, lam: Sequence[int]) -> IdealSet:
    n = rs.rank + 1
    lam = _check(n, lam)
    phi = 0
    for h, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            phi |= 1 << rs.index[_box_root(n, h, j)]
    out = ideal_by_phi(rs, phi)
    if out is None:
        raise AssertionError(f"{list(lam)} does not give an abelian ideal")
    return out


def partition_of_ideal(rs: RootSystem, ideal: IdealSet) -> Partition:
    n = rs.rank + 1
    rows = [0] * (n - 1)
    for a in rs.members(ideal.phi):
        c = rs.coeffs[a]
        support = [k + 1 for k, x in enumerate(c) if x]
        j, top = support[0], support[-1]
        rows[n - top - 1] = max(rows[n - top - 1], j)
    lam = _normalize(rows)
    if ideal_of_partition(rs, lam).phi != ideal.phi:
        raise AssertionError("root set of the ideal is not a Young diagram")
    return lam


def eps_weight(n: int, lam: Sequence[int]) -> tuple[int, ...]:
    """sum_i lambda_i e_{n-i+1} - sum_i lambda'_i e_i, as a length-n vector."""
    lam = _check(n, lam)
    x = [0] * n
    for i, v in enumerate(lam, start=1):
        x[n - i] += v
    for i, v in enumerate(conjugate(lam), start=1):
        x[i - 1] -= v
    return tuple(x)


def eps_to_fw(x: Sequence[int]) -> tuple[int, ...]:
    """Pair with the coroots e_{k+1} - e_k."""
    return tuple(x[k + 1] - x[k] for k in range(len(x) - 1))


def tau(lam: Sequence[int]) -> Partition:
    return conjugate(lam)


def sigma(n: int, lam: Sequence[int]) -> Partition:
    """Sliding move via the transpose: nu_1 = n - lambda_1 - 1, nu_i = mu_{i-1} - 1."""
    lam = _check(n, lam)
    mu = conjugate(lam)
    first = lam[0] if lam else 0
    nu = [n - first - 1] + [m - 1 for m in mu]
    return conjugate(sorted((x for x in nu if x > 0), reverse=True))


def sigma_formula(n: int, lam: Sequence[int]) -> Partition:
    """(lambda_2 + 1, ..., lambda_m + 1, 1^(n - m - lambda_1)).

    The empty partition is read as the single row (0), so m = 1 there.
    """
    lam = _check(n, lam) or (0,)
    m = len(lam)
    return _normalize([x + 1 for x in lam[1:]] + [1] * (n - m - lam[0]))


def sigma_orbit(n: int, lam: Sequence[int]) -> list[Partition]:
    start = _check(n, lam)
    out = [start]
    cur = sigma(n, start)
    while cur != start:
        out.append(cur)
        cur = sigma(n, cur)
    return out


def _flip(n: int) -> DiagramAut:
    return DiagramAut((0,) + tuple(n - i for i in range(1, n)))


def _row(case: str, check: str, expected, computed) -> dict:
    return {"case": case, "check": check, "expected": expected, "computed": computed, "pass": expected == computed}


@lru_cache(maxsize=None)
def verify_dihedral(n: int) -> tuple[dict, ...]:
    if n < 3:
        raise ValueError("the dihedral action needs n >= 3")
    case = f"n={n}"
    rs = type_a(n)
    parts = partitions_in_staircase(n)
    pos = {p: k for k, p in enumerate(parts)}
    ideals = enumerate_ideals(rs)

    bij = all(partition_of_ideal(rs, ideal_of_partition(rs, p)) == p for p in parts)
    bij = bij and {ideal_of_partition(rs, p).phi for p in parts} == {I.phi for I in ideals}
    weights = all(
        ideal_of_partition(rs, p).weight_fw == eps_to_fw(eps_weight(n, p)) for p in parts
    )

    t = tuple(pos[tau(p)] for p in parts)
    s = tuple(pos[sigma(n, p)] for p in parts)
    s_formula = tuple(pos.get(sigma_formula(n, p), -1) for p in parts)
    flip = _flip(n)
    t_ideal = tuple(
        pos[partition_of_ideal(rs, act_diagram(rs, flip, ideal_of_partition(rs, p)))] for p in parts
    )
    z1 = CenterElement(1)
    s_ideal = tuple(
        pos[partition_of_ideal(rs, act_center(rs, z1, ideal_of_partition(rs, p)))] for p in parts
    )

    ident = tuple(range(len(parts)))
    s_pow = ident
    order_s = 0
    for k in range(1, 2 * n + 1):
        s_pow = compose(s, s_pow)
        if s_pow == ident:
            order_s = k
            break
    group = generate_group([t, s], len(parts))
    tsts = compose(t, compose(s, compose(t, s)))
    # the relations make <tau, sigma> a quotient of the dihedral group of order
    # 2n; having exactly 2n elements it is the whole group, so the action is faithful
    relations = compose(t, t) == ident and order_s == n and tsts == ident
    faithful = relations and len(group) == 2 * n
    return (
        _row(case, "|Y_n| = 2^(n-1)", 2 ** (n - 1), len(parts)),
        _row(case, "partition bijection", True, bij),
        _row(case, "ideal weight matches the e-coordinate formula", True, weights),
        _row(case, "tau matches the diagram flip", True, t == t_ideal),
        _row(case, "sigma matches the center element z1", True, s == s_ideal),
        _row(case, "transpose and direct descriptions of sigma agree", True, s == s_formula),
        _row(case, "tau^2 = id", True, compose(t, t) == ident),
        _row(case, "order of sigma", n, order_s),
        _row(case, "tau sigma tau sigma = id", True, tsts == ident),
        _row(case, "|<tau, sigma>|", 2 * n, len(group)),
        _row(case, "faithful", True, faithful),
    )
