"""Abelian ideals of the Borel subalgebra and their encodings.

An ideal is carried as the bitset ``phi`` of the positive roots whose root
spaces it contains. The fast path enumerates ideals by walking up the left
weak order from the identity; two further engines (antichains with the
``a + b not <= theta`` test, and a filter over all dual order ideals) exist
for cross-checking.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .affine import act_on_affine_root, affine_act_on_weight, eta as _eta, simple_affine_root
from .rootsys import RootSystem, RootVec, coroot_coeffs

__all__ = [
    "IdealSet",
    "NotAbelian",
    "is_abelian_dual_ideal",
    "enumerate_ideals",
    "ideals_by_antichains",
    "ideals_by_filter",
    "all_antichains",
    "from_antichain",
    "weight",
    "ideal_by_weight",
    "ideal_by_phi",
    "rho_point",
    "is_regular",
    "ideal_to_json",
    "minimal_elements",
    "upset",
]


class NotAbelian(ValueError):
    pass


@dataclass(frozen=True)
class IdealSet:
    index: int
    phi: int
    word: tuple[int, ...]
    weight_fw: tuple[int, ...]
    antichain: tuple[int, ...]
    eta: tuple[int, ...]

    @property
    def dim(self) -> int:
        return bin(self.phi).count("1")


def is_abelian_dual_ideal(rs: RootSystem, mask: int) -> bool:
    """Upward closed in (positive roots, <=) and no two members sum to a root."""
    sums = rs.sum_mask
    covers = rs.cover_mask
    m = mask
    k = 0
    while m:
        if m & 1:
            if covers[k] & ~mask:
                return False
            if sums[k] & mask:
                return False
        m >>= 1
        k += 1
    return True


@lru_cache(maxsize=None)
def _le_mask(rs: RootSystem) -> tuple[int, ...]:
    n = len(rs.coeffs)
    out = [0] * n
    for a, m in enumerate(rs.ge_mask):
        for b in rs.members(m):
            out[b] |= 1 << a
    return tuple(out)


def minimal_elements(rs: RootSystem, mask: int) -> tuple[int, ...]:
    le = _le_mask(rs)
    return tuple(a for a in rs.members(mask) if le[a] & mask == 1 << a)


def upset(rs: RootSystem, roots: Iterable[int]) -> int:
    """Dual order ideal generated by the given root indices."""
    m = 0
    for a in roots:
        m |= rs.ge_mask[a]
    return m


def _weight_of(rs: RootSystem, mask: int) -> tuple[int, ...]:
    n = rs.rank
    tot = [0] * n
    for a in rs.members(mask):
        for i, x in enumerate(rs.fw_of_root[rs.coeffs[a]]):
            tot[i] += x
    return tuple(tot)


def _make(rs: RootSystem, index: int, phi: int, word: tuple[int, ...]) -> IdealSet:
    return IdealSet(
        index=index,
        phi=phi,
        word=word,
        weight_fw=_weight_of(rs, phi),
        antichain=minimal_elements(rs, phi),
        eta=_eta(rs, word),
    )


class _Catalog:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.ideals = _bfs(rs)
        self.by_phi = {I.phi: I for I in self.ideals}
        self.by_weight = {I.weight_fw: I for I in self.ideals}
        if len(self.by_weight) != len(self.ideals):
            raise AssertionError("ideal weights are not pairwise distinct")


def _bfs(rs: RootSystem) -> list[IdealSet]:
    n = rs.rank
    index = rs.index
    simple = [simple_affine_root(rs, i) for i in range(n + 1)]
    found: dict[int, tuple[int, ...]] = {0: ()}
    order = [0]
    layer = [(0, ())]
    while layer:
        nxt = []
        for phi, word in layer:
            for i in range(n + 1):
                r = act_on_affine_root(rs, word, simple[i])
                if r.level != 1:
                    continue
                k = index.get(tuple(-c for c in r.finite))
                if k is None:
                    continue
                new = phi | 1 << k
                if new in found or not is_abelian_dual_ideal(rs, new):
                    continue
                found[new] = word + (i,)
                order.append(new)
                nxt.append((new, word + (i,)))
        layer = nxt
    return [_make(rs, idx, phi, found[phi]) for idx, phi in enumerate(order)]


@lru_cache(maxsize=None)
def _catalog(rs: RootSystem) -> _Catalog:
    return _Catalog(rs)


def enumerate_ideals(rs: RootSystem) -> list[IdealSet]:
    """All abelian ideals, ordered by (dimension, canonical word).

    The canonical word of an ideal is its lexicographically smallest reduced
    word, which the layered walk produces by visiting parents in word order
    and generators in increasing index.
    """
    return list(_catalog(rs).ideals)


def all_antichains(rs: RootSystem, *, abelian_only: bool = False) -> list[tuple[int, ...]]:
    """Antichains of the root poset, optionally restricted by a+b not<= theta."""
    cs = rs.coeffs
    nroots = len(cs)
    le = _le_mask(rs)
    ge = rs.ge_mask
    theta = rs.theta.coeffs

    def ok_pair(a: int, b: int) -> bool:
        return not all(x + y <= t for x, y, t in zip(cs[a], cs[b], theta))

    compat = []
    for a in range(nroots):
        m = 0
        for b in range(nroots):
            if b == a or (ge[a] | le[a]) >> b & 1:
                continue
            if abelian_only and not ok_pair(a, b):
                continue
            m |= 1 << b
        compat.append(m)
    candidates = [a for a in range(nroots) if not abelian_only or ok_pair(a, a)]

    out: list[tuple[int, ...]] = []

    def rec(start: int, allowed: int, chosen: list[int]) -> None:
        out.append(tuple(chosen))
        for pos in range(start, len(candidates)):
            a = candidates[pos]
            if allowed >> a & 1:
                chosen.append(a)
                rec(pos + 1, allowed & compat[a], chosen)
                chosen.pop()

    rec(0, (1 << nroots) - 1, [])
    return out


def ideals_by_antichains(rs: RootSystem) -> set[int]:
    """Phi bitsets from antichains passing the a+b not<= theta test."""
    return {upset(rs, A) for A in all_antichains(rs, abelian_only=True)}


def ideals_by_filter(rs: RootSystem) -> set[int]:
    """Phi bitsets from all dual order ideals, kept when abelian."""
    out = set()
    for A in all_antichains(rs):
        m = upset(rs, A)
        if is_abelian_dual_ideal(rs, m):
            out.add(m)
    return out


def _root_index(rs: RootSystem, x: RootVec | Sequence[int] | int) -> int:
    if isinstance(x, int):
        return x
    c = x.coeffs if isinstance(x, RootVec) else tuple(x)
    try:
        return rs.index[c]
    except KeyError:
        raise ValueError(f"{list(c)} is not a positive root") from None


def from_antichain(rs: RootSystem, antichain: Iterable[RootVec | Sequence[int] | int]) -> IdealSet:
    """Ideal generated by an antichain satisfying a+b not<= theta for all a, b in it."""
    A = sorted({_root_index(rs, x) for x in antichain})
    cs = rs.coeffs
    theta = rs.theta.coeffs
    for a in A:
        for b in A:
            if a != b and rs.leq(a, b):
                raise ValueError(f"{list(cs[a])} <= {list(cs[b])}: not an antichain")
    for p, a in enumerate(A):
        for b in A[p:]:
            if all(x + y <= t for x, y, t in zip(cs[a], cs[b], theta)):
                raise NotAbelian(f"{list(cs[a])} + {list(cs[b])} <= theta")
    return _catalog(rs).by_phi[upset(rs, A)]


def ideal_by_phi(rs: RootSystem, phi: int) -> IdealSet | None:
    return _catalog(rs).by_phi.get(phi)


def weight(rs: RootSystem, ideal: IdealSet) -> tuple[int, ...]:
    return ideal.weight_fw


def ideal_by_weight(rs: RootSystem, w: Sequence[int]) -> IdealSet | None:
    return _catalog(rs).by_weight.get(tuple(w))


@lru_cache(maxsize=None)
def _coroots(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    return tuple(coroot_coeffs(rs, c) for c in rs.coeffs)


def is_regular(rs: RootSystem, lam: Sequence[int]) -> bool:
    """No coroot pairs to zero with lam (lam in fw coordinates)."""
    for cv in _coroots(rs):
        if sum(x * y for x, y in zip(lam, cv)) == 0:
            return False
    return True


def rho_point(rs: RootSystem, ideal: IdealSet) -> tuple[int, ...]:
    """rho + weight, asserted equal to w(rho) for the ideal's minuscule word."""
    pt = tuple(1 + x for x in ideal.weight_fw)
    via_word = affine_act_on_weight(rs, ideal.word, rs.rho_fw)
    if via_word != pt:
        raise AssertionError(f"w(rho)={via_word} differs from rho+weight={pt} for word {ideal.word}")
    return pt


def ideal_to_json(rs: RootSystem, ideal: IdealSet) -> dict:
    cs = rs.coeffs
    return {
        "phi": [list(cs[a]) for a in rs.members(ideal.phi)],
        "antichain": [list(cs[a]) for a in ideal.antichain],
        "word": list(ideal.word),
        "weight_fw": list(ideal.weight_fw),
        "eta": list(ideal.eta),
    }
