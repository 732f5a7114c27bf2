"""Affine Weyl group arithmetic on words over the generators s_0, ..., s_n.

Affine roots are pairs ``(finite, level)`` standing for ``alpha + level*delta``.
Points of V are written in simple-coroot coordinates; weights in
fundamental-weight coordinates. Generator 0 is ``s_0 = t_{theta^vee} s_theta``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .rootsys import RootSystem

__all__ = [
    "AffineRoot",
    "AffineWord",
    "NonReduced",
    "RangeViolation",
    "simple_affine_root",
    "reflect",
    "act_on_affine_root",
    "inversion_set",
    "decompose",
    "recompose",
    "eta",
    "affine_act_on_weight",
    "affine_word",
    "affine_cartan",
    "coxeter_m",
]

ETA_RANGE = frozenset({-2, -1, 0, 1})


class NonReduced(ValueError):
    pass


class RangeViolation(ValueError):
    pass


class AffineRoot(NamedTuple):
    finite: tuple[int, ...]
    level: int

    def is_positive(self) -> bool:
        if self.level != 0:
            return self.level > 0
        return any(self.finite) and all(c >= 0 for c in self.finite)

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(tuple(-c for c in self.finite), -self.level)


def simple_affine_root(rs: RootSystem, i: int) -> AffineRoot:
    """alpha_0 = -theta + delta; alpha_i for i = 1..n."""
    n = rs.rank
    if i == 0:
        return AffineRoot(tuple(-m for m in rs.marks), 1)
    return AffineRoot(tuple(int(k == i - 1) for k in range(n)), 0)


def reflect(rs: RootSystem, i: int, a: AffineRoot) -> AffineRoot:
    """s_i applied to an affine root. delta is fixed, so only s_0 moves the level."""
    c = a.finite
    if i == 0:
        q = sum(x * y for x, y in zip(c, rs.theta_pairing))
        if q == 0:
            return a
        th = rs.marks
        return AffineRoot(tuple(x - q * t for x, t in zip(c, th)), a.level + q)
    p = rs.pair(c, i - 1)
    if p == 0:
        return a
    out = list(c)
    out[i - 1] -= p
    return AffineRoot(tuple(out), a.level)


def _letters(word: "AffineWord | Sequence[int]") -> tuple[int, ...]:
    return word.letters if isinstance(word, AffineWord) else tuple(word)


def act_on_affine_root(rs: RootSystem, word: "AffineWord | Sequence[int]", a: AffineRoot) -> AffineRoot:
    """w(a) for w = s_{i1} ... s_{ik}; the rightmost generator acts first."""
    for i in reversed(_letters(word)):
        a = reflect(rs, i, a)
    return a


def inversion_set(rs: RootSystem, word: "AffineWord | Sequence[int]") -> list[AffineRoot]:
    """N(w) from the prefixes of a reduced word.

    Raises NonReduced when a prefix image is negative or repeats, which is
    exactly when the word fails to be reduced.
    """
    letters = _letters(word)
    out: list[AffineRoot] = []
    seen: set[AffineRoot] = set()
    for k, i in enumerate(letters):
        r = act_on_affine_root(rs, letters[:k], simple_affine_root(rs, i))
        if not r.is_positive() or r in seen:
            raise NonReduced(f"word {list(letters)} is not reduced (position {k})")
        seen.add(r)
        out.append(r)
    return out


Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    m = len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(m))
        for i in range(n)
    )


def _matvec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(r[k] * v[k] for k in range(len(v))) for r in a)


def _generator_on_v(rs: RootSystem, i: int) -> tuple[Matrix, tuple[int, ...]]:
    """Affine map of s_i on V in simple-coroot coordinates, as (M, t)."""
    n = rs.rank
    a = rs.cartan
    if i == 0:
        # y -> y - (theta(y) - 1) theta^vee; theta(y) = sum_k y_k <theta, alpha_k^vee>
        th_fw = rs.fw(rs.theta.coeffs)
        cv = rs.comarks
        m = tuple(
            tuple(int(r == c) - cv[r] * th_fw[c] for c in range(n)) for r in range(n)
        )
        return m, tuple(cv)
    # y -> y - alpha_i(y) e_i; alpha_i(y) = sum_k y_k a[k][i]
    m = tuple(
        tuple(int(r == c) - (a[c][i - 1] if r == i - 1 else 0) for c in range(n))
        for r in range(n)
    )
    return m, (0,) * n


def decompose(rs: RootSystem, word: "AffineWord | Sequence[int]") -> tuple[tuple[int, ...], Matrix]:
    """Write w = t_tau v; returns (tau, v) with v a matrix on coroot coordinates."""
    n = rs.rank
    a = rs.cartan
    th_fw = rs.fw(rs.theta.coeffs)
    cv = rs.comarks
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    t = [0] * n
    for i in _letters(word):
        # each generator is I - u (x) r (plus theta^vee translation for s_0),
        # so m <- m - (m u) (x) r is a rank-one update
        if i == 0:
            mu = [sum(row[k] * cv[k] for k in range(n)) for row in m]
            r = th_fw
            t = [x + y for x, y in zip(t, mu)]
        else:
            mu = [row[i - 1] for row in m]
            r = [a[c][i - 1] for c in range(n)]
        for row, f in zip(m, mu):
            if f:
                for c in range(n):
                    row[c] -= f * r[c]
    return tuple(t), tuple(tuple(row) for row in m)


def recompose(tau: Sequence[int], v: Matrix, y: Sequence[int]) -> tuple[int, ...]:
    """Apply t_tau v to a point y of V."""
    return tuple(a + b for a, b in zip(_matvec(v, y), tau))


def eta(rs: RootSystem, word: "AffineWord | Sequence[int]") -> tuple[int, ...]:
    """v^{-1}(tau) in coroot coordinates, checked against the range {-2,-1,0,1}."""
    letters = _letters(word)
    tau, _ = decompose(rs, letters)
    _, v_inv = decompose(rs, letters[::-1])
    e = _matvec(v_inv, tau)
    for c in rs.coeffs:
        val = sum(x * y for x, y in zip(e, rs.fw_of_root[c]))
        if val not in ETA_RANGE:
            raise RangeViolation(
                f"eta(alpha)={val} for alpha={list(c)} lies outside {{-2,-1,0,1}} "
                "(range set read as {-2,-1,0,1}); the word is not minuscule"
            )
    return e


def affine_act_on_weight(
    rs: RootSystem, word: "AffineWord | Sequence[int]", lam: Sequence[int]
) -> tuple[int, ...]:
    """Level-h^vee action on a weight in fundamental-weight coordinates.

    s_0(l) = l - (l(theta^vee) - h^vee) theta,  s_i(l) = l - l(alpha_i^vee) alpha_i.
    """
    lam = list(lam)
    n = rs.rank
    a = rs.cartan
    theta_fw = rs.fw(rs.theta.coeffs)
    for i in reversed(_letters(word)):
        if i == 0:
            k = sum(c * x for c, x in zip(rs.comarks, lam)) - rs.h_dual
            if k:
                lam = [x - k * t for x, t in zip(lam, theta_fw)]
        else:
            k = lam[i - 1]
            if k:
                # alpha_i in fw coordinates is column i of the Cartan matrix
                lam = [lam[r] - k * a[r][i - 1] for r in range(n)]
    return tuple(lam)


@dataclass(frozen=True, eq=False)
class AffineWord:
    """A word in the affine generators with its derived data filled at construction."""

    letters: tuple[int, ...]
    is_reduced: bool
    inversions: tuple[AffineRoot, ...] | None
    translation: tuple[int, ...]
    linear_part: Matrix

    def __len__(self) -> int:
        return len(self.letters)

    def root_images(self, rs: RootSystem) -> list[tuple[int, ...]]:
        """Images of the simple roots under the linear part, in root coordinates."""
        # translations only shift the level, so the finite part is v(alpha_i)
        return [
            act_on_affine_root(rs, self.letters, simple_affine_root(rs, i)).finite
            for i in range(1, rs.rank + 1)
        ]


def affine_word(rs: RootSystem, letters: Sequence[int]) -> AffineWord:
    letters = tuple(int(i) for i in letters)
    for i in letters:
        if not 0 <= i <= rs.rank:
            raise ValueError(f"generator index {i} outside 0..{rs.rank}")
    try:
        inv: tuple[AffineRoot, ...] | None = tuple(inversion_set(rs, letters))
        reduced = True
    except NonReduced:
        inv, reduced = None, False
    tau, v = decompose(rs, letters)
    return AffineWord(letters, reduced, inv, tau, v)


def affine_cartan(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """Extended Cartan matrix on nodes 0..n, same convention as the finite one."""
    n = rs.rank
    a = rs.cartan
    theta_fw = rs.fw(rs.theta.coeffs)
    out = [[0] * (n + 1) for _ in range(n + 1)]
    out[0][0] = 2
    for i in range(1, n + 1):
        # a_{0i} = <alpha_i, alpha_0^vee> = -<alpha_i, theta^vee>
        out[0][i] = -rs.theta_pairing[i - 1]
        # a_{i0} = <alpha_0, alpha_i^vee> = -<theta, alpha_i^vee>
        out[i][0] = -theta_fw[i - 1]
        for j in range(1, n + 1):
            out[i][j] = a[i - 1][j - 1]
    return tuple(tuple(r) for r in out)


def coxeter_m(rs: RootSystem, i: int, j: int) -> int | None:
    """Order of s_i s_j in the affine Weyl group (None for infinite order)."""
    if i == j:
        return 1
    ac = affine_cartan(rs)
    prod = ac[i][j] * ac[j][i]
    return {0: 2, 1: 3, 2: 4, 3: 6}.get(prod)
