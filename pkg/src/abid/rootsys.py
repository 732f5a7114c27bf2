"""Finite irreducible root systems built from Cartan matrices.

Node numbering follows Bourbaki's plates throughout. The Cartan matrix uses
the convention ``a_ij = <alpha_j, alpha_i^vee>`` so that ``d_i * a_ij`` is
symmetric for the symmetrizers ``d_i``. The invariant form is normalized so
that the highest root has squared length 2.

Bourbaki numbering fixture (``-`` single bond, ``=>``/``=>>`` point at the
short root)::

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n            (alpha_n short)
    C_n   1 - 2 - ... - (n-1) <= n            (alpha_n long)
    D_n   1 - 2 - ... - (n-2) - (n-1),  (n-2) - n
    E_n   1 - 3 - 4 - 5 - ... - n,  2 - 4
    F_4   1 - 2 => 3 - 4                      (alpha_3, alpha_4 short)
    G_2   1 <= 2                              (alpha_1 short)
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

__all__ = [
    "CartanDatum",
    "RootVec",
    "RootSystem",
    "FAMILIES",
    "valid_type",
    "cartan_datum",
    "build_root_system",
    "root_system",
    "inner",
    "root_sum",
    "classical_positive_count",
    "sweep_cases",
    "coroot_coeffs",
    "fw_to_root",
    "brute_force_roots",
]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

Coeffs = tuple[int, ...]


def valid_type(family: str, rank: int) -> bool:
    """True for the irreducible types A1+, B2+, C2+, D4+, E6-8, F4, G2."""
    if family == "A":
        return rank >= 1
    if family in ("B", "C"):
        return rank >= 2
    if family == "D":
        return rank >= 4
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


def sweep_cases(max_rank: int, *, extra: Iterable[tuple[str, int]] = ()) -> list[tuple[str, int]]:
    """All valid (family, rank) pairs with rank <= max_rank, in a fixed order."""
    cases = [
        (fam, n)
        for fam in FAMILIES
        for n in range(1, max_rank + 1)
        if valid_type(fam, n)
    ]
    for case in extra:
        if case not in cases:
            cases.append(case)
    return cases


def classical_positive_count(family: str, rank: int) -> int:
    n = rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[family]


@dataclass(frozen=True)
class CartanDatum:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


def _bourbaki_cartan(family: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        # 1-based node labels
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if family in ("A", "B", "C"):
        for i in range(1, n - 1):
            bond(i, i + 1)
        if n >= 2:
            if family == "A":
                bond(n - 1, n)
            elif family == "B":
                bond(n - 1, n, -1, -2)
            else:
                bond(n - 1, n, -2, -1)
    elif family == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif family == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif family == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif family == "G":
        bond(1, 2, -3, -1)
    return a


def _symmetrizers(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Smallest positive integers d with d_i a_ij = d_j a_ji.

    Raises ValueError if the matrix is not symmetrizable or not connected.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i == j or cartan[i][j] == 0:
                continue
            dj = d[i] * cartan[i][j] / cartan[j][i]
            if d[j] is None:
                d[j] = dj
                stack.append(j)
            elif d[j] != dj:
                raise ValueError("Cartan matrix is not symmetrizable")
    if any(x is None for x in d):
        raise ValueError("Cartan matrix is decomposable (reducible root systems unsupported)")
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _is_positive_definite(m: Sequence[Sequence[Fraction]]) -> bool:
    # Gaussian elimination without pivoting; all pivots > 0 iff leading minors > 0.
    a = [list(map(Fraction, row)) for row in m]
    n = len(a)
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return True


def validate_cartan(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Check the CartanDatum invariants; return the symmetrizers."""
    n = len(cartan)
    if n == 0 or any(len(row) != n for row in cartan):
        raise ValueError("Cartan matrix must be square and non-empty")
    for i in range(n):
        if cartan[i][i] != 2:
            raise ValueError(f"diagonal entry a[{i}][{i}] must be 2")
        for j in range(n):
            if i != j:
                if cartan[i][j] not in (0, -1, -2, -3):
                    raise ValueError(f"off-diagonal entry a[{i}][{j}]={cartan[i][j]} not in {{0,-1,-2,-3}}")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise ValueError(f"a[{i}][{j}] and a[{j}][{i}] must vanish together")
    d = _symmetrizers(cartan)
    sym = [[Fraction(d[i] * cartan[i][j]) for j in range(n)] for i in range(n)]
    if not _is_positive_definite(sym):
        raise ValueError("symmetrized Cartan matrix is not positive definite")
    return d


def cartan_datum(family: str, rank: int) -> CartanDatum:
    family = family.upper()
    if not valid_type(family, rank):
        raise ValueError(f"no irreducible root system of type {family}{rank}")
    a = _bourbaki_cartan(family, rank)
    d = validate_cartan(a)
    return CartanDatum(family, rank, tuple(tuple(r) for r in a), d)


@dataclass(frozen=True)
class RootVec:
    coeffs: Coeffs
    length_class: str  # "long" | "short"

    @property
    def height(self) -> int:
        return sum(self.coeffs)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Positive roots of an irreducible finite root system plus derived data.

    Roots are kept as simple-root coordinate vectors and indexed by their
    position in ``positive_roots``; subsets of positive roots are Python ints
    used as bitsets over that index.
    """

    datum: CartanDatum
    positive_roots: tuple[RootVec, ...]
    theta: RootVec
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    h_dual: int
    gram: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def name(self) -> str:
        return self.datum.name

    @property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        return self.datum.cartan

    @cached_property
    def coeffs(self) -> tuple[Coeffs, ...]:
        return tuple(r.coeffs for r in self.positive_roots)

    @cached_property
    def index(self) -> dict[Coeffs, int]:
        return {c: k for k, c in enumerate(self.coeffs)}

    @cached_property
    def simple_index(self) -> tuple[int, ...]:
        n = self.rank
        return tuple(self.index[tuple(int(i == j) for j in range(n))] for i in range(n))

    @cached_property
    def theta_index(self) -> int:
        return self.index[self.theta.coeffs]

    def pair(self, c: Sequence[int], i: int) -> int:
        """<x, alpha_i^vee> for x given in simple-root coordinates (i is 0-based)."""
        row = self.cartan[i]
        return sum(row[k] * c[k] for k in range(len(c)))

    def fw(self, c: Sequence[int]) -> tuple[int, ...]:
        """Fundamental-weight coordinates of a root-lattice vector."""
        return tuple(self.pair(c, i) for i in range(self.rank))

    @cached_property
    def fw_of_root(self) -> dict[Coeffs, tuple[int, ...]]:
        return {c: self.fw(c) for c in self.coeffs}

    @cached_property
    def theta_pairing(self) -> tuple[int, ...]:
        """<alpha_k, theta^vee> for each simple root; equals (alpha_k, theta) here."""
        th = self.theta.coeffs
        out = []
        for k in range(self.rank):
            v = sum(self.gram[k][j] * th[j] for j in range(self.rank))
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    @cached_property
    def rho_fw(self) -> tuple[int, ...]:
        return (1,) * self.rank

    def is_long(self, i: int) -> bool:
        """Whether simple root alpha_i (0-based) is long."""
        return self.gram[i][i] == 2

    @cached_property
    def sum_index(self) -> tuple[tuple[int, ...], ...]:
        """sum_index[a][b] = index of root a+b, or -1."""
        idx = self.index
        cs = self.coeffs
        return tuple(
            tuple(idx.get(tuple(x + y for x, y in zip(ca, cb)), -1) for cb in cs)
            for ca in cs
        )

    @cached_property
    def sum_mask(self) -> tuple[int, ...]:
        """Bitset of roots b such that a+b is a root, per a."""
        out = []
        for row in self.sum_index:
            m = 0
            for b, s in enumerate(row):
                if s >= 0:
                    m |= 1 << b
            out.append(m)
        return tuple(out)

    @cached_property
    def cover_mask(self) -> tuple[int, ...]:
        """Bitset of roots a + alpha_i (upper covers in the root poset)."""
        out = []
        for c in self.coeffs:
            m = 0
            for i in range(self.rank):
                up = list(c)
                up[i] += 1
                k = self.index.get(tuple(up))
                if k is not None:
                    m |= 1 << k
            out.append(m)
        return tuple(out)

    @cached_property
    def ge_mask(self) -> tuple[int, ...]:
        """Bitset of roots b >= a in the root poset, per a."""
        cs = self.coeffs
        out = []
        for ca in cs:
            m = 0
            for b, cb in enumerate(cs):
                if all(y >= x for x, y in zip(ca, cb)):
                    m |= 1 << b
            out.append(m)
        return tuple(out)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.ge_mask[a] >> b & 1)

    def members(self, mask: int) -> list[int]:
        out = []
        k = 0
        while mask:
            if mask & 1:
                out.append(k)
            mask >>= 1
            k += 1
        return out

    def to_json(self) -> dict:
        return {
            "family": self.datum.family,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "roots": [list(c) for c in self.coeffs],
            "theta": list(self.theta.coeffs),
            "marks": list(self.marks),
            "comarks": list(self.comarks),
            "h_dual": self.h_dual,
        }


def _generate_positive(cartan: Sequence[Sequence[int]], order: Sequence[int]) -> set[Coeffs]:
    """Positive roots by alpha-string closure, height by height."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in order:
                # p = largest k with beta - k alpha_i a root
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(cartan[i][k] * beta[k] for k in range(n))
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return roots


def build_root_system(datum: CartanDatum, *, order: Sequence[int] | None = None) -> RootSystem:
    """Generate positive roots, highest root, marks, comarks and h^vee.

    ``order`` permutes the simple roots tried at each closure step; the
    result does not depend on it.
    """
    d = validate_cartan(datum.cartan)
    if d != tuple(datum.symmetrizers):
        raise ValueError("symmetrizers do not match the Cartan matrix")
    n = datum.rank
    a = datum.cartan
    gen_order = list(order) if order is not None else list(range(n))
    if sorted(gen_order) != list(range(n)):
        raise ValueError("order must be a permutation of the simple-root indices")
    roots = sorted(_generate_positive(a, gen_order), key=lambda c: (sum(c), c))

    sym = [[Fraction(d[i] * a[i][j]) for j in range(n)] for i in range(n)]
    theta = roots[-1]
    tt = sum(theta[i] * sym[i][j] * theta[j] for i in range(n) for j in range(n))
    scale = Fraction(2) / tt
    gram = tuple(tuple(scale * x for x in row) for row in sym)

    def norm(c: Coeffs) -> Fraction:
        return sum(c[i] * gram[i][j] * c[j] for i in range(n) for j in range(n))

    vecs = tuple(RootVec(c, "long" if norm(c) == 2 else "short") for c in roots)
    marks = theta
    comarks = []
    for i in range(n):
        cm = gram[i][i] / 2 * marks[i]
        if cm.denominator != 1:
            raise ValueError("non-integral comark")
        comarks.append(int(cm))
    return RootSystem(
        datum=datum,
        positive_roots=vecs,
        theta=vecs[-1],
        marks=tuple(marks),
        comarks=tuple(comarks),
        h_dual=1 + sum(comarks),
        gram=gram,
    )


@lru_cache(maxsize=None)
def root_system(family: str, rank: int) -> RootSystem:
    """Cached root system of Bourbaki type ``family``+``rank``."""
    return build_root_system(cartan_datum(family, rank))


def _coeffs(x: RootVec | Sequence[int]) -> Coeffs:
    return x.coeffs if isinstance(x, RootVec) else tuple(x)


def inner(rs: RootSystem, x: RootVec | Sequence[int], y: RootVec | Sequence[int]) -> Fraction:
    cx, cy = _coeffs(x), _coeffs(y)
    g = rs.gram
    n = rs.rank
    return sum((cx[i] * g[i][j] * cy[j] for i in range(n) for j in range(n)), Fraction(0))


def root_sum(rs: RootSystem, x: RootVec | Sequence[int], y: RootVec | Sequence[int]) -> RootVec | None:
    """x + y when it is a (positive) root, else None."""
    s = tuple(a + b for a, b in zip(_coeffs(x), _coeffs(y)))
    k = rs.index.get(s)
    return None if k is None else rs.positive_roots[k]


def brute_force_roots(rs: RootSystem, bound: int) -> list[Coeffs]:
    """Independent oracle: nonnegative lattice vectors whose norm is a root norm.

    Valid for types A, B, D, E, F, G and for C2, C3: there the roots are exactly
    the root-lattice vectors whose norm equals that of some simple root. It
    fails for C_n, n >= 4 (e.g. e1+e2+e3+e4 has long-root norm).
    """
    n = rs.rank
    norms = {rs.gram[i][i] for i in range(n)}
    found = []
    for c in itertools.product(range(bound + 1), repeat=n):
        if any(c) and inner(rs, c, c) in norms:
            found.append(c)
    return sorted(found, key=lambda c: (sum(c), c))


def coroot_coeffs(rs: RootSystem, c: Sequence[int]) -> tuple[int, ...]:
    """alpha^vee in simple-coroot coordinates: c_i (alpha_i, alpha_i) / (alpha, alpha)."""
    nrm = inner(rs, c, c)
    out = []
    for i, ci in enumerate(c):
        v = ci * rs.gram[i][i] / nrm
        assert v.denominator == 1
        out.append(int(v))
    return tuple(out)


def fw_to_root(rs: RootSystem, lam: Sequence[int]) -> tuple[Fraction, ...]:
    """Solve A c = lam for simple-root coordinates c (exact)."""
    n = rs.rank
    m = [[Fraction(rs.cartan[i][j]) for j in range(n)] + [Fraction(lam[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))
