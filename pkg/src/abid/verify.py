"""Verification suites; each returns report rows {case, check, expected, computed, pass}."""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

from .abelian import (
    enumerate_ideals,
    from_antichain,
    ideal_by_weight,
    ideals_by_antichains,
    ideals_by_filter,
    is_regular,
    rho_point,
)
from .affine import affine_cartan, inversion_set, simple_affine_root, act_on_affine_root
from .dynkin import verify_decaut, verify_hasse_symmetry, verify_poset_symmetry
from .poset import degree_of_node, diamond_labels_commute, diamonds, hasse
from .rootsys import RootSystem, root_system, sweep_cases
from .young import verify_dihedral

__all__ = [
    "SUITES",
    "encodings",
    "poset_symmetry",
    "hasse_symmetry",
    "words",
    "edges",
    "decaut",
    "young",
    "run_suite",
    "cases_for",
    "reduced_words",
    "commutation_class",
    "forbidden_braids",
    "alcove_point",
    "clear_caches",
]

Report = list[dict]


def _row(case: str, check: str, expected, computed) -> dict:
    return {"case": case, "check": check, "expected": expected, "computed": computed, "pass": expected == computed}


def alcove_point(rs: RootSystem, word: Sequence[int]) -> tuple[int, ...]:
    """Scaled coordinates of w(x0), with x0 the point of C1 where every alpha_i is 1/h.

    alpha_j(w x0) = (w^{-1} alpha_j)(x0), so with h = 1 + sum of marks the value
    h * alpha_j(w x0) is height + h * level of w^{-1} alpha_j. Index 0 holds
    h * (1 - theta(w x0)).
    """
    h = 1 + sum(rs.marks)
    inv = tuple(reversed(word))
    out = []
    for j in range(rs.rank + 1):
        r = act_on_affine_root(rs, inv, simple_affine_root(rs, j))
        out.append(sum(r.finite) + h * r.level)
    return tuple(out)


def encodings(rs: RootSystem) -> Report:
    name = rs.name
    ideals = enumerate_ideals(rs)
    count = len(ideals)
    phis = {I.phi for I in ideals}
    by_antichains = ideals_by_antichains(rs)
    rows = [
        _row(name, "ideals (BFS)", 2 ** rs.rank, count),
        _row(name, "ideals (antichain engine)", 2 ** rs.rank, len(by_antichains)),
        _row(name, "antichain engine agrees with BFS", True, by_antichains == phis),
        _row(name, "filter engine agrees with BFS", True, ideals_by_filter(rs) == phis),
    ]

    # minuscule words: N(w) = delta - Phi, one per ideal
    ok = True
    for I in ideals:
        inv = inversion_set(rs, I.word)
        got = {tuple(-c for c in r.finite) for r in inv if r.level == 1}
        if len(inv) != I.dim or got != {rs.coeffs[a] for a in rs.members(I.phi)}:
            ok = False
    rows.append(_row(name, "N(w) = delta - Phi", True, ok))
    rows.append(_row(name, "distinct minuscule words", count, len({I.word for I in ideals})))

    # alcoves w(C1) inside 2C1
    h = 1 + sum(rs.marks)
    pts = [alcove_point(rs, I.word) for I in ideals]
    inside = all(
        all(x > 0 for x in p[1:]) and sum(m * x for m, x in zip(rs.marks, p[1:])) < 2 * h for p in pts
    )
    rows.append(_row(name, "alcoves lie in 2C1", True, inside))
    rows.append(_row(name, "distinct alcoves", count, len(set(pts))))

    # rho-points
    rho = [rho_point(rs, I) for I in ideals]
    rows.append(_row(name, "rho-points regular", True, all(is_regular(rs, p) for p in rho)))
    rows.append(_row(name, "distinct rho-points", count, len(set(rho))))

    # weights
    rows.append(_row(name, "distinct weights", count, len({I.weight_fw for I in ideals})))
    rows.append(
        _row(name, "weight lookup inverts weight", True, all(ideal_by_weight(rs, I.weight_fw) is I for I in ideals))
    )

    # eta vectors (range checked on construction)
    rows.append(_row(name, "distinct eta vectors", count, len({I.eta for I in ideals})))

    # antichains
    ants = {I.antichain for I in ideals}
    rows.append(_row(name, "distinct antichains", count, len(ants)))
    rows.append(
        _row(name, "antichain round trip", True, all(from_antichain(rs, I.antichain) is I for I in ideals))
    )

    # order compatibility: Phi inclusion <=> inversion-set inclusion
    inv_sets = {I.phi: frozenset(inversion_set(rs, I.word)) for I in ideals}
    compat = True
    for I in ideals:
        for J in ideals:
            sub = I.phi & ~J.phi == 0
            if sub != (inv_sets[I.phi] <= inv_sets[J.phi]):
                compat = False
    rows.append(_row(name, "Phi inclusion matches inversion-set inclusion", True, compat))
    return rows


def poset_symmetry(rs: RootSystem) -> Report:
    return verify_poset_symmetry(rs, hasse(rs))


def hasse_symmetry(rs: RootSystem) -> Report:
    h = hasse(rs)
    rows = verify_hasse_symmetry(rs, h)
    ds = diamonds(h)
    name = rs.name
    rows.append(_row(name, "diamond labels commute", True, all(diamond_labels_commute(rs, d) for d in ds)))
    tops = {d.top for d in ds}
    down = h.down
    rows.append(
        _row(
            name,
            "nodes with two lower covers top a diamond",
            True,
            all(v in tops for v in range(len(h.nodes)) if len(down[v]) >= 2),
        )
    )
    grade1 = [v for v in range(len(h.nodes)) if h.grade(v) == 1]
    rows.append(_row(name, "one node of grade 1", 1, len(grade1)))
    missing = set(range(rs.rank + 1)) - h.pi_prime
    # A1 = C1 and B2 = C2, so the long-root exception applies there too
    if rs.datum.family == "C" or rs.name in ("A1", "B2"):
        expected_missing = {i for i in range(1, rs.rank + 1) if rs.is_long(i - 1)}
    else:
        expected_missing = set()
    rows.append(_row(name, "labels absent from the diagram", sorted(expected_missing), sorted(missing)))
    return rows


# --- reduced words ----------------------------------------------------------


def _node_is_long(rs: RootSystem, i: int) -> bool:
    return True if i == 0 else rs.is_long(i - 1)


def forbidden_braids(rs: RootSystem, word: Sequence[int]) -> list[tuple[int, int, int]]:
    """Factors s_a s_b s_a of the word, except those with alpha_a long and alpha_b short."""
    out = []
    for x, y, z in zip(word, word[1:], word[2:]):
        if x == z and x != y and not (_node_is_long(rs, x) and not _node_is_long(rs, y)):
            out.append((x, y, z))
    return out


def commutation_class(rs: RootSystem, word: Sequence[int]) -> set[tuple[int, ...]]:
    """All words reachable by swapping adjacent commuting generators."""
    ac = affine_cartan(rs)
    start = tuple(word)
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a != b and ac[a][b] == 0:
                v = w[:k] + (b, a) + w[k + 2 :]
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return seen


def reduced_words(rs: RootSystem, word: Sequence[int]) -> set[tuple[int, ...]]:
    """Every reduced word of the element, by recursion on right descents.

    Elements are matrices on the basis alpha_0..alpha_n of the affine root
    lattice, built from the extended Cartan matrix alone.
    """
    ac = affine_cartan(rs)
    size = rs.rank + 1

    def gen(i: int) -> tuple[tuple[int, ...], ...]:
        # s_i(alpha_j) = alpha_j - a_ij alpha_i; columns are images
        return tuple(
            tuple(int(r == c) - (ac[i][c] if r == i else 0) for c in range(size)) for r in range(size)
        )

    gens = [gen(i) for i in range(size)]

    def mul(a, b):
        return tuple(
            tuple(sum(a[r][k] * b[k][c] for k in range(size)) for c in range(size)) for r in range(size)
        )

    ident = tuple(tuple(int(r == c) for c in range(size)) for r in range(size))
    m = ident
    for i in word:
        m = mul(m, gens[i])

    @lru_cache(maxsize=None)
    def words_of(mat) -> frozenset[tuple[int, ...]]:
        if mat == ident:
            return frozenset({()})
        out = set()
        for i in range(size):
            col = [mat[r][i] for r in range(size)]
            if all(x <= 0 for x in col):
                for w in words_of(mul(mat, gens[i])):
                    out.add(w + (i,))
        return frozenset(out)

    return set(words_of(m))


def words(rs: RootSystem, *, exhaustive_max_rank: int = 4) -> Report:
    name = rs.name
    ideals = enumerate_ideals(rs)
    bad = [(I.word, f) for I in ideals for f in forbidden_braids(rs, I.word)]
    rows = [_row(name, "canonical words avoid forbidden braids", [], [list(w) for w, _ in bad])]
    if rs.rank <= exhaustive_max_rank:
        same = True
        clean = True
        letters = True
        for I in ideals:
            allw = reduced_words(rs, I.word)
            if allw != commutation_class(rs, I.word):
                same = False
            if any(forbidden_braids(rs, w) for w in allw):
                clean = False
            if len({tuple(sorted(w)) for w in allw}) != 1:
                letters = False
        rows.append(_row(name, "reduced words = commutation class", True, same))
        rows.append(_row(name, "all reduced words avoid forbidden braids", True, clean))
        rows.append(_row(name, "letter multiset invariant", True, letters))
    return rows


def edges(rs: RootSystem) -> Report:
    h = hasse(rs)
    nb = h.neighbors()
    mismatches = [
        k for k, I in enumerate(h.nodes) if degree_of_node(rs, I) != len(nb[k])
    ]
    bottom = next(k for k, I in enumerate(h.nodes) if I.phi == 0)
    return [
        _row(rs.name, "formula degree = graph degree", [], mismatches),
        _row(rs.name, "degree of the bottom node", 1, len(nb[bottom])),
    ]


def decaut(rs: RootSystem) -> Report:
    return verify_decaut(rs)


def young(n: int) -> Report:
    return list(verify_dihedral(n))


# suite name -> (per-case function, rank cap applied on top of --max-rank)
SUITES: dict[str, tuple[Callable[[RootSystem], Report], int | None]] = {
    "encodings": (encodings, None),
    "theorem-t": (poset_symmetry, None),
    "hasse": (hasse_symmetry, None),
    "words": (words, None),
    "edges": (edges, 6),
    "decaut": (decaut, 6),
}
ALL = tuple(SUITES) + ("young",)


def cases_for(max_rank: int) -> list[tuple[str, int]]:
    return sweep_cases(max_rank)


def clear_caches() -> None:
    """Drop every memoized root system, enumeration and group (for cold timings)."""
    from . import abelian, dynkin, rootsys, young as _young

    for fn in (
        rootsys.root_system,
        abelian._catalog,
        abelian._le_mask,
        abelian._coroots,
        dynkin.aut_pi,
        dynkin.aut_pihat,
        dynkin.longest_word,
        dynkin._center_word,
        _young.verify_dihedral,
    ):
        fn.cache_clear()


def run_suite(suite: str, max_rank: int) -> Report:
    """Run one suite (or "all") over every type of rank <= max_rank."""
    if suite == "all":
        out: Report = []
        for s in ALL:
            out.extend(run_suite(s, max_rank))
        return out
    if suite == "young":
        # Y_n corresponds to rank n - 1
        return [{"suite": suite, **row} for n in range(3, max_rank + 2) for row in young(n)]
    if suite not in SUITES:
        raise KeyError(suite)
    fn, cap = SUITES[suite]
    limit = max_rank if cap is None else min(max_rank, cap)
    out = []
    for fam, n in cases_for(limit):
        for row in fn(root_system(fam, n)):
            out.append({"suite": suite, **row})
    return out
