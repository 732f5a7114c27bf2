"""Diagram automorphisms, the center subgroup Z, and their actions on ideals.

Node 0 is the affine node alpha_0. A :class:`DiagramAut` always carries images
for all nodes 0..n; automorphisms of the finite diagram are the ones fixing 0.
The center acts through weights: z_i sends an ideal of weight w to the ideal
of weight w_0^i w_0 (w) + h^vee omega_i, looked up by weight injectivity.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .abelian import IdealSet, enumerate_ideals, ideal_by_phi, ideal_by_weight
from .affine import AffineRoot, NonReduced, affine_cartan, inversion_set, reflect
from .poset import (
    LabeledHasse,
    Perm,
    compose,
    graph_automorphisms,
    inverse,
    poset_automorphisms,
)
from .rootsys import RootSystem

__all__ = [
    "DiagramAut",
    "CenterElement",
    "aut_pi",
    "aut_pihat",
    "center",
    "act_diagram",
    "act_center",
    "diagram_permutation",
    "center_permutation",
    "longest_word",
    "finite_act_on_weight",
    "finite_inversion_sum",
    "generate_group",
    "verify_poset_symmetry",
    "verify_hasse_symmetry",
    "verify_decaut",
    "poset_aut_expected",
    "hasse_expected_factor",
]


@dataclass(frozen=True, order=True)
class DiagramAut:
    images: tuple[int, ...]  # images[k] for nodes k = 0..n

    @property
    def fixes_affine_node(self) -> bool:
        return self.images[0] == 0

    @property
    def finite(self) -> tuple[int, ...]:
        """Images of nodes 1..n (only meaningful when node 0 is fixed)."""
        return self.images[1:]

    def __call__(self, k: int) -> int:
        return self.images[k]

    def is_identity(self) -> bool:
        return all(k == x for k, x in enumerate(self.images))


@dataclass(frozen=True, order=True)
class CenterElement:
    index: int | None  # a node with mark 1, or None for the identity

    def is_identity(self) -> bool:
        return self.index is None

    def __str__(self) -> str:
        return "id" if self.index is None else f"z{self.index}"


def _extended_marks(rs: RootSystem) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return (1,) + tuple(rs.marks), (1,) + tuple(rs.comarks)


def _cartan_automorphisms(mat: Sequence[Sequence[int]], fixed: dict[int, int]) -> list[tuple[int, ...]]:
    """Permutations p with mat[p[i]][p[j]] == mat[i][j], by row-pruned backtracking."""
    n = len(mat)
    out: list[tuple[int, ...]] = []
    img = [-1] * n
    used = [False] * n

    def rec(i: int) -> None:
        if i == n:
            out.append(tuple(img))
            return
        choices = [fixed[i]] if i in fixed else range(n)
        for c in choices:
            if used[c]:
                continue
            # the partial row and column must already agree
            if any(mat[c][img[j]] != mat[i][j] or mat[img[j]][c] != mat[j][i] for j in range(i)):
                continue
            if mat[c][c] != mat[i][i]:
                continue
            img[i] = c
            used[c] = True
            rec(i + 1)
            used[c] = False
        img[i] = -1

    rec(0)
    return sorted(out)


@lru_cache(maxsize=None)
def aut_pihat(rs: RootSystem) -> tuple[DiagramAut, ...]:
    """Automorphisms of the extended Dynkin diagram (Cartan-matrix preserving)."""
    ac = affine_cartan(rs)
    group = tuple(DiagramAut(p) for p in _cartan_automorphisms(ac, {}))
    marks, comarks = _extended_marks(rs)
    for f in group:
        for k in range(rs.rank + 1):
            if marks[f(k)] != marks[k] or comarks[f(k)] != comarks[k]:
                raise AssertionError(f"{rs.name}: {f} does not preserve marks")
    return group


@lru_cache(maxsize=None)
def aut_pi(rs: RootSystem) -> tuple[DiagramAut, ...]:
    """Automorphisms of the finite diagram, embedded as the alpha_0-stabilizer."""
    a = rs.cartan
    finite = _cartan_automorphisms(a, {})
    group = tuple(DiagramAut((0,) + tuple(x + 1 for x in p)) for p in finite)
    stab = tuple(f for f in aut_pihat(rs) if f.fixes_affine_node)
    if group != stab:
        raise AssertionError(f"{rs.name}: Aut(Pi) differs from the stabilizer of alpha_0 in Aut(Pi^)")
    return group


def center(rs: RootSystem) -> tuple[CenterElement, ...]:
    """Identity plus one element per node of mark 1."""
    return (CenterElement(None),) + tuple(
        CenterElement(i) for i in range(1, rs.rank + 1) if rs.marks[i - 1] == 1
    )


# --- finite Weyl group on weights and roots ------------------------------


def _simple_reflect_weight(rs: RootSystem, j: int, lam: list[int]) -> list[int]:
    k = lam[j - 1]
    if not k:
        return lam
    a = rs.cartan
    return [lam[r] - k * a[r][j - 1] for r in range(rs.rank)]


def finite_act_on_weight(rs: RootSystem, word: Sequence[int], lam: Sequence[int]) -> tuple[int, ...]:
    """Finite Weyl group word (letters 1..n) on a weight in fw coordinates."""
    out = list(lam)
    for j in reversed(word):
        out = _simple_reflect_weight(rs, j, out)
    return tuple(out)


@lru_cache(maxsize=None)
def longest_word(rs: RootSystem, exclude: int | None = None) -> tuple[int, ...]:
    """Reduced word for the longest element of W, or of the parabolic subgroup
    generated by all s_j with j != exclude."""
    nodes = [j for j in range(1, rs.rank + 1) if j != exclude]
    lam = [int(j != exclude) for j in range(1, rs.rank + 1)]
    applied: list[int] = []
    while True:
        j = next((j for j in nodes if lam[j - 1] > 0), None)
        if j is None:
            break
        lam = _simple_reflect_weight(rs, j, lam)
        applied.append(j)
    # lam is now J-antidominant and u = s_{last} ... s_{first} sends the regular
    # start point there, so u is the longest element; it is an involution
    return tuple(reversed(applied))


def _finite_act_on_root(rs: RootSystem, word: Sequence[int], c: tuple[int, ...]) -> tuple[int, ...]:
    a = AffineRoot(c, 0)
    for j in reversed(word):
        a = reflect(rs, j, a)
    return a.finite


def finite_inversion_sum(rs: RootSystem, word: Sequence[int]) -> tuple[int, ...]:
    """Sum over N(u) = {beta > 0 : u^{-1} beta < 0}, in fw coordinates."""
    inv_word = tuple(reversed(word))
    tot = [0] * rs.rank
    for c in rs.coeffs:
        img = _finite_act_on_root(rs, inv_word, c)
        if all(x <= 0 for x in img):
            for r, x in enumerate(rs.fw_of_root[c]):
                tot[r] += x
    return tuple(tot)


@lru_cache(maxsize=None)
def _center_word(rs: RootSystem, i: int) -> tuple[int, ...]:
    """Word for w_0^i w_0, with the supporting identity <N(w_0^i w_0)> = h^vee omega_i checked."""
    word = longest_word(rs, i) + longest_word(rs)
    expected = tuple(rs.h_dual * int(r == i - 1) for r in range(rs.rank))
    got = finite_inversion_sum(rs, word)
    if got != expected:
        raise AssertionError(f"{rs.name}: <N(w_0^{i} w_0)> = {got}, expected {expected}")
    return word


# --- actions on ideals ----------------------------------------------------


def act_diagram(rs: RootSystem, f: DiagramAut, ideal: IdealSet) -> IdealSet:
    """Relabel the canonical word by f and return the ideal with that inversion set."""
    if not f.fixes_affine_node:
        raise ValueError("act_diagram needs an automorphism of the finite diagram")
    word = tuple(f(k) for k in ideal.word)
    try:
        inv = inversion_set(rs, word)
    except NonReduced as exc:
        raise AssertionError(f"relabelled word {list(word)} is not reduced") from exc
    phi = 0
    for r in inv:
        k = rs.index.get(tuple(-c for c in r.finite)) if r.level == 1 else None
        if k is None:
            raise AssertionError(f"relabelled word {list(word)} is not minuscule")
        phi |= 1 << k
    out = ideal_by_phi(rs, phi)
    if out is None:
        raise AssertionError(f"relabelled word {list(word)} gives a non-abelian set")
    for k in range(1, rs.rank + 1):
        if out.weight_fw[f(k) - 1] != ideal.weight_fw[k - 1]:
            raise AssertionError(f"weight of {list(word)} is not the relabelled weight")
    return out


def act_center(rs: RootSystem, z: CenterElement, ideal: IdealSet) -> IdealSet:
    """Ideal of weight w_0^i w_0 (weight) + h^vee omega_i."""
    if z.index is None:
        return ideal
    i = z.index
    if rs.marks[i - 1] != 1:
        raise ValueError(f"node {i} has mark {rs.marks[i - 1]}, not 1")
    lam = list(finite_act_on_weight(rs, _center_word(rs, i), ideal.weight_fw))
    lam[i - 1] += rs.h_dual
    out = ideal_by_weight(rs, lam)
    if out is None:
        raise AssertionError(f"{rs.name}: {lam} is not the weight of an ideal")
    return out


def _perm_from(ideals: Sequence[IdealSet], fn) -> Perm:
    pos = {I.phi: k for k, I in enumerate(ideals)}
    return tuple(pos[fn(I).phi] for I in ideals)


def diagram_permutation(rs: RootSystem, f: DiagramAut, ideals: Sequence[IdealSet] | None = None) -> Perm:
    ideals = enumerate_ideals(rs) if ideals is None else ideals
    return _perm_from(ideals, lambda I: act_diagram(rs, f, I))


def center_permutation(rs: RootSystem, z: CenterElement, ideals: Sequence[IdealSet] | None = None) -> Perm:
    ideals = enumerate_ideals(rs) if ideals is None else ideals
    p = _perm_from(ideals, lambda I: act_center(rs, z, I))
    if len(set(p)) != len(p):
        raise AssertionError(f"{rs.name}: {z} does not act bijectively")
    return p


def generate_group(gens: Iterable[Perm], size: int) -> set[Perm]:
    """Closure of a set of permutations of range(size) under composition."""
    ident = tuple(range(size))
    gens = list(gens)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


# --- verification ---------------------------------------------------------


def poset_aut_expected(rs: RootSystem) -> int:
    """Expected |Aut| of the ideal poset: |Aut(Pi)|, doubled in type C3."""
    base = len(aut_pi(rs))
    return 2 * base if rs.name == "C3" else base


def hasse_expected_factor(rs: RootSystem) -> int:
    return 2 if rs.name in ("C3", "G2") else 1


def _row(case: str, check: str, expected, computed) -> dict:
    return {"case": case, "check": check, "expected": expected, "computed": computed, "pass": expected == computed}


def verify_poset_symmetry(rs: RootSystem, h: LabeledHasse) -> list[dict]:
    name = rs.name
    auts = set(poset_automorphisms(h))
    fs = aut_pi(rs)
    img = {f: diagram_permutation(rs, f, h.nodes) for f in fs}
    rows = [
        _row(name, "diagram action lands in poset automorphisms", True, all(p in auts for p in img.values())),
        _row(name, "diagram action is injective", len(fs), len(set(img.values()))),
        _row(
            name,
            "diagram action is a homomorphism",
            True,
            all(
                img[DiagramAut(tuple(f(g(k)) for k in range(rs.rank + 1)))] == compose(img[f], img[g])
                for f in fs
                for g in fs
            ),
        ),
        _row(name, "|Aut(poset)|", poset_aut_expected(rs), len(auts)),
        _row(name, "|Aut(Pi)|", len(fs), len(fs)),
    ]
    surj = set(img.values()) == auts
    rows.append(_row(name, "diagram action is surjective", name != "C3", surj))
    return rows


def verify_hasse_symmetry(rs: RootSystem, h: LabeledHasse) -> list[dict]:
    name = rs.name
    gauts = graph_automorphisms(h)
    gset = set(gauts)
    pset = set(poset_automorphisms(h))
    pihat = aut_pihat(rs)
    rows = [
        _row(name, "|Aut(H)|", hasse_expected_factor(rs) * len(pihat), len(gauts)),
        _row(name, "poset automorphisms are graph automorphisms", True, pset <= gset),
    ]
    dperms = [diagram_permutation(rs, f, h.nodes) for f in aut_pi(rs)]
    zperms = [center_permutation(rs, z, h.nodes) for z in center(rs)]
    rows.append(_row(name, "diagram action by graph automorphisms", True, all(p in gset for p in dperms)))
    rows.append(_row(name, "center action by graph automorphisms", True, all(p in gset for p in zperms)))
    gen = generate_group(dperms + zperms, len(h.nodes))
    rows.append(_row(name, "|<diagram, center>| = |Aut(Pi^)|", len(pihat), len(gen)))
    bottom = next(k for k, I in enumerate(h.nodes) if I.phi == 0)
    bottom_fixing_ok = all(p in pset for p in gauts if p[bottom] == bottom)
    rows.append(_row(name, "graph automorphisms fixing the bottom preserve the order", True, bottom_fixing_ok))
    return rows


def verify_decaut(rs: RootSystem, ideals: Sequence[IdealSet] | None = None) -> list[dict]:
    """Order and normality of the group generated by the diagram and center actions."""
    name = rs.name
    ideals = enumerate_ideals(rs) if ideals is None else ideals
    size = len(ideals)
    dperms = [diagram_permutation(rs, f, ideals) for f in aut_pi(rs)]
    zs = center(rs)
    zperms = [center_permutation(rs, z, ideals) for z in zs]
    zset = set(zperms)
    full = generate_group(dperms + zperms, size)
    normal = all({compose(compose(g, z), inverse(g)) for z in zset} == zset for g in full)
    return [
        _row(name, "|Z|", sum(1 for m in rs.marks if m == 1) + 1, len(zs)),
        _row(name, "center acts faithfully", len(zs), len(zset)),
        _row(name, "center action closes under composition", True, all(compose(p, q) in zset for p in zset for q in zset)),
        _row(name, "|<diagram, center>|", len(aut_pi(rs)) * len(zs), len(full)),
        _row(name, "center part is normal", True, normal),
    ]
