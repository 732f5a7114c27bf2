"""Labeled Hasse diagram of the ideal poset and its symmetry groups.

Automorphisms are found by individualization and colour refinement: both the
source and the image side are refined in lockstep, and a branch dies as soon
as the two colourings stop matching. With at most 256 nodes and small groups
this never needs canonical labeling.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import IdealSet, enumerate_ideals
from .affine import act_on_affine_root, affine_cartan, simple_affine_root
from .rootsys import RootSystem

__all__ = [
    "LabeledHasse",
    "Diamond",
    "build_hasse",
    "hasse",
    "diamonds",
    "poset_automorphisms",
    "graph_automorphisms",
    "degree_of_node",
    "find_automorphisms",
    "compose",
    "inverse",
    "is_group",
    "hasse_to_json",
    "hasse_to_dot",
    "diamond_labels_commute",
]

Perm = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class LabeledHasse:
    name: str
    nodes: tuple[IdealSet, ...]
    edges: tuple[tuple[int, int, int], ...]  # (lower, upper, label)
    pi_prime: frozenset[int]

    def grade(self, v: int) -> int:
        return self.nodes[v].dim

    @property
    def up(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in self.nodes]
        for lo, hi, lab in self.edges:
            out[lo].append((hi, lab))
        return out

    @property
    def down(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in self.nodes]
        for lo, hi, lab in self.edges:
            out[hi].append((lo, lab))
        return out

    def neighbors(self) -> list[set[int]]:
        out: list[set[int]] = [set() for _ in self.nodes]
        for lo, hi, _ in self.edges:
            out[lo].add(hi)
            out[hi].add(lo)
        return out

    def degree(self, v: int) -> int:
        return sum(1 for lo, hi, _ in self.edges if v in (lo, hi))


def build_hasse(rs: RootSystem, ideals: Sequence[IdealSet]) -> LabeledHasse:
    """Covering pairs are the one-root extensions; the label is the added generator."""
    by_phi = {I.phi: k for k, I in enumerate(ideals)}
    n = rs.rank
    simple = [simple_affine_root(rs, i) for i in range(n + 1)]
    edges = []
    for lo, I in enumerate(ideals):
        for i in range(n + 1):
            r = act_on_affine_root(rs, I.word, simple[i])
            if r.level != 1:
                continue
            k = rs.index.get(tuple(-c for c in r.finite))
            if k is None:
                continue
            hi = by_phi.get(I.phi | 1 << k)
            if hi is not None:
                edges.append((lo, hi, i))
    edges.sort()
    return LabeledHasse(
        name=rs.name,
        nodes=tuple(ideals),
        edges=tuple(edges),
        pi_prime=frozenset(lab for _, _, lab in edges),
    )


def hasse(rs: RootSystem) -> LabeledHasse:
    return build_hasse(rs, enumerate_ideals(rs))


@dataclass(frozen=True)
class Diamond:
    bottom: int
    left: int
    right: int
    top: int
    labels: tuple[int, int, int, int]  # bottom-left, bottom-right, left-top, right-top


def diamonds(h: LabeledHasse) -> list[Diamond]:
    """All 4-cycles bottom < left, right < top, by exhaustive scan over 2-paths."""
    up = h.up
    out = []
    for b in range(len(h.nodes)):
        ups = sorted(up[b])
        for x in range(len(ups)):
            for y in range(x + 1, len(ups)):
                (l, bl), (r, br) = ups[x], ups[y]
                tops_l = dict(up[l])
                for t, rt in up[r]:
                    if t in tops_l:
                        out.append(Diamond(b, l, r, t, (bl, br, tops_l[t], rt)))
    return out


# --- automorphism search -------------------------------------------------


def _refine_pair(ca: list[int], cb: list[int], adj):
    """Refine two colourings in lockstep; None when they become incompatible."""
    a, b = list(ca), list(cb)
    while True:
        sa = [(a[v],) + tuple(tuple(sorted(a[u] for u in rel)) for rel in adj[v]) for v in range(len(a))]
        sb = [(b[v],) + tuple(tuple(sorted(b[u] for u in rel)) for rel in adj[v]) for v in range(len(b))]
        if sorted(sa) != sorted(sb):
            return None
        order = {s: k for k, s in enumerate(sorted(set(sa)))}
        na = [order[s] for s in sa]
        nb = [order[s] for s in sb]
        if len(order) == len(set(a)):
            return na, nb
        a, b = na, nb


def find_automorphisms(adj: list[tuple[list[int], ...]], colors: Sequence[int]) -> list[Perm]:
    """All colour-preserving automorphisms of a (multi-relation) graph.

    ``adj[v]`` is a tuple of neighbour lists, one per relation (e.g. up and
    down for a poset, a single list for an undirected graph).
    """
    n = len(adj)
    start = _refine_pair(list(colors), list(colors), adj)
    if start is None:
        return []
    nbr_sets = [tuple(set(rel) for rel in rels) for rels in adj]
    found: list[Perm] = []

    def check(p: Perm) -> bool:
        for v in range(n):
            for r, rel in enumerate(nbr_sets[v]):
                if {p[u] for u in rel} != nbr_sets[p[v]][r]:
                    return False
        return True

    def search(a: list[int], b: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(a):
            cells.setdefault(c, []).append(v)
        target = next((cell for cell in sorted(cells.values(), key=lambda c: (len(c), c)) if len(cell) > 1), None)
        if target is None:
            inv = {c: v for v, c in enumerate(b)}
            p = tuple(inv[a[v]] for v in range(n))
            if check(p):
                found.append(p)
            return
        v = target[0]
        col = a[v]
        fresh = max(a) + 1
        for u in range(n):
            if b[u] != col:
                continue
            a2 = list(a)
            b2 = list(b)
            a2[v] = fresh
            b2[u] = fresh
            res = _refine_pair(a2, b2, adj)
            if res is not None:
                search(*res)

    search(*start)
    return sorted(found)


def poset_automorphisms(h: LabeledHasse) -> list[Perm]:
    """Grade-preserving bijections that map covering pairs onto covering pairs."""
    up = [[u for u, _ in row] for row in h.up]
    down = [[u for u, _ in row] for row in h.down]
    adj = [(up[v], down[v]) for v in range(len(h.nodes))]
    return find_automorphisms(adj, [h.grade(v) for v in range(len(h.nodes))])


def graph_automorphisms(h: LabeledHasse) -> list[Perm]:
    """Automorphisms of the underlying undirected, unlabeled graph."""
    nb = h.neighbors()
    adj = [(sorted(nb[v]),) for v in range(len(h.nodes))]
    return find_automorphisms(adj, [len(nb[v]) for v in range(len(h.nodes))])


def compose(p: Perm, q: Perm) -> Perm:
    """p after q."""
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_group(perms: Sequence[Perm]) -> bool:
    s = set(perms)
    if not s:
        return False
    n = len(next(iter(s)))
    if tuple(range(n)) not in s:
        return False
    return all(compose(p, q) in s for p in s for q in s) and all(inverse(p) in s for p in s)


def degree_of_node(rs: RootSystem, ideal: IdealSet) -> int:
    """Number of simple affine roots a with w(a) in +-(delta - positive roots)."""
    count = 0
    for i in range(rs.rank + 1):
        r = act_on_affine_root(rs, ideal.word, simple_affine_root(rs, i))
        if abs(r.level) != 1:
            continue
        beta = tuple(-r.level * c for c in r.finite)
        if beta in rs.index:
            count += 1
    return count


def diamond_labels_commute(rs: RootSystem, d: Diamond) -> bool:
    bl, br, lt, rt = d.labels
    ac = affine_cartan(rs)
    return bl == rt and br == lt and ac[bl][br] == 0


def _word_str(word: Sequence[int]) -> str:
    return ",".join(map(str, word)) if word else "e"


def hasse_to_json(h: LabeledHasse) -> dict:
    return {
        "schema": "abid/1",
        "type": h.name,
        "nodes": [{"id": k, "grade": I.dim, "word": list(I.word)} for k, I in enumerate(h.nodes)],
        "edges": [{"lo": lo, "hi": hi, "label": lab} for lo, hi, lab in h.edges],
    }


def hasse_to_dot(h: LabeledHasse) -> str:
    lines = [f'digraph "{h.name}" {{', "  rankdir=BT;"]
    for k, I in enumerate(h.nodes):
        lines.append(f'  n{k} [label="{_word_str(I.word)}"];')
    grades: dict[int, list[int]] = {}
    for k, I in enumerate(h.nodes):
        grades.setdefault(I.dim, []).append(k)
    for g in sorted(grades):
        members = " ".join(f"n{k};" for k in grades[g])
        lines.append(f"  {{ rank=same; {members} }}")
    for lo, hi, lab in h.edges:
        lines.append(f'  n{lo} -> n{hi} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
