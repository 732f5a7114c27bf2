import pytest

from abid.abelian import enumerate_ideals
from abid.dynkin import (
    CenterElement,
    DiagramAut,
    act_center,
    act_diagram,
    aut_pi,
    aut_pihat,
    center,
    center_permutation,
    diagram_permutation,
    finite_act_on_weight,
    finite_inversion_sum,
    longest_word,
    verify_decaut,
    verify_hasse_symmetry,
    verify_poset_symmetry,
)
from abid.poset import hasse, poset_automorphisms
from abid.rootsys import root_system, sweep_cases

ORDERS = {
    # name: (|Aut(Pi)|, |Aut(Pi^)|, |Z|)
    "A1": (1, 2, 2),
    "A2": (2, 6, 3),
    "A3": (2, 8, 4),
    "A7": (2, 16, 8),
    "B3": (1, 2, 2),
    "C3": (1, 2, 2),
    "D4": (6, 24, 4),
    "D5": (2, 8, 4),
    "D6": (2, 8, 4),
    "E6": (2, 6, 3),
    "E7": (1, 2, 2),
    "E8": (1, 1, 1),
    "F4": (1, 1, 1),
    "G2": (1, 1, 1),
}


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_group_orders(name):
    rs = root_system(name[0], int(name[1:]))
    assert (len(aut_pi(rs)), len(aut_pihat(rs)), len(center(rs))) == ORDERS[name]


@pytest.mark.parametrize("family,rank", sweep_cases(8))
def test_pihat_is_pi_times_center(family, rank):
    rs = root_system(family, rank)
    assert len(aut_pihat(rs)) == len(aut_pi(rs)) * len(center(rs))
    # Aut(Pi) sits inside Aut(Pi^) as the stabilizer of node 0
    assert set(aut_pi(rs)) == {f for f in aut_pihat(rs) if f(0) == 0}


def test_marks_invariant():
    for fam, n in sweep_cases(8):
        rs = root_system(fam, n)
        for f in aut_pi(rs):
            assert all(rs.marks[f(i) - 1] == rs.marks[i - 1] for i in range(1, n + 1))
            assert all(rs.comarks[f(i) - 1] == rs.comarks[i - 1] for i in range(1, n + 1))


def test_longest_word():
    rs = root_system("A", 3)
    w0 = longest_word(rs)
    assert len(w0) == 6
    # w0 = -(diagram flip) on weights
    assert finite_act_on_weight(rs, w0, (1, 0, 0)) == (0, 0, -1)
    assert len(longest_word(rs, 1)) == 3
    e8 = root_system("E", 8)
    assert len(longest_word(e8)) == 120


@pytest.mark.parametrize("family,rank", sweep_cases(8))
def test_inversion_sum_identity(family, rank):
    rs = root_system(family, rank)
    for z in center(rs)[1:]:
        i = z.index
        word = longest_word(rs, i) + longest_word(rs)
        expected = tuple(rs.h_dual * int(r == i - 1) for r in range(rank))
        assert finite_inversion_sum(rs, word) == expected


def test_act_diagram_identity_and_a3_flip():
    rs = root_system("A", 3)
    ideals = enumerate_ideals(rs)
    ident = DiagramAut((0, 1, 2, 3))
    assert all(act_diagram(rs, ident, I) is I for I in ideals)
    flip = DiagramAut((0, 3, 2, 1))
    grade2 = [I for I in ideals if I.dim == 2]
    assert [act_diagram(rs, flip, I) for I in grade2] == grade2[::-1]
    with pytest.raises(ValueError):
        act_diagram(rs, DiagramAut((1, 0, 2, 3)), ideals[0])


def test_d4_triality_cycles_first_branching():
    rs = root_system("D", 4)
    ideals = enumerate_ideals(rs)
    # alpha_0 only meets alpha_2, so grades 0..2 form a chain and the three
    # arms of the diagram appear at grade 3
    assert [I.word for I in ideals if I.dim == 2] == [(0, 2)]
    arms = [I for I in ideals if I.dim == 3]
    assert [I.word for I in arms] == [(0, 2, 1), (0, 2, 3), (0, 2, 4)]
    cycles = [f for f in aut_pi(rs) if f.finite in ((3, 2, 4, 1), (4, 2, 1, 3))]
    assert len(cycles) == 2
    for f in cycles:
        images = [act_diagram(rs, f, I) for I in arms]
        assert set(images) == set(arms)
        assert all(a is not b for a, b in zip(images, arms))


@pytest.mark.parametrize("family,rank", sweep_cases(7))
def test_diagram_action_moves_weights(family, rank):
    rs = root_system(family, rank)
    for f in aut_pi(rs):
        for I in enumerate_ideals(rs):
            J = act_diagram(rs, f, I)
            assert all(J.weight_fw[f(k) - 1] == I.weight_fw[k - 1] for k in range(1, rank + 1))


def test_center_on_empty_ideal_a2():
    rs = root_system("A", 2)
    ideals = enumerate_ideals(rs)
    assert act_center(rs, CenterElement(None), ideals[2]) is ideals[2]
    img = act_center(rs, CenterElement(1), ideals[0])
    assert img.dim == 2
    assert img.weight_fw == (rs.h_dual, 0)
    assert act_center(rs, CenterElement(2), ideals[0]).weight_fw == (0, rs.h_dual)


@pytest.mark.parametrize("rank", range(1, 8))
def test_center_orbits_type_a(rank):
    rs = root_system("A", rank)
    perms = [center_permutation(rs, z) for z in center(rs)]
    seen = set()
    for v in range(2**rank):
        if v in seen:
            continue
        orbit = {p[v] for p in perms}
        seen |= orbit
        assert (rank + 1) % len(orbit) == 0


def test_center_needs_mark_one():
    rs = root_system("E", 7)
    with pytest.raises(ValueError):
        act_center(rs, CenterElement(1), enumerate_ideals(rs)[0])


@pytest.mark.parametrize("family,rank", sweep_cases(6))
def test_center_bijective_and_closed(family, rank):
    rs = root_system(family, rank)
    perms = {center_permutation(rs, z) for z in center(rs)}
    assert len(perms) == len(center(rs))
    from abid.poset import compose

    assert all(compose(p, q) in perms for p in perms for q in perms)


def test_poset_symmetry_c3_exception():
    rs = root_system("C", 3)
    rows = {r["check"]: r for r in verify_poset_symmetry(rs, hasse(rs))}
    assert rows["|Aut(poset)|"]["computed"] == 2
    assert rows["|Aut(Pi)|"]["computed"] == 1
    assert rows["diagram action is surjective"]["computed"] is False
    assert all(r["pass"] for r in rows.values())


@pytest.mark.parametrize("family,rank", sweep_cases(7, extra=[("E", 8)]))
def test_poset_symmetry(family, rank):
    rs = root_system(family, rank)
    h = hasse(rs)
    assert all(r["pass"] for r in verify_poset_symmetry(rs, h))
    expected = 2 if rs.name == "C3" else len(aut_pi(rs))
    assert len(poset_automorphisms(h)) == expected


@pytest.mark.parametrize("family,rank", sweep_cases(7, extra=[("E", 8)]))
def test_hasse_symmetry(family, rank):
    rs = root_system(family, rank)
    rows = verify_hasse_symmetry(rs, hasse(rs))
    assert [r for r in rows if not r["pass"]] == []


@pytest.mark.parametrize("family,rank", sweep_cases(6))
def test_decaut(family, rank):
    rows = verify_decaut(root_system(family, rank))
    assert [r for r in rows if not r["pass"]] == []


def test_diagram_permutation_is_homomorphism_d4():
    from abid.poset import compose

    rs = root_system("D", 4)
    fs = aut_pi(rs)
    img = {f: diagram_permutation(rs, f) for f in fs}
    for f in fs:
        for g in fs:
            fg = DiagramAut(tuple(f(g(k)) for k in range(5)))
            assert img[fg] == compose(img[f], img[g])
    assert len(set(img.values())) == 6
