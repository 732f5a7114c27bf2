import random

import pytest

from abid.affine import (
    AffineRoot,
    NonReduced,
    RangeViolation,
    _generator_on_v,
    _identity,
    _matmul,
    _matvec,
    act_on_affine_root,
    affine_act_on_weight,
    affine_cartan,
    affine_word,
    coxeter_m,
    decompose,
    eta,
    inversion_set,
    recompose,
    reflect,
    simple_affine_root,
)
from abid.rootsys import root_system, sweep_cases


def test_s0_on_alpha0():
    rs = root_system("A", 2)
    a0 = simple_affine_root(rs, 0)
    assert a0 == AffineRoot((-1, -1), 1)
    assert reflect(rs, 0, a0) == -a0
    assert reflect(rs, 1, simple_affine_root(rs, 1)) == AffineRoot((-1, 0), 0)


def test_inversion_set_from_prefixes():
    rs = root_system("C", 2)
    inv = inversion_set(rs, [0, 1, 0])
    assert [r.level for r in inv] == [1, 1, 1]
    assert all(r.is_positive() for r in inv)
    assert {tuple(-c for c in r.finite) for r in inv} == {(2, 1), (1, 1), (0, 1)}


def test_non_reduced():
    rs = root_system("A", 2)
    with pytest.raises(NonReduced):
        inversion_set(rs, [1, 1])
    with pytest.raises(NonReduced):
        inversion_set(rs, [1, 2, 1, 2])
    assert not affine_word(rs, [0, 0]).is_reduced
    with pytest.raises(ValueError):
        affine_word(rs, [3])


def _oracle(rs, word):
    n = rs.rank
    m, t = _identity(n), (0,) * n
    for i in word:
        g, s = _generator_on_v(rs, i)
        # (m, t) o (g, s): y -> m (g y + s) + t
        t = tuple(a + b for a, b in zip(_matvec(m, s), t))
        m = _matmul(m, g)
    return t, m


@pytest.mark.parametrize("family,rank", sweep_cases(6))
def test_decompose_against_generator_product(family, rank):
    rs = root_system(family, rank)
    rng = random.Random(f"{family}{rank}")
    for _ in range(20):
        word = [rng.randrange(rank + 1) for _ in range(rng.randrange(12))]
        assert decompose(rs, word) == _oracle(rs, word)


def test_translation_of_s0():
    rs = root_system("B", 3)
    tau, v = decompose(rs, [0])
    assert tau == rs.comarks
    # s0 is the reflection in theta = 1, so it moves the origin to theta^vee
    y = (0, 0, 0)
    assert recompose(tau, v, y) == tuple(rs.comarks)


def test_eta_values():
    rs = root_system("A", 1)
    assert eta(rs, []) == (0,)
    # s0 = t_{alpha^vee} s_alpha, so eta = s_alpha(alpha^vee) = -alpha^vee
    assert eta(rs, [0]) == (-1,)
    # s0 s1 s0 ... in A1 leaves the minuscule range
    with pytest.raises(RangeViolation, match=r"\{-2,-1,0,1\}"):
        eta(rs, [0, 1, 0])


def test_weight_action_srho():
    for fam, n in sweep_cases(8):
        rs = root_system(fam, n)
        theta_fw = rs.fw(rs.theta.coeffs)
        assert affine_act_on_weight(rs, [0], rs.rho_fw) == tuple(1 + x for x in theta_fw)


def test_act_rightmost_first():
    rs = root_system("A", 2)
    a1 = simple_affine_root(rs, 1)
    assert act_on_affine_root(rs, [1, 2], a1) == reflect(rs, 1, reflect(rs, 2, a1))


def test_affine_word_fields():
    rs = root_system("A", 3)
    w = affine_word(rs, [0, 1, 3, 0])
    assert w.is_reduced and len(w) == 4
    assert len(w.inversions) == 4
    assert w.root_images(rs)[1] == act_on_affine_root(rs, [0, 1, 3, 0], simple_affine_root(rs, 2)).finite


def test_affine_cartan_and_coxeter():
    assert affine_cartan(root_system("A", 1)) == ((2, -2), (-2, 2))
    rs = root_system("C", 2)
    ac = affine_cartan(rs)
    assert ac[0][1] == -1 and ac[1][0] == -2
    assert coxeter_m(rs, 0, 1) == 4
    assert coxeter_m(rs, 0, 2) == 2
    assert coxeter_m(root_system("A", 1), 0, 1) is None
    assert coxeter_m(root_system("G", 2), 1, 2) == 6
    for fam, n in sweep_cases(8):
        ac = affine_cartan(root_system(fam, n))
        marks = (1,) + root_system(fam, n).marks
        # delta = sum m_i alpha_i pairs to zero with every coroot
        assert all(sum(ac[i][j] * marks[j] for j in range(n + 1)) == 0 for i in range(n + 1))
