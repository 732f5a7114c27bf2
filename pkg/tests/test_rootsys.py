from fractions import Fraction

import pytest

from abid.rootsys import (
    CartanDatum,
    brute_force_roots,
    build_root_system,
    cartan_datum,
    classical_positive_count,
    coroot_coeffs,
    fw_to_root,
    inner,
    root_sum,
    root_system,
    sweep_cases,
    valid_type,
    validate_cartan,
)

ALL_CASES = sweep_cases(8)


def test_a2_by_hand():
    rs = root_system("A", 2)
    assert rs.coeffs == ((0, 1), (1, 0), (1, 1))  # by height, then lexicographic
    assert rs.theta.coeffs == (1, 1)
    assert rs.h_dual == 3


def test_g2_bourbaki():
    rs = root_system("G", 2)
    assert len(rs.coeffs) == 6
    assert rs.theta.coeffs == (3, 2)
    assert rs.marks == (3, 2)
    assert rs.comarks == (1, 2)
    assert rs.h_dual == 4
    assert [r.length_class for r in rs.positive_roots[:2]] == ["long", "short"]  # alpha_2, alpha_1


def test_c3_marks():
    rs = root_system("C", 3)
    assert rs.marks == (2, 2, 1)
    assert rs.theta.coeffs == (2, 2, 1)
    assert rs.h_dual == 4


@pytest.mark.parametrize(
    "family,rank,h_dual",
    [("A", 5, 6), ("B", 5, 9), ("C", 5, 6), ("D", 6, 10), ("E", 6, 12), ("E", 7, 18), ("E", 8, 30), ("F", 4, 9), ("G", 2, 4)],
)
def test_dual_coxeter_numbers(family, rank, h_dual):
    assert root_system(family, rank).h_dual == h_dual


def test_e8_highest_root():
    assert root_system("E", 8).theta.coeffs == (2, 3, 4, 6, 5, 4, 3, 2)


@pytest.mark.parametrize("family,rank", ALL_CASES)
def test_structure(family, rank):
    rs = root_system(family, rank)
    assert len(rs.coeffs) == classical_positive_count(family, rank)
    assert rs.h_dual == 1 + sum(rs.comarks)
    assert all(m >= 1 for m in rs.marks)
    # theta is the unique maximal element
    assert all(rs.leq(a, rs.theta_index) for a in range(len(rs.coeffs)))
    # comarks from lengths
    for i in range(rank):
        assert Fraction(rs.comarks[i]) == inner(rs, rs.coeffs[rs.simple_index[i]], rs.coeffs[rs.simple_index[i]]) / 2 * rs.marks[i]
    assert inner(rs, rs.theta, rs.theta) == 2
    if family in "ADE":
        assert all(r.length_class == "long" for r in rs.positive_roots)


@pytest.mark.parametrize("family,rank", [c for c in sweep_cases(6) if not (c[0] == "C" and c[1] >= 4)])
def test_closure_matches_lattice_scan(family, rank):
    rs = root_system(family, rank)
    bound = max(rs.marks)
    assert tuple(brute_force_roots(rs, bound)) == rs.coeffs


@pytest.mark.parametrize("family,rank", [("B", 4), ("F", 4), ("E", 6), ("G", 2)])
def test_generation_order_irrelevant(family, rank):
    datum = cartan_datum(family, rank)
    a = build_root_system(datum)
    b = build_root_system(datum, order=list(reversed(range(rank))))
    assert a.coeffs == b.coeffs
    assert a.marks == b.marks


def test_inner_and_pairings():
    rs = root_system("B", 3)
    short = rs.coeffs[rs.simple_index[2]]
    long_ = rs.coeffs[rs.simple_index[0]]
    assert inner(rs, short, short) == 1
    assert inner(rs, long_, long_) == 2
    g2 = root_system("G", 2)
    assert inner(g2, (1, 0), (1, 0)) == Fraction(2, 3)
    for c in rs.coeffs:
        for i in range(3):
            alpha = rs.coeffs[rs.simple_index[i]]
            assert 2 * inner(rs, c, alpha) / inner(rs, alpha, alpha) == rs.pair(c, i)


def test_root_sum():
    rs = root_system("A", 2)
    assert root_sum(rs, (1, 0), (0, 1)).coeffs == (1, 1)
    assert root_sum(rs, (1, 0), (1, 0)) is None
    assert root_sum(rs, (1, 1), (0, 1)) is None


def test_coroots_and_weights():
    rs = root_system("C", 3)
    assert coroot_coeffs(rs, rs.theta.coeffs) == (1, 1, 1)
    for c in rs.coeffs:
        assert fw_to_root(rs, rs.fw(c)) == tuple(Fraction(x) for x in c)


def test_valid_type():
    assert valid_type("A", 1)
    assert not valid_type("B", 1)
    assert not valid_type("D", 3)
    assert not valid_type("E", 9)
    assert not valid_type("F", 5)
    assert valid_type("G", 2)


def test_rejects_bad_cartan():
    with pytest.raises(ValueError):
        validate_cartan([[2, -1], [0, 2]])  # a_ij = 0 but a_ji != 0
    with pytest.raises(ValueError):
        validate_cartan([[2, -2], [-2, 2]])  # affine A1, not positive definite
    with pytest.raises(ValueError):
        validate_cartan([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]])  # cycle
    with pytest.raises(ValueError):
        build_root_system(CartanDatum("A", 2, ((2, -1), (-1, 2)), (1, 2)))
