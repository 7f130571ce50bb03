import pytest

from comather.errors import InvalidInputError
from comather.roots import build_root_system, parse_root_system


@pytest.mark.parametrize(
    "name, count",
    [("A1", 1), ("A3", 6), ("B3", 9), ("C4", 16), ("D4", 12), ("E6", 36), ("E7", 63)],
)
def test_positive_root_counts(name, count):
    assert len(parse_root_system(name).positive_roots) == count


def test_highest_roots():
    assert parse_root_system("A3").highest_root == (1, 1, 1)
    assert parse_root_system("C3").highest_root == (2, 2, 1)
    assert parse_root_system("B3").highest_root == (1, 2, 2)
    assert parse_root_system("E6").highest_root == (1, 2, 2, 3, 2, 1)


def test_c2_pairings_follow_bourbaki():
    rs = parse_root_system("C2")
    a1, a2 = rs.simple_root(1), rs.simple_root(2)
    assert rs.pair(a2, a1) == -2
    assert rs.pair(a1, a2) == -1
    assert rs.reflect(a1, a2) == (2, 1)
    assert rs.reflect_simple(1, a2) == (2, 1)


def test_pairing_of_a_root_with_itself_is_two():
    rs = parse_root_system("B3")
    for beta in rs.positive_roots:
        assert rs.pair(beta, beta) == 2


def test_cominuscule_nodes():
    assert parse_root_system("A4").cominuscule_nodes() == frozenset({1, 2, 3, 4})
    assert parse_root_system("C3").cominuscule_nodes() == frozenset({3})
    assert parse_root_system("B3").cominuscule_nodes() == frozenset({1})
    assert parse_root_system("D5").cominuscule_nodes() == frozenset({1, 4, 5})
    assert parse_root_system("E6").cominuscule_nodes() == frozenset({1, 6})
    assert parse_root_system("E7").cominuscule_nodes() == frozenset({7})


def test_roots_geq_and_parabolic_roots_partition_positive_roots():
    rs = parse_root_system("C3")
    upper = set(rs.roots_geq(3))
    levi = rs.parabolic_positive_roots({1, 2})
    assert len(upper) == 6
    assert upper | levi == set(rs.positive_roots)
    assert not upper & levi


def test_root_leq_and_height():
    rs = parse_root_system("A3")
    assert rs.root_leq((0, 1, 0), (1, 1, 0))
    assert not rs.root_leq((1, 0, 0), (0, 1, 1))
    assert rs.height(rs.highest_root) == 3


@pytest.mark.parametrize("text", ["F4", "G2", "A0", "D2", "E8", "C", "A3/P2"])
def test_unsupported_root_systems(text):
    with pytest.raises(InvalidInputError):
        parse_root_system(text)


def test_non_integral_weight_rejected():
    rs = build_root_system("A", 2)
    with pytest.raises(InvalidInputError):
        rs.pair((0.5, 0), rs.simple_root(1))


def test_build_is_memoised():
    assert build_root_system("C", 4) is parse_root_system("c4")
