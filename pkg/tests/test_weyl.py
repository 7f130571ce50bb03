from itertools import combinations

import pytest

from comather.errors import InvalidInputError, ResourceLimitError
from comather.roots import parse_root_system
from comather.weyl import weyl_group


def group(name):
    return weyl_group(parse_root_system(name))


@pytest.mark.parametrize("name, order", [("A1", 2), ("A3", 24), ("C2", 8), ("B3", 48), ("D4", 192)])
def test_group_orders_and_longest_element(name, order):
    W = group(name)
    assert len(W.elements()) == order
    assert W.longest_element().length == len(W.rs.positive_roots)


def test_reduced_word_is_lex_least():
    W = group("A2")
    w0 = W.longest_element()
    assert W.reduced_word(w0) == (1, 2, 1)
    assert W.reduced_words(w0) == [(1, 2, 1), (2, 1, 2)]
    assert W.from_word((2, 1, 2)) is w0


def test_elements_are_interned_and_inverse():
    W = group("B3")
    for w in W.elements():
        assert W.mul(w, W.inverse(w)) is W.identity
        assert W.from_word(W.reduced_word(w)) is w
        assert len(W.reduced_word(w)) == w.length


def test_inversion_set_size_is_length():
    W = group("C3")
    for w in W.elements():
        assert len(W.inversion_set(w)) == w.length
        for beta in W.inversion_set(w):
            assert not W.rs.is_positive_root(W.act(w, beta))


def _subword_products(W, w):
    word = W.reduced_word(w)
    products = set()
    for k in range(len(word) + 1):
        for positions in combinations(range(len(word)), k):
            products.add(W.from_word(word[p] for p in positions))
    return products


def test_bruhat_order_matches_subword_property():
    W = group("A3")
    for w in W.elements():
        below = _subword_products(W, w)
        assert W.lower_interval(w) == frozenset(below)
        for v in W.elements():
            assert W.bruhat_leq(v, w) == (v in below)


def test_chevalley_covers_drop_length_by_one():
    W = group("C2")
    w0 = W.longest_element()
    covers = W.chevalley_covers(w0)
    assert len(covers) == 2
    for beta, u in covers:
        assert W.rs.is_positive_root(beta)
        assert u.length == w0.length - 1
        assert W.mul(w0, W.reflection(beta)) is u


def test_lower_interval_cap():
    W = group("B3")
    w0 = W.longest_element()
    with pytest.raises(ResourceLimitError):
        W.lower_interval(w0, limit=10)
    assert len(W.lower_interval(w0)) == 48
    with pytest.raises(ResourceLimitError):
        W.lower_interval(w0, limit=10)


@pytest.mark.parametrize(
    "name, node, size",
    [("A3", 2, 6), ("A5", 3, 20), ("C4", 4, 16), ("B3", 1, 6), ("D4", 1, 8), ("D5", 5, 16), ("E6", 6, 27), ("E7", 7, 56)],
)
def test_quotient_sizes(name, node, size):
    W = group(name)
    nodes = frozenset(range(1, W.rank + 1)) - {node}
    assert len(W.parabolic(nodes)) == size


def test_coset_decomposition():
    W = group("A3")
    nodes = {1, 3}
    quotient = W.parabolic(nodes)
    for w in W.elements():
        u, v = W.coset_decompose(w, nodes)
        assert u in quotient
        assert W.mul(u, v) is w
        assert u.length + v.length == w.length
    assert quotient.w_p.length == 2
    assert quotient.top.length == 4


def test_elements_from_another_group_are_rejected():
    A2, B2 = group("A2"), group("B2")
    with pytest.raises(InvalidInputError):
        A2.mul(A2.simple(1), B2.simple(1))
    with pytest.raises(InvalidInputError):
        A2.simple(3)
