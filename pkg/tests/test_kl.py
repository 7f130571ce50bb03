import pytest

from comather import db
from comather.chow import FlagSpace, schubert
from comather.config import get_settings
from comather.errors import InvalidInputError
from comather.kl import (
    KLCache,
    ParabolicKL,
    _kl_engine,
    cc_irreducible,
    cc_multiplicities,
    compare_ordinary,
    kl_class,
    kl_polynomial,
    parabolic_kl_polynomial,
)
from comather.mather import mather_class, pullback_mather


def test_ordinary_polynomials_in_a3(fl4):
    group = fl4.group
    w3412 = group.from_word((2, 1, 3, 2))
    w4231 = group.from_word((1, 2, 3, 2, 1))
    nontrivial = {x for x in group.elements() if kl_polynomial(x, w3412, fl4).coeffs == (1, 1)}
    assert nontrivial == {group.identity, group.simple(2)}
    nontrivial = {x for x in group.elements() if kl_polynomial(x, w4231, fl4).coeffs == (1, 1)}
    assert nontrivial == {group.identity, group.simple(1), group.simple(3), group.from_word((1, 3))}
    p = kl_polynomial(group.identity, w3412, fl4)
    assert str(p) == "1+q"
    assert p.at_one == 2
    assert p(2) == 3
    assert kl_polynomial(w3412, group.identity, fl4).coeffs == ()


def test_dihedral_polynomials_are_trivial(c2b):
    group = c2b.group
    for w in group.elements():
        for x in group.lower_interval(w):
            assert kl_polynomial(x, w, c2b).coeffs == (1,)


@pytest.mark.parametrize("fixture", ["gr24", "lg24", "lg36"])
def test_stalk_polynomials_match_maximal_representatives(fixture, request):
    space = request.getfixturevalue(fixture)
    for w in space.min_reps():
        for x in space.min_reps():
            stalk = parabolic_kl_polynomial(space, x, w)
            assert stalk.coeffs == kl_polynomial(x, space.max_rep(w), space).coeffs


def test_grassmannian_divisor_stalk(gr24):
    w = gr24.parse_element("21")
    assert parabolic_kl_polynomial(gr24, gr24.group.identity, w).coeffs == (1, 1)
    assert parabolic_kl_polynomial(gr24, gr24.parse_element("1"), w).coeffs == (1,)
    with pytest.raises(InvalidInputError):
        parabolic_kl_polynomial(gr24, gr24.group.simple(1), w)


def test_kl_class_equals_mather_class_when_irreducible(gr24):
    w = gr24.parse_element("21")
    assert kl_class(gr24, w) == mather_class(gr24, w).downstairs
    assert kl_class(gr24, w, equivariant=True) == mather_class(gr24, w, True).downstairs


def test_lagrangian_divisor_is_reducible(lg24):
    w = lg24.parse_element("2")
    point = schubert(lg24, lg24.group.identity)
    assert kl_class(lg24, w) - mather_class(lg24, w).downstairs == point
    cc = cc_multiplicities(lg24, w)
    assert cc.by_label() == {"2": 1, "()": 1}
    assert not cc.irreducible


def test_pullback_to_full_flags_of_c2(lg24, c2b):
    w = lg24.parse_element("2")
    top = lg24.max_rep(w)
    assert c2b.word(top) == "121"
    difference = kl_class(c2b, top) - pullback_mather(lg24, w, c2b)
    assert difference == pullback_mather(lg24, lg24.group.identity, c2b)
    assert cc_multiplicities(lg24, w, pullback_to_b=True).by_label() == {"2": 1, "()": 1}


@pytest.mark.parametrize("fixture", ["gr24", "gr36"])
def test_grassmannian_cycles_are_irreducible(fixture, request):
    space = request.getfixturevalue(fixture)
    for w in space.min_reps():
        assert cc_irreducible(space, w)
        assert cc_irreducible(space, w, method="euler")


def test_lagrangian_reducible_cycles(lg24, lg36):
    assert not cc_irreducible(lg24, lg24.parse_element("2"))
    assert not cc_irreducible(lg36, lg36.parse_element("32"))
    assert not cc_irreducible(lg36, lg36.parse_element("32"), method="euler")
    with pytest.raises(InvalidInputError):
        cc_irreducible(lg36, lg36.parse_element("32"), method="guess")


def test_compare_ordinary(gr24):
    report = compare_ordinary(gr24, gr24.parse_element("21"))
    assert report.discrepancies == [("()", "1", "1+q")]


def test_persistent_cache(monkeypatch, tmp_path, gr24):
    from comather.config import get_settings

    monkeypatch.setenv("COMATHER_CACHE_DIR", str(tmp_path))
    get_settings.cache_clear()
    w = gr24.parse_element("21")
    first = ParabolicKL(gr24)
    assert first.polynomial(gr24.group.identity, w) == (1, 1)
    first.flush()
    assert (tmp_path / "kl_cache.sqlite").exists()
    second = ParabolicKL(gr24)
    assert second._stored
    assert second.polynomial(gr24.group.identity, w) == (1, 1)


@pytest.mark.parametrize("fixture", ["gr24", "lg36"])
def test_equivariant_kl_classes_specialize(fixture, request):
    space = request.getfixturevalue(fixture)
    for w in space.min_reps():
        assert kl_class(space, w, equivariant=True).specialize() == kl_class(space, w)


def test_polynomials_outside_the_interval_are_flagged(gr24, fl4, caplog):
    group = fl4.group
    x, w = group.from_word((1, 2)), group.from_word((2, 1))
    with caplog.at_level("WARNING", logger="comather.kl"):
        p = kl_polynomial(x, w, fl4)
    assert not p.below
    assert p.coeffs == () and p.at_one == 0
    assert "not below" in caplog.text
    assert kl_polynomial(group.identity, w, fl4).below
    stalk = parabolic_kl_polynomial(gr24, gr24.parse_element("22"), gr24.parse_element("21"))
    assert not stalk.below


@pytest.fixture
def kl_cache_dir(monkeypatch, tmp_path):
    monkeypatch.setenv("COMATHER_CACHE_DIR", str(tmp_path))
    get_settings.cache_clear()
    _kl_engine.cache_clear()
    yield tmp_path
    _kl_engine.cache_clear()


def _cached_rows(space):
    engine = db.get_engine()
    kind = "parabolic:" + ",".join(str(i) for i in sorted(space.parabolic))
    return KLCache(engine, kind, space.group).load()


def test_comparison_and_euler_irreducibility_write_the_cache(kl_cache_dir, gr24):
    w = gr24.parse_element("21")
    compare_ordinary(gr24, w)
    assert _cached_rows(gr24)
    assert _cached_rows(gr24.gb())
    _kl_engine.cache_clear()
    other = FlagSpace.parse("A5/P3")
    assert cc_irreducible(other, other.parse_element("321"), method="euler")
    assert _cached_rows(other)
