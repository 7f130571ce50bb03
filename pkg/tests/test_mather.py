import pytest

from comather.chow import FlagSpace, SchubertClass
from comather.csm import check_euler_nonneg, euler_pullback_check
from comather.errors import InvalidInputError, ResourceLimitError
from comather.mather import (
    check_alternating,
    check_dual_identity,
    check_log_concave,
    check_positivity,
    check_unimodal,
    coefficient_table,
    dual_mather,
    guard_interval,
    mather_class,
    mather_polynomial,
    pullback_mather,
    segre_conormal,
    segre_mather,
)
from comather.poly import EquivPoly, product

GR36_321 = {
    "321": 1, "32": 4, "311": 4, "221": 4, "31": 15, "22": 15, "211": 15,
    "3": 17, "21": 52, "111": 17, "2": 54, "11": 54, "1": 60, "()": 24,
}

LG48_431 = {
    "431": 1, "43": 4, "421": 7, "42": 27, "321": 25, "41": 60, "32": 92,
    "4": 45, "31": 241, "3": 183, "21": 269, "2": 246, "1": 132, "()": 24,
}

FL4_PULLBACK = {
    "12321": 1, "2321": 3, "1231": 3, "231": 10, "31": 28,
    "1232": 2, "232": 8, "123": 4, "23": 16, "3": 28,
    "3121": 2, "321": 4, "121": 8, "21": 16, "1": 28,
    "312": 4, "32": 12, "12": 12, "2": 32, "": 24,
}


def test_grassmannian_divisor(gr24):
    m = mather_class(gr24, gr24.parse_element("21"))
    assert m.downstairs.constant_by_label() == {"21": 1, "2": 3, "11": 3, "1": 8, "()": 6}
    assert len(m.upstairs) == 8


def test_grassmannian_divisor_equivariant(gr24):
    w = gr24.parse_element("21")
    m = mather_class(gr24, w, True)
    a = lambda *c: EquivPoly.linear(c, constant=1)
    assert m.leading_coefficient() == product([a(1, 0, 0), a(0, 0, 1), a(1, 1, 1)], 4)
    one = gr24.parse_element("1")
    assert m.downstairs.coefficient(one) == EquivPoly.linear((2, 4, 2), constant=8)
    assert m.downstairs.coefficient(gr24.group.identity) == 6
    assert m.downstairs.specialize() == mather_class(gr24, w).downstairs


def test_gr36_example(gr36):
    assert coefficient_table(gr36, gr36.parse_element("321")) == GR36_321


def test_lg48_example_and_polynomial(lg48):
    w = lg48.parse_element("431")
    assert coefficient_table(lg48, w) == LG48_431
    poly = mather_polynomial(lg48, w)
    assert str(poly) == "x^8+11x^7+52x^6+152x^5+286x^4+452x^3+246x^2+132x+24"
    assert poly.eval(1) == sum(LG48_431.values())
    assert check_unimodal(poly)


@pytest.mark.parametrize(
    "space_text, text",
    [("B3/P1", "x^5+5x^4+11x^3+26x^2+18x+6"), ("D4/P1", "x^6+6x^5+16x^4+48x^3+44x^2+24x+8")],
)
def test_quadric_top_classes_are_not_log_concave(space_text, text):
    space = FlagSpace.parse(space_text)
    poly = mather_polynomial(space, space.quotient.top)
    assert str(poly) == text
    assert check_unimodal(poly)
    assert not check_log_concave(poly)


def test_pullback_to_full_flags(gr24, fl4):
    w = gr24.parse_element("21")
    pulled = pullback_mather(gr24, w, fl4)
    expected = {
        fl4.group.from_word(tuple(int(x) for x in word)): c for word, c in FL4_PULLBACK.items()
    }
    assert {v: int(p.constant_term()) for v, p in pulled.terms.items()} == expected


def test_pullback_to_intermediate_flags(gr24):
    group = gr24.group
    for text in ("A3/P1,2", "A3/P2,3"):
        target = FlagSpace.parse(text)
        for w in gr24.min_reps():
            pulled = pullback_mather(gr24, w, target)
            assert pulled.coefficient(target.min_rep(group.mul(w, gr24.quotient.w_p))) == 1
            assert euler_pullback_check(gr24, w, target)
    with pytest.raises(InvalidInputError):
        pullback_mather(gr24, gr24.parse_element("21"), FlagSpace.parse("A3/P1"))


@pytest.mark.parametrize(
    "space_text",
    [
        "A4/P2",
        "B3/P1",
        "B4/P1",
        "D4/P1",
        "D4/P4",
        pytest.param("A5/P2", marks=pytest.mark.slow),
        pytest.param("C4/P4", marks=pytest.mark.slow),
        pytest.param("D5/P5", marks=pytest.mark.slow),
    ],
)
def test_positivity_and_euler_nonnegativity_scans(space_text):
    space = FlagSpace.parse(space_text)
    for w in space.min_reps():
        assert check_positivity(space, w).ok, space.label(w)
        if space.rs.lie_type in ("A", "C"):
            assert check_unimodal(mather_polynomial(space, w)), space.label(w)
    report = check_euler_nonneg(space)
    assert report.ok, report.violations
    assert report.checked == len(space.min_reps())


@pytest.mark.parametrize("fixture", ["gr24", "lg36"])
def test_equivariant_pullback_and_segre_classes_specialize(fixture, request):
    space = request.getfixturevalue(fixture)
    for w in space.min_reps():
        assert pullback_mather(space, w, equivariant=True).specialize() == pullback_mather(space, w)
        assert segre_mather(space, w, equivariant=True).specialize() == segre_mather(space, w)


def test_positivity_on_small_spaces(gr36, lg36):
    for space in (gr36, lg36):
        for w in space.min_reps():
            assert check_positivity(space, w).ok


def test_equivariant_positivity(gr24, lg24):
    for space in (gr24, lg24):
        for w in space.min_reps():
            assert check_positivity(space, w, equivariant=True).ok


def test_dual_identity(gr24, lg36):
    for w in lg36.min_reps():
        assert check_dual_identity(lg36, w)
    for w in gr24.min_reps():
        assert check_dual_identity(gr24, w, equivariant=True)


def test_dual_mather_signs(gr24):
    m = mather_class(gr24, gr24.parse_element("21"))
    assert dual_mather(m).constant_by_label() == {"21": 1, "2": -3, "11": -3, "1": 8, "()": -6}


def test_segre_mather_of_a_line_in_the_plane():
    plane = FlagSpace.parse("A2/P1")
    line = plane.parse_element("s1")
    assert segre_mather(plane, line).constant_by_label() == {"1": 1, "()": -1}


def test_segre_mather_classes_alternate(gr36, lg36):
    for space in (gr36, lg36):
        for w in space.min_reps():
            assert check_alternating(segre_mather(space, w), w.length) == []


def test_segre_conormal_leading_term(lg36):
    for w in lg36.min_reps():
        s = segre_conormal(lg36, w, equivariant=True)
        assert s.specialize().coefficient(w) == 1
        assert s.specialize() == segre_conormal(lg36, w)


def test_non_cominuscule_rejected():
    space = FlagSpace.parse("C3/P1")
    with pytest.raises(InvalidInputError):
        mather_class(space, space.group.simple(1))


def test_interval_guard(monkeypatch, lg48):
    from comather.config import get_settings

    monkeypatch.setenv("COMATHER_MAX_INTERVAL", "5")
    get_settings.cache_clear()
    with pytest.raises(ResourceLimitError):
        guard_interval(lg48, lg48.quotient.top)
