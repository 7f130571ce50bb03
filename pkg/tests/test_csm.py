import pytest

from comather.chow import FlagSpace
from comather.csm import (
    check_euler_nonneg,
    csm_cell_gb,
    csm_cell_gb_along,
    csm_cell_gp,
    csm_table,
    euler_obstructions,
    euler_pullback_check,
    euler_table_matrix,
    fundamental_chern_class,
    solve_triangular,
    _cell_gb,
)
from comather.errors import InvalidInputError
from comather.mather import mather_class
from comather.poly import EquivPoly


def test_csm_of_a1_cells():
    space = FlagSpace.parse("A1/B")
    s = space.group.simple(1)
    identity = space.group.identity
    c = csm_cell_gb(space, s)
    assert c.constant_by_label() == {"1": 1, "()": 1}
    eq = csm_cell_gb(space, s, True)
    assert eq.coefficient(s) == EquivPoly.linear((1,), constant=1)
    assert eq.coefficient(identity) == 1


@pytest.mark.parametrize("name", ["A2", "C2", "A3"])
def test_reduced_word_independence(name):
    space = FlagSpace.parse(f"{name}/B")
    group = space.group
    for w in group.elements():
        for equivariant in (False, True):
            expected = csm_cell_gb(space, w, equivariant)
            for word in group.reduced_words(w):
                assert csm_cell_gb_along(space, word, equivariant) == expected


def test_non_reduced_word_rejected(fl4):
    with pytest.raises(InvalidInputError):
        csm_cell_gb_along(fl4, (1, 1))


@pytest.mark.parametrize("space_text", ["A3/B", "A5/P3", "C3/P3"])
def test_unitriangularity_and_total_sum(space_text):
    table = csm_table(FlagSpace.parse(space_text))
    assert table.check_unitriangular()
    assert table.check_total_sum()


def test_equivariant_total_sum(gr24):
    assert csm_table(gr24, True).check_total_sum()


def test_euler_characteristics_of_cells(gr36):
    # each cell is an affine space, so its CSM class has degree 1
    for v in gr36.min_reps():
        c = csm_cell_gp(gr36, v)
        assert c.coefficient(gr36.group.identity) == 1


def test_fundamental_class_point_coefficient(lg36):
    c = fundamental_chern_class(lg36)
    assert c.coefficient(lg36.group.identity) == len(lg36.min_reps())


def test_euler_obstructions_gr24_divisor(gr24):
    table = euler_obstructions(gr24, gr24.parse_element("21"), verify_equivariant=True)
    assert table.by_label() == {"()": 2, "1": 1, "11": 1, "2": 1, "21": 1}


def test_euler_obstructions_lg24(lg24):
    table = euler_obstructions(lg24, lg24.parse_element("2"))
    assert table.by_label() == {"()": 0, "1": 1, "2": 1}


def test_euler_obstructions_lg36(lg36):
    table = euler_obstructions(lg36, lg36.parse_element("32"))
    assert table.by_label() == {"()": 1, "1": 0, "2": 0, "21": 1, "3": 0, "31": 1, "32": 1}


def test_point_class_identity(gr36, lg36):
    for space in (gr36, lg36):
        identity = space.group.identity
        for w in space.min_reps():
            total = sum(euler_obstructions(space, w).values.values())
            assert total == mather_class(space, w).downstairs.coefficient(identity)


def test_euler_nonnegativity(gr36, lg36):
    for space in (gr36, lg36, FlagSpace.parse("D4/P4")):
        report = check_euler_nonneg(space)
        assert report.ok
        assert report.checked == len(space.min_reps())


def test_euler_pullback(gr24, lg24):
    assert euler_pullback_check(gr24, gr24.parse_element("21"))
    assert euler_pullback_check(lg24, lg24.parse_element("2"))


def test_euler_table_orientation(gr24):
    matrix = euler_table_matrix(gr24)
    assert matrix["21"]["()"] == 2
    assert matrix["()"]["21"] == 0
    assert all(matrix[label][label] == 1 for label in matrix)


def test_triangular_solve_recovers_combination(gr24):
    target = csm_cell_gp(gr24, gr24.parse_element("2")).scale(3) + csm_cell_gp(gr24, gr24.group.identity)
    coefficients = solve_triangular(target, lambda v: csm_cell_gp(gr24, v))
    assert {gr24.label(v): c for v, c in coefficients.items() if c} == {"2": 3, "()": 1}


@pytest.mark.parametrize("fixture", ["gr24", "lg36"])
def test_equivariant_cells_specialize(fixture, request):
    space = request.getfixturevalue(fixture)
    for v in space.min_reps():
        assert csm_cell_gp(space, v, True).specialize() == csm_cell_gp(space, v)


def test_cell_memo_is_bounded(fl4):
    top = fl4.quotient.top
    assert csm_cell_gb(fl4, top) is csm_cell_gb(fl4, top)
    assert _cell_gb.cache_info().maxsize is not None
