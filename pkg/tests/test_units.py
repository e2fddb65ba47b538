from fractions import Fraction

import pytest

from signfree import (
    IMAGINARY_FAMILY,
    MINUS_TWENTY_SEVEN,
    NINE,
    PLUS_FAMILY,
    ROOTS_OF_NINE,
    SCALED_IMAGINARY_ROOTS,
    TABLE_IDS,
    TABLES,
    UNIT_VALUES,
    CyclicMatrix,
    ExactScalar,
    UnitName,
    find_square_roots,
    match_unit,
    unit_value,
    verify_unit_table,
)


def test_sixteen_units_exist_and_are_reduced():
    assert len(UnitName) == 16
    for unit in UnitName:
        value = unit_value(unit)
        assert value.is_reduced
        assert value.reduce() == value
    assert len({unit_value(u) for u in UnitName}) == 16


def test_unit_constants_examples():
    one = unit_value(UnitName.ONE)
    assert one == CyclicMatrix.one()
    third = Fraction(1, 3)
    j = unit_value(UnitName.J)
    assert j.rows()[0] == (ExactScalar(third), ExactScalar(2 * third), ExactScalar(2 * third))
    i = unit_value(UnitName.I)
    assert i.rows()[1][0] == ExactScalar(0, 2 * third)  # 2*sqrt(3)/3


def test_unit_squares():
    for unit in PLUS_FAMILY:
        assert unit_value(unit) ** 2 == unit_value(UnitName.ONE), unit
    for unit in IMAGINARY_FAMILY:
        assert unit_value(unit) ** 2 == unit_value(UnitName.NEG1), unit


def test_specific_cells():
    plus = TABLES["plus-one-table"]
    assert plus.expected(UnitName.K, UnitName.L) is UnitName.NJ
    imag = TABLES["imaginary-table"]
    assert imag.expected(UnitName.I, UnitName.JJ) is UnitName.NJ
    mixed = TABLES["mixed-table"]
    assert mixed.expected(UnitName.J, UnitName.I) is UnitName.JJ
    # and the products really give those units
    assert unit_value(UnitName.K) * unit_value(UnitName.L) == unit_value(UnitName.NJ)
    assert unit_value(UnitName.I) * unit_value(UnitName.JJ) == unit_value(UnitName.NJ)
    assert unit_value(UnitName.J) * unit_value(UnitName.I) == unit_value(UnitName.JJ)


@pytest.mark.parametrize("which", TABLE_IDS)
def test_tables_verify_64_of_64(which):
    report = verify_unit_table(which)
    assert len(report.cells) == 64
    assert report.passed, report.failures


@pytest.mark.parametrize("which", ("plus-one-table", "imaginary-table"))
def test_symmetric_tables_equal_their_transpose(which):
    table = TABLES[which]
    for row in table.row_units:
        for col in table.col_units:
            assert table.expected(row, col) is table.expected(col, row)


def test_mixed_table_matches_commuted_products():
    table = TABLES["mixed-table"]
    for row in table.row_units:
        for col in table.col_units:
            expected = unit_value(table.expected(row, col))
            assert unit_value(col) * unit_value(row) == expected


def test_corrupted_units_are_reported_not_raised():
    corrupted = dict(UNIT_VALUES)
    corrupted[UnitName.J] = unit_value(UnitName.K)
    report = verify_unit_table("plus-one-table", corrupted)
    assert not report.passed
    assert any(cell.row is UnitName.J or cell.col is UnitName.J for cell in report.failures)


def test_unknown_table_rejected():
    with pytest.raises(ValueError):
        verify_unit_table("no-such-table")


def test_match_unit():
    assert match_unit(CyclicMatrix.one()) is UnitName.ONE
    assert match_unit(CyclicMatrix.from_rows([[0, 0, 0], [1, 0, 0], [1, 0, 0]])) is UnitName.NEG1
    assert match_unit(CyclicMatrix.from_rows([[2, 0, 0], [0, 0, 0], [0, 0, 0]])) is None


def test_eight_square_roots_of_nine():
    assert len(ROOTS_OF_NINE) == 8
    accepted = find_square_roots(NINE, ROOTS_OF_NINE)
    assert len(accepted) == 8
    # they are 3x the plus-one family
    for root in ROOTS_OF_NINE:
        assert match_unit(ExactScalar(Fraction(1, 3)) * root) in PLUS_FAMILY


def test_eight_scaled_imaginary_roots():
    assert len(SCALED_IMAGINARY_ROOTS) == 8
    accepted = find_square_roots(MINUS_TWENTY_SEVEN, SCALED_IMAGINARY_ROOTS)
    assert len(accepted) == 8


def test_square_root_families_among_units():
    all_units = [unit_value(u) for u in UnitName]
    plus_roots = find_square_roots(unit_value(UnitName.ONE), all_units)
    assert {match_unit(m) for m in plus_roots} == set(PLUS_FAMILY)
    imaginary_roots = find_square_roots(unit_value(UnitName.NEG1), all_units)
    assert {match_unit(m) for m in imaginary_roots} == set(IMAGINARY_FAMILY)


def test_character_fingerprints_of_representative_units():
    # derived by evaluating psi_q = phi(A) + w^q phi(B) + w^2q phi(C)
    expectations = {
        UnitName.ONE: (1, 1, 1),
        UnitName.NEG1: (-1, -1, -1),
        UnitName.J: (1, -1, 1),
        UnitName.L: (-1, 1, 1),
        UnitName.I: (1j, 1j, 1j),
        UnitName.JJ: (1j, -1j, 1j),
    }
    for unit, expected in expectations.items():
        computed = unit_value(unit).characters()
        assert all(abs(c - e) < 1e-12 for c, e in zip(computed, expected)), unit


def test_labels_roundtrip():
    for unit in UnitName:
        assert UnitName.from_label(unit.label) is unit
    with pytest.raises(ValueError):
        UnitName.from_label("q")
