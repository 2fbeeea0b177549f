from fractions import Fraction

import pytest

from src.algebra.chartab import (
    class_function_space_check,
    compute_character_table,
    dixon_prime,
    inner_product,
    table_symmetries,
    verify_table,
)
from src.algebra.cyclo import CycNumber, cyc_root, to_complex
from src.algebra.errors import PrimeSearchError
from src.algebra.permgrp import builtin


def rational_rows(table, rows=None):
    picked = table.rows if rows is None else [table.rows[r] for r in rows]
    return [[x.rational_value() for x in row] for row in picked]


@pytest.fixture(scope="module")
def s3_table():
    return compute_character_table(builtin("S3"))


@pytest.fixture(scope="module")
def a5_table():
    return compute_character_table(builtin("A5"))


def test_dixon_prime():
    assert dixon_prime(6, 6) == 7
    assert dixon_prime(60, 30) == 31
    assert dixon_prime(2, 2) == 3
    assert dixon_prime(1, 1) == 3
    with pytest.raises(PrimeSearchError):
        dixon_prime(60, 30, limit=30)


def test_s3_table(s3_table):
    assert s3_table.prime == 7
    assert s3_table.field_order == 6
    assert rational_rows(s3_table) == [[1, 1, 1], [1, -1, 1], [2, 0, -1]]
    assert s3_table.degrees == (1, 1, 2)
    assert s3_table.row_names() == ("ch1", "ch1'", "ch2")
    assert s3_table.class_names == ("1a", "2a", "3a")


def test_a5_table(a5_table):
    assert a5_table.degrees == (1, 3, 3, 4, 5)
    assert a5_table.row_names() == ("ch1", "ch3", "ch3'", "ch4", "ch5")
    assert rational_rows(a5_table, rows=(3, 4)) == [[4, 0, 1, -1, -1], [5, 1, -1, 0, 0]]
    golden = (1 + 5 ** 0.5) / 2
    values = sorted(to_complex(a5_table.rows[1][k]).real for k in (3, 4))
    assert values == pytest.approx([1 - golden, golden])
    # the two 3-dimensional rows are interchanged with their 5-cycle values swapped
    assert a5_table.rows[1][3] == a5_table.rows[2][4]
    assert a5_table.rows[1][4] == a5_table.rows[2][3]


@pytest.mark.parametrize("name,degrees", [
    ("Z1", (1,)),
    ("Z2", (1, 1)),
    ("Z5", (1, 1, 1, 1, 1)),
    ("Q8", (1, 1, 1, 1, 2)),
    ("D4", (1, 1, 1, 1, 2)),
    ("A4", (1, 1, 1, 3)),
    ("S4", (1, 1, 2, 3, 3)),
    ("D5", (1, 1, 2, 2)),
])
def test_degrees_of_small_groups(name, degrees):
    table = compute_character_table(builtin(name))
    assert table.degrees == degrees
    assert verify_table(table).passed


def test_cyclic_table_entries_are_roots_of_unity():
    table = compute_character_table(builtin("Z5"))
    entries = {x for row in table.rows for x in row}
    assert entries == {cyc_root(5, k) for k in range(5)}


def test_verified_properties(a5_table):
    report = verify_table(a5_table)
    assert report.passed
    assert report.first_failure() is None
    assert [c.name for c in report.checks] == [
        "square", "integrality", "degree_sum", "degree_divides", "row_orthonormality", "column_orthogonality",
    ]
    assert inner_product(a5_table, 1, 1) == CycNumber.one(30)
    assert inner_product(a5_table, 1, 2).is_zero()


def test_single_entry_fault_is_detected(s3_table):
    broken = s3_table.replace_entry(2, 2, CycNumber.rational(6, 1))
    report = verify_table(broken)
    assert not report.passed
    assert not report["row_orthonormality"].passed
    assert not report["column_orthogonality"].passed
    assert report["degree_sum"].passed
    assert verify_table(s3_table).passed


def test_non_integral_fault(s3_table):
    broken = s3_table.replace_entry(1, 1, CycNumber.rational(6, Fraction(1, 2)))
    report = verify_table(broken)
    assert not report["integrality"].passed
    assert "row 1 col 1" in report["integrality"].witness


def test_degree_fault(s3_table):
    broken = s3_table.replace_entry(2, 0, CycNumber.rational(6, 4))
    report = verify_table(broken)
    assert not report["degree_sum"].passed
    assert not report["degree_divides"].passed


def test_table_symmetries(s3_table):
    symmetries = table_symmetries(s3_table)
    assert symmetries.row_symmetries == ((0, (0, 1, 2)), (1, (1, 0, 2)))
    assert symmetries.column_symmetries == ((0, (0, 1, 2)),)


def test_central_column_symmetry():
    table = compute_character_table(builtin("Q8"))
    symmetries = table_symmetries(table)
    assert len(symmetries.row_symmetries) == 4
    assert len(symmetries.column_symmetries) == 2


def test_class_function_span(s3_table):
    assert class_function_space_check(s3_table)
    duplicated = s3_table.replace_entry(1, 1, CycNumber.one(6))
    assert not class_function_space_check(duplicated)
