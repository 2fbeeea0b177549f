import pytest

from src.algebra.chartab import compute_character_table
from src.algebra.cyclo import CycNumber, galois_group
from src.algebra.errors import CorruptTableError, NotCoprimeError
from src.algebra.galois import (
    column_action,
    fixed_point_counts,
    galois_action,
    galois_orbits,
    row_action,
    verify_compatibility,
)
from src.algebra.permgrp import builtin


@pytest.fixture(scope="module")
def a5_table():
    return compute_character_table(builtin("A5"))


@pytest.fixture(scope="module")
def z5_table():
    return compute_character_table(builtin("Z5"))


def test_a5_action_swaps_the_golden_pair(a5_table):
    action = galois_action(a5_table, 7)
    assert action.ell == 7
    assert action.row_perm == (0, 2, 1, 3, 4)
    assert action.col_perm == (0, 1, 2, 4, 3)
    assert galois_action(a5_table, 37).row_perm == action.row_perm
    assert row_action(a5_table, 29) == (0, 1, 2, 3, 4)
    assert column_action(a5_table, 11) == (0, 1, 2, 3, 4)


def test_non_coprime_ell_rejected(a5_table):
    with pytest.raises(NotCoprimeError):
        column_action(a5_table, 2)
    with pytest.raises(NotCoprimeError):
        row_action(a5_table, 5)


@pytest.mark.parametrize("name", ["S3", "A5", "Z5", "Q8", "D5", "A4"])
def test_compatibility_for_every_ell(name):
    table = compute_character_table(builtin(name))
    for s in galois_group(table.field_order):
        result = verify_compatibility(table, s.ell)
        assert result.compatible, result.witness
        rows_fixed, cols_fixed = fixed_point_counts(table, s.ell)
        assert rows_fixed == cols_fixed


def test_cyclic_group_action_is_the_power_map(z5_table):
    action = galois_action(z5_table, 2)
    # Z5 is its own character group; both actions are x -> x^2 on a 5-cycle of labels
    assert sorted(action.row_perm) == [0, 1, 2, 3, 4]
    assert action.row_perm[0] == 0 and action.col_perm[0] == 0
    assert fixed_point_counts(z5_table, 2) == (1, 1)
    assert fixed_point_counts(z5_table, 4) == (1, 1)


def test_single_entry_fault_has_a_witness(z5_table):
    broken = z5_table.replace_entry(1, 1, CycNumber.one(5))
    result = verify_compatibility(broken, 2)
    assert not result
    assert result.witness is not None
    assert result.witness.ell == 2
    assert result.witness.col is None
    with pytest.raises(CorruptTableError):
        row_action(broken, 2)


def test_rational_fault_is_caught_by_the_premise():
    table = compute_character_table(builtin("S3"))
    broken = table.replace_entry(2, 2, CycNumber.rational(6, 1))
    assert verify_compatibility(table, 5).compatible
    result = verify_compatibility(broken, 5)
    assert not result.compatible
    assert "orthonormal" in result.witness.reason


def test_a5_orbits_and_fields(a5_table):
    orbits = galois_orbits(a5_table)
    assert orbits.row_orbits == ((0,), (1, 2), (3,), (4,))
    assert orbits.column_orbits == ((0,), (1,), (2,), (3, 4))
    ch3 = orbits.row_fields[1]
    assert ch3.stabilizer == (1, 11, 19, 29)
    assert ch3.degree == 2
    assert ch3.conductor == 5
    trivial = orbits.row_fields[0]
    assert trivial.degree == 1
    assert trivial.conductor == 1
    assert len(orbits.row_orbits) == len(orbits.column_orbits)


def test_cyclic_orbits(z5_table):
    orbits = galois_orbits(z5_table)
    assert orbits.row_orbits == ((0,), (1, 2, 3, 4))
    assert orbits.column_orbits == ((0,), (1, 2, 3, 4))
    assert all(f.conductor == 5 and f.degree == 4 for f in orbits.row_fields[1:])


SWEEP = ["S3", "S4", "S5", "A4", "A5", "Q8"] + [f"D{k}" for k in range(3, 13)] + [f"Z{k}" for k in range(2, 13)]


@pytest.mark.parametrize("name", SWEEP)
def test_compatibility_sweep(name):
    table = compute_character_table(builtin(name))
    assert all(verify_compatibility(table, s.ell) for s in galois_group(table.field_order))


def test_a5_swap_depends_on_ell_mod_5(a5_table):
    for s in galois_group(30):
        swapped = row_action(a5_table, s.ell) == (0, 2, 1, 3, 4)
        assert swapped == (s.ell % 5 in (2, 3))


@pytest.mark.parametrize("name", ["S3", "S4", "S5"])
def test_symmetric_group_tables_are_integral(name):
    table = compute_character_table(builtin(name))
    assert all(x.is_rational() and x.coeffs[0].denominator == 1 for row in table.rows for x in row)
    assert all(row_action(table, s.ell) == tuple(range(len(table.rows))) for s in galois_group(table.field_order))
