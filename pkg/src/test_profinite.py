from fractions import Fraction

import pytest

from src.algebra.chartab import compute_character_table
from src.algebra.cyclo import CycNumber, GaloisAut, cyc_root, galois_group
from src.algebra.errors import (
    InvariantViolation,
    ModulusMismatchError,
    NotCoprimeError,
    NotCyclicError,
)
from src.algebra.galois import column_action
from src.algebra.permgrp import builtin, parse_permutation
from src.algebra.profinite import (
    ContinuousHom,
    CoverKind,
    DeckTransformation,
    ProfiniteUnit,
    TruncatedProfinite,
    compare_actions_on_dihedral,
    cyclic_cover,
    cyclotomic_character,
    dihedral_cover,
    dihedral_f,
    galois_on_cyclic_deck,
    galois_on_dihedral_deck,
    hom_count,
    induced_class_permutation,
    profinite_act_on_group,
    tuple_galois_action,
)


def test_truncated_profinite_arithmetic():
    a = TruncatedProfinite(12, 7)
    b = TruncatedProfinite(12, 9)
    assert (a + b).residue == 4
    assert (a * b).residue == 3
    assert (-a).residue == 5
    assert a.truncate(4) == TruncatedProfinite(4, 3)
    assert a.compatible_with(TruncatedProfinite(8, 3))
    assert not a.compatible_with(TruncatedProfinite(8, 2))
    with pytest.raises(ModulusMismatchError):
        a + TruncatedProfinite(6, 1)
    with pytest.raises(ModulusMismatchError):
        a.truncate(5)


def test_profinite_units():
    u = ProfiniteUnit(30, 17)
    assert (u * u.inverse()).residue == 1
    assert u.truncate(5) == ProfiniteUnit(5, 2)
    assert u.as_profinite() == TruncatedProfinite(30, 17)
    assert cyclotomic_character(GaloisAut(30, 17)) == u
    with pytest.raises(NotCoprimeError):
        ProfiniteUnit(30, 2)


def test_continuous_homs():
    g = builtin("S3")
    count, homs = hom_count(g)
    assert count == 6
    three = g.index(parse_permutation("(1 2 3)"))
    hom = ContinuousHom(g, three)
    assert hom.evaluate(TruncatedProfinite(6, 4)) == g.power(three, 1)
    assert hom.evaluate(TruncatedProfinite(3, 0)) == g.identity
    with pytest.raises(ModulusMismatchError):
        hom.evaluate(TruncatedProfinite(4, 1))
    assert {h.image for h in homs} == set(range(6))


def test_unit_action_matches_galois_columns():
    g = builtin("A5")
    table = compute_character_table(g)
    u = ProfiniteUnit(30, 17)
    assert induced_class_permutation(u, g) == (0, 1, 2, 4, 3)
    assert induced_class_permutation(u, g) == column_action(table, 17)
    five = g.index(parse_permutation("(1 2 3 4 5)"))
    assert profinite_act_on_group(u, g, five) == g.power(five, 2)
    with pytest.raises(ModulusMismatchError):
        profinite_act_on_group(ProfiniteUnit(10, 3), g, five)


def test_tuple_action_on_cyclic_subgroups():
    g = builtin("S4")
    four = g.index(parse_permutation("(1 2 3 4)"))
    square = g.power(four, 2)
    u = ProfiniteUnit(12, 5)
    assert tuple_galois_action(u, g, (four, square)) == (g.power(four, 5), g.power(square, 5))
    a = g.index(parse_permutation("(1 2)", degree=4))
    b = g.index(parse_permutation("(3 4)", degree=4))
    with pytest.raises(NotCyclicError):
        tuple_galois_action(u, g, (a, b))
    with pytest.raises(ModulusMismatchError):
        tuple_galois_action(ProfiniteUnit(5, 2), g, (four,))


def test_deck_transformations():
    r = DeckTransformation("dihedral", 3, 1)
    s = DeckTransformation(CoverKind.DIHEDRAL, 3, 0, -1)
    assert r.kind is CoverKind.DIHEDRAL
    assert str(r) == "(1,1)"
    assert str(DeckTransformation("cyclic", 12, 15)) == "gamma_3"
    assert r.compose(s) == DeckTransformation("dihedral", 3, 1, -1)
    assert s.compose(r) == DeckTransformation("dihedral", 3, -1, -1)
    assert r.power(3) == DeckTransformation("dihedral", 3, 0)
    with pytest.raises(InvariantViolation):
        DeckTransformation("cyclic", 4, 1, -1)


def test_cyclic_cover():
    cover = cyclic_cover(12)
    assert len(cover.fiber) == 12
    assert cover.fiber[1] == (cyc_root(12, 1), CycNumber.one(12))
    gamma = DeckTransformation("cyclic", 12, 3)
    assert galois_on_cyclic_deck(12, 7, gamma) == DeckTransformation("cyclic", 12, 9)
    assert galois_on_cyclic_deck(12, 5, gamma) == DeckTransformation("cyclic", 12, 3)
    table = cover.multiplication_table()
    assert table[2][5] == 7
    with pytest.raises(NotCoprimeError):
        galois_on_cyclic_deck(12, 2, gamma)


def test_dihedral_cover_fibre():
    cover = dihedral_cover(3)
    assert cover.labels == (-5, -3, -1, 1, 3, 5)
    assert cover.field_order == 12
    half = CycNumber.rational(12, Fraction(1, 2))
    for (x,) in cover.fiber:
        assert dihedral_f(3, x) == half
    assert len(cover.deck) == 6
    assert len(set(cover.permutations.values())) == 6


def test_dihedral_galois_action():
    gamma = DeckTransformation("dihedral", 3, 1)
    assert galois_on_dihedral_deck(3, 5, gamma) == DeckTransformation("dihedral", 3, 2)
    reflection = DeckTransformation("dihedral", 3, 1, -1)
    assert galois_on_dihedral_deck(3, 5, reflection) == DeckTransformation("dihedral", 3, 2, -1)
    assert galois_on_dihedral_deck(3, 7, reflection) == reflection


def test_covering_action_differs_from_power_map():
    comparison = compare_actions_on_dihedral(3, 5)
    rows = {r.deck: r for r in comparison.rows}
    rotation = rows[DeckTransformation("dihedral", 3, 1)]
    assert rotation.covering_image == rotation.power_image
    reflection = rows[DeckTransformation("dihedral", 3, 1, -1)]
    assert reflection.power_image == reflection.deck
    assert reflection.covering_image == DeckTransformation("dihedral", 3, 2, -1)
    assert reflection.differs
    assert all(r.deck.eps == -1 for r in comparison.differences)


def test_dihedral_action_agrees_when_ell_is_one_mod_two_n():
    comparison = compare_actions_on_dihedral(2, 1)
    assert comparison.differences == ()


@pytest.mark.parametrize("n", range(1, 13))
def test_cover_suite(n):
    dihedral = dihedral_cover(n)
    assert len(dihedral.fiber) == 2 * n
    assert len(dihedral.multiplication_table()) == 2 * n
    for s in galois_group(4 * n):
        for gamma in dihedral.deck:
            image = galois_on_dihedral_deck(n, s.ell, gamma)
            assert image == DeckTransformation("dihedral", n, s.ell * gamma.k, gamma.eps)

    cyclic = cyclic_cover(n)
    for s in galois_group(n):
        for gamma in cyclic.deck:
            assert galois_on_cyclic_deck(n, s.ell, gamma).k == (s.ell * gamma.k) % n
