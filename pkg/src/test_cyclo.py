import cmath
import random
from fractions import Fraction

import pytest

from src.algebra.cyclo import (
    CycClass,
    CycNumber,
    GaloisAut,
    arith,
    classify,
    conjugate,
    cyc_root,
    embed,
    galois_apply,
    galois_group,
    norm,
    parse_cyc,
    phi,
    render_cyc,
    to_complex,
    trace,
)
from src.algebra.errors import InvalidOrderError, NotCoprimeError, OrderMismatchError, SpecParseError


def golden(n=5):
    # 1 + xi + xi^-1 = (1 + sqrt 5) / 2
    return CycNumber.one(n) + cyc_root(n, 1) + cyc_root(n, -1)


def test_root_of_unity_wraps_around():
    assert cyc_root(5, 5) == CycNumber.one(5)
    assert cyc_root(5, 7) == cyc_root(5, 2)
    assert cyc_root(5, -1) == cyc_root(5, 4)
    assert cyc_root(2, 1) == CycNumber.rational(2, -1)
    assert cyc_root(1, 3) == CycNumber.one(1)


def test_canonical_form_reduces_by_cyclotomic_polynomial():
    assert phi(5) == 4
    assert phi(12) == 4
    assert len(cyc_root(30, 1).coeffs) == 8
    assert render_cyc(cyc_root(5, 4)) == "-1 - 1*z - 1*z^2 - 1*z^3 @5"
    total = CycNumber.zero(5)
    for k in range(5):
        total = total + cyc_root(5, k)
    assert total.is_zero()
    assert render_cyc(total) == "0 @5"


def test_invalid_order_rejected():
    with pytest.raises(InvalidOrderError):
        cyc_root(0, 1)
    with pytest.raises(InvalidOrderError):
        CycNumber(3, (1, 2, 3))


def test_mixed_orders_are_never_coerced():
    with pytest.raises(OrderMismatchError):
        cyc_root(3, 1) + cyc_root(5, 1)
    with pytest.raises(OrderMismatchError):
        arith(cyc_root(3, 1), cyc_root(6, 1), "mul")
    with pytest.raises(OrderMismatchError):
        embed(cyc_root(4, 1), 6)


def test_embed_into_multiple_field():
    assert embed(cyc_root(3, 1), 6) == cyc_root(6, 2)
    assert embed(cyc_root(4, 1), 12) == cyc_root(12, 3)
    a = golden()
    assert to_complex(embed(a, 30)) == pytest.approx(to_complex(a))


def test_arith_operations():
    x = cyc_root(7, 1)
    assert arith(x, x, "mul") == cyc_root(7, 2)
    assert arith(x, x, "add") == x * 2
    assert arith(x, x, "sub").is_zero()
    assert x ** 7 == CycNumber.one(7)
    assert x ** -1 == cyc_root(7, 6)
    assert (CycNumber.one(3) / 2).coeffs[0] == Fraction(1, 2)


def test_golden_ratio_values():
    a = golden()
    b = 1 - a
    assert to_complex(a).real == pytest.approx(1.6180339887, abs=1e-8)
    assert to_complex(b).real == pytest.approx(-0.6180339887, abs=1e-8)
    assert a * a == a + 1


def test_galois_automorphisms():
    s = GaloisAut(5, 2)
    assert s(cyc_root(5, 1)) == cyc_root(5, 2)
    assert galois_apply(GaloisAut(5, 4), golden()) == golden()
    assert galois_apply(s, golden()) == 1 - golden()
    assert GaloisAut(5, 7).ell == 2
    assert s.compose(GaloisAut(5, 3)).ell == 1
    assert s.inverse().ell == 3
    assert [g.ell for g in galois_group(12)] == [1, 5, 7, 11]
    assert [g.ell for g in galois_group(1)] == [1]


def test_non_coprime_automorphism_rejected():
    with pytest.raises(NotCoprimeError):
        GaloisAut(6, 2)
    with pytest.raises(NotCoprimeError):
        GaloisAut(30, 5)


def test_galois_action_is_a_field_homomorphism():
    a = golden(15) + cyc_root(15, 4) * 3
    b = cyc_root(15, 7) - Fraction(2, 3)
    for s in galois_group(15):
        assert s(a * b) == s(a) * s(b)
        assert s(a + b) == s(a) + s(b)


def test_conjugate_norm_trace():
    x = cyc_root(5, 1)
    assert conjugate(x) == cyc_root(5, 4)
    assert conjugate(golden()) == golden()
    assert norm(1 + x) == 1
    assert trace(x) == -1
    assert trace(CycNumber.one(5)) == 4
    assert norm(CycNumber.rational(1, 3)) == 3


def test_inverse():
    a = 1 + cyc_root(5, 1)
    assert a * a.inverse() == CycNumber.one(5)
    b = golden(30) * Fraction(3, 7) + cyc_root(30, 11)
    assert b * b.inverse() == CycNumber.one(30)
    assert a / a == CycNumber.one(5)
    with pytest.raises(ZeroDivisionError):
        CycNumber.zero(5).inverse()


def test_classify():
    assert classify(CycNumber.rational(5, Fraction(1, 2))) is CycClass.RATIONAL
    assert classify(CycNumber.rational(5, -3)) is CycClass.RATIONAL_INTEGER
    assert classify(golden()) is CycClass.CYCLOTOMIC_INTEGER
    assert classify(cyc_root(5, 1) * Fraction(1, 2)) is CycClass.GENERAL


def test_parse_and_render():
    value = parse_cyc("1 - 1*z^2 @5")
    assert value == 1 - cyc_root(5, 2)
    assert render_cyc(value) == "1 - 1*z^2 @5"
    assert parse_cyc("z^7 @5") == cyc_root(5, 2)
    assert parse_cyc("-1/2 + 3/4*z @8") == CycNumber.from_exponents(8, {0: Fraction(-1, 2), 1: Fraction(3, 4)})
    assert parse_cyc("0 @3").is_zero()
    for a in (golden(30), cyc_root(12, 5) * Fraction(-2, 3), CycNumber.rational(7, 4)):
        assert parse_cyc(render_cyc(a)) == a


@pytest.mark.parametrize("text", ["1 + 2", "1 ++ z @5", "1 @0", "1 * @5", "z^x @5"])
def test_parse_errors(text):
    with pytest.raises(SpecParseError):
        parse_cyc(text)


def random_element(rng, n):
    terms = {k: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for k in rng.sample(range(n), min(n, 4))}
    return CycNumber.from_exponents(n, terms)


@pytest.mark.parametrize("n", [3, 4, 5, 7, 8, 12, 15, 30])
def test_arithmetic_agrees_with_complex_values(n):
    rng = random.Random(n)
    for _ in range(25):
        a, b = random_element(rng, n), random_element(rng, n)
        za, zb = to_complex(a), to_complex(b)
        assert abs(to_complex(arith(a, b, "add")) - (za + zb)) < 1e-8
        assert abs(to_complex(arith(a, b, "sub")) - (za - zb)) < 1e-8
        assert abs(to_complex(arith(a, b, "mul")) - za * zb) < 1e-8
        if not b.is_zero():
            assert abs(to_complex(a / b) - za / zb) < 1e-8
        assert abs(to_complex(conjugate(a)) - za.conjugate()) < 1e-8


@pytest.mark.parametrize("n", [5, 8, 9, 12, 20])
def test_random_automorphisms_are_homomorphisms(n):
    rng = random.Random(100 + n)
    for _ in range(15):
        a, b = random_element(rng, n), random_element(rng, n)
        for s in galois_group(n):
            assert galois_apply(s, a * b) == galois_apply(s, a) * galois_apply(s, b)
            assert galois_apply(s, a + b) == galois_apply(s, a) + galois_apply(s, b)
            # sigma_ell evaluates the canonical polynomial at xi^ell
            expected = sum(float(c) * cmath.exp(2j * cmath.pi * k * s.ell / n) for k, c in enumerate(a.coeffs))
            assert abs(to_complex(galois_apply(s, a)) - expected) < 1e-8
