import pytest

from src.algebra.errors import SpecParseError, UnknownGroupError
from src.algebra.groupspec import GroupSpec, build_group, parse_group_spec, render_group_spec


def test_builtin_names():
    assert parse_group_spec("A5") == GroupSpec(builtin="A5")
    assert parse_group_spec("  Q8 ").builtin == "Q8"
    assert build_group(parse_group_spec("D4")).order == 8
    with pytest.raises(UnknownGroupError):
        build_group(parse_group_spec("S9"))


def test_explicit_generators():
    spec = parse_group_spec("deg=3; (1 2),(1 2 3)")
    assert spec.degree == 3
    assert spec.generators == (((0, 1),), ((0, 1, 2),))
    assert render_group_spec(spec) == "deg=3; (1 2),(1 2 3)"
    group = build_group(spec)
    assert group.order == 6
    assert group.name == "deg=3; (1 2),(1 2 3)"


def test_degree_defaults_to_largest_point():
    spec = parse_group_spec("(1 2)(3 4),(1 3)(2 4)")
    assert spec.degree == 4
    assert build_group(spec).order == 4
    assert parse_group_spec("deg=5;").generators == ()
    assert build_group(parse_group_spec("deg=5;")).order == 1


def test_point_beyond_declared_degree():
    with pytest.raises(SpecParseError) as exc:
        parse_group_spec("deg=3; (1 4)")
    assert exc.value.offset == 10


def test_unterminated_cycle_offset():
    with pytest.raises(SpecParseError) as exc:
        parse_group_spec("(1 2")
    assert exc.value.offset == 3
    assert "expected point or ')'" in str(exc.value)


@pytest.mark.parametrize("text,offset", [
    ("deg=x; (1 2)", 0),
    ("deg=0; (1 2)", 4),
    ("deg=3; (1 2),,(1 2 3)", 13),
    ("foo", 0),
    ("deg=3; (1 2) x", 13),
])
def test_malformed_specs(text, offset):
    with pytest.raises(SpecParseError) as exc:
        parse_group_spec(text)
    assert exc.value.offset == offset


@pytest.mark.parametrize("text", ["", "   ", "\t"])
def test_blank_spec_rejected(text):
    with pytest.raises(SpecParseError) as exc:
        parse_group_spec(text)
    assert exc.value.offset == 0
    assert exc.value.expected == "group spec"
