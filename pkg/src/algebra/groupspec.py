"""Textual group specifications: a builtin name (``A5``, ``D4``, ``Q8``) or generators
in 1-based cycle notation, ``deg=3; (1 2),(1 2 3)``.
"""
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import SpecParseError
from .permgrp import FiniteGroup, builtin, generate, parse_cycles, permutation_from_cycles

Cycles = Tuple[Tuple[int, ...], ...]

_BUILTIN = re.compile(r"^(?:[SAZD]\d+|Q8)$")
_DEGREE = re.compile(r"\s*deg\s*=\s*(\d+)\s*;")


@dataclass(frozen=True)
class GroupSpec:
    builtin: Optional[str] = None
    degree: Optional[int] = None
    generators: Tuple[Cycles, ...] = ()

    @property
    def is_builtin(self) -> bool:
        return self.builtin is not None


def parse_group_spec(text: str) -> GroupSpec:
    stripped = text.strip()
    if not stripped:
        raise SpecParseError("empty input", 0, "group spec")
    if _BUILTIN.match(stripped):
        return GroupSpec(builtin=stripped)

    degree: Optional[int] = None
    pos = 0
    m = _DEGREE.match(text)
    if m:
        degree = int(m.group(1))
        if degree < 1:
            raise SpecParseError("degree must be positive", m.start(1), "positive integer")
        pos = m.end()
    elif text.lstrip().startswith("deg"):
        raise SpecParseError("malformed degree prefix", text.index("deg"), "'deg=<n>;'")
    elif stripped and stripped[0] != "(":
        raise SpecParseError(f"unknown group {stripped!r}", len(text) - len(text.lstrip()),
                             "S<k>, A<k>, Z<k>, D<k>, Q8 or a cycle list")

    generators: List[Cycles] = []
    if text[pos:].strip():
        for chunk, start in _split_generators(text, pos):
            if not chunk.strip():
                raise SpecParseError("empty generator", start, "cycle list")
            cycles = parse_cycles(chunk, base=start, degree=degree)
            generators.append(tuple(tuple(c) for c in cycles))
    if degree is None:
        degree = max((p + 1 for g in generators for c in g for p in c), default=1)
    return GroupSpec(degree=degree, generators=tuple(generators))


def _split_generators(text: str, pos: int) -> List[Tuple[str, int]]:
    chunks = []
    start = pos
    for i in range(pos, len(text)):
        if text[i] == ",":
            chunks.append((text[start:i], start))
            start = i + 1
    chunks.append((text[start:], start))
    return chunks


def render_group_spec(spec: GroupSpec) -> str:
    if spec.is_builtin:
        return spec.builtin
    gens = ",".join(
        "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in g) for g in spec.generators
    )
    return f"deg={spec.degree}; {gens}" if gens else f"deg={spec.degree};"


def build_group(spec: GroupSpec, cap: Optional[int] = None) -> FiniteGroup:
    if spec.is_builtin:
        return builtin(spec.builtin, cap=cap)
    perms = [permutation_from_cycles(spec.degree, g) for g in spec.generators]
    return generate(spec.degree, perms, cap=cap, name=render_group_spec(spec))
