"""Finite permutation groups held as explicit element lists.

Elements are ``sympy.combinatorics.Permutation`` objects addressed by their
index in the generated element list; index 0 is always the identity. Products
follow sympy's left-to-right convention: ``g * h`` applies g first, then h.
"""
import logging
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, reduce
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import AlternatingGroup, CyclicGroup, DihedralGroup, SymmetricGroup

from .errors import (
    ElementNotInGroupError,
    GroupTooLargeError,
    InvalidPermutationError,
    SpecParseError,
    UnknownGroupError,
)

logger = logging.getLogger(__name__)

DEFAULT_ELEMENT_CAP = 20_000


# --- Permutations ---

def identity_permutation(degree: int) -> Permutation:
    return Permutation(list(range(degree)))


def permutation_from_images(images: Sequence[int]) -> Permutation:
    images = list(images)
    if sorted(images) != list(range(len(images))):
        raise InvalidPermutationError(f"{images} is not a bijection on 0..{len(images) - 1}")
    return Permutation(images)


def permutation_from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build from 0-based cycles; later cycles are applied after earlier ones."""
    checked = []
    for cycle in cycles:
        cycle = list(cycle)
        if len(set(cycle)) != len(cycle):
            raise InvalidPermutationError(f"cycle {tuple(cycle)} repeats a point")
        if any(p < 0 or p >= degree for p in cycle):
            raise InvalidPermutationError(f"cycle {tuple(cycle)} leaves 0..{degree - 1}")
        if len(cycle) > 1:
            checked.append(cycle)
    return Permutation(checked, size=degree)


def render_permutation(p: Permutation) -> str:
    cycles = p.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


def parse_cycles(text: str, base: int = 0, degree: Optional[int] = None) -> List[List[int]]:
    """Scan whitespace-separated 1-based cycles such as ``(1 2 3)(4 5)``.

    Returns 0-based point lists. Offsets in errors are relative to the
    enclosing string, ``base`` being where ``text`` starts inside it.
    """
    n = len(text)

    def fail(message: str, at: int, expected: str):
        raise SpecParseError(message, base + min(at, max(n - 1, 0)), expected)

    cycles: List[List[int]] = []
    pos = 0
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        if text[pos] != "(":
            fail(f"unexpected {text[pos]!r}", pos, "'('")
        pos += 1
        cycle: List[int] = []
        while True:
            while pos < n and text[pos].isspace():
                pos += 1
            if pos >= n:
                fail("unterminated cycle", pos, "point or ')'")
            if text[pos] == ")":
                pos += 1
                break
            if not text[pos].isdigit():
                fail(f"unexpected {text[pos]!r}", pos, "point or ')'")
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            point = int(text[start:pos])
            if point < 1:
                fail("points are numbered from 1", start, "positive integer")
            if degree is not None and point > degree:
                fail(f"point {point} out of range", start, f"point <= {degree}")
            if point - 1 in cycle:
                fail(f"point {point} repeated in cycle", start, "distinct points")
            cycle.append(point - 1)
        cycles.append(cycle)
    return cycles


def parse_permutation(text: str, degree: Optional[int] = None) -> Permutation:
    cycles = parse_cycles(text, degree=degree)
    if degree is None:
        degree = max((p + 1 for c in cycles for p in c), default=0)
    return permutation_from_cycles(degree, cycles)


# --- Conjugacy classes ---

@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ConjugacyClassSet:
    classes: Tuple[ConjugacyClass, ...]
    class_of: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def __getitem__(self, i: int) -> ConjugacyClass:
        return self.classes[i]

    def __iter__(self):
        return iter(self.classes)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(c.size for c in self.classes)


# --- Groups ---

class FiniteGroup:
    """A permutation group with its full, deterministically ordered element list."""

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: Sequence[Permutation],
        name: Optional[str] = None,
    ):
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.elements: Tuple[Permutation, ...] = tuple(elements)
        self.name = name
        # array forms, so index arithmetic never builds sympy objects
        self._arrays: Tuple[Tuple[int, ...], ...] = tuple(tuple(p.array_form) for p in self.elements)
        self._index: Dict[Tuple[int, ...], int] = {a: i for i, a in enumerate(self._arrays)}
        self.identity = self._index[tuple(range(degree))]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FiniteGroup(name={self.name!r}, degree={self.degree}, order={self.order})"

    # -- element arithmetic by index --

    def index(self, p: Permutation) -> int:
        try:
            return self._index[tuple(p.array_form)]
        except KeyError:
            raise ElementNotInGroupError(f"{render_permutation(p)} is not an element of {self.name or 'the group'}")

    def __contains__(self, p: Permutation) -> bool:
        return tuple(p.array_form) in self._index

    def mul(self, i: int, j: int) -> int:
        h = self._arrays[j]
        return self._index[tuple(h[k] for k in self._arrays[i])]

    @cached_property
    def _inverses(self) -> Tuple[int, ...]:
        return tuple(self._index[tuple((~p).array_form)] for p in self.elements)

    def inv(self, i: int) -> int:
        return self._inverses[i]

    def power(self, i: int, k: int) -> int:
        return self._index[tuple((self.elements[i] ** k).array_form)]

    def conjugate(self, i: int, k: int) -> int:
        """k^-1 g k for g = elements[i], k = elements[k]."""
        return self.mul(self.mul(self.inv(k), i), k)

    def commute(self, i: int, j: int) -> bool:
        return self.mul(i, j) == self.mul(j, i)

    @cached_property
    def element_orders(self) -> Tuple[int, ...]:
        return tuple(int(p.order()) for p in self.elements)

    @cached_property
    def exponent(self) -> int:
        return reduce(lcm, self.element_orders, 1)

    @cached_property
    def is_abelian(self) -> bool:
        gens = [self.index(g) for g in self.generators]
        return all(self.commute(a, b) for a in gens for b in gens)

    def center(self) -> List[int]:
        gens = [self.index(g) for g in self.generators]
        return [i for i in range(self.order) if all(self.commute(i, g) for g in gens)]

    # -- classes --

    @cached_property
    def conjugacy_classes(self) -> ConjugacyClassSet:
        gens = [self.index(g) for g in self.generators]
        owner = [-1] * self.order
        orbits: List[List[int]] = []
        for start in range(self.order):
            if owner[start] >= 0:
                continue
            label = len(orbits)
            owner[start] = label
            orbit = [start]
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for g in gens:
                    y = self.conjugate(x, g)
                    if owner[y] < 0:
                        owner[y] = label
                        orbit.append(y)
                        queue.append(y)
            orbits.append(sorted(orbit))
        orbits.sort(key=lambda o: (self.element_orders[o[0]], len(o), o[0]))
        class_of = [0] * self.order
        for c, orbit in enumerate(orbits):
            for x in orbit:
                class_of[x] = c
        classes = tuple(ConjugacyClass(o[0], tuple(o)) for o in orbits)
        logger.debug(f"{self.name or 'group'}: {len(classes)} conjugacy classes")
        return ConjugacyClassSet(classes, tuple(class_of))

    @cached_property
    def class_names(self) -> Tuple[str, ...]:
        """Element order followed by a letter per class of that order: 1a, 2a, 5a, 5b."""
        seen: Dict[int, int] = {}
        names = []
        for c in self.conjugacy_classes:
            o = self.element_orders[c.representative]
            k = seen.get(o, 0)
            seen[o] = k + 1
            names.append(f"{o}{_letters(k)}")
        return tuple(names)

    def power_map_on_classes(self, ell: int) -> Tuple[int, ...]:
        ell %= self.exponent
        classes = self.conjugacy_classes
        return tuple(classes.class_of[self.power(c.representative, ell)] for c in classes)

    # -- subgroups --

    def subgroup(self, generators: Sequence[int], name: Optional[str] = None) -> "FiniteGroup":
        """Subgroup generated by the given element indices, in breadth-first order."""
        return generate(self.degree, [self.elements[i] for i in generators], cap=self.order, name=name)

    def centralizer(self, i: int) -> "FiniteGroup":
        members = [k for k in range(self.order) if self.commute(i, k)]
        # greedy generating set; members is a subgroup, so the closure ends there
        gens: List[int] = []
        reached = {self.identity}
        for k in members:
            if k in reached:
                continue
            gens.append(k)
            reached = _closure(self, gens)
        return FiniteGroup(
            self.degree,
            [self.elements[k] for k in gens],
            [self.elements[k] for k in members],
            name=f"C({render_permutation(self.elements[i])})",
        )


def _letters(k: int) -> str:
    out = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        out = chr(ord("a") + r) + out
    return out


def _closure(group: FiniteGroup, gens: Sequence[int]) -> set:
    reached = {group.identity}
    queue = deque([group.identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = group.mul(x, g)
            if y not in reached:
                reached.add(y)
                queue.append(y)
    return reached


def generate(
    degree: int,
    generators: Sequence[Permutation],
    cap: Optional[int] = None,
    name: Optional[str] = None,
) -> FiniteGroup:
    """Close the generators under multiplication, breadth-first from the identity."""
    cap = cap or DEFAULT_ELEMENT_CAP
    for g in generators:
        if g.size != degree:
            raise InvalidPermutationError(f"generator {render_permutation(g)} has degree {g.size}, expected {degree}")
    identity = identity_permutation(degree)
    elements = [identity]
    seen = {tuple(identity.array_form)}
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in generators:
            y = x * g
            key = tuple(y.array_form)
            if key not in seen:
                if len(elements) >= cap:
                    raise GroupTooLargeError(f"group exceeds the element cap of {cap}")
                seen.add(key)
                elements.append(y)
    logger.info(f"Generated {name or 'group'} of order {len(elements)} on {degree} points")
    return FiniteGroup(degree, generators, elements, name=name)


# Module-level spellings of the group queries.

def conjugacy_classes(group: FiniteGroup) -> ConjugacyClassSet:
    return group.conjugacy_classes


def centralizer(group: FiniteGroup, g: Permutation) -> FiniteGroup:
    return group.centralizer(group.index(g))


def element_order(g: Permutation) -> int:
    return int(g.order())


def exponent(group: FiniteGroup) -> int:
    return group.exponent


def power_map_on_classes(group: FiniteGroup, ell: int) -> Tuple[int, ...]:
    return group.power_map_on_classes(ell)


# --- Builtins ---

BUILTIN_RANGES = {"S": (1, 7), "A": (1, 7), "Z": (1, 60), "D": (3, 60)}

_FAMILIES = {"S": SymmetricGroup, "A": AlternatingGroup, "Z": CyclicGroup, "D": DihedralGroup}

_BUILTIN_NAME = re.compile(r"^([SAZD])(\d+)$")

# (unit, unit) -> (unit, sign) for the units 1, i, j, k
_QUATERNION = {
    (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
    (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
    (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
}


def _quaternion_right_mult(q: int) -> Permutation:
    # point u + 4*s stands for (-1)^s * unit_u
    images = []
    for point in range(8):
        u, s = point % 4, point // 4
        if u == 0:
            w, t = q, 0
        else:
            w, t = _QUATERNION[(u, q)]
        images.append(w + 4 * ((s + t) % 2))
    return permutation_from_images(images)


def builtin_generators(name: str) -> Tuple[int, List[Permutation]]:
    if name == "Q8":
        return 8, [_quaternion_right_mult(1), _quaternion_right_mult(2)]
    m = _BUILTIN_NAME.match(name)
    if not m:
        raise UnknownGroupError(f"unknown group {name!r}; expected S<k>, A<k>, Z<k>, D<k> or Q8")
    family, k = m.group(1), int(m.group(2))
    low, high = BUILTIN_RANGES[family]
    if not low <= k <= high:
        raise UnknownGroupError(f"{family}{k} is outside the supported range {family}{low}..{family}{high}")
    # sympy builds A1 and A2 on a single point; pad every generator to k points
    return k, [Permutation(g, size=k) for g in _FAMILIES[family](k).generators]


def builtin(name: str, cap: Optional[int] = None) -> FiniteGroup:
    degree, gens = builtin_generators(name)
    return generate(degree, gens, cap=cap, name=name)
