"""Commuting pairs up to simultaneous conjugation and the SL2(Z) and B3 actions on them.

Group elements are indices into ``FiniteGroup.elements``. Products written
``gh`` below are ``group.mul(g, h)``.
"""
import logging
import re
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations_with_replacement
from typing import Dict, List, Sequence, Tuple

from .errors import GroupTooLargeError, InvalidParameterError, InvariantViolation, SpecParseError
from .permgrp import FiniteGroup

logger = logging.getLogger(__name__)

DEFAULT_PAIR_CAP = 2_000
DEFAULT_TUPLE_CAP = 250_000

Pair = Tuple[int, int]
Triple = Tuple[int, int, int]


# --- SL2(Z) ---

@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise InvalidParameterError(f"({self.a} {self.b}; {self.c} {self.d}) has determinant != 1")

    def __matmul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2Matrix":
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    def __str__(self) -> str:
        return f"({self.a} {self.b}; {self.c} {self.d})"


IDENTITY = SL2Matrix(1, 0, 0, 1)
T = SL2Matrix(1, 1, 0, 1)
L = SL2Matrix(1, 0, -1, 1)
S = SL2Matrix(0, 1, -1, 0)


def sl2_act(group: FiniteGroup, m: SL2Matrix, pair: Pair) -> Pair:
    """(g, h) . (a b; c d) = (g^a h^c, g^b h^d), a right action on commuting pairs."""
    g, h = pair
    return (
        group.mul(group.power(g, m.a), group.power(h, m.c)),
        group.mul(group.power(g, m.b), group.power(h, m.d)),
    )


# --- Braid words ---

class BraidLetter(str, Enum):
    S1 = "s1"
    S2 = "s2"
    S1_INV = "s1^-1"
    S2_INV = "s2^-1"

    def inverse(self) -> "BraidLetter":
        return {
            BraidLetter.S1: BraidLetter.S1_INV,
            BraidLetter.S1_INV: BraidLetter.S1,
            BraidLetter.S2: BraidLetter.S2_INV,
            BraidLetter.S2_INV: BraidLetter.S2,
        }[self]


@dataclass(frozen=True)
class BraidWord:
    letters: Tuple[BraidLetter, ...] = ()

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(x.inverse() for x in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(x.value for x in self.letters) if self.letters else "e"


SIGMA1 = BraidWord((BraidLetter.S1,))
SIGMA2 = BraidWord((BraidLetter.S2,))

_LETTER = re.compile(r"s([12])(\^-1)?")


def braid_word(text: str) -> BraidWord:
    """Parse words like ``s1 s2 s1^-1``; ``""`` and ``e`` are the empty word."""
    if text.strip() in ("", "e"):
        return BraidWord()
    letters: List[BraidLetter] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _LETTER.match(text, pos)
        if m is None:
            raise SpecParseError(f"unexpected {text[pos]!r}", pos, "s1, s2, s1^-1 or s2^-1")
        letters.append(BraidLetter(m.group(0)))
        pos = m.end()
    return BraidWord(tuple(letters))


def center_element() -> BraidWord:
    """(s1 s2)^3, generating the centre of B3."""
    return (SIGMA1 * SIGMA2) ** 3


def center_square() -> BraidWord:
    return center_element() ** 2


def _pair_step(group: FiniteGroup, letter: BraidLetter, pair: Pair) -> Pair:
    g, h = pair
    if letter is BraidLetter.S1:
        return g, group.mul(g, h)
    if letter is BraidLetter.S2:
        return group.mul(g, group.inv(h)), h
    if letter is BraidLetter.S1_INV:
        return g, group.mul(group.inv(g), h)
    return group.mul(g, h), h


def _triple_step(group: FiniteGroup, letter: BraidLetter, triple: Triple) -> Triple:
    x, y, z = triple
    mul, inv = group.mul, group.inv
    if letter is BraidLetter.S1:
        return mul(mul(x, y), inv(x)), x, z
    if letter is BraidLetter.S2:
        return x, mul(mul(y, z), inv(y)), y
    if letter is BraidLetter.S1_INV:
        return y, mul(mul(inv(y), x), y), z
    return x, z, mul(mul(inv(z), y), z)


def braid_act_pair(group: FiniteGroup, word: BraidWord, pair: Pair) -> Pair:
    for letter in word.letters:
        pair = _pair_step(group, letter, pair)
    return pair


def braid_act_triple(group: FiniteGroup, word: BraidWord, triple: Triple) -> Triple:
    for letter in word.letters:
        triple = _triple_step(group, letter, triple)
    return triple


def collapse(group: FiniteGroup, triple: Triple) -> Pair:
    g1, g2, g3 = triple
    return group.mul(g1, group.inv(g2)), group.mul(g2, group.inv(g3))


@dataclass(frozen=True)
class EquivarianceCheck:
    collapsed_then_acted: Pair
    acted_then_collapsed: Pair

    @property
    def equal(self) -> bool:
        return self.collapsed_then_acted == self.acted_then_collapsed


def collapse_equivariance(group: FiniteGroup, word: BraidWord, triple: Triple) -> EquivarianceCheck:
    """Both sides of collapse(t . w) =? collapse(t) . w."""
    return EquivarianceCheck(
        collapsed_then_acted=braid_act_pair(group, word, collapse(group, triple)),
        acted_then_collapsed=collapse(group, braid_act_triple(group, word, triple)),
    )


def simultaneously_conjugate(group: FiniteGroup, first: Sequence[int], second: Sequence[int]) -> bool:
    """True iff some k has k^-1 first[i] k = second[i] for every i."""
    return any(
        all(group.conjugate(x, k) == y for x, y in zip(first, second)) for k in range(group.order)
    )


def braid_orbit(group: FiniteGroup, pair: Pair) -> Tuple[Pair, ...]:
    """Orbit of an arbitrary pair under B3, breadth-first."""
    seen = {pair}
    order = [pair]
    queue = deque([pair])
    while queue:
        current = queue.popleft()
        for letter in BraidLetter:
            image = _pair_step(group, letter, current)
            if image not in seen:
                seen.add(image)
                order.append(image)
                queue.append(image)
    return tuple(order)


# --- Pair classes ---

@dataclass(frozen=True)
class PairClass:
    representative: Pair
    members: Tuple[Pair, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class PairClassSet:
    group: FiniteGroup = field(repr=False, compare=False)
    classes: Tuple[PairClass, ...]
    class_of: Dict[Pair, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.classes)


def centralizer_class_sum(group: FiniteGroup) -> int:
    """Number of commuting-pair classes predicted by summing k(C(g)) over class representatives."""
    return sum(len(group.centralizer(c.representative).conjugacy_classes) for c in group.conjugacy_classes)


def pair_classes(group: FiniteGroup, cap: int = DEFAULT_PAIR_CAP) -> PairClassSet:
    if group.order > cap:
        raise GroupTooLargeError(f"pair classification is capped at |G| <= {cap}, got {group.order}")
    gens = [group.index(g) for g in group.generators]
    commuting = [(g, h) for g in range(group.order) for h in range(group.order) if group.commute(g, h)]

    class_of: Dict[Pair, int] = {}
    classes: List[PairClass] = []
    for start in commuting:
        if start in class_of:
            continue
        label = len(classes)
        class_of[start] = label
        members = [start]
        queue = deque([start])
        while queue:
            g, h = queue.popleft()
            for k in gens:
                image = (group.conjugate(g, k), group.conjugate(h, k))
                if image not in class_of:
                    class_of[image] = label
                    members.append(image)
                    queue.append(image)
        members.sort()
        classes.append(PairClass(members[0], tuple(members)))

    expected = centralizer_class_sum(group)
    if expected != len(classes):
        raise InvariantViolation(f"found {len(classes)} pair classes, centralizer sum gives {expected}")
    logger.info(f"{group.name or 'group'}: {len(commuting)} commuting pairs in {len(classes)} classes")
    return PairClassSet(group, tuple(classes), class_of)


@dataclass(frozen=True)
class SL2Orbits:
    orbits: Tuple[Tuple[int, ...], ...]
    orbit_of: Tuple[int, ...]


def sl2_orbits(pairs: PairClassSet) -> SL2Orbits:
    """Orbits of the pair classes under the generators T = (1 1; 0 1) and L = (1 0; -1 1)."""
    group = pairs.group
    orbit_of = [-1] * len(pairs)
    orbits = []
    for start in range(len(pairs)):
        if orbit_of[start] >= 0:
            continue
        label = len(orbits)
        orbit_of[start] = label
        members = [start]
        queue = deque([start])
        while queue:
            c = queue.popleft()
            rep = pairs.classes[c].representative
            for m in (T, L):
                image = pairs.class_of[sl2_act(group, m, rep)]
                if orbit_of[image] < 0:
                    orbit_of[image] = label
                    members.append(image)
                    queue.append(image)
        orbits.append(tuple(sorted(members)))
    return SL2Orbits(tuple(orbits), tuple(orbit_of))


def center_acts_trivially(pairs: PairClassSet) -> bool:
    word = center_square()
    return all(
        pairs.class_of[braid_act_pair(pairs.group, word, c.representative)] == i
        for i, c in enumerate(pairs.classes)
    )


# --- n-tuples ---

def tuple_classes(group: FiniteGroup, n: int, cap: int = DEFAULT_TUPLE_CAP) -> int:
    """Orbits of G^n under simultaneous conjugation and permutation of the coordinates."""
    if n < 1:
        raise InvalidParameterError(f"tuple length must be positive, got {n}")
    if group.order ** n > cap:
        raise GroupTooLargeError(f"|G|^n = {group.order}^{n} exceeds the tuple cap of {cap}")
    gens = [group.index(g) for g in group.generators]
    seen = set()
    count = 0
    # a multiset of coordinates is a sorted tuple; S_n is absorbed by sorting
    for start in combinations_with_replacement(range(group.order), n):
        if start in seen:
            continue
        count += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for k in gens:
                image = tuple(sorted(group.conjugate(x, k) for x in current))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
    logger.info(f"{group.name or 'group'}: {count} classes of {n}-tuples")
    return count
