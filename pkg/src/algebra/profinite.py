"""Truncated profinite integers, their action on finite groups, and two explicit coverings.

Profinite objects are only ever held as a residue modulo a caller-chosen N;
every action used here factors through such a finite quotient.

The two covering models list their fibre over a rational base point as exact
cyclotomic numbers. Deck transformations and Galois conjugates of them are
computed as permutations of that fibre and only then matched with the
expected closed forms, which are never trusted on their own.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Sequence, Tuple

from .cyclo import CycNumber, GaloisAut, conjugate, cyc_root, galois_apply
from .errors import (
    InvalidOrderError,
    InvariantViolation,
    ModulusMismatchError,
    NotCoprimeError,
    NotCyclicError,
)
from .permgrp import FiniteGroup

logger = logging.getLogger(__name__)


# --- Z-hat and its units ---

@dataclass(frozen=True)
class TruncatedProfinite:
    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidOrderError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _check(self, other: "TruncatedProfinite"):
        if other.modulus != self.modulus:
            raise ModulusMismatchError(f"moduli {self.modulus} and {other.modulus} differ; truncate first")

    def __add__(self, other: "TruncatedProfinite") -> "TruncatedProfinite":
        self._check(other)
        return TruncatedProfinite(self.modulus, self.residue + other.residue)

    def __neg__(self) -> "TruncatedProfinite":
        return TruncatedProfinite(self.modulus, -self.residue)

    def __mul__(self, other: "TruncatedProfinite") -> "TruncatedProfinite":
        self._check(other)
        return TruncatedProfinite(self.modulus, self.residue * other.residue)

    def truncate(self, m: int) -> "TruncatedProfinite":
        if m < 1 or self.modulus % m:
            raise ModulusMismatchError(f"{m} does not divide {self.modulus}")
        return TruncatedProfinite(m, self.residue)

    def compatible_with(self, other: "TruncatedProfinite") -> bool:
        """Whether both truncations can come from one element of Z-hat."""
        g = gcd(self.modulus, other.modulus)
        return self.residue % g == other.residue % g


@dataclass(frozen=True)
class ProfiniteUnit:
    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidOrderError(f"modulus must be positive, got {self.modulus}")
        if gcd(self.residue, self.modulus) != 1:
            raise NotCoprimeError(f"{self.residue} is not a unit mod {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def __mul__(self, other: "ProfiniteUnit") -> "ProfiniteUnit":
        if other.modulus != self.modulus:
            raise ModulusMismatchError(f"moduli {self.modulus} and {other.modulus} differ; truncate first")
        return ProfiniteUnit(self.modulus, self.residue * other.residue)

    def inverse(self) -> "ProfiniteUnit":
        if self.modulus == 1:
            return self
        return ProfiniteUnit(self.modulus, pow(self.residue, -1, self.modulus))

    def truncate(self, m: int) -> "ProfiniteUnit":
        if m < 1 or self.modulus % m:
            raise ModulusMismatchError(f"{m} does not divide {self.modulus}")
        return ProfiniteUnit(m, self.residue)

    def as_profinite(self) -> TruncatedProfinite:
        return TruncatedProfinite(self.modulus, self.residue)


def cyclotomic_character(s: GaloisAut) -> ProfiniteUnit:
    """The unit by which sigma raises every n-th root of unity."""
    return ProfiniteUnit(s.order, s.ell)


# --- Hom(Z-hat, G) ---

@dataclass(frozen=True)
class ContinuousHom:
    """The homomorphism Z-hat -> G sending 1 to ``image``."""

    group: FiniteGroup = field(repr=False, compare=False)
    image: int

    def evaluate(self, k: TruncatedProfinite) -> int:
        o = self.group.element_orders[self.image]
        if k.modulus % o:
            raise ModulusMismatchError(f"truncation mod {k.modulus} does not determine a power of an element of order {o}")
        return self.group.power(self.image, k.residue)


def hom_count(group: FiniteGroup) -> Tuple[int, Tuple[ContinuousHom, ...]]:
    homs = tuple(ContinuousHom(group, g) for g in range(group.order))
    return len(homs), homs


def profinite_act_on_group(u: ProfiniteUnit, group: FiniteGroup, g: int) -> int:
    """g -> g^u, defined once the exponent of G divides the truncation modulus."""
    if u.modulus % group.exponent:
        raise ModulusMismatchError(f"exponent {group.exponent} does not divide modulus {u.modulus}")
    return group.power(g, u.residue)


def induced_class_permutation(u: ProfiniteUnit, group: FiniteGroup) -> Tuple[int, ...]:
    classes = group.conjugacy_classes
    return tuple(classes.class_of[profinite_act_on_group(u, group, c.representative)] for c in classes)


def tuple_galois_action(u: ProfiniteUnit, group: FiniteGroup, elements: Sequence[int]) -> Tuple[int, ...]:
    """(g_1, ..., g_m) -> (g_1^l, ..., g_m^l) when the g_i generate a cyclic subgroup."""
    sub = group.subgroup(list(elements))
    if not any(o == sub.order for o in sub.element_orders):
        raise NotCyclicError(
            f"the tuple generates a non-cyclic subgroup of order {sub.order}; "
            "only the power-map action on cyclic subgroups is computed"
        )
    if u.modulus % sub.exponent:
        raise ModulusMismatchError(f"exponent {sub.exponent} does not divide modulus {u.modulus}")
    return tuple(group.power(g, u.residue) for g in elements)


# --- Coverings ---

class CoverKind(str, Enum):
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"


@dataclass(frozen=True)
class DeckTransformation:
    kind: CoverKind
    n: int
    k: int
    eps: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", CoverKind(self.kind))
        if self.n < 1:
            raise InvalidOrderError(f"cover degree parameter must be positive, got {self.n}")
        if self.eps not in (1, -1) or (self.kind is CoverKind.CYCLIC and self.eps != 1):
            raise InvariantViolation(f"eps={self.eps} is not allowed for a {self.kind.value} cover")
        object.__setattr__(self, "k", self.k % self.n)

    def compose(self, other: "DeckTransformation") -> "DeckTransformation":
        """self o other: apply other first."""
        return DeckTransformation(self.kind, self.n, self.eps * other.k + self.k, self.eps * other.eps)

    def power(self, m: int) -> "DeckTransformation":
        result = DeckTransformation(self.kind, self.n, 0)
        for _ in range(m % (2 * self.n)):
            result = result.compose(self)
        return result

    def __str__(self) -> str:
        if self.kind is CoverKind.CYCLIC:
            return f"gamma_{self.k}"
        return f"({self.eps},{self.k})"


Point = Tuple[CycNumber, ...]


class CoveringModel:
    """A finite fibre with its deck group, both checked on construction."""

    kind: CoverKind

    def __init__(self, n: int, field_order: int, labels: Sequence[int], fiber: Sequence[Point],
                 deck: Sequence[DeckTransformation]):
        self.n = n
        self.field_order = field_order
        self.labels: Tuple[int, ...] = tuple(labels)
        self.fiber: Tuple[Point, ...] = tuple(fiber)
        self.deck: Tuple[DeckTransformation, ...] = tuple(deck)
        self._index: Dict[Point, int] = {p: i for i, p in enumerate(self.fiber)}
        self.permutations: Dict[DeckTransformation, Tuple[int, ...]] = {
            gamma: tuple(self.point_index(self.apply(gamma, p)) for p in self.fiber) for gamma in self.deck
        }
        self._by_permutation = {perm: gamma for gamma, perm in self.permutations.items()}
        self._verify_deck_group()

    def apply(self, gamma: DeckTransformation, point: Point) -> Point:
        raise NotImplementedError

    def point_index(self, point: Point) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise InvariantViolation(f"{tuple(str(c) for c in point)} is not a fibre point")

    def identify(self, perm: Sequence[int]) -> DeckTransformation:
        gamma = self._by_permutation.get(tuple(perm))
        if gamma is None:
            raise InvariantViolation(f"fibre permutation {tuple(perm)} is not a deck transformation")
        return gamma

    def galois_permutation(self, s: GaloisAut) -> Tuple[int, ...]:
        return tuple(self.point_index(tuple(galois_apply(s, c) for c in p)) for p in self.fiber)

    def galois_conjugate(self, s: GaloisAut, gamma: DeckTransformation) -> DeckTransformation:
        """sigma o gamma o sigma^-1, read off the fibre."""
        sigma = self.galois_permutation(s)
        sigma_inv = self.galois_permutation(s.inverse())
        g = self.permutations[gamma]
        return self.identify(tuple(sigma[g[sigma_inv[i]]] for i in range(len(self.fiber))))

    def multiplication_table(self) -> Tuple[Tuple[int, ...], ...]:
        """Entry [i][j] is the index of deck[i] o deck[j]."""
        position = {gamma: i for i, gamma in enumerate(self.deck)}
        table = []
        for a in self.deck:
            pa = self.permutations[a]
            row = []
            for b in self.deck:
                pb = self.permutations[b]
                row.append(position[self.identify(tuple(pa[pb[i]] for i in range(len(self.fiber))))])
            table.append(tuple(row))
        return tuple(table)

    def _verify_deck_group(self):
        size = len(self.fiber)
        if len(self.deck) != size:
            raise InvariantViolation(f"{len(self.deck)} deck maps for {size} fibre points")
        if len(self._by_permutation) != size:
            raise InvariantViolation("two deck transformations act identically on the fibre")
        # closure, and agreement of the fibre product with the formula
        for a in self.deck:
            for b in self.deck:
                pa, pb = self.permutations[a], self.permutations[b]
                product = self.identify(tuple(pa[pb[i]] for i in range(size)))
                if product != a.compose(b):
                    raise InvariantViolation(f"{a} o {b} acts as {product}, expected {a.compose(b)}")
        # free and transitive: the orbit map of the first point is a bijection
        images = sorted(self.permutations[g][0] for g in self.deck)
        if images != list(range(size)):
            raise InvariantViolation("deck group is not simply transitive on the fibre")


class CyclicCover(CoveringModel):
    """Y_n = {x_1^n x_2 = 1}, fibre over (1, 1) with deck maps gamma_k: x_1 -> xi_n^k x_1."""

    kind = CoverKind.CYCLIC

    def __init__(self, n: int):
        if n < 1:
            raise InvalidOrderError(f"cover parameter must be positive, got {n}")
        one = CycNumber.one(n)
        fiber = [(cyc_root(n, j), one) for j in range(n)]
        for x1, x2 in fiber:
            if x1 ** n * x2 != one:
                raise InvariantViolation(f"{x1} does not lie on x_1^{n} x_2 = 1")
        deck = [DeckTransformation(CoverKind.CYCLIC, n, k) for k in range(n)]
        super().__init__(n, n, range(n), fiber, deck)
        generator = DeckTransformation(CoverKind.CYCLIC, n, 1)
        if n > 1 and any(generator.power(m).k == 0 for m in range(1, n)):
            raise InvariantViolation(f"gamma_1 does not have order {n}")
        logger.info(f"Cyclic cover n={n}: {n} fibre points verified")

    def apply(self, gamma: DeckTransformation, point: Point) -> Point:
        x1, x2 = point
        return cyc_root(self.n, gamma.k) * x1, x2


def dihedral_f(n: int, x: CycNumber) -> CycNumber:
    """f(x) = (2 - x^n - x^-n) / 4."""
    return (2 - x ** n - x ** (-n)) * Fraction(1, 4)


class DihedralCover(CoveringModel):
    """The degree-2n cover f(x) = (2 - x^n - x^-n)/4 over the point 1/2."""

    kind = CoverKind.DIHEDRAL

    def __init__(self, n: int):
        if n < 1:
            raise InvalidOrderError(f"cover parameter must be positive, got {n}")
        m = 4 * n
        labels = [j for j in range(-2 * n + 1, 2 * n + 1) if j % 2]
        fiber = [(cyc_root(m, j),) for j in labels]
        half = CycNumber.rational(m, Fraction(1, 2))
        one = CycNumber.one(m)
        self.f_values: Dict[Point, CycNumber] = {}
        for (x,) in fiber:
            if x * conjugate(x) != one:
                raise InvariantViolation(f"{x} is not on the unit circle")
            value = dihedral_f(n, x)
            if value != half:
                raise InvariantViolation(f"f({x}) = {value}, expected 1/2")
            self.f_values[(x,)] = value
        deck = [DeckTransformation(CoverKind.DIHEDRAL, n, k, eps) for eps in (1, -1) for k in range(n)]
        super().__init__(n, m, labels, fiber, deck)
        for gamma, perm in self.permutations.items():
            for i, j in enumerate(perm):
                if self.f_values[self.fiber[j]] != self.f_values[self.fiber[i]]:
                    raise InvariantViolation(f"{gamma} does not preserve f at fibre point {self.labels[i]}")
        self._verify_dihedral_relations()
        logger.info(f"Dihedral cover n={n}: {len(fiber)} fibre points, f = 1/2 verified")

    def apply(self, gamma: DeckTransformation, point: Point) -> Point:
        (x,) = point
        # on the unit circle x^-1 = conj(x)
        base = x if gamma.eps == 1 else conjugate(x)
        return (base * cyc_root(self.field_order, 4 * gamma.k),)

    def _verify_dihedral_relations(self):
        n = self.n
        rotation = DeckTransformation(CoverKind.DIHEDRAL, n, 1, 1)
        reflection = DeckTransformation(CoverKind.DIHEDRAL, n, 0, -1)
        identity = DeckTransformation(CoverKind.DIHEDRAL, n, 0, 1)
        if self.identify(self._power_perm(rotation, n)) != identity:
            raise InvariantViolation(f"(1,1)^{n} is not the identity")
        if any(self.identify(self._power_perm(rotation, m)) == identity for m in range(1, n)):
            raise InvariantViolation(f"(1,1) has order smaller than {n}")
        if self.identify(self._power_perm(reflection, 2)) != identity:
            raise InvariantViolation("(-1,0) is not an involution")
        s, r = self.permutations[reflection], self.permutations[rotation]
        srs = self.identify(tuple(s[r[s[i]]] for i in range(len(self.fiber))))
        if srs != DeckTransformation(CoverKind.DIHEDRAL, n, -1, 1):
            raise InvariantViolation("reflection does not invert the rotation")

    def _power_perm(self, gamma: DeckTransformation, m: int) -> Tuple[int, ...]:
        perm = tuple(range(len(self.fiber)))
        g = self.permutations[gamma]
        for _ in range(m):
            perm = tuple(g[perm[i]] for i in range(len(perm)))
        return perm


@lru_cache(maxsize=64)
def cyclic_cover(n: int) -> CyclicCover:
    return CyclicCover(n)


@lru_cache(maxsize=64)
def dihedral_cover(n: int) -> DihedralCover:
    return DihedralCover(n)


def galois_on_cyclic_deck(n: int, ell: int, gamma: DeckTransformation) -> DeckTransformation:
    cover = cyclic_cover(n)
    s = GaloisAut(n, ell)
    result = cover.galois_conjugate(s, gamma)
    expected = DeckTransformation(CoverKind.CYCLIC, n, s.ell * gamma.k)
    if result != expected:
        raise InvariantViolation(f"sigma_{ell} conjugates {gamma} to {result}, expected {expected}")
    return result


def galois_on_dihedral_deck(n: int, ell: int, gamma: DeckTransformation) -> DeckTransformation:
    cover = dihedral_cover(n)
    s = GaloisAut(4 * n, ell)
    result = cover.galois_conjugate(s, gamma)
    expected = DeckTransformation(CoverKind.DIHEDRAL, n, ell * gamma.k, gamma.eps)
    if result != expected:
        raise InvariantViolation(f"sigma_{ell} conjugates {gamma} to {result}, expected {expected}")
    return result


@dataclass(frozen=True)
class ActionRow:
    deck: DeckTransformation
    covering_image: DeckTransformation
    power_image: DeckTransformation

    @property
    def differs(self) -> bool:
        return self.covering_image != self.power_image


@dataclass(frozen=True)
class ActionComparison:
    n: int
    ell: int
    rows: Tuple[ActionRow, ...]

    @property
    def differences(self) -> Tuple[ActionRow, ...]:
        return tuple(r for r in self.rows if r.differs)


def compare_actions_on_dihedral(n: int, ell: int) -> ActionComparison:
    """Covering action (eps,k) -> (eps, l k) against the power map gamma -> gamma^l."""
    cover = dihedral_cover(n)
    rows = [
        ActionRow(gamma, galois_on_dihedral_deck(n, ell, gamma), gamma.power(ell))
        for gamma in cover.deck
    ]
    return ActionComparison(n, ell, tuple(rows))
