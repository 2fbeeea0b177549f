"""The two actions of Gal(Q[xi_n]/Q) on a character table and their compatibility.

sigma_l moves rows by acting on entries, and moves columns by g -> g^l. The
compatibility identity checked here is

    sigma_l(T[rho][c]) = T[row_l(rho)][c] = T[rho][col_l(c)]

for every row rho and class c.
"""
import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .chartab import CharacterTable, inner_product
from .cyclo import GaloisAut, galois_apply, galois_group, phi
from .errors import CorruptTableError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaloisTableAction:
    table: CharacterTable = field(repr=False, compare=False)
    ell: int
    row_perm: Tuple[int, ...]
    col_perm: Tuple[int, ...]


@dataclass(frozen=True)
class CompatibilityWitness:
    row: int
    col: Optional[int]
    ell: int
    reason: str


@dataclass(frozen=True)
class CompatibilityResult:
    ell: int
    compatible: bool
    witness: Optional[CompatibilityWitness] = None

    def __bool__(self) -> bool:
        return self.compatible


def _aut(table: CharacterTable, ell: int) -> GaloisAut:
    return GaloisAut(table.field_order, ell)


def row_action(table: CharacterTable, ell: int) -> Tuple[int, ...]:
    s = _aut(table, ell)
    lookup = {row: i for i, row in enumerate(table.rows)}
    perm = []
    for i, row in enumerate(table.rows):
        image = tuple(galois_apply(s, x) for x in row)
        j = lookup.get(image)
        if j is None:
            raise CorruptTableError(f"sigma_{s.ell} sends row {i} outside the table")
        perm.append(j)
    if len(set(perm)) != len(perm):
        raise CorruptTableError(f"sigma_{s.ell} does not permute the rows")
    return tuple(perm)


def column_action(table: CharacterTable, ell: int) -> Tuple[int, ...]:
    s = _aut(table, ell)
    return table.group.power_map_on_classes(s.ell)


def galois_action(table: CharacterTable, ell: int) -> GaloisTableAction:
    s = _aut(table, ell)
    return GaloisTableAction(table, s.ell, row_action(table, s.ell), column_action(table, s.ell))


def _orthonormality_witness(table: CharacterTable, ell: int) -> Optional[CompatibilityWitness]:
    r = len(table.rows)
    for i in range(r):
        for j in range(i, r):
            value = inner_product(table, i, j)
            expected = 1 if i == j else 0
            if not (value.is_rational() and value.coeffs[0] == expected):
                return CompatibilityWitness(i, None, ell, f"row {i} is not orthonormal to row {j}")
    return None


def verify_compatibility(table: CharacterTable, ell: int) -> CompatibilityResult:
    """Check that every row is an irreducible character, then the entrywise identity."""
    s = _aut(table, ell)
    witness = _orthonormality_witness(table, s.ell)
    if witness is not None:
        return CompatibilityResult(s.ell, False, witness)

    col_perm = table.group.power_map_on_classes(s.ell)
    for rho, row in enumerate(table.rows):
        for c, x in enumerate(row):
            if galois_apply(s, x) != row[col_perm[c]]:
                return CompatibilityResult(
                    s.ell, False, CompatibilityWitness(rho, c, s.ell, "sigma(T[rho][c]) != T[rho][c^ell]")
                )

    lookup = {row: i for i, row in enumerate(table.rows)}
    for rho, row in enumerate(table.rows):
        image = tuple(galois_apply(s, x) for x in row)
        if image not in lookup:
            return CompatibilityResult(s.ell, False, CompatibilityWitness(rho, None, s.ell, "sigma(row) is not a row"))
    return CompatibilityResult(s.ell, True)


def fixed_point_counts(table: CharacterTable, ell: int) -> Tuple[int, int]:
    rows = row_action(table, ell)
    cols = column_action(table, ell)
    return sum(1 for i, j in enumerate(rows) if i == j), sum(1 for i, j in enumerate(cols) if i == j)


# --- Orbits ---

@dataclass(frozen=True)
class RowField:
    row: int
    stabilizer: Tuple[int, ...]
    degree: int
    conductor: int


@dataclass(frozen=True)
class GaloisOrbits:
    row_orbits: Tuple[Tuple[int, ...], ...]
    column_orbits: Tuple[Tuple[int, ...], ...]
    row_fields: Tuple[RowField, ...]


def _orbits(size: int, perms: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    owner = list(range(size))

    def find(x: int) -> int:
        while owner[x] != x:
            owner[x] = owner[owner[x]]
            x = owner[x]
        return x

    for perm in perms:
        for i, j in enumerate(perm):
            a, b = find(i), find(j)
            if a != b:
                owner[max(a, b)] = min(a, b)
    groups: Dict[int, List[int]] = {}
    for i in range(size):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(g) for _, g in sorted(groups.items()))


def _conductor(n: int, stabilizer: Sequence[int]) -> int:
    fixed = set(stabilizer)
    for m in range(1, n + 1):
        if n % m:
            continue
        if all(ell in fixed for ell in range(1, n + 1) if gcd(ell, n) == 1 and ell % m == 1 % m):
            return m
    return n


def galois_orbits(table: CharacterTable) -> GaloisOrbits:
    n = table.field_order
    ells = [s.ell for s in galois_group(n)]
    row_perms = {ell: row_action(table, ell) for ell in ells}
    col_perms = [column_action(table, ell) for ell in ells]

    fields = []
    for i in range(len(table.rows)):
        stabilizer = tuple(ell for ell in ells if row_perms[ell][i] == i)
        fields.append(RowField(i, stabilizer, phi(n) // len(stabilizer), _conductor(n, stabilizer)))

    orbits = GaloisOrbits(
        _orbits(len(table.rows), list(row_perms.values())),
        _orbits(len(table.classes), col_perms),
        tuple(fields),
    )
    logger.debug(f"{len(orbits.row_orbits)} row orbits, {len(orbits.column_orbits)} column orbits")
    return orbits
