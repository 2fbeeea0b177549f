"""Character tables by the Dixon-Burnside method, with exact entries in Q[xi_n].

The class multiplication matrices are diagonalised simultaneously over GF(p)
for a prime p = 1 (mod n), n the group exponent. Each common eigenvector gives
the central character of one irreducible; its values mod p are then lifted to
exact cyclotomic integers through the eigenvalue multiplicities of each class
representative.
"""
import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Dict, List, Optional, Tuple

from sympy import FiniteField, Poly, Symbol, nextprime, primitive_root, sqrt_mod
from sympy.polys.matrices import DomainMatrix

from .cyclo import CycClass, CycNumber, classify, conjugate, render_cyc
from .errors import CorruptTableError, DixonError, PrimeSearchError
from .permgrp import ConjugacyClassSet, FiniteGroup

logger = logging.getLogger(__name__)

DEFAULT_PRIME_LIMIT = 1_000_000

_X = Symbol("x")

Row = Tuple[CycNumber, ...]


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: FiniteGroup
    classes: ConjugacyClassSet
    field_order: int
    rows: Tuple[Row, ...]
    prime: int = 0

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(_degree(row) for row in self.rows)

    @property
    def class_names(self) -> Tuple[str, ...]:
        return self.group.class_names

    def row_names(self) -> Tuple[str, ...]:
        """ch<degree>, with a prime for every earlier row of the same degree."""
        seen: Dict[str, int] = {}
        names = []
        for row in self.rows:
            base = f"ch{_degree(row)}"
            k = seen.get(base, 0)
            seen[base] = k + 1
            names.append(base + "'" * k)
        return tuple(names)

    @cached_property
    def conjugate_rows(self) -> Tuple[Row, ...]:
        return tuple(tuple(conjugate(x) for x in row) for row in self.rows)

    def replace_entry(self, row: int, column: int, value: CycNumber) -> "CharacterTable":
        """Copy of the table with one entry overwritten; used to inject faults."""
        rows = list(self.rows)
        changed = list(rows[row])
        changed[column] = value
        rows[row] = tuple(changed)
        return replace(self, rows=tuple(rows))


def _degree(row: Row) -> int:
    value = row[0].coeffs[0] if row[0].is_rational() else 0
    return int(value) if value.denominator == 1 else 0


def inner_product(table: CharacterTable, i: int, j: int) -> CycNumber:
    """(1/|G|) * sum over classes of |K| chi_i(K) conj(chi_j(K))."""
    n = table.field_order
    total = CycNumber.zero(n)
    for k, size in enumerate(table.classes.sizes):
        total = total + table.rows[i][k] * table.conjugate_rows[j][k] * size
    return total * (1 / Fraction(table.group.order))


# --------------------------
# Modular stage
# --------------------------

def dixon_prime(order: int, exponent: int, limit: int = DEFAULT_PRIME_LIMIT) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2*sqrt(order)."""
    p = int(nextprime(2 * isqrt(order)))
    while p <= limit:
        if p * p > 4 * order and p % exponent == 1 % exponent:
            return p
        p = int(nextprime(p))
    raise PrimeSearchError(f"no prime = 1 (mod {exponent}) above 2*sqrt({order}) below {limit}")


class _ClassMatrices:
    """M_r[s][t] = #{x in K_r : x^-1 z_t in K_s}; computed on demand."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.classes = group.conjugacy_classes
        self._cache: Dict[int, List[List[int]]] = {}

    def __getitem__(self, r: int) -> List[List[int]]:
        if r not in self._cache:
            g = self.group
            c = len(self.classes)
            m = [[0] * c for _ in range(c)]
            for x in self.classes[r].members:
                x_inv = g.inv(x)
                for t, cls in enumerate(self.classes):
                    s = self.classes.class_of[g.mul(x_inv, cls.representative)]
                    m[s][t] += 1
            self._cache[r] = m
        return self._cache[r]


def _to_ints(dm: DomainMatrix, p: int) -> List[List[int]]:
    return [[int(x) % p for x in row] for row in dm.to_list()]


def _rref(rows: List[List[int]], p: int, fp) -> Tuple[List[List[int]], Tuple[int, ...]]:
    reduced, pivots = DomainMatrix.from_list(rows, fp).rref()
    out = _to_ints(reduced, p)
    return out[:len(pivots)], tuple(pivots)


def _eigenspaces(b: List[List[int]], p: int, fp) -> List[List[List[int]]]:
    """Row bases of the eigenspaces {c : B c = lambda c} of B over GF(p)."""
    k = len(b)
    charpoly = Poly(DomainMatrix.from_list(b, fp).charpoly(), _X, domain=fp)
    roots = sorted(int(r) % p for r in charpoly.ground_roots())
    spaces = []
    for lam in roots:
        shifted = [[(b[i][j] - (lam if i == j else 0)) % p for j in range(k)] for i in range(k)]
        basis = _to_ints(DomainMatrix.from_list(shifted, fp).nullspace(), p)
        if basis:
            spaces.append(basis)
    return spaces


def _common_eigenvectors(matrices: _ClassMatrices, p: int) -> List[List[int]]:
    fp = FiniteField(p)
    c = len(matrices.classes)
    spaces = [[[int(i == j) for j in range(c)] for i in range(c)]]
    for r in range(1, c):
        if all(len(s) == 1 for s in spaces):
            break
        m = matrices[r]
        refined = []
        for space in spaces:
            if len(space) == 1:
                refined.append(space)
                continue
            basis, pivots = _rref(space, p, fp)
            # B[i][j] = (M S_j)[pivot_i]: M restricted to the span, in basis coordinates
            b = [
                [sum(m[pi][t] * basis[j][t] for t in range(c)) % p for j in range(len(basis))]
                for pi in pivots
            ]
            for coeffs in _eigenspaces(b, p, fp):
                vectors = [
                    [sum(a * basis[j][t] for j, a in enumerate(row)) % p for t in range(c)]
                    for row in coeffs
                ]
                refined.append(vectors)
        if sum(len(s) for s in refined) != sum(len(s) for s in spaces):
            raise DixonError(f"class matrix {r} does not split over GF({p})")
        spaces = refined
        logger.debug(f"after class matrix {r}: {len(spaces)} common eigenspaces")
    if len(spaces) != c or any(len(s) != 1 for s in spaces):
        raise DixonError(f"found {len(spaces)} common eigenspaces for {c} classes")
    return [s[0] for s in spaces]


def _modular_character(w: List[int], group: FiniteGroup, p: int) -> Tuple[int, List[int]]:
    """Normalise a central-character eigenvector into (degree, character values mod p)."""
    classes = group.conjugacy_classes
    sizes = classes.sizes
    if w[0] % p == 0:
        raise DixonError("eigenvector vanishes on the identity class")
    scale = pow(w[0], -1, p)
    omega = [x * scale % p for x in w]
    inverse_class = [classes.class_of[group.inv(c.representative)] for c in classes]
    total = sum(omega[k] * omega[inverse_class[k]] * pow(sizes[k], -1, p) for k in range(len(sizes))) % p
    if total == 0:
        raise DixonError("degenerate central character")
    d_squared = group.order * pow(total, -1, p) % p
    roots = sqrt_mod(d_squared, p, all_roots=True)
    if not roots:
        raise DixonError(f"{d_squared} is not a square mod {p}")
    degree = min(int(r) for r in roots)
    values = [omega[k] * degree * pow(sizes[k], -1, p) % p for k in range(len(sizes))]
    return degree, values


def _lift(values: List[int], degree: int, group: FiniteGroup, n: int, p: int) -> Row:
    """Recover each chi(g) = sum_j m_j xi_o^j from chi(g^t) mod p by a discrete Fourier transform."""
    classes = group.conjugacy_classes
    z = pow(int(primitive_root(p)), (p - 1) // n, p)
    row = []
    for cls in classes:
        g = cls.representative
        o = group.element_orders[g]
        w = pow(z, n // o, p)
        powers = []
        cur = group.identity
        for _ in range(o):
            powers.append(values[classes.class_of[cur]])
            cur = group.mul(cur, g)
        o_inv = pow(o, -1, p)
        terms: Dict[int, int] = {}
        for j in range(o):
            w_inv_j = pow(w, (-j) % o, p)
            m = sum(powers[t] * pow(w_inv_j, t, p) for t in range(o)) * o_inv % p
            if m > degree:
                raise DixonError(f"eigenvalue multiplicity {m} exceeds degree {degree}")
            if m:
                terms[j * (n // o)] = m
        if sum(terms.values()) != degree:
            raise DixonError(f"multiplicities on class of {g} do not sum to the degree {degree}")
        row.append(CycNumber.from_exponents(n, terms))
    return tuple(row)


def _row_key(row: Row) -> Tuple:
    trivial = all(x.is_rational() and x.coeffs[0] == 1 for x in row)
    return (_degree(row), not trivial, tuple(render_cyc(x) for x in row))


def compute_character_table(group: FiniteGroup, prime_limit: int = DEFAULT_PRIME_LIMIT) -> CharacterTable:
    classes = group.conjugacy_classes
    n = group.exponent
    p = dixon_prime(group.order, n, prime_limit)
    logger.info(f"Dixon prime for {group.name or 'group'} (order {group.order}, exponent {n}): {p}")

    vectors = _common_eigenvectors(_ClassMatrices(group), p)
    rows = []
    for w in vectors:
        degree, values = _modular_character(w, group, p)
        if group.order % degree:
            raise DixonError(f"degree {degree} does not divide {group.order}")
        rows.append(_lift(values, degree, group, n, p))
    rows.sort(key=_row_key)

    table = CharacterTable(group=group, classes=classes, field_order=n, rows=tuple(rows), prime=p)
    report = verify_table(table)
    if not report.passed:
        failed = report.first_failure()
        raise DixonError(f"computed table fails {failed.name}: {failed.witness}")
    logger.info(f"Character table of {group.name or 'group'}: degrees {list(table.degrees)}")
    return table


# --------------------------
# Verification
# --------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Optional[str] = None


@dataclass(frozen=True)
class TableReport:
    checks: Tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> Optional[CheckResult]:
        return next((c for c in self.checks if not c.passed), None)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _check_square(table: CharacterTable) -> CheckResult:
    c = len(table.classes)
    if len(table.rows) != c:
        return CheckResult("square", False, f"{len(table.rows)} rows for {c} classes")
    for i, row in enumerate(table.rows):
        if len(row) != c:
            return CheckResult("square", False, f"row {i} has {len(row)} entries")
        if any(x.order != table.field_order for x in row):
            return CheckResult("square", False, f"row {i} leaves Q[xi_{table.field_order}]")
    return CheckResult("square", True)


def _check_integrality(table: CharacterTable) -> CheckResult:
    for i, row in enumerate(table.rows):
        for k, x in enumerate(row):
            if classify(x) not in (CycClass.RATIONAL_INTEGER, CycClass.CYCLOTOMIC_INTEGER):
                return CheckResult("integrality", False, f"row {i} col {k}: {render_cyc(x)}")
    return CheckResult("integrality", True)


def _check_degrees(table: CharacterTable) -> List[CheckResult]:
    order = table.group.order
    degrees = []
    for i, row in enumerate(table.rows):
        d = row[0]
        if classify(d) is not CycClass.RATIONAL_INTEGER or d.coeffs[0] <= 0:
            bad = CheckResult("degree_sum", False, f"row {i} degree {render_cyc(d)} is not a positive integer")
            return [bad, CheckResult("degree_divides", False, bad.witness)]
        degrees.append(int(d.coeffs[0]))
    total = sum(x * x for x in degrees)
    square_sum = CheckResult(
        "degree_sum", total == order, None if total == order else f"sum of squared degrees {total} != {order}"
    )
    for i, d in enumerate(degrees):
        if order % d:
            return [square_sum, CheckResult("degree_divides", False, f"row {i} degree {d} does not divide {order}")]
    return [square_sum, CheckResult("degree_divides", True)]


def _check_rows(table: CharacterTable) -> CheckResult:
    r = len(table.rows)
    for i in range(r):
        for j in range(i, r):
            value = inner_product(table, i, j)
            expected = 1 if i == j else 0
            if not (value.is_rational() and value.coeffs[0] == expected):
                return CheckResult("row_orthonormality", False, f"<row {i}, row {j}> = {render_cyc(value)}")
    return CheckResult("row_orthonormality", True)


def _check_columns(table: CharacterTable) -> CheckResult:
    group = table.group
    classes = table.classes
    n = table.field_order
    centralizer_orders = [group.centralizer(c.representative).order for c in classes]
    for a in range(len(classes)):
        for b in range(a, len(classes)):
            total = CycNumber.zero(n)
            for i in range(len(table.rows)):
                total = total + table.rows[i][a] * table.conjugate_rows[i][b]
            expected = centralizer_orders[a] if a == b else 0
            if not (total.is_rational() and total.coeffs[0] == expected):
                return CheckResult(
                    "column_orthogonality", False, f"col {a} . col {b} = {render_cyc(total)}, expected {expected}"
                )
    return CheckResult("column_orthogonality", True)


def verify_table(table: CharacterTable) -> TableReport:
    square = _check_square(table)
    if not square.passed:
        return TableReport((square,))
    checks = [square, _check_integrality(table), *_check_degrees(table), _check_rows(table), _check_columns(table)]
    return TableReport(tuple(checks))


# --------------------------
# Symmetries and span
# --------------------------

@dataclass(frozen=True)
class TableSymmetries:
    row_symmetries: Tuple[Tuple[int, Tuple[int, ...]], ...]
    column_symmetries: Tuple[Tuple[int, Tuple[int, ...]], ...]


def _find_row(table: CharacterTable, target: Row) -> int:
    for i, row in enumerate(table.rows):
        if row == target:
            return i
    raise CorruptTableError("transformed row is not a row of the table")


def table_symmetries(table: CharacterTable) -> TableSymmetries:
    """Row permutations chi -> lambda*chi for linear lambda; column permutations g -> zg for central z."""
    row_syms = []
    for lam, linear in enumerate(table.rows):
        if _degree(linear) != 1:
            continue
        perm = tuple(
            _find_row(table, tuple(x * y for x, y in zip(row, linear))) for row in table.rows
        )
        if sorted(perm) != list(range(len(perm))):
            raise CorruptTableError(f"multiplication by row {lam} is not a bijection")
        row_syms.append((lam, perm))

    group = table.group
    classes = table.classes
    col_syms = []
    for zc, cls in enumerate(classes):
        if cls.size != 1:
            continue
        z = cls.representative
        perm = tuple(classes.class_of[group.mul(z, c.representative)] for c in classes)
        for rho, row in enumerate(table.rows):
            scalar = row[zc] * (1 / Fraction(_degree(row)))
            for k in range(len(classes)):
                if row[perm[k]] != scalar * row[k]:
                    raise CorruptTableError(f"central class {zc} breaks row {rho} at class {k}")
        col_syms.append((zc, perm))
    return TableSymmetries(tuple(row_syms), tuple(col_syms))


def class_function_space_check(table: CharacterTable) -> bool:
    """True iff the rows are linearly independent over Q[xi_n], i.e. span the class functions."""
    size = len(table.classes)
    if len(table.rows) != size:
        return False
    matrix = [list(row) for row in table.rows]
    rank = 0
    for col in range(size):
        pivot = next((r for r in range(rank, size) if not matrix[r][col].is_zero()), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = matrix[rank][col].inverse()
        for r in range(rank + 1, size):
            if matrix[r][col].is_zero():
                continue
            factor = matrix[r][col] * inv
            matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank == size
