import logging
from functools import lru_cache
from typing import List, Optional, Tuple

from sympy.combinatorics import Permutation

from .algebra import braid as braid_mod
from .algebra.braid import braid_word
from .algebra.chartab import CharacterTable, compute_character_table, verify_table
from .algebra.cyclo import galois_group, render_cyc
from .algebra.errors import GroupTooLargeError, SpecParseError
from .algebra.galois import fixed_point_counts, galois_action, galois_orbits, verify_compatibility
from .algebra.groupspec import GroupSpec, build_group, parse_group_spec, render_group_spec
from .algebra.permgrp import FiniteGroup, parse_cycles, permutation_from_cycles, render_permutation
from .algebra.profinite import (
    CoverKind,
    compare_actions_on_dihedral,
    cyclic_cover,
    dihedral_cover,
    galois_on_cyclic_deck,
)
from .config import Settings, load_env_vars
from .records import (
    ActionEntryRecord,
    BraidRecord,
    CharacterRecord,
    CheckRecord,
    ClassRecord,
    CoverRecord,
    DeckRecord,
    FiberPointRecord,
    GaloisActionRecord,
    GaloisOrbitsRecord,
    GaloisReport,
    PairClassRecord,
    PairsRecord,
    RowFieldRecord,
    TableRecord,
    TuplesRecord,
)

# Configure logging for this module
logger = logging.getLogger(__name__)


def cycle_form(perm: Tuple[int, ...], labels: Tuple[str, ...]) -> str:
    """Cycle notation for a permutation of labelled items; "()" for the identity."""
    cycles = Permutation(list(perm)).cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(labels[i] for i in c) + ")" for c in cycles)


class ComputeService:
    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or load_env_vars()
        # bounded: keys are request text and each entry may hold a large group and its table
        self._build_group = lru_cache(maxsize=self.settings.cache_size)(self._build_group_uncached)
        self._build_table = lru_cache(maxsize=self.settings.cache_size)(self._build_table_uncached)

    def _build_group_uncached(self, spec: GroupSpec) -> FiniteGroup:
        return build_group(spec, cap=self.settings.element_cap)

    def _build_table_uncached(self, spec: GroupSpec) -> CharacterTable:
        return compute_character_table(self._build_group(spec), prime_limit=self.settings.prime_limit)

    # --- shared lookups ---

    def group(self, spec_text: str) -> Tuple[str, FiniteGroup]:
        spec = parse_group_spec(spec_text)
        return render_group_spec(spec), self._build_group(spec)

    def table(self, spec_text: str) -> Tuple[str, CharacterTable]:
        spec = parse_group_spec(spec_text)
        return render_group_spec(spec), self._build_table(spec)

    def parse_elements(self, group: FiniteGroup, text: str, count: int) -> Tuple[int, ...]:
        """Parse ``count`` comma-separated elements in cycle notation into group indices."""
        chunks = []
        start = 0
        for i, ch in enumerate(text + ","):
            if ch == ",":
                chunks.append((text[start:i], start))
                start = i + 1
        if len(chunks) != count:
            raise SpecParseError(f"found {len(chunks)} elements", len(text), f"{count} comma-separated elements")
        indices = []
        for chunk, offset in chunks:
            cycles = parse_cycles(chunk, base=offset, degree=group.degree)
            indices.append(group.index(permutation_from_cycles(group.degree, cycles)))
        return tuple(indices)

    # --- commands ---

    def character_table(self, spec_text: str) -> TableRecord:
        key, table = self.table(spec_text)
        group = table.group
        report = verify_table(table)
        classes = [
            ClassRecord(
                name=name,
                representative=render_permutation(group.elements[c.representative]),
                size=c.size,
                centralizer_order=group.order // c.size,
            )
            for name, c in zip(table.class_names, table.classes)
        ]
        rows = [
            CharacterRecord(name=name, degree=degree, values=[render_cyc(x) for x in row])
            for name, degree, row in zip(table.row_names(), table.degrees, table.rows)
        ]
        checks = [CheckRecord(name=c.name, passed=c.passed, witness=c.witness) for c in report.checks]
        return TableRecord(
            group=key, order=group.order, exponent=table.field_order, prime=table.prime,
            classes=classes, rows=rows, checks=checks,
        )

    def galois(self, spec_text: str, ell: Optional[int] = None) -> GaloisReport:
        key, table = self.table(spec_text)
        n = table.field_order
        ells = [ell] if ell is not None else [s.ell for s in galois_group(n)]
        row_names, class_names = table.row_names(), table.class_names
        actions = []
        for value in ells:
            action = galois_action(table, value)
            result = verify_compatibility(table, value)
            fixed_rows, fixed_cols = fixed_point_counts(table, value)
            witness = None
            if result.witness is not None:
                w = result.witness
                witness = f"row={w.row} col={w.col} ell={w.ell}: {w.reason}"
            actions.append(GaloisActionRecord(
                group=key, exponent=n, ell=action.ell,
                row_perm=list(action.row_perm), col_perm=list(action.col_perm),
                row_cycles=cycle_form(action.row_perm, row_names),
                col_cycles=cycle_form(action.col_perm, class_names),
                compatible=result.compatible, witness=witness,
                fixed_rows=fixed_rows, fixed_columns=fixed_cols,
            ))
            logger.info(f"{key}: ell={action.ell} compatible={result.compatible}")

        orbits = None
        if ell is None:
            found = galois_orbits(table)
            orbits = GaloisOrbitsRecord(
                group=key,
                row_orbits=[[row_names[i] for i in o] for o in found.row_orbits],
                column_orbits=[[class_names[i] for i in o] for o in found.column_orbits],
                fields=[
                    RowFieldRecord(row=row_names[f.row], stabilizer=list(f.stabilizer), degree=f.degree,
                                   conductor=f.conductor)
                    for f in found.row_fields
                ],
            )
        return GaloisReport(group=key, exponent=n, actions=actions, orbits=orbits)

    def pairs(self, spec_text: str) -> PairsRecord:
        key, group = self.group(spec_text)
        found = braid_mod.pair_classes(group, cap=self.settings.pair_cap)
        orbits = braid_mod.sl2_orbits(found)
        classes = [
            PairClassRecord(
                index=i,
                rep=[render_permutation(group.elements[x]) for x in c.representative],
                size=c.size,
                orbit=orbits.orbit_of[i],
            )
            for i, c in enumerate(found.classes)
        ]
        return PairsRecord(
            group=key, order=group.order, pair_classes=len(found),
            oracle=braid_mod.centralizer_class_sum(group), classes=classes,
            orbits=[list(o) for o in orbits.orbits],
            center_trivial=braid_mod.center_acts_trivially(found),
        )

    def braid(self, spec_text: str, word_text: str, pair: Optional[str] = None,
              triple: Optional[str] = None) -> BraidRecord:
        key, group = self.group(spec_text)
        word = braid_word(word_text)

        def show(items) -> List[str]:
            return [render_permutation(group.elements[x]) for x in items]

        if triple is not None:
            t = self.parse_elements(group, triple, 3)
            image = braid_mod.braid_act_triple(group, word, t)
            check = braid_mod.collapse_equivariance(group, word, t)
            return BraidRecord(
                group=key, word=str(word), input=show(t), output=show(image),
                collapsed_input=show(braid_mod.collapse(group, t)),
                collapsed_output=show(check.acted_then_collapsed),
                collapsed_then_acted=show(check.collapsed_then_acted),
                equivariant=check.equal,
            )
        if pair is None:
            raise SpecParseError("missing element list", 0, "--pair or --triple")
        p = self.parse_elements(group, pair, 2)
        return BraidRecord(group=key, word=str(word), input=show(p), output=show(braid_mod.braid_act_pair(group, word, p)))

    def cover(self, kind: str, n: int, ell: Optional[int] = None) -> CoverRecord:
        kind = CoverKind(kind)
        if n > self.settings.cover_cap:
            raise GroupTooLargeError(f"cover parameter n={n} exceeds the cover cap of {self.settings.cover_cap}")
        model = cyclic_cover(n) if kind is CoverKind.CYCLIC else dihedral_cover(n)
        fiber = [
            FiberPointRecord(label=j, coordinates=[render_cyc(c) for c in point])
            for j, point in zip(model.labels, model.fiber)
        ]
        deck = [DeckRecord(name=str(g), permutation=list(model.permutations[g])) for g in model.deck]
        action: List[ActionEntryRecord] = []
        if ell is not None:
            if kind is CoverKind.CYCLIC:
                action = [ActionEntryRecord(deck=str(g), image=str(galois_on_cyclic_deck(n, ell, g))) for g in model.deck]
            else:
                comparison = compare_actions_on_dihedral(n, ell)
                action = [
                    ActionEntryRecord(deck=str(r.deck), image=str(r.covering_image),
                                      power_image=str(r.power_image), differs=r.differs)
                    for r in comparison.rows
                ]
        return CoverRecord(
            cover=kind.value, n=n, field_order=model.field_order, fiber=fiber, deck=deck,
            multiplication=[list(r) for r in model.multiplication_table()], ell=ell, action=action,
        )

    def tuples(self, spec_text: str, n: int) -> TuplesRecord:
        key, group = self.group(spec_text)
        count = braid_mod.tuple_classes(group, n, cap=self.settings.tuple_cap)
        return TuplesRecord(group=key, order=group.order, n=n, tuple_classes=count)


compute_service = ComputeService()
