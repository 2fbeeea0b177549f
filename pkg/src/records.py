"""Result records shared by the CLI renderers and the HTTP endpoints.

Structured CLI output is one ``model_dump_json()`` line per record.
"""
from typing import List, Literal, Optional

from pydantic import BaseModel, Field


# --- table ---

class ClassRecord(BaseModel):
    name: str = Field(..., description="Class name: element order and a letter, e.g. 5a.")
    representative: str = Field(..., description="Representative in 1-based cycle notation.")
    size: int
    centralizer_order: int


class CharacterRecord(BaseModel):
    name: str
    degree: int
    values: List[str] = Field(..., description="Entries in the cyclotomic text grammar, one per class.")


class CheckRecord(BaseModel):
    name: str
    passed: bool
    witness: Optional[str] = None


class TableRecord(BaseModel):
    kind: Literal["table"] = "table"
    group: str
    order: int
    exponent: int
    prime: int
    classes: List[ClassRecord]
    rows: List[CharacterRecord]
    checks: List[CheckRecord]


# --- galois ---

class GaloisActionRecord(BaseModel):
    kind: Literal["galois"] = "galois"
    group: str
    exponent: int
    ell: int
    row_perm: List[int]
    col_perm: List[int]
    row_cycles: str
    col_cycles: str
    compatible: bool
    witness: Optional[str] = None
    fixed_rows: int
    fixed_columns: int


class RowFieldRecord(BaseModel):
    row: str
    stabilizer: List[int]
    degree: int
    conductor: int


class GaloisOrbitsRecord(BaseModel):
    kind: Literal["galois_orbits"] = "galois_orbits"
    group: str
    row_orbits: List[List[str]]
    column_orbits: List[List[str]]
    fields: List[RowFieldRecord]


class GaloisReport(BaseModel):
    group: str
    exponent: int
    actions: List[GaloisActionRecord]
    orbits: Optional[GaloisOrbitsRecord] = None

    def records(self) -> List[BaseModel]:
        return [*self.actions, *([self.orbits] if self.orbits else [])]


# --- pairs ---

class PairClassRecord(BaseModel):
    index: int
    rep: List[str]
    size: int
    orbit: int


class PairsRecord(BaseModel):
    kind: Literal["pairs"] = "pairs"
    group: str
    order: int
    pair_classes: int
    oracle: int = Field(..., description="Sum of class counts of centralizers of class representatives.")
    classes: List[PairClassRecord]
    orbits: List[List[int]]
    center_trivial: bool


# --- braid ---

class BraidRecord(BaseModel):
    kind: Literal["braid"] = "braid"
    group: str
    word: str
    input: List[str]
    output: List[str]
    collapsed_input: Optional[List[str]] = None
    collapsed_output: Optional[List[str]] = None
    collapsed_then_acted: Optional[List[str]] = None
    equivariant: Optional[bool] = None


# --- cover ---

class FiberPointRecord(BaseModel):
    label: int
    coordinates: List[str]


class DeckRecord(BaseModel):
    name: str
    permutation: List[int]


class ActionEntryRecord(BaseModel):
    deck: str
    image: str
    power_image: Optional[str] = None
    differs: Optional[bool] = None


class CoverRecord(BaseModel):
    kind: Literal["cover"] = "cover"
    cover: Literal["cyclic", "dihedral"]
    n: int
    field_order: int
    fiber: List[FiberPointRecord]
    deck: List[DeckRecord]
    multiplication: List[List[int]]
    ell: Optional[int] = None
    action: List[ActionEntryRecord] = Field(default_factory=list)


# --- tuples ---

class TuplesRecord(BaseModel):
    kind: Literal["tuples"] = "tuples"
    group: str
    order: int
    n: int
    tuple_classes: int
