"""Plain-text renderings of the result records. Output is byte-deterministic."""
from typing import List

from pydantic import BaseModel

from .records import BraidRecord, CoverRecord, GaloisReport, PairsRecord, TableRecord, TuplesRecord


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _tuple(items: List[str]) -> str:
    return "(" + ",".join(items) + ")"


def render_table(record: TableRecord) -> List[str]:
    lines = [f"group={record.group} order={record.order} exponent={record.exponent} prime={record.prime}"]
    lines.append("\t".join(["name"] + [c.name for c in record.classes]))
    lines.append("\t".join(["class"] + [f"{c.representative}|{c.size}" for c in record.classes]))
    for row in record.rows:
        lines.append("\t".join([row.name] + row.values))
    for check in record.checks:
        line = f"check {check.name}={_flag(check.passed)}"
        if check.witness:
            line += f" witness={check.witness}"
        lines.append(line)
    return lines


def render_galois(report: GaloisReport) -> List[str]:
    lines = []
    for a in report.actions:
        line = f"ell={a.ell} rows={a.row_cycles} cols={a.col_cycles} compatible={_flag(a.compatible)}"
        if a.witness:
            line += f" witness={a.witness}"
        lines.append(line)
    if report.orbits is not None:
        o = report.orbits
        lines.append("row orbits: " + " ".join("{" + " ".join(orbit) + "}" for orbit in o.row_orbits))
        lines.append("column orbits: " + " ".join("{" + " ".join(orbit) + "}" for orbit in o.column_orbits))
        for f in o.fields:
            stabilizer = ",".join(str(x) for x in f.stabilizer)
            lines.append(f"{f.row}: stabilizer={stabilizer} degree={f.degree} conductor={f.conductor}")
    return lines


def render_pairs(record: PairsRecord) -> List[str]:
    lines = [
        f"class {c.index}: rep={_tuple(c.rep)} size={c.size} orbit={c.orbit}" for c in record.classes
    ]
    lines.append(f"center_trivial={_flag(record.center_trivial)} oracle={record.oracle}")
    lines.append(f"classes={record.pair_classes} orbits={len(record.orbits)}")
    return lines


def render_braid(record: BraidRecord) -> List[str]:
    lines = [f"word={record.word}", f"input={_tuple(record.input)}", f"output={_tuple(record.output)}"]
    if record.collapsed_input is not None:
        lines.append(f"collapsed input={_tuple(record.collapsed_input)}")
        lines.append(f"collapse(t.w)={_tuple(record.collapsed_output)}")
        lines.append(f"collapse(t).w={_tuple(record.collapsed_then_acted)}")
        lines.append(f"equivariant={_flag(record.equivariant)}")
    return lines


def render_cover(record: CoverRecord) -> List[str]:
    lines = [f"cover={record.cover} n={record.n} field={record.field_order} fiber={len(record.fiber)}"]
    lines.append("fiber:")
    for p in record.fiber:
        lines.append(f"  j={p.label} " + " ; ".join(p.coordinates))
    lines.append("deck:")
    for d in record.deck:
        lines.append(f"  {d.name} perm=" + " ".join(str(i) for i in d.permutation))
    lines.append("multiplication:")
    for row in record.multiplication:
        lines.append("  " + " ".join(str(i) for i in row))
    if record.ell is not None:
        lines.append(f"ell={record.ell}:")
        for a in record.action:
            line = f"  {a.deck} -> {a.image}"
            if a.power_image is not None:
                line += f" power={a.power_image} differs={_flag(a.differs)}"
            lines.append(line)
    return lines


def render_tuples(record: TuplesRecord) -> List[str]:
    return [f"group={record.group} order={record.order} n={record.n} tuple_classes={record.tuple_classes}"]


def render_text(result: BaseModel) -> str:
    renderers = {
        TableRecord: render_table,
        GaloisReport: render_galois,
        PairsRecord: render_pairs,
        BraidRecord: render_braid,
        CoverRecord: render_cover,
        TuplesRecord: render_tuples,
    }
    return "\n".join(renderers[type(result)](result)) + "\n"


def render_structured(result: BaseModel) -> str:
    records = result.records() if isinstance(result, GaloisReport) else [result]
    return "".join(r.model_dump_json() + "\n" for r in records)
