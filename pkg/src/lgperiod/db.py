"""Period-record persistence (JSON lines) and potential reconstruction.

A record stores a name, the source text of its potential, the period
sequence and optional metadata; a record is only accepted into a database
after the stored sequence has been re-derived from the stored potential, so
every line of a database is self-consistent.  Mori-graded records carry the
grading description ({"rank", "weights", "tags"}) in their metadata.
"""

import json
from dataclasses import dataclass, field

from .errors import CorruptRecord, LgPeriodError, MissingClassTag
from .expressions import parse_expression, infer_rank, split_top_level_summands, to_poly
from .mori import CurveClassMonoid
from .period import (
    PeriodSequence,
    PotentialComponent,
    PotentialSpec,
    check_grading,
    classical_period,
)


def graded_potential_spec(text, grading):
    """Build a PotentialSpec from expression text plus a grading description.

    The expression is split at top-level '+' into components; each
    component's label is its source text without whitespace, and
    ``grading["tags"]`` maps labels to class multiplicities.  Components
    without a tag are left untagged (check_grading reports them).
    """
    monoid = CurveClassMonoid.from_json_dict(grading)
    tags = grading.get("tags", {})
    rank = infer_rank(parse_expression(text))
    components = []
    seen = set()
    for label, piece in split_top_level_summands(text):
        seen.add(label)
        chart = to_poly(parse_expression(piece), rank)
        tag = None
        if label in tags:
            tag = monoid.curve_class(tuple(tags[label]))
        components.append(PotentialComponent(label=label, chart=chart, class_tag=tag))
    unknown = sorted(set(tags) - seen)
    if unknown:
        raise ValueError(
            f"tags name no component: {unknown} (components are {sorted(seen)})"
        )
    return PotentialSpec(components)


def derive_sequence(potential_text, degree, metadata=None):
    """Recompute the period of a stored potential at a stored truncation."""
    metadata = metadata or {}
    if "grading" in metadata:
        spec = graded_potential_spec(potential_text, metadata["grading"])
        report = check_grading(spec)
        if not report.ok:
            raise MissingClassTag(
                "; ".join(v.message for v in report.violations)
            )
        return classical_period(spec.mori_potential(), degree)
    rank = metadata.get("rank")
    expr = parse_expression(potential_text)
    poly = to_poly(expr, rank if rank is not None else infer_rank(expr))
    return classical_period(poly, degree)


@dataclass
class PeriodRecord:
    name: str
    potential: str
    sequence: PeriodSequence
    metadata: dict = field(default_factory=dict)

    def to_json_dict(self):
        out = {
            "name": self.name,
            "potential": self.potential,
            "sequence": self.sequence.to_json_dict(),
        }
        if self.metadata:
            out["metadata"] = self.metadata
        return out

    @classmethod
    def from_json_dict(cls, data):
        return cls(
            name=data["name"],
            potential=data["potential"],
            sequence=PeriodSequence.from_json_dict(data["sequence"]),
            metadata=data.get("metadata", {}),
        )


def verify_record(record):
    """Raise CorruptRecord unless the stored sequence re-derives exactly."""
    derived = derive_sequence(record.potential, record.sequence.degree, record.metadata)
    if derived != record.sequence:
        raise CorruptRecord(
            f"record {record.name!r}: stored sequence disagrees with re-derivation"
        )


def read_records(path):
    records = []
    with open(path, "r", encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(PeriodRecord.from_json_dict(json.loads(line)))
            except CorruptRecord:
                raise
            except (KeyError, ValueError, LgPeriodError) as exc:
                raise CorruptRecord(f"line {line_number} of {path}: {exc}") from exc
    return records


def append_record(path, record, verify=True):
    """Append one record (after re-derivation unless disabled)."""
    if verify:
        verify_record(record)
    with open(path, "a", encoding="utf-8") as handle:
        handle.write(json.dumps(record.to_json_dict(), separators=(",", ":")))
        handle.write("\n")


def search_records(path, query_sequence, degree):
    """Records whose sequences agree with the query on c_0..c_degree."""
    from .period import period_match

    if query_sequence.degree < degree:
        from .errors import TruncationExceeded

        raise TruncationExceeded(
            f"query stops at degree {query_sequence.degree}, asked for {degree}"
        )
    matches = []
    for record in read_records(path):
        if record.sequence.degree < degree:
            continue
        if period_match(record.sequence, query_sequence, degree) is None:
            matches.append(record)
    return matches
