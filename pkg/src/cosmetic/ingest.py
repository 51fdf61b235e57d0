"""Knot-table CSV ingestion and batch evaluation."""

from __future__ import annotations

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
from pathlib import Path
from typing import Iterable, Optional

from .bennequin import parse_bands
from .braid import parse_braid
from .obstruction import GateOptions, KnotProfile, ObstructionReport, gate, word_invariants

__all__ = [
    "COLUMNS",
    "REPORT_SCHEMA",
    "KnotRecord",
    "BatchOptions",
    "RecordResult",
    "IngestError",
    "ingest_csv",
    "parse_record",
    "process_record",
    "run_batch",
]

log = logging.getLogger(__name__)

COLUMNS = ("name", "braid", "bands", "n", "genus", "braid_index", "thickness", "jones_span")


class IngestError(ValueError):
    """The input file as a whole cannot be read."""


@dataclass(frozen=True)
class KnotRecord:
    name: str
    braid: Optional[str] = None
    bands: Optional[str] = None
    n: Optional[int] = None
    genus: Optional[int] = None
    braid_index: Optional[int] = None
    thickness: Optional[int] = None
    jones_span: Optional[int] = None
    error: Optional[str] = None
    line: Optional[int] = None


def _opt_int(value: Optional[str], column: str) -> Optional[int]:
    if value is None or not value.strip():
        return None
    try:
        return int(value.strip())
    except ValueError:
        raise ValueError(f"column {column!r}: {value!r} is not an integer") from None


def parse_record(row: dict, line: Optional[int] = None) -> KnotRecord:
    """Validate one CSV row; problems are stored on ``KnotRecord.error``."""
    name = (row.get("name") or "").strip()
    text = {k: (row.get(k) or "").strip() or None for k in ("braid", "bands")}
    try:
        ints = {k: _opt_int(row.get(k), k) for k in ("n", "genus", "braid_index", "thickness", "jones_span")}
        if not name:
            raise ValueError("empty name")
        if text["braid"] is not None:
            parse_braid(text["braid"], ints["n"])
        if text["bands"] is not None:
            parse_bands(text["bands"], ints["n"])
        if text["braid"] is None and text["bands"] is None and (
            ints["genus"] is None or ints["braid_index"] is None
        ):
            raise ValueError("row needs a braid, a band word, or both genus and braid_index")
    except ValueError as exc:
        return KnotRecord(name=name or f"<line {line}>", error=str(exc), line=line, **text)
    return KnotRecord(name=name, line=line, **text, **ints)


def ingest_csv(path) -> list[KnotRecord]:
    path = Path(path)
    try:
        handle = path.open(newline="", encoding="utf-8")
    except OSError as exc:
        raise IngestError(f"cannot read {path}: {exc}") from exc
    with handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        if "name" not in header:
            raise IngestError(f"{path}: header has no 'name' column")
        unknown = [c for c in header if c not in COLUMNS]
        if unknown:
            log.warning("%s: ignoring unknown columns %s", path, ", ".join(unknown))
        return [parse_record(row, line) for line, row in enumerate(reader, start=2)]


@dataclass(frozen=True)
class BatchOptions:
    known_results: bool = False
    exact: bool = False
    oracle: bool = False
    max_crossings: int = 16
    max_strands: int = 12
    workers: int = 1

    @property
    def gate_options(self) -> GateOptions:
        return GateOptions(self.known_results, self.oracle, self.max_crossings, self.max_strands)


@dataclass(frozen=True)
class RecordResult:
    name: str
    report: Optional[ObstructionReport] = None
    invariants: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    route: Optional[str] = None
    error: Optional[str] = None

    def as_dict(self) -> dict:
        if self.error is not None:
            return {"name": self.name, "error": self.error}
        if self.report is not None:
            return self.report.as_dict()
        return {
            "name": self.name,
            "inputs": dict(self.inputs, g=None, b=None),
            "bounds": {"lemma3": None, "thm4": None, "crossing": None},
            "constraints": {"eqn3": None},
            "th_upper": None,
            "th_sources": {},
            "invariants": dict(self.invariants),
            "verdict": {"status": "Undecided", "route": self.route, "slopes": [], "unbounded": True},
        }


def process_record(record: KnotRecord, options: BatchOptions = BatchOptions()) -> RecordResult:
    if record.error is not None:
        return RecordResult(record.name, error=record.error)
    try:
        braid = parse_braid(record.braid, record.n) if record.braid else None
        bands = parse_bands(record.bands, record.n) if record.bands else None
        opts = options.gate_options
        inv = word_invariants(braid, bands, opts)
        g, b = record.genus, record.braid_index
        if options.exact and inv.get("components") == 1:
            if g is None:
                g = inv.get("bennequin_genus")
            if b is None:
                b = (bands or braid).n
        if g is None or b is None:
            inputs = {}
            if braid is not None:
                inputs["braid"] = str(braid)
            if bands is not None:
                inputs["bands"] = str(bands)
            return RecordResult(
                record.name,
                invariants=inv,
                inputs=inputs,
                route="genus and braid index not supplied; pass --exact to trust word values",
            )
        profile = KnotProfile(
            record.name, g, b, th=record.thickness, span=record.jones_span, braid=braid, bands=bands
        )
        return RecordResult(record.name, report=gate(profile, opts, invariants=inv))
    except ValueError as exc:
        return RecordResult(record.name, error=str(exc))


def run_batch(records: Iterable[KnotRecord], options: BatchOptions = BatchOptions()) -> list[RecordResult]:
    """Evaluate every record; output order always follows input order."""
    records = list(records)
    if options.workers > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=options.workers) as pool:
            return list(pool.map(process_record, records, repeat(options)))
    return [process_record(r, options) for r in records]


_BOUND = {
    "oneOf": [
        {"type": "null"},
        {
            "type": "object",
            "required": ["exact", "floor"],
            "properties": {"exact": {"type": "string"}, "floor": {"type": "integer"}},
        },
    ]
}

_NULLABLE_INT = {"type": ["integer", "null"]}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "oneOf": [
        {
            "type": "object",
            "required": ["name", "error"],
            "properties": {"name": {"type": "string"}, "error": {"type": "string"}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["name", "inputs", "bounds", "constraints", "th_upper", "verdict"],
            "properties": {
                "name": {"type": "string"},
                "inputs": {
                    "type": "object",
                    "required": ["g", "b"],
                    "properties": {
                        "g": _NULLABLE_INT,
                        "b": _NULLABLE_INT,
                        "th": {"type": "integer"},
                        "span": {"type": "integer"},
                        "braid": {"type": "string"},
                        "bands": {"type": "string"},
                    },
                },
                "bounds": {
                    "type": "object",
                    "required": ["lemma3", "thm4", "crossing"],
                    "properties": {
                        "lemma3": _BOUND,
                        "thm4": _BOUND,
                        "crossing": {"type": ["string", "null"]},
                    },
                },
                "constraints": {
                    "type": "object",
                    "required": ["eqn3"],
                    "properties": {"eqn3": _NULLABLE_INT, "eqn4": {"type": "integer"}},
                },
                "th_upper": _NULLABLE_INT,
                "verdict": {
                    "type": "object",
                    "required": ["status", "route", "slopes", "unbounded"],
                    "properties": {
                        "status": {"enum": ["Excluded", "Undecided", "SpecialGenus2", "KnownResultB3"]},
                        "route": {"type": "string"},
                        "slopes": {"type": "array", "items": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}},
                        "unbounded": {"type": "boolean"},
                    },
                },
            },
        },
    ],
}
