"""Serialization of classification tables: JSON (schema v1), CSV, LaTeX, and an on-disk cache."""
from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .acm import ClassificationTable, associated_datum, enumerate_acm

__all__ = [
    "SCHEMA_VERSION",
    "TableDocument",
    "to_document",
    "from_document",
    "emit_json",
    "load_json",
    "emit_csv",
    "emit_latex",
    "cache_dir",
    "cache_path",
    "store_cache",
    "load_cache",
    "cached_enumerate",
]

log = logging.getLogger(__name__)

SCHEMA_VERSION = "1"


def _frac(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass
class TableDocument:
    schema_version: str
    group: str
    rank: int
    k: int
    dim_x: int
    rows: list
    count: int
    generator_metadata: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        # key order is part of the byte-level contract
        return {
            "schema_version": self.schema_version,
            "group": self.group,
            "rank": self.rank,
            "k": self.k,
            "dim_x": self.dim_x,
            "count": self.count,
            "rows": self.rows,
            "generator_metadata": self.generator_metadata,
        }

    @classmethod
    def from_dict(cls, d) -> "TableDocument":
        doc = cls(
            schema_version=str(d["schema_version"]),
            group=d["group"],
            rank=int(d["rank"]),
            k=int(d["k"]),
            dim_x=int(d["dim_x"]),
            rows=[
                {"coeffs": [int(x) for x in r["coeffs"]], "M": r["M"], "datum": list(r["datum"])}
                for r in d["rows"]
            ],
            count=int(d["count"]),
            generator_metadata=dict(d.get("generator_metadata", {})),
        )
        if doc.count != len(doc.rows):
            raise ValueError(f"count {doc.count} does not match {len(doc.rows)} rows")
        return doc


def to_document(table: ClassificationTable) -> TableDocument:
    rows = []
    for w in table.rows:
        d = associated_datum(table.family, table.k, w)
        rows.append({"coeffs": list(w), "M": _frac(d.max), "datum": [_frac(v) for v in d.values]})
    meta = {
        "tool": "acmforge",
        "version": __version__,
        "caps": None if table.caps is None else list(table.caps),
        "partial": bool(table.partial),
        "candidates": int(table.candidates),
    }
    rank = len(table.rows[0]) if table.rows else table.rank
    return TableDocument(SCHEMA_VERSION, table.family, rank, table.k, table.dim_x, rows, len(rows), meta)


def from_document(doc: TableDocument) -> ClassificationTable:
    meta = doc.generator_metadata
    caps = meta.get("caps")
    return ClassificationTable(
        doc.group,
        doc.k,
        doc.dim_x,
        tuple(tuple(r["coeffs"]) for r in doc.rows),
        caps=None if caps is None else tuple(caps),
        candidates=int(meta.get("candidates", 0)),
        partial=bool(meta.get("partial", False)),
    )


def _as_doc(obj):
    return obj if isinstance(obj, TableDocument) else to_document(obj)


def emit_json(table) -> bytes:
    """Canonical UTF-8 JSON: fixed key order, compact separators, trailing newline."""
    doc = _as_doc(table)
    text = json.dumps(doc.as_dict(), separators=(",", ":"), ensure_ascii=False)
    return (text + "\n").encode("utf-8")


def load_json(data) -> TableDocument:
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    return TableDocument.from_dict(json.loads(data))


def emit_csv(table) -> str:
    doc = _as_doc(table)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"b_{i}" for i in range(1, doc.rank + 1)] + ["M"])
    for r in doc.rows:
        writer.writerow(r["coeffs"] + [r["M"]])
    return buf.getvalue()


def emit_latex(table, columns_per_block: int = 16) -> str:
    """Tabular with one column per bundle and one row per coefficient b_i.

    Wide tables are split into stacked blocks of ``columns_per_block`` bundles.
    """
    doc = _as_doc(table)
    rows = [r["coeffs"] for r in doc.rows]
    width = max(1, min(columns_per_block, len(rows)))
    out = [
        f"% {doc.group}/P(alpha_{doc.k}): {doc.count} initialized irreducible homogeneous ACM bundles",
        "\\begin{tabular}{|c|" + "c|" * width + "}",
        "\\hline",
    ]
    blocks = [rows[i : i + width] for i in range(0, len(rows), width)] or [[]]
    for b, block in enumerate(blocks):
        start = b * width
        pad = [""] * (width - len(block))
        out.append(" & ".join([""] + [str(start + j + 1) for j in range(len(block))] + pad) + " \\\\")
        out.append("\\hline")
        for i in range(doc.rank):
            cells = [f"$b_{{{i + 1}}}$"] + [str(c[i]) for c in block] + pad
            out.append(" & ".join(cells) + " \\\\")
        out.append("\\hline")
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


# -- cache ---------------------------------------------------------------------


def cache_dir() -> Path:
    env = os.environ.get("ACMFORGE_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "acmforge"


def _key(group, k, caps):
    caps_s = "none" if caps is None else "-".join(map(str, caps))
    return f"{group}_k{k}_caps-{caps_s}_v{SCHEMA_VERSION}"


def cache_path(group, k, caps=None, directory=None) -> Path:
    d = Path(directory) if directory is not None else cache_dir()
    key = _key(group, k, caps)
    if len(key) > 120:
        key = hashlib.sha256(key.encode()).hexdigest()
    return d / f"{key}.json"


def store_cache(table, directory=None) -> Path:
    doc = _as_doc(table)
    caps = doc.generator_metadata.get("caps")
    path = cache_path(doc.group, doc.k, None if caps is None else tuple(caps), directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(emit_json(doc))
    tmp.replace(path)
    return path


def load_cache(group, k, caps=None, directory=None):
    """Cached TableDocument, or None when absent, stale, or unreadable."""
    path = cache_path(group, k, caps, directory)
    if not path.exists():
        return None
    try:
        doc = load_json(path.read_bytes())
    except (ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring malformed cache file %s: %s", path, exc)
        return None
    if doc.schema_version != SCHEMA_VERSION:
        log.info("ignoring cache %s with schema version %s", path, doc.schema_version)
        return None
    if doc.group != group or doc.k != k:
        log.warning("ignoring cache %s: key mismatch", path)
        return None
    return doc


def cached_enumerate(group, k, caps=None, directory=None, **kwargs) -> ClassificationTable:
    doc = load_cache(group, k, caps, directory)
    if doc is not None:
        return from_document(doc)
    table = enumerate_acm(group, k, caps=caps, **kwargs)
    store_cache(table, directory)
    return table
