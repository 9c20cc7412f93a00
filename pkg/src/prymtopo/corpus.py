"""Invariant tables on disk: CSV/JSON/Markdown writers, a CSV/JSON reader and
verification of a table against freshly computed invariants.

The shipped corpora ``genus_zero.csv`` (the six genus-0 curves) and
``upto200.csv`` (all nonsquare D <= 200) are reference values typed in by
hand; nothing in this package regenerates them.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable

from . import topology
from .errors import CorpusError, PrymTopoError
from .topology import InvariantRecord

COLUMNS = ("D", "g", "chi_num", "chi_den", "C", "e2", "e3", "e5", "e6")
EMBEDDED = ("genus_zero.csv", "upto200.csv")


@dataclass(frozen=True)
class CorpusRow:
    D: int
    g: int
    chi_num: int
    chi_den: int
    C: int
    e2: int
    e3: int
    e5: int
    e6: int

    def __post_init__(self):
        if self.chi_den <= 0 or math.gcd(self.chi_num, self.chi_den) != 1:
            raise CorpusError(f"D = {self.D}: chi {self.chi_num}/{self.chi_den} is not in lowest terms")

    @property
    def chi(self) -> Fraction:
        return Fraction(self.chi_num, self.chi_den)

    @classmethod
    def from_record(cls, rec: InvariantRecord) -> "CorpusRow":
        return cls(rec.D, rec.genus, rec.chi.numerator, rec.chi.denominator,
                   rec.C, rec.e2, rec.e3, rec.e5, rec.e6)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, c) for c in COLUMNS)


# -- writing -----------------------------------------------------------------

def to_csv(rows: Iterable[CorpusRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    w.writerows(r.as_tuple() for r in rows)
    return buf.getvalue()


def to_json(rows: Iterable[CorpusRow]) -> str:
    return json.dumps([dict(zip(COLUMNS, r.as_tuple())) for r in rows], indent=1) + "\n"


def to_markdown(rows: Iterable[CorpusRow]) -> str:
    lines = ["| D | g | chi | C | e2 | e3 | e5 | e6 |", "|" + "---:|" * 8]
    for r in rows:
        chi = str(r.chi_num) if r.chi_den == 1 else f"{r.chi_num}/{r.chi_den}"
        lines.append(f"| {r.D} | {r.g} | {chi} | {r.C} | {r.e2} | {r.e3} | {r.e5} | {r.e6} |")
    return "\n".join(lines) + "\n"


WRITERS = {"csv": to_csv, "json": to_json, "md": to_markdown}


# -- reading -----------------------------------------------------------------

def _row(values: dict, where: str) -> CorpusRow:
    try:
        return CorpusRow(**{c: int(values[c]) for c in COLUMNS})
    except (KeyError, TypeError, ValueError) as exc:
        raise CorpusError(f"{where}: bad row {values!r} ({exc})") from None


def parse_corpus(text: str, fmt: str = "csv", name: str = "<corpus>") -> list[CorpusRow]:
    """Parse a corpus; raises :class:`CorpusError` on malformed or empty input."""
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{name}: {exc}") from None
        if not isinstance(data, list):
            raise CorpusError(f"{name}: expected a JSON array")
        rows = [_row(d, f"{name}[{k}]") if isinstance(d, dict) else _row({}, f"{name}[{k}]")
                for k, d in enumerate(data)]
    else:
        reader = csv.DictReader(io.StringIO(text))
        if reader.fieldnames is None or tuple(reader.fieldnames) != COLUMNS:
            raise CorpusError(f"{name}: header must be {','.join(COLUMNS)}")
        rows = [_row(d, f"{name}:{k + 2}") for k, d in enumerate(reader)]
    if not rows:
        raise CorpusError(f"{name}: corpus is empty")
    seen = set()
    for r in rows:
        if r.D in seen:
            raise CorpusError(f"{name}: duplicate row for D = {r.D}")
        seen.add(r.D)
    return rows


def load_corpus(path: str | Path) -> list[CorpusRow]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"{path}: {exc}") from None
    return parse_corpus(text, "json" if path.suffix == ".json" else "csv", str(path))


def embedded_corpus(name: str) -> list[CorpusRow]:
    text = resources.files("prymtopo.data").joinpath(name).read_text(encoding="utf-8")
    return parse_corpus(text, "csv", name)


# -- verification ------------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    D: int
    diffs: dict  # column -> (expected, computed)
    error: str | None = None

    def __str__(self) -> str:
        if self.error:
            return f"D={self.D}: {self.error}"
        parts = ", ".join(f"{col}: expected {exp}, got {got}" for col, (exp, got) in self.diffs.items())
        return f"D={self.D}: {parts}"


def compare(row: CorpusRow, computed: CorpusRow) -> Mismatch | None:
    diffs = {c: (getattr(row, c), getattr(computed, c)) for c in COLUMNS
             if getattr(row, c) != getattr(computed, c)}
    return Mismatch(row.D, diffs) if diffs else None


def verify_rows(rows: list[CorpusRow], per_d_limit: int = 1000) -> list[Mismatch]:
    """Recompute every row; returns the mismatches in corpus order.

    Small corpora go through the per-D routines; larger ones through the
    range kernels over the spanned interval.
    """
    if len(rows) > per_d_limit:
        span = {r.D: r for r in topology.sweep(min(x.D for x in rows), max(x.D for x in rows))}
        lookup = lambda D: span[D]  # noqa: E731
    else:
        lookup = topology.invariants
    out = []
    for row in rows:
        try:
            computed = CorpusRow.from_record(lookup(row.D))
        except (PrymTopoError, KeyError) as exc:
            out.append(Mismatch(row.D, {}, f"cannot compute invariants ({exc})"))
            continue
        m = compare(row, computed)
        if m:
            out.append(m)
    return out
