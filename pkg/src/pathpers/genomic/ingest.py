"""Reading aligned FASTA files with sampling-date metadata."""
from __future__ import annotations

import csv
import datetime as dt
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..errors import ParseError, ValidationError
from .dataset import AlignedDataset, is_clean

log = logging.getLogger(__name__)

BINNINGS = ("day", "week", "month")


@dataclass
class IngestReport:
    n_records: int = 0
    n_invalid_symbols: int = 0
    n_missing_metadata: int = 0
    n_distinct: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def read_fasta(path) -> List[Tuple[str, str]]:
    """Records ``(id, sequence)``; the id is the header up to the first whitespace."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    records: List[Tuple[str, List[str]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            header = line[1:].split()
            if not header:
                raise ParseError(f"{path}:{lineno}: empty FASTA header")
            records.append((header[0], []))
        elif not records:
            raise ParseError(f"{path}:{lineno}: sequence data before the first header")
        else:
            records[-1][1].append(line)
    if not records:
        raise ParseError(f"{path}: no FASTA records")
    return [(sid, "".join(parts).upper()) for sid, parts in records]


def read_metadata(path) -> Dict[str, dt.date]:
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    with fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"id", "date"} <= set(reader.fieldnames):
            raise ParseError(f"{path}: metadata needs columns 'id' and 'date'")
        dates = {}
        for row in reader:
            try:
                dates[row["id"].strip()] = dt.date.fromisoformat(row["date"].strip())
            except (ValueError, AttributeError):
                raise ParseError(f"{path}: bad date {row.get('date')!r} for {row.get('id')!r}") from None
    return dates


def bin_index(date: dt.date, start: dt.date, binning: str) -> int:
    if binning == "day":
        return (date - start).days + 1
    if binning == "week":
        return (date - start).days // 7 + 1
    if binning == "month":
        return (date.year - start.year) * 12 + date.month - start.month + 1
    raise ValidationError(f"unknown binning {binning!r}; use one of {', '.join(BINNINGS)}")


def bin_label(index: int, start: dt.date, binning: str) -> str:
    if binning == "day":
        return (start + dt.timedelta(days=index - 1)).isoformat()
    if binning == "week":
        return (start + dt.timedelta(days=7 * (index - 1))).isoformat()
    months = start.year * 12 + start.month - 1 + index - 1
    return dt.date(months // 12, months % 12 + 1, 1).isoformat()


def ingest_fasta(alignment, metadata, binning: str = "day", *, reference_id: Optional[str] = None,
                 reference_path=None) -> Tuple[AlignedDataset, IngestReport]:
    """Clean, deduplicate and time-bin an alignment.

    Records with symbols outside ``ACGT-`` are dropped and counted; records
    without metadata are dropped with a warning.  The reference, if given by
    id, is looked up in the alignment before filtering.
    """
    if binning not in BINNINGS:
        raise ValidationError(f"unknown binning {binning!r}; use one of {', '.join(BINNINGS)}")
    records = read_fasta(alignment)
    dates = read_metadata(metadata)
    report = IngestReport(n_records=len(records))

    reference = None
    if reference_path is not None:
        reference = read_fasta(reference_path)[0][1]
    elif reference_id is not None:
        matches = [s for sid, s in records if sid == reference_id]
        if not matches:
            raise ValidationError(f"reference id {reference_id!r} not in the alignment")
        reference = matches[0]

    kept = []
    for sid, seq in records:
        if not is_clean(seq):
            report.n_invalid_symbols += 1
            continue
        if sid not in dates:
            report.n_missing_metadata += 1
            log.warning("no metadata for %s; dropped", sid)
            continue
        kept.append((sid, seq, dates[sid]))
    if not kept:
        raise ValidationError("no valid sequences left after filtering")

    # bins (weeks included) count from the first sampling date
    start = min(d for _, _, d in kept)
    samples = [(sid, seq, bin_index(d, start, binning)) for sid, seq, d in kept]
    n_bins = max(t for _, _, t in samples)
    labels = [bin_label(t, start, binning) for t in range(1, n_bins + 1)]
    data = AlignedDataset.from_samples(samples, n_bins, reference=reference, bin_labels=labels)
    report.n_distinct = len(data)
    if report.n_invalid_symbols:
        log.info("dropped %d sequences with symbols other than ACGT-", report.n_invalid_symbols)
    return data, report
