"""Enumeration of every admissible spectrum on a surface of given genus.

The enumeration follows the partition scheme: ``2g`` is split into parts
``n`` that are totient values, each part multiplicity ``p_n`` is then
distributed over the ``k`` with ``phi(k) = n``.  Output order is fixed by
the order of partitions and of the distributions, so exports are
byte-reproducible regardless of the number of worker processes.
"""
from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import BinaryIO, Callable, Iterator, Sequence

from .doldcore import DoldSequence, RootSpectrum, spectrum_to_dold
from .numtheory import inverse_totient, totient

__all__ = [
    "ExportError",
    "GenusCatalogRecord",
    "GenusSummary",
    "compositions",
    "enumerate_catalog",
    "enumerate_spectra",
    "export_catalog",
    "format_csv_row",
    "format_jsonl",
    "part_universe",
    "partitions",
    "spectra_over",
    "summarize",
    "top_level_partitions",
]


@dataclass(frozen=True)
class GenusCatalogRecord:
    genus: int
    spectrum: RootSpectrum
    dold: DoldSequence
    ap: frozenset[int]
    mper: frozenset[int]


@dataclass(frozen=True)
class GenusSummary:
    genus: int
    count_spectra: int
    count_ap_sets: int
    count_mper_sets: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.count_spectra, self.count_ap_sets, self.count_mper_sets)


class ExportError(OSError):
    """Writing the catalog failed after ``records`` lines / ``position`` bytes."""

    def __init__(self, message: str, records: int, position: int):
        super().__init__(message)
        self.records = records
        self.position = position


def partitions(total: int, allowed_parts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Multisets of ``allowed_parts`` summing to ``total``.

    Each multiset is a non-increasing tuple; tuples come out in ascending
    lexicographic order.  ``total == 0`` yields the empty partition once.
    """
    parts = sorted(set(allowed_parts))
    if any(p < 1 for p in parts):
        raise ValueError("parts must be positive")

    def rec(rest: int, max_idx: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for i in range(max_idx + 1):
            p = parts[i]
            if p > rest:
                break
            for tail in rec(rest - p, i):
                yield (p,) + tail

    if total < 0:
        return
    yield from rec(total, len(parts) - 1)


def compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    """Vectors of ``slots`` non-negative ints summing to ``total``.

    Ordered lexicographically from the largest first slot down, so
    ``compositions(2, 2)`` gives ``(2, 0), (1, 1), (0, 2)``.
    """
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for tail in compositions(total - first, slots - 1):
            yield (first,) + tail


def part_universe(g: int) -> list[int]:
    """Totient values up to ``2g``: parts ``n`` whose preimage is nonempty."""
    return [n for n in range(1, 2 * g + 1) if inverse_totient(n)]


@lru_cache(maxsize=4096)
def _distributions(count: int, ks: tuple[int, ...]) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Sparse ``(k, r_k)`` assignments spreading ``count`` over ``ks``.

    Assignments giving ``r_1`` or ``r_2`` an odd value are dropped here, so the
    parity condition prunes the search as early as possible.
    """
    out = []
    for comp in compositions(count, len(ks)):
        if any(r % 2 for k, r in zip(ks, comp) if k <= 2):
            continue
        out.append(tuple((k, r) for k, r in zip(ks, comp) if r))
    return tuple(out)


def _spectra_for_partition(
    partition: tuple[int, ...], fibres: dict[int, tuple[int, ...]] | None = None
) -> Iterator[RootSpectrum]:
    mult = Counter(partition)
    groups = []
    # distinct parts in the partition's own (non-increasing) order
    for n in sorted(mult, reverse=True):
        ks = fibres[n] if fibres is not None else tuple(inverse_totient(n))
        groups.append(_distributions(mult[n], ks))
    for choice in product(*groups):
        yield RootSpectrum(kv for group in choice for kv in group)


def spectra_over(total: int, ks) -> Iterator[RootSpectrum]:
    """Realizable spectra of size ``total`` supported on the degrees ``ks``.

    The order is the restriction of the :func:`enumerate_spectra` order.
    """
    fibres: dict[int, list[int]] = {}
    for k in sorted(set(ks)):
        fibres.setdefault(totient(k), []).append(k)
    frozen = {n: tuple(v) for n, v in fibres.items()}
    for partition in partitions(total, list(frozen)):
        yield from _spectra_for_partition(partition, frozen)


def top_level_partitions(g: int) -> list[tuple[int, ...]]:
    if g < 1:
        raise ValueError("genus must be positive")
    return list(partitions(2 * g, part_universe(g)))


def enumerate_spectra(g: int) -> Iterator[RootSpectrum]:
    """Every realizable spectrum with ``sum_k r_k phi(k) == 2g``, each once."""
    for partition in top_level_partitions(g):
        yield from _spectra_for_partition(partition)


def _record(g: int, r: RootSpectrum) -> GenusCatalogRecord:
    a = spectrum_to_dold(r)
    ap = a.support
    return GenusCatalogRecord(g, r, a, ap, frozenset(n for n in ap if n % 2))


def _records_for_partition(args: tuple[int, tuple[int, ...]]) -> list[GenusCatalogRecord]:
    g, partition = args
    return [_record(g, r) for r in _spectra_for_partition(partition)]


def enumerate_catalog(g: int, jobs: int = 1) -> Iterator[GenusCatalogRecord]:
    """Catalog records in enumeration order; ``jobs > 1`` fans out per partition."""
    parts = top_level_partitions(g)
    if jobs <= 1:
        for partition in parts:
            for r in _spectra_for_partition(partition):
                yield _record(g, r)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for chunk in pool.map(_records_for_partition, [(g, p) for p in parts], chunksize=4):
            yield from chunk


def _summary_for_partition(args: tuple[int, tuple[int, ...]]):
    g, partition = args
    count = 0
    aps: set[tuple[int, ...]] = set()
    for r in _spectra_for_partition(partition):
        count += 1
        aps.add(tuple(spectrum_to_dold(r)))
    return count, aps


def summarize(g: int, jobs: int = 1) -> GenusSummary:
    parts = [(g, p) for p in top_level_partitions(g)]
    count = 0
    aps: set[tuple[int, ...]] = set()
    if jobs <= 1:
        results = map(_summary_for_partition, parts)
        for c, s in results:
            count += c
            aps |= s
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for c, s in pool.map(_summary_for_partition, parts, chunksize=4):
                count += c
                aps |= s
    odd = {tuple(n for n in key if n % 2) for key in aps}
    return GenusSummary(g, count, len(aps), len(odd))


def _set_literal(xs) -> str:
    return "{" + ",".join(str(x) for x in sorted(xs)) + "}"


def format_jsonl(rec: GenusCatalogRecord) -> str:
    obj = {
        "genus": rec.genus,
        "spectrum": [list(kv) for kv in rec.spectrum.pairs()],
        "dold": [list(kv) for kv in rec.dold.pairs()],
        "ap": sorted(rec.ap),
        "mper": sorted(rec.mper),
    }
    return json.dumps(obj, separators=(",", ":"))


def format_csv_row(rec: GenusCatalogRecord) -> list[str]:
    return [
        str(rec.genus),
        _set_literal(rec.spectrum.multiset()),
        "(" + ",".join(str(v) for v in rec.dold.to_dense()) + ")",
        _set_literal(rec.ap),
        _set_literal(rec.mper),
    ]


CSV_HEADER = ["genus", "spectrum", "dold", "ap", "mper"]


def export_catalog(
    g: int,
    fmt: str,
    sink: BinaryIO,
    jobs: int = 1,
    observe: Callable[[GenusCatalogRecord], None] | None = None,
) -> int:
    """Write the genus-``g`` catalog to a binary stream; returns the record count.

    ``observe`` is called on every record after it is written.
    """
    if fmt not in ("csv", "jsonl"):
        raise ValueError(f"unknown format {fmt!r}")
    records = 0
    position = 0

    def emit(text: str) -> None:
        nonlocal position
        data = text.encode("ascii")
        try:
            sink.write(data)
        except OSError as exc:
            raise ExportError(
                f"write failed after {records} records ({position} bytes): {exc}",
                records,
                position,
            ) from exc
        position += len(data)

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")

        def line(row: list[str]) -> str:
            buf.seek(0)
            buf.truncate()
            writer.writerow(row)
            return buf.getvalue()

        emit(line(CSV_HEADER))
        for rec in enumerate_catalog(g, jobs):
            emit(line(format_csv_row(rec)))
            records += 1
            if observe:
                observe(rec)
    else:
        for rec in enumerate_catalog(g, jobs):
            emit(format_jsonl(rec) + "\n")
            records += 1
            if observe:
                observe(rec)
    return records


def default_jobs() -> int:
    """Parallelism from ``DOLDCALC_JOBS`` (default 1)."""
    raw = os.environ.get("DOLDCALC_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
