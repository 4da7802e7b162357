"""Integers m admitting a divisor d > 1 with C(m+d, d) == 1 (mod m).

Reproduces OEIS A290040 (the qualifying m) and A290041 (the smallest such
divisor), plus a scanner for prime-power divisors among the qualifying
pairs, which is an open question; the scanner only reports.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .arith import binomial_mod, divisors, is_prime, is_prime_power

__all__ = [
    "SequenceRecord",
    "ScanCheckpoint",
    "qualifying_divisors",
    "a290040_scan",
    "scan_blocks",
    "prime_power_scan",
    "format_record",
    "record_to_json_obj",
    "save_checkpoint",
    "load_checkpoint",
    "DEFAULT_BLOCK_SIZE",
]

DEFAULT_BLOCK_SIZE = 500
_CHECKPOINT_HEADER = "A290040-scan v1"


@dataclass(frozen=True)
class SequenceRecord:
    m: int
    smallest_d: int
    all_d: tuple[int, ...]


@dataclass(frozen=True)
class ScanCheckpoint:
    next_m: int
    records_emitted: int
    format_version: int = 1


def qualifying_divisors(m: int) -> list[int]:
    """All d > 1 with d | m and C(m+d, d) == 1 (mod m), ascending.

    Prime divisors never qualify, so only composite divisors are tested.
    The congruence runs through the exact binomial: divisors of m share
    factors with the modulus, so no invertible shortcut applies.
    """
    if m < 2:
        raise ValueError("qualifying_divisors requires m >= 2")
    out = []
    for d in divisors(m):
        if d < 2 or is_prime(d):
            continue
        if binomial_mod(m + d, d, m) == 1:
            out.append(d)
    return out


def _scan_block(bounds: tuple[int, int]) -> list[SequenceRecord]:
    lo, hi = bounds
    records = []
    for m in range(max(lo, 2), hi):
        ds = qualifying_divisors(m)
        if ds:
            records.append(SequenceRecord(m, ds[0], tuple(ds)))
    return records


def scan_blocks(
    limit: int,
    start: int = 2,
    block_size: int = DEFAULT_BLOCK_SIZE,
    workers: int = 1,
) -> Iterator[tuple[int, list[SequenceRecord]]]:
    """Yield (resume_m, records) per fixed-size block of m, ascending.

    Blocks are independent and merged in block order, so the output is
    identical for any worker count; resume_m is the first m of the next
    block (a valid checkpoint after the yielded records are emitted).
    """
    if limit < 2:
        raise ValueError("scan_blocks requires limit >= 2")
    if block_size < 1:
        raise ValueError("block_size must be >= 1")
    bounds = []
    lo = max(start, 2)
    while lo <= limit:
        hi = min(lo + block_size, limit + 1)
        bounds.append((lo, hi))
        lo = hi
    if workers <= 1:
        for b in bounds:
            yield b[1], _scan_block(b)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for b, records in zip(bounds, pool.map(_scan_block, bounds)):
                yield b[1], records


def a290040_scan(
    limit: int,
    block_size: int = DEFAULT_BLOCK_SIZE,
    workers: int = 1,
) -> list[SequenceRecord]:
    """All qualifying m in [2, limit] with their divisor lists, ascending in m."""
    records = []
    for _, block in scan_blocks(limit, block_size=block_size, workers=workers):
        records.extend(block)
    return records


def prime_power_scan(
    limit: int,
    block_size: int = DEFAULT_BLOCK_SIZE,
    workers: int = 1,
) -> list[tuple[int, int]]:
    """Qualifying (m, d) pairs where d is a prime power, up to limit.

    Whether any such pair exists is open; this reports findings and asserts
    nothing.
    """
    pairs = []
    for rec in a290040_scan(limit, block_size=block_size, workers=workers):
        for d in rec.all_d:
            if is_prime_power(d):
                pairs.append((rec.m, d))
    return pairs


def record_to_json_obj(rec: SequenceRecord) -> dict:
    return {"m": rec.m, "smallest_d": rec.smallest_d, "all_d": list(rec.all_d)}


def format_record(rec: SequenceRecord, kind: str) -> str:
    """One stable output line per record: human, tsv, or json."""
    joined = ",".join(str(d) for d in rec.all_d)
    if kind == "human":
        return f"m={rec.m} smallest_d={rec.smallest_d} all_d={joined}"
    if kind == "tsv":
        return f"{rec.m}\t{rec.smallest_d}\t{joined}"
    if kind == "json":
        return json.dumps(record_to_json_obj(rec))
    raise ValueError(f"unknown output format {kind!r}")


def save_checkpoint(path: str, checkpoint: ScanCheckpoint) -> None:
    if checkpoint.format_version != 1:
        raise ValueError(f"unsupported checkpoint version {checkpoint.format_version}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{_CHECKPOINT_HEADER}\n")
        fh.write(f"next_m={checkpoint.next_m}\n")
        fh.write(f"records_emitted={checkpoint.records_emitted}\n")


def load_checkpoint(path: str) -> ScanCheckpoint:
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != _CHECKPOINT_HEADER:
        raise ValueError(f"{path} is not an A290040-scan v1 checkpoint")
    fields = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        key, _, value = line.partition("=")
        fields[key] = value
    try:
        return ScanCheckpoint(
            next_m=int(fields["next_m"]),
            records_emitted=int(fields.get("records_emitted", "0")),
            format_version=1,
        )
    except (KeyError, ValueError) as exc:
        raise ValueError(f"malformed checkpoint {path}: {exc}") from None
