"""On-disk format: length-prefixed JSON journal plus compacted snapshots.

Layout inside the data directory:

    snapshot-<gen>.json   full state as of the start of generation <gen>
    journal-<gen>.log     mutations applied after that snapshot
    LOCK                  exclusive flock held while the store is open

A journal record is a 4-byte big-endian length followed by that many
bytes of UTF-8 JSON. Writers fsync before acknowledging, so a torn
record can only be an unacknowledged tail; replay stops there. Snapshots
are written to a temp file, fsynced, then renamed, so a snapshot file is
either absent or complete. Generation g's journal is created only after
snapshot g exists; recovery loads the highest snapshot and replays the
journal of the same generation.
"""
from __future__ import annotations

import json
import os
import re
import struct
from pathlib import Path
from typing import Iterator

_LEN = struct.Struct(">I")
_SNAPSHOT_RE = re.compile(r"snapshot-(\d{8})\.json$")


def snapshot_path(data_dir: Path, gen: int) -> Path:
    return data_dir / f"snapshot-{gen:08d}.json"


def journal_path(data_dir: Path, gen: int) -> Path:
    return data_dir / f"journal-{gen:08d}.log"


def latest_snapshot_gen(data_dir: Path) -> int:
    """Highest snapshot generation on disk, or 0 when none exists."""
    best = 0
    for entry in data_dir.iterdir():
        m = _SNAPSHOT_RE.match(entry.name)
        if m:
            best = max(best, int(m.group(1)))
    return best


def fsync_dir(data_dir: Path) -> None:
    fd = os.open(data_dir, os.O_RDONLY)
    try:
        os.fsync(fd)
    finally:
        os.close(fd)


class JournalWriter:
    """Append-only writer; every append is durable before it returns."""

    def __init__(self, path: Path):
        self._fh = open(path, "ab")
        self.path = path

    def append(self, record: dict) -> None:
        payload = json.dumps(record, separators=(",", ":")).encode()
        self._fh.write(_LEN.pack(len(payload)) + payload)
        self._fh.flush()
        os.fsync(self._fh.fileno())

    @property
    def size(self) -> int:
        return self._fh.tell()

    def close(self) -> None:
        self._fh.close()


def read_journal(path: Path) -> Iterator[dict]:
    """Yield records in order, stopping at a torn or missing tail."""
    if not path.exists():
        return
    with open(path, "rb") as fh:
        while True:
            header = fh.read(_LEN.size)
            if len(header) < _LEN.size:
                return
            (length,) = _LEN.unpack(header)
            payload = fh.read(length)
            if len(payload) < length:
                return
            try:
                yield json.loads(payload)
            except ValueError:
                return


def write_snapshot(data_dir: Path, gen: int, state: dict) -> Path:
    """Atomically publish a snapshot file for generation ``gen``."""
    final = snapshot_path(data_dir, gen)
    tmp = final.with_suffix(".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(state, fh, separators=(",", ":"))
        fh.flush()
        os.fsync(fh.fileno())
    os.rename(tmp, final)
    fsync_dir(data_dir)
    return final


def read_snapshot(data_dir: Path, gen: int) -> dict:
    with open(snapshot_path(data_dir, gen), encoding="utf-8") as fh:
        return json.load(fh)
