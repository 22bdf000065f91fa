"""Reading and writing station observation CSV files.

Layout (one header row, then one observation per row)::

    station_key,timestamp_iso8601,speed_mps,direction_deg
    thumrait,2021-03-01T06:00:00,5.1,160
    thumrait,2021-03-01T07:00:00,4.6,

An empty ``direction_deg`` marks a missing direction. Rows whose speed is
non-positive or not a number, or whose timestamp cannot be parsed, are
dropped and counted; nothing is discarded silently.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .errors import InsufficientDataError, SchemaError

__all__ = [
    "HEADER",
    "ObservationSeries",
    "ingest_observations",
    "ingest_all",
    "write_observations",
]

HEADER = ("station_key", "timestamp_iso8601", "speed_mps", "direction_deg")


@dataclass(frozen=True)
class ObservationSeries:
    station_key: str
    timestamps: np.ndarray  # datetime64[s], nondecreasing
    speeds: np.ndarray  # m/s, all > 0
    directions: np.ndarray  # degrees, NaN where missing
    n_raw: int
    n_dropped: int

    def __len__(self):
        return int(self.speeds.size)

    @property
    def period_start(self):
        return self.timestamps[0] if len(self) else None

    @property
    def period_end(self):
        return self.timestamps[-1] if len(self) else None


def _parse_time(text):
    text = text.strip()
    if text.endswith("Z"):
        text = text[:-1] + "+00:00"
    ts = datetime.fromisoformat(text)
    if ts.tzinfo is not None:
        ts = ts.astimezone(timezone.utc).replace(tzinfo=None)
    return np.datetime64(ts, "s")


def _parse_direction(text):
    text = text.strip()
    return float(text) if text else float("nan")


class _Accumulator:
    def __init__(self, key):
        self.key = key
        self.times, self.speeds, self.dirs = [], [], []
        self.n_raw = 0
        self.n_dropped = 0

    def finish(self):
        order = np.argsort(np.array(self.times, dtype="datetime64[s]"), kind="stable")
        return ObservationSeries(
            station_key=self.key,
            timestamps=np.array(self.times, dtype="datetime64[s]")[order],
            speeds=np.array(self.speeds, dtype=float)[order],
            directions=np.array(self.dirs, dtype=float)[order],
            n_raw=self.n_raw,
            n_dropped=self.n_dropped,
        )


def _read(path, strict):
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"observation file not found: {path}")
    groups = {}
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(h.strip() for h in next(reader, ()))
        for pos, expected in enumerate(HEADER):
            got = header[pos] if pos < len(header) else "<missing>"
            if got != expected:
                raise SchemaError(f"{path}: column {pos + 1} should be {expected!r}, got {got!r}")
        if len(header) > len(HEADER):
            raise SchemaError(f"{path}: unexpected extra column {header[len(HEADER)]!r}")
        for lineno, row in enumerate(reader, start=2):
            if not row or not "".join(row).strip():
                continue
            if len(row) != len(HEADER):
                if strict:
                    raise SchemaError(f"{path}:{lineno}: expected 4 fields, got {len(row)}")
                row = (list(row) + [""] * 4)[:4]
            key = row[0].strip()
            acc = groups.setdefault(key, _Accumulator(key))
            acc.n_raw += 1
            try:
                ts = _parse_time(row[1])
                speed = float(row[2])
                direction = _parse_direction(row[3])
            except ValueError as exc:
                if strict:
                    raise SchemaError(f"{path}:{lineno}: {exc}") from exc
                acc.n_dropped += 1
                continue
            if not (np.isfinite(speed) and speed > 0):
                acc.n_dropped += 1
                continue
            acc.times.append(ts)
            acc.speeds.append(speed)
            acc.dirs.append(direction)
    return groups


def ingest_all(path, strict=False):
    """Read every station in the file; returns ``{station_key: ObservationSeries}`` in file order."""
    return {key: acc.finish() for key, acc in _read(path, strict).items()}


def ingest_observations(path, station_key=None, strict=False):
    """Read one station's observations.

    With ``station_key=None`` the file must hold a single station. In
    strict mode an unparsable row raises :class:`SchemaError`; otherwise it
    is dropped and counted. Non-positive speeds are always dropped.
    """
    groups = _read(path, strict)
    if station_key is None:
        if len(groups) > 1:
            raise SchemaError(f"{path}: several stations present {sorted(groups)}; pick one")
        if not groups:
            raise InsufficientDataError(f"{path}: no observation rows")
        station_key = next(iter(groups))
    if station_key not in groups:
        raise InsufficientDataError(f"{path}: no rows for station {station_key!r}")
    series = groups[station_key].finish()
    if len(series) == 0:
        raise InsufficientDataError(
            f"{path}: station {station_key!r} has no usable rows ({series.n_dropped} dropped)"
        )
    return series


def write_observations(path, station_key, timestamps, speeds, directions=None):
    """Write observations in the layout read by :func:`ingest_observations`."""
    speeds = np.asarray(speeds, dtype=float)
    if directions is None:
        directions = np.full(speeds.shape, np.nan)
    with Path(path).open("w", newline="") as fh:
        fh.write(",".join(HEADER) + "\n")
        for ts, v, d in zip(timestamps, speeds, directions):
            dtext = "" if not np.isfinite(d) else f"{d:g}"
            fh.write(f"{station_key},{np.datetime_as_string(np.datetime64(ts, 's'))},{v:.6g},{dtext}\n")
