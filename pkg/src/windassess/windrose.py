"""Wind-direction frequency over 36 ten-degree sectors.

Directions follow the meteorological convention: the bearing the wind
blows FROM, in degrees clockwise from true north. Sector ``i`` (1..36) is
centred on ``10*i`` degrees and spans +/-5 degrees; north is sector 36
(360 degrees). A direction exactly on a boundary goes to the higher sector.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .errors import InsufficientDataError

__all__ = [
    "N_SECTORS",
    "SECTOR_CENTERS",
    "COMPASS_16",
    "WindRose",
    "DominantDirections",
    "sector_index",
    "bin_directions",
    "merge_roses",
    "compass_label",
    "dominant_directions",
    "rose_plot_data",
    "rose_csv",
]

N_SECTORS = 36
SECTOR_WIDTH = 10.0
SECTOR_CENTERS = tuple(float(SECTOR_WIDTH * i) for i in range(1, N_SECTORS + 1))
COMPASS_16 = (
    "N", "NNE", "NE", "ENE", "E", "ESE", "SE", "SSE",
    "S", "SSW", "SW", "WSW", "W", "WNW", "NW", "NNW",
)  # fmt: skip
CALM_SPEED = 0.5  # m/s


@dataclass(frozen=True)
class WindRose:
    counts: tuple  # per-sector counts, sector 10 deg first
    n_observations: int
    n_calm_or_invalid: int

    @property
    def sector_frequency(self):
        c = np.asarray(self.counts, dtype=float)
        return c / c.sum()

    @property
    def sector_centers(self):
        return np.asarray(SECTOR_CENTERS)


@dataclass(frozen=True)
class DominantDirections:
    primary_sector: float
    primary_share: float
    secondary_sector: float | None
    secondary_share: float | None
    compass_label: str


def sector_index(directions):
    """Zero-based sector index (0 -> 10 deg, ..., 35 -> 360 deg) for valid directions."""
    d = np.asarray(directions, dtype=float)
    i = np.floor(d / SECTOR_WIDTH + 0.5).astype(int) % N_SECTORS  # 0 and 36 both mean north
    return (i - 1) % N_SECTORS


def bin_directions(directions, speeds=None, calm_speed=CALM_SPEED):
    """Count directions into the 36 sectors.

    Missing (NaN/None) or out-of-range directions are excluded and counted
    in ``n_calm_or_invalid``. When ``speeds`` is given, observations with
    speed below ``calm_speed`` are excluded as calms as well.
    """
    d = np.asarray(directions, dtype=float).ravel()
    valid = np.isfinite(d) & (d >= 0) & (d <= 360)
    if speeds is not None:
        s = np.asarray(speeds, dtype=float).ravel()
        if s.shape != d.shape:
            raise ValueError("speeds and directions must have equal length")
        valid &= np.isfinite(s) & (s >= calm_speed)
    n_valid = int(valid.sum())
    if n_valid == 0:
        raise InsufficientDataError("no valid directions to bin")
    counts = np.bincount(sector_index(d[valid]), minlength=N_SECTORS)
    return WindRose(
        counts=tuple(int(x) for x in counts),
        n_observations=n_valid,
        n_calm_or_invalid=int(d.size - n_valid),
    )


def merge_roses(roses):
    """Combine roses binned over disjoint partitions of the same input."""
    roses = list(roses)
    counts = np.sum([r.counts for r in roses], axis=0)
    return WindRose(
        counts=tuple(int(x) for x in counts),
        n_observations=sum(r.n_observations for r in roses),
        n_calm_or_invalid=sum(r.n_calm_or_invalid for r in roses),
    )


def compass_label(bearing):
    """Nearest 16-point compass name for a bearing in degrees."""
    return COMPASS_16[int(np.floor((bearing % 360.0) / 22.5 + 0.5)) % 16]


def dominant_directions(rose, secondary_threshold=0.15, min_separation=3):
    """Most frequent sector and, if present, a clearly separate second peak.

    Ties for the primary go to the smaller angle. A secondary is a cyclic
    local maximum holding at least ``secondary_threshold`` of observations
    and lying ``min_separation`` or more sectors from the primary.
    """
    freq = rose.sector_frequency
    p = int(np.argmax(freq))
    left = np.roll(freq, 1)
    right = np.roll(freq, -1)
    idx = np.arange(N_SECTORS)
    dist = np.minimum(np.abs(idx - p), N_SECTORS - np.abs(idx - p))
    candidates = (freq >= left) & (freq >= right) & (freq >= secondary_threshold) & (
        dist >= min_separation
    )
    secondary = secondary_share = None
    if candidates.any():
        s = int(np.argmax(np.where(candidates, freq, -1.0)))
        secondary, secondary_share = SECTOR_CENTERS[s], float(freq[s])
    return DominantDirections(
        primary_sector=SECTOR_CENTERS[p],
        primary_share=float(freq[p]),
        secondary_sector=secondary,
        secondary_share=secondary_share,
        compass_label=compass_label(SECTOR_CENTERS[p]),
    )


def rose_plot_data(rose):
    """(angle_deg, frequency) pairs in ascending angle."""
    return list(zip(SECTOR_CENTERS, (float(f) for f in rose.sector_frequency)))


def rose_csv(rose):
    buf = io.StringIO()
    buf.write("angle_deg,frequency\n")
    for angle, f in rose_plot_data(rose):
        buf.write(f"{angle:g},{f:.12g}\n")
    return buf.getvalue()
