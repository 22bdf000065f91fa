"""Station metadata and the TOML station registry."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import DomainError, SchemaError

__all__ = ["StationMeta", "builtin_registry", "load_registry", "parse_registry"]


@dataclass(frozen=True)
class StationMeta:
    station_key: str
    name: str
    altitude: float
    governorate: str = ""
    coastal: bool = False
    latitude: float = 0.0
    longitude: float = 0.0
    icao_id: str = ""
    wmo_id: int | None = None

    def __post_init__(self):
        if not -90 <= self.latitude <= 90:
            raise DomainError(f"{self.station_key}: latitude {self.latitude} out of range")
        if not -180 <= self.longitude <= 180:
            raise DomainError(f"{self.station_key}: longitude {self.longitude} out of range")
        if not self.altitude >= 0:
            raise DomainError(f"{self.station_key}: altitude must be >= 0")


_FIELDS = {"name", "governorate", "coastal", "latitude", "longitude", "altitude", "icao_id", "wmo_id"}


def parse_registry(text, source="<string>"):
    """Parse registry TOML text into an ordered ``{station_key: StationMeta}`` dict."""
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise SchemaError(f"{source}: {exc}") from exc
    table = doc.get("stations")
    if not isinstance(table, dict):
        raise SchemaError(f"{source}: missing [stations] table")
    out = {}
    for key, entry in table.items():
        unknown = set(entry) - _FIELDS
        if unknown:
            raise SchemaError(f"{source}: station {key!r} has unknown fields {sorted(unknown)}")
        if "name" not in entry or "altitude" not in entry:
            raise SchemaError(f"{source}: station {key!r} needs at least name and altitude")
        out[key] = StationMeta(station_key=key, **entry)
    return out


def builtin_registry():
    text = resources.files("windassess").joinpath("data/stations.toml").read_text()
    return parse_registry(text, "built-in registry")


def load_registry(*paths, include_builtin=True):
    """Built-in stations followed by those in ``paths``.

    A key defined twice across the sources is an error; registry keys are
    unique.
    """
    reg = builtin_registry() if include_builtin else {}
    for path in paths:
        extra = parse_registry(Path(path).read_text(), str(path))
        clash = set(extra) & set(reg)
        if clash:
            raise SchemaError(f"{path}: duplicate station keys {sorted(clash)}")
        reg.update(extra)
    return reg
