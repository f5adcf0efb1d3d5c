"""Shared domain types: the spatial grid, 15-minute timeslots, and the
demand tensor every downstream stage consumes.

All types are immutable after construction and safe to share across
threads; the operations here are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import DataError, OutOfBoundsError

SLOT_SECONDS = 900
SLOTS_PER_DAY = 96
SECONDS_PER_DAY = SLOT_SECONDS * SLOTS_PER_DAY


class RideRequest(NamedTuple):
    """One raw ride-request event.

    ``cancel_delay`` is the number of seconds until the request was
    canceled, or ``None`` if it never was. Coordinates are raw degrees;
    validity against the study area is enforced at ingestion, not here,
    so that millions of records stay cheap to hold.
    """

    request_id: str
    passenger_id: str
    timestamp: int
    lat: float
    lon: float
    cancel_delay: Optional[float] = None


@dataclass(frozen=True)
class GridSpec:
    """Uniform 16x16 partition of a bounding box into 256 regions."""

    lat_min: float
    lat_max: float
    lon_min: float
    lon_max: float
    rows: int = 16
    cols: int = 16

    def __post_init__(self):
        if not self.lat_min < self.lat_max:
            raise DataError(f"lat_min {self.lat_min} must be < lat_max {self.lat_max}")
        if not self.lon_min < self.lon_max:
            raise DataError(f"lon_min {self.lon_min} must be < lon_max {self.lon_max}")
        if self.rows * self.cols != 256:
            raise DataError(f"grid must have 256 cells, got {self.rows}x{self.cols}")

    @property
    def n_cells(self) -> int:
        return self.rows * self.cols

    def contains(self, lat: float, lon: float) -> bool:
        return (self.lat_min <= lat <= self.lat_max
                and self.lon_min <= lon <= self.lon_max)


@dataclass(frozen=True)
class StudyWindow:
    """Half-open time range [start, start + n_days) in UTC seconds."""

    start: int
    n_days: int

    def __post_init__(self):
        if self.n_days <= 0:
            raise DataError(f"n_days must be positive, got {self.n_days}")

    @property
    def end(self) -> int:
        return self.start + self.n_days * SECONDS_PER_DAY

    @property
    def n_slots(self) -> int:
        return self.n_days * SLOTS_PER_DAY

    def contains(self, timestamp: int) -> bool:
        return self.start <= timestamp < self.end


@dataclass(frozen=True)
class TimeSlot:
    """One 15-minute interval, indexed globally and within its day."""

    index: int
    slot_of_day: int
    day_index: int

    def __post_init__(self):
        if self.index < 0:
            raise DataError(f"slot index must be nonnegative, got {self.index}")
        if not 0 <= self.slot_of_day < SLOTS_PER_DAY:
            raise DataError(f"slot_of_day out of range: {self.slot_of_day}")
        if self.index != self.day_index * SLOTS_PER_DAY + self.slot_of_day:
            raise DataError(
                f"inconsistent TimeSlot: index {self.index} != "
                f"{self.day_index}*{SLOTS_PER_DAY} + {self.slot_of_day}")

    @classmethod
    def from_index(cls, index: int) -> "TimeSlot":
        return cls(index=index,
                   slot_of_day=index % SLOTS_PER_DAY,
                   day_index=index // SLOTS_PER_DAY)

    @property
    def hour_of_day(self) -> int:
        return self.slot_of_day // 4


def cell_of(lat: float, lon: float, spec: GridSpec) -> int:
    """Map a point to its region index in [0, 256).

    Bins are uniform in raw degrees. Points exactly on the max edge fold
    into the last row/column so the map is total on the closed box.
    """
    if not (spec.lat_min <= lat <= spec.lat_max):
        raise OutOfBoundsError(
            f"latitude {lat} outside [{spec.lat_min}, {spec.lat_max}]")
    if not (spec.lon_min <= lon <= spec.lon_max):
        raise OutOfBoundsError(
            f"longitude {lon} outside [{spec.lon_min}, {spec.lon_max}]")
    row = int((lat - spec.lat_min) / (spec.lat_max - spec.lat_min) * spec.rows)
    col = int((lon - spec.lon_min) / (spec.lon_max - spec.lon_min) * spec.cols)
    row = min(row, spec.rows - 1)
    col = min(col, spec.cols - 1)
    return row * spec.cols + col


def slot_of(timestamp: int, study_start: int) -> TimeSlot:
    """Map a UTC timestamp to its 15-minute slot since ``study_start``."""
    if timestamp < study_start:
        raise OutOfBoundsError(
            f"timestamp {timestamp} precedes study start {study_start}")
    return TimeSlot.from_index(int((timestamp - study_start) // SLOT_SECONDS))


@dataclass(frozen=True)
class DemandTensor:
    """Demand counts indexed [timeslot x region] after cleaning.

    ``region_ids`` lists the original 16x16 cell indices of the retained
    regions, in ascending order. The count matrix is read-only.
    """

    counts: np.ndarray
    region_ids: tuple[int, ...]
    n_slots: int

    def __post_init__(self):
        counts = np.ascontiguousarray(self.counts)
        if counts.ndim != 2:
            raise DataError(f"counts must be 2-D, got shape {counts.shape}")
        if counts.shape != (self.n_slots, len(self.region_ids)):
            raise DataError(
                f"counts shape {counts.shape} != "
                f"({self.n_slots}, {len(self.region_ids)})")
        if self.n_slots % SLOTS_PER_DAY != 0:
            raise DataError(f"n_slots {self.n_slots} is not a whole number of days")
        if counts.size and counts.min() < 0:
            raise DataError("demand counts must be nonnegative")
        counts.flags.writeable = False
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "region_ids", tuple(int(r) for r in self.region_ids))

    @property
    def n_regions(self) -> int:
        return len(self.region_ids)

    @property
    def n_days(self) -> int:
        return self.n_slots // SLOTS_PER_DAY

    def mean_daily_demand(self) -> np.ndarray:
        """Average demand per region per day over the whole window."""
        return self.counts.sum(axis=0) / self.n_days

    def day_range(self, first_day: int, last_day: int) -> "DemandTensor":
        """Sub-tensor covering days [first_day, last_day)."""
        if not 0 <= first_day < last_day <= self.n_days:
            raise DataError(f"invalid day range [{first_day}, {last_day})")
        rows = slice(first_day * SLOTS_PER_DAY, last_day * SLOTS_PER_DAY)
        return DemandTensor(counts=self.counts[rows].copy(),
                            region_ids=self.region_ids,
                            n_slots=(last_day - first_day) * SLOTS_PER_DAY)


@dataclass(frozen=True)
class CalendarInfo:
    """Per-day weekday ids and holiday flags. Weekday 0 is Saturday."""

    day_of_week: np.ndarray
    is_holiday: np.ndarray

    def __post_init__(self):
        dow = np.ascontiguousarray(self.day_of_week, dtype=np.int64)
        hol = np.ascontiguousarray(self.is_holiday, dtype=bool)
        if dow.ndim != 1 or hol.ndim != 1 or len(dow) != len(hol):
            raise DataError("day_of_week and is_holiday must be equal-length vectors")
        if dow.size and (dow.min() < 0 or dow.max() > 6):
            raise DataError("day_of_week entries must lie in [0, 7)")
        dow.flags.writeable = False
        hol.flags.writeable = False
        object.__setattr__(self, "day_of_week", dow)
        object.__setattr__(self, "is_holiday", hol)

    @property
    def n_days(self) -> int:
        return len(self.day_of_week)

    @classmethod
    def cyclic(cls, n_days: int, start_weekday: int = 0,
               holidays: Sequence[int] = ()) -> "CalendarInfo":
        """Build a calendar from a starting weekday and holiday day-indices."""
        dow = (start_weekday + np.arange(n_days)) % 7
        hol = np.zeros(n_days, dtype=bool)
        for day in holidays:
            if 0 <= day < n_days:
                hol[day] = True
        return cls(day_of_week=dow, is_holiday=hol)
