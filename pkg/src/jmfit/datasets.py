"""Failure-interval datasets: the four bundled series, file I/O, prefixes.

The bundled tables are embedded as literal constants so downstream golden
tests cannot drift with packaging changes.  Intervals are stored as float64
even though the published tables are integers, because every derived
quantity (residuals, weights, predictions) is real-valued.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

__all__ = [
    "FailureDataset",
    "DatasetFormatError",
    "BUILTIN_DATASETS",
    "builtin_dataset",
    "load_dataset",
    "save_dataset",
    "prefix",
]


class DatasetFormatError(ValueError):
    """Raised when a dataset file or interval sequence is malformed."""


@dataclass(frozen=True)
class FailureDataset:
    """An ordered sequence of positive failure time intervals.

    The i-th interval (1-based) is the time between the (i-1)-th and i-th
    observed failures.  Order is preserved exactly as recorded; instances
    are immutable and safe to share across threads.
    """

    name: str
    intervals: np.ndarray
    unit: str = "unspecified"
    source: str = ""

    def __post_init__(self) -> None:
        arr = np.array(self.intervals, dtype=float, copy=True)
        if arr.ndim != 1 or arr.size < 1:
            raise DatasetFormatError("intervals must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise DatasetFormatError("intervals must be finite")
        if np.any(arr <= 0):
            bad = int(np.argmax(arr <= 0)) + 1
            raise DatasetFormatError(
                f"interval #{bad} is not strictly positive: {arr[bad - 1]}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "intervals", arr)

    def __len__(self) -> int:
        return int(self.intervals.size)

    def __iter__(self):
        return iter(self.intervals)


_NTDS = [
    9, 12, 11, 4, 7, 2, 5, 8, 5, 7,
    1, 6, 1, 9, 4, 1, 3, 3, 6, 1,
    11, 33, 7, 91, 2, 1, 87, 47, 12, 9,
    135,
]

_MUSA1 = [
    932, 3103, 661, 197, 1476, 155, 1358, 288, 1169, 1061,
    142, 494, 660, 209, 361, 688, 1046,
]

_MUSA2 = [10, 9, 13, 11, 15, 12, 18, 15, 22, 25, 19, 30, 32, 25, 40]

_MUSA3 = [
    320, 1439, 9000, 2880, 5700, 21800, 26800, 113540, 112137, 660,
    2700, 28793, 2173, 7263, 10865, 4230, 8460, 14805, 11844, 5361,
    6553, 6499, 3124, 51323, 17010, 1890, 5400, 62313, 24826, 26355,
    363, 13989, 15058, 32377, 41632, 4160, 82040, 13189, 3426, 5833,
    640, 640, 2880, 110, 22080, 60654, 52163, 12546, 784, 10193,
    7841, 31365, 24313, 298890, 1280, 22099, 19150, 2611, 39170, 55794,
    42632, 267600, 87074, 149606, 14400, 34560, 39600, 334395, 296015, 177395,
    214622, 156400, 166800, 10800, 267000, 34513, 7680, 37667, 11100, 187200,
    18000, 178200, 144000, 639200, 86400, 288000, 320, 57600, 28800, 18000,
    88640, 432000, 4160, 3200, 42800, 43600, 10560, 115200, 86400, 57600,
    28800, 432000, 345600, 115200, 44494, 10506, 177240, 241487, 143028, 273564,
    189391, 172800, 21600, 64800, 302400, 752188, 86400, 100800, 19440, 115200,
    64800, 3600, 230400, 583200, 259200, 183600, 3600, 144000, 14400, 86400,
    110100, 28800, 43200, 57600, 468000, 950400, 400400, 883800, 273600, 432000,
    864000, 202600, 203400, 277680, 105000, 580080, 4533960, 432000, 1411200, 172800,
    86400, 1123200, 1555200, 777600, 1296000, 1872000, 335600, 921600, 1036800, 1728000,
    777600, 57600, 17280,
]

BUILTIN_DATASETS = {
    "ntds": FailureDataset("ntds", np.array(_NTDS, float), "day", "Table 1"),
    "musa1": FailureDataset("musa1", np.array(_MUSA1, float), "second", "Table 2"),
    "musa2": FailureDataset("musa2", np.array(_MUSA2, float), "second", "Table 3"),
    "musa3": FailureDataset("musa3", np.array(_MUSA3, float), "second", "Table 4"),
}


def builtin_dataset(name: str) -> FailureDataset:
    """Return one of the four bundled failure datasets by name."""
    try:
        return BUILTIN_DATASETS[name.lower()]
    except KeyError:
        valid = ", ".join(sorted(BUILTIN_DATASETS))
        raise KeyError(f"unknown dataset {name!r}; valid names: {valid}") from None


def prefix(dataset: FailureDataset, k: int) -> FailureDataset:
    """First k intervals of `dataset`, named `<name>[:k]`."""
    if not 1 <= k <= len(dataset):
        raise ValueError(f"prefix length {k} out of range 1..{len(dataset)}")
    if k == len(dataset):
        return dataset
    return FailureDataset(
        f"{dataset.name}[:{k}]", dataset.intervals[:k], dataset.unit, dataset.source
    )


def load_dataset(path, format: str = "plain", name: str | None = None) -> FailureDataset:
    """Load a failure dataset from a plain-text or CSV file.

    Plain format: one positive number per line, ``#`` comments ignored,
    optional ``# unit: <str>`` header.  CSV format: a single column named
    ``interval``.
    """
    path = Path(path)
    if format not in ("plain", "csv"):
        raise ValueError(f"unknown format {format!r}; expected 'plain' or 'csv'")
    unit = "unspecified"
    values: list[float] = []
    if format == "plain":
        for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.lower().startswith("unit:"):
                    unit = body[5:].strip()
                continue
            try:
                v = float(line)
            except ValueError:
                raise DatasetFormatError(f"{path}:{lineno}: not a number: {line!r}") from None
            if v <= 0:
                raise DatasetFormatError(f"{path}:{lineno}: interval must be positive, got {v}")
            values.append(v)
    else:
        with path.open(newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or "interval" not in reader.fieldnames:
                raise DatasetFormatError(f"{path}: csv must have an 'interval' column")
            for lineno, row in enumerate(reader, start=2):
                cell = (row.get("interval") or "").strip()
                try:
                    v = float(cell)
                except ValueError:
                    raise DatasetFormatError(f"{path}:{lineno}: not a number: {cell!r}") from None
                if v <= 0:
                    raise DatasetFormatError(f"{path}:{lineno}: interval must be positive, got {v}")
                values.append(v)
    if not values:
        raise DatasetFormatError(f"{path}: no intervals found")
    return FailureDataset(name or path.stem, np.array(values, float), unit)


def save_dataset(dataset: FailureDataset, path) -> None:
    """Write a dataset in the plain-text format (round-trips exactly)."""
    path = Path(path)
    lines = [f"# unit: {dataset.unit}"]
    lines += [f"{v:.17g}" for v in dataset.intervals]
    path.write_text("\n".join(lines) + "\n")
