"""Dataset ingestion from delimited text and embedding CSV output."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidFlag, ParseError

ORIENTATIONS = ("rows", "cols")


@dataclass(frozen=True)
class DatasetSpec:
    """Where and how to read a dataset.

    ``orientation="rows"`` means each file row is one data point (the usual
    CSV layout); it is transposed into the p x n convention on load.
    `label_column` is a 0-based field index excluded from the numeric matrix.
    """

    path: str
    delimiter: str = ","
    orientation: str = "rows"
    label_column: int | None = None
    header: bool = False


@dataclass(frozen=True)
class Dataset:
    X: np.ndarray
    labels: list[str] | None
    column_names: list[str] | None = None


def load_dataset(spec: DatasetSpec) -> Dataset:
    if spec.orientation not in ORIENTATIONS:
        raise InvalidFlag(f"orientation must be one of {ORIENTATIONS}, got {spec.orientation!r}")
    if spec.label_column is not None and spec.orientation != "rows":
        raise InvalidFlag("a label column is only meaningful when rows are points")
    if len(spec.delimiter) != 1:
        raise InvalidFlag(f"delimiter must be a single character, got {spec.delimiter!r}")
    try:
        with open(spec.path, newline="") as fh:
            return _parse(csv.reader(fh, delimiter=spec.delimiter), spec)
    except OSError as exc:
        raise ParseError(f"cannot read {spec.path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{spec.path} is not valid text") from exc


def _parse(reader, spec: DatasetSpec) -> Dataset:
    rows = []
    labels = [] if spec.label_column is not None else None
    names = None
    width = None
    for fields in reader:
        line = reader.line_num
        if not fields or all(not f.strip() for f in fields):
            continue
        if spec.header and names is None:
            names = [f.strip() for f in fields]
            continue
        if width is None:
            width = len(fields)
            if spec.label_column is not None and not 0 <= spec.label_column < width:
                raise ParseError(f"label column {spec.label_column} outside the {width} fields", line)
        elif len(fields) != width:
            raise ParseError(f"expected {width} fields, found {len(fields)}", line)
        values = []
        for col, text in enumerate(fields):
            if col == spec.label_column:
                labels.append(text.strip())
                continue
            try:
                value = float(text)
            except ValueError:
                raise ParseError(f"cannot parse {text.strip()!r} as a number", line, col + 1) from None
            if not math.isfinite(value):
                raise ParseError(f"non-finite value {text.strip()!r}", line, col + 1)
            values.append(value)
        rows.append(values)
    if not rows:
        raise ParseError("no data rows")
    if not rows[0]:
        raise ParseError("no numeric columns")
    data = np.array(rows, dtype=np.float64)
    X = data.T.copy() if spec.orientation == "rows" else data
    if names is not None and spec.label_column is not None:
        names = [nm for j, nm in enumerate(names) if j != spec.label_column]
    return Dataset(X=X, labels=labels, column_names=names)


def write_embedding_csv(path: str, embedding) -> None:
    """One row per component: ``component_i`` followed by the n scores.

    A header row ``component,point_1,...,point_n`` comes first. Values are
    written with ``repr`` so they parse back to the identical double.
    """
    E = np.atleast_2d(np.asarray(embedding, dtype=np.float64))
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["component"] + [f"point_{j + 1}" for j in range(E.shape[1])])
        for i, row in enumerate(E):
            writer.writerow([f"component_{i + 1}"] + [repr(float(v)) for v in row])


def read_embedding_csv(path: str) -> np.ndarray:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    n = len(rows[0]) - 1
    values = [[float(v) for v in row[1:]] for row in rows[1:]]
    return np.array(values, dtype=np.float64).reshape(len(values), n)
