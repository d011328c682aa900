"""Domain types, label algebra, and the dataset manifest shared by every stage."""

from __future__ import annotations

import hashlib
import json
import logging
import struct
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

logger = logging.getLogger(__name__)


class TsiBenchError(Exception):
    """Base class for all package errors."""


class ConfigError(TsiBenchError):
    """A configuration value violates its invariants."""


class ManifestError(TsiBenchError):
    """A manifest file could not be parsed or fails integrity checks."""


class UnsupportedGranularityError(TsiBenchError):
    """An operation was asked to handle a granularity it does not support."""


class SeriesKind(str, Enum):
    UNIVARIATE = "univariate"
    MULTIVARIATE = "multivariate"


class BaseGenerator(str, Enum):
    SINE = "sine"
    SINE_COSINE = "sine_cosine"
    UCR_SYMBOLS = "ucr_symbols"
    UEA_ARTICULATORY_WORD_RECOGNITION = "uea_articulatory_word_recognition"

    @property
    def is_explicit(self) -> bool:
        """True for closed-form generators, False for ingested real-world archives."""
        return self in (BaseGenerator.SINE, BaseGenerator.SINE_COSINE)


class Granularity(str, Enum):
    POINT = "point"
    RANGE = "range"
    VARIATE = "variate"


class AnomalyType(str, Enum):
    GLOBAL = "global"
    CONTEXTUAL = "contextual"
    SEASONAL = "seasonal"
    TREND = "trend"
    SHAPELET = "shapelet"
    TRIANGLE = "triangle"
    SQUARE = "square"
    SAWTOOTH = "sawtooth"
    RANDOM = "random"

    @property
    def granularity(self) -> Granularity:
        if self in (AnomalyType.GLOBAL, AnomalyType.CONTEXTUAL):
            return Granularity.POINT
        if self in (AnomalyType.SEASONAL, AnomalyType.TREND, AnomalyType.SHAPELET):
            return Granularity.RANGE
        return Granularity.VARIATE


POINT_TYPES = (AnomalyType.GLOBAL, AnomalyType.CONTEXTUAL)
RANGE_TYPES = (AnomalyType.SEASONAL, AnomalyType.TREND, AnomalyType.SHAPELET)
VARIATE_TYPES = (
    AnomalyType.TRIANGLE,
    AnomalyType.SQUARE,
    AnomalyType.SAWTOOTH,
    AnomalyType.RANDOM,
)


class ParseStatus(str, Enum):
    OK = "ok"
    EMPTY = "empty"
    TRUNCATED = "truncated"
    HALLUCINATED = "hallucinated"
    MALFORMED = "malformed"


@dataclass(frozen=True)
class Series:
    """A univariate or multivariate series sampled at integer index positions.

    ``values`` has one row per variate and one column per *retained* position;
    ``timestamps`` lists those positions within the nominal length ``T``. For a
    regular series S == T and timestamps == 0..T-1.
    """

    kind: SeriesKind
    values: np.ndarray
    timestamps: np.ndarray
    T: int
    base_generator: BaseGenerator
    seed: int
    gen_params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        values = np.ascontiguousarray(np.asarray(self.values, dtype=np.float64))
        timestamps = np.ascontiguousarray(np.asarray(self.timestamps, dtype=np.int64))
        if values.ndim != 2:
            raise ConfigError(f"values must be 2-D (M rows), got shape {values.shape}")
        if timestamps.ndim != 1:
            raise ConfigError("timestamps must be 1-D")
        m, s = values.shape
        if m < 1:
            raise ConfigError("series needs at least one variate")
        if s != timestamps.shape[0]:
            raise ConfigError(
                f"values rows have length {s} but there are {timestamps.shape[0]} timestamps"
            )
        if not np.all(np.isfinite(values)):
            raise ConfigError("series values must be finite")
        if self.T < 1:
            raise ConfigError("T must be positive")
        if s == 0 or s > self.T:
            raise ConfigError(f"retained count S={s} must satisfy 1 <= S <= T={self.T}")
        if np.any(np.diff(timestamps) <= 0):
            raise ConfigError("timestamps must be strictly increasing")
        if timestamps[0] < 0 or timestamps[-1] >= self.T:
            raise ConfigError(f"timestamps must lie in [0, {self.T})")
        if self.kind is SeriesKind.UNIVARIATE and m != 1:
            raise ConfigError("univariate series must have exactly one row")
        if self.kind is SeriesKind.MULTIVARIATE and m < 2:
            raise ConfigError("multivariate series must have at least two rows")
        values.setflags(write=False)
        timestamps.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "timestamps", timestamps)
        object.__setattr__(self, "seed", int(self.seed))

    @property
    def M(self) -> int:
        return self.values.shape[0]

    @property
    def S(self) -> int:
        return self.values.shape[1]

    @property
    def irregularity(self) -> float:
        """Fraction of dropped positions, 1 - S/T."""
        return 1.0 - self.S / self.T

    @property
    def is_regular(self) -> bool:
        return self.S == self.T

    def with_values(self, values: np.ndarray) -> "Series":
        """Copy of this series with replaced values (same positions and metadata)."""
        return Series(
            kind=self.kind,
            values=values,
            timestamps=self.timestamps,
            T=self.T,
            base_generator=self.base_generator,
            seed=self.seed,
            gen_params=dict(self.gen_params),
        )


def _as_sorted_unique(items: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted({int(x) for x in items}))


@dataclass(frozen=True)
class AnomalyLabel:
    """Ground truth at one of three granularities.

    Exactly one payload field matches the granularity; the other two stay
    empty. Ranges are inclusive on both endpoints.
    """

    granularity: Granularity
    anomaly_type: AnomalyType
    points: tuple[int, ...] = ()
    ranges: tuple[tuple[int, int], ...] = ()
    variates: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.anomaly_type.granularity is not self.granularity:
            raise ConfigError(
                f"anomaly type {self.anomaly_type.value} is not a "
                f"{self.granularity.value}-granularity type"
            )
        points = _as_sorted_unique(self.points)
        variates = _as_sorted_unique(self.variates)
        ranges = tuple(sorted((int(i), int(j)) for i, j in self.ranges))
        populated = [
            name
            for name, payload in (
                ("points", points),
                ("ranges", ranges),
                ("variates", variates),
            )
            if payload
        ]
        expected = {
            Granularity.POINT: "points",
            Granularity.RANGE: "ranges",
            Granularity.VARIATE: "variates",
        }[self.granularity]
        if any(name != expected for name in populated):
            raise ConfigError(
                f"{self.granularity.value} label may only populate {expected!r}, "
                f"got {populated}"
            )
        prev_end = None
        for i, j in ranges:
            if i > j:
                raise ConfigError(f"range [{i}, {j}] has i > j")
            if i < 0:
                raise ConfigError(f"range [{i}, {j}] has a negative start")
            if prev_end is not None and i <= prev_end:
                raise ConfigError("ranges must be pairwise disjoint")
            prev_end = j
        if points and points[0] < 0:
            raise ConfigError("point indices must be non-negative")
        if variates and variates[0] < 0:
            raise ConfigError("variate ids must be non-negative")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "ranges", ranges)
        object.__setattr__(self, "variates", variates)

    def validate_bounds(self, T: int, M: int) -> None:
        """Check index/id domains against a concrete series shape."""
        if self.points and self.points[-1] >= T:
            raise ConfigError(f"point index {self.points[-1]} outside [0, {T})")
        if self.ranges and self.ranges[-1][1] >= T:
            raise ConfigError(f"range end {self.ranges[-1][1]} outside [0, {T})")
        if self.variates and self.variates[-1] >= M:
            raise ConfigError(f"variate id {self.variates[-1]} outside [0, {M})")

    @property
    def is_empty(self) -> bool:
        return not (self.points or self.ranges or self.variates)


@dataclass(frozen=True)
class RenderMeta:
    """Geometry of a rendered image: grid shape, unused cells, pixel size."""

    grid_rows: int
    grid_cols: int
    blanks: int
    pixel_size: tuple[int, int]
    axes_drawn: bool

    def __post_init__(self) -> None:
        if self.grid_rows < 1 or self.grid_cols < 1:
            raise ConfigError("grid dimensions must be positive")
        if self.blanks < 0 or self.blanks >= self.grid_rows * self.grid_cols:
            raise ConfigError("blank count must lie in [0, rows*cols)")


@dataclass(frozen=True)
class Prediction:
    """A parsed model answer in the same payload shapes as a label."""

    granularity: Granularity
    parse_status: ParseStatus
    points: tuple[int, ...] = ()
    ranges: tuple[tuple[int, int], ...] = ()
    variates: tuple[int, ...] = ()
    raw_excerpt: str = ""
    discarded: int = 0

    def __post_init__(self) -> None:
        if self.parse_status in (ParseStatus.HALLUCINATED, ParseStatus.MALFORMED):
            if self.points or self.ranges or self.variates:
                raise ConfigError(
                    f"{self.parse_status.value} predictions must carry an empty payload"
                )
        object.__setattr__(self, "raw_excerpt", self.raw_excerpt[:512])

    @property
    def is_empty(self) -> bool:
        return not (self.points or self.ranges or self.variates)


@dataclass(frozen=True)
class Sample:
    """One benchmark item: series, label, rendered image reference, provenance."""

    id: str
    series: Series
    label: AnomalyLabel
    image_path: str
    render_meta: RenderMeta | None
    provenance: dict

    @classmethod
    def build(
        cls,
        series: Series,
        label: AnomalyLabel,
        image_path: str,
        render_meta: RenderMeta | None,
        provenance: dict,
    ) -> "Sample":
        label.validate_bounds(series.T, series.M)
        return cls(
            id=sample_content_hash(series, label),
            series=series,
            label=label,
            image_path=image_path,
            render_meta=render_meta,
            provenance=provenance,
        )


def sample_content_hash(series: Series, label: AnomalyLabel) -> str:
    """Content hash of (series, label), stable across platforms.

    Values are hashed as little-endian float64, index payloads as sorted
    little-endian int64 lists, so the id is a pure function of the data.
    """
    h = hashlib.sha256()
    h.update(series.kind.value.encode())
    h.update(series.base_generator.value.encode())
    h.update(struct.pack("<QQQQ", series.M, series.T, series.S, series.seed & (2**64 - 1)))
    h.update(series.timestamps.astype("<i8").tobytes())
    h.update(np.ascontiguousarray(series.values, dtype="<f8").tobytes())
    h.update(label.granularity.value.encode())
    h.update(label.anomaly_type.value.encode())
    flat: list[int] = list(label.points) + [x for ij in label.ranges for x in ij] + list(
        label.variates
    )
    h.update(np.asarray(flat, dtype="<i8").tobytes())
    return h.hexdigest()[:16]


def label_as_binary_mask(label: AnomalyLabel, T: int) -> np.ndarray:
    """Boolean vector with True at anomalous positions (points or inclusive ranges)."""
    if label.granularity is Granularity.VARIATE:
        raise UnsupportedGranularityError(
            "variate labels have no per-timestamp mask; use the variate id set"
        )
    mask = np.zeros(T, dtype=bool)
    for p in label.points:
        if p >= T:
            raise ConfigError(f"point index {p} outside [0, {T})")
        mask[p] = True
    for i, j in label.ranges:
        if j >= T:
            raise ConfigError(f"range end {j} outside [0, {T})")
        mask[i : j + 1] = True
    return mask


# --- manifest serialization -------------------------------------------------

_MANIFEST_PAYLOAD_KEY = {
    Granularity.POINT: "points",
    Granularity.RANGE: "ranges",
    Granularity.VARIATE: "variates",
}


def _sample_to_obj(sample: Sample) -> dict:
    series = sample.series
    label = sample.label
    obj: dict = {
        "id": sample.id,
        "kind": series.kind.value,
        "base_generator": series.base_generator.value,
        "seed": series.seed,
        "M": series.M,
        "T": series.T,
        "S": series.S,
        "timestamps": series.timestamps.tolist(),
        "values": series.values.reshape(-1).tolist(),
        "granularity": label.granularity.value,
        "anomaly_type": label.anomaly_type.value,
    }
    key = _MANIFEST_PAYLOAD_KEY[label.granularity]
    payload = getattr(label, key)
    obj[key] = [list(ij) for ij in payload] if key == "ranges" else list(payload)
    obj["image_path"] = sample.image_path
    if sample.render_meta is None:
        obj["render_meta"] = None
    else:
        rm = sample.render_meta
        obj["render_meta"] = {
            "grid_rows": rm.grid_rows,
            "grid_cols": rm.grid_cols,
            "blanks": rm.blanks,
            "pixel_size": list(rm.pixel_size),
            "axes_drawn": rm.axes_drawn,
        }
    obj["provenance"] = sample.provenance
    return obj


def _sample_from_obj(obj: dict) -> Sample:
    kind = SeriesKind(obj["kind"])
    m, t, s = int(obj["M"]), int(obj["T"]), int(obj["S"])
    values = np.asarray(obj["values"], dtype=np.float64).reshape(m, s)
    provenance = obj.get("provenance") or {}
    series = Series(
        kind=kind,
        values=values,
        timestamps=np.asarray(obj["timestamps"], dtype=np.int64),
        T=t,
        base_generator=BaseGenerator(obj["base_generator"]),
        seed=int(obj["seed"]),
        gen_params=dict(provenance.get("generator", {})),
    )
    granularity = Granularity(obj["granularity"])
    key = _MANIFEST_PAYLOAD_KEY[granularity]
    payload = obj.get(key, [])
    kwargs = {key: tuple(tuple(ij) for ij in payload) if key == "ranges" else tuple(payload)}
    label = AnomalyLabel(
        granularity=granularity,
        anomaly_type=AnomalyType(obj["anomaly_type"]),
        **kwargs,
    )
    rm_obj = obj.get("render_meta")
    render_meta = (
        None
        if rm_obj is None
        else RenderMeta(
            grid_rows=int(rm_obj["grid_rows"]),
            grid_cols=int(rm_obj["grid_cols"]),
            blanks=int(rm_obj["blanks"]),
            pixel_size=(int(rm_obj["pixel_size"][0]), int(rm_obj["pixel_size"][1])),
            axes_drawn=bool(rm_obj["axes_drawn"]),
        )
    )
    sample = Sample(
        id=obj["id"],
        series=series,
        label=label,
        image_path=obj["image_path"],
        render_meta=render_meta,
        provenance=provenance,
    )
    expected = sample_content_hash(series, label)
    if sample.id != expected:
        raise ManifestError(
            f"sample id {sample.id} does not match content hash {expected}"
        )
    return sample


def manifest_write(samples: Sequence[Sample], path: str | Path) -> None:
    """Write samples as JSONL, one object per line, UTF-8."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        for sample in samples:
            fh.write(json.dumps(_sample_to_obj(sample), ensure_ascii=False))
            fh.write("\n")


def manifest_read(path: str | Path) -> list[Sample]:
    """Read a JSONL manifest back into samples.

    Malformed lines raise ManifestError naming the line number. Missing image
    files are logged as warnings, never a failure.
    """
    path = Path(path)
    samples: list[Sample] = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
                sample = _sample_from_obj(obj)
            except ManifestError:
                raise
            except Exception as exc:
                raise ManifestError(f"{path}:{lineno}: malformed manifest line: {exc}") from exc
            samples.append(sample)
    missing = [
        s.image_path
        for s in samples
        if s.image_path and not (path.parent / s.image_path).exists()
    ]
    for img in missing:
        logger.warning("manifest image missing: %s", img)
    return samples
