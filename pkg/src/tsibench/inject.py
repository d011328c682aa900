"""Labeled anomaly injection: point spikes, range rewrites, variate swaps, dropping."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .core import (
    AnomalyType,
    BaseGenerator,
    ConfigError,
    Granularity,
    AnomalyLabel,
    Series,
    SeriesKind,
    TsiBenchError,
    POINT_TYPES,
    RANGE_TYPES,
    VARIATE_TYPES,
)

ALLOWED_IRREGULARITY = (0.0, 0.05, 0.10, 0.15, 0.20, 0.25)
ALLOWED_VARIATE_COUNTS = (4, 9, 16, 25, 36)

RULE_IRREGULAR_CONTEXTUAL = "irregular-contextual"
RULE_IMPLICIT_SEASONAL = "implicit-seasonal"

EXCLUSION_REASONS = {
    RULE_IRREGULAR_CONTEXTUAL: (
        "dropping points around a contextual anomaly destroys the context "
        "window it is defined against"
    ),
    RULE_IMPLICIT_SEASONAL: (
        "real-world base series have no determined seasonality, so a seasonal "
        "rewrite is undefined"
    ),
}


class InjectionInfeasibleError(TsiBenchError):
    """The requested anomalies cannot be placed in this series."""


class UnsupportedAnomalyError(TsiBenchError):
    """This anomaly type cannot be injected into this series."""


class PlanError(TsiBenchError):
    """The experiment matrix requests nothing buildable."""


@dataclass(frozen=True)
class InjectionConfig:
    lam: float = 3.0
    context_k: int = 10
    n_point_anomalies: tuple[int, int] = (5, 20)
    n_ranges: tuple[int, int] = (1, 3)
    range_len: tuple[int, int] = (10, 40)
    n_anomalous_variates: tuple[int, int] = (1, 3)
    magnitude: float = 1.0
    irregularity_r: float = 0.0
    seed: int = 0
    trend_return_to_baseline: bool = True

    def __post_init__(self) -> None:
        if self.lam <= 0:
            raise ConfigError("lambda must be > 0")
        if self.context_k < 1:
            raise ConfigError("context window half-width k must be >= 1")
        for name in ("n_point_anomalies", "n_ranges", "range_len", "n_anomalous_variates"):
            lo, hi = getattr(self, name)
            if lo < 1 or hi < lo:
                raise ConfigError(f"{name} must be a nonempty range with lo >= 1")
            object.__setattr__(self, name, (int(lo), int(hi)))
        if self.range_len[0] < 2:
            raise ConfigError("range_len lower bound must be >= 2")
        if not (0.0 <= self.irregularity_r <= 0.25):
            raise ConfigError("irregularity ratio must lie in [0, 0.25]")


# Distinct stream tags so injectors with the same seed draw decorrelated values.
_OP_GLOBAL, _OP_CONTEXTUAL, _OP_SEASONAL, _OP_TREND, _OP_SHAPELET, _OP_VARIATE, _OP_DROP = range(7)


def _op_rng(seed: int, op_tag: int) -> np.random.Generator:
    return np.random.default_rng([seed & (2**64 - 1), op_tag])


def _draw_count(rng: np.random.Generator, bounds: tuple[int, int]) -> int:
    lo, hi = bounds
    return int(rng.integers(lo, hi + 1))


def _max_points_with_gap(domain: int, min_gap: int) -> int:
    """Largest n such that n positions with pairwise gaps >= min_gap fit."""
    if domain <= 0:
        return 0
    return (domain + min_gap - 1) // min_gap


def _place_points(
    rng: np.random.Generator, lo: int, hi: int, n: int, min_gap: int
) -> list[int]:
    """n positions in [lo, hi], pairwise gaps >= min_gap, uniform over valid sets.

    Uses the standard bijection: subtract (min_gap - 1) * rank to reduce to an
    unconstrained choice without replacement.
    """
    domain = hi - lo + 1
    reduced = domain - (n - 1) * (min_gap - 1)
    if reduced < n:
        raise InjectionInfeasibleError(
            f"cannot place {n} points with gap {min_gap} in {domain} positions"
        )
    picks = np.sort(rng.choice(reduced, size=n, replace=False))
    return [lo + int(p) + i * (min_gap - 1) for i, p in enumerate(picks)]


def _draw_point_count(
    rng: np.random.Generator, cfg: InjectionConfig, domain: int
) -> int:
    """Anomaly count from the configured range, capped at what the minimum
    gap allows in this domain; the lower bound not fitting is an error."""
    lo, hi = cfg.n_point_anomalies
    cap = _max_points_with_gap(domain, 2 * cfg.context_k + 1)
    if cap < lo:
        raise InjectionInfeasibleError(
            f"cannot place {lo} points with gap {2 * cfg.context_k + 1} "
            f"in {domain} positions"
        )
    return int(rng.integers(lo, min(hi, cap) + 1))


def _place_windows(
    rng: np.random.Generator, T: int, n: int, len_bounds: tuple[int, int], min_sep: int = 2
) -> list[tuple[int, int]]:
    """n disjoint inclusive windows, left to right, each placed uniformly in
    the positions still feasible given the windows that remain to be placed."""
    lengths = [_draw_count(rng, len_bounds) for _ in range(n)]
    if any(ln > T for ln in lengths) or sum(lengths) + (n - 1) * min_sep > T:
        raise InjectionInfeasibleError(
            f"cannot fit {n} windows of lengths {lengths} into {T} samples"
        )
    windows: list[tuple[int, int]] = []
    cursor = 0
    for i, ln in enumerate(lengths):
        tail = sum(lengths[i + 1 :]) + (n - 1 - i) * min_sep
        latest = T - ln - tail
        if latest < cursor:
            raise InjectionInfeasibleError("window placement ran out of room")
        start = int(rng.integers(cursor, latest + 1))
        windows.append((start, start + ln - 1))
        cursor = start + ln + min_sep
    return windows


def _require_univariate_regular(series: Series, op: str) -> np.ndarray:
    if series.kind is not SeriesKind.UNIVARIATE:
        raise UnsupportedAnomalyError(f"{op} applies to univariate series only")
    if not series.is_regular:
        raise UnsupportedAnomalyError(f"{op} applies to regular series only")
    return series.values[0].copy()


def _spike(
    rng: np.random.Generator, x: np.ndarray, t: int, sigma: float, cfg: InjectionConfig
) -> None:
    """Displace x[t] by more than lam*sigma, direction random, scale uniform."""
    base = x[t]
    while True:
        sign = -1.0 if rng.random() < 0.5 else 1.0
        u = rng.random()
        candidate = base + sign * (cfg.lam + u * cfg.magnitude) * sigma
        if abs(candidate - base) > cfg.lam * sigma:
            x[t] = candidate
            return


def inject_global(series: Series, cfg: InjectionConfig) -> tuple[Series, AnomalyLabel]:
    """Spikes/dips that exceed lam * std of the whole series."""
    x = _require_univariate_regular(series, "global injection")
    sigma = float(x.std())
    if sigma == 0.0:
        raise InjectionInfeasibleError("zero variance series: threshold is degenerate")
    rng = _op_rng(cfg.seed, _OP_GLOBAL)
    n = _draw_point_count(rng, cfg, series.T)
    points = _place_points(rng, 0, series.T - 1, n, 2 * cfg.context_k + 1)
    for t in points:
        _spike(rng, x, t, sigma, cfg)
    label = AnomalyLabel(
        granularity=Granularity.POINT,
        anomaly_type=AnomalyType.GLOBAL,
        points=tuple(points),
    )
    return series.with_values(x[np.newaxis, :]), label


def inject_contextual(series: Series, cfg: InjectionConfig) -> tuple[Series, AnomalyLabel]:
    """Glitches that exceed lam * std of their local context window."""
    x = _require_univariate_regular(series, "contextual injection")
    k = cfg.context_k
    # Candidates keep the full window in bounds, so labels never fall within k
    # of either boundary; with T == 2k + 1 the single candidate's window is
    # the whole series and the criterion coincides with the global one.
    lo_idx, hi_idx = k, series.T - 1 - k
    if hi_idx < lo_idx:
        raise InjectionInfeasibleError(
            f"T={series.T} leaves no in-bounds context window for k={k}"
        )
    rng = _op_rng(cfg.seed, _OP_CONTEXTUAL)
    n = _draw_point_count(rng, cfg, hi_idx - lo_idx + 1)
    points = _place_points(rng, lo_idx, hi_idx, n, 2 * k + 1)
    base = x.copy()
    for t in points:
        sigma_local = float(base[t - k : t + k + 1].std())
        if sigma_local == 0.0:
            raise InjectionInfeasibleError(f"zero variance context window at t={t}")
        _spike(rng, x, t, sigma_local, cfg)
    label = AnomalyLabel(
        granularity=Granularity.POINT,
        anomaly_type=AnomalyType.CONTEXTUAL,
        points=tuple(points),
    )
    return series.with_values(x[np.newaxis, :]), label


def _base_wave_params(series: Series) -> tuple[float, float, float]:
    params = series.gen_params
    if "period" not in params or "amplitude" not in params:
        raise UnsupportedAnomalyError(
            "seasonal injection needs a known base period and amplitude "
            "(closed-form generator); rule: " + RULE_IMPLICIT_SEASONAL
        )
    return float(params["amplitude"]), float(params["period"]), float(params.get("noise_sigma", 0.0))


def inject_seasonal(series: Series, cfg: InjectionConfig) -> tuple[Series, AnomalyLabel]:
    """Windows re-synthesized at 2x / 3x / half frequency, phase-matched on entry."""
    x = _require_univariate_regular(series, "seasonal injection")
    amplitude, period, noise_sigma = _base_wave_params(series)
    rng = _op_rng(cfg.seed, _OP_SEASONAL)
    n = _draw_count(rng, cfg.n_ranges)
    windows = _place_windows(rng, series.T, n, cfg.range_len)
    for i, j in windows:
        factor = float(rng.choice([2.0, 3.0, 0.5]))
        offsets = np.arange(j - i + 1, dtype=np.float64)
        phase = 2.0 * np.pi * (i / period + factor * offsets / period)
        segment = amplitude * np.sin(phase)
        if noise_sigma > 0:
            segment = segment + rng.normal(0.0, noise_sigma, size=segment.shape)
        x[i : j + 1] = segment
    label = AnomalyLabel(
        granularity=Granularity.RANGE,
        anomaly_type=AnomalyType.SEASONAL,
        ranges=tuple(windows),
    )
    return series.with_values(x[np.newaxis, :]), label


def inject_trend(series: Series, cfg: InjectionConfig) -> tuple[Series, AnomalyLabel]:
    """Linear ramps that push the window 2 to 4 sigma off its course."""
    x = _require_univariate_regular(series, "trend injection")
    sigma = float(x.std())
    if sigma == 0.0:
        raise InjectionInfeasibleError("zero variance series: ramp scale is degenerate")
    rng = _op_rng(cfg.seed, _OP_TREND)
    n = _draw_count(rng, cfg.n_ranges)
    windows = _place_windows(rng, series.T, n, cfg.range_len)
    for i, j in windows:
        c = float(rng.uniform(2.0, 4.0))
        sign = -1.0 if rng.random() < 0.5 else 1.0
        slope = sign * c * sigma / (j - i)
        ramp = slope * np.arange(j - i + 1, dtype=np.float64)
        x[i : j + 1] += ramp
        if not cfg.trend_return_to_baseline and j + 1 < series.T:
            x[j + 1 :] += ramp[-1]
    label = AnomalyLabel(
        granularity=Granularity.RANGE,
        anomaly_type=AnomalyType.TREND,
        ranges=tuple(windows),
    )
    return series.with_values(x[np.newaxis, :]), label


def _shapelet_waveform(
    rng: np.random.Generator,
    shape: str,
    length: int,
    mean: float,
    amp: float,
    period: float,
    noise_sigma: float,
) -> np.ndarray:
    offsets = np.arange(length, dtype=np.float64)
    tau = np.mod(offsets / period, 1.0)
    if shape == "square":
        wave = np.where(tau < 0.5, 1.0, -1.0)
    elif shape == "triangle":
        wave = 1.0 - 4.0 * np.abs(tau - 0.5)
    elif shape == "flat":
        wave = np.zeros(length)
    else:
        raise ValueError(f"unknown shapelet waveform {shape!r}")
    out = mean + amp * wave
    if noise_sigma > 0:
        out = out + rng.normal(0.0, noise_sigma, size=length)
    return out


def inject_shapelet(series: Series, cfg: InjectionConfig) -> tuple[Series, AnomalyLabel]:
    """Windows replaced by a different waveform of matched mean and amplitude."""
    x = _require_univariate_regular(series, "shapelet injection")
    rng = _op_rng(cfg.seed, _OP_SHAPELET)
    n = _draw_count(rng, cfg.n_ranges)
    windows = _place_windows(rng, series.T, n, cfg.range_len)
    params = series.gen_params
    noise_sigma = float(params.get("noise_sigma", 0.0))
    for i, j in windows:
        length = j - i + 1
        original = x[i : j + 1].copy()
        mean = float(original.mean())
        amp = float((original.max() - original.min()) / 2.0)
        if amp == 0.0:
            amp = float(x.std())
        if amp == 0.0:
            raise InjectionInfeasibleError("flat window in flat series: nothing to reshape")
        period = float(params.get("period", max(8, length / 2)))
        shape = str(rng.choice(["square", "triangle", "flat"]))
        wave = _shapelet_waveform(rng, shape, length, mean, amp, period, noise_sigma)
        # Two-sample cross-fade at each end so the splice is not itself a spike.
        if length >= 5:
            for d, w in ((0, 1.0 / 3.0), (1, 2.0 / 3.0)):
                wave[d] = (1 - w) * original[d] + w * wave[d]
                wave[-1 - d] = (1 - w) * original[-1 - d] + w * wave[-1 - d]
        x[i : j + 1] = wave
    label = AnomalyLabel(
        granularity=Granularity.RANGE,
        anomaly_type=AnomalyType.SHAPELET,
        ranges=tuple(windows),
    )
    return series.with_values(x[np.newaxis, :]), label


def _variate_waveform(
    rng: np.random.Generator,
    anomaly_type: AnomalyType,
    length: int,
    mean: float,
    amp: float,
    period: float,
    noise_sigma: float,
) -> np.ndarray:
    offsets = np.arange(length, dtype=np.float64)
    tau = np.mod(offsets / period, 1.0)
    if anomaly_type is AnomalyType.TRIANGLE:
        wave = 1.0 - 4.0 * np.abs(tau - 0.5)
    elif anomaly_type is AnomalyType.SQUARE:
        wave = np.where(tau < 0.5, 1.0, -1.0)
    elif anomaly_type is AnomalyType.SAWTOOTH:
        # Gradual rise, sharp drop.
        wave = 2.0 * tau - 1.0
    elif anomaly_type is AnomalyType.RANDOM:
        steps = rng.choice([-1.0, 1.0], size=length)
        walk = np.cumsum(steps)
        peak = np.abs(walk).max()
        return mean + amp * walk / (peak if peak > 0 else 1.0)
    else:
        raise ConfigError(f"{anomaly_type.value} is not a variate-wise anomaly type")
    out = mean + amp * wave
    if noise_sigma > 0:
        out = out + rng.normal(0.0, noise_sigma, size=length)
    return out


def inject_variate(
    series: Series, cfg: InjectionConfig, anomaly_type: AnomalyType
) -> tuple[Series, AnomalyLabel]:
    """Replace whole variates with a waveform alien to the majority pattern."""
    if series.kind is not SeriesKind.MULTIVARIATE:
        raise UnsupportedAnomalyError("variate injection applies to multivariate series")
    if not series.is_regular:
        raise UnsupportedAnomalyError("variate injection applies to regular series")
    if anomaly_type not in VARIATE_TYPES:
        raise ConfigError(f"{anomaly_type.value} is not a variate-wise anomaly type")
    m = series.M
    lo, hi = cfg.n_anomalous_variates
    if hi >= m:
        raise ConfigError(
            f"n_anomalous_variates upper bound {hi} must be < M={m}: the "
            "majority pattern has to stay normal"
        )
    rng = _op_rng(cfg.seed, _OP_VARIATE)
    n = _draw_count(rng, (lo, hi))
    ids = sorted(int(v) for v in rng.choice(m, size=n, replace=False))
    values = series.values.copy()
    params = series.gen_params
    for vid in ids:
        row = values[vid]
        mean = float(row.mean())
        if "amplitude" in params:
            amp = float(params["amplitude"])
        else:
            amp = float((row.max() - row.min()) / 2.0) or 1.0
        period = float(params.get("period", max(16, series.S // 8)))
        noise_sigma = float(params.get("noise_sigma", 0.0))
        values[vid] = _variate_waveform(
            rng, anomaly_type, series.S, mean, amp, period, noise_sigma
        )
    label = AnomalyLabel(
        granularity=Granularity.VARIATE,
        anomaly_type=anomaly_type,
        variates=tuple(ids),
    )
    return series.with_values(values), label


def inject(
    series: Series, cfg: InjectionConfig, anomaly_type: AnomalyType
) -> tuple[Series, AnomalyLabel]:
    """Dispatch to the injector for the given anomaly type."""
    if anomaly_type is AnomalyType.GLOBAL:
        return inject_global(series, cfg)
    if anomaly_type is AnomalyType.CONTEXTUAL:
        return inject_contextual(series, cfg)
    if anomaly_type is AnomalyType.SEASONAL:
        return inject_seasonal(series, cfg)
    if anomaly_type is AnomalyType.TREND:
        return inject_trend(series, cfg)
    if anomaly_type is AnomalyType.SHAPELET:
        return inject_shapelet(series, cfg)
    return inject_variate(series, cfg, anomaly_type)


def drop_irregular(
    series: Series, label: AnomalyLabel, r: float, rng_seed: int
) -> tuple[Series, AnomalyLabel]:
    """Drop a fraction r of positions uniformly, keeping both endpoints.

    Retains S = round((1-r)*T) positions; the same mask applies to every
    variate. Labeled points that were dropped disappear from the label; a
    range survives only if at least half of its covered indices survive.
    """
    if not (0.0 < r <= 0.25):
        raise ConfigError(f"irregularity ratio must lie in (0, 0.25], got {r}")
    if not series.is_regular:
        raise ConfigError("series is already irregular")
    T = series.T
    S = int(round((1.0 - r) * T))
    rng = _op_rng(rng_seed, _OP_DROP)
    interior = rng.choice(np.arange(1, T - 1), size=S - 2, replace=False)
    keep = np.sort(np.concatenate([[0], interior, [T - 1]])).astype(np.int64)
    keep_set = set(int(t) for t in keep)
    dropped = Series(
        kind=series.kind,
        values=series.values[:, keep],
        timestamps=keep,
        T=T,
        base_generator=series.base_generator,
        seed=series.seed,
        gen_params=dict(series.gen_params),
    )
    if label.granularity is Granularity.POINT:
        new_label = replace(label, points=tuple(p for p in label.points if p in keep_set))
    elif label.granularity is Granularity.RANGE:
        kept_ranges = []
        for i, j in label.ranges:
            survivors = sum(1 for t in range(i, j + 1) if t in keep_set)
            if survivors * 2 >= (j - i + 1):
                kept_ranges.append((i, j))
        new_label = replace(label, ranges=tuple(kept_ranges))
    else:
        new_label = label
    return dropped, new_label


# --- post-hoc validation ------------------------------------------------------


def validate_point_injection(
    before: Series, after: Series, label: AnomalyLabel, cfg: InjectionConfig
) -> list[str]:
    """Recheck the displacement criterion and locality for a point injection."""
    problems: list[str] = []
    x0, x1 = before.values[0], after.values[0]
    mask = np.zeros(before.T, dtype=bool)
    for p in label.points:
        mask[p] = True
    if not np.array_equal(x0[~mask], x1[~mask]):
        problems.append("values changed outside labeled points")
    for t in label.points:
        delta = abs(x1[t] - x0[t])
        if label.anomaly_type is AnomalyType.GLOBAL:
            threshold = cfg.lam * float(x0.std())
        else:
            k = cfg.context_k
            threshold = cfg.lam * float(x0[t - k : t + k + 1].std())
        if not delta > threshold:
            problems.append(
                f"point {t}: |delta|={delta:.6g} does not exceed threshold {threshold:.6g}"
            )
    return problems


def _znorm_distance(a: np.ndarray, b: np.ndarray) -> float:
    def z(v: np.ndarray) -> np.ndarray:
        std = v.std()
        centered = v - v.mean()
        return centered / std if std > 0 else centered

    return float(np.linalg.norm(z(a) - z(b)) / math.sqrt(len(a)))


def validate_segment_injection(
    before: Series,
    after: Series,
    label: AnomalyLabel,
    min_distance: float = 0.25,
) -> list[str]:
    """Check locality plus a z-normalized distance floor for range/variate rewrites."""
    problems: list[str] = []
    if label.granularity is Granularity.RANGE:
        x0, x1 = before.values[0], after.values[0]
        mask = np.zeros(before.T, dtype=bool)
        for i, j in label.ranges:
            mask[i : j + 1] = True
        if not np.array_equal(x0[~mask], x1[~mask]):
            problems.append("values changed outside labeled ranges")
        for i, j in label.ranges:
            d = _znorm_distance(x0[i : j + 1], x1[i : j + 1])
            if d <= min_distance:
                problems.append(f"range [{i}, {j}]: rewrite distance {d:.4f} too small")
    elif label.granularity is Granularity.VARIATE:
        changed = set(label.variates)
        for m in range(before.M):
            same = np.array_equal(before.values[m], after.values[m])
            if m in changed and same:
                problems.append(f"variate {m} labeled anomalous but unchanged")
            if m not in changed and not same:
                problems.append(f"variate {m} changed without a label")
        for m in changed:
            d = _znorm_distance(before.values[m], after.values[m])
            if d <= min_distance:
                problems.append(f"variate {m}: rewrite distance {d:.4f} too small")
    else:
        raise ConfigError("use validate_point_injection for point labels")
    return problems


# --- experiment planning ------------------------------------------------------

SCENARIOS = {
    "sine": BaseGenerator.SINE,
    "symbols": BaseGenerator.UCR_SYMBOLS,
    "sine_cosine": BaseGenerator.SINE_COSINE,
    "articulatory_word_recognition": BaseGenerator.UEA_ARTICULATORY_WORD_RECOGNITION,
}

_UNIVARIATE_SCENARIOS = ("sine", "symbols")
_MULTIVARIATE_SCENARIOS = ("sine_cosine", "articulatory_word_recognition")


@dataclass(frozen=True)
class DatasetPlan:
    """One dataset to build: scenario x anomaly type x (M, r), n samples."""

    name: str
    scenario: str
    base_generator: BaseGenerator
    anomaly_type: AnomalyType
    M: int
    r: float
    samples: int
    seed: int
    archive_path: str | None = None

    @property
    def granularity(self) -> Granularity:
        return self.anomaly_type.granularity

    def sample_seed(self, index: int) -> int:
        """Stable per-sample seed: fresh noise per sample, reproducible per build."""
        ss = np.random.SeedSequence([self.seed & (2**64 - 1), index])
        return int(ss.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True)
class Exclusion:
    scenario: str
    anomaly_type: AnomalyType
    r: float
    rule: str

    def describe(self) -> str:
        return (
            f"{self.scenario} x {self.anomaly_type.value} (r={self.r:.2f}) "
            f"excluded by rule {self.rule}: {EXCLUSION_REASONS[self.rule]}"
        )


def _exclusion_rule(scenario: str, anomaly_type: AnomalyType, r: float) -> str | None:
    if anomaly_type is AnomalyType.CONTEXTUAL and r > 0:
        return RULE_IRREGULAR_CONTEXTUAL
    if anomaly_type is AnomalyType.SEASONAL and not SCENARIOS[scenario].is_explicit:
        return RULE_IMPLICIT_SEASONAL
    return None


def plan_datasets(matrix: dict) -> tuple[list[DatasetPlan], list[Exclusion]]:
    """Expand an experiment matrix into dataset plans minus the exclusion rules.

    The matrix maps: scenarios, anomaly_types, M_values, r_values,
    samples_per_dataset, plus optional archives (scenario -> file path) and
    seed. Raises PlanError when nothing buildable remains, naming the rules
    that removed everything.
    """
    try:
        scenarios = list(matrix["scenarios"])
        anomaly_types = [AnomalyType(t) for t in matrix["anomaly_types"]]
    except KeyError as exc:
        raise PlanError(f"matrix is missing required key {exc}") from exc
    except ValueError as exc:
        raise PlanError(f"unknown anomaly type in matrix: {exc}") from exc
    for s in scenarios:
        if s not in SCENARIOS:
            raise PlanError(f"unknown scenario {s!r}; expected one of {sorted(SCENARIOS)}")
    m_values = [int(m) for m in matrix.get("M_values", [9])]
    r_values = [float(r) for r in matrix.get("r_values", [0.0])]
    samples = int(matrix.get("samples_per_dataset", 100))
    base_seed = int(matrix.get("seed", 0))
    archives = dict(matrix.get("archives", {}))
    if samples < 1:
        raise PlanError("samples_per_dataset must be >= 1")
    for r in r_values:
        if not any(abs(r - allowed) < 1e-12 for allowed in ALLOWED_IRREGULARITY):
            raise PlanError(
                f"irregularity ratio {r} not in the supported set {ALLOWED_IRREGULARITY}"
            )
    for m in m_values:
        if m not in ALLOWED_VARIATE_COUNTS:
            raise PlanError(
                f"variate count M={m} not in the supported set {ALLOWED_VARIATE_COUNTS}"
            )

    # M and r are swept one at a time from their anchors (the M grid at the
    # anchor r, the r grid at the anchor M), never crossed against each other.
    anchor_r = 0.0 if any(r == 0.0 for r in r_values) else min(r_values)
    anchor_m = 9 if 9 in m_values else m_values[0]

    plans: list[DatasetPlan] = []
    exclusions: list[Exclusion] = []
    index = 0
    for scenario in scenarios:
        generator = SCENARIOS[scenario]
        univariate = scenario in _UNIVARIATE_SCENARIOS
        if not generator.is_explicit and scenario not in archives:
            raise PlanError(
                f"scenario {scenario!r} ingests an archive; add its path under [archives]"
            )
        for anomaly_type in anomaly_types:
            wants_univariate = anomaly_type.granularity is not Granularity.VARIATE
            if univariate != wants_univariate:
                continue  # structural mismatch, not a paper exclusion
            if univariate:
                combos = [(1, r) for r in r_values]
            else:
                combos = [(m, anchor_r) for m in m_values]
                combos += [(anchor_m, r) for r in r_values if r != anchor_r]
            for m, r in combos:
                rule = _exclusion_rule(scenario, anomaly_type, r)
                if rule is not None:
                    exclusions.append(Exclusion(scenario, anomaly_type, r, rule))
                    continue
                name = f"{scenario}-{anomaly_type.value}"
                if not univariate:
                    name += f"-M{m}"
                if r > 0:
                    name += f"-r{int(round(r * 100)):02d}"
                seed = int(
                    np.random.SeedSequence([base_seed & (2**64 - 1), index]).generate_state(
                        1, dtype=np.uint64
                    )[0]
                )
                plans.append(
                    DatasetPlan(
                        name=name,
                        scenario=scenario,
                        base_generator=generator,
                        anomaly_type=anomaly_type,
                        M=m,
                        r=r,
                        samples=samples,
                        seed=seed,
                        archive_path=archives.get(scenario),
                    )
                )
                index += 1
    if not plans:
        rules = sorted({e.rule for e in exclusions})
        if rules:
            details = "; ".join(
                f"{rule} ({EXCLUSION_REASONS[rule]})" for rule in rules
            )
            raise PlanError(f"matrix entirely excluded by rule(s): {details}")
        raise PlanError("matrix requests no buildable scenario/anomaly-type pairing")
    return plans, exclusions


def default_variate_bounds(M: int) -> tuple[int, int]:
    """Anomalous-variate count range: up to 3 for small grids, scaling with M
    while keeping the normal variates in the majority."""
    hi = max(1, min(max(3, M // 3), (M - 1) // 2))
    return (1, hi)
