"""Scoring: affiliation precision/recall for temporal events, vanilla sets for variates."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import pandas as pd

from .core import ConfigError, Granularity, ParseStatus, Prediction, AnomalyLabel

logger = logging.getLogger(__name__)


class MetricFamily(str, Enum):
    AFFILIATION = "affiliation"
    VANILLA = "vanilla"


@dataclass(frozen=True)
class EvalRecord:
    sample_id: str
    endpoint: str
    metric_family: MetricFamily
    precision: float
    recall: float
    f1: float
    hallucinated: bool
    flags: tuple[str, ...] = ()


def f1_score(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def vanilla_prf(predicted: Iterable[int], truth: Iterable[int]) -> tuple[float, float, float]:
    """Plain set precision/recall/F1 with explicit empty-set conventions.

    Both empty counts as a perfect (1, 1, 1); an empty side against a
    nonempty one scores zero.
    """
    pred = set(predicted)
    true = set(truth)
    if not pred and not true:
        return (1.0, 1.0, 1.0)
    if not pred or not true:
        return (0.0, 0.0, 0.0)
    hits = len(pred & true)
    precision = hits / len(pred)
    recall = hits / len(true)
    return (precision, recall, f1_score(precision, recall))


# --- affiliation metrics ------------------------------------------------------
#
# Events are inclusive integer index pairs lifted to half-open continuous
# intervals [i, j+1). The timeline is split into one affiliation zone per
# ground-truth event, cut at midpoints between consecutive events. Within a
# zone, distances between prediction mass and the truth event are converted to
# probabilities by comparing against a uniformly random point in the zone, and
# zone scores are averaged: over zones holding predictions for precision, over
# all zones for recall.


def _to_continuous(events: Sequence[tuple[int, int]]) -> list[tuple[float, float]]:
    return [(float(i), float(j) + 1.0) for i, j in events]


def _validate_events(
    events: Sequence[tuple[int, int]], T: int, t_start: float, name: str
) -> None:
    prev_end: int | None = None
    for i, j in events:
        if i > j:
            raise ConfigError(f"{name} event [{i}, {j}] has i > j")
        if i < t_start or j >= T:
            raise ConfigError(f"{name} event [{i}, {j}] outside [{t_start}, {T})")
        if prev_end is not None and i <= prev_end:
            raise ConfigError(f"{name} events must be sorted and disjoint")
        prev_end = j


def _zones(
    truth: list[tuple[float, float]], t_start: float, t_end: float
) -> list[tuple[float, float]]:
    cuts = [t_start]
    for (_, prev_end), (next_start, _) in zip(truth, truth[1:]):
        cuts.append((prev_end + next_start) / 2.0)
    cuts.append(t_end)
    return [(cuts[k], cuts[k + 1]) for k in range(len(truth))]


def _clip(
    intervals: list[tuple[float, float]], lo: float, hi: float
) -> list[tuple[float, float]]:
    out = []
    for a, b in intervals:
        a2, b2 = max(a, lo), min(b, hi)
        if b2 > a2:
            out.append((a2, b2))
    return out


def _ramp_integral(c: float, upper: float) -> float:
    """Integral of max(0, c - d) for d from 0 to upper."""
    m = min(max(upper, 0.0), max(c, 0.0))
    return c * m - m * m / 2.0


def _zone_precision(
    pieces: list[tuple[float, float]],
    event: tuple[float, float],
    zone: tuple[float, float],
) -> float:
    """Mean, over prediction mass, of P(dist(X, event) >= dist(x, event)) for
    X uniform on the zone."""
    a, b = event
    z0, z1 = zone
    extent = z1 - z0
    dl, dr = a - z0, z1 - b

    def survival_antiderivative(d: float) -> float:
        # Integral of the survival function over distances [0, d].
        return (_ramp_integral(dl, d) + _ramp_integral(dr, d)) / extent

    total = 0.0
    mass = 0.0
    for p0, p1 in pieces:
        mass += p1 - p0
        overlap = min(p1, b) - max(p0, a)
        if overlap > 0:
            total += overlap  # zero distance: survival probability is 1
        left_hi = min(p1, a)
        if left_hi > p0:
            total += survival_antiderivative(a - p0) - survival_antiderivative(a - left_hi)
        right_lo = max(p0, b)
        if p1 > right_lo:
            total += survival_antiderivative(p1 - b) - survival_antiderivative(right_lo - b)
    return total / mass


def _point_to_pieces_distance(y: float, pieces: list[tuple[float, float]]) -> float:
    best = math.inf
    for p0, p1 in pieces:
        if p0 <= y <= p1:
            return 0.0
        best = min(best, p0 - y if y < p0 else y - p1)
    return best


def _closer_than_random_probability(
    y: float, d: float, zone: tuple[float, float]
) -> float:
    """P(|y - Y| >= d) for Y uniform on the zone."""
    z0, z1 = zone
    covered = min(y + d, z1) - max(y - d, z0)
    return 1.0 - max(covered, 0.0) / (z1 - z0)


def _zone_recall(
    pieces: list[tuple[float, float]],
    event: tuple[float, float],
    zone: tuple[float, float],
) -> float:
    """Mean, over the truth event, of P(dist(y, Y) >= dist(y, predictions)) for
    Y uniform on the zone.

    The integrand is piecewise linear in y; integration is exact via midpoint
    evaluation between analytically enumerated breakpoints.
    """
    if not pieces:
        return 0.0
    a, b = event
    z0, z1 = zone
    # Distance-to-predictions kinks: piece endpoints and midpoints between
    # consecutive pieces.
    cuts = {a, b}
    for p0, p1 in pieces:
        cuts.update((p0, p1))
    for (_, prev_end), (next_start, _) in zip(pieces, pieces[1:]):
        cuts.add((prev_end + next_start) / 2.0)
    segments = [a] + sorted(c for c in cuts if a < c < b) + [b]
    # Within each segment d(y) is linear with slope in {-1, 0, +1}; the
    # integrand kinks where y - d(y) crosses z0 or y + d(y) crosses z1.
    extra: set[float] = set()
    for lo, hi in zip(segments, segments[1:]):
        d_lo = _point_to_pieces_distance(lo, pieces)
        d_hi = _point_to_pieces_distance(hi, pieces)
        slope = (d_hi - d_lo) / (hi - lo)
        for sign, edge in ((1.0, z1), (-1.0, z0)):
            denom = 1.0 + sign * slope
            if denom == 0.0:
                continue
            y_star = (edge - sign * (d_lo - slope * lo)) / denom
            if lo < y_star < hi:
                extra.add(y_star)
    all_cuts = sorted(set(segments) | extra)
    total = 0.0
    for lo, hi in zip(all_cuts, all_cuts[1:]):
        width = hi - lo
        if width <= 0:
            continue
        mid = (lo + hi) / 2.0
        d = _point_to_pieces_distance(mid, pieces)
        total += width * _closer_than_random_probability(mid, d, zone)
    return total / (b - a)


def affiliation_prf(
    predicted: Sequence[tuple[int, int]],
    truth: Sequence[tuple[int, int]],
    T: int,
    t_start: int = 0,
) -> tuple[float, float, float]:
    """Affiliation precision/recall/F1 over inclusive-interval events in [t_start, T).

    Point events are passed as unit intervals [t, t]. With no truth and no
    predictions the score is perfect; predictions without any truth, or no
    predictions at all, score zero.
    """
    predicted = sorted(tuple(e) for e in predicted)
    truth = sorted(tuple(e) for e in truth)
    _validate_events(predicted, T, t_start, "predicted")
    _validate_events(truth, T, t_start, "truth")
    if not truth:
        return (1.0, 1.0, 1.0) if not predicted else (0.0, 0.0, 0.0)
    if not predicted:
        return (0.0, 0.0, 0.0)
    truth_c = _to_continuous(truth)
    pred_c = _to_continuous(predicted)
    zones = _zones(truth_c, float(t_start), float(T))
    precisions: list[float] = []
    recalls: list[float] = []
    for event, zone in zip(truth_c, zones):
        pieces = _clip(pred_c, zone[0], zone[1])
        if pieces:
            precisions.append(_zone_precision(pieces, event, zone))
        recalls.append(_zone_recall(pieces, event, zone))
    precision = sum(precisions) / len(precisions) if precisions else 0.0
    recall = sum(recalls) / len(recalls)
    return (precision, recall, f1_score(precision, recall))


# --- per-sample scoring -------------------------------------------------------


def metric_family_for(granularity: Granularity) -> MetricFamily:
    return (
        MetricFamily.VANILLA
        if granularity is Granularity.VARIATE
        else MetricFamily.AFFILIATION
    )


def score_prediction(
    sample_id: str,
    endpoint: str,
    label: AnomalyLabel,
    prediction: Prediction,
    T: int,
) -> EvalRecord:
    """Score one parsed prediction against its ground truth.

    Hallucinated and malformed answers score zero and set the hallucinated
    flag; the parse status distinction is preserved upstream in the
    predictions file.
    """
    family = metric_family_for(label.granularity)
    flags: list[str] = []
    if prediction.granularity is not label.granularity:
        raise ConfigError("prediction and label granularity differ")
    if prediction.parse_status in (ParseStatus.HALLUCINATED, ParseStatus.MALFORMED):
        return EvalRecord(
            sample_id=sample_id,
            endpoint=endpoint,
            metric_family=family,
            precision=0.0,
            recall=0.0,
            f1=0.0,
            hallucinated=True,
            flags=(prediction.parse_status.value,),
        )
    if family is MetricFamily.VANILLA:
        if not label.variates and prediction.variates:
            flags.append("truth-empty-pred-nonempty")
        p, r, f = vanilla_prf(prediction.variates, label.variates)
    else:
        if label.granularity is Granularity.POINT:
            truth_events = [(t, t) for t in label.points]
            pred_events = [(t, t) for t in prediction.points]
        else:
            truth_events = list(label.ranges)
            pred_events = list(prediction.ranges)
        if truth_events and not pred_events:
            flags.append("precision-undefined")
        p, r, f = affiliation_prf(pred_events, truth_events, T)
    return EvalRecord(
        sample_id=sample_id,
        endpoint=endpoint,
        metric_family=family,
        precision=p,
        recall=r,
        f1=f,
        hallucinated=False,
        flags=tuple(flags),
    )


def aggregate(rows: Sequence[dict], group_by: Sequence[str]) -> pd.DataFrame:
    """Mean P/R/F1 (as percentages, 2 decimals) plus hallucination rate per group.

    ``rows`` are score records as dicts carrying at least precision, recall,
    f1, hallucinated, and the grouping keys.
    """
    if not rows:
        raise ConfigError("cannot aggregate an empty record list")
    frame = pd.DataFrame(list(rows))
    missing = [k for k in group_by if k not in frame.columns]
    if missing:
        raise ConfigError(f"grouping keys absent from records: {missing}")
    grouped = frame.groupby(list(group_by), dropna=False)
    out = grouped.agg(
        n=("f1", "size"),
        precision=("precision", "mean"),
        recall=("recall", "mean"),
        f1=("f1", "mean"),
        hallucination_rate=("hallucinated", "mean"),
    ).reset_index()
    for col in ("precision", "recall", "f1", "hallucination_rate"):
        out[col] = (out[col] * 100.0).round(2)
    return out
