"""Turn raw model text into structured predictions, guarding against runaway output.

Every input maps to exactly one Prediction; parsing never raises.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import Granularity, ParseStatus, Prediction

_INT_RE = re.compile(r"-?\d+")
_FLAT_CONTENT_RE = re.compile(r"^\s*(?:-?\d+\s*(?:,\s*-?\d+\s*)*)?,?\s*$")
_PAIR_RE = re.compile(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


@dataclass(frozen=True)
class ParseThresholds:
    """Caps that classify an answer as hallucinated rather than merely wrong.

    The tresholds are artifact knobs, not ground truth: the failure mode they
    target is a model enumerating indices until the token limit.
    """

    point_count_frac: float = 0.5   # parsed ints > frac * domain
    run_min_len: int = 50           # consecutive step-1 run at least this long ...
    run_cover_frac: float = 0.25    # ... and covering more than this fraction of the domain
    max_range_pairs: int = 20
    range_cover_frac: float = 0.9


DEFAULT_THRESHOLDS = ParseThresholds()


def _balanced_block(text: str, start: int) -> tuple[str, bool]:
    """Substring from the '[' at ``start`` to its matching ']'.

    Returns (block, complete); an unbalanced block runs to the end of text.
    """
    depth = 0
    for i in range(start, len(text)):
        ch = text[i]
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                return text[start : i + 1], True
    return text[start:], False


_TRUNCATED_CONTENT_RE = re.compile(r"^\s*(?:-?\d+\s*,\s*)*(?:-?\d+)?\s*$")


def _first_flat_list(text: str) -> tuple[list[int], bool] | None:
    """First bracketed list of bare integers; (values, complete) or None.

    Trailing prose, whitespace, and code fences around the list are ignored;
    a block whose content is not purely integers is skipped in favor of later
    candidates. An opening bracket followed by integers that never closes is
    treated as a truncated list.
    """
    truncated: tuple[list[int], bool] | None = None
    for match in re.finditer(r"\[", text):
        block, complete = _balanced_block(text, match.start())
        if complete:
            inner = block[1:-1]
            if _FLAT_CONTENT_RE.match(inner):
                return [int(tok) for tok in _INT_RE.findall(inner)], True
        elif truncated is None:
            inner = block[1:]
            values = [int(tok) for tok in _INT_RE.findall(inner)]
            if values and _TRUNCATED_CONTENT_RE.match(inner):
                truncated = (values, False)
    return truncated


def _first_pair_list(text: str) -> tuple[list[tuple[int, int]], bool] | None:
    """First bracketed list of [i, j] pairs; a bare flat [i, j] counts as one pair."""
    truncated: tuple[list[tuple[int, int]], bool] | None = None
    for match in re.finditer(r"\[", text):
        block, complete = _balanced_block(text, match.start())
        if complete:
            inner = block[1:-1]
            pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(inner)]
            if pairs:
                leftovers = _PAIR_RE.sub("", inner)
                if re.fullmatch(r"[\s,]*", leftovers):
                    return pairs, True
                continue
            if _FLAT_CONTENT_RE.match(inner):
                values = [int(tok) for tok in _INT_RE.findall(inner)]
                if len(values) == 0:
                    return [], True
                if len(values) == 2:
                    return [(values[0], values[1])], True
            continue
        if truncated is None:
            pairs = [(int(a), int(b)) for a, b in _PAIR_RE.findall(block)]
            if pairs:
                truncated = (pairs, False)
    return truncated


def _longest_step1_run(values: list[int]) -> int:
    best = run = 1 if values else 0
    for prev, cur in zip(values, values[1:]):
        run = run + 1 if cur == prev + 1 else 1
        best = max(best, run)
    return best


def _is_runaway_list(
    values: list[int], count_cap: float, domain: int, thresholds: ParseThresholds
) -> bool:
    if len(values) > count_cap:
        return True
    run = _longest_step1_run(values)
    return run >= thresholds.run_min_len and run > thresholds.run_cover_frac * domain


def _id_prediction(
    raw_text: str,
    domain: int,
    granularity: Granularity,
    thresholds: ParseThresholds,
) -> Prediction:
    excerpt = raw_text[:512]
    extracted = _first_flat_list(raw_text)
    if extracted is None:
        return Prediction(
            granularity=granularity,
            parse_status=ParseStatus.MALFORMED,
            raw_excerpt=excerpt,
        )
    values, complete = extracted
    # Point answers are implausible past half the timeline; variate answers
    # only past the id count itself.
    if granularity is Granularity.POINT:
        count_cap = thresholds.point_count_frac * domain
    else:
        count_cap = float(domain)
    if _is_runaway_list(values, count_cap, domain, thresholds):
        return Prediction(
            granularity=granularity,
            parse_status=ParseStatus.HALLUCINATED,
            raw_excerpt=excerpt,
            discarded=len(values),
        )
    kept = sorted({v for v in values if 0 <= v < domain})
    discarded = len(values) - sum(1 for v in values if 0 <= v < domain)
    if complete and not values:
        status = ParseStatus.EMPTY
    elif complete:
        status = ParseStatus.OK
    else:
        status = ParseStatus.TRUNCATED
    payload = {"points": tuple(kept)} if granularity is Granularity.POINT else {
        "variates": tuple(kept)
    }
    return Prediction(
        granularity=granularity,
        parse_status=status,
        raw_excerpt=excerpt,
        discarded=discarded,
        **payload,
    )


def parse_points(raw_text: str, T: int, thresholds: ParseThresholds = DEFAULT_THRESHOLDS) -> Prediction:
    """Parse a point-anomaly answer: first flat integer list, de-duplicated,
    out-of-domain indices discarded and counted."""
    return _id_prediction(raw_text, T, Granularity.POINT, thresholds)


def parse_variates(raw_text: str, M: int, thresholds: ParseThresholds = DEFAULT_THRESHOLDS) -> Prediction:
    """Parse a variate-anomaly answer against the id domain [0, M)."""
    return _id_prediction(raw_text, M, Granularity.VARIATE, thresholds)


def _merge_ranges(ranges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    merged: list[tuple[int, int]] = []
    for i, j in sorted(ranges):
        if merged and i <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], j))
        else:
            merged.append((i, j))
    return merged


def parse_ranges(raw_text: str, T: int, thresholds: ParseThresholds = DEFAULT_THRESHOLDS) -> Prediction:
    """Parse a range-anomaly answer: first list of [i, j] pairs.

    Pairs are normalized to i <= j, clipped to [0, T-1], and merged when they
    overlap; answers enumerating implausibly many or implausibly wide ranges
    are classed as hallucinated.
    """
    excerpt = raw_text[:512]
    extracted = _first_pair_list(raw_text)
    if extracted is None:
        return Prediction(
            granularity=Granularity.RANGE,
            parse_status=ParseStatus.MALFORMED,
            raw_excerpt=excerpt,
        )
    pairs, complete = extracted
    normalized = [(min(i, j), max(i, j)) for i, j in pairs]
    in_domain = [
        (max(i, 0), min(j, T - 1)) for i, j in normalized if j >= 0 and i <= T - 1
    ]
    discarded = len(normalized) - len(in_domain)
    merged = _merge_ranges(in_domain)
    covered = sum(j - i + 1 for i, j in merged)
    if len(pairs) > thresholds.max_range_pairs or covered > thresholds.range_cover_frac * T:
        return Prediction(
            granularity=Granularity.RANGE,
            parse_status=ParseStatus.HALLUCINATED,
            raw_excerpt=excerpt,
            discarded=len(pairs),
        )
    if complete and not pairs:
        status = ParseStatus.EMPTY
    elif complete:
        status = ParseStatus.OK
    else:
        status = ParseStatus.TRUNCATED
    return Prediction(
        granularity=Granularity.RANGE,
        parse_status=status,
        ranges=tuple(merged),
        raw_excerpt=excerpt,
        discarded=discarded,
    )


def parse_answer(
    raw_text: str,
    granularity: Granularity,
    T: int,
    M: int,
    thresholds: ParseThresholds = DEFAULT_THRESHOLDS,
) -> Prediction:
    """Dispatch on granularity; the domain is T for indices, M for variate ids."""
    if granularity is Granularity.POINT:
        return parse_points(raw_text, T, thresholds)
    if granularity is Granularity.RANGE:
        return parse_ranges(raw_text, T, thresholds)
    return parse_variates(raw_text, M, thresholds)


def format_prediction(prediction: Prediction) -> str:
    """Canonical answer text for a prediction, in the prompts' answer format."""
    if prediction.granularity is Granularity.RANGE:
        return str([list(ij) for ij in prediction.ranges])
    if prediction.granularity is Granularity.POINT:
        return str(list(prediction.points))
    return str(list(prediction.variates))
