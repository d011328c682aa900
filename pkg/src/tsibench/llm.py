"""Prompt construction, endpoint dispatch, response caching, and mock models."""

from __future__ import annotations

import base64
import hashlib
import json
import logging
import os
import threading
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Callable

import numpy as np
import requests

from .core import AnomalyLabel, Granularity, TsiBenchError

logger = logging.getLogger(__name__)

# The three task prompts. The texts are deliberate in every character,
# including the nonstandard spellings: parsers and caches key on their hashes,
# so any edit is a breaking change.
POINT_PROMPT = (
    "Detect points of anomalies in this time series, in terms of the x-axis "
    "coordinate. List one by one in a list. For example, if points x=2, 51, "
    'and 106 are anomalies, then output "[2, 51, 106]". If there are no '
    "anomalies, answer with an empty list []."
)
RANGE_PROMPT = (
    "Detect ranges of anomalies in this time series, in terms of the x-axis "
    "coordinate. List one by one in a list. For example, if ranges (incluing "
    "two endpoints) [2, 11], [50, 60], and [105, 118], are anomalies, then "
    'output "[[2, 11], [50, 60], [105, 118]]". If there are no anomalies, '
    "answer with an empty list []."
)
VARIATE_PROMPT = (
    "Detect univaraite time series of anomalies in this multivariate time "
    "series, in terms of ID of univaraite time series. The image is a "
    "multivariate time series including multiple subimages to indicate "
    "multiple univariate time series. From left to right and top to bottom, "
    "the ID of each subimage increases by 1, starting from 0. List one by one "
    'in a list. For example, if ID=0, 2, and 5 are anomalous univaraite time '
    'series, then output "[0, 2, 5]". If there are no anomalies, answer with '
    "an empty list []."
)


class ConfigurationError(TsiBenchError):
    """Endpoint configuration is unusable (e.g. missing API key)."""


class PermanentEndpointError(TsiBenchError):
    """The endpoint rejected the request; retrying cannot help."""


class TransientFailureError(TsiBenchError):
    """Retries were exhausted on transient failures."""


@dataclass(frozen=True)
class PromptTemplate:
    granularity: Granularity
    text: str

    @property
    def sha256(self) -> str:
        return hashlib.sha256(self.text.encode("utf-8")).hexdigest()


def build_prompt(granularity: Granularity) -> PromptTemplate:
    """The exact task prompt for a granularity."""
    text = {
        Granularity.POINT: POINT_PROMPT,
        Granularity.RANGE: RANGE_PROMPT,
        Granularity.VARIATE: VARIATE_PROMPT,
    }[granularity]
    return PromptTemplate(granularity=granularity, text=text)


class ApiStyle(str, Enum):
    OPENAI_CHAT = "openai_chat"
    GEMINI_GENERATE = "gemini_generate"
    LOCAL_MOCK = "local_mock"


class MockBehavior(str, Enum):
    ORACLE = "oracle"
    EMPTY = "empty"
    RUNAWAY = "runaway"
    RANDOM = "random"
    OFF_BY_K = "off_by_k"


@dataclass(frozen=True)
class ModelEndpoint:
    """How to reach one model. ``auth_env`` names an environment variable; the
    key value itself is never stored or logged."""

    name: str
    api_style: ApiStyle
    base_url: str = ""
    auth_env: str = ""
    max_tokens: int = 1024
    temperature: float = 0.0
    timeout_s: float = 60.0
    rate_limit_per_min: float = 60.0
    mock_behavior: MockBehavior | None = None
    mock_seed: int = 0
    mock_k: int = 1


def mock_model(
    behavior: MockBehavior | str, seed: int = 0, k: int = 1
) -> ModelEndpoint:
    """A deterministic local endpoint exhibiting the named behavior."""
    behavior = MockBehavior(behavior)
    name = f"mock-{behavior.value.replace('_', '-')}"
    if behavior is MockBehavior.RANDOM:
        name += f"-{seed}"
    if behavior is MockBehavior.OFF_BY_K:
        name += f"-{k}"
    return ModelEndpoint(
        name=name,
        api_style=ApiStyle.LOCAL_MOCK,
        rate_limit_per_min=1e9,
        mock_behavior=behavior,
        mock_seed=seed,
        mock_k=k,
    )


@dataclass(frozen=True)
class ResponseRecord:
    sample_id: str
    endpoint: str
    prompt_hash: str
    image_hash: str
    raw_text: str
    latency_ms: float
    prompt_tokens: int | None = None
    completion_tokens: int | None = None
    retrieved_from_cache: bool = False
    timestamp: float = 0.0
    error: str | None = None

    @property
    def cache_key(self) -> tuple[str, str, str, str]:
        return (self.sample_id, self.endpoint, self.prompt_hash, self.image_hash)

    def to_json(self) -> str:
        return json.dumps(
            {
                "sample_id": self.sample_id,
                "endpoint": self.endpoint,
                "prompt_hash": self.prompt_hash,
                "image_hash": self.image_hash,
                "raw_text": self.raw_text,
                "latency_ms": self.latency_ms,
                "prompt_tokens": self.prompt_tokens,
                "completion_tokens": self.completion_tokens,
                "retrieved_from_cache": False,
                "timestamp": self.timestamp,
                "error": self.error,
            },
            ensure_ascii=False,
        )

    @classmethod
    def from_json(cls, line: str) -> "ResponseRecord":
        obj = json.loads(line)
        return cls(**obj)


def content_hash(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()[:16]


class ResponseCache:
    """Append-only JSONL cache keyed by (sample, endpoint, prompt, image) hashes.

    Writes are serialized through a lock; re-putting an existing key is a
    no-op, so completed runs are idempotent.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._records: dict[tuple[str, str, str, str], ResponseRecord] = {}
        if self.path.exists():
            with self.path.open("r", encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        record = ResponseRecord.from_json(line)
                        self._records.setdefault(record.cache_key, record)

    def __len__(self) -> int:
        return len(self._records)

    def get(self, key: tuple[str, str, str, str]) -> ResponseRecord | None:
        with self._lock:
            record = self._records.get(key)
        if record is None:
            return None
        return replace(record, retrieved_from_cache=True)

    def put(self, record: ResponseRecord) -> None:
        with self._lock:
            if record.cache_key in self._records:
                return
            self._records[record.cache_key] = record
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(record.to_json())
                fh.write("\n")


class RateLimiter:
    """Spaces request starts at least 60/rpm seconds apart across threads."""

    def __init__(
        self,
        per_minute: float,
        clock: Callable[[], float] = time.monotonic,
        sleeper: Callable[[float], None] = time.sleep,
    ):
        self.interval = 60.0 / per_minute if per_minute > 0 else 0.0
        self._clock = clock
        self._sleep = sleeper
        self._lock = threading.Lock()
        self._next_slot = -float("inf")

    def acquire(self) -> None:
        if self.interval <= 0:
            return
        with self._lock:
            now = self._clock()
            slot = max(now, self._next_slot)
            self._next_slot = slot + self.interval
        delay = slot - now
        if delay > 0:
            self._sleep(delay)


@dataclass(frozen=True)
class SampleContext:
    """What a mock (and the cache key) needs to know about the queried sample."""

    sample_id: str
    granularity: Granularity
    T: int
    M: int
    label: AnomalyLabel | None = None


class _TransportError(Exception):
    def __init__(self, message: str, transient: bool):
        super().__init__(message)
        self.transient = transient


def _classify_status(status: int) -> bool:
    """True when the HTTP status is worth retrying."""
    return status == 429 or status >= 500


def _openai_transport(
    endpoint: ModelEndpoint, api_key: str, image_b64: str, prompt_text: str
) -> tuple[str, int | None, int | None]:
    body = {
        "model": endpoint.name,
        "messages": [
            {
                "role": "user",
                "content": [
                    {"type": "text", "text": prompt_text},
                    {
                        "type": "image_url",
                        "image_url": {"url": f"data:image/png;base64,{image_b64}"},
                    },
                ],
            }
        ],
        "max_tokens": endpoint.max_tokens,
        "temperature": endpoint.temperature,
    }
    try:
        resp = requests.post(
            endpoint.base_url.rstrip("/") + "/chat/completions",
            json=body,
            headers={"Authorization": f"Bearer {api_key}"},
            timeout=endpoint.timeout_s,
        )
    except requests.RequestException as exc:
        raise _TransportError(f"request failed: {exc}", transient=True) from exc
    if resp.status_code != 200:
        raise _TransportError(
            f"HTTP {resp.status_code}: {resp.text[:200]}",
            transient=_classify_status(resp.status_code),
        )
    payload = resp.json()
    text = payload["choices"][0]["message"]["content"] or ""
    usage = payload.get("usage") or {}
    return text, usage.get("prompt_tokens"), usage.get("completion_tokens")


def _gemini_transport(
    endpoint: ModelEndpoint, api_key: str, image_b64: str, prompt_text: str
) -> tuple[str, int | None, int | None]:
    body = {
        "contents": [
            {
                "parts": [
                    {"text": prompt_text},
                    {"inline_data": {"mime_type": "image/png", "data": image_b64}},
                ]
            }
        ],
        "generationConfig": {
            "maxOutputTokens": endpoint.max_tokens,
            "temperature": endpoint.temperature,
        },
    }
    url = f"{endpoint.base_url.rstrip('/')}/models/{endpoint.name}:generateContent"
    try:
        resp = requests.post(
            url,
            json=body,
            headers={"x-goog-api-key": api_key},
            timeout=endpoint.timeout_s,
        )
    except requests.RequestException as exc:
        raise _TransportError(f"request failed: {exc}", transient=True) from exc
    if resp.status_code != 200:
        raise _TransportError(
            f"HTTP {resp.status_code}: {resp.text[:200]}",
            transient=_classify_status(resp.status_code),
        )
    payload = resp.json()
    parts = payload["candidates"][0]["content"]["parts"]
    text = "".join(p.get("text", "") for p in parts)
    usage = payload.get("usageMetadata") or {}
    return text, usage.get("promptTokenCount"), usage.get("candidatesTokenCount")


def _truth_prediction_text(context: SampleContext) -> str:
    label = context.label
    if label is None:
        raise ConfigurationError("oracle mock needs the sample label from the manifest")
    if context.granularity is Granularity.POINT:
        return str(list(label.points))
    if context.granularity is Granularity.RANGE:
        return str([list(ij) for ij in label.ranges])
    return str(list(label.variates))


def _runaway_text(context: SampleContext) -> str:
    # An enumeration that plainly outruns the answer space, in the answer's
    # shape, like a model emitting ids until the token limit.
    if context.granularity is Granularity.RANGE:
        return str([[k, k + 1] for k in range(0, 998, 2)])
    return str(list(range(998)))


def _random_text(context: SampleContext, seed: int) -> str:
    rng = np.random.default_rng(
        [seed & (2**64 - 1), int(hashlib.sha256(context.sample_id.encode()).hexdigest()[:8], 16)]
    )
    if context.granularity is Granularity.VARIATE:
        n = int(rng.integers(0, max(2, context.M // 2) + 1))
        ids = sorted(rng.choice(context.M, size=min(n, context.M), replace=False).tolist())
        return str(ids)
    if context.granularity is Granularity.POINT:
        n = int(rng.integers(0, 21))
        pts = sorted(rng.choice(context.T, size=min(n, context.T), replace=False).tolist())
        return str(pts)
    n = int(rng.integers(0, 4))
    ranges = []
    for _ in range(n):
        i = int(rng.integers(0, max(1, context.T - 10)))
        j = i + int(rng.integers(1, 10))
        ranges.append([i, min(j, context.T - 1)])
    return str(sorted(ranges))


def _shift_label_text(context: SampleContext, k: int) -> str:
    label = context.label
    if label is None:
        raise ConfigurationError("off-by-k mock needs the sample label from the manifest")
    if context.granularity is Granularity.POINT:
        pts = sorted({min(max(p + k, 0), context.T - 1) for p in label.points})
        return str(pts)
    if context.granularity is Granularity.RANGE:
        shifted = [
            [min(max(i + k, 0), context.T - 1), min(max(j + k, 0), context.T - 1)]
            for i, j in label.ranges
        ]
        return str(shifted)
    ids = sorted({(v + k) % context.M for v in label.variates})
    return str(ids)


def _mock_response(endpoint: ModelEndpoint, context: SampleContext) -> str:
    behavior = endpoint.mock_behavior
    if behavior is MockBehavior.ORACLE:
        return _truth_prediction_text(context)
    if behavior is MockBehavior.EMPTY:
        return "[]"
    if behavior is MockBehavior.RUNAWAY:
        return _runaway_text(context)
    if behavior is MockBehavior.RANDOM:
        return _random_text(context, endpoint.mock_seed)
    if behavior is MockBehavior.OFF_BY_K:
        return _shift_label_text(context, endpoint.mock_k)
    raise ConfigurationError(f"local mock endpoint without a behavior: {endpoint.name}")


class LlmClient:
    """Queries one endpoint with caching, retries, and rate limiting.

    Shareable across worker threads: the cache serializes writes, the rate
    limiter serializes request starts.
    """

    def __init__(
        self,
        endpoint: ModelEndpoint,
        cache: ResponseCache,
        max_retries: int = 5,
        backoff_base_s: float = 0.5,
        clock: Callable[[], float] = time.monotonic,
        sleeper: Callable[[float], None] = time.sleep,
        transport: Callable[..., tuple[str, int | None, int | None]] | None = None,
    ):
        self.endpoint = endpoint
        self.cache = cache
        self.max_retries = max_retries
        self.backoff_base_s = backoff_base_s
        self._clock = clock
        self._sleep = sleeper
        self._limiter = RateLimiter(endpoint.rate_limit_per_min, clock, sleeper)
        if transport is not None:
            self._transport = transport
        elif endpoint.api_style is ApiStyle.OPENAI_CHAT:
            self._transport = _openai_transport
        elif endpoint.api_style is ApiStyle.GEMINI_GENERATE:
            self._transport = _gemini_transport
        else:
            self._transport = None

    def _api_key(self) -> str:
        if self.endpoint.api_style is ApiStyle.LOCAL_MOCK:
            return ""
        if not self.endpoint.auth_env:
            raise ConfigurationError(
                f"endpoint {self.endpoint.name} does not name an auth environment variable"
            )
        key = os.environ.get(self.endpoint.auth_env, "")
        if not key:
            raise ConfigurationError(
                f"environment variable {self.endpoint.auth_env} is not set"
            )
        return key

    def query(
        self,
        image_bytes: bytes,
        prompt: PromptTemplate,
        context: SampleContext,
    ) -> ResponseRecord:
        """Return the cached record when the key matches, else perform the call,
        persist it, and return it."""
        prompt_hash = content_hash(prompt.text)
        image_hash = content_hash(image_bytes)
        key = (context.sample_id, self.endpoint.name, prompt_hash, image_hash)
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        api_key = self._api_key()
        started = self._clock()
        if self.endpoint.api_style is ApiStyle.LOCAL_MOCK:
            raw_text = _mock_response(self.endpoint, context)
            record = ResponseRecord(
                sample_id=context.sample_id,
                endpoint=self.endpoint.name,
                prompt_hash=prompt_hash,
                image_hash=image_hash,
                raw_text=raw_text,
                latency_ms=0.0,
                timestamp=time.time(),
            )
            self.cache.put(record)
            return record
        image_b64 = base64.b64encode(image_bytes).decode("ascii")
        last_error: _TransportError | None = None
        for attempt in range(self.max_retries):
            self._limiter.acquire()
            try:
                text, p_tokens, c_tokens = self._transport(
                    self.endpoint, api_key, image_b64, prompt.text
                )
            except _TransportError as exc:
                if not exc.transient:
                    record = ResponseRecord(
                        sample_id=context.sample_id,
                        endpoint=self.endpoint.name,
                        prompt_hash=prompt_hash,
                        image_hash=image_hash,
                        raw_text="",
                        latency_ms=(self._clock() - started) * 1000.0,
                        timestamp=time.time(),
                        error=f"permanent: {exc}",
                    )
                    self.cache.put(record)
                    raise PermanentEndpointError(str(exc)) from exc
                last_error = exc
                logger.warning(
                    "transient failure from %s (attempt %d/%d): %s",
                    self.endpoint.name,
                    attempt + 1,
                    self.max_retries,
                    exc,
                )
                if attempt + 1 < self.max_retries:
                    self._sleep(self.backoff_base_s * (2.0**attempt))
                continue
            record = ResponseRecord(
                sample_id=context.sample_id,
                endpoint=self.endpoint.name,
                prompt_hash=prompt_hash,
                image_hash=image_hash,
                raw_text=text,
                latency_ms=(self._clock() - started) * 1000.0,
                prompt_tokens=p_tokens,
                completion_tokens=c_tokens,
                timestamp=time.time(),
            )
            self.cache.put(record)
            return record
        raise TransientFailureError(
            f"{self.endpoint.name}: retries exhausted ({last_error})"
        )


def query(
    endpoint: ModelEndpoint,
    image_bytes: bytes,
    prompt: PromptTemplate,
    context: SampleContext,
    cache: ResponseCache,
    **client_kwargs,
) -> ResponseRecord:
    """One-shot convenience wrapper around LlmClient.query."""
    return LlmClient(endpoint, cache, **client_kwargs).query(image_bytes, prompt, context)
