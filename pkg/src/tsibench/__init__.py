"""Benchmark generator and scoring harness for time-series-as-image anomaly
detection with vision-language models."""

from .core import (
    AnomalyLabel,
    AnomalyType,
    BaseGenerator,
    Granularity,
    ParseStatus,
    Prediction,
    RenderMeta,
    Sample,
    Series,
    SeriesKind,
    label_as_binary_mask,
    manifest_read,
    manifest_write,
)
from .synth import GeneratorConfig, gen_sine, gen_sine_cosine, ingest_archive
from .inject import (
    InjectionConfig,
    drop_irregular,
    inject,
    inject_contextual,
    inject_global,
    inject_seasonal,
    inject_shapelet,
    inject_trend,
    inject_variate,
    plan_datasets,
)
from .render import RenderStyle, grid_dims, render_multivariate, render_univariate
from .llm import ModelEndpoint, PromptTemplate, ResponseCache, build_prompt, mock_model
from .parse import parse_points, parse_ranges, parse_variates
from .metrics import EvalRecord, affiliation_prf, aggregate, vanilla_prf

__version__ = "0.1.0"

__all__ = [
    "AnomalyLabel",
    "AnomalyType",
    "BaseGenerator",
    "EvalRecord",
    "GeneratorConfig",
    "Granularity",
    "InjectionConfig",
    "ModelEndpoint",
    "ParseStatus",
    "Prediction",
    "PromptTemplate",
    "RenderMeta",
    "RenderStyle",
    "ResponseCache",
    "Sample",
    "Series",
    "SeriesKind",
    "affiliation_prf",
    "aggregate",
    "build_prompt",
    "drop_irregular",
    "gen_sine",
    "gen_sine_cosine",
    "grid_dims",
    "ingest_archive",
    "inject",
    "inject_contextual",
    "inject_global",
    "inject_seasonal",
    "inject_shapelet",
    "inject_trend",
    "inject_variate",
    "label_as_binary_mask",
    "manifest_read",
    "manifest_write",
    "mock_model",
    "parse_points",
    "parse_ranges",
    "parse_variates",
    "plan_datasets",
    "render_multivariate",
    "render_univariate",
    "vanilla_prf",
]
