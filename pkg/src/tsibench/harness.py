"""CLI orchestration: build datasets, query endpoints, parse, score, verify."""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import synth
from .core import (
    AnomalyLabel,
    AnomalyType,
    BaseGenerator,
    ConfigError,
    Granularity,
    ParseStatus,
    Prediction,
    Sample,
    Series,
    SeriesKind,
    manifest_read,
    manifest_write,
    sample_content_hash,
)
from .inject import (
    DatasetPlan,
    InjectionConfig,
    default_variate_bounds,
    drop_irregular,
    inject,
    plan_datasets,
    validate_point_injection,
    validate_segment_injection,
)
from .llm import (
    ApiStyle,
    LlmClient,
    MockBehavior,
    ModelEndpoint,
    PermanentEndpointError,
    ResponseCache,
    SampleContext,
    TransientFailureError,
    build_prompt,
    mock_model,
)
from .parse import parse_answer
from .render import RenderStyle, render_series
from .report import plot_f1_vs_irregularity, plot_f1_vs_variates, render_markdown
from .metrics import score_prediction

logger = logging.getLogger(__name__)


def _load_toml(path: str | Path) -> dict:
    with Path(path).open("rb") as fh:
        return tomllib.load(fh)


def _generator_config(plan: DatasetPlan, matrix: dict, sample_seed: int) -> synth.GeneratorConfig:
    overrides = dict(matrix.get("generator", {}))
    return synth.GeneratorConfig(
        base_generator=plan.base_generator,
        T=int(overrides.get("T", 400)),
        M=plan.M,
        amplitude=float(overrides.get("amplitude", 1.0)),
        period=float(overrides.get("period", 50.0)),
        noise_sigma=float(overrides.get("noise_sigma", 0.05)),
        seed=sample_seed,
    )


def _injection_config(plan: DatasetPlan, matrix: dict, sample_seed: int) -> InjectionConfig:
    overrides = dict(matrix.get("injection", {}))
    if "n_anomalous_variates" in overrides:
        variate_bounds = tuple(overrides["n_anomalous_variates"])
    else:
        variate_bounds = default_variate_bounds(plan.M) if plan.M > 1 else (1, 1)
    return InjectionConfig(
        lam=float(overrides.get("lam", 3.0)),
        context_k=int(overrides.get("context_k", 10)),
        n_point_anomalies=tuple(overrides.get("n_point_anomalies", (5, 20))),
        n_ranges=tuple(overrides.get("n_ranges", (1, 3))),
        range_len=tuple(overrides.get("range_len", (10, 40))),
        n_anomalous_variates=variate_bounds,
        magnitude=float(overrides.get("magnitude", 1.0)),
        irregularity_r=plan.r,
        seed=sample_seed,
        trend_return_to_baseline=bool(overrides.get("trend_return_to_baseline", True)),
    )


class _ArchivePool:
    """Loads each archive file once per build."""

    def __init__(self) -> None:
        self._cache: dict[tuple[str, BaseGenerator], list[Series]] = {}

    def row(self, path: str, dataset: BaseGenerator, index: int) -> Series:
        key = (path, dataset)
        if key not in self._cache:
            self._cache[key] = synth.ingest_archive(path, dataset)
        rows = self._cache[key]
        return rows[index % len(rows)]


def _base_series(
    plan: DatasetPlan,
    matrix: dict,
    sample_index: int,
    sample_seed: int,
    archives: _ArchivePool,
) -> Series:
    if plan.base_generator.is_explicit:
        return synth.generate_base(_generator_config(plan, matrix, sample_seed))
    source = archives.row(plan.archive_path, plan.base_generator, sample_index)
    if plan.M > 1 and source.M < plan.M:
        raise ConfigError(
            f"archive rows carry {source.M} variates but the plan asks for M={plan.M}"
        )
    values = source.values[: plan.M] if plan.M > 1 else source.values[:1]
    kind = SeriesKind.MULTIVARIATE if plan.M > 1 else SeriesKind.UNIVARIATE
    return Series(
        kind=kind,
        values=values,
        timestamps=source.timestamps,
        T=source.T,
        base_generator=plan.base_generator,
        seed=sample_seed,
        gen_params=dict(source.gen_params),
    )


def _build_one(
    plan: DatasetPlan,
    matrix: dict,
    sample_index: int,
    out_dir: Path,
    style: RenderStyle,
    archives: _ArchivePool,
) -> Sample:
    sample_seed = plan.sample_seed(sample_index)
    base = _base_series(plan, matrix, sample_index, sample_seed, archives)
    cfg = _injection_config(plan, matrix, sample_seed)
    injected, label = inject(base, cfg, plan.anomaly_type)
    provenance: dict = {
        "dataset": plan.name,
        "scenario": plan.scenario,
        "anomaly_type": plan.anomaly_type.value,
        "M": plan.M,
        "r": plan.r,
        "sample_index": sample_index,
        "sample_seed": sample_seed,
        "generator": dict(base.gen_params),
        "injection": {
            "lam": cfg.lam,
            "context_k": cfg.context_k,
            "n_point_anomalies": list(cfg.n_point_anomalies),
            "n_ranges": list(cfg.n_ranges),
            "range_len": list(cfg.range_len),
            "n_anomalous_variates": list(cfg.n_anomalous_variates),
            "magnitude": cfg.magnitude,
            "seed": cfg.seed,
            "trend_return_to_baseline": cfg.trend_return_to_baseline,
        },
    }
    if plan.archive_path is not None:
        provenance["generator"]["archive_path"] = plan.archive_path
    final_series, final_label = injected, label
    if plan.r > 0:
        final_series, final_label = drop_irregular(injected, label, plan.r, sample_seed)
        provenance["drop"] = {"r": plan.r, "seed": sample_seed}
    sample_id = sample_content_hash(final_series, final_label)
    image_rel = f"images/{plan.name}/{sample_id}.png"
    png, meta = render_series(final_series, style)
    image_abs = out_dir / image_rel
    image_abs.parent.mkdir(parents=True, exist_ok=True)
    image_abs.write_bytes(png)
    return Sample.build(final_series, final_label, image_rel, meta, provenance)


def cmd_build(matrix_path: str | Path, out_dir: str | Path, seed: int | None = None) -> Path:
    """Generate, inject, render, and write the manifest; print a census."""
    matrix = _load_toml(matrix_path)
    if seed is not None:
        matrix["seed"] = seed
    plans, exclusions = plan_datasets(matrix)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    style_overrides = dict(matrix.get("style", {}))
    style = RenderStyle(**style_overrides) if style_overrides else RenderStyle()
    archives = _ArchivePool()
    samples: list[Sample] = []
    for plan in plans:
        for i in range(plan.samples):
            samples.append(_build_one(plan, matrix, i, out_dir, style, archives))
    manifest_path = out_dir / "manifest.jsonl"
    manifest_write(samples, manifest_path)
    census = Counter(s.provenance["dataset"] for s in samples)
    print(f"built {len(samples)} samples across {len(plans)} datasets -> {manifest_path}")
    for name in sorted(census):
        print(f"  {name}: {census[name]}")
    for exclusion in exclusions:
        print(f"  skipped: {exclusion.describe()}")
    return manifest_path


_MOCK_NAMES = {
    "mock-oracle": MockBehavior.ORACLE,
    "mock-empty": MockBehavior.EMPTY,
    "mock-runaway": MockBehavior.RUNAWAY,
    "mock-random": MockBehavior.RANDOM,
    "mock-off-by-k": MockBehavior.OFF_BY_K,
}


def resolve_endpoint(spec: str, endpoints_file: str | Path | None = None) -> ModelEndpoint:
    """Turn an --endpoint value into an endpoint: built-in mocks (mock-oracle,
    mock-empty, mock-runaway, mock-random[:seed], mock-off-by-k[:k]) or a named
    entry in the endpoints TOML file."""
    base, _, arg = spec.partition(":")
    if base in _MOCK_NAMES:
        behavior = _MOCK_NAMES[base]
        if behavior is MockBehavior.RANDOM:
            return mock_model(behavior, seed=int(arg or 0))
        if behavior is MockBehavior.OFF_BY_K:
            return mock_model(behavior, k=int(arg or 1))
        return mock_model(behavior)
    if endpoints_file is None:
        raise ConfigError(
            f"endpoint {spec!r} is not a built-in mock; pass --endpoints-file"
        )
    table = _load_toml(endpoints_file).get("endpoints", {})
    if spec not in table:
        raise ConfigError(f"endpoint {spec!r} not defined in {endpoints_file}")
    entry = dict(table[spec])
    return ModelEndpoint(
        name=entry.get("model", spec),
        api_style=ApiStyle(entry["api_style"]),
        base_url=entry["base_url"],
        auth_env=entry.get("auth_env", ""),
        max_tokens=int(entry.get("max_tokens", 1024)),
        temperature=float(entry.get("temperature", 0.0)),
        timeout_s=float(entry.get("timeout_s", 60.0)),
        rate_limit_per_min=float(entry.get("rate_limit_per_min", 60.0)),
    )


def _prediction_row(sample: Sample, endpoint: str, prediction: Prediction) -> dict:
    payload_key = {
        Granularity.POINT: "points",
        Granularity.RANGE: "ranges",
        Granularity.VARIATE: "variates",
    }[prediction.granularity]
    payload = getattr(prediction, payload_key)
    return {
        "sample_id": sample.id,
        "endpoint": endpoint,
        "granularity": prediction.granularity.value,
        "parse_status": prediction.parse_status.value,
        payload_key: [list(ij) for ij in payload] if payload_key == "ranges" else list(payload),
        "discarded": prediction.discarded,
        "raw_excerpt": prediction.raw_excerpt,
    }


def _row_to_prediction(row: dict) -> Prediction:
    granularity = Granularity(row["granularity"])
    key = {
        Granularity.POINT: "points",
        Granularity.RANGE: "ranges",
        Granularity.VARIATE: "variates",
    }[granularity]
    payload = row.get(key, [])
    kwargs = {key: tuple(tuple(ij) for ij in payload) if key == "ranges" else tuple(payload)}
    return Prediction(
        granularity=granularity,
        parse_status=ParseStatus(row["parse_status"]),
        raw_excerpt=row.get("raw_excerpt", ""),
        discarded=int(row.get("discarded", 0)),
        **kwargs,
    )


def cmd_run(
    manifest_path: str | Path,
    endpoint_spec: str,
    run_id: str,
    runs_dir: str | Path = "runs",
    concurrency: int = 4,
    rate_limit: float | None = None,
    endpoints_file: str | Path | None = None,
    client_kwargs: dict | None = None,
) -> dict:
    """Query the endpoint for every manifest sample (resuming from the cache),
    parse the answers, and write predictions.jsonl."""
    manifest_path = Path(manifest_path)
    samples = manifest_read(manifest_path)
    endpoint = resolve_endpoint(endpoint_spec, endpoints_file)
    if rate_limit is not None:
        endpoint = dataclasses.replace(endpoint, rate_limit_per_min=rate_limit)
    run_dir = Path(runs_dir) / run_id
    run_dir.mkdir(parents=True, exist_ok=True)
    config_path = run_dir / "config.json"
    if not config_path.exists():
        config_path.write_text(
            json.dumps(
                {
                    "run_id": run_id,
                    "manifest": str(manifest_path),
                    "endpoint": endpoint.name,
                    "endpoint_spec": endpoint_spec,
                    "api_style": endpoint.api_style.value,
                    "concurrency": concurrency,
                    "rate_limit_per_min": endpoint.rate_limit_per_min,
                    "max_tokens": endpoint.max_tokens,
                    "temperature": endpoint.temperature,
                },
                indent=2,
            )
            + "\n",
            encoding="utf-8",
        )
    cache = ResponseCache(run_dir / "responses.jsonl")
    client = LlmClient(endpoint, cache, **(client_kwargs or {}))

    def _one(sample: Sample) -> tuple[Sample, str | None, str | None]:
        prompt = build_prompt(sample.label.granularity)
        image_bytes = (manifest_path.parent / sample.image_path).read_bytes()
        context = SampleContext(
            sample_id=sample.id,
            granularity=sample.label.granularity,
            T=sample.series.T,
            M=sample.series.M,
            label=sample.label,
        )
        try:
            record = client.query(image_bytes, prompt, context)
        except PermanentEndpointError as exc:
            return sample, None, f"permanent: {exc}"
        except TransientFailureError as exc:
            return sample, None, f"transient: {exc}"
        if record.error:
            return sample, record.raw_text, record.error
        return sample, record.raw_text, None

    results: dict[str, tuple[str | None, str | None]] = {}
    with ThreadPoolExecutor(max_workers=max(1, concurrency)) as pool:
        for sample, raw_text, error in pool.map(_one, samples):
            results[sample.id] = (raw_text, error)

    failures = {sid: err for sid, (_, err) in results.items() if err}
    predictions_path = run_dir / "predictions.jsonl"
    with predictions_path.open("w", encoding="utf-8") as fh:
        for sample in samples:
            raw_text, error = results[sample.id]
            prediction = parse_answer(
                raw_text or "",
                sample.label.granularity,
                sample.series.T,
                sample.series.M,
            )
            row = _prediction_row(sample, endpoint.name, prediction)
            if error:
                row["error"] = error
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
    summary = {
        "run_id": run_id,
        "samples": len(samples),
        "failures": len(failures),
        "cache_size": len(cache),
    }
    print(
        f"run {run_id}: {len(samples)} samples, {len(failures)} failures, "
        f"cache holds {len(cache)} responses"
    )
    for sid, err in sorted(failures.items()):
        print(f"  FAILED {sid}: {err}")
    return summary


def _load_run(run_id: str, runs_dir: str | Path) -> tuple[Path, dict, list[dict]]:
    run_dir = Path(runs_dir) / run_id
    config = json.loads((run_dir / "config.json").read_text(encoding="utf-8"))
    rows = []
    with (run_dir / "predictions.jsonl").open("r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                rows.append(json.loads(line))
    return run_dir, config, rows


def cmd_score(
    run_id: str,
    runs_dir: str | Path = "runs",
    manifest_path: str | Path | None = None,
) -> list[dict]:
    """Score a run's predictions; write scores.jsonl, report.md, and plots."""
    run_dir, config, prediction_rows = _load_run(run_id, runs_dir)
    manifest_path = Path(manifest_path or config["manifest"])
    samples = {s.id: s for s in manifest_read(manifest_path)}
    score_rows: list[dict] = []
    for row in prediction_rows:
        sample = samples.get(row["sample_id"])
        if sample is None:
            logger.warning("prediction for unknown sample %s", row["sample_id"])
            continue
        prediction = _row_to_prediction(row)
        record = score_prediction(
            sample.id,
            row["endpoint"],
            sample.label,
            prediction,
            sample.series.T,
        )
        score_rows.append(
            {
                "sample_id": record.sample_id,
                "endpoint": record.endpoint,
                "metric_family": record.metric_family.value,
                "precision": record.precision,
                "recall": record.recall,
                "f1": record.f1,
                "hallucinated": record.hallucinated,
                "flags": list(record.flags),
                "dataset": sample.provenance.get("dataset", "unknown"),
                "scenario": sample.provenance.get("scenario", "unknown"),
                "anomaly_type": sample.label.anomaly_type.value,
                "M": sample.series.M,
                "r": sample.provenance.get("r", 0.0),
            }
        )
    scores_path = run_dir / "scores.jsonl"
    with scores_path.open("w", encoding="utf-8") as fh:
        for row in score_rows:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")
    _write_report(run_dir, score_rows)
    return score_rows


def _write_report(run_dir: Path, score_rows: list[dict]) -> None:
    report = render_markdown(score_rows)
    (run_dir / "report.md").write_text(report, encoding="utf-8")
    made_bar = plot_f1_vs_variates(score_rows, run_dir / "f1_vs_variates.png")
    made_line = plot_f1_vs_irregularity(score_rows, run_dir / "f1_vs_irregularity.png")
    print(report)
    extras = [
        name
        for made, name in ((made_bar, "f1_vs_variates.png"), (made_line, "f1_vs_irregularity.png"))
        if made
    ]
    if extras:
        print("plots: " + ", ".join(extras))


def cmd_report(run_id: str, runs_dir: str | Path = "runs") -> None:
    """Re-render report.md and plots from an existing scores.jsonl."""
    run_dir = Path(runs_dir) / run_id
    rows = []
    with (run_dir / "scores.jsonl").open("r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                rows.append(json.loads(line))
    _write_report(run_dir, rows)


def _rebuild_for_verify(sample: Sample, manifest_dir: Path) -> tuple[Series, Series, AnomalyLabel] | None:
    """Regenerate (base, injected, pre-drop label) from provenance, or None when
    the source archive is unavailable."""
    prov = sample.provenance
    gen = dict(prov.get("generator", {}))
    sample_seed = int(prov["sample_seed"])
    if sample.series.base_generator.is_explicit:
        config = synth.GeneratorConfig(
            base_generator=sample.series.base_generator,
            T=sample.series.T,
            M=sample.series.M,
            amplitude=float(gen["amplitude"]),
            period=float(gen["period"]),
            noise_sigma=float(gen["noise_sigma"]),
            seed=sample_seed,
        )
        base = synth.generate_base(config)
    else:
        archive_path = gen.get("archive_path")
        candidates = [Path(archive_path), manifest_dir / str(archive_path)] if archive_path else []
        found = next((p for p in candidates if p.exists()), None)
        if found is None:
            return None
        rows = synth.ingest_archive(found, sample.series.base_generator)
        source = rows[int(gen["row"]) % len(rows)]
        base = Series(
            kind=sample.series.kind,
            values=source.values[: sample.series.M],
            timestamps=source.timestamps,
            T=source.T,
            base_generator=sample.series.base_generator,
            seed=sample_seed,
            gen_params=dict(source.gen_params),
        )
    inj = dict(prov["injection"])
    cfg = InjectionConfig(
        lam=float(inj["lam"]),
        context_k=int(inj["context_k"]),
        n_point_anomalies=tuple(inj["n_point_anomalies"]),
        n_ranges=tuple(inj["n_ranges"]),
        range_len=tuple(inj["range_len"]),
        n_anomalous_variates=tuple(inj["n_anomalous_variates"]),
        magnitude=float(inj["magnitude"]),
        irregularity_r=float(prov.get("r", 0.0)),
        seed=int(inj["seed"]),
        trend_return_to_baseline=bool(inj["trend_return_to_baseline"]),
    )
    injected, label = inject(base, cfg, sample.label.anomaly_type)
    return base, injected, label


def verify_sample(sample: Sample, manifest_dir: Path) -> list[str]:
    """All integrity checks for one sample; returns human-readable problems."""
    problems: list[str] = []
    try:
        sample.label.validate_bounds(sample.series.T, sample.series.M)
    except ConfigError as exc:
        problems.append(f"label bounds: {exc}")
    rebuilt = _rebuild_for_verify(sample, manifest_dir)
    if rebuilt is None:
        return ["skipped: source archive unavailable"]
    base, injected, label = rebuilt
    prov = sample.provenance
    cfg_inj = dict(prov["injection"])
    final_series, final_label = injected, label
    if prov.get("drop"):
        final_series, final_label = drop_irregular(
            injected, label, float(prov["drop"]["r"]), int(prov["drop"]["seed"])
        )
    if not np.array_equal(final_series.values, sample.series.values):
        problems.append("regenerated values differ from manifest values")
    if not np.array_equal(final_series.timestamps, sample.series.timestamps):
        problems.append("regenerated timestamps differ from manifest timestamps")
    if final_label != sample.label:
        problems.append("regenerated label differs from manifest label")
    cfg = InjectionConfig(
        lam=float(cfg_inj["lam"]),
        context_k=int(cfg_inj["context_k"]),
        n_point_anomalies=tuple(cfg_inj["n_point_anomalies"]),
        n_ranges=tuple(cfg_inj["n_ranges"]),
        range_len=tuple(cfg_inj["range_len"]),
        n_anomalous_variates=tuple(cfg_inj["n_anomalous_variates"]),
        magnitude=float(cfg_inj["magnitude"]),
        irregularity_r=float(prov.get("r", 0.0)),
        seed=int(cfg_inj["seed"]),
        trend_return_to_baseline=bool(cfg_inj["trend_return_to_baseline"]),
    )
    if label.granularity is Granularity.POINT:
        problems += validate_point_injection(base, injected, label, cfg)
    else:
        problems += validate_segment_injection(base, injected, label)
    return problems


def cmd_verify(manifest_path: str | Path) -> int:
    """Run injection validators and label invariants across a manifest.

    Returns the number of samples with violations (the CLI exit code).
    """
    manifest_path = Path(manifest_path)
    samples = manifest_read(manifest_path)
    bad = 0
    skipped = 0
    for sample in samples:
        problems = verify_sample(sample, manifest_path.parent)
        if problems == ["skipped: source archive unavailable"]:
            skipped += 1
            continue
        if problems:
            bad += 1
            for p in problems:
                print(f"VIOLATION {sample.id}: {p}")
    print(
        f"verified {len(samples)} samples: {bad} with violations, {skipped} skipped "
        "(archive unavailable)"
    )
    return bad


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="tsibench",
        description="Build time-series-image anomaly benchmarks and score "
        "vision-language models on them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="generate datasets, render images, write manifest")
    p_build.add_argument("--matrix", required=True, help="experiment matrix TOML")
    p_build.add_argument("--out", required=True, help="output dataset directory")
    p_build.add_argument("--seed", type=int, default=None, help="override the matrix seed")

    p_run = sub.add_parser("run", help="query an endpoint for every manifest sample")
    p_run.add_argument("--manifest", required=True)
    p_run.add_argument("--endpoint", required=True)
    p_run.add_argument("--run-id", required=True)
    p_run.add_argument("--runs-dir", default="runs")
    p_run.add_argument("--concurrency", type=int, default=4)
    p_run.add_argument("--rate-limit", type=float, default=None, help="requests per minute")
    p_run.add_argument("--endpoints-file", default=None)

    p_score = sub.add_parser("score", help="score a run and emit report + plots")
    p_score.add_argument("--run-id", required=True)
    p_score.add_argument("--runs-dir", default="runs")
    p_score.add_argument("--manifest", default=None, help="override the manifest recorded in the run")

    p_verify = sub.add_parser("verify", help="re-derive and validate every manifest sample")
    p_verify.add_argument("--manifest", required=True)

    p_report = sub.add_parser("report", help="re-render report from existing scores")
    p_report.add_argument("--run-id", required=True)
    p_report.add_argument("--runs-dir", default="runs")

    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    if args.command == "build":
        cmd_build(args.matrix, args.out, seed=args.seed)
        return 0
    if args.command == "run":
        summary = cmd_run(
            args.manifest,
            args.endpoint,
            args.run_id,
            runs_dir=args.runs_dir,
            concurrency=args.concurrency,
            rate_limit=args.rate_limit,
            endpoints_file=args.endpoints_file,
        )
        return 1 if summary["failures"] else 0
    if args.command == "score":
        cmd_score(args.run_id, runs_dir=args.runs_dir, manifest_path=args.manifest)
        return 0
    if args.command == "verify":
        return 1 if cmd_verify(args.manifest) else 0
    if args.command == "report":
        cmd_report(args.run_id, runs_dir=args.runs_dir)
        return 0
    return 2


if __name__ == "__main__":
    sys.exit(main())
