"""Deterministic PNG rendering: univariate plots with an x-axis, axis-free grids."""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .core import ConfigError, RenderMeta, Series


@dataclass(frozen=True)
class RenderStyle:
    uni_width: int = 1200
    uni_height: int = 400
    multi_width: int = 1200
    multi_height: int = 1200
    dpi: int = 100
    stroke_width: float = 1.0
    color: str = "#1f77b4"
    palette: tuple[str, ...] | None = None

    def variate_color(self, variate: int) -> str:
        if self.palette:
            return self.palette[variate % len(self.palette)]
        return self.color


def grid_dims(M: int) -> tuple[int, int]:
    """Rows x cols of the subimage grid for M variates.

    Returns (n, n) when n*(n-1) < M <= n*n and (n, n+1) when
    n*n < M <= n*(n+1); this is the smallest such grid that fits M.
    """
    if M < 1:
        raise ConfigError("M must be >= 1")
    s = math.isqrt(M)
    if M == s * s:
        return (s, s)
    if M <= s * (s + 1):
        return (s, s + 1)
    return (s + 1, s + 1)


def _gapped_xy(series: Series, row: int) -> tuple[np.ndarray, np.ndarray]:
    """Full-length x with NaN at dropped positions, so gaps break the polyline."""
    x = np.arange(series.T, dtype=np.float64)
    y = np.full(series.T, np.nan)
    y[series.timestamps] = series.values[row]
    return x, y


def _figure(width: int, height: int, dpi: int) -> Figure:
    fig = Figure(figsize=(width / dpi, height / dpi), dpi=dpi)
    FigureCanvasAgg(fig)
    return fig


def _to_png(fig: Figure) -> bytes:
    buf = io.BytesIO()
    # Dropping the Software chunk keeps bytes identical across runs.
    fig.savefig(buf, format="png", metadata={"Software": None})
    return buf.getvalue()


def build_univariate_figure(series: Series, style: RenderStyle) -> Figure:
    """Single-panel line chart with integer x ticks over [0, T)."""
    if series.M != 1:
        raise ConfigError("univariate rendering needs exactly one variate")
    if series.S == 0:
        raise ConfigError("cannot render a zero-length series")
    fig = _figure(style.uni_width, style.uni_height, style.dpi)
    ax = fig.add_subplot(111)
    x, y = _gapped_xy(series, 0)
    ax.plot(x, y, lw=style.stroke_width, color=style.variate_color(0))
    ax.set_xlim(0, series.T)
    ax.set_ymargin(0.05)
    return fig


def render_univariate(series: Series, style: RenderStyle | None = None) -> tuple[bytes, RenderMeta]:
    style = style or RenderStyle()
    png = _to_png(build_univariate_figure(series, style))
    meta = RenderMeta(
        grid_rows=1,
        grid_cols=1,
        blanks=0,
        pixel_size=(style.uni_width, style.uni_height),
        axes_drawn=True,
    )
    return png, meta


def build_multivariate_figure(series: Series, style: RenderStyle) -> Figure:
    """Axis-free subimage grid, row-major, trailing cells left blank."""
    if series.M < 2:
        raise ConfigError("multivariate rendering needs at least two variates")
    if series.S == 0:
        raise ConfigError("cannot render a zero-length series")
    rows, cols = grid_dims(series.M)
    fig = _figure(style.multi_width, style.multi_height, style.dpi)
    for cell in range(rows * cols):
        ax = fig.add_subplot(rows, cols, cell + 1)
        ax.set_axis_off()
        if cell >= series.M:
            continue
        x, y = _gapped_xy(series, cell)
        ax.plot(x, y, lw=style.stroke_width, color=style.variate_color(cell))
        ax.set_xlim(0, series.T)
        ax.set_ymargin(0.05)
    return fig


def render_multivariate(
    series: Series, style: RenderStyle | None = None
) -> tuple[bytes, RenderMeta]:
    style = style or RenderStyle()
    rows, cols = grid_dims(series.M)
    png = _to_png(build_multivariate_figure(series, style))
    meta = RenderMeta(
        grid_rows=rows,
        grid_cols=cols,
        blanks=rows * cols - series.M,
        pixel_size=(style.multi_width, style.multi_height),
        axes_drawn=False,
    )
    return png, meta


def render_series(series: Series, style: RenderStyle | None = None) -> tuple[bytes, RenderMeta]:
    """Univariate plot for M == 1, grid otherwise."""
    if series.M == 1:
        return render_univariate(series, style)
    return render_multivariate(series, style)
