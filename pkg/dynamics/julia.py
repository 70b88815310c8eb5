"""
Escape-time slices of J(F) for F(z, t) = (f_t(z), t)

Each pixel orbit under f_t ends in one of three classes: ESCAPED (|z_k|
passed the escape radius), BASIN (|z_k| < BASIN_EPSILON, caught by the
superattracting fixed point 0) or RETAINED (neither within max_iter, the
Julia set approximation). The complement census runs on the classified grid.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

import numpy as np
import pandas as pd
from PIL import Image

from dynamics.components import BASIN, ESCAPED, RETAINED, ComponentCensus, complement_components
from dynamics.family import FtParams, default_half_width, escape_radius

logger = logging.getLogger(__name__)

BASIN_EPSILON = 1e-6  # orbit caught by the fixed point 0
DEFAULT_RESOLUTION = 512
DEFAULT_MAX_ITER = 500
ROW_CHUNK = 64  # rows per rendering task
BASIN_GRAY = 128
ESCAPE_GRAY_SPAN = 223  # escaped pixels range over 255 .. 32


@dataclass(frozen=True)
class RenderConfig:
    center: complex
    half_width: float
    resolution: int = DEFAULT_RESOLUTION
    max_iter: int = DEFAULT_MAX_ITER
    escape_radius: float = 2.0

    def __post_init__(self):
        if self.resolution < 16:
            raise ValueError(f'resolution must be >= 16, got {self.resolution}')
        if self.max_iter < 1:
            raise ValueError(f'max_iter must be >= 1, got {self.max_iter}')
        if self.escape_radius <= 1:
            raise ValueError(f'escape_radius must exceed 1, got {self.escape_radius}')
        if self.half_width <= 0:
            raise ValueError(f'half_width must be positive, got {self.half_width}')

    @classmethod
    def for_params(
        cls,
        p: FtParams,
        resolution: int = DEFAULT_RESOLUTION,
        max_iter: int = DEFAULT_MAX_ITER,
        center: complex = 0j,
        half_width: Optional[float] = None,
    ) -> 'RenderConfig':
        """Window and escape radius derived from t unless given"""
        return cls(
            center=complex(center),
            half_width=half_width if half_width is not None else default_half_width(p),
            resolution=resolution,
            max_iter=max_iter,
            escape_radius=escape_radius(p),
        )

    @property
    def step(self) -> float:
        return 2 * self.half_width / self.resolution

    def pixel_of(self, z: complex) -> Optional[Tuple[int, int]]:
        """(row, col) of the pixel containing z, None outside the window"""
        col = math.floor((z.real - (self.center.real - self.half_width)) / self.step)
        row = math.floor(((self.center.imag + self.half_width) - z.imag) / self.step)
        if 0 <= row < self.resolution and 0 <= col < self.resolution:
            return row, col
        return None


@dataclass(frozen=True)
class JuliaSliceReport:
    t: Fraction
    config: RenderConfig
    classes: np.ndarray
    iterations: np.ndarray
    census: ComponentCensus

    def classified_pixels(self) -> int:
        return int(np.count_nonzero(self.classes != RETAINED))

    def line(self) -> str:
        sizes = ','.join(str(s) for s in self.census.sizes)
        bounded = ','.join('true' if b else 'false' for b in self.census.bounded)
        return (
            f't={self.t} resolution={self.config.resolution} components={self.census.count} '
            f'sizes=[{sizes}] bounded=[{bounded}]'
        )

    def image(self) -> np.ndarray:
        """8-bit grayscale: escape-time shades, basin mid gray, retained black"""
        gray = np.zeros(self.classes.shape, dtype=np.uint8)
        escaped = self.classes == ESCAPED
        shade = 255 - (ESCAPE_GRAY_SPAN * self.iterations.astype(np.int64)) // self.config.max_iter
        gray[escaped] = shade[escaped].astype(np.uint8)
        gray[self.classes == BASIN] = BASIN_GRAY
        return gray


def _pixel_grid(cfg: RenderConfig, rows: range) -> np.ndarray:
    n = cfg.resolution
    xs = cfg.center.real - cfg.half_width + (np.arange(n) + 0.5) * cfg.step
    ys = cfg.center.imag + cfg.half_width - (np.arange(rows.start, rows.stop) + 0.5) * cfg.step
    return xs[None, :] + 1j * ys[:, None]


def _classify_rows(t: float, cfg: RenderConfig, rows: range) -> Tuple[np.ndarray, np.ndarray]:
    grid = _pixel_grid(cfg, rows)
    shape = grid.shape
    classes = np.full(grid.size, RETAINED, dtype=np.uint8)
    iterations = np.full(grid.size, cfg.max_iter, dtype=np.int32)

    index = np.arange(grid.size)
    w = grid.ravel().copy()
    for k in range(cfg.max_iter + 1):
        if k > 0:
            w2 = w * w
            w = (1 - t) * w2 + t * w2 * w
        magnitude = np.abs(w)
        escaped = magnitude > cfg.escape_radius
        basin = magnitude < BASIN_EPSILON
        classes[index[escaped]] = ESCAPED
        classes[index[basin]] = BASIN
        iterations[index[escaped | basin]] = k
        keep = ~(escaped | basin)
        index, w = index[keep], w[keep]
        if index.size == 0:
            break
    return classes.reshape(shape), iterations.reshape(shape)


def classify_grid(p: FtParams, cfg: RenderConfig, threads: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """Row chunks are independent; they are joined in row order, so output ignores the thread count"""
    chunks = [range(start, min(start + ROW_CHUNK, cfg.resolution)) for start in range(0, cfg.resolution, ROW_CHUNK)]
    t = float(p.t)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            parts = list(executor.map(lambda rows: _classify_rows(t, cfg, rows), chunks))
    else:
        parts = [_classify_rows(t, cfg, rows) for rows in chunks]
    classes = np.concatenate([part[0] for part in parts])
    iterations = np.concatenate([part[1] for part in parts])
    return classes, iterations


def render_julia_slice(p: FtParams, cfg: Optional[RenderConfig] = None, threads: int = 1) -> JuliaSliceReport:
    cfg = cfg or RenderConfig.for_params(p)
    classes, iterations = classify_grid(p, cfg, threads)
    logger.info('Rendered t=%s at %dx%d', p.t, cfg.resolution, cfg.resolution)
    census = complement_components(classes, cfg.pixel_of(0j))
    return JuliaSliceReport(p.t, cfg, classes, iterations, census)


def write_ppm(path: str, gray: np.ndarray) -> None:
    """Binary PPM (P6), gray replicated into RGB"""
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(gray).convert('RGB').save(path, 'PPM')


def image_name(t: Fraction) -> str:
    return f'julia_t{t.numerator}_{t.denominator}.ppm'


def sweep(
    ts: Iterable[Fraction],
    resolution: int = DEFAULT_RESOLUTION,
    max_iter: int = DEFAULT_MAX_ITER,
    threads: int = 1,
) -> Tuple[List[JuliaSliceReport], pd.DataFrame]:
    """Slice reports for each t, stacked into one table"""
    reports = []
    for t in ts:
        p = FtParams(t)
        reports.append(render_julia_slice(p, RenderConfig.for_params(p, resolution, max_iter), threads))

    table = pd.DataFrame([
        {
            't': str(r.t),
            'resolution': r.config.resolution,
            'components': r.census.count,
            'unbounded': r.census.unbounded_count(),
            'zeroComponent': r.census.zero_component,
            'sizes': list(r.census.sizes),
            'bounded': list(r.census.bounded),
        }
        for r in reports
    ])
    return reports, table
