"""
Pinching Beltrami norms

F(z) = z|z| on an annulus; its n-th iterate is z|z|^(2^n - 1), whose
Beltrami coefficient has constant modulus (2^n - 1)/(2^n + 1) -> 1.
The measured value comes from finite-difference Wirtinger derivatives.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

MAX_PINCH_ITERATE = 40  # beyond this 1 - |mu| drops under the stencil's rounding error
RELATIVE_STEP = 1e-6  # finite-difference step, relative to |z|


@dataclass(frozen=True)
class AnnulusGrid:
    """radial_samples x angular_samples polar grid strictly inside 1/radius < |z| < radius"""

    radius: float = 2.0
    radial_samples: int = 100
    angular_samples: int = 100

    def __post_init__(self):
        if self.radius <= 1:
            raise ValueError(f'Annulus radius must exceed 1, got {self.radius}')
        if self.radial_samples < 1 or self.angular_samples < 1:
            raise ValueError('Annulus grid needs at least one sample per direction')

    def points(self) -> np.ndarray:
        log_r = np.log(self.radius)
        radii = np.exp(np.linspace(-log_r, log_r, self.radial_samples + 2)[1:-1])
        angles = 2 * np.pi * np.arange(self.angular_samples) / self.angular_samples
        return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()


def closed_form_norm(n: int) -> float:
    k = 2 ** n
    return (k - 1) / (k + 1)


def _log_iterate_increment(z: np.ndarray, delta: np.ndarray, exponent: int) -> np.ndarray:
    """
    log F(z + delta) - log F(z) for F(w) = w |w|^k.

    Logs keep the value finite for every accepted n, and the Beltrami
    coefficient of log F equals that of F.
    """
    ratio = delta / z
    radial = 0.5 * np.log1p(2 * ratio.real + np.abs(ratio) ** 2)
    return np.log1p(ratio) + float(exponent) * radial


def wirtinger(g, h: np.ndarray):
    """4-point central stencil for (dg/dz, dg/dzbar); g takes the offset from the base point"""
    dx = g(h) - g(-h)
    dy = g(1j * h) - g(-1j * h)
    return (dx - 1j * dy) / (4 * h), (dx + 1j * dy) / (4 * h)


def pinch_beltrami_norm(n: int, grid: AnnulusGrid = AnnulusGrid()) -> Dict:
    """
    Returns:
        {
            'n': int,
            'closedForm': float,
            'measured': float,      # max |mu| over the grid, nan if precision ran out
            'deviation': float
        }
    """
    if n < 1:
        raise ValueError(f'n must be >= 1, got {n}')
    if n > MAX_PINCH_ITERATE:
        raise ValueError(f'n={n} exceeds float precision (max {MAX_PINCH_ITERATE})')

    exponent = 2 ** n - 1
    z = grid.points()
    h = RELATIVE_STEP * np.abs(z)
    with np.errstate(over='ignore', invalid='ignore'):
        dz, dzbar = wirtinger(lambda delta: _log_iterate_increment(z, delta, exponent), h)
        mu = np.abs(dzbar) / np.abs(dz)

    closed_form = closed_form_norm(n)
    if not np.all(np.isfinite(mu)):
        logger.warning('Pinch measurement for n=%d lost float precision', n)
        measured = float('nan')
    else:
        measured = float(mu.max())
    return {
        'n': n,
        'closedForm': closed_form,
        'measured': measured,
        'deviation': abs(measured - closed_form),
    }


def pinch_table(ns: Iterable[int], grid: AnnulusGrid = AnnulusGrid()) -> pd.DataFrame:
    rows = [pinch_beltrami_norm(n, grid) for n in ns]
    return pd.DataFrame(rows, columns=['n', 'closedForm', 'measured', 'deviation'])
