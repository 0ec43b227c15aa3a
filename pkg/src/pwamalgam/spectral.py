"""Frequency grids, band-indexed spectra, and the three spectral norms.

The Fourier convention throughout the library is

.. math:: \\hat{g}(\\xi) = (2\\pi)^{-1/2} \\int g(x) e^{-ix\\xi} dx,

with inversion using the conjugate kernel under the same normalization.
Spectra are represented band by band: band ``m`` holds samples of the baseband
function ``g_m(xi) = fhat(xi + 2*pi*m)`` for ``xi`` in ``[-pi, pi]``, so every
band-level computation happens in the same coordinates. Note that the slicing
definition reads the sliced function as the Fourier transform ``fhat``; the
band values are always frequency-side samples.

Norms:

- band L2 norm: quadrature of ``|g_m|^2`` over the base band,
- amalgam norm: sum of band L2 norms plus an analytic tail estimate,
- Parseval L2 norm: root of the sum of squared band norms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ContractError

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class FrequencyGrid:
    """Composite Gauss-Legendre quadrature rule on the base band ``[-pi, pi]``.

    Parameters
    ----------
    points_per_band : int
        Total number of quadrature nodes ``K``.
    nodes : np.ndarray
        Strictly increasing abscissae in ``(-pi, pi)``.
    weights : np.ndarray
        Matching positive weights, summing to ``2*pi``.
    """

    points_per_band: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.nodes.shape != (self.points_per_band,) or self.weights.shape != (
            self.points_per_band,
        ):
            raise ContractError("grid arrays must have length points_per_band")
        if not np.all(np.diff(self.nodes) > 0):
            raise ContractError("grid nodes must be strictly increasing")
        if np.min(self.nodes) < -np.pi or np.max(self.nodes) > np.pi:
            raise ContractError("grid nodes must lie in [-pi, pi]")
        if np.min(self.weights) <= 0:
            raise ContractError("grid weights must be strictly positive")
        total = float(np.sum(self.weights))
        if abs(total - TWO_PI) > 1e-12 * TWO_PI:
            raise ContractError("grid weights must sum to 2*pi")


def frequency_grid(points_per_band: int = 256, panels: int = 2) -> FrequencyGrid:
    """Build the composite Gauss-Legendre rule on ``[-pi, pi]``.

    Parameters
    ----------
    points_per_band : int
        Total node count ``K``; must be positive and divisible by `panels`.
    panels : int
        Number of equal panels. The default 2 places a panel boundary at 0,
        which keeps spectral accuracy for spectra with a kink there.

    Returns
    -------
    FrequencyGrid
    """
    if points_per_band <= 0:
        raise ContractError("points_per_band must be positive")
    if panels <= 0 or points_per_band % panels != 0:
        raise ContractError("points_per_band must be divisible by panels")
    per_panel = points_per_band // panels
    xs, ws = np.polynomial.legendre.leggauss(per_panel)
    edges = np.linspace(-np.pi, np.pi, panels + 1)
    nodes = []
    weights = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        nodes.append(half * xs + 0.5 * (lo + hi))
        weights.append(half * ws)
    return FrequencyGrid(
        points_per_band=points_per_band,
        nodes=np.concatenate(nodes),
        weights=np.concatenate(weights),
    )


@dataclass(frozen=True)
class BandSpectrum:
    """Complex samples of one baseband piece ``g_m`` on a frequency grid.

    `values[k]` is ``fhat(grid.nodes[k] + 2*pi*band_index)``, already shifted
    to baseband coordinates.
    """

    band_index: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if not np.all(np.isfinite(self.values)):
            raise ContractError("band values must be finite")


@dataclass(frozen=True)
class AmalgamSpectrum:
    """Band-indexed spectrum truncated to ``|m| <= truncation_bound``.

    `tail_estimate` is an analytic upper bound on the summed band L2 norms
    beyond the truncation; it must come from the signal's known decay and is
    never silently zero for signals with unbounded spectral support.
    """

    bands: tuple[BandSpectrum, ...]
    truncation_bound: int
    tail_estimate: float

    def __post_init__(self) -> None:
        expected = list(range(-self.truncation_bound, self.truncation_bound + 1))
        if [b.band_index for b in self.bands] != expected:
            raise ContractError("bands must cover exactly -M_max..M_max in order")
        if self.tail_estimate < 0:
            raise ContractError("tail_estimate must be nonnegative")

    def band(self, m: int) -> BandSpectrum:
        return self.bands[m + self.truncation_bound]


@dataclass(frozen=True)
class SpatialGrid:
    """Evaluation abscissae on the interior window ``[-extent, extent]``."""

    extent: float
    points: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.points.size == 0:
            raise ContractError("spatial grid must be nonempty")
        if not np.all(np.diff(self.points) > 0):
            raise ContractError("spatial points must be strictly increasing")
        if np.min(self.points) < -self.extent or np.max(self.points) > self.extent:
            raise ContractError("spatial points must lie in [-extent, extent]")


def spatial_grid(extent: float, density: int = 20) -> SpatialGrid:
    """Uniform interior grid with `density` points per unit length.

    Returns
    -------
    SpatialGrid
        ``2*extent*density + 1`` points including both endpoints.
    """
    if extent <= 0 or density <= 0:
        raise ContractError("extent and density must be positive")
    count = int(round(2 * extent * density)) + 1
    return SpatialGrid(extent=float(extent), points=np.linspace(-extent, extent, count))


def band_l2_norm(spectrum: BandSpectrum, grid: FrequencyGrid) -> float:
    """L2 norm of one band, ``sqrt(sum_k w_k |values_k|^2)``."""
    if spectrum.values.shape != grid.nodes.shape:
        raise ContractError("band size does not match grid size")
    return float(np.sqrt(np.sum(grid.weights * np.abs(spectrum.values) ** 2)))


def amalgam_norm(spectrum: AmalgamSpectrum, grid: FrequencyGrid) -> float:
    """Amalgam norm: band L2 norms summed in ascending band order plus tail."""
    total = 0.0
    for band in spectrum.bands:  # ascending m, fixed reduction order
        total += band_l2_norm(band, grid)
    return total + spectrum.tail_estimate


def l2_norm_parseval(spectrum: AmalgamSpectrum, grid: FrequencyGrid) -> float:
    """Global L2 norm via Parseval: ``sqrt(sum_m ||g_m||^2 + tail^2)``."""
    total = 0.0
    for band in spectrum.bands:
        total += band_l2_norm(band, grid) ** 2
    return float(np.sqrt(total + spectrum.tail_estimate**2))


def inverse_ft_at(
    spectrum: AmalgamSpectrum, grid: FrequencyGrid, x: float | np.ndarray
) -> complex | np.ndarray:
    """Inverse transform of a band-indexed spectrum at point(s) ``x``.

    Computes ``(2*pi)^{-1/2} sum_m sum_k w_k values_{m,k} e^{i x (xi_k + 2 pi m)}``
    with the fixed summation order ascending m then ascending k.

    Returns
    -------
    complex or np.ndarray
        Scalar for scalar `x`, array matching `x` otherwise.
    """
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    phase = np.exp(1j * np.outer(xs, grid.nodes))
    out = np.zeros(xs.shape, dtype=complex)
    for band in spectrum.bands:
        partial = phase @ (grid.weights * band.values)
        out += np.exp(1j * TWO_PI * band.band_index * xs) * partial
    out *= TWO_PI**-0.5
    if np.isscalar(x) or np.asarray(x).ndim == 0:
        return complex(out[0])
    return out
