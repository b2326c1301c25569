"""Periodic spectral lattice: grids, fields, derivatives, quadrature.

The domain is the square [-L, L)^dim sampled on n uniform nodes per axis,
with the usual FFT wavenumber set k = (pi/L)*m, m = -n/2 .. n/2-1.  All
integrals are rectangle sums, which are spectrally accurate for smooth
periodic integrands.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidDimension, InvalidResolution

__all__ = ["Grid", "ComplexField", "make_grid", "spectral_gradient"]


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class Grid:
    """Uniform periodic grid on [-L, L)^dim.

    Attributes:
        dim: spatial dimension, 1 or 2.
        half_width: L, half the box edge length.
        n: nodes per axis (power of two, >= 8).
    """

    dim: int
    half_width: float
    n: int

    @property
    def dx(self) -> float:
        return 2.0 * self.half_width / self.n

    @property
    def cell_volume(self) -> float:
        return self.dx**self.dim

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.n,) * self.dim

    # The table helpers below are cached per grid and shared by the hot
    # loops; callers must treat the returned arrays as read-only.

    @lru_cache(maxsize=32)
    def axis_coords(self) -> np.ndarray:
        """Node coordinates along one axis, measured from the box center."""
        return -self.half_width + self.dx * np.arange(self.n)

    @lru_cache(maxsize=32)
    def axis_wavenumbers(self) -> np.ndarray:
        """Wavenumbers along one axis in FFT storage order.

        Equals (pi/L)*m for m in [-n/2, n/2); the unpaired m = -n/2 mode is
        kept so the table matches numpy's transform layout exactly.
        """
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.dx)

    @lru_cache(maxsize=32)
    def meshes(self) -> tuple[np.ndarray, ...]:
        """Coordinate arrays, one per axis, broadcastable to `shape`."""
        x = self.axis_coords()
        if self.dim == 1:
            return (x,)
        return tuple(np.meshgrid(x, x, indexing="ij"))

    @lru_cache(maxsize=32)
    def laplacian_symbol(self) -> np.ndarray:
        """|k|^2 on the FFT-ordered frequency lattice."""
        k = self.axis_wavenumbers()
        if self.dim == 1:
            return k * k
        return k[:, None] ** 2 + k[None, :] ** 2

    def integrate(self, values: np.ndarray) -> float:
        """Rectangle-rule integral of a real sampled function."""
        return float(np.sum(values)) * self.cell_volume


def make_grid(dim: int, half_width: float, n: int) -> Grid:
    """Validate parameters and build a Grid.

    Raises InvalidDimension unless dim is 1 or 2, and InvalidResolution
    unless n is a power of two >= 8.
    """
    if dim not in (1, 2):
        raise InvalidDimension(f"dim must be 1 or 2, got {dim}")
    if not isinstance(n, (int, np.integer)) or n < 8 or not _is_power_of_two(int(n)):
        raise InvalidResolution(f"n must be a power of two >= 8, got {n}")
    if not (half_width > 0.0 and np.isfinite(half_width)):
        raise ValueError(f"half_width must be positive and finite, got {half_width}")
    return Grid(dim=int(dim), half_width=float(half_width), n=int(n))


@dataclass
class ComplexField:
    """Complex-valued state sampled on a Grid, stamped with its time."""

    grid: Grid
    values: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.values.shape != self.grid.shape:
            raise ValueError(
                f"values shape {self.values.shape} != grid shape {self.grid.shape}"
            )

    def copy(self) -> "ComplexField":
        return ComplexField(self.grid, self.values.copy(), self.time)

    def mass(self) -> float:
        """L2 mass, integral of |u|^2."""
        v = self.values
        return self.grid.integrate(v.real**2 + v.imag**2)

    def linf(self) -> float:
        return float(np.max(np.abs(self.values)))


def spectral_gradient(f: ComplexField) -> tuple[np.ndarray, ...]:
    """Partial derivatives of the field along each axis.

    Each derivative is computed by multiplication with i*k in frequency
    space, exact for band-limited fields.  The unpaired Nyquist mode has no
    well-defined odd derivative on a real lattice, so its multiplier is
    zeroed; smooth, well-resolved fields carry no content there anyway.
    """
    g = f.grid
    k = g.axis_wavenumbers().copy()
    k[g.n // 2] = 0.0
    if g.dim == 1:
        return (np.fft.ifft(1j * k * np.fft.fft(f.values)),)
    fx = np.fft.ifft(1j * k[:, None] * np.fft.fft(f.values, axis=0), axis=0)
    fy = np.fft.ifft(1j * k[None, :] * np.fft.fft(f.values, axis=1), axis=1)
    return (fx, fy)
