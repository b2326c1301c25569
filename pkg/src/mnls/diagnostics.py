"""Spatial functionals of a field and virial-identity residuals.

For a state u and the active layer value gamma the tracked quantities are

    mass      integral |u|^2
    kinetic   integral |grad u|^2
    potential integral |u|^(p+1)
    energy    kinetic/2 + gamma/(p+1) * potential
    variance  integral |x|^2 |u|^2            (I)
    momentum  Im integral (x . grad u) conj(u) (P)

with x measured from the domain center.  Within a layer the exact flow
obeys dI/dt = 4*gamma*P and dP/dt = 4*gamma*E when the Laplacian carries
gamma, and dI/dt = 4*P, dP/dt = 4*E when the nonlinearity does; P is then
piecewise linear and I piecewise quadratic in t, so a three-point
difference of the sampled series isolates the solver error.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientSamples
from .lattice import ComplexField, spectral_gradient

__all__ = ["DiagnosticsSample", "LayerResiduals", "sample_diagnostics", "virial_residuals"]

# fixed column order shared with the series.csv writer
SERIES_COLUMNS = (
    "t",
    "layer_gamma",
    "mass",
    "kinetic",
    "potential",
    "energy",
    "I",
    "P",
    "linf",
)


@dataclass(frozen=True)
class DiagnosticsSample:
    t: float
    layer_gamma: float
    mass: float
    kinetic: float
    potential: float
    energy: float
    variance: float
    momentum: float
    linf: float

    def as_row(self) -> tuple[float, ...]:
        """Values in SERIES_COLUMNS order."""
        return (
            self.t,
            self.layer_gamma,
            self.mass,
            self.kinetic,
            self.potential,
            self.energy,
            self.variance,
            self.momentum,
            self.linf,
        )


def sample_diagnostics(u: ComplexField, gamma_now: float, p: float) -> DiagnosticsSample:
    """Evaluate all tracked functionals of u for the layer value gamma_now."""
    g = u.grid
    v = u.values
    amp2 = v.real**2 + v.imag**2
    mass = g.integrate(amp2)
    grads = spectral_gradient(u)
    kin = 0.0
    for dv in grads:
        kin += g.integrate(dv.real**2 + dv.imag**2)
    pot = g.integrate(amp2 ** (0.5 * (p + 1.0)))
    energy = 0.5 * kin + gamma_now / (p + 1.0) * pot
    meshes = g.meshes()
    r2 = meshes[0] ** 2
    if g.dim == 2:
        r2 = r2 + meshes[1] ** 2
    variance = g.integrate(r2 * amp2)
    xdotgrad = meshes[0] * grads[0]
    if g.dim == 2:
        xdotgrad = xdotgrad + meshes[1] * grads[1]
    momentum = g.integrate(np.imag(xdotgrad * np.conj(v)))
    return DiagnosticsSample(
        t=float(u.time),
        layer_gamma=float(gamma_now),
        mass=float(mass),
        kinetic=float(kin),
        potential=float(pot),
        energy=float(energy),
        variance=float(variance),
        momentum=float(momentum),
        linf=float(np.sqrt(np.max(amp2))),
    )


def _three_point_derivative(t: np.ndarray, f: np.ndarray) -> np.ndarray:
    """d f/d t at interior nodes of a possibly nonuniform time series.

    Exact for quadratics regardless of spacing, which matters because the
    first and last gaps inside a layer need not match the sampling stride.
    """
    h1 = t[1:-1] - t[:-2]
    h2 = t[2:] - t[1:-1]
    return (f[2:] * h1**2 - f[:-2] * h2**2 + f[1:-1] * (h2**2 - h1**2)) / (
        h1 * h2 * (h1 + h2)
    )


@dataclass(frozen=True)
class LayerResiduals:
    """Virial residuals at the interior samples of one layer."""

    gamma: float
    times: np.ndarray
    residual1: np.ndarray  # |dI/dt - target * P|
    residual2: np.ndarray  # |dP/dt - target * E|


def virial_residuals(log, model) -> list[LayerResiduals]:
    """Per-layer virial residual series from a trajectory log.

    The factor multiplying P and E is 4*gamma for Laplacian management and
    4 otherwise.  Interface samples anchor the one-sided differences but
    never receive a residual of their own.  Raises InsufficientSamples when
    no layer holds at least three samples.
    """
    switch_times = [e["t"] for e in log.events if e.get("type") == "layer_switch"]
    groups: list[list] = [[] for _ in range(len(switch_times) + 1)]
    idx = 0
    for s in log.samples:
        while idx < len(switch_times) and s.t > switch_times[idx]:
            idx += 1
        groups[idx].append(s)
    dm_like = model.kind == "dm"
    out = []
    for grp in groups:
        if len(grp) < 3:
            continue
        t = np.array([s.t for s in grp])
        ivals = np.array([s.variance for s in grp])
        pvals = np.array([s.momentum for s in grp])
        evals = np.array([s.energy for s in grp])
        gamma = grp[1].layer_gamma
        factor = 4.0 * gamma if dm_like else 4.0
        di = _three_point_derivative(t, ivals)
        dp = _three_point_derivative(t, pvals)
        out.append(
            LayerResiduals(
                gamma=gamma,
                times=t[1:-1],
                residual1=np.abs(di - factor * pvals[1:-1]),
                residual2=np.abs(dp - factor * evals[1:-1]),
            )
        )
    if not out:
        raise InsufficientSamples("no layer carries three or more samples")
    return out
