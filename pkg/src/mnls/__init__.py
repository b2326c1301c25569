"""Pseudo-spectral simulator for managed nonlinear Schrodinger equations.

The package models two periodically managed variants of the mass-critical
focusing NLS on a periodic box: one where the coefficient in front of the
Laplacian flips sign layer by layer (dispersion management) and one where
the sign sits on the nonlinearity instead (nonlinearity management).  It
ships a Strang splitting propagator with blowup detection, closed-form
reference profiles, conservation and virial diagnostics, a backward
constructor for initial data that blows up inside a prescribed layer, an
experiment catalog with a reproducible artifact writer, and a parameter
sweep that grades management maps by whether they keep the flow bounded.
"""

__version__ = "0.1.0"

from .constructor import backward_blowup_data
from .diagnostics import sample_diagnostics, virial_residuals
from .errors import (
    BlowupDuringConstruction,
    ConfigError,
    MnlsError,
    NonFiniteState,
    TimePastBlowup,
)
from .harness import resolve_config, run_experiment
from .lattice import ComplexField, Grid, make_grid, spectral_gradient
from .mgmt_map import DispersionMap, normalized_map
from .profiles import (
    ground_state_1d,
    ground_state_curve,
    pseudo_conformal_field,
    sech_profile_2d,
)
from .propagator import BlowupPolicy, ModelSpec, TrajectoryLog, evolve
from .runio import read_series_csv, read_snapshot, write_snapshot
from .sweep import ManageabilityCriterion, sweep_manageability

__all__ = [
    "__version__",
    "BlowupDuringConstruction",
    "BlowupPolicy",
    "ComplexField",
    "ConfigError",
    "DispersionMap",
    "Grid",
    "ManageabilityCriterion",
    "MnlsError",
    "ModelSpec",
    "NonFiniteState",
    "TimePastBlowup",
    "TrajectoryLog",
    "backward_blowup_data",
    "evolve",
    "ground_state_1d",
    "ground_state_curve",
    "make_grid",
    "normalized_map",
    "pseudo_conformal_field",
    "read_series_csv",
    "read_snapshot",
    "resolve_config",
    "run_experiment",
    "sample_diagnostics",
    "sech_profile_2d",
    "spectral_gradient",
    "sweep_manageability",
    "virial_residuals",
    "write_snapshot",
]
