"""Truncated Frobenius series and Rayleigh-Ritz spectra for the radial
Coulomb-plus-oscillator equation."""

from ._coulho import (
    AllowedField,
    AllowedFieldReport,
    BasisShortfall,
    DimensionlessImage,
    DisclinationParams,
    HFReport,
    SpectrumResult,
    SweepPoint,
    SweepRow,
    SweepTable,
    TruncationMatch,
    TruncationSolution,
    W_from_energy,
    allowed_field_strengths,
    compute_sweep,
    energy_from_W,
    field_for_strength,
    hellmann_feynman_check,
    spectrum,
    termination_ratio,
    to_dimensionless,
    truncation_point_locator,
    truncation_spectrum,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
