"""Entanglement spectra and entropies of permutation-invariant spin states."""

from ._core import (
    DomainError,
    ResourceError,
    Sector,
    asymptotic_entropy,
    block_entropy,
    dimension_symmetric_subspace,
    effective_spin,
    entropy_report,
    exact_spectrum,
    finite_size_corrections,
    fit_prefactor,
    gaussian_model,
    max_entropy_bound,
    run_cli,
    spectrum_json,
    thermo_spectrum,
    uniform_mixed_spectrum,
    verify_theorem,
    verify_uniform_mixture,
)

__version__ = "0.1.0"


def sector(occupations=None, densities=None):
    """Finite sector from occupations, or the thermodynamic limit from densities."""
    if (occupations is None) == (densities is None):
        raise ValueError("give exactly one of occupations or densities")
    if occupations is not None:
        return Sector.finite(list(occupations))
    return Sector.infinite([float(p) for p in densities])


__all__ = [
    "DomainError",
    "ResourceError",
    "Sector",
    "asymptotic_entropy",
    "block_entropy",
    "dimension_symmetric_subspace",
    "effective_spin",
    "entropy_report",
    "exact_spectrum",
    "finite_size_corrections",
    "fit_prefactor",
    "gaussian_model",
    "max_entropy_bound",
    "run_cli",
    "sector",
    "spectrum_json",
    "thermo_spectrum",
    "uniform_mixed_spectrum",
    "verify_theorem",
    "verify_uniform_mixture",
]
