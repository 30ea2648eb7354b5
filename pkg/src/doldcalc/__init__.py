"""Dold coefficients and root spectra of quasi-unipotent surface homeomorphisms."""
from .doldcore import (
    DoldSequence,
    RootSpectrum,
    algebraic_periods,
    check_dold_congruences,
    dold_coefficients,
    dold_to_spectrum,
    evaluate_expansion,
    genus_of,
    is_realizable,
    lefschetz_of,
    periodic_point_bounds,
    spectrum_to_dold,
)
from .genus_opt import GenusWitness, min_genus_exact, min_genus_odd, upper_bound_genus
from .spectra_enum import enumerate_catalog, enumerate_spectra, export_catalog, summarize
from .symplectic import cyclotomic_symplectic, realize_spectrum, verify_realization

__version__ = "0.1.0"
