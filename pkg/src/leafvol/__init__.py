"""Exact Hilbert/Molien series, leaf-space volume ratios and basic spectra of foliated spheres."""

from .catalog import get_entry, list_entries
from .exactnum import CyclotomicElement, as_rational, cyc_inverse, cyclotomic_polynomial, root_of_unity
from .hilbert import HilbertSeries, HironakaData, cm_pole_check, from_hironaka, from_molien
from .molien import FiniteMatrixGroup, GroupElement, char_det, enumerate_group, molien_series
from .polyrat import (
    PartialFractionForm,
    Periodic,
    Polynomial,
    RationalFunction,
    asymptotic_profile,
    laurent_at_one,
    partial_fractions,
    pole_order,
    series_coefficients,
)
from .spectrum import (
    BasicSpectrum,
    b_series_identity,
    counting_function,
    harmonic_multiplicities,
    heat_trace,
    weyl_table,
)
from .volume import ExactConstant, VolumeReport, ball_volume, ratio_from_hironaka, sphere_volume, volume_ratio

__version__ = "0.1.0"
