"""Exact and spectral enumeration of smooth words, smooth cyclic words,
and smooth necklaces over the alphabet {1, ..., k}.

Four mutually cross-checking count pipelines: brute-force enumeration
(`words`), exact transfer-matrix arithmetic (`transfer`), rational
generating functions (`genfunc`), and trigonometric closed forms with
validated rounding (`spectral`).
"""

from .chebyshev import Poly, eval_poly, t_poly, theta_poly, u_poly, u_zeros
from .genfunc import (RationalSeries, scw_gf, series_coeffs, series_equal,
                      sw_gf, sw_prefix_gf)
from .spectral import (PrecisionExhausted, Spectrum, cyclic_proportion_limit,
                       in_validated_window, residues, round_validated,
                       scw_asymptotic, scw_trig, sn_trig, spectrum,
                       sw_asymptotic, sw_trig)
from .transfer import (divisors, matrix_power, matrix_power_apply,
                       necklace_exact, scw_exact, scw_pair_exact, sw_exact,
                       sw_prefix_exact, totient, transfer_matrix,
                       usmani_inverse_entry)
from .words import (canonical_rotation, count_cyclic_bf, count_necklaces_bf,
                    count_smooth_bf, is_smooth, is_smooth_cyclic)

__version__ = "0.1.0"

__all__ = [
    "Poly", "RationalSeries", "Spectrum", "PrecisionExhausted",
    "u_poly", "t_poly", "theta_poly", "eval_poly", "u_zeros",
    "is_smooth", "is_smooth_cyclic", "canonical_rotation",
    "count_smooth_bf", "count_cyclic_bf", "count_necklaces_bf",
    "transfer_matrix", "matrix_power", "matrix_power_apply",
    "sw_exact", "scw_exact", "sw_prefix_exact", "scw_pair_exact",
    "necklace_exact", "totient", "divisors", "usmani_inverse_entry",
    "sw_gf", "scw_gf", "sw_prefix_gf", "series_coeffs", "series_equal",
    "spectrum", "sw_trig", "scw_trig", "sn_trig", "residues",
    "round_validated", "in_validated_window",
    "sw_asymptotic", "scw_asymptotic", "cyclic_proportion_limit",
]
