"""Unbiased FIR smoothers from Shmaliy and Hahn polynomials, with exact verification."""

from .exactnum import MPComplex, bernoulli_number, bernoulli_polynomial, pochhammer
from .hypergeom import PFQSpec, eval_pfq, thomae_transform, verify_thomae
from .lowpass import (
    Signal,
    apply_fir,
    lowpass_weights,
    lp_transfer_closed,
    lp_transfer_direct,
    lp_transfer_general_beta,
    orthogonal_difference,
    unbiasedness_integrals,
)
from .orthopoly import HahnParams, hahn_eval, hahn_norm_ratio, hahn_weight, hankel_build, jacobi_eval, power_sum
from .shmaliy import CoefficientVector, all_routes, shmaliy_taps, verify_shmaliy_properties
from .transfer import cancellation_report, frequency_response, transfer_closed, transfer_direct

__version__ = "0.1.0"
