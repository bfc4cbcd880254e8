"""Numerical fluid-limit machinery: fixed points, bounds, profile, ODE system."""

from .bounds import (
    bound_er,
    bound_m,
    bound_main,
    bound_regular,
    signed_length_integral,
    signed_length_integral_alpha_form,
)
from .fixedpoint import (
    AlphaCurve,
    alpha_c,
    alpha_curve,
    alpha_prime,
    da_ghat_alpha,
    ds_ghat_alpha,
    ds_ghat_at_one,
    g_alpha,
    g_alpha_coefficients,
    ghat_alpha,
    solve_alpha_of_rho,
    solve_rho,
    xi,
)
from .ode import OdeTrajectory, integrate_ode_system
from .pgf import GenFn, SizeBiasedGenFn
from .profile import ProfileCurve, profile, save_profile_json
from .report import TheoryReport, build_theory_report
from .special import dilog, logint

__all__ = [
    "GenFn",
    "SizeBiasedGenFn",
    "AlphaCurve",
    "ProfileCurve",
    "OdeTrajectory",
    "TheoryReport",
    "solve_rho",
    "xi",
    "alpha_c",
    "alpha_curve",
    "alpha_prime",
    "solve_alpha_of_rho",
    "g_alpha",
    "ghat_alpha",
    "ds_ghat_alpha",
    "da_ghat_alpha",
    "ds_ghat_at_one",
    "g_alpha_coefficients",
    "bound_main",
    "bound_m",
    "bound_regular",
    "bound_er",
    "signed_length_integral",
    "signed_length_integral_alpha_form",
    "dilog",
    "logint",
    "profile",
    "save_profile_json",
    "integrate_ode_system",
    "build_theory_report",
]
