"""Hahn (q, omega) quantum calculus and a spectral solver for the
one-dimensional q,omega-Dirac system.

The calculus layer (hahn) provides the two-parameter difference operator,
its dual, geometric lattices and Jackson-Norlund integration; trig evaluates
the deformed cosine and sine entire functions and localizes their zeros;
solver integrates the coupled first-order system by Picard iteration on its
Volterra form; spectrum builds the characteristic function of a two-point
boundary-value problem and finds, checks and reports its eigenvalues.
"""

from .backend import backend_name, kernels, load_kernels, use_backend, warmup
from .errors import (DerivativeStepUnstable, FixedPointDerivativeUnavailable,
                     MissedRootSuspected, NoConvergence,
                     PrecisionBudgetExceeded, PrecisionLoss, QwDiracError,
                     SeriesDivergence, ZeroNotBracketed)
from .hahn import (HahnParams, JnReport, LatticeGrid, RealFunction,
                   dual_derivative, h_apply, hahn_derivative, inner_product,
                   jn_integral, jn_integral_report, q_bracket, q_pochhammer)
from .solver import (ConvergenceReport, Potentials, VectorSolution,
                     convergence_bound, fundamental_pair, picard_solve,
                     residual, solve_free, wronskian)
from .spectrum import (BoundarySpec, EigenvalueInfo, SpectrumResult,
                       asymptotic_eigenvalue, characteristic,
                       example_problem, find_eigenvalues,
                       green_bracket_defect, max_trustworthy_index,
                       norm_identity_defect, orthogonality_defect,
                       phi_solution)
from .trig import (TrigEval, ZeroResult, combined_argument, cos_qw, sin_qw,
                   trig_zero, trig_zero_detailed)

__version__ = "0.1.0"

__all__ = [
    "BoundarySpec", "ConvergenceReport", "DerivativeStepUnstable",
    "EigenvalueInfo", "FixedPointDerivativeUnavailable", "HahnParams",
    "JnReport", "LatticeGrid", "MissedRootSuspected", "NoConvergence",
    "Potentials", "PrecisionBudgetExceeded", "PrecisionLoss", "QwDiracError",
    "RealFunction", "SeriesDivergence", "SpectrumResult", "TrigEval",
    "VectorSolution", "ZeroNotBracketed", "ZeroResult",
    "asymptotic_eigenvalue", "backend_name", "characteristic",
    "combined_argument", "convergence_bound", "cos_qw", "dual_derivative",
    "example_problem", "find_eigenvalues", "fundamental_pair",
    "green_bracket_defect", "h_apply", "hahn_derivative", "inner_product",
    "jn_integral", "jn_integral_report", "kernels", "load_kernels",
    "max_trustworthy_index", "norm_identity_defect", "orthogonality_defect",
    "phi_solution", "picard_solve", "q_bracket", "q_pochhammer", "residual",
    "sin_qw", "solve_free", "trig_zero", "trig_zero_detailed", "use_backend",
    "warmup", "wronskian",
]
