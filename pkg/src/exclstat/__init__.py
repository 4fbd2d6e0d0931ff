"""Exclusion statistics: generating functions, entropy densities and
effective central charges of the Haldane-Wu and Gentile families."""
from .charge import (ChargeProblem, ChargeResult, charge_both, charge_closed,
                     charge_integral, solve_x0, solve_y0)
from .errors import (DomainError, ExclStatError, NoConvergence, NoSignChange, OutsideRadius,
                     SkippedOutsideRadius, TailTooLarge)
from .genfun import (Gentile, HaldaneWu, SeriesCoefficients, SeriesKind, coefficients,
                     duality_residual, eval_series, evaluate, radius)
from .numerics import Bracket, Tolerances, integrate, log_gamma, rogers_dilog, solve_bracketed
from .thermo import (CountResult, ThermoPoint, count_states, entropy_closed_hw,
                     entropy_generic, mu_max)

__version__ = "0.1.0"
