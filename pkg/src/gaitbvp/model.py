"""Problem definitions for the vertical center-of-mass gait model.

The governing equation is a singularly perturbed linear two-point
boundary-value problem for the vertical displacement z(t),

    z'' + eps * mu(t) * z' + v(t) * z = f(t),    z(0) = f1,  z(t_f) = f2,

with a small perturbation parameter eps.  The stiffness v(t) is stored
exactly as it multiplies z above, so problems with a restoring force of
the usual sign carry a *negative* stiffness value here.  The default
forcing is the constant -g (gravity pulling down).

Near t = 0 the solution develops a boundary layer.  Rescaling time as
T = eps * t turns the equation into its stretched (inner) form

    eps^2 Z'' + eps^2 * U(T) * Z' + V(T) * Z = f,   U(T) = mu(T/eps),

which is what the inner-region difference stencil discretizes.  The
bundled example problems are stated directly in the stretched form, with
coefficient functions of T rather than t; such problems set
``coeffs_in_stretched_variable`` so that assembly evaluates their
coefficients in the native variable instead of re-substituting T/eps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Callable

__all__ = [
    "CoefficientFn",
    "GaitProblem",
    "PresetId",
    "Variant",
    "ZeroStiffness",
    "constant",
    "manufacture",
    "preset",
    "reduced_solution",
]

# Scalar-valued coefficient function of one scalar time argument.
CoefficientFn = Callable[[float], float]

#: Stiffness magnitudes below this are treated as zero by reduced_solution.
STIFFNESS_ZERO_TOL = 1e-14


class ZeroStiffness(ArithmeticError):
    """Raised when the reduced solution f(t)/v(t) hits a vanishing v(t)."""

    def __init__(self, t: float, value: float):
        self.t = t
        self.value = value
        super().__init__(
            f"stiffness vanishes at t = {t!r} (value {value!r}); "
            "the reduced solution f/v is undefined there"
        )


def constant(value: float) -> CoefficientFn:
    """Return the constant coefficient function t -> value."""

    def fn(_t: float) -> float:
        return value

    return fn


@dataclass(frozen=True)
class GaitProblem:
    """Immutable description of one boundary-value problem.

    Attributes
    ----------
    epsilon : float
        Perturbation parameter, > 0.
    damping : CoefficientFn
        mu(t); the damping term in the equation is eps * mu(t) * z'.
    stiffness : CoefficientFn
        v(t), stored with the sign it carries on the left-hand side.
    gravity : float
        Constant g used for the default forcing -g.
    f1, f2 : float
        Boundary displacements at t = 0 and t = t_f.
    t_f : float
        Right end of the time domain, > 0.
    forcing : CoefficientFn, optional
        Right-hand side f(t); defaults to the constant -gravity.
    coeffs_in_stretched_variable : bool
        True when damping/stiffness/forcing are functions of the
        stretched variable T rather than physical time t.
    split_point : float, optional
        Problem-specific default for the inner/outer split t_p.
    """

    epsilon: float
    damping: CoefficientFn
    stiffness: CoefficientFn
    gravity: float
    f1: float
    f2: float
    t_f: float
    forcing: CoefficientFn | None = None
    coeffs_in_stretched_variable: bool = False
    split_point: float | None = None

    def __post_init__(self) -> None:
        if not (self.epsilon > 0.0):
            raise ValueError(f"epsilon must be positive, got {self.epsilon!r}")
        if not (self.t_f > 0.0):
            raise ValueError(f"t_f must be positive, got {self.t_f!r}")
        if self.forcing is None:
            object.__setattr__(self, "forcing", constant(-self.gravity))


class PresetId(IntEnum):
    """The three bundled example problems."""

    EXAMPLE_1 = 1
    EXAMPLE_2 = 2
    EXAMPLE_3 = 3


class Variant(Enum):
    """Which reading of an example problem to build.

    AS_WRITTEN keeps the coefficients exactly as the example equations
    state them.  TABLE_CONSISTENT applies the minimal correction that
    makes the reduced solution decay the way the tabulated reference
    values do; see :func:`preset` for the per-example details.
    """

    AS_WRITTEN = "as-written"
    TABLE_CONSISTENT = "table-consistent"


_PRESET_SPLIT = {
    PresetId.EXAMPLE_1: 0.02,
    PresetId.EXAMPLE_2: 0.01,
    PresetId.EXAMPLE_3: 0.01,
}


def _exp_coeff(scale: float, rate: float) -> CoefficientFn:
    def fn(t: float) -> float:
        return scale * math.exp(rate * t)

    return fn


def _linear_coeff(slope: float) -> CoefficientFn:
    def fn(t: float) -> float:
        return slope * t

    return fn


def preset(
    preset_id: PresetId,
    variant: Variant = Variant.TABLE_CONSISTENT,
    epsilon: float = 1e-3,
) -> GaitProblem:
    """Build one of the three example problems.

    All three are stated in the stretched variable T on [0, 1]:

    1.  eps^2 Z'' + eps^2 e^T Z' - 2 e^-T Z = -9.8,  Z(0) = 4,   Z(1) = 2
    2.  eps^2 Z'' + eps^2 T   Z' - 1000 T Z = -10,   Z(0) = 1,   Z(1) = 0.1
    3.  eps^2 Z''               -  e^T    Z = -10,   Z(0) = 9.6, Z(1) = 3

    Two examples disagree with their own tabulated solutions, so each
    carries two variants:

    * Example 1 as written has reduced solution 4.9 e^{+T} (growing),
      while its table decays like 4.9 e^{-T}.  The table-consistent
      variant flips the stiffness exponent to -2 e^{+T}.
    * Example 2 as written ends at Z(1) = 0.1, but its table ends at
      0.0100, which also equals the reduced solution at T = 1.  The
      table-consistent variant uses f2 = 0.01.
    * Example 3 is internally consistent; both variants coincide.

    ``epsilon`` is the caller's choice; the reference tables sweep it
    over {0.0009, 0.009, 0.001, 0.01}.
    """
    preset_id = PresetId(preset_id)
    variant = Variant(variant)
    split = _PRESET_SPLIT[preset_id]
    if preset_id is PresetId.EXAMPLE_1:
        stiff_rate = -1.0 if variant is Variant.AS_WRITTEN else 1.0
        return GaitProblem(
            epsilon=epsilon,
            damping=_exp_coeff(1.0, 1.0),
            stiffness=_exp_coeff(-2.0, stiff_rate),
            gravity=9.8,
            f1=4.0,
            f2=2.0,
            t_f=1.0,
            coeffs_in_stretched_variable=True,
            split_point=split,
        )
    if preset_id is PresetId.EXAMPLE_2:
        f2 = 0.1 if variant is Variant.AS_WRITTEN else 0.01
        return GaitProblem(
            epsilon=epsilon,
            damping=_linear_coeff(1.0),
            stiffness=_linear_coeff(-1000.0),
            gravity=10.0,
            f1=1.0,
            f2=f2,
            t_f=1.0,
            coeffs_in_stretched_variable=True,
            split_point=split,
        )
    return GaitProblem(
        epsilon=epsilon,
        damping=constant(0.0),
        stiffness=_exp_coeff(-1.0, 1.0),
        gravity=10.0,
        f1=9.6,
        f2=3.0,
        t_f=1.0,
        coeffs_in_stretched_variable=True,
        split_point=split,
    )


def reduced_solution(problem: GaitProblem, t: float) -> float:
    """Evaluate the eps -> 0 limit f(t)/v(t) of the equation.

    Dropping both derivative terms leaves v(t) z = f(t).  This is the
    leading-order solution away from boundary layers and doubles as the
    interface seed for the decomposed solve.

    Raises
    ------
    ZeroStiffness
        If |v(t)| < STIFFNESS_ZERO_TOL.
    """
    v = problem.stiffness(t)
    if abs(v) < STIFFNESS_ZERO_TOL:
        raise ZeroStiffness(t, v)
    return problem.forcing(t) / v


def manufacture(
    exact: CoefficientFn,
    exact_d1: CoefficientFn,
    exact_d2: CoefficientFn,
    *,
    epsilon: float,
    damping: CoefficientFn,
    stiffness: CoefficientFn,
    t_f: float,
) -> GaitProblem:
    """Build a problem whose exact solution is the supplied function.

    The forcing is chosen so that ``exact`` satisfies the equation
    identically:

        f(t) = exact''(t) + eps * damping(t) * exact'(t)
                          + stiffness(t) * exact(t)

    and the boundary values are read off the exact solution.  The first
    and second derivatives must be supplied explicitly.
    """

    def forcing(t: float) -> float:
        return (
            exact_d2(t)
            + epsilon * damping(t) * exact_d1(t)
            + stiffness(t) * exact(t)
        )

    return GaitProblem(
        epsilon=epsilon,
        damping=damping,
        stiffness=stiffness,
        gravity=0.0,
        f1=exact(0.0),
        f2=exact(t_f),
        t_f=t_f,
        forcing=forcing,
    )
