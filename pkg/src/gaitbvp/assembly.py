"""Finite-difference assembly of the inner and outer regions.

Both regions use second-order central differences on a uniform grid and
fold the two Dirichlet boundary values into the right-hand side, leaving
a tridiagonal system over the n - 1 interior nodes.

Inner region (stretched variable T, step k):

    C_i Z_{i-1} + A_i Z_i + B_i Z_{i+1} = f_i

    C_i = eps^2 (1/k^2 + U_i / 2k)
    A_i = V_i - 2 eps^2 / k^2
    B_i = eps^2 (1/k^2 - U_i / 2k)

Outer region (physical time t, step k):

    C~_i = 1/k^2 - w_i / 2k
    A~_i = s_i - 2/k^2
    B~_i = 1/k^2 + w_i / 2k

Coefficient evaluation depends on the problem's variable convention:

* ordinary problems: the inner region substitutes U_i = mu(T_i/eps),
  V_i = v(T_i/eps), f_i = f(T_i/eps); the outer region uses
  w_i = eps * mu(t_i), s_i = v(t_i), f_i = f(t_i).
* problems stated in the stretched variable (the bundled examples):
  the inner region evaluates the stored functions at T_i directly.
  The outer stencil above assumes a unit coefficient on z'', so the
  stretched-form equation is first normalized by eps^2, giving
  w_i = mu(t_i), s_i = v(t_i) / eps^2 and f_i = f(t_i) / eps^2.
  Row ratios are unchanged, which is what keeps the interior solution
  glued to the reduced solution f/v for small eps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mesh import UniformGrid
from .model import GaitProblem
from .tridiag import TridiagonalSystem

__all__ = [
    "AssembledRegion",
    "StabilityReport",
    "assemble_inner",
    "assemble_outer",
    "stability_check",
]


@dataclass(frozen=True)
class AssembledRegion:
    """One region's tridiagonal system plus the data needed to audit it.

    ``stiffness_values`` and ``damping_values`` are the per-interior-node
    coefficients exactly as they entered the stencil (after any variable
    or normalization handling), so identities like row sums can be
    checked against them without re-deriving conventions.
    """

    system: TridiagonalSystem
    grid: UniformGrid
    left_value: float
    right_value: float
    region_kind: str  # "inner" or "outer"
    epsilon: float
    stiffness_values: np.ndarray
    damping_values: np.ndarray


@dataclass(frozen=True)
class StabilityReport:
    """Node-wise stability margins for one assembled region.

    Inner regions use the discrete stability condition of the stretched
    stencil, margin_i = V_i - 4 eps^2 / k^2; outer regions use strict
    diagonal dominance of the full stencil, |A~_i| - (|C~_i| + |B~_i|).
    The check is diagnostic only: the bundled examples violate it (their
    stored stiffness is negative) yet solve without breakdown, because
    negative stiffness makes the matrix diagonally dominant instead.
    """

    region_kind: str
    margins: np.ndarray
    satisfied: bool
    worst_node: int


def _check_boundary_values(left_value: float, right_value: float) -> None:
    for name, val in (("left_value", left_value), ("right_value", right_value)):
        if not math.isfinite(val):
            raise ValueError(f"{name} must be finite, got {val!r}")


def assemble_inner(
    problem: GaitProblem,
    grid: UniformGrid,
    left_value: float,
    right_value: float,
) -> AssembledRegion:
    """Assemble the boundary-layer region on a stretched-variable grid."""
    _check_boundary_values(left_value, right_value)
    eps = problem.epsilon
    eps2 = eps * eps
    k = grid.k
    inv_k2 = 1.0 / (k * k)
    two_diff = 2.0 * eps2 * inv_k2

    m = grid.n - 1
    cs = np.empty(m)
    as_ = np.empty(m)
    bs = np.empty(m)
    rhs = np.empty(m)
    stiff = np.empty(m)
    damp = np.empty(m)
    for j in range(m):
        T = grid.node(j + 1)
        tau = T if problem.coeffs_in_stretched_variable else T / eps
        U = problem.damping(tau)
        V = problem.stiffness(tau)
        half = U / (2.0 * k)
        cs[j] = eps2 * (inv_k2 + half)
        as_[j] = V - two_diff
        bs[j] = eps2 * (inv_k2 - half)
        rhs[j] = problem.forcing(tau)
        stiff[j] = V
        damp[j] = U

    rhs[0] -= cs[0] * left_value
    rhs[m - 1] -= bs[m - 1] * right_value
    system = TridiagonalSystem(
        lower=cs[1:], diag=as_, upper=bs[: m - 1], rhs=rhs
    )
    return AssembledRegion(
        system=system,
        grid=grid,
        left_value=left_value,
        right_value=right_value,
        region_kind="inner",
        epsilon=eps,
        stiffness_values=stiff,
        damping_values=damp,
    )


def assemble_outer(
    problem: GaitProblem,
    grid: UniformGrid,
    left_value: float,
    right_value: float,
) -> AssembledRegion:
    """Assemble the outer region (also used for whole-domain solves)."""
    _check_boundary_values(left_value, right_value)
    eps = problem.epsilon
    eps2 = eps * eps
    k = grid.k
    inv_k2 = 1.0 / (k * k)
    two_diff = 2.0 * inv_k2
    stretched = problem.coeffs_in_stretched_variable

    m = grid.n - 1
    cs = np.empty(m)
    as_ = np.empty(m)
    bs = np.empty(m)
    rhs = np.empty(m)
    stiff = np.empty(m)
    damp = np.empty(m)
    for j in range(m):
        t = grid.node(j + 1)
        if stretched:
            w = problem.damping(t)
            s = problem.stiffness(t) / eps2
            f = problem.forcing(t) / eps2
        else:
            w = eps * problem.damping(t)
            s = problem.stiffness(t)
            f = problem.forcing(t)
        half = w / (2.0 * k)
        cs[j] = inv_k2 - half
        as_[j] = s - two_diff
        bs[j] = inv_k2 + half
        rhs[j] = f
        stiff[j] = s
        damp[j] = w

    rhs[0] -= cs[0] * left_value
    rhs[m - 1] -= bs[m - 1] * right_value
    system = TridiagonalSystem(
        lower=cs[1:], diag=as_, upper=bs[: m - 1], rhs=rhs
    )
    return AssembledRegion(
        system=system,
        grid=grid,
        left_value=left_value,
        right_value=right_value,
        region_kind="outer",
        epsilon=eps,
        stiffness_values=stiff,
        damping_values=damp,
    )


def stability_check(
    region: AssembledRegion, problem: GaitProblem | None = None
) -> StabilityReport:
    """Evaluate the region's stability margins (diagnostic only).

    The region records everything the check needs (epsilon and the
    sampled coefficients), so ``problem`` is accepted only for symmetry
    with the assemble_* call sites and is never consulted.
    """
    k = region.grid.k
    inv_k2 = 1.0 / (k * k)
    if region.region_kind == "inner":
        eps2 = region.epsilon * region.epsilon
        margins = region.stiffness_values - 4.0 * eps2 * inv_k2
    else:
        half = region.damping_values / (2.0 * k)
        lower = np.abs(inv_k2 - half)
        upper = np.abs(inv_k2 + half)
        diag = np.abs(region.stiffness_values - 2.0 * inv_k2)
        margins = diag - (lower + upper)
    return StabilityReport(
        region_kind=region.region_kind,
        margins=margins,
        satisfied=bool(np.all(margins > 0.0)),
        worst_node=int(np.argmin(margins)) + 1,
    )
