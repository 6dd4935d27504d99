"""Uniform grids and the inner/outer domain decomposition.

The domain [0, t_f] is split at t_p.  The boundary-layer region
[0, t_p] is solved in the stretched variable T = eps * t, so its grid
spans [0, eps * t_p]; the outer region keeps physical time on
[t_p, t_f].  Node values are always computed as start + i * k so that
repeated evaluation is bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import GaitProblem

__all__ = [
    "DEFAULT_N_INNER",
    "DEFAULT_N_OUTER",
    "DecompositionPlan",
    "InvalidGrid",
    "InvalidSplit",
    "UniformGrid",
    "build_decomposition",
    "default_decomposition",
    "default_split_point",
    "stretch",
    "unstretch",
]

#: Default interval counts; the outer default gives a step of about
#: 0.0098 on [0.01, 1], the spacing of the bundled reference tables.
DEFAULT_N_INNER = 10
DEFAULT_N_OUTER = 101


class InvalidGrid(ValueError):
    """Raised for degenerate grids (too few intervals, empty span)."""


class InvalidSplit(ValueError):
    """Raised when the split point does not lie strictly inside (0, t_f)."""


@dataclass(frozen=True)
class UniformGrid:
    """n + 1 equally spaced nodes on [start, end]."""

    start: float
    end: float
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidGrid(f"need at least 2 intervals, got n = {self.n}")
        if not (self.end > self.start):
            raise InvalidGrid(
                f"grid span is empty: [{self.start!r}, {self.end!r}]"
            )

    @property
    def k(self) -> float:
        """Step size (end - start) / n."""
        return (self.end - self.start) / self.n

    def node(self, i: int) -> float:
        """Node i as start + i * k (no accumulation)."""
        return self.start + i * self.k

    def nodes(self) -> np.ndarray:
        """All n + 1 nodes."""
        return self.start + np.arange(self.n + 1) * self.k


@dataclass(frozen=True)
class DecompositionPlan:
    """Inner grid (stretched variable) plus outer grid (physical time)."""

    t_p: float
    inner: UniformGrid
    outer: UniformGrid
    epsilon: float


def stretch(t: float, epsilon: float) -> float:
    """Map physical time to the boundary-layer variable T = eps * t."""
    if not (epsilon > 0.0):
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    return epsilon * t


def unstretch(T: float, epsilon: float) -> float:
    """Inverse of stretch: t = T / eps."""
    if not (epsilon > 0.0):
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    return T / epsilon


def build_decomposition(
    problem: GaitProblem, t_p: float, n_inner: int, n_outer: int
) -> DecompositionPlan:
    """Split the problem domain at t_p.

    The inner grid covers [0, eps * t_p] in the stretched variable with
    n_inner intervals; the outer grid covers [t_p, t_f] in physical time
    with n_outer intervals.
    """
    if not (0.0 < t_p < problem.t_f):
        raise InvalidSplit(
            f"split point {t_p!r} must lie strictly inside (0, {problem.t_f!r})"
        )
    inner = UniformGrid(0.0, stretch(t_p, problem.epsilon), n_inner)
    outer = UniformGrid(t_p, problem.t_f, n_outer)
    return DecompositionPlan(
        t_p=t_p, inner=inner, outer=outer, epsilon=problem.epsilon
    )


def default_split_point(problem: GaitProblem) -> float:
    """The problem's own split point, or 1% of the domain."""
    if problem.split_point is not None:
        return problem.split_point
    return 0.01 * problem.t_f


def default_decomposition(
    problem: GaitProblem,
    t_p: float | None = None,
    n_inner: int | None = None,
    n_outer: int | None = None,
) -> DecompositionPlan:
    """build_decomposition with the default split and mesh sizes."""
    return build_decomposition(
        problem,
        default_split_point(problem) if t_p is None else t_p,
        DEFAULT_N_INNER if n_inner is None else n_inner,
        DEFAULT_N_OUTER if n_outer is None else n_outer,
    )
