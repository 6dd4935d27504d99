"""Named manufactured-solution families for verification runs.

Each family fixes an exact solution with hand-written derivatives and
smooth constant coefficients; :meth:`ManufacturedCase.problem` builds
the matching problem for any eps via :func:`gaitbvp.model.manufacture`.
The cubic family carries damping on purpose: with zero damping the
central stencil is exact for cubics and there is no discretization
error left to measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import CoefficientFn, GaitProblem, constant, manufacture

__all__ = ["FAMILIES", "ManufacturedCase", "family"]

_PI = math.pi


@dataclass(frozen=True)
class ManufacturedCase:
    name: str
    exact: CoefficientFn
    exact_d1: CoefficientFn
    exact_d2: CoefficientFn
    damping: CoefficientFn
    stiffness: CoefficientFn
    t_f: float = 1.0

    def problem(self, epsilon: float) -> GaitProblem:
        return manufacture(
            self.exact,
            self.exact_d1,
            self.exact_d2,
            epsilon=epsilon,
            damping=self.damping,
            stiffness=self.stiffness,
            t_f=self.t_f,
        )


FAMILIES: dict[str, ManufacturedCase] = {
    "sin": ManufacturedCase(
        name="sin",
        exact=lambda t: math.sin(_PI * t),
        exact_d1=lambda t: _PI * math.cos(_PI * t),
        exact_d2=lambda t: -_PI * _PI * math.sin(_PI * t),
        damping=constant(0.0),
        stiffness=constant(2.0),
    ),
    "poly3": ManufacturedCase(
        name="poly3",
        exact=lambda t: t * t * t + t + 1.0,
        exact_d1=lambda t: 3.0 * t * t + 1.0,
        exact_d2=lambda t: 6.0 * t,
        damping=constant(1.0),
        stiffness=constant(2.0),
    ),
    "exp-decay": ManufacturedCase(
        name="exp-decay",
        exact=lambda t: math.exp(-2.0 * t),
        exact_d1=lambda t: -2.0 * math.exp(-2.0 * t),
        exact_d2=lambda t: 4.0 * math.exp(-2.0 * t),
        damping=constant(1.0),
        stiffness=constant(3.0),
    ),
}


def family(name: str) -> ManufacturedCase:
    """Look up a family by name; raises ValueError for unknown names."""
    try:
        return FAMILIES[name]
    except KeyError:
        known = ", ".join(sorted(FAMILIES))
        raise ValueError(f"unknown manufactured family {name!r} (have: {known})")
