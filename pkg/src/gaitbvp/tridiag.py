"""Tridiagonal linear systems and the Thomas algorithm.

A system of size n is stored as three diagonals plus the right-hand
side::

    | b0 c0          |   | x0 |   | d0 |
    | a0 b1 c1       |   | x1 |   | d1 |
    |    a1 b2 .     | * | .  | = | .  |
    |       .  . c_  |   | .  |   | .  |
    |         a_ b_  |   | x_ |   | d_ |

``lower`` holds the n-1 sub-diagonal entries a_i, ``diag`` the n pivots
b_i and ``upper`` the n-1 super-diagonal entries c_i.  The Thomas solve
is a single forward elimination followed by a single back substitution,
so its cost is linear in n.  No pivoting is performed; use
:func:`dense_solve_oracle` as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DominanceReport",
    "OpCounter",
    "PIVOT_TOL",
    "PivotBreakdown",
    "Singular",
    "TridiagonalSystem",
    "dense_solve_oracle",
    "dominance_report",
    "residual",
    "thomas_solve",
]

#: Pivots smaller than this in magnitude abort the elimination.
PIVOT_TOL = 1e-300


class PivotBreakdown(ArithmeticError):
    """Forward elimination hit a (near-)zero pivot."""

    def __init__(self, row: int, pivot: float, region: str | None = None):
        self.row = row
        self.pivot = pivot
        self.region = region
        where = f" in the {region} region" if region else ""
        super().__init__(
            f"elimination breakdown at row {row}{where}: pivot {pivot!r}"
        )


class Singular(ArithmeticError):
    """The dense elimination oracle found no usable pivot."""


@dataclass
class OpCounter:
    """Counts row operations performed by :func:`thomas_solve`."""

    forward_rows: int = 0
    back_rows: int = 0


@dataclass(frozen=True)
class TridiagonalSystem:
    """Immutable tridiagonal system; arrays are validated and copied."""

    lower: np.ndarray
    diag: np.ndarray
    upper: np.ndarray
    rhs: np.ndarray

    def __post_init__(self) -> None:
        for name in ("lower", "diag", "upper", "rhs"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        n = self.diag.shape[0]
        if n < 1:
            raise ValueError("system must have at least one row")
        if self.rhs.shape != (n,):
            raise ValueError(
                f"rhs has length {self.rhs.shape[0]}, expected {n}"
            )
        for name in ("lower", "upper"):
            got = getattr(self, name).shape[0]
            if got != n - 1:
                raise ValueError(f"{name} has length {got}, expected {n - 1}")
        for name in ("lower", "diag", "upper", "rhs"):
            if not np.all(np.isfinite(getattr(self, name))):
                raise ValueError(f"{name} contains non-finite entries")

    @property
    def n(self) -> int:
        return self.diag.shape[0]

    def dense(self) -> np.ndarray:
        """Materialize the full n x n matrix."""
        full = np.diag(self.diag)
        if self.n > 1:
            full += np.diag(self.lower, -1) + np.diag(self.upper, 1)
        return full


def residual(system: TridiagonalSystem, x: np.ndarray) -> np.ndarray:
    """Row-wise A x - d for a candidate solution x."""
    x = np.asarray(x, dtype=float)
    r = system.diag * x - system.rhs
    if system.n > 1:
        r[1:] += system.lower * x[:-1]
        r[:-1] += system.upper * x[1:]
    return r


def thomas_solve(
    system: TridiagonalSystem, counter: OpCounter | None = None
) -> np.ndarray:
    """Solve the system by the Thomas algorithm.

    Parameters
    ----------
    system : TridiagonalSystem
        Left intact; the sweep works on scratch copies.
    counter : OpCounter, optional
        Incremented once per eliminated row and once per back
        substitution, for cost instrumentation.

    Returns
    -------
    numpy.ndarray
        Solution vector of length n.

    Raises
    ------
    PivotBreakdown
        If any pivot magnitude falls below PIVOT_TOL.  The algorithm
        does not pivot, so breakdown is possible on systems a pivoted
        elimination would handle.
    """
    n = system.n
    lower, diag, upper, rhs = system.lower, system.diag, system.upper, system.rhs

    c_prime = np.empty(n - 1) if n > 1 else np.empty(0)
    d_prime = np.empty(n)

    pivot = diag[0]
    if abs(pivot) < PIVOT_TOL:
        raise PivotBreakdown(0, float(pivot))
    if n > 1:
        c_prime[0] = upper[0] / pivot
    d_prime[0] = rhs[0] / pivot

    for i in range(1, n):
        pivot = diag[i] - lower[i - 1] * c_prime[i - 1]
        if abs(pivot) < PIVOT_TOL:
            raise PivotBreakdown(i, float(pivot))
        if i < n - 1:
            c_prime[i] = upper[i] / pivot
        d_prime[i] = (rhs[i] - lower[i - 1] * d_prime[i - 1]) / pivot
        if counter is not None:
            counter.forward_rows += 1

    x = np.empty(n)
    x[n - 1] = d_prime[n - 1]
    for i in range(n - 2, -1, -1):
        x[i] = d_prime[i] - c_prime[i] * x[i + 1]
        if counter is not None:
            counter.back_rows += 1
    return x


def dense_solve_oracle(system: TridiagonalSystem) -> np.ndarray:
    """Solve via dense LAPACK elimination with partial pivoting.

    Deliberately independent of :func:`thomas_solve`: the matrix is
    materialized in full and handed to ``numpy.linalg.solve``.  Intended
    for verification, not production use (O(n^3)).

    Raises
    ------
    Singular
        If elimination finds no usable pivot.
    """
    try:
        return np.linalg.solve(system.dense(), system.rhs)
    except np.linalg.LinAlgError as err:
        raise Singular(str(err)) from err


@dataclass(frozen=True)
class DominanceReport:
    """Row-wise diagonal dominance margins |b_i| - (|a_i| + |c_i|)."""

    margins: np.ndarray
    strictly_dominant: bool


def dominance_report(system: TridiagonalSystem) -> DominanceReport:
    """Measure strict diagonal dominance of the assembled matrix.

    Off-diagonal entries absent in the first and last rows contribute
    zero.  Strict dominance guarantees the Thomas algorithm cannot
    break down, but is not necessary for it to succeed.
    """
    off = np.zeros(system.n)
    if system.n > 1:
        off[1:] += np.abs(system.lower)
        off[:-1] += np.abs(system.upper)
    margins = np.abs(system.diag) - off
    return DominanceReport(
        margins=margins, strictly_dominant=bool(np.all(margins > 0.0))
    )
