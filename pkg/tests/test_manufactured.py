import numpy as np
import pytest
import sympy

from gaitbvp.manufactured import FAMILIES, family


def test_known_families_are_exposed():
    assert set(FAMILIES) == {"sin", "poly3", "exp-decay"}


def test_unknown_family_is_rejected_with_the_catalog():
    with pytest.raises(ValueError) as excinfo:
        family("cosh")
    msg = str(excinfo.value)
    assert "cosh" in msg and "sin" in msg


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_family_derivatives_match_symbolic_differentiation(name):
    case = family(name)
    t = sympy.symbols("t")
    if name == "sin":
        exact_sym = sympy.sin(sympy.pi * t)
    elif name == "poly3":
        exact_sym = t ** 3 + t + 1
    else:
        exact_sym = sympy.exp(-2 * t)
    d1 = sympy.lambdify(t, sympy.diff(exact_sym, t))
    d2 = sympy.lambdify(t, sympy.diff(exact_sym, t, 2))
    for x in np.linspace(0.0, 1.0, 7):
        assert case.exact_d1(x) == pytest.approx(float(d1(x)), rel=1e-12)
        assert case.exact_d2(x) == pytest.approx(float(d2(x)), rel=1e-12)


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_family_problem_is_consistent_with_its_solution(name):
    case = family(name)
    prob = case.problem(0.5)
    assert prob.epsilon == 0.5
    assert prob.f1 == pytest.approx(case.exact(0.0))
    assert prob.f2 == pytest.approx(case.exact(case.t_f))
    # forcing must equal the differential operator applied to the exact
    # solution
    for x in (0.1, 0.4, 0.9):
        lhs = (case.exact_d2(x)
               + prob.epsilon * case.damping(x) * case.exact_d1(x)
               + case.stiffness(x) * case.exact(x))
        assert prob.forcing(x) == pytest.approx(lhs, rel=1e-12)


def test_poly3_carries_damping_so_the_scheme_is_inexact():
    # central differences are exact on cubics; the damping term is what
    # makes this family produce a measurable discretization error
    case = family("poly3")
    assert case.damping(0.5) != 0.0
