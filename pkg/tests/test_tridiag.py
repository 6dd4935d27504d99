import numpy as np
import pytest

from gaitbvp.tridiag import (
    OpCounter,
    PivotBreakdown,
    Singular,
    TridiagonalSystem,
    dense_solve_oracle,
    dominance_report,
    residual,
    thomas_solve,
)


def random_dominant_system(rng, n):
    """Random tridiagonal system made strictly diagonally dominant."""
    lower = rng.uniform(-1.0, 1.0, n - 1)
    upper = rng.uniform(-1.0, 1.0, n - 1)
    diag = np.zeros(n)
    diag[0] = np.abs(upper[0]) if n > 1 else 0.0
    if n > 1:
        diag[1:-1] = np.abs(lower[:-1]) + np.abs(upper[1:])
        diag[-1] = np.abs(lower[-1])
    diag += rng.uniform(0.5, 2.0, n)
    diag *= rng.choice([-1.0, 1.0], n)
    rhs = rng.uniform(-10.0, 10.0, n)
    return TridiagonalSystem(lower=lower, diag=diag, upper=upper, rhs=rhs)


def test_identity_system_returns_rhs():
    sys_ = TridiagonalSystem(lower=(0, 0), diag=(1, 1, 1), upper=(0, 0),
                             rhs=(7, -3, 2))
    x = thomas_solve(sys_)
    assert np.array_equal(x, [7.0, -3.0, 2.0])


def test_hand_checked_three_by_three():
    # row 2: 1*1 + 2*1 + 1*1 = 4
    sys_ = TridiagonalSystem(lower=(1, 1), diag=(2, 2, 2), upper=(1, 1),
                             rhs=(3, 4, 3))
    x = thomas_solve(sys_)
    assert np.allclose(x, [1.0, 1.0, 1.0], atol=1e-14)
    assert np.allclose(dense_solve_oracle(sys_), x, atol=1e-14)


def test_one_by_one_is_scalar_division():
    sys_ = TridiagonalSystem(lower=(), diag=(2,), upper=(), rhs=(6,))
    assert thomas_solve(sys_)[0] == 3.0
    assert dense_solve_oracle(sys_)[0] == 3.0


def test_agrees_with_dense_oracle_on_random_dominant_systems():
    rng = np.random.default_rng(42)
    for _ in range(200):
        n = int(rng.integers(2, 201))
        sys_ = random_dominant_system(rng, n)
        x_thomas = thomas_solve(sys_)
        x_dense = dense_solve_oracle(sys_)
        assert np.max(np.abs(x_thomas - x_dense)) <= 1e-10


def test_residual_bound_on_dominant_systems():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(2, 201))
        sys_ = random_dominant_system(rng, n)
        x = thomas_solve(sys_)
        r = residual(sys_, x)
        bound = 1e-10 * (1.0 + np.max(np.abs(sys_.rhs)))
        assert np.max(np.abs(r)) <= bound


def test_linearity_in_rhs():
    rng = np.random.default_rng(3)
    base = random_dominant_system(rng, 50)
    d1 = rng.uniform(-5, 5, 50)
    d2 = rng.uniform(-5, 5, 50)
    def with_rhs(d):
        return TridiagonalSystem(lower=base.lower, diag=base.diag,
                                 upper=base.upper, rhs=d)
    x12 = thomas_solve(with_rhs(d1 + d2))
    x1 = thomas_solve(with_rhs(d1))
    x2 = thomas_solve(with_rhs(d2))
    assert np.max(np.abs(x12 - (x1 + x2))) <= 1e-9


def test_operation_count_is_linear():
    rng = np.random.default_rng(11)
    for n in (2, 17, 64, 200):
        counter = OpCounter()
        thomas_solve(random_dominant_system(rng, n), counter)
        # one forward sweep and one backward sweep, each touching n-1 rows
        assert counter.forward_rows == n - 1
        assert counter.back_rows == n - 1


def test_solve_does_not_mutate_the_system():
    rng = np.random.default_rng(5)
    sys_ = random_dominant_system(rng, 30)
    diag_before = sys_.diag.copy()
    rhs_before = sys_.rhs.copy()
    thomas_solve(sys_)
    assert np.array_equal(sys_.diag, diag_before)
    assert np.array_equal(sys_.rhs, rhs_before)


def test_zero_leading_pivot_raises_breakdown():
    sys_ = TridiagonalSystem(lower=(1,), diag=(0, 1), upper=(1,), rhs=(1, 1))
    with pytest.raises(PivotBreakdown) as excinfo:
        thomas_solve(sys_)
    assert excinfo.value.row == 0


def test_eliminated_pivot_raises_breakdown_with_row():
    # row 1 pivot becomes 2 - 1*(2/1)... choose entries so it cancels exactly
    sys_ = TridiagonalSystem(lower=(2,), diag=(1, 4), upper=(2,), rhs=(1, 1))
    with pytest.raises(PivotBreakdown) as excinfo:
        thomas_solve(sys_)
    assert excinfo.value.row == 1
    assert "row 1" in str(excinfo.value)


def test_dense_oracle_rejects_singular_matrix():
    sys_ = TridiagonalSystem(lower=(1,), diag=(1, 1), upper=(1,), rhs=(1, 1))
    with pytest.raises(Singular):
        dense_solve_oracle(sys_)


def test_system_validates_lengths_and_finiteness():
    with pytest.raises(ValueError):
        TridiagonalSystem(lower=(1, 1), diag=(1, 1), upper=(1,), rhs=(1, 1))
    with pytest.raises(ValueError):
        TridiagonalSystem(lower=(np.nan,), diag=(1, 1), upper=(0,), rhs=(1, 1))


def test_dense_materialization_matches_definition():
    sys_ = TridiagonalSystem(lower=(4, 5), diag=(1, 2, 3), upper=(6, 7),
                             rhs=(0, 0, 0))
    expected = np.array([[1.0, 6.0, 0.0],
                         [4.0, 2.0, 7.0],
                         [0.0, 5.0, 3.0]])
    assert np.array_equal(sys_.dense(), expected)


def test_dominance_report_identity():
    sys_ = TridiagonalSystem(lower=(0, 0), diag=(1, 1, 1), upper=(0, 0),
                             rhs=(0, 0, 0))
    rep = dominance_report(sys_)
    assert np.array_equal(rep.margins, [1.0, 1.0, 1.0])
    assert rep.strictly_dominant


def test_dominance_report_weak_row_fails_strictness():
    sys_ = TridiagonalSystem(lower=(1, 1), diag=(2, 2, 2), upper=(1, 1),
                             rhs=(0, 0, 0))
    rep = dominance_report(sys_)
    assert np.array_equal(rep.margins, [1.0, 0.0, 1.0])
    assert not rep.strictly_dominant
