"""
Watching the boundary layer form
================================

As epsilon shrinks, the solution of

    eps^2 Z'' - exp(T) Z = -10,   Z(0) = 9.6,  Z(1) = 3

develops a thin layer near T = 0 where it climbs from the imposed 9.6
to the reduced solution 10 exp(-T).  A uniform grid in T would need
ever more points to see this; the stretched coordinate eps * t keeps
the layer resolved with ten intervals no matter how small eps gets.
"""

import numpy as np

from gaitbvp import (
    PresetId,
    build_decomposition,
    preset,
    reduced_solution,
    solve,
    stretch,
)

# --- the layer in physical time -------------------------------------

for eps in (0.1, 0.01, 0.001):
    prob = preset(PresetId.EXAMPLE_3, epsilon=eps)
    plan = build_decomposition(prob, t_p=0.01, n_inner=10, n_outer=101)
    profile = solve(prob, plan)

    inner = profile.region == "inner"
    print(f"eps = {eps}: inner region lives on T in "
          f"[0, {stretch(plan.t_p, eps):g}], i.e. t in [0, {plan.t_p}]")
    for t, z in zip(profile.t[inner], profile.z[inner]):
        bar = "#" * int((z - 3.0) / 7.0 * 40)
        print(f"  t={t:8.5f}  z={z:7.4f}  {bar}")
    t_p, z_p, _ = profile.nearest_sample(plan.t_p)
    print(f"  t={t_p:8.5f}  z={z_p:7.4f}  <- interface (reduced solution "
          f"{reduced_solution(prob, plan.t_p):.4f})")
    print()

# --- away from the layer, epsilon barely matters --------------------

print("solution at t = 0.5 as epsilon shrinks:")
for eps in (0.1, 0.01, 0.001, 0.0001):
    prob = preset(PresetId.EXAMPLE_3, epsilon=eps)
    plan = build_decomposition(prob, t_p=0.01, n_inner=10, n_outer=101)
    _, z, _ = solve(prob, plan).nearest_sample(0.5)
    print(f"  eps={eps!r:8}: z = {z:.6f}   (reduced: "
          f"{reduced_solution(prob, 0.5):.6f})")
