"""
Reproducing the bundled example tables
======================================

Solves the three bundled boundary-value problems at the four reference
perturbation values and prints them in the familiar table layout, then
compares a few interior rows against the stored reference values.
"""

import numpy as np

from gaitbvp import (
    CANONICAL_EPSILONS,
    PresetId,
    default_decomposition,
    preset,
    rows_for,
    solve,
    table_compare,
)

for pid in PresetId:
    print(f"=== preset {int(pid)}: solution z(t) for the four epsilon values")
    profiles = []
    for eps in CANONICAL_EPSILONS:
        prob = preset(pid, epsilon=eps)
        profiles.append(solve(prob, default_decomposition(prob)))

    header = f"{'t':>8}" + "".join(f"{eps!r:>12}" for eps in CANONICAL_EPSILONS)
    print(header)
    # print every eighth node so the table fits on a screen
    times = profiles[0].t
    for i in range(0, len(times), 8):
        row = f"{times[i]:8.4f}" + "".join(f"{p.z[i]:12.4f}" for p in profiles)
        print(row)
    print()

    # how close is this to the stored reference data?
    print("worst relative deviation from the stored reference rows:")
    for eps in CANONICAL_EPSILONS:
        prob = preset(pid, epsilon=eps)
        profile = solve(prob, default_decomposition(prob))
        comparisons = table_compare(profile, rows_for(pid, eps))
        interior = [c for c in comparisons if 0.05 < c.time < 0.95]
        worst = max(interior, key=lambda c: c.deviation)
        print(f"  eps={eps!r}: {worst.deviation:.3%} at t={worst.time:.4f} "
              f"(computed {worst.computed:.4f}, reference {worst.reference:.4f})")
    print()
