"""Tabulated reference solutions for the bundled example problems.

Each table lists the displacement at selected times for four values of
the perturbation parameter, in the (non-monotone) column order the
reference tables use.  The interior values track the reduced solution
f/v of the table-consistent problem variants to within about 2%; the
tables' exact computational setup (grids, interface handling) is not
recoverable, so comparisons against these values use loose tolerances.
"""

from __future__ import annotations

from .model import PresetId

__all__ = ["CANONICAL_EPSILONS", "REFERENCE_ROWS", "rows_for"]

#: Column order used by the reference tables.
CANONICAL_EPSILONS = (0.0009, 0.009, 0.001, 0.01)

#: time -> displacement per epsilon column, preset by preset.
REFERENCE_ROWS: dict[PresetId, tuple[tuple[float, tuple[float, ...]], ...]] = {
    PresetId.EXAMPLE_1: (
        (0.0000, (4.0000, 4.0000, 4.0000, 4.0000)),
        (0.0200, (4.7329, 4.8068, 4.7185, 4.7185)),
        (0.0392, (4.7104, 4.7164, 4.7079, 4.7079)),
        (0.0584, (4.6264, 4.6268, 4.6261, 4.6261)),
        (0.0776, (4.5389, 4.5388, 4.5389, 4.5389)),
        (0.0968, (4.4526, 4.4525, 4.4526, 4.4526)),
        (0.3432, (3.4801, 3.4802, 3.4801, 3.4802)),
        (0.3530, (3.4461, 3.4462, 3.4461, 3.4463)),
        (0.3628, (3.4125, 3.4126, 3.4125, 3.4126)),
        (0.3726, (3.3793, 3.3793, 3.3793, 3.3794)),
        (0.9704, (1.8587, 1.8590, 1.8587, 1.8592)),
        (0.9802, (1.8405, 1.8433, 1.8405, 1.8443)),
        (0.9900, (1.8229, 1.8455, 1.8229, 1.8496)),
        (1.0000, (2.0000, 2.0000, 2.0000, 2.0000)),
    ),
    PresetId.EXAMPLE_2: (
        (0.0000, (1.0000, 1.0000, 1.0000, 1.0000)),
        (0.0100, (0.9806, 0.9492, 0.9805, 0.9432)),
        (0.0198, (0.4956, 0.5065, 0.4956, 0.5086)),
        (0.0296, (0.3314, 0.3338, 0.3314, 0.3344)),
        (0.0394, (0.2490, 0.2497, 0.2490, 0.2499)),
        (0.0492, (0.1994, 0.1997, 0.1994, 0.1997)),
        (0.0590, (0.1663, 0.1664, 0.1663, 0.1664)),
        (0.0688, (0.1426, 0.1427, 0.1426, 0.1427)),
        (0.2844, (0.0345, 0.0345, 0.0345, 0.0345)),
        (0.2942, (0.0333, 0.0333, 0.0333, 0.0333)),
        (0.3040, (0.0323, 0.0323, 0.0323, 0.0323)),
        (0.3138, (0.0313, 0.0313, 0.0313, 0.0313)),
        (0.9606, (0.0102, 0.0102, 0.0102, 0.0102)),
        (0.9704, (0.0101, 0.0101, 0.0101, 0.0101)),
        (0.9802, (0.0100, 0.0100, 0.0100, 0.0100)),
        (0.9900, (0.0099, 0.0099, 0.0099, 0.0099)),
        (1.0000, (0.0100, 0.0100, 0.0100, 0.0100)),
    ),
    PresetId.EXAMPLE_3: (
        (0.0000, (9.6000, 9.6000, 9.6000, 9.6000)),
        (0.0100, (9.6421, 6.6457, 9.6259, 6.3281)),
        (0.0198, (9.6171, 8.5673, 9.6168, 8.3379)),
        (0.0296, (9.5239, 9.1661, 9.5239, 9.0424)),
        (0.0394, (9.4310, 9.3100, 9.4310, 9.2510)),
        (0.0492, (9.3390, 9.2986, 9.3390, 9.2724)),
        (0.0590, (9.2480, 9.2348, 9.2480, 9.2237)),
        (0.0688, (9.1578, 9.1538, 9.1578, 9.1493)),
        (0.6078, (5.3420, 5.3422, 5.3420, 5.3423)),
        (0.6176, (5.2899, 5.2901, 5.2899, 5.2902)),
        (0.6274, (5.2383, 5.2385, 5.2383, 5.2386)),
        (0.6372, (5.1872, 5.1875, 5.1872, 5.1875)),
        (0.9312, (3.8659, 3.8660, 3.8659, 3.8661)),
        (0.9410, (3.8282, 3.8283, 3.8282, 3.8283)),
        (0.9508, (3.7909, 3.7908, 3.7909, 3.7907)),
        (0.9606, (3.7539, 3.7531, 3.7539, 3.7525)),
        (0.9704, (3.7173, 3.7128, 3.7173, 3.7105)),
        (0.9802, (3.6811, 3.6578, 3.6811, 3.6504)),
        (0.9900, (3.6433, 3.5263, 3.6429, 3.5088)),
        (1.0000, (3.0000, 3.0000, 3.0000, 3.0000)),
    ),
}


def rows_for(preset_id: PresetId, epsilon: float) -> list[tuple[float, float]]:
    """Extract one epsilon column as (time, value) pairs."""
    try:
        col = CANONICAL_EPSILONS.index(epsilon)
    except ValueError:
        raise ValueError(
            f"no reference column for epsilon {epsilon!r}; "
            f"tabulated values exist for {CANONICAL_EPSILONS}"
        )
    return [(t, vals[col]) for t, vals in REFERENCE_ROWS[PresetId(preset_id)]]
