import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from gaitbvp.cli import main, parse_solution_csv
from gaitbvp.mesh import default_decomposition
from gaitbvp.model import PresetId, preset
from gaitbvp.solver import solve

DATA_DIR = Path(__file__).parent / "data"


def run_cli(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse errors exit instead of returning
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_csv_boundary_rows(capsys):
    code, out, _ = run_cli(
        ["solve", "--preset", "3", "--epsilon", "0.01"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "t,z,region,epsilon"
    rows = parse_solution_csv(out)
    assert rows[0] == (0.0, 9.6, "inner", 0.01)
    assert rows[-1] == (1.0, 3.0, "outer", 0.01)


def test_solve_csv_round_trips_the_profile_exactly(capsys):
    code, out, _ = run_cli(
        ["solve", "--preset", "2", "--epsilon", "0.009"], capsys)
    assert code == 0
    prob = preset(PresetId.EXAMPLE_2, epsilon=0.009)
    profile = solve(prob, default_decomposition(prob))
    rows = parse_solution_csv(out)
    assert len(rows) == len(profile.t)
    for (t, z, region, eps), t_ref, z_ref, r_ref in zip(
            rows, profile.t, profile.z, profile.region):
        assert t == t_ref  # 17 significant digits survive the round trip
        assert z == z_ref
        assert region == r_ref
        assert eps == 0.009


def test_solve_multiple_epsilons_emits_labeled_blocks(capsys):
    code, out, _ = run_cli(
        ["solve", "--preset", "1", "--epsilon", "0.001",
         "--epsilon", "0.01"], capsys)
    assert code == 0
    assert out.count("# epsilon=0.001\n") == 1
    assert out.count("# epsilon=0.01\n") == 1
    eps_seen = {row[3] for row in parse_solution_csv(out)}
    assert eps_seen == {0.001, 0.01}


def test_table_matches_golden_rendering(capsys):
    code, out, _ = run_cli(
        ["table", "--preset", "1",
         "--epsilon", "0.0009", "--epsilon", "0.009",
         "--epsilon", "0.001", "--epsilon", "0.01"], capsys)
    assert code == 0
    golden = (DATA_DIR / "table_preset1_canonical.txt").read_text()
    assert out == golden


def test_table_column_order_is_canonical_for_the_four_reference_epsilons(capsys):
    # requested out of order; the rendering still uses the documented order
    code, out, _ = run_cli(
        ["table", "--preset", "1",
         "--epsilon", "0.01", "--epsilon", "0.0009",
         "--epsilon", "0.001", "--epsilon", "0.009"], capsys)
    assert code == 0
    header = out.splitlines()[0].split()
    assert header == ["Time", "0.0009", "0.009", "0.001", "0.01"]


def test_table_first_row_is_the_left_boundary(capsys):
    _, out, _ = run_cli(
        ["table", "--preset", "1",
         "--epsilon", "0.0009", "--epsilon", "0.009",
         "--epsilon", "0.001", "--epsilon", "0.01"], capsys)
    first = out.splitlines()[1].split()
    assert first == ["0.0000", "4.0000", "4.0000", "4.0000", "4.0000"]


def test_output_is_deterministic(capsys):
    args = ["solve", "--preset", "2", "--epsilon", "0.0009",
            "--format", "gnuplot"]
    _, first, _ = run_cli(args, capsys)
    _, second, _ = run_cli(args, capsys)
    assert first == second


def test_gnuplot_blocks_are_separated_for_index_addressing(capsys):
    code, out, _ = run_cli(
        ["solve", "--preset", "3", "--epsilon", "0.001",
         "--epsilon", "0.01", "--format", "gnuplot"], capsys)
    assert code == 0
    blocks = out.split("\n\n\n")
    assert len(blocks) == 2
    assert blocks[0].startswith("# epsilon=0.001\n")
    assert blocks[1].startswith("# epsilon=0.01\n")
    sample = blocks[0].splitlines()[1].split(" ")
    assert len(sample) == 2
    assert float(sample[0]) == 0.0
    assert float(sample[1]) == 9.6


def test_converge_reports_second_order(capsys):
    code, out, _ = run_cli(
        ["converge", "--manufactured", "sin", "--epsilon", "0.5",
         "--mode", "monolithic"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# epsilon=0.5 mode=monolithic")
    assert lines[1] == "k,max_error,observed_order"
    final_order = float(lines[-1].split(",")[2])
    assert 1.9 <= final_order <= 2.1


def test_converge_on_a_preset_uses_self_reference(capsys):
    code, out, _ = run_cli(
        ["converge", "--preset", "3", "--epsilon", "0.01",
         "--base-n", "50", "--levels", "3"], capsys)
    assert code == 0
    assert "self-reference" in out.splitlines()[0]
    errors = [float(line.split(",")[1]) for line in out.strip().splitlines()[2:]]
    assert errors == sorted(errors, reverse=True)


def test_presets_listing_documents_the_catalog(capsys):
    code, out, _ = run_cli(["presets"], capsys)
    assert code == 0
    for needle in ("Z(0) = 4", "Z(0) = 1", "Z(0) = 9.6",
                   "as-written", "table-consistent",
                   "split point: 0.02", "split point: 0.01"):
        assert needle in out


def test_out_flag_writes_the_artifact(tmp_path, capsys):
    target = tmp_path / "profile.csv"
    code, out, _ = run_cli(
        ["solve", "--preset", "1", "--epsilon", "0.001",
         "--out", str(target)], capsys)
    assert code == 0
    assert out == ""
    text = target.read_text(encoding="utf-8")
    assert text.startswith("t,z,region,epsilon\n")
    assert parse_solution_csv(text)[0] == (0.0, 4.0, "inner", 0.001)


def test_rejects_nonpositive_epsilon(capsys):
    code, _, err = run_cli(
        ["solve", "--preset", "1", "--epsilon", "-1"], capsys)
    assert code == 2
    assert "positive" in err


def test_rejects_split_outside_domain(capsys):
    code, _, err = run_cli(
        ["solve", "--preset", "1", "--epsilon", "0.001", "--tp", "2.0"],
        capsys)
    assert code == 2
    assert "invalid arguments" in err


def test_converge_requires_exactly_one_problem_source(capsys):
    code, _, err = run_cli(["converge", "--epsilon", "0.5"], capsys)
    assert code == 2
    code, _, err = run_cli(
        ["converge", "--preset", "1", "--manufactured", "sin",
         "--epsilon", "0.5"], capsys)
    assert code == 2


def test_solver_breakdown_maps_to_exit_code_three(capsys):
    # a split point this small lands where Example 2's stiffness vanishes
    code, _, err = run_cli(
        ["solve", "--preset", "2", "--epsilon", "0.001", "--tp", "1e-18"],
        capsys)
    assert code == 3
    assert "breakdown" in err


def test_unwritable_output_maps_to_exit_code_four(tmp_path, capsys):
    code, _, err = run_cli(
        ["solve", "--preset", "1", "--epsilon", "0.001",
         "--out", str(tmp_path / "missing" / "x.csv")], capsys)
    assert code == 4
    assert "cannot write" in err


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "gaitbvp", "presets"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "available presets" in proc.stdout
