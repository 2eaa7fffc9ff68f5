"""Command-line interface: formats, exit codes, determinism."""

import math

import pytest

from zrpscatter import target_to_json, preset
from zrpscatter.cli import DEFAULT_Z_VALUES, RunConfig, run

PHASES_HEADER = "k,z,eta0,eta1,cot_eta0,cot_eta1,residual0,residual1"
XSEC_HEADER = "k,sigma0,sigma1,sigma_total,oracle_sigma,abs_diff"
AMPLITUDE_HEADER = "u_in,u_out,re_oracle,im_oracle,re_exact,im_exact,re_fixed,im_fixed"


def run_ok(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    assert code == 0, captured.err
    return captured.out


def test_phases_table(capsys):
    out = run_ok(capsys, ["phases", "--target", "CH", "--k-steps", "20"])
    lines = out.splitlines()
    assert lines[0] == PHASES_HEADER
    assert len(lines) == 21
    ks = [float(line.split(",")[0]) for line in lines[1:]]
    assert ks == sorted(ks) and ks[0] == 0.01 and ks[-1] == 2.0
    for line in lines[1:]:
        fields = line.split(",")
        assert len(fields) == 8
        k, z = float(fields[0]), float(fields[1])
        assert z == pytest.approx(k * 2.116, rel=1e-15)
        assert abs(float(fields[6])) < 1e-8 and abs(float(fields[7])) < 1e-8


def test_float_fields_survive_round_trip(capsys):
    # %.17g output parses back to the exact same double.
    out = run_ok(capsys, ["phases", "--target", "CH", "--k-steps", "5"])
    for line in out.splitlines()[1:]:
        for field in line.split(","):
            value = float(field)
            assert float(f"{value:.17g}") == value


def test_xsec_table_consistency_column(capsys):
    out = run_ok(capsys, ["xsec", "--target", "C2", "--R", "2.348", "--k-steps", "12"])
    lines = out.splitlines()
    assert lines[0] == XSEC_HEADER
    assert len(lines) == 13
    for line in lines[1:]:
        fields = [float(x) for x in line.split(",")]
        k, sigma0, sigma1, total, oracle, diff = fields
        assert total == pytest.approx(sigma0 + sigma1, rel=1e-15)
        assert diff == pytest.approx(abs(total - oracle), rel=1e-12, abs=1e-300)
        assert diff < 1e-8 * total
        assert max(sigma0, sigma1) <= 4.0 * math.pi / (k * k) * (1 + 1e-12)


def test_angular_sections(capsys):
    out = run_ok(capsys, ["angular", "--theta-steps", "19"])
    lines = out.splitlines()
    markers = [line for line in lines if line.startswith("# z = ")]
    assert len(markers) == len(DEFAULT_Z_VALUES)
    assert markers[0] == "# z = 0.001"
    headers = [line for line in lines if line == "theta_deg,Z0,Z1,Y00,Y10"]
    assert len(headers) == len(DEFAULT_Z_VALUES)
    assert len(lines) == len(DEFAULT_Z_VALUES) * (2 + 19)


def test_angular_single_z_to_file(tmp_path, capsys):
    path = tmp_path / "angular.csv"
    code = run(["angular", "--z", "2.0", "--theta-steps", "7", "--out", str(path)])
    captured = capsys.readouterr()
    assert code == 0
    assert str(path) in captured.err
    lines = path.read_text().splitlines()
    assert lines[0] == "theta_deg,Z0,Z1,Y00,Y10"
    assert len(lines) == 8


def test_angular_multiple_z_file_naming(tmp_path):
    path = tmp_path / "angular.csv"
    code = run(["angular", "--z", "1.0", "--z", "4.0", "--theta-steps", "7",
                "--out", str(path)])
    assert code == 0
    assert (tmp_path / "angular_z1.csv").exists()
    assert (tmp_path / "angular_z4.csv").exists()


def test_amplitude_table_constructions_agree_for_identical_centers(capsys):
    out = run_ok(capsys, ["amplitude", "--target", "C2", "--R", "2.348",
                          "--k", "0.9", "--u-steps", "5"])
    lines = out.splitlines()
    assert lines[0] == AMPLITUDE_HEADER
    assert len(lines) == 26
    for line in lines[1:]:
        fields = [float(x) for x in line.split(",")]
        oracle = complex(fields[2], fields[3])
        exact = complex(fields[4], fields[5])
        fixed = complex(fields[6], fields[7])
        scale = max(1.0, abs(oracle))
        assert abs(exact - oracle) < 1e-9 * scale
        assert abs(fixed - oracle) < 1e-9 * scale


def test_figures_outputs(tmp_path):
    code = run(["figures", "--c2-R", "2.348", "--k-steps", "25",
                "--out-dir", str(tmp_path)])
    assert code == 0
    fig1 = (tmp_path / "figure1.csv").read_text().splitlines()
    assert fig1[0] == "k,ch_sigma0,ch_sigma1,ch_sigma_total,c2_sigma0,c2_sigma1,c2_sigma_total"
    assert len(fig1) == 26
    for name, lam in (("figure2.csv", 0), ("figure3.csv", 1)):
        lines = (tmp_path / name).read_text().splitlines()
        assert lines[0] == (
            f"theta_deg,Y{lam}0,Z{lam}_z0.001,Z{lam}_z1,Z{lam}_z2,Z{lam}_z4"
        )
        assert len(lines) == 182


def test_validate_passes_at_default_tolerance(capsys):
    out = run_ok(capsys, ["validate", "--tol", "1e-9"])
    lines = out.splitlines()
    assert lines[0] == "check,target,k,residual,tolerance,status"
    statuses = [line.split(",")[-1] for line in lines[1:]]
    assert "FAIL" not in statuses
    assert statuses.count("INFO") == 1  # fixed-basis divergence, reported only
    assert statuses.count("PASS") == len(statuses) - 1
    info_row = [line for line in lines[1:] if line.endswith("INFO")][0]
    assert info_row.startswith("fixed-divergence,CH")


def test_validate_fails_at_absurd_tolerance(capsys):
    assert run(["validate", "--tol", "1e-25"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["phases", "--target", "C2"],  # C2 needs an explicit --R
        ["phases", "--target", "XYZ"],
        ["phases", "--target", "CH", "--k-min", "-1.0"],
        ["phases", "--target", "CH", "--k-min", "2.0", "--k-max", "1.0"],
        ["xsec", "--target", "CH", "--k-steps", "0"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(argv) == 2
    assert "usage error" in capsys.readouterr().err


def test_flag_R_conflicts_with_file_target(tmp_path, capsys):
    path = tmp_path / "t.json"
    path.write_text(target_to_json(preset("CH")))
    assert run(["phases", "--target", str(path), "--R", "3.0"]) == 2
    assert run(["phases", "--target", str(path), "--k-steps", "3"]) == 0


def test_malformed_target_file_exit_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{}")
    assert run(["phases", "--target", str(path)]) == 2
    assert "usage error" in capsys.readouterr().err


def test_numerical_error_exit_3(capsys):
    # A grid consisting exactly of the carbon cotangent pole momentum.
    pole = repr(math.pi / 1.912)
    assert run(["xsec", "--target", "CH", "--k-min", pole, "--k-max", pole,
                "--k-steps", "1"]) == 3
    assert "numerical error" in capsys.readouterr().err


def test_pole_momentum_fine_for_phases(capsys):
    # The eigenphase solver itself never needs the cotangent.
    pole = repr(math.pi / 1.912)
    out = run_ok(capsys, ["phases", "--target", "CH", "--k-min", pole,
                          "--k-max", pole, "--k-steps", "1"])
    assert len(out.splitlines()) == 2


def test_thread_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("ZRP_THREADS", "abc")
    assert run(["phases", "--target", "CH", "--k-steps", "3"]) == 2
    monkeypatch.setenv("ZRP_THREADS", "0")
    assert run(["phases", "--target", "CH", "--k-steps", "3"]) == 2


def test_output_independent_of_thread_count(capsys, monkeypatch):
    argv = ["xsec", "--target", "CH", "--k-steps", "15"]
    outputs = []
    for threads in ("1", "4", "7"):
        monkeypatch.setenv("ZRP_THREADS", threads)
        outputs.append(run_ok(capsys, argv))
    assert outputs[0] == outputs[1] == outputs[2]


def test_missing_subcommand_exit_2(capsys):
    assert run([]) == 2


def test_run_config_validation():
    good = dict(subcommand="phases", target_source="CH", k_min=0.1, k_max=1.0,
                k_steps=10, nodes=64, out_path=None, tolerance=1e-9)
    grid = RunConfig(**good).k_grid
    assert len(grid) == 10 and grid[0] == 0.1 and grid[-1] == 1.0
    for bad in (
        dict(good, k_min=0.0),
        dict(good, k_min=2.0),
        dict(good, k_steps=0),
        dict(good, nodes=1),
        dict(good, tolerance=0.0),
    ):
        with pytest.raises(ValueError):
            RunConfig(**bad)
