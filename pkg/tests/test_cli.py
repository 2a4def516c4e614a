"""CLI: golden table values, determinism, table/figure consistency,
spectrum generation, atomic output, and the verify exit-code contract."""

import json
import math
import os

import pytest

from rieszbounds import cli, spectra


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestTables:
    def test_table1_golden_row_d2(self, capsys):
        code, out, _ = run_cli(capsys, "table", "table1")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "d,k,eq_3_4_j1,cy_av,her2,ab94_avg,fk_weyl_avg"
        assert lines[1] == "2,127,142.875,190.5,163.962,339.852,43.9204"
        assert len(lines) == 7

    def test_table2_golden(self, capsys):
        _, out, _ = run_cli(capsys, "table", "table2")
        rows = {line.split(",")[0]: line for line in out.strip().splitlines()}
        assert rows["2"] == "2,5,2.53014,3.08587"
        assert rows["7"] == "7,14,2.31003,2.58414"

    def test_table3_golden(self, capsys):
        _, out, _ = run_cli(capsys, "table", "table3")
        rows = {line.split(",")[0]: line for line in out.strip().splitlines()}
        assert rows["4"] == "4,2.99694,3.67049"

    def test_json_format(self, capsys):
        _, out, _ = run_cli(capsys, "table", "table3", "--format", "json")
        payload = json.loads(out)
        assert payload["columns"][0] == "d"
        assert payload["rows"][0][1] == pytest.approx(3.25304, rel=1e-5)

    def test_full_precision_longer(self, capsys):
        _, short, _ = run_cli(capsys, "table", "table1")
        _, full, _ = run_cli(capsys, "table", "table1", "--full-precision")
        assert len(full) > len(short)
        assert "142.875" in short


class TestDeterminism:
    def test_byte_identical_runs(self, capsys):
        _, first, _ = run_cli(capsys, "table", "table1")
        _, second, _ = run_cli(capsys, "table", "table1")
        assert first == second

    def test_figure_table_consistency(self, capsys):
        # fig2 row at k = 127 must equal table1 row d = 4, column for column
        _, fig, _ = run_cli(capsys, "figure", "fig2")
        _, tab, _ = run_cli(capsys, "table", "table1")
        fig_row = next(line for line in fig.splitlines()
                       if line.startswith("127,"))
        tab_row = next(line for line in tab.splitlines()
                       if line.startswith("4,127,"))
        assert fig_row.split(",")[1:] == tab_row.split(",")[2:]


class TestFigures:
    def test_fig1_monotone_decreasing(self, capsys):
        _, out, _ = run_cli(capsys, "figure", "fig1")
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        col1 = [float(r[1]) for r in rows]
        col2 = [float(r[2]) for r in rows]
        assert col1 == sorted(col1, reverse=True)
        assert col2 == sorted(col2, reverse=True)

    def test_fig3_crossover(self, capsys):
        _, out, _ = run_cli(capsys, "figure", "fig3")
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        ab = [float(r[1]) for r in rows]
        cy = [float(r[2]) for r in rows]
        # doubling bound is below Cheng-Yang for small k, above for large k
        assert ab[0] < cy[0]
        assert ab[-1] > cy[-1]


class TestSpectrumCommand:
    def test_box_hand_enumeration(self, capsys):
        code, out, _ = run_cli(
            capsys, "spectrum", "--box", str(math.pi), str(math.pi),
            "--lambda-max", "10.5", "--format", "csv")
        assert code == 0
        ks = [line.split(",")[0] for line in out.strip().splitlines()[1:]]
        assert ks == ["1", "2", "3", "4", "5", "6"]

    def test_ball_single_eigenvalue(self, capsys):
        _, out, _ = run_cli(capsys, "spectrum", "--ball", "--dim", "3",
                            "--radius", "1", "--lambda-max", "12",
                            "--format", "csv", "--full-precision")
        rows = out.strip().splitlines()[1:]
        assert len(rows) == 1
        assert float(rows[0].split(",")[1]) == pytest.approx(math.pi ** 2,
                                                             rel=1e-10)

    def test_empty_spectrum_error(self, capsys):
        code, _, err = run_cli(capsys, "spectrum", "--box", "1", "1",
                               "--lambda-max", "0.1")
        assert code == 2
        assert "error" in err

    def test_native_format_round_trips(self, capsys, tmp_path):
        path = tmp_path / "sq.txt"
        code, _, _ = run_cli(capsys, "spectrum", "--box", "1", "1",
                             "--lambda-max", "100", "--output", str(path))
        assert code == 0
        loaded = spectra.load_spectrum(str(path))
        assert loaded.lambda_1 == pytest.approx(2 * math.pi ** 2, rel=1e-12)

    def test_output_atomic_no_leftovers(self, capsys, tmp_path):
        path = tmp_path / "out.csv"
        run_cli(capsys, "table", "table1", "--output", str(path))
        assert path.exists()
        leftovers = [f for f in os.listdir(tmp_path)
                     if f.startswith(".rieszbounds-")]
        assert leftovers == []


class TestRieszCommand:
    def test_values(self, capsys):
        _, out, _ = run_cli(
            capsys, "riesz", "--box", str(math.pi), str(math.pi),
            "--lambda-max", "200", "--sigma", "1", "--z", "9",
            "--full-precision")
        row = out.strip().splitlines()[1].split(",")
        assert float(row[2]) == pytest.approx(16.0, rel=1e-12)
        assert row[3] == "4"

    def test_legendre(self, capsys):
        _, out, _ = run_cli(
            capsys, "riesz", "--box", str(math.pi), str(math.pi),
            "--lambda-max", "200", "--legendre", "2.5")
        row = out.strip().splitlines()[1].split(",")
        assert float(row[1]) == pytest.approx(9.5, rel=1e-12)


class TestBoundsCommand:
    def test_list_census(self, capsys):
        _, out, _ = run_cli(capsys, "bounds", "--list")
        payload = json.loads(out)
        assert len(payload["bounds"]) >= 18

    def test_eval(self, capsys):
        _, out, _ = run_cli(capsys, "bounds", "--eval", "cheng_yang",
                            "--arg", "d=2", "--arg", "k=127")
        assert json.loads(out)["value"] == 381.0

    def test_eval_validity_error(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "--eval", "mean_ratio",
                               "--arg", "d=2", "--arg", "j=5", "--arg", "k=3")
        assert code == 2
        assert "error" in err

    def test_bessel_zero_export(self, capsys):
        _, out, _ = run_cli(capsys, "bounds", "--bessel-zeros", "0,1",
                            "--zero-count", "2", "--full-precision")
        lines = out.strip().splitlines()
        assert lines[0] == "nu,p,zero"
        first = float(lines[1].split(",")[2])
        assert first == pytest.approx(2.404825557695773, abs=1e-10)


@pytest.fixture(scope="module")
def spec_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("verify") / "square.txt"
    spec = spectra.box_spectrum([1.0, 1.0], 900.0)
    spectra.write_spectrum(spec, str(path))
    return str(path)


class TestVerifyCommand:
    def test_pass_exit_zero(self, capsys, spec_file):
        code, out, _ = run_cli(capsys, "verify", "--spectrum", spec_file,
                               "--z-points", "20")
        assert code == 0
        assert "ALL PASS" in out

    def test_inject_corruption_nonzero_exit(self, capsys, spec_file):
        code, out, _ = run_cli(capsys, "verify", "--spectrum", spec_file,
                               "--z-points", "15", "--inject-corruption")
        assert code == 1
        assert "FAIL" in out

    def test_z_max_config_error(self, capsys, spec_file):
        code, _, err = run_cli(capsys, "verify", "--spectrum", spec_file,
                               "--z-max", "5000")
        assert code == 2
        assert "error" in err
