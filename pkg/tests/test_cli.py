import json

import pytest

from yvpoly import cli


def run(argv):
    return cli.main(argv)


class TestConfig:
    def test_defaults(self):
        cfg = cli.RunConfig()
        assert cfg.n_max == 12
        assert cfg.precision_bits == 256
        assert float(cfg.tolerance) == pytest.approx(1e-30)

    def test_validation(self):
        with pytest.raises(ValueError):
            cli.RunConfig(n_max=-1)
        with pytest.raises(ValueError):
            cli.RunConfig(precision_bits=16)
        with pytest.raises(ValueError):
            cli.RunConfig(mode="fuzzy")


class TestParser:
    def test_verify_flags(self):
        args = cli.build_parser().parse_args(
            ["verify", "--n-max", "6", "--mode", "exact",
             "--suites", "structure,wronskian"])
        assert args.n_max == 6 and args.suites == "structure,wronskian"

    def test_missing_command(self):
        with pytest.raises(SystemExit):
            cli.build_parser().parse_args([])


class TestGen:
    def test_writes_records(self, tmp_path, capsys):
        assert run(["gen", "--n-max", "5", "--out", str(tmp_path)]) == 0
        files = sorted(tmp_path.glob("yv_*.json"))
        assert len(files) == 6
        blob = json.loads((tmp_path / "yv_3.json").read_text())
        assert blob["n"] == 3
        out = capsys.readouterr().out
        assert "degree" in out


class TestVerify:
    def test_exact_suites_pass(self, tmp_path, capsys):
        code = run(["verify", "--n-max", "6", "--mode", "exact",
                    "--suites", "structure,divisibility,valuation,wronskian,"
                    "pii,backlund,sums,series",
                    "--out", str(tmp_path)])
        assert code == 0
        payload = json.loads(
            (tmp_path / "verification_report.json").read_text())
        assert payload["overall"] == "pass"
        assert all(r["status"] != "fail" for r in payload["reports"])

    def test_numeric_suite(self, tmp_path):
        code = run(["verify", "--n-max", "3", "--mode", "numeric",
                    "--precision-bits", "192",
                    "--suites", "relations,poleseries", "--out", str(tmp_path)])
        assert code == 0

    def test_csv_format(self, tmp_path):
        code = run(["verify", "--n-max", "4", "--mode", "exact",
                    "--suites", "structure", "--format", "csv",
                    "--out", str(tmp_path)])
        assert code == 0
        header = (tmp_path / "verification_report.csv").read_text() \
            .splitlines()[0]
        assert header == "suite,n,status,witnesses"

    def test_unknown_suite_rejected(self, tmp_path, capsys):
        code = run(["verify", "--suites", "nonsense", "--out", str(tmp_path)])
        assert code != 0


class TestRoots:
    def test_exports(self, tmp_path, capsys):
        code = run(["roots", "--n-max", "4", "--precision-bits", "128",
                    "--out", str(tmp_path)])
        assert code == 0
        for n in range(1, 5):
            assert (tmp_path / f"roots_{n}.csv").exists()
            assert (tmp_path / f"roots_{n}.svg").exists()
        assert "certified" in capsys.readouterr().out


class TestSums:
    def test_export(self, tmp_path, capsys):
        code = run(["sums", "--n-max", "6", "--m-list", "3,6,9",
                    "--out", str(tmp_path)])
        assert code == 0
        rows = json.loads((tmp_path / "sums.json").read_text())
        assert len(rows) == 7 * 3


class TestEnvFallback:
    def test_yv_out_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv("YV_OUT_DIR", str(tmp_path))
        assert run(["gen", "--n-max", "2"]) == 0
        assert (tmp_path / "yv_2.json").exists()
