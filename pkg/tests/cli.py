import csv
import json
from io import StringIO

import pytest

from liftcalc import Extension, ParameterError, RunConfig, main
from liftcalc._cli import defaults
from liftcalc.model import Command, Identity, OutputFormat

env_vars = (
    "LIFTCALC_Q",
    "LIFTCALC_EXT",
    "LIFTCALC_LEVEL",
    "LIFTCALC_PRECISION",
    "LIFTCALC_GL2_LEVEL",
    "LIFTCALC_SEED",
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for var in env_vars:
        monkeypatch.delenv(var, raising=False)
    return monkeypatch


def run(command: str):
    stdout, stderr = StringIO(), StringIO()
    code = main(command.split(), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class TestCompute:
    def test_ramified_shallow(self):
        code, out, _ = run(
            "compute --q 3 --ext ramified --level 1 --gamma a=0:0+1*j;b=0:0"
        )
        assert code == 0
        report = json.loads(out)
        assert report["schema"] == "liftcalc/1"
        assert report["mu"] == "a=0:0;b=1:1"
        assert report["index"] == "3/1"
        assert report["v_x"] == "1/1"
        assert report["v_y"] == "Infinite"
        assert report["v_z"] == "3/1"
        assert report["v_abar"] == "Infinite"
        assert report["classification"] == "shallow"
        assert report["distance"] == "1/1"
        assert report["phi_gamma_dprime"] == "4/3"

    def test_unramified_abar_is_null(self):
        code, out, _ = run("compute --ext unramified --level 0 --gamma a=0:0+1*j;b=0:1")
        assert code == 0
        report = json.loads(out)
        assert report["v_y"] == "1/1"
        assert report["v_abar"] is None

    def test_order_unit_is_infinite(self):
        code, out, _ = run("compute --level 1 --gamma a=0:1;b=0:0")
        assert code == 0
        assert json.loads(out)["v_x"] == "Infinite"

    def test_csv_has_header_and_one_row(self):
        code, out, _ = run("compute --gamma a=0:1;b=0:0 --format csv")
        lines = list(csv.reader(StringIO(out)))
        assert code == 0
        assert len(lines) == 2
        assert lines[0][0] == "schema"

    def test_written_to_file(self, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run(f"compute --gamma a=0:1 --out {path}")
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text())["gamma"] == "a=0:1"

    @pytest.mark.parametrize(
        "command",
        [
            "compute --gamma a=0:1 --gamma a=0:2",
            "compute",
            "compute --gamma a=1:1",
            "compute --gamma a=0:x",
            "compute --q 4 --gamma a=0:1",
            "compute --level -1 --gamma a=0:1",
        ],
    )
    def test_invalid_input_fails(self, command):
        code, out, err = run(command)
        assert code == 1
        assert out == ""
        assert err.startswith("liftcalc: error:")

    def test_unknown_extension_rejected_by_parser(self):
        with pytest.raises(SystemExit):
            run("compute --ext split --gamma a=0:1")


class TestVerify:
    def test_identity_passes(self):
        code, out, _ = run("verify --identity volume-telescoping --samples 2")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert [row["name"] for row in rows] == ["volume-telescoping"]
        assert rows[0]["failures"] == 0

    def test_unresolved_identity_exits_2(self):
        code, out, err = run("verify --level 2 --identity gl2-vy --samples 2")
        assert code == 2
        row = json.loads(out)["rows"][0]
        assert (row["samples"], row["failures"]) == (0, 0)
        assert row["skipped"] > 0
        assert "gl2-vy" in err

    def test_not_applicable_identity_passes(self):
        code, out, _ = run("verify --level 0 --identity phi-bound --samples 2")
        assert code == 0
        row = json.loads(out)["rows"][0]
        assert (row["samples"], row["skipped"]) == (0, 0)

    def test_oracle_budget_exceeded(self):
        code, _, err = run("verify --identity gl2-pairing --gl2-level 5")
        assert code == 3
        assert "liftcalc: error:" in err

    def test_csv_rows(self):
        code, out, _ = run(
            "verify --identity matrix-inverse --identity phi-constants"
            " --samples 1 --format csv"
        )
        lines = list(csv.reader(StringIO(out)))
        assert code == 0
        assert lines[0] == ["name", "samples", "failures", "skipped", "max_discrepancy"]
        assert [line[0] for line in lines[1:]] == ["matrix-inverse", "phi-constants"]


class TestTable:
    def test_rows_by_level(self):
        code, out, _ = run("table --gamma a=0:1;b=0:1 --levels 0..2 --format csv")
        assert code == 0
        lines = list(csv.reader(StringIO(out)))
        assert lines[0] == ["gamma", "level", "v_x", "classification", "distance"]
        assert [line[1] for line in lines[1:]] == ["0", "1", "2"]
        assert lines[3][2] == "2/1"

    def test_rows_by_gamma_then_level(self):
        code, out, _ = run("table --gamma a=0:1;b=0:1 --gamma a=0:1 --levels 1..2")
        assert code == 0
        rows = json.loads(out)["rows"]
        keys = [(row["gamma"], row["level"]) for row in rows]
        assert keys == [
            ("a=0:1;b=0:1", 1),
            ("a=0:1;b=0:1", 2),
            ("a=0:1", 1),
            ("a=0:1", 2),
        ]

    def test_decreasing_levels_fail(self):
        code, _, _ = run("table --gamma a=0:1 --levels 2..1")
        assert code == 1


@pytest.fixture()
def ini_file(tmp_path):
    path = tmp_path / "liftcalc.ini"
    path.write_text(
        "[DEFAULT]\nLIFTCALC_Q = 5\nLIFTCALC_LEVEL = 2\n\n"
        "[RAMIFIED]\nLIFTCALC_EXT = ramified\n"
    )
    return str(path)


class TestRunConfig:
    def test_defaults(self):
        config = RunConfig.from_sources({"command": "compute"}, defaults)
        assert config.command is Command.compute
        assert (config.q, config.ext, config.level) == (3, Extension.unramified, 0)
        assert config.format is OutputFormat.json
        assert config.identity == [Identity.all]

    def test_environment_over_defaults(self, clean_env):
        clean_env.setenv("LIFTCALC_Q", "5")
        config = RunConfig.from_sources({}, defaults)
        assert config.q == 5

    def test_environment_ignored_on_request(self, clean_env):
        clean_env.setenv("LIFTCALC_Q", "5")
        config = RunConfig.from_sources({}, defaults, environment=False)
        assert config.q == 3

    def test_file_over_environment(self, clean_env, ini_file):
        clean_env.setenv("LIFTCALC_Q", "7")
        clean_env.setenv("LIFTCALC_SEED", "9")
        config = RunConfig.from_sources({"config": ini_file}, defaults)
        assert (config.q, config.level, config.seed) == (5, 2, 9)

    def test_file_section(self, ini_file):
        args = {"config": ini_file, "section": "RAMIFIED"}
        config = RunConfig.from_sources(args, defaults)
        assert config.ext is Extension.ramified
        assert config.q == 5

    def test_flags_over_file(self, ini_file):
        args = {"config": ini_file, "q": 11, "level": None}
        config = RunConfig.from_sources(args, defaults)
        assert (config.q, config.level) == (11, 2)

    def test_missing_file_section_raises(self, ini_file):
        args = {"config": ini_file, "section": "MISSING"}
        with pytest.raises(ParameterError):
            RunConfig.from_sources(args, defaults)

    def test_level_range_parsed(self):
        config = RunConfig.from_sources({"levels": "1..3"}, defaults)
        assert config.levels == (1, 3)

    @pytest.mark.parametrize(
        "args",
        [{"q": 9}, {"samples": -1}, {"ext": "split"}, {"precision": 0}],
    )
    def test_invalid_raises(self, args):
        with pytest.raises(ParameterError):
            RunConfig.from_sources(args, defaults)

    def test_order(self):
        config = RunConfig.from_sources({"ext": "ramified", "level": 1}, defaults)
        assert config.order.index == 3
