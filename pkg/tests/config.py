from pathlib import Path

import pytest

from liftcalc import (
    MissingConfigurationWarning,
    config_from_environment,
    config_from_file,
    config_to_file,
)
from tests._util import handle_warnings

names = ("q_var", "ext_var", "level_var", "precision_var", "gl2_level_var", "seed_var")


@pytest.fixture()
def conf_vars():
    import liftcalc as lc

    saved = {name: getattr(lc, name) for name in names}
    yield
    for name, value in saved.items():
        setattr(lc, name, value)


@pytest.fixture()
def clean_env(monkeypatch):
    for var in (
        "LIFTCALC_Q",
        "LIFTCALC_EXT",
        "LIFTCALC_LEVEL",
        "LIFTCALC_PRECISION",
        "LIFTCALC_GL2_LEVEL",
        "LIFTCALC_SEED",
    ):
        monkeypatch.delenv(var, raising=False)
    return monkeypatch


@pytest.fixture()
def conf_path(tmp_path):
    return tmp_path / "liftcalc.ini"


@pytest.fixture()
def write_conf(conf_path):
    test_config = """
[DEFAULT]
LIFTCALC_Q = 5
LIFTCALC_EXT = ramified
LIFTCALC_LEVEL = 2
LIFTCALC_PRECISION = 10
LIFTCALC_GL2_LEVEL = 1
LIFTCALC_SEED = 7

[ANOTHER]
Q = 3
EXT = unramified

[MISSING]
WHATEVER = something
"""
    conf_path.write_text(test_config)


full = {
    "q": "5",
    "ext": "ramified",
    "level": "2",
    "precision": "10",
    "gl2_level": "1",
    "seed": "7",
}


@pytest.mark.usefixtures("conf_vars", "write_conf")
class TestReadConfig:
    def test_environment_values_keyed_by_field(self, clean_env):
        clean_env.setenv("LIFTCALC_Q", "7")
        clean_env.setenv("LIFTCALC_EXT", "ramified")
        conf = config_from_environment()
        assert conf == {"q": "7", "ext": "ramified"}

    def test_environment_read_modified_names(self, clean_env):
        import liftcalc as lc

        lc.q_var = "residue_size"
        clean_env.setenv("residue_size", "11")
        assert config_from_environment() == {"q": "11"}

    def test_environment_missing_variables_warned(self, clean_env):
        with handle_warnings("error"):
            with pytest.raises(MissingConfigurationWarning):
                config_from_environment()

    def test_file_default_section(self, conf_path):
        assert config_from_file(str(conf_path)) == full

    def test_file_another_section(self, conf_path):
        import liftcalc as lc

        lc.q_var = "Q"
        lc.ext_var = "EXT"
        conf = config_from_file(str(conf_path), "ANOTHER")
        assert conf["q"] == "3"
        assert conf["ext"] == "unramified"

    def test_file_section_inherits_default(self, conf_path):
        conf = config_from_file(str(conf_path), "MISSING")
        assert conf == full

    def test_file_variables_are_case_sensitive(self, conf_path):
        import liftcalc as lc

        lc.q_var = "liftcalc_q"
        conf = config_from_file(str(conf_path))
        assert "q" not in conf

    def test_file_nonexistent_file_raises(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            config_from_file(str(tmp_path / "not_file.ini"))

    def test_file_nonexistent_section_raises(self, conf_path):
        with pytest.raises(KeyError):
            config_from_file(str(conf_path), "NOTSECTION")

    def test_file_pathlib_path_accepted(self, conf_path):
        assert config_from_file(conf_path) == full

    def test_missing_variables_warned(self, conf_path):
        import liftcalc as lc

        lc.seed_var = "SEED"
        with handle_warnings("error"):
            with pytest.raises(MissingConfigurationWarning):
                config_from_file(str(conf_path))


class TestConfigToFile:
    def test_pathlib_path_accepted(self, conf_path):
        config_to_file(conf_path, (3, "unramified"))
        assert conf_path.exists()

    def test_config_written_with_tuple(self, conf_path):
        config_to_file(conf_path, (5, "ramified", 2, 10, 1, 7))
        assert config_from_file(conf_path) == full

    def test_short_tuple_writes_leading_values(self, conf_path):
        config_to_file(conf_path, (5, "ramified"))
        conf = config_from_file(conf_path)
        assert conf == {"q": "5", "ext": "ramified"}

    def test_config_written_with_dict(self, conf_path):
        config_to_file(conf_path, {"LIFTCALC_SEED": 11})
        assert config_from_file(conf_path) == {"seed": "11"}

    def test_config_write_to_section(self, conf_path):
        config_to_file(conf_path, (5, "ramified", 2, 10, 1, 7), section="SEC")
        assert config_from_file(conf_path, section="SEC") == full

    def test_config_tuple_nones_not_written(self, conf_path):
        config_to_file(conf_path, (5, "ramified", 2))
        config_to_file(conf_path, (None, "unramified", None))
        conf = config_from_file(conf_path)
        assert conf == {"q": "5", "ext": "unramified", "level": "2"}

    def test_existing_configuration_preserved(self, conf_path):
        test_config = """
[DEFAULT]
SOMETHING = whatever
LIFTCALC_Q = 3

[SECTION]
WHATEVER = something
"""
        path = Path(conf_path)
        path.write_text(test_config)
        config_to_file(path, (5, "ramified"))
        text = path.read_text()
        assert all(i in text for i in ("SOMETHING", "WHATEVER", "SECTION"))
        assert config_from_file(path)["q"] == "5"
