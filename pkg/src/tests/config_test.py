import os

import pytest

from src.main.app.cli import main
from src.main.app.common.config.config import Config
from src.main.app.common.config.config_loader import ConfigLoader
from src.main.app.common.config.config_manager import load_config
from src.main.app.common.exception.exception import ServiceException
from src.main.app.common.util.work_path_util import resource_path
from src.main.app.factory.service_factory import get_simulator_service, get_step_matrix_service, reset_services


@pytest.fixture
def clean_environment(monkeypatch):
    monkeypatch.delenv("ENV", raising=False)
    monkeypatch.delenv("CONFIG_FILE", raising=False)
    load_config.cache_clear()
    yield monkeypatch
    load_config.cache_clear()
    reset_services()


def test_dev_overlay_is_merged():
    config = Config(ConfigLoader("dev").load_config())
    assert config.log.level == "DEBUG"
    assert config.numerics.tolerance == 1e-10
    assert config.cli.eps_sweep == [1.0, 0.1, 0.01, 0.001, 0.0001]


def test_prod_overlay_disables_norm_checks():
    config = Config(ConfigLoader("prod").load_config())
    assert config.simulator.check_norm is False
    assert config.log.level == "INFO"
    assert config.simulator.norm_tolerance == 1e-9


def test_unknown_environment_keeps_base_values():
    config = Config(ConfigLoader("staging").load_config())
    assert config.log.level == "INFO"
    assert config.simulator.check_norm is True


def test_custom_file_skips_environment_overlay(tmp_path):
    custom = tmp_path / "config.yml"
    custom.write_text("numerics:\n  tolerance: 1.0e-6\n", encoding="utf-8")
    (tmp_path / "config-dev.yml").write_text("numerics:\n  tolerance: 1.0\n", encoding="utf-8")
    config = Config(ConfigLoader("dev", str(custom)).load_config())
    assert config.numerics.tolerance == 1e-6
    assert config.numerics.strict_tolerance == 1e-12


def test_absent_sections_use_defaults():
    config = Config({})
    assert config.cli.seed == 2024
    assert config.cli.random_vectors == 100
    assert config.cli.amplitude_digits == 17
    assert config.log.log_file_path == ""
    assert config.simulator.check_norm is True


def test_merge_is_recursive():
    loader = ConfigLoader("dev")
    merged = loader.merge_dicts({"a": {"b": 1, "c": 2}, "d": 3}, {"a": {"c": 5}})
    assert merged == {"a": {"b": 1, "c": 5}, "d": 3}
    assert loader.merge_dicts({"a": 1}, None) == {"a": 1}


def test_load_config_reads_environment_variables(clean_environment, tmp_path):
    custom = tmp_path / "qft.yml"
    custom.write_text("cli:\n  seed: 99\n", encoding="utf-8")
    clean_environment.setenv("CONFIG_FILE", str(custom))
    assert load_config().cli.seed == 99
    assert load_config() is load_config()


def test_load_config_defaults_to_dev(clean_environment):
    assert load_config().log.level == "DEBUG"


def test_repr_lists_sections():
    text = repr(Config({"cli": {"seed": 1}}))
    assert text.startswith("Config(")
    assert "CliConfig" in text and "'seed': 1" in text


def test_resource_path_holds_base_config():
    assert os.path.isfile(resource_path("config.yml"))


@pytest.mark.parametrize(
    "content, reason",
    [
        ("metrics:\n  enabled: true\n", "unknown section"),
        ("numerics: 3\n", "must be a mapping"),
        ("- numerics\n", "top level"),
        ("numerics: [unclosed\n", "config.yml"),
    ],
)
def test_invalid_files_are_rejected(tmp_path, content, reason):
    custom = tmp_path / "config.yml"
    custom.write_text(content, encoding="utf-8")
    with pytest.raises(ServiceException) as exc_info:
        ConfigLoader("dev", str(custom)).load_config()
    assert exc_info.value.code == 414
    assert reason in exc_info.value.msg


def test_missing_config_file_exits_with_rejected_input(clean_environment, tmp_path, capsys):
    missing = str(tmp_path / "absent.yml")
    clean_environment.setenv("CONFIG_FILE", missing)
    assert main(["-c", missing, "synth", "--n", "1"]) == 2
    assert "error 414" in capsys.readouterr().err


def test_config_flag_selects_file(clean_environment, tmp_path, capsys):
    custom = tmp_path / "quiet.yml"
    custom.write_text("log:\n  level: ERROR\n", encoding="utf-8")
    clean_environment.setenv("CONFIG_FILE", str(custom))
    assert main(["-c", str(custom), "synth", "--n", "2"]) == 0
    assert load_config().log.level == "ERROR"
    assert capsys.readouterr().err == "hadamards=2 controlled_phases=1 swaps=1 total=4\n"


def test_config_flag_reconfigures_services(clean_environment, tmp_path):
    assert get_simulator_service().check_norm is True
    custom = tmp_path / "loose.yml"
    custom.write_text("numerics:\n  strict_tolerance: 1.0e-11\nsimulator:\n  check_norm: false\n", encoding="utf-8")
    clean_environment.setenv("CONFIG_FILE", str(custom))
    assert main(["-c", str(custom), "synth", "--n", "1"]) == 0
    assert get_simulator_service().check_norm is False
    assert get_step_matrix_service().strict_tolerance == 1e-11
