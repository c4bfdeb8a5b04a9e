"""Config-file format: strict schema, coercion, and round-trip fidelity."""

import pytest

from cryopower.configio import (
    ConfigError,
    coerce_value,
    config_paths,
    get_value,
    parse_config,
    serialize_config,
    set_value,
)
from cryopower.model import SystemConfig, default_config, validate


def test_round_trip_defaults():
    cfg = default_config()
    assert parse_config(serialize_config(cfg)) == cfg


def test_every_field_reachable_round_trip():
    # Tweak every leaf away from its default, then check text round-trip identity.
    cfg = default_config()
    replacements = {
        "wire.resistance_warm": 17.5,
        "wire.resistance_cold": 11.25,
        "wire.resistance_mode": "mean",
        "wire.thermal_load_per_wire": 0.125,
        "wire.wire_count": 55,
        "load.power_per_device": 0.0075,
        "load.device_count": 321,
        "load.v_rx": 1.8,
        "load.v_rx_hv": 48.0,
        "coupling.eta_rad_r": 0.95,
        "coupling.eta_coup_ant": 0.65,
        "coupling.eta_coup_coil": 0.85,
        "coupling.loss_to_cold_fraction": 0.5,
        "converter.r_hs": 0.2,
        "converter.r_ls": 0.15,
        "converter.r_l": 0.075,
        "converter.v_in": 24.0,
        "converter.v_out": 1.8,
        "converter.i_out": 0.75,
        "converter.t_r": 4e-9,
        "converter.t_f": 6e-9,
        "converter.f_sw": 2e6,
        "converter.duty": 0.075,
        "converter.include_loss": False,
        "converter.attach_hv_nonradiative": True,
        "cooling.t_cold": 3.5,
        "cooling.t_ambient": 295.0,
        "cooling.eta_c": 0.15,
        "stage.q_ambient_leak": 0.01,
        "stage.q_electronics": 0.02,
        "noise.s_white": 2e-14,
        "noise.f_corner": 500.0,
        "noise.wireless_floor_ratio": 1e-4,
        "noise.switching_spur": 5e-13,
    }
    assert set(replacements) == set(config_paths())
    for path, value in replacements.items():
        cfg = set_value(cfg, path, value)
    assert validate(cfg).ok
    assert cfg != default_config()
    assert parse_config(serialize_config(cfg)) == cfg


def test_serialization_is_deterministic():
    assert serialize_config(default_config()) == serialize_config(default_config())


def test_unknown_key_names_the_key():
    with pytest.raises(ConfigError, match="wire.resistanse_warm"):
        parse_config("wire.resistanse_warm = 16\n")


def test_duplicate_key_rejected():
    text = "wire.resistance_warm = 16\nwire.resistance_warm = 17\n"
    with pytest.raises(ConfigError, match="duplicate key"):
        parse_config(text)


def test_missing_separator_rejected():
    with pytest.raises(ConfigError, match="expected 'key = value'"):
        parse_config("wire.resistance_warm 16\n")


def test_comments_and_blank_lines():
    text = (
        "# leading comment\n"
        "\n"
        "wire.resistance_warm = 18.0  # trailing comment\n"
        "   \n"
    )
    cfg = parse_config(text)
    assert cfg.wire.resistance_warm == 18.0


def test_partial_file_keeps_defaults():
    cfg = parse_config("load.device_count = 555\n")
    assert cfg.load.device_count == 555
    assert cfg.wire.resistance_warm == default_config().wire.resistance_warm


def test_int_field_rejects_fraction():
    with pytest.raises(ConfigError, match="wire.wire_count"):
        parse_config("wire.wire_count = 1.5\n")


def test_bool_parsing():
    assert parse_config("converter.include_loss = false\n").converter.include_loss is False
    assert parse_config("converter.include_loss = TRUE\n").converter.include_loss is True
    with pytest.raises(ConfigError, match="converter.include_loss"):
        parse_config("converter.include_loss = yes\n")


def test_float_field_accepts_integer_literal():
    assert parse_config("load.v_rx = 2\n").load.v_rx == 2.0


def test_bad_number_names_path():
    with pytest.raises(ConfigError, match="load.v_rx"):
        parse_config("load.v_rx = twelve\n")


def test_get_set_unknown_path():
    cfg = default_config()
    with pytest.raises(ConfigError):
        get_value(cfg, "wire.bogus")
    with pytest.raises(ConfigError):
        set_value(cfg, "nope.nope", 1.0)
    with pytest.raises(ConfigError):
        coerce_value("nope.nope", "1")


def test_parse_does_not_mutate_base():
    base = default_config()
    parse_config("load.device_count = 7\n", base=base)
    assert base.load.device_count == default_config().load.device_count
    assert isinstance(parse_config("", base=base), SystemConfig)
