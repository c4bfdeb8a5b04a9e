"""Strict config-file format: one dotted ``section.field = value`` per line.

Keys mirror the SystemConfig field paths exactly (``wire.resistance_warm``,
``load.v_rx``, ...). Values are plain SI numbers, ``true``/``false`` for
booleans, or bare words for string fields; no unit suffixes. ``#`` starts a
comment. Unknown keys are a hard error so typos cannot silently fall back
to defaults.
"""

from __future__ import annotations

from dataclasses import fields, replace

from .model import SECTION_NAMES, SystemConfig, default_config


class ConfigError(ValueError):
    """Malformed config text or an unknown/invalid key."""

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message)
        self.path = path


def _schema() -> dict[str, type]:
    """Map every dotted field path to its leaf type."""
    paths: dict[str, type] = {}
    template = default_config()
    for section in SECTION_NAMES:
        for leaf in fields(getattr(template, section)):
            paths[f"{section}.{leaf.name}"] = type(getattr(getattr(template, section), leaf.name))
    return paths


_SCHEMA = _schema()


def config_paths() -> tuple[str, ...]:
    """All recognized dotted field paths, in declaration order."""
    return tuple(_SCHEMA)


def coerce_value(path: str, raw: str):
    """Parse the textual value for ``path`` into its field type."""
    if path not in _SCHEMA:
        raise ConfigError(f"unknown configuration key: {path!r}", path=path)
    kind = _SCHEMA[path]
    text = raw.strip()
    try:
        if kind is bool:
            lowered = text.lower()
            if lowered == "true":
                return True
            if lowered == "false":
                return False
            raise ValueError(f"expected true or false, got {text!r}")
        if kind is int:
            return int(text)
        if kind is float:
            value = float(text)
            return value
        return text
    except ValueError as exc:
        raise ConfigError(f"{path}: invalid value {text!r} ({exc})", path=path) from exc


def set_value(config: SystemConfig, path: str, value) -> SystemConfig:
    """Return a config with the leaf at ``path`` replaced by ``value``."""
    if path not in _SCHEMA:
        raise ConfigError(f"unknown configuration key: {path!r}", path=path)
    section, leaf = path.split(".", 1)
    updated_section = replace(getattr(config, section), **{leaf: value})
    return replace(config, **{section: updated_section})


def get_value(config: SystemConfig, path: str):
    if path not in _SCHEMA:
        raise ConfigError(f"unknown configuration key: {path!r}", path=path)
    section, leaf = path.split(".", 1)
    return getattr(getattr(config, section), leaf)


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def serialize_config(config: SystemConfig) -> str:
    """Render a config as parseable text, one dotted key per line."""
    lines = ["# cryopower system configuration (strict SI units)"]
    previous_section = None
    for path in _SCHEMA:
        section = path.split(".", 1)[0]
        if section != previous_section:
            lines.append("")
            previous_section = section
        lines.append(f"{path} = {_format_value(get_value(config, path))}")
    return "\n".join(lines) + "\n"


def parse_config(text: str, base: SystemConfig | None = None) -> SystemConfig:
    """Parse config text; keys not present keep their ``base`` (default) values.

    Raises :class:`ConfigError` on unknown keys, duplicate keys, missing
    ``=`` separators, or unparseable values.
    """
    config = default_config() if base is None else base
    seen: set[str] = set()
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw_line.strip()!r}")
        key, raw_value = line.split("=", 1)
        path = key.strip()
        if path in seen:
            raise ConfigError(f"line {lineno}: duplicate key {path!r}", path=path)
        seen.add(path)
        if path not in _SCHEMA:
            raise ConfigError(f"line {lineno}: unknown configuration key: {path!r}", path=path)
        config = set_value(config, path, coerce_value(path, raw_value))
    return config
