"""Supply-rail noise-density models for the five architectures.

The room-temperature supply is modeled as flicker noise over a white floor.
Delivering at higher voltage divides the rail-referred density by the
step-down ratio; converter-equipped rails add a localized switching spur;
wireless chains replace the supply spectrum with a strongly attenuated flat
floor set by their conversion stages.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import ArchitectureKind, NoiseSpec, SystemConfig


@dataclass(frozen=True)
class NoiseDensity:
    """One point of a voltage-noise spectrum."""

    frequency: float
    density: float


def supply_noise(f: float, spec: NoiseSpec) -> float:
    """Supply noise density s_white * (1 + f_corner/f) in V^2/Hz."""
    if f <= 0:
        raise ValueError(f"frequency must be > 0, got {f!r}")
    return spec.s_white * (1.0 + spec.f_corner / f)


def spur_shape(f: float, f_sw: float, half_width: float | None = None) -> float:
    """Unit-area triangular bump centered at ``f_sw``, in 1/Hz.

    The half-width defaults to 0.1 * f_sw. Returns 0 when no switching
    frequency is configured.
    """
    if f <= 0:
        raise ValueError(f"frequency must be > 0, got {f!r}")
    if f_sw <= 0:
        return 0.0
    w = 0.1 * f_sw if half_width is None else half_width
    if w <= 0:
        return 0.0
    offset = abs(f - f_sw)
    if offset >= w:
        return 0.0
    return (1.0 - offset / w) / w


def white_floor_ratio(arch: ArchitectureKind, config: SystemConfig) -> float:
    """High-frequency noise floor of ``arch`` relative to the wired rail.

    Wired is the reference (1.0); the HV rail improves by the voltage
    step-down ratio; wireless chains sit at ``wireless_floor_ratio``.
    """
    if arch is ArchitectureKind.WIRED:
        return 1.0
    if arch is ArchitectureKind.HV_WIRED:
        return config.load.v_rx / config.load.v_rx_hv
    return config.noise.wireless_floor_ratio


def rail_noise(arch: ArchitectureKind, f: float, config: SystemConfig) -> float:
    """Rail-referred noise density of ``arch`` at frequency ``f``, in V^2/Hz.

    Wireless rails are flat: beyond the flicker corner the floor is set by
    the conversion stages, not the room-temperature supply.
    """
    spec = config.noise
    if arch is ArchitectureKind.WIRED:
        return supply_noise(f, spec)
    if arch is ArchitectureKind.HV_WIRED:
        step_down = config.load.v_rx_hv / config.load.v_rx
        spur = spec.switching_spur * spur_shape(f, config.converter.f_sw)
        return supply_noise(f, spec) / step_down + spur
    if f <= 0:
        raise ValueError(f"frequency must be > 0, got {f!r}")
    return spec.s_white * spec.wireless_floor_ratio


def rail_noise_density(arch: ArchitectureKind, f: float, config: SystemConfig) -> NoiseDensity:
    """Convenience wrapper pairing the frequency with its density."""
    return NoiseDensity(frequency=f, density=rail_noise(arch, f, config))
