"""Cold-stage heat budgeting and required cooling power.

The budget models a single cold stage: wire conduction load, transmission
and converter losses deposited there, ambient leakage, and fixed electronics
dissipation sum to the total heat leak, which the cooling plant must remove
at its (Carnot-limited, corrected) coefficient of performance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .losses import architecture_loss_at
from .model import ArchitectureKind, SystemConfig


@dataclass(frozen=True)
class ThermalBudget:
    """Per-architecture cold-stage heat composition and cooling demand."""

    architecture: ArchitectureKind
    p_load: float
    p_loss_cold: float
    q_ambient: float
    q_electronics: float
    q_total: float
    cop: float
    cooling_power: float


def carnot_cop(t_cold: float, t_ambient: float, eta_c: float) -> float:
    """Corrected Carnot coefficient of performance: eta_c * T_C / (T_0 - T_C)."""
    if t_cold <= 0 or t_ambient <= t_cold:
        raise ValueError(
            f"temperatures must satisfy 0 < t_cold < t_ambient, got {t_cold!r}, {t_ambient!r}"
        )
    if not 0 < eta_c <= 1:
        raise ValueError(f"eta_c must be in (0, 1], got {eta_c!r}")
    return eta_c * t_cold / (t_ambient - t_cold)


def heat_budget_at(arch: ArchitectureKind, config: SystemConfig, p_rx: float) -> ThermalBudget:
    """Heat budget for ``arch`` at an explicit delivered power ``p_rx``.

    Wireless architectures carry no wire conduction load; wired ones carry
    ``thermal_load_per_wire * wire_count``.
    """
    breakdown = architecture_loss_at(arch, config, p_rx)
    if arch.is_wireless:
        p_load = 0.0
    else:
        p_load = config.wire.thermal_load_per_wire * config.wire.wire_count
    stage = config.stage
    q_total = p_load + breakdown.loss_at_cold_stage + stage.q_ambient_leak + stage.q_electronics
    cop = carnot_cop(config.cooling.t_cold, config.cooling.t_ambient, config.cooling.eta_c)
    return ThermalBudget(
        architecture=arch,
        p_load=p_load,
        p_loss_cold=breakdown.loss_at_cold_stage,
        q_ambient=stage.q_ambient_leak,
        q_electronics=stage.q_electronics,
        q_total=q_total,
        cop=cop,
        cooling_power=q_total / cop,
    )


def heat_budget(arch: ArchitectureKind, config: SystemConfig) -> ThermalBudget:
    """Heat budget at the configured load."""
    return heat_budget_at(arch, config, config.load.delivered_power)
