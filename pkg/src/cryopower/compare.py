"""Comparative analyses and design-space search over the architecture models.

Budget interpretation used by :func:`devices_under_budget`: a device count n
fits a total budget B when the delivered power p(n) plus the loss entering
the cold stage at p(n) (transmission share plus any converter dissipation)
does not exceed B. This is the reading under which architectures differ in
supported device count; delivered power alone would rank them identically.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from importlib import resources
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .losses import LossBreakdown, architecture_loss_at
from .model import ARCHITECTURES, ArchitectureKind, SystemConfig
from .noise import white_floor_ratio
from .thermal import ThermalBudget, heat_budget

# Relative slack absorbing last-ulp rounding when an operating point lands
# exactly on the budget boundary; the next integer device always overshoots
# by far more than this.
_BUDGET_SLACK = 1e-12

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

FREE_PARAMETER_NAMES = ("v_rx_hv", "wire_count")


@dataclass(frozen=True)
class ArchitectureEvaluation:
    """Loss and thermal results for one architecture at one operating point."""

    loss: LossBreakdown
    thermal: ThermalBudget

    @property
    def architecture(self) -> ArchitectureKind:
        return self.loss.architecture


@dataclass(frozen=True)
class SweepPoint:
    value: float
    evaluations: tuple[ArchitectureEvaluation, ...]


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    points: tuple[SweepPoint, ...]


@dataclass(frozen=True)
class ComparisonRow:
    architecture: ArchitectureKind
    transmission_loss: float
    cold_stage_heat: float
    cooling_power: float
    noise_floor_ratio: float
    power_density: str
    reliability: str


@dataclass(frozen=True)
class ComparisonReport:
    device_count: int
    rows: tuple[ComparisonRow, ...]


@dataclass(frozen=True)
class OptimizationResult:
    architecture: ArchitectureKind
    parameters: dict[str, float | int]
    objective: str
    objective_value: float
    evaluations: int
    trace: tuple[tuple[dict[str, float | int], float], ...]


def _with_device_count(config: SystemConfig, count: int) -> SystemConfig:
    return replace(config, load=replace(config.load, device_count=count))


def evaluate_architecture(arch: ArchitectureKind, config: SystemConfig) -> ArchitectureEvaluation:
    """Pair the loss breakdown with the thermal budget at the configured load."""
    return ArchitectureEvaluation(
        loss=architecture_loss_at(arch, config, config.load.delivered_power),
        thermal=heat_budget(arch, config),
    )


def sweep_loss(
    config: SystemConfig,
    device_counts: Sequence[int],
    map_fn: Callable[..., Iterable] = map,
) -> SweepResult:
    """Evaluate all five architectures at each device count.

    ``map_fn`` may be replaced by a pool's map for parallel evaluation;
    results are assembled in input order either way.
    """
    if not device_counts:
        raise ValueError("device_counts must be nonempty")
    for prev, cur in zip(device_counts, list(device_counts)[1:]):
        if cur <= prev:
            raise ValueError(f"device_counts must be strictly increasing, got {prev} then {cur}")
    if device_counts[0] < 1:
        raise ValueError(f"device counts must be >= 1, got {device_counts[0]}")

    def _point(count: int) -> SweepPoint:
        point_config = _with_device_count(config, int(count))
        evaluations = tuple(evaluate_architecture(arch, point_config) for arch in ARCHITECTURES)
        return SweepPoint(value=int(count), evaluations=evaluations)

    return SweepResult(parameter="device_count", points=tuple(map_fn(_point, device_counts)))


def _budget_cost(arch: ArchitectureKind, config: SystemConfig, p_rx: float) -> float:
    return p_rx + architecture_loss_at(arch, config, p_rx).loss_at_cold_stage


def _fits_budget(arch: ArchitectureKind, config: SystemConfig, count: int, budget: float) -> bool:
    p_rx = count * config.load.power_per_device
    return _budget_cost(arch, config, p_rx) <= budget * (1.0 + _BUDGET_SLACK)


def _closed_form_count(arch: ArchitectureKind, config: SystemConfig, budget: float) -> int:
    # The cold-entering loss is exactly linear-plus-quadratic in p, so probe
    # it at p = 1 and p = 2 to recover the coefficients of
    # cost(p) = (1 + c1) p + c2 p^2 and solve cost(p*) = budget.
    loss1 = architecture_loss_at(arch, config, 1.0).loss_at_cold_stage
    loss2 = architecture_loss_at(arch, config, 2.0).loss_at_cold_stage
    c2 = (loss2 - 2.0 * loss1) / 2.0
    c1 = loss1 - c2
    b1 = 1.0 + c1
    if c2 <= 0.0:
        p_star = budget / b1
    else:
        p_star = (-b1 + math.sqrt(b1 * b1 + 4.0 * c2 * budget)) / (2.0 * c2)
    return max(0, int(p_star / config.load.power_per_device))


def _bisection_count(arch: ArchitectureKind, config: SystemConfig, budget: float) -> int:
    lo = 0
    hi = 1
    while _fits_budget(arch, config, hi, budget):
        lo = hi
        hi *= 2
        if hi > 1 << 60:  # pragma: no cover - guards absurd configurations
            raise ValueError("device count under budget is unbounded")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _fits_budget(arch, config, mid, budget):
            lo = mid
        else:
            hi = mid
    return lo


def devices_under_budget(
    arch: ArchitectureKind,
    config: SystemConfig,
    total_budget: float,
    method: str = "closed_form",
) -> int:
    """Largest device count whose delivered power plus cold-entering loss fits the budget.

    ``method`` selects the solver: the closed form (quadratic for wired
    rails, linear for wireless links) or integer bisection on the monotone
    feasibility predicate. Both agree on every configuration.
    """
    if total_budget <= 0:
        raise ValueError(f"total_budget must be > 0, got {total_budget!r}")
    if config.load.power_per_device <= 0:
        raise ValueError(
            f"power_per_device must be > 0 to bound the device count, "
            f"got {config.load.power_per_device!r}"
        )
    if method == "bisection":
        return _bisection_count(arch, config, total_budget)
    if method != "closed_form":
        raise ValueError(f"method must be 'closed_form' or 'bisection', got {method!r}")
    count = _closed_form_count(arch, config, total_budget)
    while _fits_budget(arch, config, count + 1, total_budget):
        count += 1
    while count > 0 and not _fits_budget(arch, config, count, total_budget):
        count -= 1
    return count


def equivalent_wire_count(config: SystemConfig, reference: ArchitectureKind) -> float:
    """Parallel wires a conventional rail needs to match a wireless link's loss.

    Solves wired_loss(p, v_rx, r, n) = transmission loss of ``reference`` at
    the configured delivered power; the result is a positive real (not
    rounded to an integer).
    """
    if not reference.is_wireless:
        raise ValueError(f"reference must be a wireless architecture, got {reference.label}")
    p_rx = config.load.delivered_power
    if p_rx <= 0:
        raise ValueError("configured delivered power must be > 0")
    reference_loss = architecture_loss_at(reference, config, p_rx).transmission_loss
    if reference_loss <= 0:
        raise ValueError(
            f"{reference.label} has zero transmission loss at this configuration; "
            "no finite wire count matches it"
        )
    v = config.load.v_rx
    single_wire_loss = (p_rx * p_rx) / (v * v) * config.wire.effective_resistance
    return single_wire_loss / reference_loss


def default_score_table() -> dict[str, dict[str, str]]:
    """Bundled qualitative scores for the non-computed comparison rows."""
    text = resources.files("cryopower").joinpath("data/default_scores.json").read_text("utf-8")
    return json.loads(text)


def _check_score_table(table: Mapping[str, Mapping[str, str]]) -> None:
    for row in ("power_density", "reliability"):
        if row not in table:
            raise ValueError(f"score table is missing the {row!r} row")
        for arch in ARCHITECTURES:
            if arch.label not in table[row]:
                raise ValueError(f"score table row {row!r} is missing {arch.label!r}")


def scorecard(
    config: SystemConfig,
    operating_device_count: int,
    score_table: Mapping[str, Mapping[str, str]] | None = None,
) -> ComparisonReport:
    """Tabular comparison of all architectures at one operating point.

    Loss, heat, cooling power, and the high-frequency noise ratio are
    computed from the models; power density and reliability are ordinal
    scores taken from ``score_table`` (the bundled table by default). Rows
    are sorted by cooling power ascending. Note the computed orderings are
    statements about large operating points; at a handful of devices the
    quadratic wire loss is smaller than every wireless link's linear loss.
    """
    if operating_device_count < 1:
        raise ValueError(f"operating_device_count must be >= 1, got {operating_device_count!r}")
    table = default_score_table() if score_table is None else score_table
    _check_score_table(table)
    point_config = _with_device_count(config, operating_device_count)
    rows = []
    for arch in ARCHITECTURES:
        evaluation = evaluate_architecture(arch, point_config)
        rows.append(
            ComparisonRow(
                architecture=arch,
                transmission_loss=evaluation.loss.transmission_loss,
                cold_stage_heat=evaluation.thermal.q_total,
                cooling_power=evaluation.thermal.cooling_power,
                noise_floor_ratio=white_floor_ratio(arch, point_config),
                power_density=table["power_density"][arch.label],
                reliability=table["reliability"][arch.label],
            )
        )
    rows.sort(key=lambda row: row.cooling_power)
    return ComparisonReport(device_count=operating_device_count, rows=tuple(rows))


def resolve_parameters(
    config: SystemConfig,
    arch: ArchitectureKind,
    params: Mapping[str, float | int],
    couple_converter_input: bool = True,
) -> SystemConfig:
    """Apply a free-parameter assignment to ``config``.

    When ``v_rx_hv`` varies on a converter-equipped architecture and
    coupling is on, the converter input tracks the delivered HV rail
    (duty follows the ideal buck relation v_out/v_in). Rail voltages at or
    below the converter output cannot be bucked down, so such points carry
    no converter stage.
    """
    result = config
    for name in params:
        if name not in FREE_PARAMETER_NAMES:
            raise ValueError(
                f"unknown free parameter {name!r} (expected one of {FREE_PARAMETER_NAMES})"
            )
    if "wire_count" in params:
        result = replace(result, wire=replace(result.wire, wire_count=int(params["wire_count"])))
    if "v_rx_hv" in params:
        v_hv = float(params["v_rx_hv"])
        if v_hv < config.load.v_rx:
            raise ValueError(f"v_rx_hv must be >= load.v_rx ({config.load.v_rx!r}), got {v_hv!r}")
        result = replace(result, load=replace(result.load, v_rx_hv=v_hv))
        conv = result.converter
        carries_converter = conv.include_loss and (
            arch is ArchitectureKind.HV_WIRED
            or (arch is ArchitectureKind.HV_NON_RADIATIVE and conv.attach_hv_nonradiative)
        )
        if couple_converter_input and carries_converter:
            if v_hv > conv.v_out:
                conv = replace(conv, v_in=v_hv, duty=conv.v_out / v_hv)
            else:
                conv = replace(conv, include_loss=False)
            result = replace(result, converter=conv)
    return result


def _golden_refine(
    objective: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
) -> tuple[float, float]:
    """Golden-section minimization on [lo, hi]; returns the best probed point."""
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = objective(c), objective(d)
    best_x, best_f = (c, fc) if (fc < fd or (fc == fd and c <= d)) else (d, fd)
    iterations = 0
    while (b - a) > tol and iterations < 200:
        if fc < fd or (fc == fd and c < d):  # ties shrink toward smaller values
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = objective(d)
        for x, fx in ((c, fc), (d, fd)):
            if fx < best_f or (fx == best_f and x < best_x):
                best_x, best_f = x, fx
        iterations += 1
    return best_x, best_f


def optimize(
    config: SystemConfig,
    free_parameters: Mapping[str, tuple[float, float]],
    arch: ArchitectureKind,
    objective: str = "cooling_power",
    *,
    resolution: int = 1000,
    couple_converter_input: bool = True,
    map_fn: Callable[..., Iterable] = map,
) -> OptimizationResult:
    """Minimize cooling power over a box of free parameters.

    Dense grid search (continuous axes discretized at ``resolution`` points,
    the integer wire-count axis enumerated) followed by golden-section
    refinement of the continuous axis around the best grid cell. Ties break
    toward smaller parameter values; the scan order makes that deterministic.
    """
    if objective != "cooling_power":
        raise ValueError(f"unsupported objective {objective!r}")
    if not free_parameters:
        raise ValueError("at least one free parameter is required")
    if resolution < 2:
        raise ValueError(f"resolution must be >= 2, got {resolution!r}")
    for name, (lo, hi) in free_parameters.items():
        if name not in FREE_PARAMETER_NAMES:
            raise ValueError(
                f"unknown free parameter {name!r} (expected one of {FREE_PARAMETER_NAMES})"
            )
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError(f"bounds for {name!r} must be finite, got [{lo!r}, {hi!r}]")
        if lo > hi:
            raise ValueError(f"inverted bounds for {name!r}: [{lo!r}, {hi!r}]")

    if "v_rx_hv" in free_parameters:
        v_lo, v_hi = free_parameters["v_rx_hv"]
        if v_lo < config.load.v_rx:
            raise ValueError(
                f"v_rx_hv lower bound must be >= load.v_rx ({config.load.v_rx!r}), got {v_lo!r}"
            )
        if v_lo == v_hi:
            v_grid = [float(v_lo)]
        else:
            v_grid = [float(x) for x in np.linspace(v_lo, v_hi, resolution)]
    else:
        v_grid = [None]

    if "wire_count" in free_parameters:
        n_lo, n_hi = free_parameters["wire_count"]
        n_lo_i, n_hi_i = int(math.ceil(n_lo)), int(math.floor(n_hi))
        if n_lo_i < 1:
            raise ValueError(f"wire_count lower bound must be >= 1, got {n_lo!r}")
        if n_hi_i < n_lo_i:
            raise ValueError(f"empty wire_count range [{n_lo!r}, {n_hi!r}]")
        span = n_hi_i - n_lo_i + 1
        if span <= resolution:
            n_grid = list(range(n_lo_i, n_hi_i + 1))
        else:
            samples = np.rint(np.linspace(n_lo_i, n_hi_i, resolution)).astype(int)
            n_grid = sorted(set(int(n) for n in samples))
    else:
        n_grid = [None]

    evaluations = 0
    trace: list[tuple[dict[str, float | int], float]] = []
    best_params: dict[str, float | int] | None = None
    best_value = math.inf

    def _objective(params: dict[str, float | int]) -> float:
        nonlocal evaluations
        evaluations += 1
        point = resolve_parameters(config, arch, params, couple_converter_input)
        return heat_budget(arch, point).cooling_power

    def _params_for(v: float | None, n: int | None) -> dict[str, float | int]:
        params: dict[str, float | int] = {}
        if v is not None:
            params["v_rx_hv"] = v
        if n is not None:
            params["wire_count"] = n
        return params

    grid = [_params_for(v, n) for v in v_grid for n in n_grid]
    values = list(map_fn(_objective, grid))
    for params, value in zip(grid, values):
        if value < best_value:
            best_params, best_value = params, value
            trace.append((dict(params), value))
    assert best_params is not None

    if "v_rx_hv" in best_params and len(v_grid) > 1:
        index = v_grid.index(best_params["v_rx_hv"])
        lo = v_grid[max(0, index - 1)]
        hi = v_grid[min(len(v_grid) - 1, index + 1)]
        fixed_n = best_params.get("wire_count")

        def _axis(v: float) -> float:
            return _objective(_params_for(float(v), fixed_n))

        tol = 1e-10 * max(1.0, abs(hi))
        x, fx = _golden_refine(_axis, lo, hi, tol)
        refined = _params_for(float(x), fixed_n)
        if fx < best_value or (fx == best_value and x < best_params["v_rx_hv"]):
            best_params, best_value = refined, fx
            trace.append((dict(refined), fx))

    return OptimizationResult(
        architecture=arch,
        parameters=best_params,
        objective="cooling_power",
        objective_value=best_value,
        evaluations=evaluations,
        trace=tuple(trace),
    )
