"""Link-budget planning for wireless IoT links crossing foliage cover.

The package splits a link into foliage and free-space segments, evaluates
the loss of each (Weissberger decay model plus free-space path loss),
and layers budget arithmetic, inverse solvers, parameter sweeps and
scenario batch evaluation on top.
"""

from .budget import (
    RadioConfig,
    SolveResult,
    link_margin,
    max_foliage_factor,
    max_foliage_height,
    max_loss_budget,
    max_range,
    required_tx_power,
)
from .errors import (
    BracketExceeded,
    DeltaOutOfRange,
    DomainError,
    EmptyInput,
    FoliageLinkError,
    FullFoliageCover,
    HeightOutOfRange,
    InconsistentGeometry,
    InvalidBand,
    InvalidRadioConfig,
    InvalidSpec,
    NegativeDistance,
    NonPositiveDistance,
    NonPositiveFrequency,
    NonPositiveHeight,
    NoSolution,
    ParseError,
    ScenarioError,
    SchemaError,
    SolverError,
    UnknownPreset,
)
from .propagation import (
    DEFAULT_FSPL_CONSTANT_DB,
    LINEAR_BRANCH_MAX_M,
    WEISSBERGER_MAX_DEPTH_M,
    DeltaBounds,
    FoliageLossResult,
    LinkGeometry,
    LossBreakdown,
    PathSplit,
    Regime,
    Validity,
    delta_bounds,
    delta_from_heights,
    foliage_split,
    free_space_loss,
    split_from_heights,
    total_loss,
    weissberger_delta_limit,
    weissberger_loss,
)
from .scenario import (
    NodeReport,
    Scenario,
    ScenarioNode,
    emit_csv,
    emit_json,
    emit_scenario,
    evaluate_scenario,
    parse_scenario,
)
from .sweep import SweepRow, SweepSpec, SweepTable, SweepVariable, preset, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BracketExceeded",
    "DEFAULT_FSPL_CONSTANT_DB",
    "DeltaBounds",
    "DeltaOutOfRange",
    "DomainError",
    "EmptyInput",
    "FoliageLinkError",
    "FoliageLossResult",
    "FullFoliageCover",
    "HeightOutOfRange",
    "InconsistentGeometry",
    "InvalidBand",
    "InvalidRadioConfig",
    "InvalidSpec",
    "LINEAR_BRANCH_MAX_M",
    "LinkGeometry",
    "LossBreakdown",
    "NegativeDistance",
    "NodeReport",
    "NonPositiveDistance",
    "NonPositiveFrequency",
    "NonPositiveHeight",
    "NoSolution",
    "ParseError",
    "PathSplit",
    "RadioConfig",
    "Regime",
    "Scenario",
    "ScenarioError",
    "ScenarioNode",
    "SchemaError",
    "SolveResult",
    "SolverError",
    "SweepRow",
    "SweepSpec",
    "SweepTable",
    "SweepVariable",
    "UnknownPreset",
    "Validity",
    "WEISSBERGER_MAX_DEPTH_M",
    "delta_bounds",
    "delta_from_heights",
    "emit_csv",
    "emit_json",
    "emit_scenario",
    "evaluate_scenario",
    "foliage_split",
    "free_space_loss",
    "link_margin",
    "max_foliage_factor",
    "max_foliage_height",
    "max_loss_budget",
    "max_range",
    "parse_scenario",
    "preset",
    "required_tx_power",
    "run_sweep",
    "split_from_heights",
    "total_loss",
    "weissberger_delta_limit",
    "weissberger_loss",
]
