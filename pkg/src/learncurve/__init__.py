"""Experience-curve scenario engine for electrolysis capital costs.

Projects stack, balance-of-plant, and EPC costs under alternative learning
structures (shared vs. fragmented across technology variants; local vs.
global vs. hybrid across regions), and computes the deployment, cumulative
investment, and hydrogen-cost implications of each structure.
"""

from .analysis import (
    SubjectSpread,
    StructureDeltaResult,
    TargetResult,
    TrajectoryEnvelope,
    capacity_to_target,
    capital_recovery_factor,
    component_investment_to_target,
    investment_to_target,
    lcoh_contribution,
    learning_investment,
    structure_delta,
    sweep_envelope,
)
from .curves import (
    exponent_from_learning_rate,
    family_cumulative,
    project_component_cost,
    project_cost,
    project_stack_cost,
    region_family,
    region_family_base,
    stack_family,
    stack_family_base,
)
from .figures import FIGURE_IDS, FigureDataset, emit_figure_dataset
from .presets import (
    BOP_EPC_2030,
    PRESET_DIR_ENV,
    STACKS_BENCHMARK,
    Preset,
    PresetCatalog,
    builtin_presets,
    load_catalog,
)
from .scenario_io import (
    ScenarioWarning,
    load_scenario,
    parse_scenario,
    read_scenario_file,
    scenario_to_doc,
    scenario_to_json,
)
from .types import (
    ComponentStructure,
    CostCategory,
    DeploymentState,
    DomainError,
    ExperienceCurve,
    FinanceParams,
    LearningRateBand,
    PathwayPoint,
    Region,
    Scenario,
    StackStructure,
    StackVariant,
    ValidationError,
)

__version__ = "0.1.0"

__all__ = [
    "BOP_EPC_2030",
    "ComponentStructure",
    "CostCategory",
    "DeploymentState",
    "DomainError",
    "ExperienceCurve",
    "FIGURE_IDS",
    "FigureDataset",
    "FinanceParams",
    "LearningRateBand",
    "PathwayPoint",
    "PRESET_DIR_ENV",
    "Preset",
    "PresetCatalog",
    "Region",
    "STACKS_BENCHMARK",
    "Scenario",
    "ScenarioWarning",
    "StackStructure",
    "StackVariant",
    "StructureDeltaResult",
    "SubjectSpread",
    "TargetResult",
    "TrajectoryEnvelope",
    "ValidationError",
    "builtin_presets",
    "capacity_to_target",
    "capital_recovery_factor",
    "component_investment_to_target",
    "emit_figure_dataset",
    "exponent_from_learning_rate",
    "family_cumulative",
    "investment_to_target",
    "lcoh_contribution",
    "learning_investment",
    "load_catalog",
    "load_scenario",
    "parse_scenario",
    "project_component_cost",
    "project_cost",
    "project_stack_cost",
    "read_scenario_file",
    "region_family",
    "region_family_base",
    "scenario_to_doc",
    "scenario_to_json",
    "stack_family",
    "stack_family_base",
    "structure_delta",
    "sweep_envelope",
    "__version__",
]
