"""charflow: conservative continuation of breaking waves.

Integrates the generalized Camassa-Holm family in characteristic
coordinates, where the evolution is globally well-posed, and reconstructs
physical fields with the energy ledger as a built-in contract.
"""

__version__ = "0.1.0"

from .classical import ClassicalState, ClassicalTrace, classical_rhs, classical_run
from .diagnostics import (EnergyReport, build_energy_report, identity_suite,
                          theta_sampler)
from .errors import (BreakingApproached, CharflowError, ConfigError,
                     EnergyDriftExceeded, NonMonotoneX, StepBlowUp)
from .flux import FluxModel, builtin_model, camassa_holm, generalized_rod, rod
from .kernel import (KernelResult, MetricAccumulator, cumulative_metric,
                     kernel_bound_report, source_terms, source_terms_physical)
from .reconstruct import (PhysicalField, energy_char, energy_physical,
                          energy_physical_from_state, holder_check, to_physical)
from .scenarios import (Scenario, antipeakon_pair, custom_file, gaussian,
                        make_scenario, peakon, sample_datum, zero)
from .stepping import (RunConfig, RunTrace, Tolerances, auto_dt, initial_state,
                       run, step_rk4)
from .system import StateDerivative, norm_X, rhs
from .transform import (CharState, InitialDatum, coordinate_of, datum_energy,
                        to_characteristic)

__all__ = [
    "BreakingApproached", "CharState", "CharflowError", "ClassicalState",
    "ClassicalTrace", "ConfigError", "EnergyDriftExceeded", "EnergyReport",
    "FluxModel", "InitialDatum", "KernelResult", "MetricAccumulator",
    "NonMonotoneX", "PhysicalField", "RunConfig", "RunTrace", "Scenario",
    "StateDerivative", "StepBlowUp", "Tolerances", "antipeakon_pair",
    "auto_dt", "build_energy_report", "builtin_model", "camassa_holm",
    "classical_rhs", "classical_run", "coordinate_of", "cumulative_metric",
    "custom_file", "datum_energy", "energy_char", "energy_physical",
    "energy_physical_from_state",
    "gaussian", "generalized_rod", "holder_check", "identity_suite",
    "initial_state", "kernel_bound_report", "make_scenario", "norm_X",
    "peakon", "rhs", "rod", "run", "sample_datum", "source_terms",
    "source_terms_physical", "step_rk4", "theta_sampler", "to_characteristic",
    "to_physical", "zero",
]
