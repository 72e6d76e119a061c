"""Thermodynamics of systems with deformed commutation relations."""

from ._core import (
    InvalidArgument,
    Method,
    MinlenError,
    NonConvergence,
    ThermoPoint,
    energy_nl,
    high_t_ideal_gas,
    ideal_gas_pressure,
    ideal_gas_thermo,
    jacobian_generic,
    kempf_jacobian,
    oscillator_thermo,
    pairing_count,
    power_law_thermo,
    quantum_oscillator_thermo,
    sweep_csv,
)

__all__ = [
    "InvalidArgument",
    "Method",
    "MinlenError",
    "NonConvergence",
    "ThermoPoint",
    "energy_nl",
    "high_t_ideal_gas",
    "ideal_gas_pressure",
    "ideal_gas_thermo",
    "jacobian_generic",
    "kempf_jacobian",
    "oscillator_thermo",
    "pairing_count",
    "power_law_thermo",
    "quantum_oscillator_thermo",
    "sweep_csv",
]
