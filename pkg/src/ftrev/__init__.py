"""Parity-preserving reversible logic: gates, adders, simulation and fault analysis."""
from .circuit import (Circuit, CircuitError, Constant, GateApp, Garbage, NamedInput,
                      NamedOutput, assemble, validate)
from .gates import CostTriple, GateKind, apply, check_gate, cost, truth_table
from .synth import (build_bcd_chain, build_bcd_digit, build_ftfa, build_ripple,
                    realize_boolean, search_realization)

__version__ = "0.1.0"
