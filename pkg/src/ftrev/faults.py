"""Single-signal bit-flip injection and parity-based detection.

A fault site ``(step, line)`` inverts one line after the first ``step`` gate
applications: step 0 corrupts a circuit input, ``step == len(gates)`` a
circuit output.  A fault is detected when the XOR over every output line
(named and garbage) differs from the XOR over every input line (named and
constant).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple

import numpy as np

from .circuit import Circuit, NamedOutput
from .sim import SimResult, input_states, named_input_sweep, run_batch, split_outputs


class FaultSite(NamedTuple):
    step: int
    line: int


@dataclass
class FaultReport:
    total_pairs: int
    detected: int
    coverage: float
    undetected: list = field(default_factory=list)
    observable_coverage: float = 0.0

    def to_dict(self) -> dict:
        return {
            "total_pairs": self.total_pairs,
            "detected": self.detected,
            "coverage": self.coverage,
            "undetected": [{"site": {"step": s.step, "line": s.line}, "inputs": list(v)}
                           for s, v in self.undetected],
            "observable_coverage": self.observable_coverage,
        }


def sites(circuit: Circuit) -> list[FaultSite]:
    return [FaultSite(step, line)
            for step in range(len(circuit.gates) + 1)
            for line in range(circuit.width)]


def _check_site(circuit: Circuit, site: FaultSite):
    step, line = site
    if not (0 <= step <= len(circuit.gates) and 0 <= line < circuit.width):
        raise ValueError(f"fault site {tuple(site)} out of range for "
                         f"{len(circuit.gates)} gates x {circuit.width} lines")


def inject(circuit: Circuit, states: np.ndarray, *faults: FaultSite) -> np.ndarray:
    """Run ``states`` through the circuit flipping each listed site on the way."""
    for site in faults:
        _check_site(circuit, site)
    states = np.array(states, dtype=np.uint8, copy=True)
    step = 0
    for site in sorted(faults):
        states = run_batch(circuit, states, step, site.step)
        states[site.line] ^= 1
        step = site.step
    return run_batch(circuit, states, step)


def run_with_fault(circuit: Circuit, named_inputs: Mapping[str, int],
                   site: FaultSite) -> SimResult:
    out = inject(circuit, input_states(circuit, named_inputs), FaultSite(*site))
    named, garbage = split_outputs(circuit, out)
    return SimResult({k: int(v[0]) for k, v in named.items()},
                     tuple(int(b) for b in garbage[:, 0]))


def coverage(circuit: Circuit, cap: int | None = None) -> FaultReport:
    """Exhaustive detectability over every (site, named-input vector) pair."""
    sweep = named_input_sweep(circuit, cap)
    start = input_states(circuit, sweep)
    n_vec = start.shape[1]
    in_parity = start.sum(axis=0) % 2
    named_rows = [i for i, r in enumerate(circuit.outputs) if isinstance(r, NamedOutput)]
    golden = run_batch(circuit, start)[named_rows]
    vectors = np.stack(list(sweep.values())) if sweep else np.zeros((0, n_vec), np.uint8)

    detected = observable = 0
    undetected = []
    prefix = start
    for step in range(len(circuit.gates) + 1):
        if step:
            prefix = run_batch(circuit, prefix, step - 1, step)
        for line in range(circuit.width):
            faulty = prefix.copy()
            faulty[line] ^= 1
            out = run_batch(circuit, faulty, step)
            hit = out.sum(axis=0) % 2 != in_parity
            detected += int(hit.sum())
            observable += int((out[named_rows] != golden).any(axis=0).sum())
            for j in np.flatnonzero(~hit):
                undetected.append((FaultSite(step, line),
                                   tuple(int(b) for b in vectors[:, j])))
    total = len(sites(circuit)) * n_vec
    return FaultReport(total, detected, detected / total, undetected, observable / total)
