"""Exact simulation of reversible circuits.

States are held as ``uint8`` matrices of shape ``(width, n)``: one row per
line, one column per simulated vector.  Gate transfer functions are applied
to whole rows at once, which is what makes exhaustive sweeps cheap.
"""
from __future__ import annotations

import os
from typing import Mapping, NamedTuple, Sequence

import numpy as np

from .circuit import Circuit, Constant, Garbage, NamedInput, NamedOutput
from .gates import inverse_permutation, spec

DEFAULT_CAP = 20


class CapExceeded(ValueError):
    """An exhaustive sweep would exceed the configured width cap."""


def max_width() -> int:
    return int(os.environ.get("RL_MAX_WIDTH", DEFAULT_CAP))


def _check_cap(n: int, cap: int | None, what: str):
    cap = max_width() if cap is None else cap
    if n > cap:
        raise CapExceeded(f"{what} {n} exceeds exhaustive cap {cap}")


def int_bits(values, width: int) -> np.ndarray:
    """Bit matrix ``(width, len(values))``, most significant bit in row 0."""
    values = np.asarray(values, dtype=np.int64)
    shifts = np.arange(width - 1, -1, -1, dtype=np.int64)
    return ((values[None, :] >> shifts[:, None]) & 1).astype(np.uint8)


def bits_int(matrix: np.ndarray) -> np.ndarray:
    """Inverse of :func:`int_bits`."""
    width = matrix.shape[0]
    weights = (1 << np.arange(width - 1, -1, -1, dtype=np.int64))
    return weights @ matrix.astype(np.int64)


def all_states(width: int) -> np.ndarray:
    return int_bits(np.arange(2 ** width), width)


def _apply_inverse(kind, cols):
    inv = np.asarray(inverse_permutation(kind), dtype=np.int64)
    idx = bits_int(np.stack(cols))
    return list(int_bits(inv[idx], len(cols)))


def run_batch(circuit: Circuit, states: np.ndarray, start: int = 0,
              stop: int | None = None, inverse: bool = False) -> np.ndarray:
    """Apply gates ``start:stop`` to every column of ``states``.

    With ``inverse=True`` each gate is replaced by its inverse permutation,
    so running the mirrored circuit this way undoes the forward run.
    """
    states = np.array(states, dtype=np.uint8, copy=True)
    if states.ndim == 1:
        states = states[:, None]
    if states.shape[0] != circuit.width:
        raise ValueError(f"state has {states.shape[0]} lines, circuit has {circuit.width}")
    for g in circuit.gates[start:stop]:
        cols = [states[i] for i in g.lines]
        out = _apply_inverse(g.kind, cols) if inverse else spec(g.kind).fn(*cols)
        for i, v in zip(g.lines, out):
            states[i] = v
    return states


def run_full(circuit: Circuit, state: Sequence[int]) -> tuple[int, ...]:
    """Raw permutation of one full-width assignment; roles are ignored."""
    if len(state) != circuit.width:
        raise ValueError(f"state has {len(state)} bits, circuit width is {circuit.width}")
    out = run_batch(circuit, np.asarray(state, dtype=np.uint8)[:, None])
    return tuple(int(b) for b in out[:, 0])


def input_states(circuit: Circuit, named: Mapping[str, object]) -> np.ndarray:
    """Full-width states with constants injected; values may be bits or arrays."""
    expected = set(circuit.input_names)
    missing = expected - set(named)
    unknown = set(named) - expected
    if missing or unknown:
        raise KeyError(f"missing inputs {sorted(missing)}, unknown inputs {sorted(unknown)}")
    n = max((np.size(v) for v in named.values()), default=1)
    states = np.zeros((circuit.width, n), dtype=np.uint8)
    for i, role in enumerate(circuit.inputs):
        if isinstance(role, Constant):
            states[i] = role.value
        else:
            states[i] = np.asarray(named[role.name], dtype=np.uint8)
    return states


class SimResult(NamedTuple):
    named_outputs: dict
    garbage: tuple


def split_outputs(circuit: Circuit, states: np.ndarray):
    named = {r.name: states[i] for i, r in enumerate(circuit.outputs)
             if isinstance(r, NamedOutput)}
    garbage = states[[i for i, r in enumerate(circuit.outputs) if isinstance(r, Garbage)]]
    return named, garbage


def simulate(circuit: Circuit, named_inputs: Mapping[str, int]) -> SimResult:
    states = run_batch(circuit, input_states(circuit, named_inputs))
    named, garbage = split_outputs(circuit, states)
    return SimResult({k: int(v[0]) for k, v in named.items()},
                     tuple(int(b) for b in garbage[:, 0]))


def simulate_batch(circuit: Circuit, named_inputs: Mapping[str, np.ndarray]):
    """Vector version of :func:`simulate`: returns (dict of arrays, garbage matrix)."""
    return split_outputs(circuit, run_batch(circuit, input_states(circuit, named_inputs)))


def named_input_sweep(circuit: Circuit, cap: int | None = None) -> dict[str, np.ndarray]:
    """Every assignment of the named inputs in ascending binary order."""
    names = circuit.input_names
    _check_cap(len(names), cap, "named input count")
    bits = all_states(len(names))
    return {n: bits[i] for i, n in enumerate(names)}


class TableRow(NamedTuple):
    inputs: dict
    outputs: dict
    garbage: tuple


def truth_table(circuit: Circuit, cap: int | None = None) -> list[TableRow]:
    sweep = named_input_sweep(circuit, cap)
    named, garbage = simulate_batch(circuit, sweep)
    n = 2 ** len(sweep)
    return [TableRow({k: int(v[j]) for k, v in sweep.items()},
                     {k: int(v[j]) for k, v in named.items()},
                     tuple(int(b) for b in garbage[:, j]))
            for j in range(n)]


def format_table(circuit: Circuit, cap: int | None = None) -> str:
    ins = circuit.input_names
    outs = circuit.output_names
    header = ins + ["|"] + outs + (["|", "garbage"] if circuit.n_garbage else [])
    rows = [header]
    for r in truth_table(circuit, cap):
        line = [str(r.inputs[k]) for k in ins] + ["|"] + [str(r.outputs[k]) for k in outs]
        if circuit.n_garbage:
            line += ["|", "".join(map(str, r.garbage))]
        rows.append(line)
    widths = [max(len(row[c]) for row in rows) for c in range(len(header))]
    return "\n".join(" ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
                     for row in rows) + "\n"


def check_bijective(circuit: Circuit, cap: int | None = None) -> bool:
    _check_cap(circuit.width, cap, "width")
    out = bits_int(run_batch(circuit, all_states(circuit.width)))
    return np.unique(out).size == 2 ** circuit.width


class ParityCheck(NamedTuple):
    preserving: bool
    counterexample: tuple | None


def check_parity(circuit: Circuit, cap: int | None = None,
                 constants_fixed: bool = False) -> ParityCheck:
    """Compare XOR of all lines before and after the circuit.

    By default every one of the ``2**width`` states is tried.  With
    ``constants_fixed`` only the named inputs are swept, constants injected,
    which keeps wide circuits tractable.
    """
    if constants_fixed:
        states = input_states(circuit, named_input_sweep(circuit, cap))
    else:
        _check_cap(circuit.width, cap, "width")
        states = all_states(circuit.width)
    out = run_batch(circuit, states)
    bad = np.flatnonzero(states.sum(axis=0) % 2 != out.sum(axis=0) % 2)
    if bad.size:
        return ParityCheck(False, tuple(int(b) for b in states[:, bad[0]]))
    return ParityCheck(True, None)


def inverse_identity(circuit: Circuit, cap: int | None = None) -> bool:
    """Forward run followed by the mirrored inverse run restores every state."""
    _check_cap(circuit.width, cap, "width")
    states = all_states(circuit.width)
    back = run_batch(circuit.mirror(), run_batch(circuit, states), inverse=True)
    return bool(np.array_equal(back, states))
