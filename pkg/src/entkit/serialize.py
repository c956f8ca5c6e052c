"""JSON state documents shared by the library and the command line.

Schema::

    {"dims": [2, 2], "type": "pure",  "amplitudes": [[re, im], ...]}
    {"dims": [2, 2], "type": "mixed", "matrix": [[[re, im], ...], ...]}

with optional ``"name"`` and ``"note"`` string fields.  Amplitudes are flat
and row-major; matrix rows are lists of ``[re, im]`` pairs.  Floats are
emitted with ``repr`` precision, so a round trip is lossless at double
precision.
"""

from __future__ import annotations

import json
from typing import IO

import numpy as np

from .states import DensityMatrix, PureState, State


def _pairs(values: np.ndarray) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in values]


def to_document(state: State, name: str | None = None, note: str | None = None) -> dict:
    """Serializable dict for a pure or mixed state."""
    doc: dict = {"dims": list(state.dims)}
    if isinstance(state, PureState):
        doc["type"] = "pure"
        doc["amplitudes"] = _pairs(state.amplitudes)
    elif isinstance(state, DensityMatrix):
        doc["type"] = "mixed"
        doc["matrix"] = [_pairs(row) for row in state.matrix]
    else:
        raise TypeError(f"expected PureState or DensityMatrix, got {type(state)!r}")
    if name is not None:
        doc["name"] = str(name)
    if note is not None:
        doc["note"] = str(note)
    return doc


def from_document(doc: dict) -> State:
    """Rebuild a state, revalidating all type invariants."""
    if not isinstance(doc, dict):
        raise ValueError("state document must be a JSON object")
    try:
        dims = tuple(int(d) for d in doc["dims"])
        kind = doc["type"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"missing or malformed document field: {exc}") from exc
    if kind == "pure":
        if "amplitudes" not in doc:
            raise ValueError("pure document lacks 'amplitudes'")
        amp = np.array([complex(re, im) for re, im in doc["amplitudes"]])
        return PureState(amp, dims)
    if kind == "mixed":
        if "matrix" not in doc:
            raise ValueError("mixed document lacks 'matrix'")
        mat = np.array(
            [[complex(re, im) for re, im in row] for row in doc["matrix"]]
        )
        return DensityMatrix(mat, dims)
    raise ValueError(f"unknown state type {kind!r}")


def dump_state(state: State, fp: IO[str], name: str | None = None) -> None:
    json.dump(to_document(state, name=name), fp, indent=1)
    fp.write("\n")


def load_state(fp: IO[str]) -> State:
    return from_document(json.load(fp))
