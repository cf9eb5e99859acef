"""JSON encoding of states.

A density matrix is ``{"dim": n, "rows": [[[re, im], ...], ...]}`` and a
pure state is ``{"dim": n, "amps": [[re, im], ...]}``. Unitaries use the
same ``rows`` layout.
"""

from __future__ import annotations

import json

import numpy as np

from .core import DensityMatrix, PureState
from .errors import InvalidState, ValidationError


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _complex_list(items, what: str) -> np.ndarray:
    try:
        arr = np.array(items, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InvalidState(f"{what}: entries must be [re, im] pairs") from exc
    if arr.ndim < 1 or arr.shape[-1] != 2:
        raise InvalidState(f"{what}: entries must be [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def state_to_json(state) -> dict:
    if isinstance(state, PureState):
        return {"dim": state.dim, "amps": [_pair(z) for z in state.amps]}
    m = state.matrix if isinstance(state, DensityMatrix) else np.asarray(state)
    return {"dim": int(m.shape[0]), "rows": [[_pair(z) for z in row] for row in m]}


def matrix_from_json(obj: dict) -> np.ndarray:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise InvalidState('matrix JSON needs a "rows" field')
    m = _complex_list(obj["rows"], "rows")
    dim = obj.get("dim", m.shape[0])
    if m.ndim != 2 or m.shape != (dim, dim):
        raise InvalidState(f"rows do not form a {dim}x{dim} matrix")
    return m


def state_from_json(obj):
    """PureState for ``amps`` payloads, DensityMatrix for ``rows``."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InvalidState("state JSON must be an object")
    if "amps" in obj:
        v = _complex_list(obj["amps"], "amps")
        if v.ndim != 1 or ("dim" in obj and v.size != obj["dim"]):
            raise InvalidState("amps length does not match dim")
        return PureState(v)
    return DensityMatrix(matrix_from_json(obj))
