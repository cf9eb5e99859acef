"""Parameter grids and the three worked-example scans, emitted as CSV rows."""

from __future__ import annotations

import ast
import io
import operator
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import ParamPair
from .gate_power import boost_demo
from .magic import magic_from_overlap, magic_M_pure, magic_m_pure, qubit_qmax
from .stabilizer import pure_stabilizer_set, qutrit_T_state

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def parse_number(text: str) -> float:
    """Float literal or arithmetic in ``pi`` such as ``2*pi`` or ``pi/2``."""

    def ev(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return float(np.pi)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        raise ValueError(f"unsupported number expression: {text!r}")

    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"bad number: {text!r}") from exc
    return ev(tree.body)


@dataclass(frozen=True)
class GridSpec:
    """One axis: ``steps`` evenly spaced points on [start, stop], or on
    [start, stop) when ``open_end``. ``exclude`` points are dropped."""

    var: str
    start: float
    stop: float
    steps: int
    open_end: bool = False
    exclude: tuple[float, ...] = ()

    def __post_init__(self):
        if self.steps < 2:
            raise ValueError("a grid axis needs at least 2 steps")

    @classmethod
    def parse(cls, text: str, exclude: tuple[float, ...] = ()) -> "GridSpec":
        """Parse ``var:start:stop:steps[:open]``."""
        parts = text.split(":")
        if len(parts) not in (4, 5) or (len(parts) == 5 and parts[4] != "open"):
            raise ValueError(f"grid must look like var:start:stop:steps[:open], got {text!r}")
        try:
            steps = int(parts[3])
        except ValueError as exc:
            raise ValueError(f"grid steps must be an integer, got {parts[3]!r}") from exc
        return cls(parts[0], parse_number(parts[1]), parse_number(parts[2]), steps, len(parts) == 5, exclude)

    def values(self) -> np.ndarray:
        v = np.linspace(self.start, self.stop, self.steps, endpoint=not self.open_end)
        for x in self.exclude:
            v = v[np.abs(v - x) > 1e-12]
        return v


EXAMPLE1_THETA = GridSpec("theta", 0.0, np.pi, 200)
EXAMPLE1_PHI = GridSpec("phi", 0.0, 2 * np.pi, 200, open_end=True)
EXAMPLE2_ALPHA = GridSpec("alpha", 0.025, 1.975, 40, exclude=(1.0,))
EXAMPLE2_BETA = GridSpec("beta", -19.5, 19.5, 40, exclude=(0.0,))
EXAMPLE3_ALPHA = GridSpec("alpha", 1.02, 1.98, 50, exclude=(1.0,))
EXAMPLE3_BETA = GridSpec("beta", -4.94, 0.94, 50, exclude=(0.0,))


def worker_count() -> int:
    env = os.environ.get("MAGIC_JSD_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _map_ordered(fn, items, workers: int | None):
    """``[fn(x) for x in items]``, optionally spread over threads; order is kept."""
    workers = worker_count() if workers is None else workers
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def scan_example1(p: ParamPair, theta: GridSpec = EXAMPLE1_THETA, phi: GridSpec = EXAMPLE1_PHI, workers: int | None = 1):
    """Rows (theta, phi, q_max, M) over the Bloch sphere."""
    S = pure_stabilizer_set(2, 1)
    phis = phi.values()

    def row_block(t):
        # One theta row at a time: the same overlap -> M path as magic_M_pure.
        amps = np.stack([np.full(phis.size, np.cos(t / 2)), np.exp(1j * phis) * np.sin(t / 2)])
        c = np.minimum(np.abs(S.matrix.conj() @ amps).max(axis=0), 1.0)
        ms = magic_from_overlap(c, p)
        qs = qubit_qmax(t, phis)
        return [(float(t), float(f), float(q), float(m)) for f, q, m in zip(phis, qs, ms)]

    blocks = _map_ordered(row_block, theta.values(), workers)
    return [r for b in blocks for r in b]


def scan_example2(alpha: GridSpec = EXAMPLE2_ALPHA, beta: GridSpec = EXAMPLE2_BETA, workers: int | None = 1):
    """Rows (alpha, beta, M_T, m_T) for the qutrit T state."""
    S = pure_stabilizer_set(3, 1)
    t = qutrit_T_state()
    betas = beta.values()

    def row_block(a):
        out = []
        for b in betas:
            p = ParamPair(a, b)
            out.append((float(a), float(b), magic_M_pure(t, p, S).value, magic_m_pure(t, p, S).value))
        return out

    blocks = _map_ordered(row_block, alpha.values(), workers)
    return [r for b in blocks for r in b]


def scan_example3(alpha: GridSpec = EXAMPLE3_ALPHA, beta: GridSpec = EXAMPLE3_BETA, workers: int | None = 1):
    """Rows (alpha, beta, delta, power, boosted) for the T^(1/4) boost."""
    betas = beta.values()

    def row_block(a):
        out = []
        for b in betas:
            r = boost_demo(ParamPair(a, b))
            out.append((float(a), float(b), r.delta, r.power, r.boosted))
        return out

    blocks = _map_ordered(row_block, alpha.values(), workers)
    return [r for b in blocks for r in b]


HEADERS = {
    "example1": ("theta", "phi", "q_max", "M"),
    "example2": ("alpha", "beta", "M_T", "m_T"),
    "example3": ("alpha", "beta", "delta", "power", "boosted"),
}


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    return format(float(x), ".17g")


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for r in rows:
        buf.write(",".join(_fmt(x) for x in r) + "\n")
    return buf.getvalue()
