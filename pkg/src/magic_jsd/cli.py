"""Command-line front end (``magic-jsd``).

Exit codes: 0 success, 1 failed verification, 2 bad input, 3 parameter
domain error (alpha = 1, beta = 0, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import stabilizer as stab
from .core import DensityMatrix, ParamPair, PureState
from .entropy import quantum_entropy, quantum_relative_entropy
from .errors import DomainError, MagicJSDError, ValidationError
from .gate_power import PSI0, gate_power, t_gate
from .jsd import jsd_J, jsd_Jprime
from .jsonio import matrix_from_json, state_from_json
from .magic import magic_M_pure, magic_m_pure, magic_mixed_upper_bound
from .scans import (
    EXAMPLE1_PHI,
    EXAMPLE1_THETA,
    EXAMPLE2_ALPHA,
    EXAMPLE2_BETA,
    EXAMPLE3_ALPHA,
    EXAMPLE3_BETA,
    HEADERS,
    GridSpec,
    scan_example1,
    scan_example2,
    scan_example3,
    to_csv,
    worker_count,
)
from .verify import DEFAULT_SAMPLES, DEFAULT_SEED, format_report, run_suite

KINDS = ("entropy", "relent", "jsd", "jsdprime", "magicM", "magicm", "robustness", "gatepower")
_R2 = 1 / np.sqrt(2)


def _state_presets():
    return {
        "zero": PureState([1, 0]),
        "one": PureState([0, 1]),
        "plus": PureState([_R2, _R2]),
        "minus": PureState([_R2, -_R2]),
        "plus_i": PureState([_R2, 1j * _R2]),
        "minus_i": PureState([_R2, -1j * _R2]),
        "T": stab.t_type_state(0, 0),
        "qutrit_T": stab.qutrit_T_state(),
        "psi0": PSI0,
        "mixed2": DensityMatrix.maximally_mixed(2),
    }


def _gate_presets():
    return {
        "I": np.eye(2, dtype=complex),
        "X": stab.PAULI["X"],
        "Z": stab.PAULI["Z"],
        "H": stab.HADAMARD,
        "S": stab.PHASE_S,
        "T": t_gate(1.0),
        "T^1/2": t_gate(0.5),
        "T^1/4": t_gate(0.25),
    }


class InputError(ValidationError):
    pass


def _load_json_arg(inline, path, what):
    if inline is not None and path is not None:
        raise InputError(f"give either --{what} or --{what}-file, not both")
    if path is not None:
        try:
            return Path(path).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
    return inline


def _parse_state(inline, path, what="state"):
    text = _load_json_arg(inline, path, what)
    if text is None:
        raise InputError(f"--{what} or --{what}-file is required")
    presets = _state_presets()
    if text in presets:
        return presets[text]
    return state_from_json(text)


def _parse_gate(inline, path):
    text = _load_json_arg(inline, path, "gate")
    if text is None:
        raise InputError("--gate or --gate-file is required")
    presets = _gate_presets()
    if text in presets:
        return presets[text]
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid gate JSON: {exc}") from exc
    return matrix_from_json(obj)


def _params(args) -> ParamPair:
    if args.alpha is None or args.beta is None:
        raise InputError("--alpha and --beta are required for this kind")
    return ParamPair(args.alpha, args.beta)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False) + "\n"


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text, newline="\n")
    else:
        sys.stdout.write(text)


def cmd_eval(args) -> int:
    kind = args.kind
    res: dict = {"kind": kind, "alpha": args.alpha, "beta": args.beta}
    if kind == "robustness":
        rho = _parse_state(args.state, args.state_file)
        res["value"] = stab.qubit_robustness(rho)
        res["bloch"] = list(stab.bloch_vector(rho).r)
    elif kind == "gatepower":
        p = _params(args)
        r = gate_power(_parse_gate(args.gate, args.gate_file), p)
        res.update(value=r.value, C_U=r.C_U, worst_input_label=r.worst_input_label, best_output_label=r.best_output_label)
    elif kind in ("magicM", "magicm"):
        p = _params(args)
        st = _parse_state(args.state, args.state_file)
        if isinstance(st, DensityMatrix) and st.rank == 1:
            v = st.spectrum.eigenvectors[:, 0]
            st = PureState(stab.canonical_phase(v), normalize=True)
        if isinstance(st, PureState):
            r = (magic_M_pure if kind == "magicM" else magic_m_pure)(st, p)
            res.update(value=r.value, c_psi=r.c_psi, witness=r.argmax_label, witnesses=list(r.witnesses))
        else:
            if kind == "magicm":
                raise InputError("magicm is only available for pure states")
            res["value"] = magic_mixed_upper_bound(st, p, trials=args.trials, seed=args.seed)
            res.update(upper_bound=True, trials=args.trials, seed=args.seed)
    else:
        p = _params(args)
        rho = _parse_state(args.state, args.state_file)
        if kind == "entropy":
            res["value"] = quantum_entropy(rho, p)
        else:
            sig = _parse_state(args.state2, args.state2_file, "state2")
            if kind == "relent":
                value, flag = quantum_relative_entropy(rho, sig, p, with_flag=True)
                res.update(value=value, support_mismatch=flag)
            elif kind == "jsd":
                res["value"] = jsd_J(rho, sig, p)
            else:
                res["value"] = jsd_Jprime(rho, sig, p)
    res["value"] = float(res["value"]) + 0.0
    _write(_dump(res), args.out)
    return 0


def _grids(args, defaults):
    by_var = {g.var: g for g in defaults}
    for text in args.grid or []:
        g = GridSpec.parse(text)
        if g.var not in by_var:
            raise InputError(f"unknown grid variable {g.var!r}; expected one of {sorted(by_var)}")
        by_var[g.var] = GridSpec(g.var, g.start, g.stop, g.steps, g.open_end, by_var[g.var].exclude)
    return [by_var[g.var] for g in defaults]


def _emit_rows(name, rows, args):
    header = HEADERS[name]
    if args.format == "json":
        recs = [dict(zip(header, (bool(x) if isinstance(x, (bool, np.bool_)) else float(x) for x in r))) for r in rows]
        text = json.dumps({"scan": name, "rows": recs}) + "\n"
    else:
        text = to_csv(header, rows)
    _write(text, args.out)


def cmd_scan1(args) -> int:
    th, ph = _grids(args, [EXAMPLE1_THETA, EXAMPLE1_PHI])
    rows = scan_example1(_params(args), th, ph, workers=worker_count())
    _emit_rows("example1", rows, args)
    return 0


def cmd_scan2(args) -> int:
    al, be = _grids(args, [EXAMPLE2_ALPHA, EXAMPLE2_BETA])
    _emit_rows("example2", scan_example2(al, be, workers=worker_count()), args)
    return 0


def cmd_scan3(args) -> int:
    al, be = _grids(args, [EXAMPLE3_ALPHA, EXAMPLE3_BETA])
    for a in al.values():
        for b in be.values():
            ParamPair(a, b)
            if not (1 < a < 2 and b < 1):
                raise DomainError(f"example 3 needs 1 < alpha < 2 and beta < 1, got ({a}, {b})")
    _emit_rows("example3", scan_example3(al, be, workers=worker_count()), args)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, seed=args.seed, samples=args.samples)
    js = json.dumps(report, indent=2) + "\n"
    if args.format == "json":
        sys.stdout.write(js)
    else:
        sys.stdout.write(format_report(report))
        sys.stdout.write(js)
    if args.out:
        Path(args.out).write_text(js, newline="\n")
    return 0 if report["failed"] == 0 else 1


def cmd_export(args) -> int:
    S = stab.pure_stabilizer_set(args.d, args.n)
    _write(S.dumps(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="magic-jsd", description="(alpha, beta) Jensen-Shannon divergences and magic monotones")
    sub = ap.add_subparsers(dest="verb", required=True)

    e = sub.add_parser("eval", help="evaluate one quantity and print JSON")
    e.add_argument("--kind", required=True, choices=KINDS)
    e.add_argument("--state", help="inline state JSON or a preset name (zero, one, plus, minus, plus_i, minus_i, T, qutrit_T, psi0, mixed2)")
    e.add_argument("--state-file")
    e.add_argument("--state2", help="second state for relent / jsd / jsdprime")
    e.add_argument("--state2-file")
    e.add_argument("--gate", help="inline gate JSON {dim, rows} or a preset (I, X, Z, H, S, T, T^1/2, T^1/4)")
    e.add_argument("--gate-file")
    e.add_argument("--alpha", type=float)
    e.add_argument("--beta", type=float)
    e.add_argument("--trials", type=int, default=2000, help="random decompositions for mixed-state magic (default 2000)")
    e.add_argument("--seed", type=int, default=DEFAULT_SEED)
    e.add_argument("--out")
    e.set_defaults(func=cmd_eval)

    for name, func, helptext, defaults in (
        ("scan-example1", cmd_scan1, "q_max and M over the qubit Bloch sphere", "theta:0:pi:200, phi:0:2*pi:200:open"),
        ("scan-example2", cmd_scan2, "M and m of the qutrit T state over (alpha, beta)", "alpha:0.025:1.975:40, beta:-19.5:19.5:40"),
        ("scan-example3", cmd_scan3, "magic boost of T^(1/4) over (alpha, beta)", "alpha:1.02:1.98:50, beta:-4.94:0.94:50"),
    ):
        s = sub.add_parser(name, help=helptext)
        if name == "scan-example1":
            s.add_argument("--alpha", type=float, required=True)
            s.add_argument("--beta", type=float, required=True)
        s.add_argument("--grid", action="append", help=f"var:start:stop:steps[:open], repeatable (defaults {defaults})")
        s.add_argument("--format", choices=("csv", "json"), default="csv")
        s.add_argument("--out")
        s.set_defaults(func=func)

    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("--suite", choices=("entropy", "jsd", "magic", "gatepower", "stabilizer", "all"), default="all")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", help="also write the JSON report here")
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("export-stabilizers", help="write a stabilizer set as JSON")
    x.add_argument("--d", type=int, required=True)
    x.add_argument("--n", type=int, default=1)
    x.add_argument("--out")
    x.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream reader closed early (e.g. `| head`)
        sys.stdout = open(os.devnull, "w")
        return 0
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MagicJSDError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
