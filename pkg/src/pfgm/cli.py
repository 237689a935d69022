"""Command-line interface.

Every subcommand prints exactly one JSON object to standard output and
exits 0 (success), 1 (input error), or 2 (computational refusal: an
enumeration or work cap would be exceeded, or a certificate was demanded
where none exists). Complex numbers serialize as {"re": x, "im": y};
an infinite beta prints as "unbounded" and a missing certificate as
error_bound "none". Output is deterministic: same inputs (and seed, where
one applies) give byte-identical bytes.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import sys

import numpy as np

from .apps import (
    clique_density_sum,
    coloring_partition,
    distinguish_independent,
    evaluate_instance,
    hafnian,
    hamiltonian_cycle_count,
    hamiltonian_permanent,
    independent_set_instance,
)
from .errors import InputError, PfgmError, RefusalError, WorkCapExceededError
from .exact import exact_partition
from .graph import graph_from_json, validate_multiplicities
from .taylor import DEFAULT_WORK_BUDGET, approximate_log_partition
from .weights import _entry_from_json, deviation, weights_from_json
from .zeros import GAMMA_DEFAULT, compute_beta, polydisc_scan, root_margin

# Target log error used by adapter subcommands that take no --eps flag.
DEFAULT_EPSILON = 0.1

# exp(log) overflows past ~709.78; stay clear of it.
_EXP_SAFE = 700.0


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(message)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}")


def parse_matrix(path: str) -> np.ndarray:
    """Load {"n": n, "entries": [[...], ...]} as a symmetric complex matrix."""
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: matrix document must be an object")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise InputError(f'{path}: "n": expected a positive integer, got {n!r}')
    entries = doc.get("entries")
    if not isinstance(entries, list) or len(entries) != n:
        raise InputError(f'{path}: "entries": expected {n} rows')
    arr = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"{path}: entries[{i}]: expected {n} values")
        for j, x in enumerate(row):
            arr[i, j] = _entry_from_json(x, f"entries[{i}][{j}]")
    if not np.array_equal(arr, arr.T):
        raise InputError(f"{path}: matrix is not symmetric")
    return arr


def _parse_mult(text: str) -> list[int]:
    try:
        counts = [int(part.strip()) for part in text.split(",")]
    except ValueError:
        raise InputError(f"--mult: expected comma-separated integers, got {text!r}")
    if 0 in counts:
        print("warning: --mult has zero entries; certified guarantees assume "
              "all-positive class sizes", file=sys.stderr)
    return counts


def _work_budget() -> float:
    raw = os.environ.get("PFGM_WORK_CAP")
    if raw is None:
        return DEFAULT_WORK_BUDGET
    try:
        value = float(raw)
    except ValueError:
        raise InputError(f"PFGM_WORK_CAP: expected a number, got {raw!r}")
    if not value >= 1:
        raise InputError(f"PFGM_WORK_CAP: must be >= 1, got {raw!r}")
    return value


def _complex_doc(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _result(command: str, *, value=None, value_log=None, error_bound=None,
            order=None, beta=None, diagnostics=None) -> dict:
    doc: dict = {"command": command}
    if value is not None:
        doc["value"] = _complex_doc(complex(value))
    if value_log is not None:
        doc["value_log"] = _complex_doc(complex(value_log))
    if error_bound is None or math.isinf(error_bound):
        doc["error_bound"] = "none"
    else:
        doc["error_bound"] = float(error_bound)
    if order is not None:
        doc["order"] = int(order)
    if beta is not None:
        doc["beta"] = "unbounded" if math.isinf(beta) else float(beta)
    doc["diagnostics"] = diagnostics if diagnostics is not None else {}
    return doc


def _safe_log(q: complex):
    return cmath.log(q) if q != 0 else None


def _safe_exp(logv: complex):
    return cmath.exp(logv) if abs(logv.real) < _EXP_SAFE else None


def _load_instance(args, require_edges: bool = True):
    g = graph_from_json(_load_json(args.graph), require_edges=require_edges)
    m = validate_multiplicities(g, _parse_mult(args.mult))
    return g, m


def _cmd_exact(args) -> dict:
    g, m = _load_instance(args)
    w = weights_from_json(g, _load_json(args.weights))
    q = exact_partition(g, m, w)
    return _result("exact", value=q, value_log=_safe_log(q))


def _cmd_approx(args) -> dict:
    g, m = _load_instance(args)
    w = weights_from_json(g, _load_json(args.weights))
    res = approximate_log_partition(g, m, w, order=args.order, epsilon=args.eps,
                                    work_budget=_work_budget())
    return _result("approx", value=_safe_exp(res.log_value), value_log=res.log_value,
                   error_bound=res.error_bound, order=res.order, beta=res.beta,
                   diagnostics={"support_edges": res.support_count,
                                "log_at_ones": res.log_at_ones})


def _cmd_indep(args) -> dict:
    g = graph_from_json(_load_json(args.graph))
    if args.distinguish:
        if args.edges is None:
            raise InputError("--distinguish requires --edges X (the edge threshold)")
        if args.exact:
            raise InputError("--distinguish cannot be combined with --exact")
        gamma = args.gamma if args.gamma is not None else GAMMA_DEFAULT
        v = distinguish_independent(g, args.size, args.edges, gamma=gamma,
                                    work_budget=_work_budget())
        return _result("indep", error_bound=v.error_bound, order=v.order,
                       diagnostics={"weighted_sum": v.weighted_sum,
                                    "threshold": v.threshold,
                                    "sparse_subset_exists": v.sparse_subset_exists,
                                    "few_independent": v.few_independent,
                                    "gamma": v.gamma, "rel_err": v.rel_err})
    if args.exact:
        mode = "hard" if args.gamma is None else "soft"
        inst = independent_set_instance(
            g, args.size, mode=mode,
            gamma=args.gamma if args.gamma is not None else GAMMA_DEFAULT)
        q = complex(evaluate_instance(inst))
        diag = {"mode": mode, "size": args.size}
        if mode == "soft":
            diag["gamma"] = args.gamma
        return _result("indep", value=q, value_log=_safe_log(q), diagnostics=diag)
    gamma = args.gamma if args.gamma is not None else GAMMA_DEFAULT
    inst = independent_set_instance(g, args.size, mode="soft", gamma=gamma)
    cv = evaluate_instance(inst, epsilon=DEFAULT_EPSILON, work_budget=_work_budget())
    return _result("indep", value=cv.value, value_log=cv.log_value,
                   error_bound=cv.error_bound, order=cv.order, beta=cv.beta,
                   diagnostics={"mode": "soft", "size": args.size, "gamma": gamma,
                                "epsilon": DEFAULT_EPSILON})


def _cmd_hafnian(args) -> dict:
    arr = parse_matrix(args.matrix)
    if args.eps is not None:
        cv = hafnian(arr, epsilon=args.eps, work_budget=_work_budget())
        return _result("hafnian", value=cv.value, value_log=cv.log_value,
                       error_bound=cv.error_bound, order=cv.order, beta=cv.beta)
    q = complex(hafnian(arr))
    return _result("hafnian", value=q, value_log=_safe_log(q))


def _cmd_hamperm(args) -> dict:
    arr = parse_matrix(args.matrix)
    fn = hamiltonian_cycle_count if args.cycles else hamiltonian_permanent
    diag = {"cycles": bool(args.cycles)}
    if args.eps is not None:
        cv = fn(arr, epsilon=args.eps, work_budget=_work_budget())
        return _result("hamperm", value=cv.value, value_log=cv.log_value,
                       error_bound=cv.error_bound, order=cv.order, beta=cv.beta,
                       diagnostics=diag)
    q = complex(fn(arr))
    return _result("hamperm", value=q, value_log=_safe_log(q), diagnostics=diag)


def _cmd_clique(args) -> dict:
    host = graph_from_json(_load_json(args.host), require_edges=False)
    if args.exact:
        value = clique_density_sum(host, args.size, gamma=args.gamma)
        diag = {"mode": "hard" if args.gamma is None else "soft", "size": args.size}
        if args.gamma is not None:
            diag["gamma"] = args.gamma
        q = complex(value)
        return _result("clique", value=q, value_log=_safe_log(q), diagnostics=diag)
    gamma = args.gamma if args.gamma is not None else GAMMA_DEFAULT
    cv = clique_density_sum(host, args.size, gamma=gamma, epsilon=DEFAULT_EPSILON,
                            work_budget=_work_budget())
    return _result("clique", value=cv.value, value_log=cv.log_value,
                   error_bound=cv.error_bound, order=cv.order, beta=cv.beta,
                   diagnostics={"mode": "soft", "size": args.size, "gamma": gamma,
                                "epsilon": DEFAULT_EPSILON})


def _cmd_color(args) -> dict:
    g, m = _load_instance(args)
    if args.exact:
        value = coloring_partition(g, m, gamma=args.gamma)
        diag = {"mode": "hard" if args.gamma is None else "soft"}
        if args.gamma is not None:
            diag["gamma"] = args.gamma
        q = complex(value)
        return _result("color", value=q, value_log=_safe_log(q), diagnostics=diag)
    gamma = args.gamma if args.gamma is not None else GAMMA_DEFAULT
    cv = coloring_partition(g, m, gamma=gamma, epsilon=DEFAULT_EPSILON,
                            work_budget=_work_budget())
    return _result("color", value=cv.value, value_log=cv.log_value,
                   error_bound=cv.error_bound, order=cv.order, beta=cv.beta,
                   diagnostics={"mode": "soft", "gamma": gamma,
                                "epsilon": DEFAULT_EPSILON})


def _cmd_zero_scan(args) -> dict:
    g, m = _load_instance(args)
    report = polydisc_scan(g, m, args.delta, args.trials, args.seed)
    return _result("zero-scan", diagnostics=report.as_dict())


def _cmd_root_margin(args) -> dict:
    g, m = _load_instance(args)
    w = weights_from_json(g, _load_json(args.weights))
    margin = root_margin(g, m, w)
    beta = compute_beta(g, w)
    return _result("root-margin", beta=beta,
                   diagnostics={"root_margin": ("unbounded" if math.isinf(margin)
                                                else margin),
                                "deviation": deviation(w)})


_DISPATCH = {
    "exact": _cmd_exact,
    "approx": _cmd_approx,
    "indep": _cmd_indep,
    "hafnian": _cmd_hafnian,
    "hamperm": _cmd_hamperm,
    "clique": _cmd_clique,
    "color": _cmd_color,
    "zero-scan": _cmd_zero_scan,
    "root-margin": _cmd_root_margin,
}


def _build_parser() -> _Parser:
    p = _Parser(prog="pfgm",
                description="Constrained graph homomorphism partition sums: "
                            "exact enumeration, certified series approximation, "
                            "and counting adapters.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("exact", help="enumerate the constrained partition sum")
    sp.add_argument("--graph", required=True, metavar="FILE")
    sp.add_argument("--mult", required=True, metavar="CSV")
    sp.add_argument("--weights", required=True, metavar="FILE")

    sp = sub.add_parser("approx", help="series approximation with certificate")
    sp.add_argument("--graph", required=True, metavar="FILE")
    sp.add_argument("--mult", required=True, metavar="CSV")
    sp.add_argument("--weights", required=True, metavar="FILE")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--order", type=int, metavar="N")
    grp.add_argument("--eps", type=float, metavar="X")

    sp = sub.add_parser("indep", help="independent-set counting and discrimination")
    sp.add_argument("--graph", required=True, metavar="FILE")
    sp.add_argument("--size", required=True, type=int, metavar="S")
    sp.add_argument("--gamma", type=float, metavar="G")
    sp.add_argument("--exact", action="store_true")
    sp.add_argument("--distinguish", action="store_true")
    sp.add_argument("--edges", type=float, metavar="X")

    sp = sub.add_parser("hafnian", help="hafnian / perfect matching sum")
    sp.add_argument("--matrix", required=True, metavar="FILE")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--exact", action="store_true")
    grp.add_argument("--eps", type=float, metavar="X")

    sp = sub.add_parser("hamperm", help="single-cycle permutation sum")
    sp.add_argument("--matrix", required=True, metavar="FILE")
    sp.add_argument("--cycles", action="store_true",
                    help="divide by 2n: Hamiltonian cycle count")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--exact", action="store_true")
    grp.add_argument("--eps", type=float, metavar="X")

    sp = sub.add_parser("clique", help="clique count / clique-density sum")
    sp.add_argument("--host", required=True, metavar="FILE")
    sp.add_argument("--size", required=True, type=int, metavar="N")
    sp.add_argument("--gamma", type=float, metavar="G")
    sp.add_argument("--exact", action="store_true")

    sp = sub.add_parser("color", help="multiplicity-constrained colorings")
    sp.add_argument("--graph", required=True, metavar="FILE")
    sp.add_argument("--mult", required=True, metavar="CSV")
    sp.add_argument("--gamma", type=float, metavar="G")
    sp.add_argument("--exact", action="store_true")

    sp = sub.add_parser("zero-scan", help="sample the polydisc for zeros")
    sp.add_argument("--graph", required=True, metavar="FILE")
    sp.add_argument("--mult", required=True, metavar="CSV")
    sp.add_argument("--delta", required=True, type=float, metavar="D")
    sp.add_argument("--trials", required=True, type=int, metavar="T")
    sp.add_argument("--seed", required=True, type=int, metavar="S")

    sp = sub.add_parser("root-margin", help="smallest root modulus of the pencil")
    sp.add_argument("--graph", required=True, metavar="FILE")
    sp.add_argument("--mult", required=True, metavar="CSV")
    sp.add_argument("--weights", required=True, metavar="FILE")

    return p


def _emit(doc: dict) -> None:
    print(json.dumps(doc, allow_nan=False))


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentError as exc:
        _emit({"command": "none", "error": str(exc)})
        return 1
    try:
        doc = _DISPATCH[args.command](args)
    except (InputError, ValueError) as exc:
        _emit({"command": args.command, "error": str(exc)})
        return 1
    except WorkCapExceededError as exc:
        _emit({"command": args.command, "error": str(exc),
               "achievable_order": exc.achievable_order})
        return 2
    except (RefusalError, PfgmError) as exc:
        _emit({"command": args.command, "error": str(exc)})
        return 2
    _emit(doc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
