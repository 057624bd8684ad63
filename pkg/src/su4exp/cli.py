"""Command-line front end.

Verbs: classify, expm, charpoly, demo, bench, selftest.  Matrices travel in
the JSON format of :mod:`su4exp.matio`.  Exit codes are a stable scripting
contract: 0 success, 1 usage error, 2 input/parse error, 3 structure
precondition failure.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time

import numpy as np

from . import demos
from .classify import charpoly as _charpoly
from .classify import classify as _classify
from .errors import InputError, StructureError
from .expm import (
    exp_auto,
    is_bisymmetric,
    is_imaginary_symmetric,
    is_normal_element,
    is_perskew,
    is_skew_hamiltonian,
    is_tridiagonal_type,
)
from .families import FAMILIES
from .matio import load_matrix, save_matrix
from .model import Su4Element
from .oracle import expm_reference

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_STRUCTURE = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage problems; the CLI contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    p = _Parser(prog="su4exp",
                description="Closed-form exponentials of structured 4x4 "
                            "anti-Hermitian matrices.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    pc = sub.add_parser("classify", help="structure flags and minimal-polynomial type")
    pc.add_argument("file")
    pc.add_argument("--tolerance", type=float, default=1e-10,
                    help="structure predicate tolerance (default 1e-10)")

    pe = sub.add_parser("expm", help="exponentiate a matrix from JSON")
    pe.add_argument("file")
    pe.add_argument("--method", choices=["auto", "closed", "oracle"], default="auto")
    pe.add_argument("--out", help="write the resulting unitary as JSON")
    pe.add_argument("--tolerance", type=float, default=1e-10)

    pp = sub.add_parser("charpoly", help="characteristic polynomial coefficients")
    pp.add_argument("file")

    pd = sub.add_parser("demo", help="run a physical-system propagator")
    pd.add_argument("name", choices=["rabi", "josephson", "jcoupling"])
    pd.add_argument("params", nargs="*", metavar="key=value",
                    help="e.g. rabi: g=1,1,1 E0=0 t=1; josephson: E00=1 "
                         "E10=0.5 EJ1=0.3 EJ2=0.2 t=1; jcoupling: a..f, t")

    pb = sub.add_parser("bench", help="closed form vs reference timing")
    pb.add_argument("--families", default=",".join(FAMILIES),
                    help="comma-separated subset (default: all)")
    pb.add_argument("--trials", type=int, default=200)
    pb.add_argument("--csv", help="write results as CSV")
    pb.add_argument("--seed", type=int, default=0)

    sub.add_parser("selftest", help="quick oracle cross-check of every family")
    return p


def _load_element(path) -> Su4Element:
    return Su4Element(load_matrix(path))


def _fmt_matrix(U: np.ndarray) -> str:
    lines = []
    for row in U:
        lines.append("  " + "  ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in row))
    return "\n".join(lines)


def cmd_classify(args) -> int:
    X = _load_element(args.file)
    tol = args.tolerance
    flags = {
        "symmetric-tridiagonal": is_tridiagonal_type(X, tol),
        "perskewsymmetric": is_perskew(X, tol),
        "skew-Hamiltonian": is_skew_hamiltonian(X, tol),
        "imaginary-symmetric": is_imaginary_symmetric(X, tol),
        "bisymmetric-type": is_bisymmetric(X, tol),
        "normal-type": is_normal_element(X, tol),
    }
    for name, val in flags.items():
        print(f"{name}: {'yes' if val else 'no'}")
    cp = _charpoly(X)
    print(f"charpoly: mu={cp.mu:.12g} nu={cp.nu.imag:.12g}i pi={cp.pi:.12g}")
    mc = _classify(X)
    extra = ""
    if mc.c2 is not None:
        extra = f" c2={mc.c2:.12g}"
    if mc.beta is not None:
        extra = f" beta={mc.beta.imag:.12g}i gamma={mc.gamma:.12g}"
    print(f"min-poly: {mc.tag}{extra}")
    print(f"exp method: {exp_auto(X, tol).method}")
    return EXIT_OK


def cmd_expm(args) -> int:
    X = _load_element(args.file)
    if args.method == "oracle":
        U = expm_reference(X.entries)
        method = "oracle"
        residual = float(np.linalg.norm(U.conj().T @ U - np.eye(4)))
    else:
        res = exp_auto(X, args.tolerance)
        if args.method == "closed" and res.method == "oracle":
            raise StructureError("closed-form dispatch", float("nan"),
                                 "no closed form matched this matrix")
        U, method, residual = res.U, res.method, res.residual
    if args.out:
        save_matrix(U, args.out)
    print(f"method: {method}")
    print(f"residual: {residual:.3e}")
    if not args.out:
        print(_fmt_matrix(U))
    return EXIT_OK


def cmd_charpoly(args) -> int:
    X = _load_element(args.file)
    cp = _charpoly(X)
    print(f"mu: {cp.mu:.15g}")
    print(f"nu: {cp.nu.imag:.15g}i")
    print(f"pi: {cp.pi:.15g}")
    return EXIT_OK


def _parse_kv(tokens, allowed) -> dict:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise InputError(f"expected key=value, got '{tok}'")
        key, val = tok.split("=", 1)
        if key not in allowed:
            raise InputError(f"unknown parameter '{key}' "
                             f"(allowed: {', '.join(allowed)})")
        try:
            out[key] = [float(v) for v in val.split(",")] if "," in val else float(val)
        except ValueError as exc:
            raise InputError(f"bad value for '{key}': {exc}") from exc
    return out


def cmd_demo(args) -> int:
    if args.name == "rabi":
        kv = _parse_kv(args.params, ("g", "g1", "g2", "g3", "E0", "t"))
        g = kv.pop("g", None)
        if g is not None:
            if not isinstance(g, list) or len(g) != 3:
                raise InputError("g expects three comma-separated values")
            kv.setdefault("g1", g[0])
            kv.setdefault("g2", g[1])
            kv.setdefault("g3", g[2])
        p = demos.RabiParams(g1=kv.get("g1", 0.0), g2=kv.get("g2", 0.0),
                             g3=kv.get("g3", 0.0), E0=kv.get("E0", 0.0),
                             t=kv.get("t", 1.0))
        res = demos.rabi_propagator(p)
        A = -1j * p.t * (p.E0 * np.eye(4) + demos.rabi_matrix(p))
    elif args.name == "josephson":
        kv = _parse_kv(args.params, ("E00", "E10", "EJ1", "EJ2", "t"))
        p = demos.JosephsonParams(**kv)
        res = demos.josephson_propagator(p)
        A = -1j * p.t * demos.josephson_matrix(p)
    else:
        kv = _parse_kv(args.params, ("a", "b", "c", "d", "e", "f", "t"))
        p = demos.ScalarCouplingParams(**kv)
        res = demos.scalar_coupling_propagator(p)
        A = demos.scalar_coupling_element(p).entries
    dev = float(np.abs(res.U - expm_reference(A)).max())
    print(f"method: {res.method}")
    print(f"oracle deviation: {dev:.3e}")
    print(_fmt_matrix(res.U))
    return EXIT_OK


def _full_unitary(X: Su4Element, res) -> np.ndarray:
    """e^X from a family result; the minimal-polynomial formulas act on the
    traceless part, so the scalar phase is restored here."""
    if res.method in ("quad-I", "quad-II", "cubic-I"):
        return np.exp(1j * X.scalar) * res.U
    return res.U


def cmd_bench(args) -> int:
    names = [n.strip() for n in args.families.split(",") if n.strip()]
    unknown = [n for n in names if n not in FAMILIES]
    if unknown:
        print(f"error: unknown families: {', '.join(unknown)}", file=sys.stderr)
        return EXIT_USAGE
    if args.trials < 1:
        print("error: --trials must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    rng = np.random.default_rng(args.seed)
    rows = []
    for name in names:
        sampler, closed = FAMILIES[name]
        xs = [sampler(rng) for _ in range(args.trials)]
        t_closed, t_oracle, max_err = [], [], 0.0
        for X in xs:
            t0 = time.perf_counter_ns()
            res = closed(X)
            t_closed.append(time.perf_counter_ns() - t0)
            t0 = time.perf_counter_ns()
            Uo = expm_reference(X.entries)
            t_oracle.append(time.perf_counter_ns() - t0)
            err = float(np.linalg.norm(_full_unitary(X, res) - Uo))
            max_err = max(max_err, err)
        rows.append({
            "family": name,
            "trials": args.trials,
            "t_closed_ns": int(statistics.median(t_closed)),
            "t_oracle_ns": int(statistics.median(t_oracle)),
            "speedup": statistics.median(t_oracle) / max(statistics.median(t_closed), 1),
            "max_err": max_err,
        })
    fields = ["family", "trials", "t_closed_ns", "t_oracle_ns", "speedup", "max_err"]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=fields)
            w.writeheader()
            w.writerows(rows)
    for r in rows:
        print(f"{r['family']:>12}: closed {r['t_closed_ns']:>9} ns | "
              f"oracle {r['t_oracle_ns']:>9} ns | "
              f"speedup {r['speedup']:.1f}x | max_err {r['max_err']:.2e}")
    return EXIT_OK


def cmd_selftest(args) -> int:
    rng = np.random.default_rng(12345)
    ok = True
    for name, (sampler, closed) in FAMILIES.items():
        worst = 0.0
        for _ in range(20):
            X = sampler(rng)
            res = closed(X)
            worst = max(worst, float(np.linalg.norm(
                _full_unitary(X, res) - expm_reference(X.entries))))
        status = "ok" if worst <= 1e-9 else "FAIL"
        ok = ok and worst <= 1e-9
        print(f"{name:>12}: max deviation {worst:.2e} [{status}]")
    return EXIT_OK if ok else EXIT_STRUCTURE


_COMMANDS = {
    "classify": cmd_classify,
    "expm": cmd_expm,
    "charpoly": cmd_charpoly,
    "demo": cmd_demo,
    "bench": cmd_bench,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.verb](args)
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
