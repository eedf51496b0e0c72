"""Command-line front end.

Subcommands: trig, zeros, solve, spectrum, verify.  Tables are CSV with a
fixed column order, spectra are JSON against the schema shipped in
docs/spectrum_schema.json, and every number is printed with 17 significant
digits so identical invocations produce byte-identical output.

Exit codes: 0 ok, 1 property failure, 2 bad input, 3 precision warning,
4 precision budget exceeded, 5 missed-root suspicion.
"""

import argparse
import math
import sys
from dataclasses import dataclass

from .errors import (MissedRootSuspected, PrecisionBudgetExceeded,
                     PrecisionLoss, QwDiracError, ZeroNotBracketed)
from .hahn import HahnParams
from .solver import Potentials, picard_solve, residual
from .spectrum import BoundarySpec, example_problem, find_eigenvalues
from .trig import cos_qw, sin_qw, trig_zero_detailed
from .verify import DEFAULT_SEED, SUITES, run_suites

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_PRECISION_WARNING = 3
EXIT_PRECISION_BUDGET = 4
EXIT_MISSED_ROOT = 5


def _fmt(x):
    """Round-trip-exact decimal rendering (17 significant digits)."""
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        return format(x, ".17g")
    return str(x)


def _emit_json(obj, out, indent=0):
    """Deterministic JSON with .17g floats (the stdlib encoder would fall
    back to repr, which is shortest-round-trip but not fixed-width)."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.write("{}")
            return
        out.write("{\n")
        items = list(obj.items())
        for i, (k, v) in enumerate(items):
            out.write(f'{pad}  "{k}": ')
            _emit_json(v, out, indent + 1)
            out.write(",\n" if i < len(items) - 1 else "\n")
        out.write(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.write("[]")
            return
        out.write("[\n")
        for i, v in enumerate(obj):
            out.write(pad + "  ")
            _emit_json(v, out, indent + 1)
            out.write(",\n" if i < len(obj) - 1 else "\n")
        out.write(pad + "]")
    elif isinstance(obj, bool):
        out.write("true" if obj else "false")
    elif obj is None:
        out.write("null")
    elif isinstance(obj, float):
        out.write("null" if math.isnan(obj) else _fmt(obj))
    elif isinstance(obj, int):
        out.write(str(obj))
    else:
        out.write('"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"')


def _print_json(obj, out):
    _emit_json(obj, out)
    out.write("\n")


def _parse_a(text):
    if text.strip().lower() == "pi":
        return math.pi
    return float(text)


def _parse_potential(text):
    """A single number is a constant; a comma list is ascending polynomial
    coefficients."""
    parts = [p.strip() for p in text.split(",")]
    values = [float(p) for p in parts]
    if len(values) == 1:
        return ("const", values[0])
    return ("poly", tuple(values))


def _build_potentials(p_spec, r_spec):
    def one(spec):
        return spec if spec is not None else ("const", 0.0)

    p_spec = one(p_spec)
    r_spec = one(r_spec)
    if p_spec[0] == "const" and r_spec[0] == "const":
        return Potentials.constants(p_spec[1], r_spec[1])
    to_coeffs = lambda s: s[1] if s[0] == "poly" else (s[1],)
    return Potentials.polynomials(to_coeffs(p_spec), to_coeffs(r_spec))


@dataclass(frozen=True)
class ProblemConfig:
    """A fully validated boundary-value problem as parsed from flags.

    Construction runs the parameter and boundary-row invariants, so a
    ProblemConfig in hand is always solvable; tolerances default to
    (series, picard, root) = (1e-12, 1e-10, 1e-10).
    """

    params: HahnParams
    bc: BoundarySpec
    potentials: Potentials
    n_max: int
    example: object = None
    tol_series: float = 1e-12
    tol_picard: float = 1e-10
    tol_root: float = 1e-10

    @classmethod
    def from_args(cls, args):
        params = HahnParams(args.q, args.omega)
        if args.example is not None:
            clash = [k for k in ("a", "k11", "k12", "k21", "k22", "p", "r")
                     if getattr(args, k) is not None]
            if clash:
                raise ValueError(
                    "--example fixes a = pi, the boundary rows and zero "
                    f"potentials; drop --{', --'.join(clash)}")
            bc, pot = example_problem(args.example, params, math.pi)
        else:
            missing = [k for k in ("a", "k11", "k12", "k21", "k22")
                       if getattr(args, k) is None]
            if missing:
                raise ValueError(
                    "either --example or all of --a --k11 --k12 --k21 --k22 "
                    f"are required (missing: {', '.join(missing)})")
            bc = BoundarySpec(args.k11, args.k12, args.k21, args.k22, args.a)
            bc.validate(params)
            pot = _build_potentials(args.p, args.r)
        if args.n_max < 1:
            raise ValueError("--n-max must be at least 1")
        return cls(params, bc, pot, args.n_max, args.example,
                   args.tol_series, args.tol_picard, args.tol_root)


def _parse_t_range(text):
    """start:stop:step, endpoints inclusive."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("expected start:stop:step")
    start, stop, step = (float(p) for p in parts)
    if step <= 0:
        raise ValueError("step must be positive")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    return [start + i * step for i in range(max(count, 0))]


def _pot_json(spec):
    if spec[0] == "const":
        return {"constant": spec[1]}
    if spec[0] == "poly":
        return {"poly": list(spec[1])}
    return {"custom": True}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=float, required=True,
                        help="base of the lattice, in (0, 1)")
    common.add_argument("--omega", type=float, required=True,
                        help="shift of the lattice, positive")
    common.add_argument("--tol-series", type=float, default=1e-12)
    common.add_argument("--tol-picard", type=float, default=1e-10)
    common.add_argument("--tol-root", type=float, default=1e-10)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = argparse.ArgumentParser(
        prog="qwdirac",
        description="Hahn (q, omega) calculus and the q,omega-Dirac "
                    "spectral problem")
    sub = parser.add_subparsers(dest="command", required=True)

    p_trig = sub.add_parser("trig", parents=[common],
                            help="evaluate the q,omega cosine or sine")
    p_trig.add_argument("--kind", choices=("cos", "sin"), required=True)
    p_trig.add_argument("--mu", type=float, required=True)
    group = p_trig.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", type=float)
    group.add_argument("--t-range", type=str,
                       help="start:stop:step, inclusive endpoints")

    p_zeros = sub.add_parser("zeros", parents=[common],
                             help="positive zeros of the trig functions")
    p_zeros.add_argument("--kind", choices=("cos", "sin"), required=True)
    p_zeros.add_argument("--n", type=int, required=True,
                         help="number of zeros to report")

    p_solve = sub.add_parser("solve", parents=[common],
                             help="solve the system on a lattice")
    p_solve.add_argument("--a", type=_parse_a, required=True,
                         help="anchor of the lattice ('pi' accepted)")
    p_solve.add_argument("--lambda", dest="lam", type=float, required=True)
    p_solve.add_argument("--c1", type=float, required=True)
    p_solve.add_argument("--c2", type=float, required=True)
    p_solve.add_argument("--p", type=_parse_potential, default=None,
                         help="constant or comma-separated ascending "
                              "polynomial coefficients")
    p_solve.add_argument("--r", type=_parse_potential, default=None)

    p_spec = sub.add_parser("spectrum", parents=[common],
                            help="eigenvalues of the boundary-value problem")
    p_spec.add_argument("--example", choices=("3.2", "3.3"), default=None)
    p_spec.add_argument("--a", type=_parse_a, default=None)
    p_spec.add_argument("--k11", type=float, default=None)
    p_spec.add_argument("--k12", type=float, default=None)
    p_spec.add_argument("--k21", type=float, default=None)
    p_spec.add_argument("--k22", type=float, default=None)
    p_spec.add_argument("--p", type=_parse_potential, default=None)
    p_spec.add_argument("--r", type=_parse_potential, default=None)
    p_spec.add_argument("--n-max", type=int, default=4)

    p_verify = sub.add_parser("verify",
                              help="run the randomized property suites")
    p_verify.add_argument("suite",
                          choices=tuple(SUITES) + ("all",))
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def cmd_trig(args, out):
    params = HahnParams(args.q, args.omega)
    ts = [args.t] if args.t is not None else _parse_t_range(args.t_range)
    fn = cos_qw if args.kind == "cos" else sin_qw
    rows = []
    warned = False
    for t in ts:
        try:
            ev = fn(t, args.mu, params, args.tol_series)
            rows.append({"t": t, "value": ev.value,
                         "terms_used": ev.terms_used,
                         "cancellation": ev.cancellation,
                         "est_abs_error": ev.est_abs_error, "status": "ok"})
        except PrecisionLoss as exc:
            warned = True
            rows.append({"t": t, "value": math.nan, "terms_used": 0,
                         "cancellation": exc.cancellation or math.nan,
                         "est_abs_error": math.nan,
                         "status": "precision_loss"})
    if args.format == "json":
        _print_json(rows, out)
    else:
        out.write("t,value,terms_used,cancellation,est_abs_error,status\n")
        for row in rows:
            out.write(",".join([
                _fmt(row["t"]), _fmt(row["value"]), str(row["terms_used"]),
                _fmt(row["cancellation"]), _fmt(row["est_abs_error"]),
                row["status"]]) + "\n")
    return EXIT_PRECISION_WARNING if warned else EXIT_OK


def cmd_zeros(args, out):
    params = HahnParams(args.q, args.omega)
    kind = "cosine" if args.kind == "cos" else "sine"
    if args.n < 1:
        raise ValueError("--n must be at least 1")
    rows = []
    code = EXIT_OK
    message = None
    for n in range(1, args.n + 1):
        try:
            zr = trig_zero_detailed(n, kind, params, args.tol_root,
                                    args.tol_series)
        except PrecisionLoss as exc:
            code, message = EXIT_PRECISION_BUDGET, str(exc)
            break
        except ZeroNotBracketed as exc:
            code, message = EXIT_MISSED_ROOT, str(exc)
            break
        t_lo = params.omega0 + zr.bracket_z[0] / (1.0 - params.q)
        t_hi = params.omega0 + zr.bracket_z[1] / (1.0 - params.q)
        rows.append({"n": n, "location": zr.t, "combined_argument": zr.z,
                     "residual": zr.residual, "bracket_lo": t_lo,
                     "bracket_hi": t_hi, "matched_seed": zr.matched_seed})
    if args.format == "json":
        _print_json(rows, out)
    else:
        out.write("n,location,combined_argument,residual,bracket_lo,"
                  "bracket_hi,matched_seed\n")
        for row in rows:
            out.write(",".join([
                str(row["n"]), _fmt(row["location"]),
                _fmt(row["combined_argument"]), _fmt(row["residual"]),
                _fmt(row["bracket_lo"]), _fmt(row["bracket_hi"]),
                row["matched_seed"]]) + "\n")
    if message:
        print(message, file=sys.stderr)
    return code


def cmd_solve(args, out):
    params = HahnParams(args.q, args.omega)
    pot = _build_potentials(args.p, args.r)
    sol = picard_solve(pot, args.c1, args.c2, args.lam, args.a, params,
                       tol=args.tol_picard, series_tol=args.tol_series)
    rows = []
    y1g = sol.y1_grid()
    y2g = sol.y2_grid()
    for k, t in enumerate(sol.grid.points):
        r1, r2 = residual(sol, pot, t, params)
        rows.append({"k": k, "t": t, "y1": y1g[k], "y2": y2g[k],
                     "res1": r1, "res2": r2})
    rows.append({"k": "limit", "t": params.omega0, "y1": sol.c1,
                 "y2": sol.c2, "res1": 0.0, "res2": 0.0})
    if args.format == "json":
        _print_json(rows, out)
    else:
        out.write("k,t,y1,y2,res1,res2\n")
        for row in rows:
            out.write(",".join([
                str(row["k"]), _fmt(row["t"]), _fmt(row["y1"]),
                _fmt(row["y2"]), _fmt(row["res1"]), _fmt(row["res2"])])
                + "\n")
    return EXIT_OK


def _spectrum_document(cfg, result):
    params, bc, pot = cfg.params, cfg.bc, cfg.potentials
    doc = {
        "params": {
            "q": params.q,
            "omega": params.omega,
            "omega0": params.omega0,
            "a": bc.a,
            "bc": {"k11": bc.k11, "k12": bc.k12, "k21": bc.k21,
                   "k22": bc.k22},
            "potentials": {"p": _pot_json(pot.p_spec),
                           "r": _pot_json(pot.r_spec)},
            "n_max": cfg.n_max,
            "example": cfg.example,
            "tolerances": {"series": cfg.tol_series,
                           "picard": cfg.tol_picard,
                           "root": cfg.tol_root},
        },
        "eigenvalues": [
            {
                "n": e.n,
                "lambda": e.lam,
                "bracket": [e.bracket[0], e.bracket[1]],
                "delta_residual": e.delta_residual,
                "simple": e.simple,
                "asym_family": e.asym_family,
                "asym_seed": e.asym_seed,
                "rel_dev_from_asym": e.rel_dev_from_asym,
                "norm_identity": e.norm_identity,
            }
            for e in result.eigenvalues
        ],
        "pair_orthogonality": [
            {"i": i, "j": j, "defect": d}
            for (i, j, d) in result.pair_orthogonality
        ],
        "trivial_root": result.trivial_root,
        "symmetry": result.symmetry,
        "warnings": list(result.warnings),
    }
    return doc


def cmd_spectrum(args, out):
    cfg = ProblemConfig.from_args(args)
    try:
        result = find_eigenvalues(cfg.n_max, cfg.bc, cfg.potentials,
                                  cfg.params, tol=cfg.tol_root,
                                  picard_tol=cfg.tol_picard,
                                  series_tol=cfg.tol_series)
        code = EXIT_OK
    except PrecisionBudgetExceeded as exc:
        _print_json({"error": "precision_budget_exceeded",
                     "message": str(exc)}, out)
        return EXIT_PRECISION_BUDGET
    except MissedRootSuspected as exc:
        result = exc.partial
        code = EXIT_MISSED_ROOT
    _print_json(_spectrum_document(cfg, result), out)
    return code


def cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names, seed=args.seed)
    any_fail = False
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        any_fail = any_fail or not r.passed
        detail = f"  ({r.detail})" if r.detail else ""
        out.write(f"{mark}  {r.name}  worst={_fmt(r.worst)} "
                  f"tol={_fmt(r.tol)}{detail}\n")
    out.write(("FAILURE" if any_fail else "OK")
              + f"  {len(results)} properties, seed={args.seed}\n")
    return EXIT_PROPERTY_FAILURE if any_fail else EXIT_OK


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_BAD_INPUT
    try:
        if args.command == "trig":
            return cmd_trig(args, out)
        if args.command == "zeros":
            return cmd_zeros(args, out)
        if args.command == "solve":
            return cmd_solve(args, out)
        if args.command == "spectrum":
            return cmd_spectrum(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        raise ValueError(f"unknown command {args.command!r}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except PrecisionBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION_BUDGET
    except QwDiracError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION_WARNING


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
