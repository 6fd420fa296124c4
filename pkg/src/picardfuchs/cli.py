"""Command-line front end: parse Hamiltonians, build/check/verify systems.

Subcommands:

  pf check H                      regularity-at-infinity report
  pf basis H                      quotient-ring monomial basis listing
  pf system H [--format ...]      build and serialize the Picard-Fuchs system
  pf reduce H --form P,Q          Petrov decomposition of the 1-form P dx + Q dy
  pf verify H [--numeric ...]     structural validation (+ cycle residuals)
  pf periods H --t V --seed X,Y   trace one cycle and evaluate the system on it

Exit codes: 0 success, 1 validation/residual failure, 2 input error.  With
--json-errors failures are also reported as machine-readable JSON on stderr.
"""

import argparse
import json
import sys

from .errors import ParseError, PicardFuchsError
from .forms import OneForm
from .milnor import check_regular_at_infinity, monomial_basis
from .parsing import parse_polynomial
from .periods import dumps_cycle, loads_cycle, system_residual, trace_cycle
from .petrov import petrov_decompose
from .serialize import monomial_str, serialize_system
from .system import build_system, classify_singularities, validate_system


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="pf",
        description="Exact Picard-Fuchs systems for Abelian integrals of bivariate Hamiltonians.",
    )
    parser.add_argument("--json-errors", action="store_true",
                        help="report failures as JSON on stderr")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("hamiltonian", help="polynomial in x and y, e.g. 'x^3+y^3-3xy'")
        return p

    p_check = add("check", "decide regularity at infinity")
    p_check.add_argument("--format", choices=["text", "json"], default="text")

    p_basis = add("basis", "list the quotient-ring monomial basis")
    p_basis.add_argument("--format", choices=["text", "json"], default="text")

    p_system = add("system", "build the Picard-Fuchs system")
    p_system.add_argument("--format", choices=["json", "latex", "text"], default="json")
    p_system.add_argument("--out", help="write output to this file instead of stdout")

    p_reduce = add("reduce", "decompose a 1-form in the Petrov module basis")
    p_reduce.add_argument("--form", required=True, metavar="EXPR_DX,EXPR_DY",
                          help="coefficients of dx and dy, comma separated")
    p_reduce.add_argument("--format", choices=["text", "json"], default="text")

    p_verify = add("verify", "validate the structural properties of the system")
    p_verify.add_argument("--numeric", action="store_true",
                          help="also trace cycles and check system residuals")
    p_verify.add_argument("--t", action="append", default=[],
                          help="level value for a numeric check (repeatable)")
    p_verify.add_argument("--seed", default="1,1", help="seed point X,Y for cycle tracing")
    p_verify.add_argument("--mode", choices=["real_oval", "x_loop"], default="real_oval")
    p_verify.add_argument("--loop-center", default="0", help="x_loop center (complex literal)")
    p_verify.add_argument("--loop-turns", type=int, default=1)
    p_verify.add_argument("--residual-tol", type=float, default=1e-6)
    _numeric_flags(p_verify)

    p_periods = add("periods", "trace one cycle and evaluate periods/residual")
    p_periods.add_argument("--t", required=True, help="level value (complex literal)")
    p_periods.add_argument("--seed", required=True, help="seed point X,Y")
    p_periods.add_argument("--mode", choices=["real_oval", "x_loop"], default="real_oval")
    p_periods.add_argument("--loop-center", default="0", help="x_loop center (complex literal)")
    p_periods.add_argument("--loop-turns", type=int, default=1)
    p_periods.add_argument("--cycle", help="read the cycle from this JSON file instead of tracing")
    p_periods.add_argument("--out-cycle", help="write the traced cycle to this JSON file")
    _numeric_flags(p_periods)

    return parser


def _numeric_flags(p):
    p.add_argument("--samples", type=int, default=512, help="samples per traced cycle")
    p.add_argument("--max-step", type=float, default=0.05, help="arc-length step bound")
    p.add_argument("--newton-tol", type=float, default=1e-12, help="Newton correction tolerance")
    p.add_argument("--noncritical-tol", type=float, default=1e-6,
                   help="minimum distance of t from a critical value")
    p.add_argument("--cluster-radius", type=float, default=1e-6,
                   help="clustering radius of the numeric critical-point oracle")


def _parse_complex(text):
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise ValueError(f"not a numeric literal: {text!r}")


def _parse_seed(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("seed must be two comma-separated numbers X,Y")
    return _parse_complex(parts[0]), _parse_complex(parts[1])


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except PicardFuchsError as exc:
        _report_error(args, exc)
        return 2
    except ValueError as exc:
        _report_error(args, exc)
        return 2


def _report_error(args, exc):
    if getattr(args, "json_errors", False):
        doc = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            doc["position"] = exc.position
        print(json.dumps(doc), file=sys.stderr)
    else:
        print(f"error: {exc}", file=sys.stderr)


def _dispatch(args):
    H = parse_polynomial(args.hamiltonian)
    if args.verb == "check":
        return _cmd_check(args, H)
    if args.verb == "basis":
        return _cmd_basis(args, H)
    if args.verb == "system":
        return _cmd_system(args, H)
    if args.verb == "reduce":
        return _cmd_reduce(args, H)
    if args.verb == "verify":
        return _cmd_verify(args, H)
    if args.verb == "periods":
        return _cmd_periods(args, H)
    raise AssertionError(f"unhandled verb {args.verb}")


def _cmd_check(args, H):
    report = check_regular_at_infinity(H)
    doc = {
        "hamiltonian": str(H),
        "degree": report.degree_H,
        "n": report.n,
        "mu": report.mu,
        "regular": report.regular,
        "reason": report.reason,
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"H = {H}")
        print(f"degree = {report.degree_H}, n = {report.n}, mu = {report.mu}")
        if report.regular:
            print("regular at infinity: yes")
        else:
            print("regular at infinity: no")
            print(f"reason: {report.reason}")
    return 0 if report.regular else 2


def _cmd_basis(args, H):
    basis = monomial_basis(H)
    if args.format == "json":
        doc = {
            "hamiltonian": str(H),
            "n": basis.n,
            "mu": basis.mu,
            "basis": [{"a": a, "b": b, "deg_form": a + b + 2} for a, b in basis.monomials],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"H = {H}: mu = {basis.mu} basis monomials (graded order)")
        for i, (a, b) in enumerate(basis.monomials):
            omega = basis.primitives[i]
            print(f"  m_{i} = {monomial_str(a, b)}   deg omega = {a + b + 2}   omega = {omega}")
    return 0


def _cmd_system(args, H):
    sys_obj = build_system(H)
    payload = serialize_system(sys_obj, format=args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload.decode())
    return 0


def _cmd_reduce(args, H):
    parts = args.form.split(",")
    if len(parts) != 2:
        raise ValueError("--form needs exactly one comma: EXPR_DX,EXPR_DY")
    omega = OneForm(parse_polynomial(parts[0]), parse_polynomial(parts[1]))
    basis = monomial_basis(H)
    dec = petrov_decompose(omega, basis)
    if args.format == "json":
        doc = {
            "hamiltonian": str(H),
            "form": {"dx": str(omega.P), "dy": str(omega.Q)},
            "p": [str(p) for p in dec.coeff_polys],
            "witness_g": str(dec.witness_g),
            "witness_f": str(dec.witness_f),
            "zero_class": dec.is_zero_class(),
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"omega = ({omega.P}) dx + ({omega.Q}) dy over H = {H}")
        for i, ((a, b), p) in enumerate(zip(basis.monomials, dec.coeff_polys)):
            if not p.is_zero():
                print(f"  p_{i}(t) = {p}   (basis form of {monomial_str(a, b)})")
        if dec.is_zero_class():
            print("  all Petrov coefficients vanish (form is g*dH + df)")
        print(f"  witness g = {dec.witness_g}")
        print(f"  witness f = {dec.witness_f}")
    return 0


def _cmd_verify(args, H):
    sys_obj = build_system(H, cluster_radius=args.cluster_radius)
    report = validate_system(sys_obj)
    classification = classify_singularities(sys_obj)
    ok = report.all_ok()
    for name, value in report.as_dict().items():
        print(f"{name}: {'pass' if value else 'FAIL'}")
    print(f"finite_fuchsian: {classification['finite_fuchsian']}")
    print(f"infinity_fuchsian_form: {classification['infinity_fuchsian_form']}")
    if not ok:
        print(f"details: {report.details}")
    if args.numeric:
        seed = _parse_seed(args.seed)
        for t_text in args.t or []:
            cycle = trace_cycle(
                H, _parse_complex(t_text), seed, mode=args.mode,
                samples=args.samples, max_step=args.max_step,
                newton_tol=args.newton_tol, noncritical_tol=args.noncritical_tol,
                loop_center=_parse_complex(args.loop_center), turns=args.loop_turns,
            )
            sample = system_residual(sys_obj, cycle)
            passed = sample.residual < args.residual_tol
            ok = ok and passed
            print(f"residual at t = {t_text}: {sample.residual:.3e} "
                  f"({'pass' if passed else 'FAIL'})")
    return 0 if ok else 1


def _cmd_periods(args, H):
    sys_obj = build_system(H, cluster_radius=args.cluster_radius)
    if args.cycle:
        with open(args.cycle) as fh:
            cycle = loads_cycle(fh.read(), H)
    else:
        cycle = trace_cycle(
            H, _parse_complex(args.t), _parse_seed(args.seed), mode=args.mode,
            samples=args.samples, max_step=args.max_step,
            newton_tol=args.newton_tol, noncritical_tol=args.noncritical_tol,
            loop_center=_parse_complex(args.loop_center), turns=args.loop_turns,
        )
    if args.out_cycle:
        with open(args.out_cycle, "w") as fh:
            fh.write(dumps_cycle(cycle))
    sample = system_residual(sys_obj, cycle)
    doc = {
        "t": [sample.t.real, sample.t.imag],
        "I": [[v.real, v.imag] for v in sample.I],
        "Idot": [[v.real, v.imag] for v in sample.Idot],
        "residual": sample.residual,
        "closure_error": cycle.closure_error,
        "samples": len(cycle),
    }
    print(json.dumps(doc, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
