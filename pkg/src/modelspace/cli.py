"""Command-line interface: ``modelspace {build,verify,suite,classify}``.

Inner functions are written ``zpow:N`` (``z^N``) or ``blaschke:[re,im;re,im;...]``
(zeros, unimodular constant 1; append ``@re,im`` for another constant).
Symbols are inline coefficient lists ``"n:re,im;n:re,im"`` meaning
``sum c_n z^n``.

Exit status: 0 on success, 1 when a verification fails, 2 for malformed
arguments.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import ModelSpaceError
from .harness import RunConfig, registry_ids, run_suite, summarize, verify_identity
from .model_space import BlaschkeProduct, LaurentSymbol, blaschke_divide
from .operators import (
    OPERATOR_KINDS,
    conjugation_label,
    dichotomy_check,
    emit_operator,
    mz_conjugation_enumerate,
)


def _complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) != 2:
        raise ValueError(f"expected re,im but got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


def parse_inner(text: str) -> BlaschkeProduct:
    """``zpow:N`` or ``blaschke:[re,im;...]`` with an optional ``@re,im`` constant."""
    kind, sep, body = text.strip().partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"inner function must be zpow:N or blaschke:[...], got {text!r}")
    try:
        if kind == "zpow":
            n = int(body)
            if n < 0:
                raise ValueError("negative power")
            return BlaschkeProduct.zpow(n)
        if kind == "blaschke":
            body, _, const = body.partition("@")
            body = body.strip()
            if not (body.startswith("[") and body.endswith("]")):
                raise ValueError("zeros must be enclosed in [...]")
            inner = body[1:-1].strip()
            zeros = tuple(_complex(z) for z in inner.split(";") if z.strip()) if inner else ()
            return BlaschkeProduct(zeros, _complex(const) if const else 1.0)
    except (ValueError, ModelSpaceError) as exc:
        raise argparse.ArgumentTypeError(f"bad inner function {text!r}: {exc}") from None
    raise argparse.ArgumentTypeError(f"unknown inner function kind {kind!r}")


def parse_symbol(text: str) -> LaurentSymbol:
    """``"n:re,im;n:re,im"`` as a Laurent polynomial."""
    coeffs = {}
    try:
        for item in text.split(";"):
            if not item.strip():
                continue
            n, sep, value = item.partition(":")
            if not sep:
                raise ValueError(f"term {item!r} is not n:re,im")
            coeffs[int(n)] = coeffs.get(int(n), 0) + _complex(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad symbol {text!r}: {exc}") from None
    if not coeffs:
        raise argparse.ArgumentTypeError("symbol has no terms")
    return LaurentSymbol.from_dict(coeffs)


def parse_gamma(text: str) -> int:
    """Degree of the monomial inner function ``gamma``: ``1`` (the constant), ``z`` or ``zpow:N``."""
    text = text.strip()
    if text == "1":
        return 0
    if text == "z":
        return 1
    b = parse_inner(text)
    if not b.is_monomial:
        raise argparse.ArgumentTypeError("gamma must be a monomial inner function")
    return b.degree


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modelspace", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_theta=True):
        p.add_argument("--theta", type=parse_inner, required=needs_theta, help="zpow:N or blaschke:[re,im;...]")
        p.add_argument("--alpha", type=parse_inner, help="divisor of theta (same syntax)")
        p.add_argument("--grid", type=int, default=1024, help="quadrature grid size (power of two)")
        p.add_argument("--out", help="also write JSON to this path")

    b = sub.add_parser("build", help="emit an operator matrix as JSON")
    b.add_argument("--op", choices=OPERATOR_KINDS, required=True)
    b.add_argument("--symbol", type=parse_symbol, help='"n:re,im;..."')
    common(b)

    v = sub.add_parser("verify", help="run one identity and print its report")
    v.add_argument("--id", required=True, dest="identity", help="identity id (see `suite`)")
    v.add_argument("--symbol", type=parse_symbol)
    v.add_argument("--tol", type=_positive_float, help="override both tolerances")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=5)
    common(v, needs_theta=False)

    s = sub.add_parser("suite", help="run every registered identity and print a summary")
    s.add_argument("--tol", type=_positive_float)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=5)
    s.add_argument("--grid", type=int, default=1024)
    s.add_argument("--out")

    c = sub.add_parser("classify", help="enumerate monomial M_z-conjugations")
    c.add_argument("--theta", type=parse_inner, required=True)
    c.add_argument("--alpha", type=parse_inner)
    c.add_argument("--gamma", type=parse_gamma,
                   help="inner function gamma (1, z or zpow:N): enumerate C_beta with C_beta(gamma K_alpha) in K_theta")
    c.add_argument("--out")
    return parser


def _config(args) -> RunConfig:
    kw = dict(grid_size=args.grid, seed=args.seed, trials=args.trials)
    if args.tol is not None:
        kw.update(tolerance_monomial=args.tol, tolerance_blaschke=args.tol)
    return RunConfig(**kw)


def _emit(payload, out_path, text=None):
    dumped = json.dumps(payload, sort_keys=True)
    print(text if text is not None else dumped)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(dumped + "\n")


def _degree_of_monomial(b: BlaschkeProduct, parser, name) -> int:
    if not b.is_monomial:
        parser.error(f"classify works at monomial scale; --{name} must be zpow:N")
    return b.degree


def _cmd_build(args, parser):
    if args.op != "c-theta" and args.alpha is None:
        args.alpha = args.theta
    payload = emit_operator(args.op, args.theta, args.alpha, args.symbol, args.grid)
    _emit(payload, args.out)
    return 0


def _cmd_verify(args, parser):
    if args.identity not in registry_ids():
        parser.error(f"unknown identity {args.identity!r}; known: {', '.join(registry_ids())}")
    report = verify_identity(args.identity, args.theta, args.alpha, args.symbol, _config(args))
    _emit(report.to_json(), args.out)
    return 0 if report.ok else 1


def _cmd_suite(args, parser):
    reports = run_suite(_config(args))
    _emit([r.to_json() for r in reports], args.out, text=summarize(reports))
    return 0 if all(r.ok for r in reports) else 1


def _cmd_classify(args, parser):
    n = _degree_of_monomial(args.theta, parser, "theta")
    d = _degree_of_monomial(args.alpha, parser, "alpha") if args.alpha is not None else n
    if args.gamma is not None:
        res = mz_conjugation_enumerate(d, n, args.gamma)
        payload = {
            "alpha": d,
            "theta": n,
            "gamma": args.gamma,
            "betas": list(res.admissible_betas),
            "labels": [conjugation_label(b, b, b, b) for b in res.admissible_betas],
        }
    elif d == n:
        res = mz_conjugation_enumerate(n, n, 0)
        payload = [conjugation_label(b, b, b, b) for b in res.admissible_betas]
    else:
        found = dichotomy_check(d, n)
        # C_theta first, then the split conjugation
        payload = [c.label for c in sorted(found, key=lambda c: (c.beta1 != n, c.label))]
    _emit(payload, args.out, text=json.dumps(payload, separators=(",", ":")))
    return 0


COMMANDS = {"build": _cmd_build, "verify": _cmd_verify, "suite": _cmd_suite, "classify": _cmd_classify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "alpha", None) is not None and getattr(args, "theta", None) is not None:
        if blaschke_divide(args.alpha, args.theta) is None:
            parser.error(f"{args.alpha.label()} does not divide {args.theta.label()}")
    try:
        return COMMANDS[args.command](args, parser)
    except ModelSpaceError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
