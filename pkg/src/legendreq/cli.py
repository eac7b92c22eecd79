"""Command-line front door.

Subcommands: eval, poly, a0, gram, integrate, asym, verify.  stdout is
data, stderr is diagnostics; exit codes are 0 (success), 1 (domain or
verification failure), 2 (usage).  JSON is the machine format: complex
values as {"re": ..., "im": ...} and exact integers as decimal strings so
arbitrary precision never passes through binary floating point.
Pi-multiples are emitted both as the exact coefficient (string) and the
floating product.  No configuration files, no environment variables.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from . import verify as verify_mod
from .exactpoly import LegendreIndex, a0_closed, a0_sum, ferrers_numerator
from .evaluate import q_ferrers, q_hobson
from .hypergeom import q_asymptotic
from .quadrature import (
    BudgetExceededError,
    gram_matrix,
    inner_product,
    normalization_exact,
)

__all__ = ["CliConfig", "build_parser", "run", "main"]


@dataclass(frozen=True)
class CliConfig:
    command: str
    k: int | None = None
    ell: int | None = None
    ell_asym: float | None = None
    ell_prime: int | None = None
    x: float | None = None
    tol: float = 1e-10
    fmt: str = "json"
    hobson: bool = False
    terms: int = 50
    suite: str = "all"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="legendreq",
        description=(
            "Second-kind associated Legendre functions on the imaginary axis: "
            "evaluation, exact numerators, Gram matrices, and self-verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate Q^k_l(ix)")
    p_eval.add_argument("--k", type=int, required=True)
    p_eval.add_argument("--l", dest="ell", type=int, required=True)
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument("--hobson", action="store_true", help="apply the off-cut phase")
    p_eval.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")

    p_poly = sub.add_parser("poly", help="dump the exact numerator polynomial")
    p_poly.add_argument("--k", type=int, required=True)
    p_poly.add_argument("--l", dest="ell", type=int, required=True)
    p_poly.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")

    p_a0 = sub.add_parser("a0", help="closed form and factorial sum for A0(l)")
    p_a0.add_argument("--l", dest="ell", type=int, required=True)
    p_a0.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")

    p_gram = sub.add_parser("gram", help="Gram matrix of inner products for l, l' < k")
    p_gram.add_argument("--k", type=int, required=True)
    p_gram.add_argument("--tol", type=float, default=1e-10)
    p_gram.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")

    p_int = sub.add_parser("integrate", help="single inner product integral")
    p_int.add_argument("--k", type=int, required=True)
    p_int.add_argument("--l", dest="ell", type=int, required=True)
    p_int.add_argument("--lp", dest="ell_prime", type=int, required=True)
    p_int.add_argument("--tol", type=float, default=1e-10)
    p_int.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")

    p_asym = sub.add_parser("asym", help="large-argument series value of Q^k_l(ix)")
    p_asym.add_argument("--k", type=int, required=True)
    p_asym.add_argument("--l", dest="ell_asym", type=float, required=True)
    p_asym.add_argument("--x", type=float, required=True)
    p_asym.add_argument("--terms", type=int, default=50)
    p_asym.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")

    p_verify = sub.add_parser("verify", help="run the self-verification suites")
    p_verify.add_argument("--suite", choices=verify_mod.SUITE_NAMES, default="all")

    return parser


def config_from_args(argv: list[str]) -> CliConfig:
    namespace = build_parser().parse_args(argv)
    return CliConfig(
        command=namespace.command,
        k=getattr(namespace, "k", None),
        ell=getattr(namespace, "ell", None),
        ell_asym=getattr(namespace, "ell_asym", None),
        ell_prime=getattr(namespace, "ell_prime", None),
        x=getattr(namespace, "x", None),
        tol=getattr(namespace, "tol", 1e-10),
        fmt=getattr(namespace, "fmt", "json"),
        hobson=getattr(namespace, "hobson", False),
        terms=getattr(namespace, "terms", 50),
        suite=getattr(namespace, "suite", "all"),
    )


def _emit_json(payload) -> None:
    print(json.dumps(payload))


def _complex_payload(value: complex) -> dict:
    return {"re": value.real, "im": value.imag}


def _complex_text(value: complex) -> str:
    return f"{value.real:.17g}{value.imag:+.17g}i"


def _cmd_eval(config: CliConfig) -> int:
    idx = LegendreIndex(config.k, config.ell)
    value = q_hobson(idx, config.x) if config.hobson else q_ferrers(idx, config.x)
    if config.fmt == "text":
        print(_complex_text(value))
    else:
        _emit_json(_complex_payload(value))
    return 0


def _cmd_poly(config: CliConfig) -> int:
    numerator = ferrers_numerator(LegendreIndex(config.k, config.ell))
    payload = {
        "k": config.k,
        "l": config.ell,
        "sigma": numerator.sigma,
        "degree": numerator.degree,
        "coefficients": [str(c) for c in numerator.poly],
    }
    if config.k == config.ell + 1:
        payload["a0"] = str(a0_closed(config.ell))
    if config.fmt == "text":
        terms = " + ".join(
            f"{c}*x^{power}" for power, c in enumerate(numerator.poly) if c != 0
        )
        print(f"N_{config.k},{config.ell}(x) = {terms or '0'}  (sigma = {numerator.sigma})")
    else:
        _emit_json(payload)
    return 0


def _cmd_a0(config: CliConfig) -> int:
    closed = a0_closed(config.ell)
    summed = a0_sum(config.ell)
    payload = {
        "l": config.ell,
        "closed": str(closed),
        "sum": str(summed),
        "equal": summed == closed,
    }
    if config.fmt == "text":
        print(f"A0({config.ell}): closed {closed}, sum {summed}, equal {summed == closed}")
    else:
        _emit_json(payload)
    return 0


def _cmd_gram(config: CliConfig) -> int:
    report = gram_matrix(config.k, config.tol)
    if config.fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["l", "lp", "re", "im", "expected_re", "deviation"])
        for ell in range(report.k):
            for ell_prime in range(report.k):
                entry = report.matrix[ell][ell_prime]
                expected = report.expected[ell][ell_prime] * math.pi
                writer.writerow(
                    [ell, ell_prime, entry.real, entry.imag, expected, abs(entry - expected)]
                )
        sys.stdout.write(buffer.getvalue())
        return 0
    entries = []
    for ell in range(report.k):
        for ell_prime in range(report.k):
            entry = report.matrix[ell][ell_prime]
            coefficient = report.expected[ell][ell_prime]
            expected = coefficient * math.pi
            entries.append(
                {
                    "l": ell,
                    "lp": ell_prime,
                    "re": entry.real,
                    "im": entry.imag,
                    "expected_coefficient": str(coefficient),
                    "expected": expected,
                    "deviation": abs(entry - expected),
                }
            )
    payload = {
        "k": report.k,
        "entries": entries,
        "max_abs_deviation": report.max_abs_deviation,
        "converged": report.converged,
    }
    if config.fmt == "text":
        for entry in entries:
            print(
                f"l={entry['l']} lp={entry['lp']} value={entry['re']:.12e}"
                f"{entry['im']:+.12e}i expected={entry['expected_coefficient']}*pi"
                f" deviation={entry['deviation']:.3e}"
            )
        print(f"max deviation {report.max_abs_deviation:.3e} converged {report.converged}")
    else:
        _emit_json(payload)
    return 0


def _cmd_integrate(config: CliConfig) -> int:
    result = inner_product(config.k, config.ell, config.ell_prime, config.tol)
    payload = {
        "re": result.value.real,
        "im": result.value.imag,
        "abs_error_estimate": result.abs_error_estimate,
        "evaluations": result.evaluations,
        "converged": result.converged,
    }
    if config.ell == config.ell_prime:
        payload["expected_coefficient"] = str(normalization_exact(config.k, config.ell))
        payload["expected"] = normalization_exact(config.k, config.ell) * math.pi
    if config.fmt == "text":
        print(
            f"integral {_complex_text(result.value)} "
            f"error {result.abs_error_estimate:.3e} "
            f"evaluations {result.evaluations} converged {result.converged}"
        )
    else:
        _emit_json(payload)
    return 0


def _cmd_asym(config: CliConfig) -> int:
    outcome = q_asymptotic(config.k, config.ell_asym, config.x, config.terms)
    payload = {
        "re": outcome.value.real,
        "im": outcome.value.imag,
        "terms_used": outcome.terms_used,
        "truncation_estimate": outcome.truncation_estimate,
        "converged": outcome.converged,
    }
    if config.fmt == "text":
        print(
            f"value {_complex_text(outcome.value)} terms {outcome.terms_used} "
            f"truncation {outcome.truncation_estimate:.3e} converged {outcome.converged}"
        )
    else:
        _emit_json(payload)
    return 0


def _cmd_verify(config: CliConfig) -> int:
    results = verify_mod.run_suite(config.suite)
    failures = []
    for result in results:
        print(result.line())
        if not result.passed:
            failures.append(
                {
                    "check": result.name,
                    "measured": result.measured,
                    "threshold": result.threshold,
                    "detail": result.detail,
                }
            )
    if failures:
        print(json.dumps(failures), file=sys.stderr)
        return 1
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "poly": _cmd_poly,
    "a0": _cmd_a0,
    "gram": _cmd_gram,
    "integrate": _cmd_integrate,
    "asym": _cmd_asym,
    "verify": _cmd_verify,
}


def run(config: CliConfig) -> int:
    """Execute a validated configuration; returns the process exit status."""
    try:
        return _COMMANDS[config.command](config)
    except (ValueError, BudgetExceededError) as error:
        print(str(error), file=sys.stderr)
        return 1


def main(argv: list[str] | None = None) -> None:
    config = config_from_args(sys.argv[1:] if argv is None else argv)
    sys.exit(run(config))
