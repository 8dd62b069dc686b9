"""``quatcs-verify``: run verification suites and write a report.

Exit status: 0 all checks pass, 1 some check failed, 2 usage error,
3 invalid configuration.
"""
from __future__ import annotations

import argparse
import sys

from .report import SUITE_NAMES, Config, ConfigError, emit_report, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONFIG = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quatcs-verify", description=__doc__.splitlines()[0])
    p.add_argument("--suite", default="all",
                   help=f"one of {', '.join(SUITE_NAMES + ('all',))} (default: all)")
    p.add_argument("--format", default="json", choices=("json", "csv", "text"))
    p.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--trunc-dim", default="16", help="Fock truncation N (default 16)")
    p.add_argument("--radial-order", help="Gauss-Laguerre nodes (default from the exactness rule)")
    p.add_argument("--theta-nodes", help="uniform theta nodes (default from the exactness rule)")
    p.add_argument("--phi-order", help="Gauss-Legendre nodes in cos(phi) (default 2)")
    p.add_argument("--psi-nodes", help="uniform psi nodes (default 5)")
    p.add_argument("--tolerance", default="1e-12",
                   help="tolerance for checks without a fixed one (default 1e-12)")
    p.add_argument("--seed", default="20240917", help="seed for randomized checks")
    return p


def _int(name, value, optional=False):
    if value is None and optional:
        return None
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"--{name} expects an integer, got {value!r}") from None


def parse_config(ns: argparse.Namespace) -> Config:
    try:
        tol = float(ns.tolerance)
    except ValueError:
        raise ConfigError(f"--tolerance expects a number, got {ns.tolerance!r}") from None
    return Config(
        trunc_dim=_int("trunc-dim", ns.trunc_dim),
        radial_order=_int("radial-order", ns.radial_order, True),
        theta_nodes=_int("theta-nodes", ns.theta_nodes, True),
        phi_order=_int("phi-order", ns.phi_order, True),
        psi_nodes=_int("psi-nodes", ns.psi_nodes, True),
        tolerance=tol,
        seed=_int("seed", ns.seed),
    ).validate()


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.suite not in SUITE_NAMES + ("all",):
        parser.print_usage(sys.stderr)
        print(f"quatcs-verify: error: unknown suite {ns.suite!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = parse_config(ns)
    except ConfigError as exc:
        print(f"quatcs-verify: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    report = run_suite(ns.suite, cfg)
    data = emit_report(report, ns.format)
    if ns.output:
        with open(ns.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
