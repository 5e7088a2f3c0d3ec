"""Command-line front end.

Subcommands
-----------
spectrum   eigenvalues, energies and balance counts for one graph
product    NEPS of two or more factor graphs under a chosen basis
line       signed line graph of one graph
verify     randomised/exhaustive property suites

Graphs come from ``--family kind:key=val,...`` strings or ``--file`` JSON
documents of the form ``{"n": int, "edges": [[u, v, sign], ...]}``.

Exit codes: 0 success, 1 verification failures, 2 bad input, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .families import from_family_string
from .graphs import SignedGraph, adjacency, balance_report, degree_matrix, dumps, laplacian, loads, to_json_dict
from .linegraph import line_graph
from .products import Basis, cartesian_basis, neps, p_sum_basis, strong_basis
from .spectra import (
    EigensolverError,
    adjacency_spectrum,
    energy,
    laplacian_energy,
    laplacian_spectrum,
)
from .verify import SUITES, run_suite

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3


class _InputAction(argparse.Action):
    """Collect --family/--file occurrences into one list, preserving order."""

    def __call__(self, parser, namespace, values, option_string=None):
        items = getattr(namespace, "inputs", None)
        if items is None:
            items = []
            setattr(namespace, "inputs", items)
        kind = "family" if option_string == "--family" else "file"
        items.append((kind, values))


def _load_input(kind: str, value: str) -> SignedGraph:
    if kind == "family":
        return from_family_string(value)
    with open(value, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_basis(text: str, nu: int) -> Basis:
    if text == "cartesian":
        return cartesian_basis(nu)
    if text == "strong":
        return strong_basis(nu)
    if text.startswith("p="):
        try:
            p = int(text[2:])
        except ValueError:
            raise ValueError(f"bad p-sum basis {text!r}") from None
        return p_sum_basis(nu, p)
    vectors = []
    for token in text.split(","):
        token = token.strip()
        if not token or any(ch not in "01" for ch in token):
            raise ValueError(f"bad basis vector {token!r}: expected a 0/1 string")
        vectors.append(tuple(int(ch) for ch in token))
    return Basis(nu, tuple(vectors))


# --- subcommands ------------------------------------------------------------


def _report(g: SignedGraph) -> dict:
    spec = adjacency_spectrum(g)
    lap = laplacian_spectrum(g)
    rep = balance_report(g)
    return {
        "spectrum": list(spec.values),
        "laplacian_spectrum": list(lap.values),
        "energy": energy(g),
        "laplacian_energy": laplacian_energy(g),
        "balance": {"b": rep.b, "c": rep.c, "c_b": rep.c_b, "balanced": rep.balanced},
    }


def _single_input(ns, command: str) -> SignedGraph:
    inputs = getattr(ns, "inputs", None) or []
    if len(inputs) != 1:
        raise ValueError(f"{command} expects exactly one --family or --file input")
    return _load_input(*inputs[0])


def cmd_spectrum(ns) -> int:
    g = _single_input(ns, "spectrum")
    if ns.line:
        g = line_graph(g).graph
    if ns.csv:
        text = "\n".join("%.12g" % v for v in adjacency_spectrum(g).values)
    else:
        text = json.dumps(_report(g))
    _emit(text, ns.out)
    return EXIT_OK


def cmd_product(ns) -> int:
    inputs = getattr(ns, "inputs", None) or []
    if len(inputs) < 2:
        raise ValueError("product expects at least two --family/--file inputs")
    factors = [_load_input(kind, value) for kind, value in inputs]
    basis = _parse_basis(ns.basis, len(factors))
    g = neps(factors, basis)
    if ns.matrix:
        text = json.dumps(
            {
                "graph": to_json_dict(g),
                "adjacency": adjacency(g).tolist(),
                "degree": degree_matrix(g).tolist(),
                "laplacian": laplacian(g).tolist(),
            }
        )
    else:
        text = dumps(g)
    _emit(text, ns.out)
    return EXIT_OK


def cmd_line(ns) -> int:
    g = _single_input(ns, "line")
    _emit(dumps(line_graph(g).graph), ns.out)
    return EXIT_OK


def cmd_verify(ns) -> int:
    if ns.suite == "all":
        names = sorted(SUITES)
    elif ns.suite in SUITES:
        names = [ns.suite]
    else:
        raise ValueError(f"unknown suite {ns.suite!r}, expected one of {sorted(SUITES)} or 'all'")
    seed = ns.seed
    if seed is None and os.environ.get("SIGNET_SEED"):
        seed = int(os.environ["SIGNET_SEED"])
    failed = False
    for name in names:
        result = run_suite(name, max_n=ns.max_size, seed=seed)
        print(f"{result.name}: {result.checks} checks, {len(result.failures)} failures")
        for message in result.failures[:10]:
            print(f"  FAIL {message}")
        failed = failed or not result.ok
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


# --- parser -----------------------------------------------------------------


def _add_input_flags(parser):
    parser.add_argument(
        "--family",
        action=_InputAction,
        metavar="SPEC",
        help="family string, e.g. cycle:n=5,r=1 or grid:m=3,r1=0,n=4,r2=1",
    )
    parser.add_argument(
        "--file", action=_InputAction, metavar="PATH", help="graph JSON file"
    )
    parser.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signet", description="Signed-graph spectra, products and line graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="spectra, energies and balance of one graph")
    _add_input_flags(sp)
    sp.add_argument("--line", action="store_true", help="analyse the line graph instead")
    sp.add_argument("--csv", action="store_true", help="print eigenvalues one per line")
    sp.set_defaults(func=cmd_spectrum)

    pp = sub.add_parser("product", help="NEPS of two or more graphs")
    _add_input_flags(pp)
    pp.add_argument(
        "--basis",
        default="cartesian",
        metavar="BASIS",
        help="cartesian, strong, p=<k>, or comma-separated 0/1 vectors like 10,01,11",
    )
    pp.add_argument(
        "--matrix", action="store_true", help="also emit adjacency/degree/Laplacian matrices"
    )
    pp.set_defaults(func=cmd_product)

    pl = sub.add_parser("line", help="signed line graph of one graph")
    _add_input_flags(pl)
    pl.set_defaults(func=cmd_line)

    pv = sub.add_parser("verify", help="run property suites")
    pv.add_argument("suite", help=f"one of {', '.join(sorted(SUITES))}, or all")
    pv.add_argument("--max", dest="max_size", type=int, default=None, help="size cap for suite instances")
    pv.add_argument("--seed", type=int, default=None, help="RNG seed (default: SIGNET_SEED or built-in)")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    ns = _build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except EigensolverError as exc:
        print(f"signet: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ValueError, OSError) as exc:
        print(f"signet: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
