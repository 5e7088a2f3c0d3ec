"""Randomised and exhaustive property suites behind ``signet verify``.

Each suite runs a batch of independent checks and reports how many ran and
which failed.  All randomness is driven by a caller-supplied seed, so a
given invocation is exactly reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import formulas
from .families import complete, cycle, path, random_signed_graph
from .graphs import (
    SignedGraph,
    adjacency,
    balance_report,
    incidence,
    laplacian,
    underlying,
)
from .linegraph import line_graph
from .oracle import rank_exact
from .products import Basis, cartesian, kron_sum_over_basis, neps, strong_basis
from .spectra import adjacency_spectrum, energy, laplacian_energy, laplacian_spectrum

__all__ = ["SuiteResult", "SUITES", "run_suite"]

DEFAULT_SEED = 0x9E3779B97F4A7C15


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, message: str):
        self.checks += 1
        if not passed:
            self.failures.append(message)


def _random_graph(rng, max_n: int) -> SignedGraph:
    n = int(rng.integers(1, max_n + 1))
    p = float(rng.choice([0.2, 0.5, 0.8]))
    return random_signed_graph(rng, n, p)


def _multiset_close(a, b, tol: float = 1e-8) -> bool:
    a = sorted(float(x) for x in a)
    b = sorted(float(x) for x in b)
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def kirchhoff_suite(max_n: int = 8, seed: int = DEFAULT_SEED, count: int = 200) -> SuiteResult:
    """incidence @ incidence.T equals the Laplacian, exactly, in integers."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("kirchhoff")
    for i in range(count):
        g = _random_graph(rng, max_n)
        h = incidence(g)
        ok = np.array_equal(h @ h.T, laplacian(g))
        result.record(ok, f"graph {i} (n={g.n}, m={g.m}): H H^T != L")
    return result


def rank_suite(max_n: int = 8, seed: int = DEFAULT_SEED, count: int = 200) -> SuiteResult:
    """Exact rational rank of the Laplacian is n minus balanced components."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("rank")
    for i in range(count):
        g = _random_graph(rng, max_n)
        rep = balance_report(g)
        got = rank_exact(laplacian(g))
        result.record(
            got == g.n - rep.b,
            f"graph {i}: rank {got} != n - b = {g.n - rep.b}",
        )
    return result


def acharya_suite(max_n: int = 8, seed: int = DEFAULT_SEED, count: int = 200) -> SuiteResult:
    """Balanced iff cospectral with the all-positive underlying graph."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("acharya")
    for i in range(count):
        g = _random_graph(rng, max_n)
        same = _multiset_close(
            adjacency_spectrum(g).values, adjacency_spectrum(underlying(g)).values
        )
        balanced = balance_report(g).balanced
        result.record(
            same == balanced,
            f"graph {i}: cospectral={same} but balanced={balanced}",
        )
    return result


def _random_factors(rng, max_order: int = 64) -> list[SignedGraph]:
    while True:
        nu = int(rng.integers(1, 4))
        orders = [int(rng.integers(1, 5)) for _ in range(nu)]
        if math.prod(orders) <= max_order:
            break
    return [random_signed_graph(rng, n, float(rng.choice([0.3, 0.6, 0.9]))) for n in orders]


def _random_basis(rng, nu: int) -> Basis:
    patterns = [
        tuple(int(x) for x in vec)
        for vec in np.ndindex(*([2] * nu))
        if any(vec)
    ]
    while True:
        mask = rng.random(len(patterns)) < 0.5
        chosen = [p for p, keep in zip(patterns, mask) if keep]
        if chosen and all(any(p[i] for p in chosen) for i in range(nu)):
            return Basis(nu, tuple(chosen))


def neps_matrix_suite(max_n: int = 8, seed: int = DEFAULT_SEED, count: int = 100) -> SuiteResult:
    """Product adjacency equals the Kronecker sum over the basis, exactly."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("neps-matrix")
    for i in range(count):
        factors = _random_factors(rng)
        basis = _random_basis(rng, len(factors))
        built = adjacency(neps(factors, basis))
        summed = kron_sum_over_basis([adjacency(f) for f in factors], basis)
        result.record(
            np.array_equal(built, summed),
            f"case {i}: adjacency(neps) != kron sum (orders {[f.n for f in factors]})",
        )
    return result


def _factors_with_edges(rng, max_order: int = 64) -> list[SignedGraph]:
    while True:
        factors = _random_factors(rng, max_order)
        if all(f.m > 0 for f in factors):
            return factors


def energy_bounds_suite(max_n: int = 8, seed: int = DEFAULT_SEED, count: int = 60) -> SuiteResult:
    """Per-vertex energy of a product is bounded by the basis sum of factor
    energies; equality for the tensor basis, strict otherwise."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("energy-bounds")
    for i in range(count):
        factors = _factors_with_edges(rng)
        nu = len(factors)
        basis = _random_basis(rng, nu)
        g = neps(factors, basis)
        lhs = energy(g) / g.n
        factor_rates = [energy(f) / f.n for f in factors]
        rhs = sum(
            math.prod(r for r, bit in zip(factor_rates, vec) if bit)
            for vec in basis.vectors
        )
        result.record(lhs <= rhs + 1e-9, f"case {i}: bound violated ({lhs} > {rhs})")
        if basis == strong_basis(nu):
            result.record(abs(lhs - rhs) <= 1e-8, f"case {i}: tensor equality broken")
        elif len(basis.vectors) > 1:
            result.record(rhs - lhs > 1e-9, f"case {i}: strictness broken ({lhs} vs {rhs})")
        if nu >= 2:
            cart = cartesian(factors)
            l_lhs = laplacian_energy(cart) / cart.n
            l_rhs = sum(laplacian_energy(f) / f.n for f in factors)
            result.record(
                l_lhs <= l_rhs + 1e-9, f"case {i}: Laplacian bound violated"
            )
            if sum(1 for f in factors if f.m) >= 2:
                result.record(
                    l_rhs - l_lhs > 1e-9, f"case {i}: Laplacian strictness broken"
                )
    return result


def closed_forms_suite(max_n: int = 6, seed: int = DEFAULT_SEED, count: int = 0) -> SuiteResult:
    """Every closed-form spectrum matches the dense solver within 1e-8."""
    result = SuiteResult("closed-forms")
    tol = 1e-8

    def check(label, formula_vals, graph, laplacian_side=False):
        spec = laplacian_spectrum(graph) if laplacian_side else adjacency_spectrum(graph)
        result.record(
            _multiset_close(formula_vals, spec.values, tol), f"{label}: formula != solver"
        )

    for n in range(1, max_n + 1):
        for r in range(n):
            g = path(n, r)
            check(f"path({n},{r}) adjacency", formulas.path_spectrum(n), g)
            check(f"path({n},{r}) laplacian", formulas.path_laplacian_spectrum(n), g, True)
    for n in range(3, max_n + 1):
        for r in range(n + 1):
            g = cycle(n, r)
            check(f"cycle({n},{r}) adjacency", formulas.cycle_spectrum(n, r), g)
            check(f"cycle({n},{r}) laplacian", formulas.cycle_laplacian_spectrum(n, r), g, True)
            lg = line_graph(g).graph
            reg = formulas.line_spectrum_regular(
                formulas.cycle_spectrum(n, r), 2, n, n,
                1 - formulas.parity(r), 1 - formulas.parity(n - r),
            )
            check(f"line(cycle({n},{r}))", reg.adjacency, lg)
    for m in range(1, max_n + 1):
        for n in range(1, max_n + 1):
            cf = formulas.grid_spectra(m, n)
            for r1, r2 in ((0, 0), (1, 0), (0, 1), (1, 1)):
                if r1 > m - 1 or r2 > n - 1:
                    continue
                g = _grid(m, r1, n, r2)
                check(f"grid({m},{n}) r=({r1},{r2}) adjacency", cf.adjacency, g)
                check(f"grid({m},{n}) r=({r1},{r2}) laplacian", cf.laplacian, g, True)
            lf = formulas.grid_line_spectra(m, n)
            check(f"line(grid({m},{n}))", lf.values, line_graph(_grid(m, 0, n, 0)).graph)
    for m in range(3, max_n + 1):
        for n in range(1, max_n + 1):
            for r1 in (0, 1):
                cf = formulas.cylinder_spectra(m, r1, n)
                g = _cylinder(m, r1, n, 0)
                check(f"cylinder({m},{r1},{n}) adjacency", cf.adjacency, g)
                check(f"cylinder({m},{r1},{n}) laplacian", cf.laplacian, g, True)
                lf = formulas.cylinder_line_spectra(m, r1, n)
                check(f"line(cylinder({m},{r1},{n}))", lf.values, line_graph(g).graph)
    for m in range(3, max_n + 1):
        for n in range(3, max_n + 1):
            for r1 in (0, 1):
                for r2 in (0, 1):
                    cf = formulas.torus_spectra(m, r1, n, r2)
                    g = _torus(m, r1, n, r2)
                    check(f"torus({m},{r1},{n},{r2}) adjacency", cf.adjacency, g)
                    check(f"torus({m},{r1},{n},{r2}) laplacian", cf.laplacian, g, True)
                    lf = formulas.torus_line_spectra(m, r1, n, r2)
                    lg = line_graph(g).graph
                    check(f"line(torus({m},{r1},{n},{r2}))", lf.adjacency, lg)
                    check(f"line(torus({m},{r1},{n},{r2})) laplacian", lf.laplacian, lg, True)
    for n in range(1, max_n + 1):
        for sign in (1, -1):
            hl = formulas.complete_line_spectra(n, sign)
            lg = line_graph(complete(n, sign)).graph
            check(f"line({'+' if sign > 0 else '-'}K_{n})", hl.values, lg)
            if hl.laplacian_values is not None:
                check(
                    f"line({'+' if sign > 0 else '-'}K_{n}) laplacian",
                    hl.laplacian_values,
                    lg,
                    True,
                )
    return result


def _grid(m, r1, n, r2):
    return cartesian([path(m, r1), path(n, r2)])


def _cylinder(m, r1, n, r2):
    return cartesian([cycle(m, r1), path(n, r2)])


def _torus(m, r1, n, r2):
    return cartesian([cycle(m, r1), cycle(n, r2)])


def line_theorems_suite(max_n: int = 8, seed: int = DEFAULT_SEED, count: int = 150) -> SuiteResult:
    """Line-graph matrix identity and spectrum reconstruction on random graphs."""
    rng = np.random.default_rng(seed)
    result = SuiteResult("line-theorems")
    for i in range(count):
        g = _random_graph(rng, max_n)
        lg = line_graph(g).graph
        h = incidence(g)
        identity_ok = np.array_equal(
            adjacency(lg), 2 * np.eye(g.m, dtype=np.int64) - h.T @ h
        )
        result.record(identity_ok, f"graph {i}: A(line) != 2I - H^T H")
        rep = balance_report(g)
        lap = sorted(laplacian_spectrum(g).values)
        expected = [2.0 - v for v in lap[rep.b :]] + [2.0] * (g.m - g.n + rep.b)
        got = adjacency_spectrum(lg).values
        result.record(
            _multiset_close(expected, got),
            f"graph {i}: line spectrum does not match the Laplacian construction",
        )
        result.record(
            all(v <= 2.0 + 1e-8 for v in got), f"graph {i}: eigenvalue above 2"
        )
    for n in range(3, 9):
        for r in range(n + 1):
            lg = line_graph(cycle(n, r)).graph
            degs = [0] * lg.n
            signprod = 1
            for u, v, s in lg.edges:
                degs[u] += 1
                degs[v] += 1
                signprod *= s
            cyc_ok = lg.n == n and lg.m == n and all(d == 2 for d in degs)
            result.record(
                cyc_ok and signprod == (-1) ** r,
                f"line(cycle({n},{r})): not a cycle with sign (-1)^{r}",
            )
    return result


SUITES = {
    "kirchhoff": kirchhoff_suite,
    "rank": rank_suite,
    "acharya": acharya_suite,
    "neps-matrix": neps_matrix_suite,
    "energy-bounds": energy_bounds_suite,
    "closed-forms": closed_forms_suite,
    "line-theorems": line_theorems_suite,
}


def run_suite(name: str, max_n: int | None = None, seed: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}, expected one of {sorted(SUITES)}")
    kwargs = {}
    if max_n is not None:
        kwargs["max_n"] = max_n
    if seed is not None:
        kwargs["seed"] = seed
    return SUITES[name](**kwargs)
