"""Cross-validation of every closed form against the linear-algebra oracle.

run_checks builds actual networks, computes exact pseudoinverses, and compares
them with the closed forms, route by route.  Each check reports a pass/fail
plus either a case count or the first counterexample; a crash inside a check
is itself reported as a failure rather than propagated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .genfib import gfib, prism_spanning_tree_count
from .ladder import ladder_delta_edges, ladder_terminal_resistances
from .network import (
    EightTerminalStencil,
    build_ladder,
    build_prism,
    four_corner_laplacian,
    kirchhoff_oracle,
    kron_reduce,
    matrix_tree_count,
    resistance_oracle,
)
from .prism import (
    csc2_sum_check,
    kirchhoff_closed,
    kirchhoff_float,
    prism_eigenvalues,
    prism_pair_sum,
    prism_resistance_base,
    prism_resistance_via_reduction,
    trig_sum,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


class _Counterexample(Exception):
    pass


def run_checks(n_max: int = 10, tol: float = 1e-9) -> list[CheckResult]:
    """Run the whole cross-validation ladder up to prism/ladder size n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    sizes = range(1, n_max + 1)
    prisms = {n: build_prism(n) for n in sizes}
    ladders = {n: build_ladder(n) for n in sizes}
    results: list[CheckResult] = []

    def check(name):
        def wrap(fn):
            try:
                detail = fn()
            except _Counterexample as exc:
                results.append(CheckResult(name, False, str(exc)))
            except Exception as exc:  # a crash is a failure, not a traceback
                results.append(CheckResult(name, False, f"crashed: {exc!r}"))
            else:
                results.append(CheckResult(name, True, detail or ""))
        return wrap

    @check("resistance-closed-vs-oracle")
    def _():
        pairs = 0
        for n in sizes:
            net = prisms[n]
            for i in range(1, n + 1):
                for kind, other in (("pp", f"p{i}"), ("pq", f"q{i}")):
                    expect = resistance_oracle(net, "p1", other)
                    got = prism_resistance_base(n, i, kind, "exact")
                    if got != expect:
                        raise _Counterexample(f"n={n} i={i} {kind}: closed {got} != oracle {expect}")
                    pairs += 1
        return f"{pairs} base pairs exact-equal"

    @check("resistance-float-vs-oracle")
    def _():
        pairs = 0
        for n in sizes:
            net = prisms[n].to_float()
            for i in range(2, n + 1):
                for kind, other in (("pp", f"p{i}"), ("pq", f"q{i}")):
                    expect = resistance_oracle(net, "p1", other)
                    got = prism_resistance_base(n, i, kind, "float")
                    if abs(got - expect) > tol:
                        raise _Counterexample(f"n={n} i={i} {kind}: |{got} - {expect}| > {tol}")
                    pairs += 1
        return f"{pairs} base pairs within {tol}"

    @check("reduction-route-agreement")
    def _():
        cases = 0
        for n in sizes:
            for i in range(2, n + 1):
                for kind in ("pp", "pq"):
                    direct = prism_resistance_base(n, i, kind, "exact")
                    composed = prism_resistance_via_reduction(n, i, kind)
                    if direct != composed:
                        raise _Counterexample(f"n={n} i={i} {kind}: {direct} != {composed}")
                    cases += 1
        return f"{cases} compositions exact-equal"

    @check("pair-sum")
    def _():
        cases = 0
        for n in sizes:
            for i in range(1, n + 1):
                lhs = prism_resistance_base(n, i, "pp") + prism_resistance_base(n, i, "pq")
                if lhs != prism_pair_sum(n, i):
                    raise _Counterexample(f"n={n} i={i}: {lhs} != {prism_pair_sum(n, i)}")
                cases += 1
        return f"{cases} pair sums exact-equal"

    @check("ladder-closed-forms")
    def _():
        for n in sizes:
            net = ladders[n]
            rung, side, diag = ladder_terminal_resistances(n)
            for value, pair in ((rung, (f"p{n}", f"q{n}")), (side, (f"p{n}", "p1")),
                                (diag, (f"p{n}", "q1"))):
                expect = resistance_oracle(net, *pair)
                if value.as_rational() != expect:
                    raise _Counterexample(f"n={n} {pair}: {value} != oracle {expect}")
        return f"terminal resistances exact-equal for n <= {n_max}"

    @check("ladder-delta-reassembly")
    def _():
        done = 0
        for n in sizes:
            if n < 2:
                continue
            reduced = kron_reduce(ladders[n], [f"p{n}", f"q{n}", "p1", "q1"])
            if four_corner_laplacian(ladder_delta_edges(n)) != reduced.laplacian():
                raise _Counterexample(f"n={n}: corner Laplacians differ")
            done += 1
        return f"{done} ladder reductions exact-equal"

    @check("kirchhoff-routes")
    def _():
        for n in sizes:
            exact = kirchhoff_closed(n)
            oracle = kirchhoff_oracle(prisms[n])
            if exact != oracle:
                raise _Counterexample(f"n={n}: closed {exact} != oracle {oracle}")
            target = float(exact)
            for route in ("closed", "coth", "spectral"):
                got = kirchhoff_float(n, route)
                if abs(got - target) > tol * target:
                    raise _Counterexample(f"n={n} {route}: |{got} - {target}| > rel {tol}")
        return f"4 routes agree for n <= {n_max}"

    @check("spectrum")
    def _():
        for n in sizes:
            analytic = np.array(prism_eigenvalues(n).values)
            numeric = prisms[n].laplacian().eigenvalues()
            if np.abs(analytic - numeric).max() > 1e-8:
                raise _Counterexample(f"n={n}: spectra differ beyond 1e-8")
        return f"analytic spectrum matches eigensolver for n <= {n_max}"

    @check("spanning-trees")
    def _():
        for n in sizes:
            formula = prism_spanning_tree_count(n)
            counted = matrix_tree_count(prisms[n])
            if formula != counted:
                raise _Counterexample(f"prism n={n}: {formula} != {counted}")
            if gfib(n) != matrix_tree_count(ladders[n]):
                raise _Counterexample(f"ladder n={n}: {gfib(n)} != {matrix_tree_count(ladders[n])}")
        return f"prism and ladder counts exact-equal for n <= {n_max}"

    @check("foster-sum")
    def _():
        for n in sizes:
            for net in (prisms[n], ladders[n]):
                total = sum(resistance_oracle(net, u, v) for u, v, _ in net.edges)
                if total != net.vertex_count - 1:
                    raise _Counterexample(f"{net!r}: edge sum {total} != {net.vertex_count - 1}")
        return f"edge resistance sums equal V - 1 for n <= {n_max}"

    @check("trig-identities")
    def _():
        for n in sizes:
            closed = float(trig_sum(n, "closed"))
            direct = trig_sum(n, "direct")
            if abs(direct - closed) > tol * closed:
                raise _Counterexample(f"n={n}: trig sum {direct} vs {closed}")
            if not csc2_sum_check(n, rel_tol=tol):
                raise _Counterexample(f"n={n}: csc^2 sum off by more than rel {tol}")
        return f"both identities hold for n <= {n_max}"

    @check("eight-terminal-stencil")
    def _():
        done = 0
        for n in sizes:
            for i in range(3, n):
                keep = ["p1", f"p{i - 1}", f"p{i}", f"p{n}",
                        "q1", f"q{i - 1}", f"q{i}", f"q{n}"]
                reduced = kron_reduce(prisms[n], keep)
                stencil = EightTerminalStencil.for_prism(n, i)
                if stencil.laplacian() != reduced.laplacian():
                    raise _Counterexample(f"n={n} i={i}: stencil Laplacian differs")
                done += 1
        return f"{done} stencils exact-equal"

    @check("pseudoinverse-contract")
    def _():
        for n in sizes:
            for net in (prisms[n], ladders[n]):
                lap = net.laplacian().entries
                pinv = net.pseudoinverse().entries
                if any(x != 0 for x in (lap @ pinv @ lap - lap).ravel()):
                    raise _Counterexample(f"{net!r}: L L+ L != L")
                if any(sum(row) != 0 for row in pinv):
                    raise _Counterexample(f"{net!r}: pseudoinverse row sums nonzero")
        return f"Penrose identities exact for n <= {n_max}"

    return results
