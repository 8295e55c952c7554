"""Closed-form resistance distance, Kirchhoff index, and spectrum of prisms.

The n-prism has two vertex classes of pair: same ring (p1, p_i) and cross
ring (p1, q_i); by its symmetries every pair reduces to one of those, with
1 <= i <= n.  All closed forms live in Q(sqrt 3) and are certified rational
before being returned; each also has an independent float route so the exact
and numeric paths can check each other.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .exact import BigRat, Qsqrt3, SQRT3, two_minus_sqrt3_pow
from .genfib import gfib
from .ladder import ladder_params

KINDS = ("pp", "pq")
MODES = ("exact", "float")

_VERTEX_RE = re.compile(r"^([pq])([1-9]\d*)$")


@dataclass(frozen=True)
class PrismVertex:
    """A prism vertex address: ring 'p' or 'q', 1-based position on the ring."""

    ring: str
    pos: int

    def __post_init__(self):
        if self.ring not in ("p", "q"):
            raise ValueError(f"ring must be 'p' or 'q', got {self.ring!r}")
        if self.pos < 1:
            raise ValueError(f"position must be a positive integer, got {self.pos}")

    @classmethod
    def parse(cls, label: str) -> "PrismVertex":
        m = _VERTEX_RE.match(label)
        if m is None:
            raise ValueError(f"bad vertex label {label!r}; expected e.g. 'p3' or 'q12'")
        return cls(m.group(1), int(m.group(2)))

    @property
    def label(self) -> str:
        return f"{self.ring}{self.pos}"


def _check_args(n: int, i: int, kind: str) -> None:
    if n < 1:
        raise ValueError(f"prism index must be positive, got {n}")
    if not 1 <= i <= n:
        raise ValueError(f"pair offset must satisfy 1 <= i <= n, got i={i} with n={n}")
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def prism_resistance_base(n: int, i: int, kind: str, mode: str = "exact"):
    """r(p1, p_i) for kind "pp" or r(p1, q_i) for kind "pq", on the n-prism.

    Exact mode evaluates the Q(sqrt 3) closed form and certifies that the
    sqrt(3) component cancels, returning a Fraction; float mode evaluates an
    independently arranged binary64 form.  Both are O(log n) plus bignum cost.
    """
    _check_args(n, i, kind)
    if mode == "float":
        x = 2.0 - SQRT3
        xn = x ** n
        tail = x ** (n - i + 1) + x ** (i - 1)
        if kind == "pp":
            tail = -tail
        return (1.0 + xn + tail) / (2.0 * SQRT3 * (1.0 - xn)) + (n - i + 1) * (i - 1) / (2.0 * n)
    if mode != "exact":
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")

    gn = gfib(n)
    g2n = gfib(2 * n)
    gap = g2n - 2 * gn
    flat = Fraction((n - i + 1) * (i - 1), 2 * n) + Fraction(gn * gn, gap)
    coeff = Qsqrt3(Fraction(gn * gn, 2 * gap), Fraction(1, 12))
    tail = coeff * (two_minus_sqrt3_pow(n - i + 1) + two_minus_sqrt3_pow(i - 1))
    total = Qsqrt3(flat) - tail if kind == "pp" else Qsqrt3(flat) + tail
    if not total.is_rational:
        raise ArithmeticError(f"sqrt(3) component failed to cancel for n={n}, i={i}, {kind}")
    return total.as_rational()


def _as_vertex(v: "PrismVertex | str") -> PrismVertex:
    return v if isinstance(v, PrismVertex) else PrismVertex.parse(v)


def prism_resistance(n: int, u: "PrismVertex | str", v: "PrismVertex | str",
                     mode: str = "exact"):
    """Effective resistance between any two vertices of the n-prism.

    Rotational and reflection symmetry reduce (u, v) to a base pair: same-ring
    pairs to (p1, p_i), cross-ring pairs to (p1, q_i), with the offset taken
    around the ring.  The base form is invariant under i -> n + 2 - i, so the
    direction of the offset does not matter.
    """
    u = _as_vertex(u)
    v = _as_vertex(v)
    if n < 1:
        raise ValueError(f"prism index must be positive, got {n}")
    for w in (u, v):
        if w.pos > n:
            raise ValueError(f"vertex {w.label} does not exist on the {n}-prism")
    if u == v:
        return Fraction(0) if mode == "exact" else 0.0
    if u.ring == v.ring:
        i = (v.pos - u.pos) % n + 1
        kind = "pp"
    else:
        p, q = (u, v) if u.ring == "p" else (v, u)
        i = (q.pos - p.pos) % n + 1
        kind = "pq"
    return prism_resistance_base(n, i, kind, mode)


def prism_pair_sum(n: int, i: int, mode: str = "exact"):
    """r(p1, p_i) + r(p1, q_i): the cross terms cancel, leaving one power of x.

    Exact closed form sqrt3/3 * (1 + x^n)/(1 - x^n) + (n-i+1)(i-1)/n with
    x = 2 - sqrt3, certified rational.
    """
    _check_args(n, i, "pp")
    if mode == "float":
        xn = (2.0 - SQRT3) ** n
        return (1.0 + xn) / ((1.0 - xn) * SQRT3) + (n - i + 1) * (i - 1) / float(n)
    if mode != "exact":
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    xn = two_minus_sqrt3_pow(n)
    core = Qsqrt3(0, Fraction(1, 3)) * (1 + xn) / (1 - xn)
    total = core + Fraction((n - i + 1) * (i - 1), n)
    if not total.is_rational:
        raise ArithmeticError(f"sqrt(3) component failed to cancel for pair sum n={n}, i={i}")
    return total.as_rational()


def prism_resistance_via_reduction(n: int, i: int, kind: str) -> BigRat:
    """Exact r(p1, p_i) or r(p1, q_i) by composing reduced ladder arcs, 2 <= i <= n.

    Cutting the prism at the two target rungs splits it into an arc of i - 1
    rungs and an arc of n - i + 1 rungs; each contributes one parallel branch
    between the targets.  Conductance form throughout: the zero-length arc
    boundary (i = n) makes one branch either a bare unit path (same ring) or
    an open circuit (cross ring), both of which are finite conductances.
    """
    _check_args(n, i, kind)
    if i < 2:
        raise ValueError(f"the reduction route needs 2 <= i <= n, got i={i}")
    outer = n - i

    # flat branch: both arcs reduce to simple paths of resistance (length - 1)
    par_flat = 1 / (Fraction(1, outer + 1) + Fraction(1, i - 1))

    # field branch: side_rung for same-ring targets, rung_diag for cross-ring
    pick = (lambda p: p.side_rung) if kind == "pp" else (lambda p: p.rung_diag)
    if outer == 0:
        # bare boundary: 2 + side_rung -> 1 exactly; 2 + rung_diag -> open
        g_outer = Qsqrt3(1) if kind == "pp" else Qsqrt3(0)
    else:
        g_outer = (2 + pick(ladder_params(outer))).inverse()
    g_inner = pick(ladder_params(i)).inverse()
    par_field = (g_outer + g_inner).inverse()

    total = (par_field + par_flat) * Fraction(1, 2)
    if not total.is_rational:
        raise ArithmeticError(f"sqrt(3) component failed to cancel for n={n}, i={i}, {kind}")
    return total.as_rational()


# ---------------------------------------------------------------------------
# Kirchhoff index


def kirchhoff_closed(n: int) -> BigRat:
    """Exact Kirchhoff index of the n-prism: n(n^2-1)/6 + 2 n^2 a_n^2/(a_2n - 2 a_n).

    a is the sequence of genfib.gfib.  Values start 1, 11/3, 47/5, 58/3, ...
    """
    if n < 1:
        raise ValueError(f"prism index must be positive, got {n}")
    gn = gfib(n)
    g2n = gfib(2 * n)
    return Fraction(n * (n * n - 1), 6) + Fraction(2 * n * n * gn * gn, g2n - 2 * gn)


KIRCHHOFF_ROUTES = ("closed", "coth", "spectral")


def kirchhoff_float(n: int, route: str = "closed") -> float:
    """Kirchhoff index in binary64 by one of three independent routes.

    closed:   n(n^2-1)/6 + n^2/sqrt3 * (2/(1 - x^n) - 1), x = 2 - sqrt3
    coth:     n(n^2-1)/6 - n^2/sqrt3 * coth(n/2 * ln x)
    spectral: 2n * sum of reciprocal nonzero Laplacian eigenvalues

    x^n underflows to zero for large n; closed and coth then both limit to
    n(n^2-1)/6 + n^2/sqrt3, which is the correct asymptotic.
    """
    if n < 1:
        raise ValueError(f"prism index must be positive, got {n}")
    poly = n * (n * n - 1) / 6.0
    if route == "closed":
        xn = (2.0 - SQRT3) ** n
        return poly + n * n / SQRT3 * (2.0 / (1.0 - xn) - 1.0)
    if route == "coth":
        z = 0.5 * n * math.log(2.0 - SQRT3)
        return poly - n * n / SQRT3 / math.tanh(z)
    if route == "spectral":
        spec = prism_eigenvalues(n)
        return 2.0 * n * sum(1.0 / lam for lam in spec.nonzero)
    raise ValueError(f"route must be one of {KIRCHHOFF_ROUTES}, got {route!r}")


# ---------------------------------------------------------------------------
# spectrum


@dataclass(frozen=True)
class PrismSpectrum:
    """The 2n Laplacian eigenvalues of the n-prism, ascending.

    values[0] is the single exact zero; `nonzero` is everything after it.
    The analytic form is 2 - 2 cos(2 pi j / n) and 4 - 2 cos(2 pi j / n)
    for j = 0 .. n-1.
    """

    n: int
    values: tuple[float, ...]

    @property
    def nonzero(self) -> tuple[float, ...]:
        return self.values[1:]


def prism_eigenvalues(n: int) -> PrismSpectrum:
    """Analytic Laplacian spectrum of the n-prism (valid for n = 1 and 2 as well)."""
    if n < 1:
        raise ValueError(f"prism index must be positive, got {n}")
    values = []
    for j in range(n):
        c = 2.0 * math.cos(2.0 * math.pi * j / n)
        values.append(2.0 - c)
        values.append(4.0 - c)
    values.sort()
    return PrismSpectrum(n=n, values=tuple(values))


# ---------------------------------------------------------------------------
# trigonometric identities


def trig_sum(n: int, route: str = "direct"):
    """sum_{k=0}^{n-1} 1 / (1 + 2 sin^2(k pi / n)), two ways.

    route "direct" sums it numerically (float); route "closed" returns the
    exact rational 2 n a_n^2 / (a_2n - 2 a_n).  Values: 1, 4/3, 9/5, ...
    """
    if n < 1:
        raise ValueError(f"prism index must be positive, got {n}")
    if route == "direct":
        return sum(1.0 / (1.0 + 2.0 * math.sin(k * math.pi / n) ** 2) for k in range(n))
    if route == "closed":
        gn = gfib(n)
        return Fraction(2 * n * gn * gn, gfib(2 * n) - 2 * gn)
    raise ValueError(f"route must be 'direct' or 'closed', got {route!r}")


def csc2_sum_check(n: int, rel_tol: float = 1e-9) -> bool:
    """Check sum_{k=1}^{n-1} csc^2(k pi / n) == (n^2 - 1)/3 within rel_tol."""
    if n < 1:
        raise ValueError(f"prism index must be positive, got {n}")
    total = sum(1.0 / math.sin(k * math.pi / n) ** 2 for k in range(1, n))
    expected = (n * n - 1) / 3.0
    if expected == 0.0:
        return total == 0.0
    return abs(total - expected) <= rel_tol * expected


# ---------------------------------------------------------------------------
# tables


def resistance_table(n: int, mode: str = "exact") -> list[list]:
    """Full 2n x 2n matrix of pairwise resistances, rows ordered p1..pn, q1..qn.

    Only the 2n distinct base values are evaluated; the rest is symmetry.
    """
    if n < 1:
        raise ValueError(f"prism index must be positive, got {n}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    pp = [prism_resistance_base(n, i, "pp", mode) for i in range(1, n + 1)]
    pq = [prism_resistance_base(n, i, "pq", mode) for i in range(1, n + 1)]
    zero = Fraction(0) if mode == "exact" else 0.0

    def entry(a: int, b: int):
        ring_a, pos_a = divmod(a, n)
        ring_b, pos_b = divmod(b, n)
        if ring_a == ring_b:
            return pp[(pos_b - pos_a) % n]
        if ring_a == 0:
            return pq[(pos_b - pos_a) % n]
        return pq[(pos_a - pos_b) % n]

    size = 2 * n
    return [[zero if a == b else entry(a, b) for b in range(size)] for a in range(size)]
