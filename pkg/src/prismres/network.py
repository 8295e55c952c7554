"""Resistance networks and the linear-algebra oracle used to cross-check closed forms.

A Network is a weighted multigraph (parallel edges and self-loops allowed)
whose edges carry positive resistances, either all exact rationals or all
binary64 floats.  Everything observable about it flows through the graph
Laplacian: effective resistances and the Kirchhoff index via the Moore-Penrose
pseudoinverse, spanning-tree counts via a cofactor, and reductions onto a
terminal set via the Schur complement.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .exact import BigRat, to_rational
from .ladder import DeltaEdges, ladder_delta_edges

# Relative threshold under which a float pivot is declared singular.
FLOAT_PIVOT_TOL = 1e-12
# Absolute magnitude under which a float Schur off-diagonal is an open circuit.
SCHUR_DROP_TOL = 1e-12


class DisconnectedNetworkError(ValueError):
    """An operation needed a connected network and the Laplacian said otherwise."""


class SingularMatrixError(ArithmeticError):
    """A matrix that was expected to be invertible is (numerically) singular."""


# ---------------------------------------------------------------------------
# dense symmetric matrices, exact or float


def _shadow_abs(value: Fraction) -> float:
    """Float magnitude of an exact rational, for pivot ranking only."""
    try:
        return abs(float(value))
    except OverflowError:
        return math.inf


def _invert_exact(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Fraction, pivoting on the float shadow.

    The shadow only ranks candidate pivots; arithmetic stays exact.  Ranking
    by magnitude keeps intermediate numerators and denominators from blowing
    up on the structured matrices this package produces.
    """
    n = len(rows)
    zero = Fraction(0)
    one = Fraction(1)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: _shadow_abs(aug[r][col]))
        if aug[pivot][col] == 0:
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), -1)
            if pivot < 0:
                raise SingularMatrixError(f"exact matrix is singular (column {col})")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = one / aug[col][col]
        aug[col] = [x * scale for x in aug[col]]
        prow = aug[col]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
    return [row[n:] for row in aug]


def _invert_float(arr: np.ndarray) -> np.ndarray:
    """LU inverse of a float matrix, rejecting numerically singular input."""
    scale = float(np.abs(arr).max()) if arr.size else 0.0
    with warnings.catch_warnings():
        # scipy warns on exactly singular input; the diagonal gate below decides
        warnings.simplefilter("ignore")
        lu, piv = lu_factor(arr)
    diag = np.abs(np.diag(lu))
    if not np.isfinite(lu).all() or diag.min() <= FLOAT_PIVOT_TOL * scale:
        raise SingularMatrixError("float matrix is numerically singular")
    return lu_solve((lu, piv), np.eye(arr.shape[0]))


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss elimination)."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), -1)
            if swap < 0:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def _rational_det(m: list[list[Fraction]]) -> Fraction:
    """Determinant over Fraction by triangularization."""
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), -1)
        if pivot < 0:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / p
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


class SymMatrix:
    """Dense symmetric matrix over exact rationals or binary64 floats.

    Exact matrices hold Fractions in a numpy object array; float matrices are
    plain float64 arrays.  The mode is decided by the entries: any float makes
    the whole matrix float, otherwise ints are promoted to Fraction.
    """

    __slots__ = ("_m",)

    def __init__(self, rows, check: bool = True):
        if isinstance(rows, np.ndarray) and rows.dtype != object:
            arr = np.array(rows, dtype=float)
        else:
            data = [list(r) for r in rows]
            if any(isinstance(x, float) for row in data for x in row):
                arr = np.array([[float(x) for x in row] for row in data], dtype=float)
            else:
                arr = np.array(
                    [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in data],
                    dtype=object,
                )
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if check:
            if arr.dtype == object:
                if not all(arr[i, j] == arr[j, i] for i in range(arr.shape[0]) for j in range(i)):
                    raise ValueError("matrix is not symmetric")
            elif not np.array_equal(arr, arr.T):
                raise ValueError("matrix is not symmetric")
        self._m = arr

    @classmethod
    def identity(cls, order: int, exact: bool = True) -> "SymMatrix":
        if exact:
            one, zero = Fraction(1), Fraction(0)
            return cls([[one if i == j else zero for j in range(order)] for i in range(order)], check=False)
        return cls(np.eye(order), check=False)

    @property
    def order(self) -> int:
        return self._m.shape[0]

    @property
    def is_exact(self) -> bool:
        return self._m.dtype == object

    @property
    def entries(self) -> np.ndarray:
        """The backing array; treat as read-only."""
        return self._m

    def __getitem__(self, key: tuple[int, int]):
        return self._m[key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        if self.is_exact != other.is_exact or self.order != other.order:
            return False
        return bool((self._m == other._m).all())

    def __repr__(self) -> str:
        kind = "exact" if self.is_exact else "float"
        return f"SymMatrix(order={self.order}, {kind})"

    def to_float(self) -> "SymMatrix":
        if not self.is_exact:
            return self
        return SymMatrix(np.array([[float(x) for x in row] for row in self._m], dtype=float), check=False)

    def row_sums(self) -> list:
        return [sum(row) for row in self._m]

    def inverse(self) -> "SymMatrix":
        """Exact or numeric inverse; SingularMatrixError if not invertible."""
        if self.is_exact:
            inv = _invert_exact([list(row) for row in self._m])
            return SymMatrix(inv, check=False)
        inv = _invert_float(self._m)
        return SymMatrix((inv + inv.T) / 2.0, check=False)

    def determinant(self):
        if not self.is_exact:
            return float(np.linalg.det(self._m))
        rows = [list(r) for r in self._m]
        if all(x.denominator == 1 for row in rows for x in row):
            return Fraction(_bareiss_det([[x.numerator for x in row] for row in rows]))
        return _rational_det(rows)

    def principal_minor(self, drop: int) -> "SymMatrix":
        """The matrix with row and column `drop` deleted."""
        keep = [i for i in range(self.order) if i != drop]
        return SymMatrix(self._m[np.ix_(keep, keep)], check=False)

    def eigenvalues(self) -> np.ndarray:
        """Float spectrum, ascending (symmetric eigensolver)."""
        return np.linalg.eigvalsh(self.to_float().entries)


def pinv_laplacian(lap: SymMatrix) -> SymMatrix:
    """Moore-Penrose pseudoinverse of a connected network's Laplacian.

    Uses the rank-one shift (L - J/N)^{-1} + J/N with J the all-ones matrix,
    valid because the Laplacian's kernel is spanned by the ones vector.  A
    disconnected network makes the shifted matrix singular, which is how
    disconnection is detected and reported.
    """
    n = lap.order
    if lap.is_exact:
        shift = Fraction(1, n)
        shifted = [[lap[i, j] - shift for j in range(n)] for i in range(n)]
        try:
            inv = _invert_exact(shifted)
        except SingularMatrixError:
            raise DisconnectedNetworkError("network is disconnected") from None
        return SymMatrix([[x + shift for x in row] for row in inv], check=False)
    ones = np.full((n, n), 1.0 / n)
    try:
        inv = _invert_float(lap.entries - ones)
    except SingularMatrixError:
        raise DisconnectedNetworkError("network is disconnected") from None
    out = inv + ones
    return SymMatrix((out + out.T) / 2.0, check=False)


# ---------------------------------------------------------------------------
# networks


class Network:
    """Immutable weighted multigraph with positive edge resistances.

    Vertices are string labels; edges are (u, v, r) triples and may repeat
    (parallel resistors) or loop (u == v; loops carry no current and are
    ignored by the Laplacian).  A single float resistance puts the whole
    network in float mode; otherwise resistances are exact rationals.
    """

    __slots__ = ("_vertices", "_edges", "_index", "_exact", "_lap", "_pinv")

    def __init__(self, vertices: Sequence[str], edges: Iterable[tuple]):
        self._vertices = tuple(vertices)
        if not self._vertices:
            raise ValueError("network needs at least one vertex")
        if any(not isinstance(v, str) for v in self._vertices):
            raise ValueError("vertex labels must be strings")
        self._index = {v: i for i, v in enumerate(self._vertices)}
        if len(self._index) != len(self._vertices):
            raise ValueError("duplicate vertex labels")

        triples = list(edges)
        self._exact = not any(isinstance(r, float) for _, _, r in triples)
        indexed = []
        for u, v, r in triples:
            if u not in self._index or v not in self._index:
                raise ValueError(f"edge ({u!r}, {v!r}) references an unknown vertex")
            r = to_rational(r) if self._exact else float(r)
            if not r > 0:
                raise ValueError(f"edge ({u!r}, {v!r}) must have positive resistance, got {r}")
            indexed.append((self._index[u], self._index[v], r))
        self._edges = tuple(indexed)
        self._lap: SymMatrix | None = None
        self._pinv: SymMatrix | None = None

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> Iterator[tuple[str, str, BigRat | float]]:
        for iu, iv, r in self._edges:
            yield (self._vertices[iu], self._vertices[iv], r)

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def is_exact(self) -> bool:
        return self._exact

    def vertex_index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown vertex {label!r}") from None

    def __repr__(self) -> str:
        mode = "exact" if self._exact else "float"
        return f"Network({self.vertex_count} vertices, {self.edge_count} edges, {mode})"

    def laplacian(self) -> SymMatrix:
        """Weighted graph Laplacian (conductance = 1/resistance; loops ignored)."""
        if self._lap is None:
            n = self.vertex_count
            if self._exact:
                rows = [[Fraction(0)] * n for _ in range(n)]
            else:
                rows = np.zeros((n, n))
            for iu, iv, r in self._edges:
                if iu == iv:
                    continue
                g = 1 / r
                rows[iu][iu] += g
                rows[iv][iv] += g
                rows[iu][iv] -= g
                rows[iv][iu] -= g
            self._lap = SymMatrix(rows, check=False)
        return self._lap

    def pseudoinverse(self) -> SymMatrix:
        """Cached pinv_laplacian of this network's Laplacian."""
        if self._pinv is None:
            self._pinv = pinv_laplacian(self.laplacian())
        return self._pinv

    def to_float(self) -> "Network":
        """Float-mode copy (same topology, binary64 resistances)."""
        if not self._exact:
            return self
        return Network(self._vertices,
                       [(self._vertices[iu], self._vertices[iv], float(r)) for iu, iv, r in self._edges])


def laplacian(net: Network) -> SymMatrix:
    return net.laplacian()


def resistance_oracle(net: Network, u: str, v: str):
    """Effective resistance between two vertices, from the pseudoinverse.

    r(u, v) = L+[u,u] - 2 L+[u,v] + L+[v,v]; exact Fraction on exact networks,
    float otherwise.  Raises DisconnectedNetworkError when u and v cannot see
    each other (any disconnection, in fact, since the pseudoinverse needs a
    connected network).
    """
    i = net.vertex_index(u)
    j = net.vertex_index(v)
    if i == j:
        return Fraction(0) if net.is_exact else 0.0
    lp = net.pseudoinverse()
    return lp[i, i] - 2 * lp[i, j] + lp[j, j]


def kirchhoff_oracle(net: Network):
    """Sum of effective resistances over all vertex pairs: N * trace(L+)."""
    lp = net.pseudoinverse()
    total = sum(lp[i, i] for i in range(net.vertex_count))
    return net.vertex_count * total


def matrix_tree_count(net: Network):
    """Spanning-tree count via a Laplacian cofactor (matrix-tree theorem).

    Exact networks only.  Unit resistances give the plain spanning-tree count;
    general rational resistances give the conductance-weighted count (sum over
    spanning trees of the product of edge conductances).  Returns an int when
    the value is integral, else a Fraction.  Disconnected networks count 0.
    """
    if not net.is_exact:
        raise TypeError("matrix-tree counting requires an exact network")
    if net.vertex_count == 1:
        return 1
    det = net.laplacian().principal_minor(0).determinant()
    return det.numerator if det.denominator == 1 else det


def kron_reduce(net: Network, keep: Sequence[str]) -> Network:
    """Collapse a network onto `keep`, preserving their pairwise resistances.

    Takes the Schur complement of the Laplacian onto the kept rows and reads
    the surviving edges off its off-diagonal entries.  Kept vertices appear in
    the order given.  Exact zeros (and float magnitudes below SCHUR_DROP_TOL)
    are open circuits and produce no edge.  Interior vertices with no path to
    any kept vertex make the interior block singular, which raises
    DisconnectedNetworkError.
    """
    keep = list(keep)
    if not keep:
        raise ValueError("keep must name at least one vertex")
    kidx = [net.vertex_index(v) for v in keep]
    if len(set(kidx)) != len(kidx):
        raise ValueError("keep contains duplicate vertices")

    lap = net.laplacian().entries
    kept = set(kidx)
    interior = [i for i in range(net.vertex_count) if i not in kept]
    if net.is_exact:
        if interior:
            inner = [[lap[r][c] for c in interior] for r in interior]
            try:
                inv = np.array(_invert_exact(inner), dtype=object)
            except SingularMatrixError:
                raise DisconnectedNetworkError(
                    "interior vertices have no path to any kept vertex") from None
            ki = lap[np.ix_(kidx, interior)]
            schur = lap[np.ix_(kidx, kidx)] - ki @ inv @ ki.T
        else:
            schur = lap[np.ix_(kidx, kidx)]
        if any(sum(row) != 0 for row in schur):
            raise AssertionError("Schur complement lost the zero row sums")

        def surviving(i: int, j: int):
            g = -schur[i, j]
            if g == 0:
                return None
            if g < 0:
                raise AssertionError("Schur complement has a positive off-diagonal")
            return 1 / g
    else:
        kk = lap[np.ix_(kidx, kidx)]
        if interior:
            inner = lap[np.ix_(interior, interior)]
            try:
                inv = _invert_float(inner)
            except SingularMatrixError:
                raise DisconnectedNetworkError(
                    "interior vertices have no path to any kept vertex") from None
            ki = lap[np.ix_(kidx, interior)]
            schur = kk - ki @ inv @ ki.T
            schur = (schur + schur.T) / 2.0
        else:
            schur = kk

        def surviving(i: int, j: int):
            g = -schur[i, j]
            if abs(g) < SCHUR_DROP_TOL:
                return None
            if g < 0:
                raise AssertionError("Schur complement has a positive off-diagonal")
            return 1.0 / g

    edges = []
    for i in range(len(kidx)):
        for j in range(i + 1, len(kidx)):
            r = surviving(i, j)
            if r is not None:
                edges.append((keep[i], keep[j], r))
    return Network(keep, edges)


# ---------------------------------------------------------------------------
# standard constructions


def build_prism(n: int) -> Network:
    """The n-prism: cycles p1..pn and q1..qn plus rungs (p_i, q_i), all 1 ohm.

    The generic construction is used for every n, so n = 1 degenerates to one
    rung plus a self-loop on each endpoint and n = 2 to doubled cycle edges;
    the edge count is exactly 3n in all cases.
    """
    if n < 1:
        raise ValueError(f"prism index must be positive, got {n}")
    ps = [f"p{i}" for i in range(1, n + 1)]
    qs = [f"q{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges.append((ps[i], ps[j], 1))
        edges.append((qs[i], qs[j], 1))
        edges.append((ps[i], qs[i], 1))
    return Network(ps + qs, edges)


def build_ladder(n: int) -> Network:
    """The n-rung ladder: rails p1..pn and q1..qn plus n rungs, 3n - 2 unit edges."""
    if n < 1:
        raise ValueError(f"ladder must have at least one rung, got n={n}")
    ps = [f"p{i}" for i in range(1, n + 1)]
    qs = [f"q{i}" for i in range(1, n + 1)]
    edges = [(ps[i], qs[i], 1) for i in range(n)]
    edges += [(ps[i], ps[i + 1], 1) for i in range(n - 1)]
    edges += [(qs[i], qs[i + 1], 1) for i in range(n - 1)]
    return Network(ps + qs, edges)


# ---------------------------------------------------------------------------
# JSON interchange


def network_to_json(net: Network) -> dict:
    """Schema: {"vertices": [str, ...], "edges": [{"u", "v", "r"}, ...]}.

    Exact resistances serialize as rational strings ("5/12", "3"); float
    resistances as JSON numbers.  Lossless round-trip in both modes.
    """
    def encode(r):
        return str(r) if isinstance(r, Fraction) else r

    return {
        "vertices": list(net.vertices),
        "edges": [{"u": u, "v": v, "r": encode(r)} for u, v, r in net.edges],
    }


def network_from_json(doc: dict) -> Network:
    """Parse and validate the schema of network_to_json; ValueError on anything off."""
    if not isinstance(doc, dict) or set(doc) != {"vertices", "edges"}:
        raise ValueError('network document must have exactly the keys "vertices" and "edges"')
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ValueError('"vertices" must be a list of strings')
    raw_edges = doc["edges"]
    if not isinstance(raw_edges, list):
        raise ValueError('"edges" must be a list')
    edges = []
    for k, e in enumerate(raw_edges):
        if not isinstance(e, dict) or set(e) != {"u", "v", "r"}:
            raise ValueError(f'edge #{k} must be an object with exactly the keys "u", "v", "r"')
        u, v, r = e["u"], e["v"], e["r"]
        if not isinstance(u, str) or not isinstance(v, str):
            raise ValueError(f'edge #{k}: "u" and "v" must be vertex labels')
        if isinstance(r, bool) or not isinstance(r, (str, int, float)):
            raise ValueError(f'edge #{k}: "r" must be a rational string or a number')
        if isinstance(r, str):
            try:
                r = Fraction(r)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f'edge #{k}: bad rational {r!r}') from exc
        edges.append((u, v, r))
    return Network(vertices, edges)


# ---------------------------------------------------------------------------
# the eight-terminal reduction stencil


@dataclass(frozen=True)
class EightTerminalStencil:
    """Conductance stencil of a prism reduced onto two rung cross-sections.

    Cutting the n-prism at rungs i-1 and i (kept vertices, in order:
    p1, p_{i-1}, p_i, p_n, q1, q_{i-1}, q_i, q_n) leaves two reduced ladders
    joined by the four surviving unit edges (p_n,p1), (p_{i-1},p_i) and their
    q twins.  `lower` is the reduced arc p1..p_{i-1} (i-1 rungs), `upper` the
    arc p_i..p_n (n-i+1 rungs).  Conductances, because the lower diagonal is
    an open circuit when i = 3.
    """

    lower: DeltaEdges
    upper: DeltaEdges

    @classmethod
    def for_prism(cls, n: int, i: int) -> "EightTerminalStencil":
        """Stencil of the n-prism cut at rung index i, 3 <= i <= n - 1."""
        if not 3 <= i <= n - 1:
            raise ValueError(f"need 3 <= i <= n-1 so both arcs are true ladders, got n={n}, i={i}")
        return cls(lower=ladder_delta_edges(i - 1), upper=ladder_delta_edges(n - i + 1))

    @property
    def lower_corner_degree(self) -> BigRat:
        """Laplacian diagonal at p1, p_{i-1}, q1, q_{i-1}: one unit edge plus the lower arc."""
        return (1 + self.lower.side + self.lower.rung + self.lower.diag).as_rational()

    @property
    def upper_corner_degree(self) -> BigRat:
        """Laplacian diagonal at p_i, p_n, q_i, q_n: one unit edge plus the upper arc."""
        return (1 + self.upper.side + self.upper.rung + self.upper.diag).as_rational()

    def network(self) -> Network:
        """The eight-vertex network itself, with generic labels t0..t7."""
        labels = [f"t{k}" for k in range(8)]
        edges: list[tuple[str, str, Fraction]] = []

        def add(i: int, j: int, conductance) -> None:
            g = conductance if isinstance(conductance, Fraction) else conductance.as_rational()
            if g != 0:
                edges.append((labels[i], labels[j], 1 / g))

        lo, up = self.lower, self.upper
        for (i, j) in ((0, 1), (4, 5)):
            add(i, j, lo.side)
        for (i, j) in ((0, 4), (1, 5)):
            add(i, j, lo.rung)
        for (i, j) in ((0, 5), (1, 4)):
            add(i, j, lo.diag)
        for (i, j) in ((2, 3), (6, 7)):
            add(i, j, up.side)
        for (i, j) in ((2, 6), (3, 7)):
            add(i, j, up.rung)
        for (i, j) in ((2, 7), (3, 6)):
            add(i, j, up.diag)
        for (i, j) in ((0, 3), (1, 2), (4, 7), (5, 6)):
            add(i, j, Fraction(1))
        return Network(labels, edges)

    def laplacian(self) -> SymMatrix:
        return self.network().laplacian()


def four_corner_laplacian(delta: DeltaEdges) -> SymMatrix:
    """Laplacian of a reduced ladder's corner graph, ordered [p_n, q_n, p1, q1]."""
    labels = ["a", "b", "c", "d"]
    edges = []
    for (i, j), g in (((0, 1), delta.rung), ((2, 3), delta.rung),
                      ((0, 2), delta.side), ((1, 3), delta.side),
                      ((0, 3), delta.diag), ((1, 2), delta.diag)):
        g = g.as_rational()
        if g != 0:
            edges.append((labels[i], labels[j], 1 / g))
    return Network(labels, edges).laplacian()
