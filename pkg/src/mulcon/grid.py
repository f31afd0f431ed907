"""The grid G of a x b points, balanced bipartite graphs, and the subset Z.

Indices are 0-based: point (i, j) is the intersection of the i-th
(1, 0)-line u = lam_i with the j-th (0, 1)-line v = mu_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable

import numpy as np

from .exceptions import DomainError
from .fields import QQ, FieldDescriptor
from .forms import QPoint, evaluation_matrix
from .linalg import rank


@dataclass(frozen=True)
class Grid:
    a: int
    b: int
    lam: tuple
    mu: tuple
    field: FieldDescriptor = QQ

    def __post_init__(self):
        lam = tuple(self.field(v) for v in self.lam)
        mu = tuple(self.field(v) for v in self.mu)
        if len(lam) != self.a or len(mu) != self.b:
            raise DomainError("grid needs a lambda values and b mu values")
        if len(set(lam)) != self.a or len(set(mu)) != self.b:
            raise DomainError("grid values must be pairwise distinct")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @classmethod
    def make(cls, a: int, b: int, field: FieldDescriptor = QQ, seed: int | None = None) -> Grid:
        """Values 1..a and 1..b, or distinct random nonzero residues when
        ``seed`` is given over a prime field."""
        if a < 1 or b < 1:
            raise DomainError(f"grid needs a, b >= 1, got ({a}, {b})")
        if field.p is None or seed is None:
            return cls(a, b, tuple(range(1, a + 1)), tuple(range(1, b + 1)), field)
        rng = np.random.default_rng(seed)
        vals = rng.choice(np.arange(1, field.p), size=a + b, replace=False)
        return cls(a, b, tuple(int(v) for v in vals[:a]), tuple(int(v) for v in vals[a:]), field)

    def point(self, i: int, j: int) -> QPoint:
        return QPoint.affine(self.lam[i], self.mu[j])

    @property
    def indices(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.a) for j in range(self.b)]

    @property
    def points(self) -> list[QPoint]:
        return [self.point(i, j) for i, j in self.indices]

    def swap(self) -> Grid:
        return Grid(self.b, self.a, self.mu, self.lam, self.field)


@dataclass(frozen=True)
class BipartiteGraph:
    """Edges (i, j) join right vertex i in range(r) to left vertex j in range(l)."""

    r: int
    l: int
    edges: frozenset[tuple[int, int]]

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def right_degrees(self) -> list[int]:
        deg = [0] * self.r
        for i, _ in self.edges:
            deg[i] += 1
        return deg

    def left_degrees(self) -> list[int]:
        deg = [0] * self.l
        for _, j in self.edges:
            deg[j] += 1
        return deg

    def meets_floor_bounds(self) -> bool:
        n = self.n_edges
        return min(self.right_degrees()) >= n // self.r and min(self.left_degrees()) >= n // self.l


def bipartite_graph(r: int, l: int, n_edges: int) -> BipartiteGraph:
    """Round-robin fill with right and left degree sequences differing by at most one.

    Edge k joins k mod r to (k + k // lcm(r, l)) mod l.  Within each block of
    lcm(r, l) consecutive edges the cells are those with j - i fixed modulo
    gcd(r, l), and successive blocks shift that residue, so all r*l cells
    appear once before any repeats.
    """
    if r < 1 or l < 1 or not 1 <= n_edges <= r * l:
        raise DomainError(f"need r, l >= 1 and 1 <= N <= r*l, got ({r}, {l}, {n_edges})")
    period = lcm(r, l)
    edges = [(k % r, (k + k // period) % l) for k in range(n_edges)]
    out = frozenset(edges)
    assert len(out) == n_edges
    return BipartiteGraph(r, l, out)


@dataclass(frozen=True)
class ZSubset:
    grid: Grid
    indices: frozenset[tuple[int, int]]
    alpha: int
    beta: int

    @property
    def alpha_hat(self) -> int:
        return self.grid.a - 2 - self.alpha

    @property
    def beta_hat(self) -> int:
        return self.grid.b - 2 - self.beta

    @property
    def points(self) -> list[QPoint]:
        return [self.grid.point(i, j) for i, j in sorted(self.indices)]

    def __len__(self) -> int:
        return len(self.indices)


def _check_params(grid: Grid, alpha: int, beta: int) -> tuple[int, int]:
    a, b = grid.a, grid.b
    if not (-1 <= alpha <= a - 2 and -1 <= beta <= b - 2):
        raise DomainError(f"need -1 <= alpha <= {a - 2} and -1 <= beta <= {b - 2}")
    ah, bh = a - 2 - alpha, b - 2 - beta
    if (alpha + 1) * (beta + 1) > (ah + 1) * (bh + 1):
        raise DomainError(
            f"(alpha+1)(beta+1) = {(alpha + 1) * (beta + 1)} exceeds "
            f"(alpha_hat+1)(beta_hat+1) = {(ah + 1) * (bh + 1)}"
        )
    return ah, bh


def construct_Z(grid: Grid, alpha: int, beta: int) -> ZSubset:
    """A subset of (alpha_hat+1)(beta_hat+1) grid points with
    H^0 I_Z(alpha, beta) = H^0 I_Z(alpha_hat, beta_hat) = 0."""
    ah, bh = _check_params(grid, alpha, beta)
    if alpha <= ah and beta <= bh:
        idx = {(i, j) for i in range(ah + 1) for j in range(bh + 1)}
    elif alpha <= ah:
        # alpha_hat + 1 lines L_i each receive beta_hat + 1 points spread
        # over the first beta + 1 lines M_j
        g = bipartite_graph(ah + 1, beta + 1, (ah + 1) * (bh + 1))
        idx = set(g.edges)
    else:
        swapped = construct_Z(grid.swap(), beta, alpha)
        idx = {(i, j) for j, i in swapped.indices}
    return ZSubset(grid, frozenset(idx), alpha, beta)


def _full_column_rank(points, alpha: int, beta: int, field) -> bool:
    if alpha < 0 or beta < 0:
        # no forms of this bidegree: the condition is vacuous
        return True
    mat = evaluation_matrix(points, alpha, beta, field)
    return rank(mat) == (alpha + 1) * (beta + 1)


def verify_Z(z: ZSubset) -> bool:
    """Both evaluation matrices of Z have full column rank.

    With |Z| = (alpha_hat+1)(beta_hat+1) the second one is square, so Z
    also imposes independent conditions on forms of bidegree
    (alpha_hat, beta_hat).
    """
    pts, field = z.points, z.grid.field
    return _full_column_rank(pts, z.alpha, z.beta, field) and _full_column_rank(
        pts, z.alpha_hat, z.beta_hat, field
    )


def grid_points_minus(grid: Grid, z: ZSubset | Iterable[tuple[int, int]]) -> list[QPoint]:
    """Points of G not in Z, in row-major order."""
    if isinstance(z, ZSubset):
        if z.grid != grid:
            raise DomainError("Z belongs to a different grid")
        idx = z.indices
    else:
        idx = frozenset(z)
        if not idx <= set(grid.indices):
            raise DomainError("indices outside the grid")
    return [grid.point(i, j) for i, j in grid.indices if (i, j) not in idx]
