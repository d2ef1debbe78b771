"""Persistent homology of a distance matrix in dimensions 0 and 1.

Two routes compute the same diagram:

* ``compute_persistence`` is the production path. Connected-component
  pairs come from a union-find sweep over the filtration-ordered edges
  (the standard specialization of column reduction in dimension 1, whose
  finite deaths are the minimum-spanning-tree edge weights). Loop pairs
  come from reducing the triangle boundary matrix over GF(2), processing
  triangles grouped behind their highest-ranked edge so the full triangle
  list never has to be materialized or sorted. Edges paired by that
  reduction are exactly the cleared columns of the classic top-down
  algorithm.
* ``naive_reduce`` materializes the whole boundary matrix and reduces it
  left to right with no optimizations. It is the ground-truth oracle and
  is guarded to small inputs.

Births and deaths are always entries of the input matrix (a simplex value
is a max over edge values), so diagrams from the two routes agree exactly,
not just within tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .metric import DistanceMatrix, enclosing_radius

INF = math.inf

_RANK_SENTINEL = np.iinfo(np.int32).max


@dataclass(frozen=True)
class Simplex:
    """Vertex/edge/triangle with its clique filtration value (max edge)."""

    vertices: tuple
    filtration_value: float

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


@dataclass
class Filtration:
    simplices: list
    cap: float


@dataclass(frozen=True)
class PersistencePair:
    dim: int
    birth: float
    death: float  # math.inf for essential classes

    @property
    def lifetime(self) -> float:
        return self.death - self.birth


@dataclass
class PersistenceDiagram:
    pairs: list
    n_points: int
    cap: float

    def in_dim(self, dim: int) -> list:
        return [p for p in self.pairs if p.dim == dim]

    def as_multiset(self):
        """Sorted (dim, birth, death) tuples, for equality checks."""
        return sorted((p.dim, p.birth, p.death) for p in self.pairs)


def build_filtration(m: DistanceMatrix, cap: float) -> Filtration:
    """Explicit Rips filtration up to triangles, for the oracle and tests.

    Vertices enter at 0, edges at their length if <= cap, triangles at the
    max of their three edges once all of them are <= cap. Sorted by
    (value, dimension, vertex tuple) so faces precede cofaces.
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    n = m.n
    d = m.as_square()
    simplices = [Simplex((i,), 0.0) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if d[i, j] <= cap:
                simplices.append(Simplex((i, j), float(d[i, j])))
    for i in range(n):
        for j in range(i + 1, n):
            if d[i, j] > cap:
                continue
            for k in range(j + 1, n):
                if d[i, k] <= cap and d[j, k] <= cap:
                    value = max(d[i, j], d[i, k], d[j, k])
                    simplices.append(Simplex((i, j, k), float(value)))
    simplices.sort(key=lambda s: (s.filtration_value, s.dim, s.vertices))
    return Filtration(simplices, cap)


def _sorted_edges(square: np.ndarray, cap: float):
    """Edges under the cap in filtration order, plus a rank lookup table.

    Ranks respect (value, i, j); the lookup table holds a large sentinel
    for pairs above the cap and on the diagonal.
    """
    n = square.shape[0]
    iu, ju = np.triu_indices(n, 1)
    vals = square[iu, ju]
    keep = vals <= cap
    iu, ju, vals = iu[keep], ju[keep], vals[keep]
    order = np.lexsort((ju, iu, vals))
    iu = iu[order].astype(np.int32)
    ju = ju[order].astype(np.int32)
    vals = np.ascontiguousarray(vals[order])
    rank = np.full((n, n), _RANK_SENTINEL, dtype=np.int32)
    ids = np.arange(len(vals), dtype=np.int32)
    rank[iu, ju] = ids
    rank[ju, iu] = ids
    return iu, ju, vals, rank


def compute_persistence(m: DistanceMatrix, cap: float | None = None) -> PersistenceDiagram:
    """Dimension-0 and -1 persistence pairs of a distance matrix.

    With the default cap (the enclosing radius) every loop class dies at a
    finite value. Zero-lifetime pairs are discarded.
    """
    if m.n < 1:
        raise ValueError("distance matrix must cover at least one point")
    if cap is None:
        cap = enclosing_radius(m)
    square = m.as_square()
    ei, ej, ev, rank = _sorted_edges(square, cap)
    h0_deaths, n_components, h1_births, h1_deaths, h1_essential = _kernels.rips_pairs(
        m.n, ei, ej, ev, rank
    )
    pairs = []
    for d in np.sort(h0_deaths):
        pairs.append(PersistencePair(0, 0.0, float(d)))
    pairs.extend(PersistencePair(0, 0.0, INF) for _ in range(int(n_components)))
    order = np.lexsort((h1_deaths, h1_births))
    for b, d in zip(h1_births[order], h1_deaths[order]):
        pairs.append(PersistencePair(1, float(b), float(d)))
    for b in np.sort(h1_essential):
        pairs.append(PersistencePair(1, float(b), INF))
    pairs.sort(key=lambda p: (p.dim, p.birth, p.death))
    return PersistenceDiagram(pairs, m.n, float(cap))


_NAIVE_MAX_POINTS = 25


def naive_reduce(m: DistanceMatrix, cap: float | None = None) -> PersistenceDiagram:
    """Ground-truth diagram via full boundary-matrix reduction.

    Builds the explicit filtration, assembles one global boundary matrix
    over GF(2), and reduces columns left to right with the plain low-pivot
    rule. Quadratic-to-cubic in the simplex count, hence the size guard.
    """
    if m.n > _NAIVE_MAX_POINTS:
        raise ValueError(f"naive_reduce is limited to {_NAIVE_MAX_POINTS} points, got {m.n}")
    if cap is None:
        cap = enclosing_radius(m)
    filtration = build_filtration(m, cap)
    simplices = filtration.simplices
    position = {s.vertices: idx for idx, s in enumerate(simplices)}

    columns = []
    for s in simplices:
        if s.dim == 0:
            columns.append(set())
        else:
            verts = s.vertices
            faces = [verts[:i] + verts[i + 1 :] for i in range(len(verts))]
            columns.append({position[f] for f in faces})

    pivot_owner = {}
    for j in range(len(columns)):
        col = columns[j]
        while col:
            low = max(col)
            owner = pivot_owner.get(low)
            if owner is None:
                pivot_owner[low] = j
                break
            col ^= columns[owner]

    pairs = []
    birth_positions = set(pivot_owner)
    death_positions = set(pivot_owner.values())
    for low, j in pivot_owner.items():
        birth_s, death_s = simplices[low], simplices[j]
        if death_s.filtration_value > birth_s.filtration_value:
            pairs.append(
                PersistencePair(birth_s.dim, birth_s.filtration_value, death_s.filtration_value)
            )
    for j, s in enumerate(simplices):
        if j in birth_positions or j in death_positions:
            continue
        if not columns[j] and s.dim <= 1:
            pairs.append(PersistencePair(s.dim, s.filtration_value, INF))
    pairs.sort(key=lambda p: (p.dim, p.birth, p.death))
    return PersistenceDiagram(pairs, m.n, float(cap))


def betti_numbers(diagram: PersistenceDiagram, r: float):
    """(b0, b1) at scale r: pairs with birth <= r < death."""
    if r < 0 or r > diagram.cap:
        raise ValueError(f"scale r={r} outside [0, cap={diagram.cap}]: diagram is truncated there")
    b0 = sum(1 for p in diagram.pairs if p.dim == 0 and p.birth <= r < p.death)
    b1 = sum(1 for p in diagram.pairs if p.dim == 1 and p.birth <= r < p.death)
    return b0, b1


def diagram_rows(selector: str, diagram: PersistenceDiagram):
    """Serialization rows (selector, dim, birth, death), deterministic order."""
    rows = []
    for p in sorted(diagram.pairs, key=lambda p: (p.dim, p.birth, p.death)):
        death = "inf" if math.isinf(p.death) else repr(p.death)
        rows.append((selector, str(p.dim), repr(p.birth), death))
    return rows
