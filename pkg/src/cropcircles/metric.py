"""Pairwise distances for embedded point clouds.

All coordinates entering this module are already in kilometres (time has
been scaled by the velocity parameter upstream), so the metric is plain
Euclidean distance. The filtration cap used downstream is the enclosing
radius: min over points of the max distance to any other point. No finite
1-dimensional feature survives past it, and it is a tighter cap than the
cloud diameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist, squareform


@dataclass(frozen=True)
class MetricConfig:
    """Velocity parameter k in km/hr: 1 hour of separation counts as k km."""

    k: float = 10.0

    def __post_init__(self):
        if not (self.k > 0):
            raise ValueError(f"velocity parameter k must be positive, got {self.k}")


class DistanceMatrix:
    """Symmetric pairwise distances, stored once in condensed form.

    `entries` is the strict lower triangle flattened in scipy's condensed
    order (pair (i, j), i < j, at index n*i - i*(i+1)//2 + j - i - 1).
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: np.ndarray):
        expected = n * (n - 1) // 2
        if entries.shape != (expected,):
            raise ValueError(f"expected {expected} condensed entries for n={n}, got {entries.shape}")
        if expected and entries.min() < 0:
            raise ValueError("distances must be non-negative")
        self.n = n
        self.entries = np.asarray(entries, dtype=np.float64)

    @classmethod
    def from_square(cls, square: np.ndarray) -> "DistanceMatrix":
        square = np.asarray(square, dtype=np.float64)
        n = square.shape[0]
        if square.shape != (n, n):
            raise ValueError("square matrix required")
        iu = np.triu_indices(n, 1)
        return cls(n, square[iu])

    def value(self, i: int, j: int) -> float:
        if i == j:
            return 0.0
        if i > j:
            i, j = j, i
        return float(self.entries[self.n * i - i * (i + 1) // 2 + j - i - 1])

    def as_square(self) -> np.ndarray:
        if self.n == 1:
            return np.zeros((1, 1))
        return squareform(self.entries)


def scaled_distance(p, q, config: MetricConfig) -> float:
    """Distance between two (x, y, t) samples: x/y in km, t in hours."""
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    dt = config.k * (p[2] - q[2])
    return math.sqrt(dx * dx + dy * dy + dt * dt)


def distance_matrix(cloud) -> DistanceMatrix:
    """All-pairs Euclidean distances of an embedded cloud (already k-scaled)."""
    pts = np.asarray(cloud.points, dtype=np.float64)
    if pts.shape[0] == 0:
        raise ValueError("cannot build a distance matrix from an empty cloud")
    if pts.shape[0] == 1:
        return DistanceMatrix(1, np.empty(0))
    return DistanceMatrix(pts.shape[0], pdist(pts))


def quasi_symmetrize(directional: np.ndarray) -> DistanceMatrix:
    """Symmetrize a directional distance table by the pairwise minimum.

    Two points are identified at scale eps once travel in either direction
    costs less than eps, so entry (i, j) becomes min(d(i,j), d(j,i)).
    """
    d = np.asarray(directional, dtype=np.float64)
    n = d.shape[0]
    if d.shape != (n, n):
        raise ValueError("directional table must be square")
    if n and d.min() < 0:
        raise ValueError("directional distances must be non-negative")
    if n and np.any(np.diag(d) != 0):
        raise ValueError("directional table must have a zero diagonal")
    return DistanceMatrix.from_square(np.minimum(d, d.T))


def enclosing_radius(m: DistanceMatrix) -> float:
    """min over points of the farthest-neighbor distance.

    Filtration values above this produce no new finite 1-dimensional
    features: once one point connects to all others the complex is a cone.
    """
    if m.n == 1:
        return 0.0
    return float(m.as_square().max(axis=1).min())
