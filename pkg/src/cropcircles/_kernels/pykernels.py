"""Pure NumPy/Python persistence kernels, the fallback backend.

Same contract as the compiled module: given filtration-ordered edges and
a rank lookup table, return dimension-0 deaths, the component count, and
dimension-1 pairs. Triangles are generated per edge (every triangle is
processed right after its highest-ranked edge), so memory stays linear in
the number of stored pivot columns.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def _find(parent, a):
    root = a
    while parent[root] != root:
        root = parent[root]
    while parent[a] != root:
        parent[a], a = root, parent[a]
    return root


def rips_pairs(n, edges_i, edges_j, edges_v, rank):
    """Persistence pairs of the Rips filtration described by sorted edges.

    Returns (h0_deaths, n_components, h1_births, h1_deaths, h1_essential)
    with zero-lifetime pairs already dropped.
    """
    m = len(edges_v)

    parent = list(range(n))
    size = [1] * n
    h0_deaths = []
    cycle_edge = np.zeros(m, dtype=bool)
    for r in range(m):
        ra = _find(parent, int(edges_i[r]))
        rb = _find(parent, int(edges_j[r]))
        if ra == rb:
            cycle_edge[r] = True
            continue
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        v = float(edges_v[r])
        if v > 0.0:
            h0_deaths.append(v)
    n_components = sum(1 for i in range(n) if _find(parent, i) == i)

    # GF(2) reduction of the triangle boundary matrix. Columns arrive in a
    # valid filtration order: all triangles whose max-ranked edge is r come
    # immediately after edge r, keyed by their third vertex.
    pivot = np.full(m, -1, dtype=np.int64)
    stored = []
    h1_births = []
    h1_deaths = []
    for r in range(m):
        a = int(edges_i[r])
        b = int(edges_j[r])
        v = float(edges_v[r])
        ra_row = rank[a]
        rb_row = rank[b]
        third = np.nonzero((ra_row < r) & (rb_row < r))[0]
        for c in third:
            col = {int(ra_row[c]), int(rb_row[c]), r}
            while col:
                low = max(col)
                owner = pivot[low]
                if owner < 0:
                    pivot[low] = len(stored)
                    stored.append(col)
                    birth = float(edges_v[low])
                    if v > birth:
                        h1_births.append(birth)
                        h1_deaths.append(v)
                    break
                col ^= stored[owner]

    essential_mask = cycle_edge & (pivot < 0)
    h1_essential = np.asarray(edges_v)[essential_mask].astype(np.float64)

    return (
        np.asarray(h0_deaths, dtype=np.float64),
        int(n_components),
        np.asarray(h1_births, dtype=np.float64),
        np.asarray(h1_deaths, dtype=np.float64),
        h1_essential,
    )
