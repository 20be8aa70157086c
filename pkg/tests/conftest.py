from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from ferrers import Partition


@st.composite
def partitions(draw, max_rows: int = 6, max_cols: int = 6) -> Partition:
    n = draw(st.integers(1, max_rows))
    parts = draw(st.lists(st.integers(1, max_cols), min_size=n, max_size=n))
    return Partition(tuple(sorted(parts, reverse=True)))


def cell_set(parts):
    """Cells of the diagram straight from the definition."""
    return {(r, s) for r, row in enumerate(parts, 1) for s in range(1, row + 1)}


def minimal_vertex_covers(parts):
    """Minimal vertex covers of the Ferrers graph by exhaustive search.

    Vertices are ("x", i) and ("y", j).  Independent of the prefix-pair
    description used by the library.
    """
    n, m = len(parts), parts[0]
    vertices = [("x", i) for i in range(1, n + 1)] + [("y", j) for j in range(1, m + 1)]
    edges = [(("x", r), ("y", s)) for r, s in cell_set(parts)]
    covers = []
    for size in range(len(vertices) + 1):
        for combo in combinations(vertices, size):
            chosen = set(combo)
            if all(a in chosen or b in chosen for a, b in edges):
                if not any(c <= chosen for c in covers):
                    covers.append(frozenset(chosen))
    return covers
