"""Small standard graphs used throughout the tests, demos and docs."""

from __future__ import annotations

from .graphs import Graph


def empty_graph(n: int) -> Graph:
    """n vertices, no edges."""
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    """The path 0-1-...-(n-1)."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """A star with center 0 and the given number of leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides 0..a-1 and a..a+b-1."""
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


def bowtie_graph() -> Graph:
    """Two triangles sharing the hub vertex 1: triangles {0,1,2} and {1,3,4}.

    The smallest graph whose unique minimum cut (the hub) splits it into
    two edges without isolating anything, so it is connected but not
    super connected.
    """
    return Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (3, 4)])
