# multigraph.py

"""
Loopless undirected multigraphs.

Vertices are the dense integers 0..n-1. The edge multiset is stored as a
sorted tuple of normalised pairs (u < v), so two graphs with the same
multiset compare equal no matter how their edges were listed.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from errors import LoopEdge, NotTwoRegular, OutOfRange, ParseError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: Tuple[Edge, ...]
    _adjacency: Tuple[Tuple[Tuple[int, int], ...], ...] = field(
        default=(), init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.n < 0:
            raise OutOfRange(f"vertex count must be non-negative, got {self.n}")
        normalised = []
        for u, v in self.edges:
            _check_vertex(self.n, u)
            _check_vertex(self.n, v)
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            normalised.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(normalised)))

        # neighbour -> multiplicity, per vertex, in ascending neighbour order
        counts: List[Counter] = [Counter() for _ in range(self.n)]
        for u, v in self.edges:
            counts[u][v] += 1
            counts[v][u] += 1
        adjacency = tuple(tuple(sorted(c.items())) for c in counts)
        object.__setattr__(self, "_adjacency", adjacency)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbours(self, v: int) -> Tuple[Tuple[int, int], ...]:
        """(neighbour, multiplicity) pairs of v, ascending by neighbour."""
        return self._adjacency[v]

    def multiplicity(self, u: int, v: int) -> int:
        for w, mult in self._adjacency[u]:
            if w == v:
                return mult
        return 0

    def degree(self, v: int) -> int:
        return sum(mult for _, mult in self._adjacency[v])


def _check_vertex(n: int, v: int):
    if not isinstance(v, int) or v < 0 or v >= n:
        raise OutOfRange(f"vertex {v} is outside 0..{n - 1}")


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Multigraph:
    """
    Build a multigraph on n vertices from (u, v) pairs.

    Args:
        n: Vertex count, at least 1
        pairs: Edge endpoints; repeated pairs become parallel edges

    Returns:
        Multigraph with exactly the given edge multiset

    Raises:
        OutOfRange: An endpoint is not in 0..n-1 (or n < 1)
        LoopEdge: A pair has equal endpoints
    """
    if n < 1:
        raise OutOfRange(f"vertex count must be at least 1, got {n}")
    return Multigraph(n=n, edges=tuple((int(pair[0]), int(pair[1])) for pair in pairs))


def to_edge_list_text(g: Multigraph) -> str:
    """Serialise as `n m` followed by one `u v` line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Multigraph:
    """Parse the edge-list interchange format (blank lines and '#' comments ignored)."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise ParseError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
    except ValueError:
        raise ParseError(f"bad header line: {' '.join(rows[0])!r}")
    if len(header) != 2:
        raise ParseError("header must be 'n m'")
    n, m = header
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow")
    pairs = []
    for row in body:
        if len(row) != 2:
            raise ParseError(f"edge line must have two vertices: {' '.join(row)!r}")
        try:
            pairs.append((int(row[0]), int(row[1])))
        except ValueError:
            raise ParseError(f"non-integer vertex in edge line: {' '.join(row)!r}")
    return from_edge_list(n, pairs)


def degree_sequence(g: Multigraph) -> List[int]:
    return [g.degree(v) for v in range(g.n)]


def max_degree(g: Multigraph) -> int:
    return max(degree_sequence(g), default=0)


def is_regular(g: Multigraph, k: int) -> bool:
    return all(d == k for d in degree_sequence(g))


def to_networkx(g: Multigraph) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges)
    return graph


def is_connected(g: Multigraph) -> bool:
    return nx.is_connected(to_networkx(g))


def bipartition(g: Multigraph) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """
    Two-colouring witness, or None when the graph has an odd cycle.

    Each component is coloured with its smallest vertex on the first side,
    so connected inputs always put vertex 0 on the first side.
    """
    graph = to_networkx(g)
    first, second = set(), set()
    for component in sorted(nx.connected_components(graph), key=min):
        sub = graph.subgraph(component)
        try:
            colouring = nx.bipartite.color(sub)
        except nx.NetworkXError:
            return None
        root_colour = colouring[min(component)]
        for v, colour in colouring.items():
            (first if colour == root_colour else second).add(v)
    return frozenset(first), frozenset(second)


def induced_subgraph(g: Multigraph, s: Iterable[int]) -> Tuple[Multigraph, Dict[int, int]]:
    """
    Subgraph induced by s, relabelled to 0..|s|-1 in ascending order.

    Returns the subgraph and the old -> new vertex map. An empty s yields a
    graph with no vertices (n = 0), which from_edge_list would refuse.
    """
    chosen = sorted(set(s))
    for v in chosen:
        _check_vertex(g.n, v)
    relabel = {old: new for new, old in enumerate(chosen)}
    edges = tuple(
        (relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel
    )
    return Multigraph(n=len(chosen), edges=edges), relabel


def cycle_decomposition(g: Multigraph) -> List[List[int]]:
    """
    Split a 2-regular multigraph into its cycles.

    Each cycle starts at its smallest vertex and continues towards the
    smaller of that vertex's two neighbours; a digon is reported as [u, v].
    Cycles are listed by their starting vertex.

    Raises:
        NotTwoRegular: Some vertex does not have degree exactly 2
    """
    for v in range(g.n):
        if g.degree(v) != 2:
            raise NotTwoRegular(f"vertex {v} has degree {g.degree(v)}")

    seen = [False] * g.n
    cycles = []
    for start in range(g.n):
        if seen[start]:
            continue
        nbrs = g.neighbours(start)
        if len(nbrs) == 1:
            # digon: one neighbour with multiplicity 2
            other = nbrs[0][0]
            seen[start] = seen[other] = True
            cycles.append([start, other])
            continue
        cycle = [start]
        seen[start] = True
        previous, current = start, nbrs[0][0]
        while current != start:
            cycle.append(current)
            seen[current] = True
            a, b = (w for w, _ in g.neighbours(current))
            previous, current = current, (b if a == previous else a)
        cycles.append(cycle)
    return cycles


def count_triangles(g: Multigraph) -> int:
    """Triangles of the underlying simple graph."""
    return sum(nx.triangles(nx.Graph(to_networkx(g))).values()) // 3


def has_triangle(g: Multigraph) -> bool:
    return count_triangles(g) > 0
