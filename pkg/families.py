# families.py

"""
Deterministic constructors for the graph families.

Vertex labelings are fixed so edge-list output is byte-stable:

* f2n(n):            0..2n-1 around the cycle; digons on {2j, 2j+1}
* prism(n):          outer cycle 0..n-1, inner cycle n..2n-1, spokes {i, n+i}
* gen_petersen(n,k): outer j -> j, inner j -> n+j
* t_m(m):            plus (i, j) -> i*m + j, minus (i, j) -> m*m + i*m + j
* truncate_cubic(g): dart (v, slot) -> 3v + slot, slots in edge-list order
* complete_bipartite(a, b): first side 0..a-1, second side a..a+b-1
"""

import logging
from typing import Dict, List, Sequence

from errors import DegenerateStep, NotCubic, OutOfRange, TooSmall, UnknownFamily
from multigraph import Multigraph, from_edge_list

logger = logging.getLogger(__name__)


def f2n(n: int) -> Multigraph:
    """C_2n with every second edge doubled."""
    if n < 2:
        raise TooSmall(f"f2n needs n >= 2, got {n}")
    size = 2 * n
    pairs = [(i, (i + 1) % size) for i in range(size)]
    pairs.extend((2 * j, 2 * j + 1) for j in range(n))
    return from_edge_list(size, pairs)


def prism(n: int) -> Multigraph:
    if n < 3:
        raise TooSmall(f"prism needs n >= 3, got {n}")
    pairs = []
    for i in range(n):
        pairs.append((i, (i + 1) % n))
        pairs.append((n + i, n + (i + 1) % n))
        pairs.append((i, n + i))
    return from_edge_list(2 * n, pairs)


def gen_petersen(n: int, k: int) -> Multigraph:
    """
    Generalized Petersen graph P(n, k).

    Raises:
        TooSmall: n < 3
        OutOfRange: k outside 1..n-1
        DegenerateStep: 2k = 0 (mod n), which would double the inner edges
    """
    if n < 3:
        raise TooSmall(f"P(n, k) needs n >= 3, got {n}")
    if not 1 <= k <= n - 1:
        raise OutOfRange(f"P({n}, k) needs 1 <= k <= {n - 1}, got {k}")
    if (2 * k) % n == 0:
        raise DegenerateStep(f"P({n}, {k}) has 2k = 0 (mod n)")
    pairs = []
    for j in range(n):
        pairs.append((j, (j + 1) % n))
        pairs.append((j, n + j))
        pairs.append((n + j, n + (j + k) % n))
    return from_edge_list(2 * n, pairs)


def gp_is_vertex_transitive(n: int, k: int) -> bool:
    """P(n, k) is vertex-transitive iff (n, k) = (10, 2) or k^2 = +-1 (mod n)."""
    if (n, k) == (10, 2):
        return True
    square = (k * k) % n
    return square in (1, n - 1)


def valid_gp_steps(n: int) -> List[int]:
    """Every k with P(n, k) defined, ascending."""
    return [k for k in range(1, n) if (2 * k) % n != 0]


def t_m(m: int) -> Multigraph:
    """The cubic graph of order 2m^2 built from Z_m x Z_m (plus and minus copies)."""
    if m < 3:
        raise TooSmall(f"t_m needs m >= 3, got {m}")
    square = m * m

    def plus(i, j):
        return i * m + j

    def minus(i, j):
        return square + i * m + j

    pairs = []
    for i in range(m):
        for j in range(m):
            pairs.append((plus(i, j), plus(i, (j + 1) % m)))
            pairs.append((minus(i, j), minus(i, (j + 1) % m)))
            pairs.append((plus(i, j), minus(j, i)))
    return from_edge_list(2 * square, pairs)


def truncate_cubic(g: Multigraph) -> Multigraph:
    """
    Replace every vertex of a cubic multigraph by a triangle.

    Vertex 3v + s is the s-th dart at v, where darts at v are numbered in the
    order their edges appear in g.edges. Parallel edges get distinct darts.
    """
    for v in range(g.n):
        if g.degree(v) != 3:
            raise NotCubic(f"vertex {v} has degree {g.degree(v)}")
    next_slot = [0] * g.n
    pairs = []
    for u, v in g.edges:
        su, sv = next_slot[u], next_slot[v]
        next_slot[u] += 1
        next_slot[v] += 1
        pairs.append((3 * u + su, 3 * v + sv))
    for v in range(g.n):
        base = 3 * v
        pairs.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)])
    return from_edge_list(3 * g.n, pairs)


# ---------------------------
# Small reference graphs
# ---------------------------

def cycle(n: int) -> Multigraph:
    """C_n; n = 2 gives a digon."""
    if n < 2:
        raise TooSmall(f"cycle needs n >= 2, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Multigraph:
    if n < 2:
        raise TooSmall(f"complete graph needs n >= 2, got {n}")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Multigraph:
    if a < 1 or b < 1:
        raise TooSmall(f"complete bipartite graph needs both sides non-empty, got {a}, {b}")
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def triple_edge() -> Multigraph:
    """Two vertices joined by three parallel edges (the theta graph)."""
    return from_edge_list(2, [(0, 1), (0, 1), (0, 1)])


_FAMILIES: Dict[str, tuple] = {
    "f2n": (1, f2n),
    "prism": (1, prism),
    "gp": (2, gen_petersen),
    "tm": (1, t_m),
    "cycle": (1, cycle),
    "complete": (1, complete_graph),
    "bipartite": (2, complete_bipartite),
    "theta": (0, triple_edge),
}


def family_names() -> List[str]:
    return list(_FAMILIES)


def family_graph(name: str, params: Sequence[int]) -> Multigraph:
    """
    Build a family member by name, e.g. family_graph("gp", [5, 2]).

    Raises:
        UnknownFamily: name is not a known family
        OutOfRange: wrong number of parameters
    """
    try:
        arity, builder = _FAMILIES[name]
    except KeyError:
        raise UnknownFamily(f"unknown family '{name}'; choose from {', '.join(_FAMILIES)}")
    if len(params) != arity:
        raise OutOfRange(f"family '{name}' takes {arity} parameter(s), got {len(params)}")
    logger.debug(f"Building {name}{tuple(params)}")
    return builder(*[int(p) for p in params])
