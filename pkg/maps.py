# maps.py

"""
Rotation systems (oriented combinatorial maps) on darts.

Edge i owns darts 2i and 2i+1, so the edge involution is d -> d ^ 1. The
rotation at a vertex lists its darts counterclockwise; sigma sends a dart to
the next one in its rotation. Faces are the orbits of phi = sigma o alpha:
from dart d cross the edge, then turn to the next dart at the far end.

Map file format:

    # comment lines start with '#'
    V E
    <darts at vertex 0, counterclockwise>
    ...
    <darts at vertex V-1>
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import pandas as pd

from errors import (
    CubicSpectraError,
    DegreeTooSmall,
    Disconnected,
    InvalidRotation,
    LoopEdge,
    NonIntegerGenus,
    ParseError,
    StructureViolation,
    TooSmall,
)
from exact_linalg import adjacency_matrix, eigen_multiplicity, mat_vec
from multigraph import Multigraph, bipartition, from_edge_list, to_networkx

logger = logging.getLogger(__name__)

BUNDLED_MAP_DIR = Path(__file__).resolve().parent / "bundled_maps"

CENSUS_COLUMNS = [
    "map", "E", "V", "F", "orientability", "genus",
    "d(v)", "d(f)", "truncation", "truncation_order", "mult1",
]


@dataclass(frozen=True)
class Map:
    n_edges: int
    rotations: Tuple[Tuple[int, ...], ...]
    sigma: Tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)
    vertex_of: Tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        darts = 2 * self.n_edges
        sigma = [-1] * darts
        vertex_of = [-1] * darts
        for v, rotation in enumerate(self.rotations):
            for position, d in enumerate(rotation):
                sigma[d] = rotation[(position + 1) % len(rotation)]
                vertex_of[d] = v
        object.__setattr__(self, "sigma", tuple(sigma))
        object.__setattr__(self, "vertex_of", tuple(vertex_of))

    @property
    def n_vertices(self) -> int:
        return len(self.rotations)

    @property
    def n_darts(self) -> int:
        return 2 * self.n_edges

    @staticmethod
    def alpha(d: int) -> int:
        return d ^ 1

    def phi(self, d: int) -> int:
        return self.sigma[d ^ 1]


def build_map(n_edges: int, rotations: Sequence[Sequence[int]]) -> Map:
    """
    Validate rotations and build a Map.

    Raises:
        InvalidRotation: a dart is out of range, listed twice or missing, or a
            vertex has no darts
        LoopEdge: both darts of an edge sit at the same vertex
        Disconnected: the underlying graph is not connected
    """
    darts = 2 * n_edges
    seen: Dict[int, int] = {}
    for v, rotation in enumerate(rotations):
        if not rotation:
            raise InvalidRotation(f"vertex {v} has no darts")
        for d in rotation:
            if not 0 <= d < darts:
                raise InvalidRotation(f"dart {d} at vertex {v} is outside 0..{darts - 1}")
            if d in seen:
                raise InvalidRotation(f"dart {d} appears at vertex {seen[d]} and vertex {v}")
            seen[d] = v
    if len(seen) != darts:
        missing = min(set(range(darts)) - set(seen))
        raise InvalidRotation(f"dart {missing} is not placed at any vertex")
    for i in range(n_edges):
        if seen[2 * i] == seen[2 * i + 1]:
            raise LoopEdge(f"edge {i} is a loop at vertex {seen[2 * i]}")

    m = Map(n_edges=n_edges, rotations=tuple(tuple(int(d) for d in r) for r in rotations))
    if not nx.is_connected(to_networkx(underlying_multigraph(m))):
        raise Disconnected("map is not connected")
    return m


def parse_map(text: str) -> Map:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError:
            raise ParseError(f"non-integer token in line {line!r}")
    if not rows:
        raise ParseError("empty map file")
    if len(rows[0]) != 2:
        raise ParseError("header must be 'V E'")
    n_vertices, n_edges = rows[0]
    if n_vertices < 1 or n_edges < 0:
        raise ParseError(f"bad header {n_vertices} {n_edges}")
    body = rows[1:]
    if len(body) != n_vertices:
        raise ParseError(f"header announces {n_vertices} vertices but {len(body)} rotation lines follow")
    return build_map(n_edges, body)


def load_map(path) -> Map:
    with open(path, "r", encoding="utf-8") as f:
        return parse_map(f.read())


def format_map(m: Map, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{m.n_vertices} {m.n_edges}")
    lines.extend(" ".join(str(d) for d in rotation) for rotation in m.rotations)
    return "\n".join(lines) + "\n"


# ---------------------------
# Faces and genus
# ---------------------------

def facial_walks(m: Map) -> List[List[int]]:
    """Orbits of phi, each starting at its smallest dart, ordered by that dart."""
    seen = [False] * m.n_darts
    faces = []
    for start in range(m.n_darts):
        if seen[start]:
            continue
        face = []
        d = start
        while not seen[d]:
            seen[d] = True
            face.append(d)
            d = m.phi(d)
        faces.append(face)
    return faces


def euler_genus(m: Map) -> int:
    """
    Orientable genus from V - E + F = 2 - 2g.

    Raises:
        NonIntegerGenus: 2 - V + E - F is odd or negative
    """
    faces = len(facial_walks(m))
    defect = 2 - m.n_vertices + m.n_edges - faces
    if defect % 2 or defect < 0:
        raise NonIntegerGenus(f"V={m.n_vertices}, E={m.n_edges}, F={faces} give 2g = {defect}")
    return defect // 2


def vertex_degrees(m: Map) -> List[int]:
    return [len(r) for r in m.rotations]


def face_degrees(m: Map) -> List[int]:
    return [len(f) for f in facial_walks(m)]


def underlying_multigraph(m: Map) -> Multigraph:
    return from_edge_list(
        m.n_vertices,
        [(m.vertex_of[2 * i], m.vertex_of[2 * i + 1]) for i in range(m.n_edges)],
    )


# ---------------------------
# Derived maps
# ---------------------------

def mirror_map(m: Map) -> Map:
    """Reverse every rotation (sigma -> sigma^-1), keeping each first dart."""
    return Map(
        n_edges=m.n_edges,
        rotations=tuple((r[0],) + tuple(reversed(r[1:])) for r in m.rotations),
    )


def dual_map(m: Map) -> Map:
    """
    Faces become vertices: the rotation at a dual vertex is its facial walk,
    so the dual sigma is phi. Dart numbering is shared with m.

    Raises:
        LoopEdge: some edge has the same face on both sides
    """
    faces = facial_walks(m)
    face_of = {}
    for index, face in enumerate(faces):
        for d in face:
            face_of[d] = index
    for i in range(m.n_edges):
        if face_of[2 * i] == face_of[2 * i + 1]:
            raise LoopEdge(f"edge {i} borders face {face_of[2 * i]} on both sides")
    return Map(n_edges=m.n_edges, rotations=tuple(tuple(f) for f in faces))


def vertex_truncation(m: Map) -> Multigraph:
    """
    One vertex per dart; d is joined to alpha(d) and to sigma(d).

    The darts at each vertex form a cycle in rotation order and the two darts
    of each edge are matched, so the result is cubic on 2E vertices.

    Raises:
        DegreeTooSmall: some vertex has degree below 3
    """
    for v, rotation in enumerate(m.rotations):
        if len(rotation) < 3:
            raise DegreeTooSmall(f"vertex {v} has degree {len(rotation)}")
    pairs = [(2 * i, 2 * i + 1) for i in range(m.n_edges)]
    pairs.extend((d, m.sigma[d]) for d in range(m.n_darts))
    return from_edge_list(m.n_darts, pairs)


def truncation_sign_vector(m: Map) -> List[int]:
    """
    +1 on darts at one colour class of the underlying graph, -1 on the other.

    On the vertex truncation this vector satisfies A z = z exactly.

    Raises:
        StructureViolation: clause "bipartite" when the underlying graph is
            not bipartite, or "eigenvector" if A z != z
    """
    parts = bipartition(underlying_multigraph(m))
    if parts is None:
        raise StructureViolation("bipartite", "underlying graph is not bipartite")
    first, _ = parts
    z = [1 if m.vertex_of[d] in first else -1 for d in range(m.n_darts)]
    if mat_vec(adjacency_matrix(vertex_truncation(m)), z) != z:
        raise StructureViolation("eigenvector", "A z != z on the truncation")
    return z


# ---------------------------
# Constructions
# ---------------------------

def kmm_map(m: int) -> Map:
    """
    K_{m,m} as the Cayley graph of Z_2m with connection set {1, 3, ..., 2m-1},
    rotation (v+1, v+3, ..., v+2m-1) at every vertex v.

    Edge (a//2)*m + (s-1)//2 joins even a to a+s; its dart 2e sits at a.
    """
    if m < 3:
        raise TooSmall(f"kmm_map needs m >= 3, got {m}")
    order = 2 * m

    def edge(a: int, s: int) -> int:
        return (a // 2) * m + (s - 1) // 2

    rotations = []
    for v in range(order):
        darts = []
        for t in range(1, order, 2):
            if v % 2 == 0:
                darts.append(2 * edge(v, t))
            else:
                a = (v + t) % order
                darts.append(2 * edge(a, (v - a) % order) + 1)
        rotations.append(tuple(darts))
    return build_map(m * m, rotations)


def mobius_kantor_map() -> Map:
    """Bundled rotation system on P(8, 3) with six octagonal faces."""
    return load_map(BUNDLED_MAP_DIR / "mobius_kantor.map")


def bundled_map_paths() -> List[Path]:
    return sorted(BUNDLED_MAP_DIR.glob("*.map"))


# ---------------------------
# Census
# ---------------------------

def _common_or_mixed(values: Sequence[int]):
    distinct = set(values)
    return distinct.pop() if len(distinct) == 1 else "mixed"


def census_row(name: str, m: Map) -> Dict:
    """One census row; the truncation columns need every vertex degree >= 3."""
    truncation = vertex_truncation(m)
    row = {
        "map": name,
        "E": m.n_edges,
        "V": m.n_vertices,
        "F": len(facial_walks(m)),
        "orientability": "orientable",
        "genus": euler_genus(m),
        "d(v)": _common_or_mixed(vertex_degrees(m)),
        "d(f)": _common_or_mixed(face_degrees(m)),
        "truncation": "bipartite" if bipartition(truncation) is not None else "-",
        "truncation_order": truncation.n,
        "mult1": eigen_multiplicity(truncation, 1),
    }
    logger.info(f"Census row {name}: E={row['E']} V={row['V']} F={row['F']} mult1={row['mult1']}")
    return row


def census(directory=None, include_duals: bool = False) -> pd.DataFrame:
    """
    Census table over every *.map file in a directory (bundled maps by
    default), rows in file-name order. Unreadable files are skipped with a
    warning; so are duals that have loops or vertices of degree below 3.

    Raises:
        ParseError: The directory does not exist or holds no *.map files
    """
    directory = Path(directory) if directory else BUNDLED_MAP_DIR
    paths = sorted(directory.glob("*.map"))
    if not paths:
        raise ParseError(f"no map files in {directory}")
    logger.info(f"Census over {len(paths)} map file(s) in {directory}")
    rows = []
    for path in paths:
        try:
            m = load_map(path)
            rows.append(census_row(path.stem, m))
        except CubicSpectraError as e:
            logger.warning(f"Skipping {path.name}: {type(e).__name__}: {e}")
            continue
        if include_duals:
            try:
                rows.append(census_row(f"{path.stem}*", dual_map(m)))
            except CubicSpectraError as e:
                logger.warning(f"Skipping dual of {path.name}: {type(e).__name__}: {e}")
    return pd.DataFrame(rows, columns=CENSUS_COLUMNS)
