from typing import Callable, List, Tuple

from errors import Disconnected, NotCubic, OutOfRange
from families import (
    complete_bipartite,
    complete_graph,
    f2n,
    gen_petersen,
    prism,
    t_m,
    triple_edge,
    truncate_cubic,
)
from multigraph import Multigraph, bipartition, is_connected, is_regular
from .base import FamilyPredictor

# Connected cubic graphs addressed by index; bipartite and non-bipartite mixed.
TRUNCATION_GRAPHS: List[Tuple[str, Callable[[], Multigraph]]] = [
    ("theta", triple_edge),
    ("K4", lambda: complete_graph(4)),
    ("K3,3", lambda: complete_bipartite(3, 3)),
    ("prism3", lambda: prism(3)),
    ("cube", lambda: prism(4)),
    ("prism5", lambda: prism(5)),
    ("prism6", lambda: prism(6)),
    ("prism8", lambda: prism(8)),
    ("petersen", lambda: gen_petersen(5, 2)),
    ("mobius-kantor", lambda: gen_petersen(8, 3)),
    ("desargues", lambda: gen_petersen(10, 3)),
    ("dodecahedron", lambda: gen_petersen(10, 2)),
    ("P(7,2)", lambda: gen_petersen(7, 2)),
    ("P(9,2)", lambda: gen_petersen(9, 2)),
    ("nauru", lambda: gen_petersen(12, 5)),
    ("F4", lambda: f2n(2)),
    ("F6", lambda: f2n(3)),
    ("F10", lambda: f2n(5)),
    ("T3", lambda: t_m(3)),
    ("truncated-tetrahedron", lambda: truncate_cubic(complete_graph(4))),
]


def predict_truncation(g: Multigraph) -> bool:
    """1 is simple in the truncation of a connected cubic g iff g is bipartite."""
    if not is_regular(g, 3):
        raise NotCubic("truncation prediction needs a cubic graph")
    if not is_connected(g):
        raise Disconnected("truncation prediction needs a connected graph")
    return bipartition(g) is not None


def truncation_base(index: int) -> Tuple[str, Multigraph]:
    if not 0 <= index < len(TRUNCATION_GRAPHS):
        raise OutOfRange(f"truncation grid index {index} is outside 0..{len(TRUNCATION_GRAPHS) - 1}")
    name, builder = TRUNCATION_GRAPHS[index]
    return name, builder()


class TruncationPredictor(FamilyPredictor):
    name = "truncation"

    def build(self, params):
        _, base = truncation_base(*params)
        return truncate_cubic(base)

    def predict(self, params):
        _, base = truncation_base(*params)
        return predict_truncation(base)

    def describe(self, params):
        name, _ = truncation_base(*params)
        return f"T({name})"
