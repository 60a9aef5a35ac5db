import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from families import f2n, gen_petersen, gp_is_vertex_transitive, prism, t_m, valid_gp_steps  # noqa: E402
from multigraph import from_edge_list  # noqa: E402

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def petersen():
    return gen_petersen(5, 2)


@pytest.fixture
def cube():
    return prism(4)


@pytest.fixture
def f4():
    return f2n(2)


@pytest.fixture
def w_cube():
    """The cube labelled so that {0,1}, {2,3}, {4,5}, {6,7} is equitable with quotient I + C4."""
    return from_edge_list(8, [
        (0, 1), (2, 3), (4, 5), (6, 7),
        (0, 2), (1, 3), (2, 4), (3, 5),
        (4, 6), (5, 7), (6, 0), (7, 1),
    ])


def vertex_transitive_grid(max_order=26):
    """(label, graph) for vertex-transitive family members; f2n, prism and gp stop at max_order vertices."""
    grid = []
    for n in range(2, max_order // 2 + 1):
        grid.append((f"f2n({n})", f2n(n)))
    for n in range(3, max_order // 2 + 1):
        grid.append((f"prism({n})", prism(n)))
    for n in range(5, max_order // 2 + 1):
        for k in valid_gp_steps(n):
            if k > 1 and gp_is_vertex_transitive(n, k):
                grid.append((f"P({n},{k})", gen_petersen(n, k)))
    for m in (3, 4, 5):
        grid.append((f"t_m({m})", t_m(m)))
    return grid


def family_grid(f2n_max, prism_max, gp_max, tm_max):
    """(label, graph) for every f2n, prism, P(n,k) and t_m instance up to the given parameters."""
    grid = [(f"f2n({n})", f2n(n)) for n in range(2, f2n_max + 1)]
    grid += [(f"prism({n})", prism(n)) for n in range(3, prism_max + 1)]
    grid += [(f"P({n},{k})", gen_petersen(n, k)) for n in range(3, gp_max + 1) for k in valid_gp_steps(n)]
    grid += [(f"t_m({m})", t_m(m)) for m in range(3, tm_max + 1)]
    return grid
