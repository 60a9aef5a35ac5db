# structure.py

"""
The +-1 eigenvector of a cubic graph and what it forces.

When 1 is a simple eigenvalue of a connected cubic vertex-transitive graph,
its eigenvector can be scaled to +-1 entries. The sign classes then induce
2-regular subgraphs of one common cycle length, joined by a perfect
matching, and contracting the cycles gives a regular bipartite multigraph.
These checks run on any input; a failed clause raises StructureViolation
naming the clause.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from errors import (
    Disconnected,
    NotAPartition,
    NotCubic,
    NotPlusMinusOne,
    NotSimple,
    StructureViolation,
    TooLarge,
)
from exact_linalg import IntMatrix, adjacency_matrix, eigen_multiplicity, mat_vec, rational_nullspace
from multigraph import (
    Multigraph,
    bipartition,
    cycle_decomposition,
    from_edge_list,
    induced_subgraph,
    is_connected,
    is_regular,
)
from spectra import numeric_spectrum
from utils import format_float

logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_ORDER = 24


@dataclass(frozen=True)
class SignPartition:
    vplus: FrozenSet[int]
    vminus: FrozenSet[int]
    matching: Tuple[Tuple[int, int], ...]
    plus_cycles: Tuple[Tuple[int, ...], ...]
    minus_cycles: Tuple[Tuple[int, ...], ...]
    cycle_type: Tuple[int, int]

    def signs(self, n: int) -> List[int]:
        return [1 if v in self.vplus else -1 for v in range(n)]

    def sign_table(self, n: int) -> pd.DataFrame:
        """vertex -> sign columns, one row per vertex."""
        return pd.DataFrame({"vertex": list(range(n)), "sign": self.signs(n)})

    def to_dict(self) -> Dict:
        m, k = self.cycle_type
        return {
            "vplus": sorted(self.vplus),
            "vminus": sorted(self.vminus),
            "matching": [list(e) for e in self.matching],
            "plus_cycles": [list(c) for c in self.plus_cycles],
            "minus_cycles": [list(c) for c in self.minus_cycles],
            "cycle_type": {"m": m, "k": k},
        }


@dataclass(frozen=True)
class QuotientMatrix:
    parts: Tuple[FrozenSet[int], ...]
    b: IntMatrix

    def to_dict(self) -> Dict:
        return {"parts": [sorted(p) for p in self.parts], "b": self.b.to_rows()}


@dataclass
class BothSimpleCertificate:
    mult_plus: int
    mult_minus: int
    bipartite: bool
    applicable: bool
    w_sets: Optional[Dict[str, List[int]]] = None
    w_bipartition_verified: Optional[bool] = None
    w_sets_independent: Optional[bool] = None

    def to_dict(self) -> Dict:
        record = {
            "mult_1": self.mult_plus,
            "mult_-1": self.mult_minus,
            "bipartite": self.bipartite,
            "applicable": self.applicable,
        }
        if not self.applicable:
            record["verdict"] = "not applicable"
            return record
        record["w_sets"] = self.w_sets
        record["w_bipartition_verified"] = self.w_bipartition_verified
        record["w_sets_independent"] = self.w_sets_independent
        record["verdict"] = "bipartite" if self.w_bipartition_verified else "counterexample"
        return record


def _require_cubic(g: Multigraph):
    if not is_regular(g, 3):
        raise NotCubic("graph is not cubic")


def _require_connected(g: Multigraph):
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def pm1_eigenvector(g: Multigraph, lam: int) -> List[int]:
    """
    The eigenvector of a simple eigenvalue, scaled so entry 0 is +1.

    Raises:
        NotSimple: lam does not have multiplicity exactly 1
        NotPlusMinusOne: the scaled eigenvector has an entry other than +-1
    """
    mult = eigen_multiplicity(g, lam)
    if mult != 1:
        raise NotSimple(f"eigenvalue {lam} has multiplicity {mult}")
    (vector,) = rational_nullspace(adjacency_matrix(g).shift_diagonal(lam))
    if vector[0] == 0:
        raise NotPlusMinusOne(f"eigenvector for {lam} vanishes at vertex 0")
    scaled = vector.scaled(1 / vector[0])
    bad = [v for v, x in enumerate(scaled.entries) if x not in (1, -1)]
    if bad:
        raise NotPlusMinusOne(f"eigenvector for {lam} is not +-1 at vertex {bad[0]}")
    return scaled.as_ints()


def _induced_cycles(g: Multigraph, side: Iterable[int], clause_label: str) -> List[List[int]]:
    sub, relabel = induced_subgraph(g, side)
    back = {new: old for old, new in relabel.items()}
    for v in range(sub.n):
        if sub.degree(v) != 2:
            raise StructureViolation(
                "2-regular", f"{clause_label} side: vertex {back[v]} has {sub.degree(v)} same-side neighbours"
            )
    return [[back[v] for v in cyc] for cyc in cycle_decomposition(sub)]


def sign_partition(g: Multigraph) -> SignPartition:
    """
    Split a connected cubic graph by the signs of its eigenvector for 1.

    Raises:
        NotCubic, Disconnected: precondition failures
        NotSimple, NotPlusMinusOne: from pm1_eigenvector
        StructureViolation: clause "2-regular", "perfect-matching" or
            "equal-cycle-length"
    """
    _require_cubic(g)
    _require_connected(g)
    z = pm1_eigenvector(g, 1)
    vplus = frozenset(v for v in range(g.n) if z[v] == 1)
    vminus = frozenset(v for v in range(g.n) if z[v] == -1)

    plus_cycles = _induced_cycles(g, vplus, "plus")
    minus_cycles = _induced_cycles(g, vminus, "minus")

    matching = tuple((u, v) for u, v in g.edges if (u in vplus) != (v in vplus))
    covered = [0] * g.n
    for u, v in matching:
        covered[u] += 1
        covered[v] += 1
    if len(matching) != g.n // 2 or any(c != 1 for c in covered):
        raise StructureViolation("perfect-matching", "cross edges do not cover every vertex exactly once")

    lengths = {len(c) for c in plus_cycles} | {len(c) for c in minus_cycles}
    if len(lengths) != 1 or len(plus_cycles) != len(minus_cycles):
        raise StructureViolation(
            "equal-cycle-length",
            f"plus cycles {sorted(len(c) for c in plus_cycles)}, "
            f"minus cycles {sorted(len(c) for c in minus_cycles)}",
        )
    cycle_type = (len(plus_cycles), lengths.pop())
    logger.debug(f"Sign partition of type C{cycle_type}")
    return SignPartition(
        vplus=vplus,
        vminus=vminus,
        matching=matching,
        plus_cycles=tuple(tuple(c) for c in plus_cycles),
        minus_cycles=tuple(tuple(c) for c in minus_cycles),
        cycle_type=cycle_type,
    )


def unique_two_regular_partition(g: Multigraph) -> int:
    """
    Count unordered partitions {V1, V2} of a cubic graph where both sides
    induce 2-regular subgraphs.

    Exhaustive search with vertex 0 pinned to V1. Every vertex must end with
    exactly two same-side neighbours and one cross neighbour (multiplicities
    counted), and the search prunes as soon as a vertex exceeds either.

    Raises:
        NotCubic: g is not cubic
        TooLarge: more than 24 vertices
    """
    if g.n > MAX_EXHAUSTIVE_ORDER:
        raise TooLarge(f"exhaustive search is capped at {MAX_EXHAUSTIVE_ORDER} vertices, got {g.n}")
    _require_cubic(g)

    side = [-1] * g.n
    nodes = [0]

    def consistent(v: int) -> bool:
        same = cross = pending = 0
        for w, mult in g.neighbours(v):
            if side[w] == -1:
                pending += mult
            elif side[w] == side[v]:
                same += mult
            else:
                cross += mult
        if same > 2 or cross > 1:
            return False
        return pending > 0 or (same == 2 and cross == 1)

    def search(index: int) -> int:
        nodes[0] += 1
        if index == g.n:
            return 1
        found = 0
        choices = (0,) if index == 0 else (0, 1)
        for choice in choices:
            side[index] = choice
            touched = [index] + [w for w, _ in g.neighbours(index) if side[w] != -1]
            if all(consistent(v) for v in touched):
                found += search(index + 1)
            side[index] = -1
        return found

    count = search(0)
    logger.debug(f"Two-regular partition search: {nodes[0]} nodes, {count} partitions")
    return count


def contracted_multigraph(g: Multigraph, p: SignPartition) -> Multigraph:
    """
    Collapse every sign-class cycle to a vertex, keeping all matching edges.

    Plus cycles come first, then minus cycles, each block ordered by smallest
    original vertex.

    Raises:
        StructureViolation: clause "contracted-regularity" or
            "contracted-bipartite"
    """
    blocks = sorted(p.plus_cycles, key=min) + sorted(p.minus_cycles, key=min)
    plus_count = len(p.plus_cycles)
    owner = {}
    for index, block in enumerate(blocks):
        for v in block:
            owner[v] = index
    contracted = from_edge_list(len(blocks), [(owner[u], owner[v]) for u, v in p.matching])

    _, k = p.cycle_type
    if not is_regular(contracted, k):
        raise StructureViolation("contracted-regularity", f"contracted multigraph is not {k}-regular")
    if any((u < plus_count) == (v < plus_count) for u, v in contracted.edges):
        raise StructureViolation("contracted-bipartite", "an edge joins two cycles of the same sign")
    return contracted


def check_equitable(g: Multigraph, parts: Sequence[Iterable[int]]) -> Optional[QuotientMatrix]:
    """
    Quotient matrix of an equitable partition, or None if some part is not
    uniform.

    Raises:
        NotAPartition: parts overlap, are empty, or miss a vertex
    """
    frozen = tuple(frozenset(part) for part in parts)
    owner = {}
    for index, part in enumerate(frozen):
        if not part:
            raise NotAPartition(f"part {index} is empty")
        for v in part:
            if not 0 <= v < g.n:
                raise NotAPartition(f"vertex {v} is outside 0..{g.n - 1}")
            if v in owner:
                raise NotAPartition(f"vertex {v} is in parts {owner[v]} and {index}")
            owner[v] = index
    if len(owner) != g.n:
        missing = min(set(range(g.n)) - set(owner))
        raise NotAPartition(f"vertex {missing} is in no part")

    size = len(frozen)
    rows = []
    for index, part in enumerate(frozen):
        row = None
        for v in sorted(part):
            counts = [0] * size
            for w, mult in g.neighbours(v):
                counts[owner[w]] += mult
            if row is None:
                row = counts
            elif counts != row:
                logger.debug(f"Part {index} is not uniform at vertex {v}")
                return None
        rows.append(row)
    return QuotientMatrix(parts=frozen, b=IntMatrix.from_rows(rows))


def w_quotient_matrix() -> IntMatrix:
    """Quotient of the four-set partition built from two +-1 eigenvectors (parts ++, +-, --, -+)."""
    return IntMatrix.from_rows([
        [1, 1, 0, 1],
        [1, 1, 1, 0],
        [0, 1, 1, 1],
        [1, 0, 1, 1],
    ])


def quotient_in_spectrum(g: Multigraph, q: QuotientMatrix, tol: float = 1e-6) -> bool:
    """True iff the eigenvalues of q.b form a sub-multiset of the spectrum of g."""
    b = np.array(q.b.to_rows(), dtype=float)
    quotient_values = sorted(float(x.real) for x in np.linalg.eigvals(b))
    available = list(numeric_spectrum(g))
    for value in quotient_values:
        match = next((i for i, x in enumerate(available) if abs(x - value) <= tol), None)
        if match is None:
            logger.debug(f"Quotient eigenvalue {format_float(value)} not found in the spectrum")
            return False
        available.pop(match)
    return True


def both_simple_certificate(g: Multigraph) -> BothSimpleCertificate:
    """
    Evidence that a cubic graph with 1 and -1 both simple is bipartite.

    The two +-1 eigenvectors split V into four sets W++, W+-, W-+, W--; the
    certificate checks that each is independent and that W++ and W-- against
    W+- and W-+ is a bipartition.
    """
    _require_cubic(g)
    _require_connected(g)
    mult_plus = eigen_multiplicity(g, 1)
    mult_minus = eigen_multiplicity(g, -1)
    bipartite = bipartition(g) is not None
    if mult_plus != 1 or mult_minus != 1:
        return BothSimpleCertificate(mult_plus, mult_minus, bipartite, applicable=False)

    z_plus = pm1_eigenvector(g, 1)
    z_minus = pm1_eigenvector(g, -1)
    labels = {(1, 1): "++", (1, -1): "+-", (-1, 1): "-+", (-1, -1): "--"}
    w_sets = {label: [] for label in labels.values()}
    for v in range(g.n):
        w_sets[labels[(z_plus[v], z_minus[v])]].append(v)

    label_of = {v: label for label, members in w_sets.items() for v in members}
    independent = all(label_of[u] != label_of[v] for u, v in g.edges)
    even = {"++", "--"}
    crosses = all((label_of[u] in even) != (label_of[v] in even) for u, v in g.edges)
    return BothSimpleCertificate(
        mult_plus, mult_minus, bipartite, applicable=True,
        w_sets=w_sets, w_bipartition_verified=crosses, w_sets_independent=independent,
    )


# ---------------------------
# +-1 vectors and regular partitions
# ---------------------------

def sign_degrees(g: Multigraph, z: Sequence[int]) -> Tuple[int, int, int]:
    """
    For a +-1 eigenvector z of a k-regular graph, return (lambda, inner, cross):
    each sign class induces an inner-regular subgraph and the cut is
    cross-regular, with inner = (k + lambda)/2 and cross = (k - lambda)/2.

    Raises:
        NotPlusMinusOne: z has an entry other than +-1
        StructureViolation: clause "regular" or "eigenvector"
    """
    if len(z) != g.n or any(x not in (1, -1) for x in z):
        raise NotPlusMinusOne("vector is not a +-1 vector on the vertices")
    degrees = {g.degree(v) for v in range(g.n)}
    if len(degrees) != 1:
        raise StructureViolation("regular", "graph is not regular")
    k = degrees.pop()
    az = mat_vec(adjacency_matrix(g), z)
    lam = az[0] * z[0]
    if any(az[v] != lam * z[v] for v in range(g.n)):
        raise StructureViolation("eigenvector", "A z is not a multiple of z")
    inner = (k + lam) // 2
    return lam, inner, k - inner


def eigenvector_from_partition(g: Multigraph, vplus: Iterable[int]) -> Tuple[int, List[int]]:
    """
    Build the +-1 eigenvector of a partition whose sides are both r-regular
    with an s-regular cut; the eigenvalue is r - s.

    Raises:
        NotAPartition: vplus has a vertex out of range or leaves no minus side
        StructureViolation: clause "semi-regular" when the partition is not of
            that shape
    """
    plus = set(vplus)
    minus = set(range(g.n)) - plus
    if not minus:
        raise NotAPartition("partition has an empty minus side")
    quotient = check_equitable(g, [plus, minus])
    if quotient is None:
        raise StructureViolation("semi-regular", "partition is not equitable")
    (r_plus, s_plus), (s_minus, r_minus) = quotient.b.to_rows()
    if r_plus != r_minus or s_plus != s_minus:
        raise StructureViolation("semi-regular", f"quotient {quotient.b.to_rows()} is not symmetric")
    lam = r_plus - s_plus
    z = [1 if v in plus else -1 for v in range(g.n)]
    if mat_vec(adjacency_matrix(g), z) != [lam * x for x in z]:
        raise StructureViolation("eigenvector", "indicator vector is not an eigenvector")
    return lam, z


def truncation_preimage(g: Multigraph) -> Multigraph:
    """
    For a cubic graph of type C(m, 3), the bipartite cubic multigraph whose
    truncation it is: contract each sign-class triangle.

    Raises:
        StructureViolation: clause "type-C(m,3)" when the cycles are not triangles
    """
    p = sign_partition(g)
    if p.cycle_type[1] != 3:
        raise StructureViolation("type-C(m,3)", f"sign classes are {p.cycle_type[1]}-cycles")
    return contracted_multigraph(g, p)
