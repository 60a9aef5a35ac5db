# cosine.py

"""
Rational-angle solutions of cos x + cos y = 2 cos x cos y.

With x = 2 pi j / m and y = 2 pi l / m the only solutions are the trivial
pair (0, 0), the pairs from {m/4, 3m/4} when 4 | m, and the pairs from
{a, 4a} x {2a, 3a} (both orders) when m = 5a. `roots1_solutions`
enumerates all m^2 pairs numerically and `predicted_solutions` writes the
closed form down; the two must agree.
"""

import logging
import math
from dataclasses import dataclass
from typing import FrozenSet, List, Set, Tuple

import numpy as np

from errors import TooSmall
from utils import DEFAULT_TOL

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class CosineSolutionSet:
    m: int
    solutions: FrozenSet[Pair]
    trivial_included: bool = True

    @property
    def nontrivial(self) -> FrozenSet[Pair]:
        return frozenset(p for p in self.solutions if p != (0, 0))

    def __len__(self):
        return len(self.solutions)

    def is_swap_closed(self) -> bool:
        return all((l, j) in self.solutions for j, l in self.solutions)

    def is_negation_closed(self) -> bool:
        m = self.m
        return all(((-j) % m, (-l) % m) in self.solutions for j, l in self.solutions)

    def sorted_pairs(self) -> List[Pair]:
        return sorted(self.solutions)


def _check_modulus(m: int):
    if m < 1:
        raise TooSmall(f"modulus must be at least 1, got {m}")


def _residuals(m: int) -> np.ndarray:
    c = np.cos(2 * np.pi * np.arange(m) / m)
    return c[:, None] + c[None, :] - 2 * np.outer(c, c)


def roots1_solutions(m: int, tol: float = DEFAULT_TOL) -> CosineSolutionSet:
    """Every (j, l) in Z_m x Z_m whose residual is within tol, by enumeration."""
    _check_modulus(m)
    hits = np.argwhere(np.abs(_residuals(m)) <= tol)
    solutions = frozenset((int(j), int(l)) for j, l in hits)
    return CosineSolutionSet(m=m, solutions=solutions, trivial_included=(0, 0) in solutions)


def _four_branch(m: int) -> Set[Pair]:
    if m % 4:
        return set()
    q = m // 4
    return {(j, l) for j in (q, 3 * q) for l in (q, 3 * q)}


def _five_branch(m: int) -> Set[Pair]:
    if m % 5:
        return set()
    a = m // 5
    outer, inner = (a, 4 * a), (2 * a, 3 * a)
    return {(j, l) for j in outer for l in inner} | {(j, l) for j in inner for l in outer}


def predicted_solutions(m: int) -> CosineSolutionSet:
    """Trivial pair plus the 4-branch and 5-branch; both when 20 | m."""
    _check_modulus(m)
    solutions = {(0, 0)} | _four_branch(m) | _five_branch(m)
    return CosineSolutionSet(m=m, solutions=frozenset(solutions))


def gp_one_solutions(n: int, k: int, tol: float = DEFAULT_TOL) -> Set[int]:
    """The j in 0..n-1 with cos t + cos kt = 2 cos t cos kt, t = 2 pi j / n."""
    theta = 2 * np.pi * np.arange(n) / n
    c, ck = np.cos(theta), np.cos(k * theta)
    residual = np.abs(c + ck - 2 * c * ck)
    return {int(j) for j in np.flatnonzero(residual <= tol)}


def gp_one_multiplicity(n: int, k: int, tol: float = DEFAULT_TOL) -> int:
    """Multiplicity of eigenvalue 1 of P(n, k): one per solving j."""
    return len(gp_one_solutions(n, k, tol))


def near_miss_scan(m_max: int) -> float:
    """
    Smallest residual over all non-solution pairs with 1 <= m <= m_max.

    Non-solutions are taken from the closed form, so this measures the gap a
    tolerance has to sit in.
    """
    smallest = math.inf
    for m in range(1, m_max + 1):
        residual = np.abs(_residuals(m))
        for j, l in predicted_solutions(m).solutions:
            residual[j, l] = np.inf
        if residual.size:
            smallest = min(smallest, float(residual.min()))
    logger.info(f"Near-miss scan up to m={m_max}: minimum residual {smallest:.3e}")
    return smallest


def five_table(a: int) -> List[Tuple[int, int, List[int]]]:
    """
    For n = 5a, each nontrivial 5-branch pair (j, l) with the steps
    k in {2, 3, n-3, n-2} that satisfy l = kj (mod n).
    """
    n = 5 * a
    steps = sorted({k for k in (2, 3, n - 3, n - 2) if 1 <= k < n and (2 * k) % n})
    rows = []
    for j, l in sorted(_five_branch(n)):
        rows.append((j, l, [k for k in steps if (k * j - l) % n == 0]))
    return rows
