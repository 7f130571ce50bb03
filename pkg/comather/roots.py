"""
Root systems of types A-D, E6 and E7.

Everything lives in simple-root coordinates with Bourbaki numbering. The Cartan
matrix follows a[i][j] = <alpha_j, alpha_i^vee>, so row i of the matrix is the
pairing of every simple root against the i-th simple coroot.
"""
import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Tuple

import numpy as np

from .errors import InvalidInputError

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]

# Dynkin edges, 1-based, for the simply-laced part of each diagram.
E_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4))

EXPECTED_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63}[n],
}


def _check_type(lie_type: str, rank: int) -> None:
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}
    if lie_type in minimum and rank >= minimum[lie_type]:
        return
    if lie_type == "E" and rank in (6, 7):
        return
    raise InvalidInputError(
        f"unsupported root system {lie_type}{rank}: "
        "expected A_n (n>=1), B_n/C_n (n>=2), D_n (n>=3), E6 or E7"
    )


def _cartan(lie_type: str, rank: int) -> List[List[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i, j, aij=-1, aji=-1):
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if lie_type == "E":
        for i, j in E_EDGES:
            if i <= rank and j <= rank:
                link(i, j)
        return a
    if lie_type == "D":
        for i in range(1, rank - 1):
            link(i, i + 1)
        link(rank - 2, rank)
        return a
    for i in range(1, rank - 1):
        link(i, i + 1)
    if rank > 1:
        if lie_type == "B":
            # alpha_n short
            link(rank - 1, rank, aij=-1, aji=-2)
        elif lie_type == "C":
            # alpha_n long
            link(rank - 1, rank, aij=-2, aji=-1)
        else:
            link(rank - 1, rank)
    return a


def _symmetrizer(lie_type: str, rank: int) -> List[int]:
    """d_i = (alpha_i, alpha_i) / 2."""
    if lie_type == "B":
        return [2] * (rank - 1) + [1]
    if lie_type == "C":
        return [1] * (rank - 1) + [2]
    return [1] * rank


@dataclass(frozen=True)
class RootSystem:
    lie_type: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Weight, ...]
    highest_root: Weight
    symmetrizer: Tuple[int, ...]
    gram: np.ndarray = field(compare=False, repr=False)
    roots_matrix: np.ndarray = field(compare=False, repr=False)
    _index: Dict[Weight, int] = field(compare=False, repr=False)

    @property
    def name(self) -> str:
        return f"{self.lie_type}{self.rank}"

    def __str__(self) -> str:
        return self.name

    # -- basic vectors ---------------------------------------------------

    def simple_root(self, i: int) -> Weight:
        if not 1 <= i <= self.rank:
            raise InvalidInputError(f"{self.name} has no simple root {i}")
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def zero(self) -> Weight:
        return (0,) * self.rank

    def is_positive_root(self, beta: Weight) -> bool:
        return tuple(beta) in self._index

    def is_root(self, beta: Weight) -> bool:
        beta = tuple(beta)
        return beta in self._index or tuple(-b for b in beta) in self._index

    def root_index(self, beta: Weight) -> int:
        try:
            return self._index[tuple(beta)]
        except KeyError:
            raise InvalidInputError(f"{beta} is not a positive root of {self.name}") from None

    def height(self, beta: Weight) -> int:
        return sum(beta)

    # -- pairings ----------------------------------------------------------

    def inner(self, lam: Weight, mu: Weight) -> int:
        return int(np.asarray(lam) @ self.gram @ np.asarray(mu))

    def pair(self, lam: Weight, alpha: Weight) -> int:
        """<lam, alpha^vee> for a positive root alpha."""
        self._check_weight(lam)
        if not self.is_positive_root(alpha):
            raise InvalidInputError(f"{alpha} is not a positive root of {self.name}")
        num = 2 * self.inner(lam, alpha)
        den = self.inner(alpha, alpha)
        if num % den:
            raise InvalidInputError(f"non-integral pairing <{lam}, {alpha}^vee>")
        return num // den

    def pair_simple(self, lam: Weight, i: int) -> int:
        row = self.cartan[i - 1]
        return sum(lam[j] * row[j] for j in range(self.rank))

    def reflect(self, alpha: Weight, lam: Weight) -> Weight:
        k = self.pair(lam, alpha)
        return tuple(l - k * a for l, a in zip(lam, alpha))

    def reflect_simple(self, i: int, lam: Weight) -> Weight:
        k = self.pair_simple(lam, i)
        return tuple(l - (k if j == i - 1 else 0) for j, l in enumerate(lam))

    def _check_weight(self, lam) -> None:
        if len(lam) != self.rank or any(int(c) != c for c in lam):
            raise InvalidInputError(
                f"{lam} is not a root-lattice weight of {self.name} "
                "(integer simple-root coordinates required)"
            )

    # -- order and parabolic data -----------------------------------------

    def root_leq(self, alpha: Weight, beta: Weight) -> bool:
        """alpha <= beta iff beta - alpha is a non-negative combination of simple roots."""
        return all(b >= a for a, b in zip(alpha, beta))

    def cominuscule_nodes(self) -> FrozenSet[int]:
        return frozenset(i + 1 for i, c in enumerate(self.highest_root) if c == 1)

    def parabolic_positive_roots(self, nodes: Iterable[int]) -> FrozenSet[Weight]:
        """R_P^+: positive roots supported on the given simple nodes."""
        nodes = set(nodes)
        return frozenset(
            beta for beta in self.positive_roots
            if all(c == 0 or (j + 1) in nodes for j, c in enumerate(beta))
        )

    def roots_geq(self, node: int) -> Tuple[Weight, ...]:
        """R_{>= alpha_P}: positive roots containing alpha_node."""
        return tuple(beta for beta in self.positive_roots if beta[node - 1] > 0)


def _enumerate_positive_roots(rank: int, cartan) -> List[Weight]:
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for i in range(rank):
            if beta == simple[i]:
                continue
            k = sum(beta[j] * cartan[i][j] for j in range(rank))
            gamma = tuple(b - (k if j == i else 0) for j, b in enumerate(beta))
            if gamma not in seen:
                seen.add(gamma)
                queue.append(gamma)
    return sorted(seen, key=lambda b: (sum(b), tuple(-c for c in b)))


@lru_cache(maxsize=None)
def build_root_system(lie_type: str, rank: int) -> RootSystem:
    lie_type = lie_type.upper()
    _check_type(lie_type, rank)
    cartan = _cartan(lie_type, rank)
    d = _symmetrizer(lie_type, rank)
    gram = np.array([[d[i] * cartan[i][j] for j in range(rank)] for i in range(rank)], dtype=np.int64)
    positive = _enumerate_positive_roots(rank, cartan)
    expected = EXPECTED_COUNTS[lie_type](rank)
    if len(positive) != expected:
        raise AssertionError(f"{lie_type}{rank}: found {len(positive)} positive roots, expected {expected}")
    highest = max(positive, key=sum)
    if not all(all(h >= c for h, c in zip(highest, beta)) for beta in positive):
        raise AssertionError(f"{lie_type}{rank}: no unique highest root")
    logger.debug("built %s%d with %d positive roots", lie_type, rank, len(positive))
    return RootSystem(
        lie_type=lie_type,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(positive),
        highest_root=highest,
        symmetrizer=tuple(d),
        gram=gram,
        roots_matrix=np.array(positive, dtype=np.int64).T,
        _index={beta: k for k, beta in enumerate(positive)},
    )


_NAME = re.compile(r"^\s*([A-Ea-e])\s*(\d+)\s*$")


def parse_root_system(text: str) -> RootSystem:
    match = _NAME.match(text)
    if not match:
        raise InvalidInputError(f"cannot parse root system {text!r} (expected e.g. 'A3', 'C4', 'E6')")
    return build_root_system(match.group(1).upper(), int(match.group(2)))
