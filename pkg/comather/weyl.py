"""
Weyl groups as integer matrices acting on simple-root coordinates.

Column i of an element's matrix is w(alpha_i). Elements are interned per group,
so equal matrices give the same WeylElt instance, and every cache in this
module is keyed on elements directly.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidInputError, ResourceLimitError
from .roots import RootSystem, Weight

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class WeylElt:
    lie: str
    matrix: Matrix
    length: int = field(compare=False)
    array: np.ndarray = field(compare=False, repr=False)

    def __repr__(self) -> str:
        return f"WeylElt({self.lie}, length={self.length})"


@dataclass(frozen=True, eq=False)
class ParabolicQuotient:
    group: "WeylGroup"
    parabolic_nodes: FrozenSet[int]
    min_reps: Tuple[WeylElt, ...]
    r_p_plus: FrozenSet[Weight]
    w_p: WeylElt

    @property
    def excluded_nodes(self) -> FrozenSet[int]:
        return frozenset(range(1, self.group.rank + 1)) - self.parabolic_nodes

    def __len__(self) -> int:
        return len(self.min_reps)

    def __contains__(self, w: WeylElt) -> bool:
        return self.group.is_min_rep(w, self.parabolic_nodes)

    @property
    def top(self) -> WeylElt:
        return self.min_reps[-1]


class WeylGroup:
    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.rank = rs.rank
        self._roots = rs.roots_matrix
        self._elements: Dict[Matrix, WeylElt] = {}
        self._inverse: Dict[WeylElt, WeylElt] = {}
        self._words: Dict[WeylElt, Tuple[int, ...]] = {}
        self._covers: Dict[WeylElt, List[Tuple[int, WeylElt]]] = {}
        self._bruhat: Dict[Tuple[WeylElt, WeylElt], bool] = {}
        self._intervals: Dict[WeylElt, FrozenSet[WeylElt]] = {}
        self._quotients: Dict[FrozenSet[int], ParabolicQuotient] = {}
        self._subgroups: Dict[FrozenSet[int], Tuple[WeylElt, ...]] = {}
        self.identity = self._make(np.eye(self.rank, dtype=np.int64))
        self._reflections = [
            self._make(self._reflection_matrix(beta)) for beta in rs.positive_roots
        ]
        self._simple = [self._reflections[rs.root_index(rs.simple_root(i))] for i in range(1, self.rank + 1)]

    def __repr__(self) -> str:
        return f"WeylGroup({self.rs.name})"

    # -- construction ------------------------------------------------------

    def _reflection_matrix(self, beta: Weight) -> np.ndarray:
        cols = [self.rs.reflect(beta, self.rs.simple_root(j)) for j in range(1, self.rank + 1)]
        return np.array(cols, dtype=np.int64).T

    def _make(self, arr: np.ndarray) -> WeylElt:
        key = tuple(tuple(int(x) for x in row) for row in arr.tolist())
        elt = self._elements.get(key)
        if elt is None:
            length = int(np.count_nonzero((arr @ self._roots < 0).any(axis=0)))
            elt = WeylElt(self.rs.name, key, length, np.array(key, dtype=np.int64))
            self._elements[key] = elt
        return elt

    def _check(self, *elts: WeylElt) -> None:
        for w in elts:
            if w.lie != self.rs.name:
                raise InvalidInputError(f"element of {w.lie} used in the Weyl group of {self.rs.name}")

    def simple(self, i: int) -> WeylElt:
        if not 1 <= i <= self.rank:
            raise InvalidInputError(f"{self.rs.name} has no simple reflection s{i}")
        return self._simple[i - 1]

    def reflection(self, beta: Weight) -> WeylElt:
        return self._reflections[self.rs.root_index(beta)]

    # -- group structure ---------------------------------------------------

    def mul(self, u: WeylElt, v: WeylElt) -> WeylElt:
        self._check(u, v)
        return self._make(u.array @ v.array)

    def inverse(self, w: WeylElt) -> WeylElt:
        self._check(w)
        inv = self._inverse.get(w)
        if inv is None:
            inv = self.identity
            x = w
            # strip right descents: w = x s_i, so w^{-1} = s_i x^{-1}
            while x.length:
                i = self.right_descents(x)[0]
                inv = self._make(inv.array @ self._simple[i - 1].array)
                x = self._make(x.array @ self._simple[i - 1].array)
            self._inverse[w] = inv
            self._inverse[inv] = w
        return inv

    def act(self, w: WeylElt, lam: Sequence[int]) -> Weight:
        self._check(w)
        self.rs._check_weight(lam)
        return tuple(int(x) for x in w.array @ np.asarray(lam, dtype=np.int64))

    def from_word(self, word: Iterable[int]) -> WeylElt:
        arr = np.eye(self.rank, dtype=np.int64)
        for i in word:
            arr = arr @ self.simple(i).array
        return self._make(arr)

    # -- descents, words, inversions ---------------------------------------

    def right_descents(self, w: WeylElt) -> List[int]:
        return [i + 1 for i in range(self.rank) if (w.array[:, i] < 0).any()]

    def left_descents(self, w: WeylElt) -> List[int]:
        return self.right_descents(self.inverse(w))

    def is_right_descent(self, w: WeylElt, i: int) -> bool:
        return bool((w.array[:, i - 1] < 0).any())

    def reduced_word(self, w: WeylElt) -> Tuple[int, ...]:
        """Lexicographically least reduced word (greedy stripping of the smallest left descent)."""
        self._check(w)
        word = self._words.get(w)
        if word is None:
            letters = []
            x = w
            while x.length:
                i = self.left_descents(x)[0]
                letters.append(i)
                x = self.mul(self._simple[i - 1], x)
            word = tuple(letters)
            self._words[w] = word
        return word

    def reduced_words(self, w: WeylElt) -> List[Tuple[int, ...]]:
        if w.length == 0:
            return [()]
        words = []
        for i in self.right_descents(w):
            for prefix in self.reduced_words(self.mul(w, self._simple[i - 1])):
                words.append(prefix + (i,))
        return sorted(words)

    def inversion_set(self, w: WeylElt) -> FrozenSet[Weight]:
        self._check(w)
        images = w.array @ self._roots
        negative = (images < 0).any(axis=0)
        return frozenset(beta for beta, neg in zip(self.rs.positive_roots, negative) if neg)

    def sort_key(self, w: WeylElt) -> Tuple[int, Tuple[int, ...]]:
        return (w.length, self.reduced_word(w))

    # -- Bruhat order ------------------------------------------------------

    def covers_indexed(self, w: WeylElt) -> List[Tuple[int, WeylElt]]:
        """(root index k, w s_k) for every co-cover w s_k of w."""
        covers = self._covers.get(w)
        if covers is None:
            covers = []
            images = w.array @ self._roots
            for k in np.flatnonzero((images < 0).any(axis=0)):
                u = self._make(w.array @ self._reflections[k].array)
                if u.length == w.length - 1:
                    covers.append((int(k), u))
            self._covers[w] = covers
        return covers

    def chevalley_covers(self, w: WeylElt) -> List[Tuple[Weight, WeylElt]]:
        self._check(w)
        return [(self.rs.positive_roots[k], u) for k, u in self.covers_indexed(w)]

    def bruhat_leq(self, v: WeylElt, w: WeylElt) -> bool:
        self._check(v, w)
        return self._leq(v, w)

    def _leq(self, v: WeylElt, w: WeylElt) -> bool:
        if v.length > w.length:
            return False
        if v.length == w.length:
            return v == w
        if v.length == 0:
            return True
        key = (v, w)
        cached = self._bruhat.get(key)
        if cached is not None:
            return cached
        i = self.right_descents(w)[0]
        s = self._simple[i - 1].array
        ws = self._make(w.array @ s)
        vs = self._make(v.array @ s)
        result = self._leq(vs if vs.length < v.length else v, ws)
        self._bruhat[key] = result
        return result

    def lower_interval(self, w: WeylElt, limit: Optional[int] = None) -> FrozenSet[WeylElt]:
        """{x : x <= w}, by closing under co-covers."""
        self._check(w)
        interval = self._intervals.get(w)
        if interval is not None:
            if limit is not None and len(interval) > limit:
                raise ResourceLimitError(
                    f"Bruhat interval below an element of length {w.length} in {self.rs.name} "
                    f"has {len(interval)} elements, above the cap of {limit}"
                )
            return interval
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for x in frontier:
                for _, u in self.covers_indexed(x):
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            if limit is not None and len(seen) > limit:
                raise ResourceLimitError(
                    f"Bruhat interval below an element of length {w.length} in {self.rs.name} "
                    f"exceeds the cap of {limit} elements"
                )
            frontier = nxt
        interval = frozenset(seen)
        self._intervals[w] = interval
        logger.debug("lower interval of length-%d element in %s: %d elements", w.length, self.rs.name, len(interval))
        return interval

    # -- parabolic structure -------------------------------------------------

    def is_min_rep(self, w: WeylElt, nodes: Iterable[int]) -> bool:
        return not any(self.is_right_descent(w, j) for j in nodes)

    def longest_element(self, nodes: Optional[Iterable[int]] = None) -> WeylElt:
        nodes = sorted(range(1, self.rank + 1) if nodes is None else set(nodes))
        w = self.identity
        grown = True
        while grown:
            grown = False
            for i in nodes:
                if not self.is_right_descent(w, i):
                    w = self.mul(w, self._simple[i - 1])
                    grown = True
        return w

    def coset_decompose(self, w: WeylElt, nodes: Iterable[int]) -> Tuple[WeylElt, WeylElt]:
        """w = w^P * w_P with w^P minimal in w W_P."""
        self._check(w)
        nodes = sorted(set(nodes))
        u = w
        stripped = True
        while stripped:
            stripped = False
            for j in nodes:
                if self.is_right_descent(u, j):
                    u = self.mul(u, self._simple[j - 1])
                    stripped = True
        return u, self.mul(self.inverse(u), w)

    def min_rep(self, w: WeylElt, nodes: Iterable[int]) -> WeylElt:
        return self.coset_decompose(w, nodes)[0]

    def parabolic_subgroup(self, nodes: Iterable[int]) -> Tuple[WeylElt, ...]:
        nodes = frozenset(nodes)
        elements = self._subgroups.get(nodes)
        if elements is None:
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for j in nodes:
                        y = self.mul(x, self._simple[j - 1])
                        if y not in seen:
                            seen.add(y)
                            nxt.append(y)
                frontier = nxt
            elements = tuple(sorted(seen, key=self.sort_key))
            self._subgroups[nodes] = elements
        return elements

    def elements(self) -> Tuple[WeylElt, ...]:
        return self.parabolic_subgroup(range(1, self.rank + 1))

    def parabolic(self, nodes: Iterable[int]) -> ParabolicQuotient:
        """W^P for the parabolic generated by the given simple nodes."""
        nodes = frozenset(nodes)
        quotient = self._quotients.get(nodes)
        if quotient is None:
            if not nodes <= set(range(1, self.rank + 1)):
                raise InvalidInputError(f"parabolic nodes {sorted(nodes)} outside 1..{self.rank}")
            seen = {self.identity}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for x in frontier:
                    for s in self._simple:
                        y = self.mul(s, x)
                        if y.length == x.length + 1 and y not in seen and self.is_min_rep(y, nodes):
                            seen.add(y)
                            nxt.append(y)
                frontier = nxt
            quotient = ParabolicQuotient(
                group=self,
                parabolic_nodes=nodes,
                min_reps=tuple(sorted(seen, key=self.sort_key)),
                r_p_plus=self.rs.parabolic_positive_roots(nodes),
                w_p=self.longest_element(nodes),
            )
            logger.debug("enumerated W^P for %s, P=%s: %d elements", self.rs.name, sorted(nodes), len(seen))
            self._quotients[nodes] = quotient
        return quotient


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> WeylGroup:
    return WeylGroup(rs)
