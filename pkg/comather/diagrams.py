"""
Diagrams of cominuscule Schubert varieties.

For a cominuscule node the inversion set of w in W^P is a lower order ideal of
the poset R_{>= alpha_P}. Each supported layout arranges that poset in rows of
simple-reflection letters; the diagram label of w is the list of how many boxes
of each row lie in I(w). Reading the letters row by row gives a reduced word of
the top element, and the roots of the boxes are read off that word.

Quadrics and E7/P7 have no row layout here: quadrics are labelled by dimension
(with an a/b tag at the middle dimension of even quadrics) and E7/P7 by its
canonical reduced word.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import InvalidInputError, PipelineError
from .roots import Weight
from .weyl import WeylElt, WeylGroup

logger = logging.getLogger(__name__)

Label = Tuple[Union[int, str], ...]

E6_P6_ROWS = ((6, 5, 4, 3, 1), (2, 4, 3), (5, 4, 2), (6, 5, 4, 3, 1))
E6_MIRROR = {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}


@dataclass(frozen=True)
class CominDiagram:
    ideal: FrozenSet[Weight]
    label: Label

    def __str__(self) -> str:
        return format_label(self.label)


def format_label(label: Label) -> str:
    if not label:
        return "()"
    if len(label) == 1 and isinstance(label[0], str):
        return label[0]
    if len(label) == 2 and isinstance(label[1], str):
        return f"{label[0]}{label[1]}"
    if any(part >= 10 for part in label):
        return ",".join(str(part) for part in label)
    return "".join(str(part) for part in label)


def format_word(word: Sequence[int], rank: int) -> str:
    if not word:
        return "id"
    if rank < 10:
        return "".join(str(i) for i in word)
    return "".join(f"s{i}" for i in word)


# -- row layouts ------------------------------------------------------------


def grassmannian_rows(n: int, k: int) -> List[List[int]]:
    """A_n / P_k: k rows of n+1-k boxes, box (r, c) carries s_{k-r+c}."""
    return [[k - r + c for c in range(1, n + 2 - k)] for r in range(1, k + 1)]


def lagrangian_rows(n: int) -> List[List[int]]:
    """C_n / P_n: row r reads s_n, s_{n-1}, ..., s_r (strict partitions)."""
    return [list(range(n, r - 1, -1)) for r in range(1, n + 1)]


def orthogonal_rows(n: int, node: int) -> List[List[int]]:
    """D_n / P_n (or P_{n-1} with the two spin nodes swapped)."""
    other = n - 1 if node == n else n
    rows = []
    for r in range(1, n):
        diagonal = node if r % 2 == 1 else other
        rows.append([diagonal] + list(range(n - 2, r - 1, -1)))
    return rows


def _rows_for(lie_type: str, rank: int, node: int) -> Optional[List[List[int]]]:
    if lie_type == "A":
        return grassmannian_rows(rank, node)
    if lie_type == "C" and node == rank:
        return lagrangian_rows(rank)
    if lie_type == "D" and node in (rank - 1, rank) and rank >= 4:
        return orthogonal_rows(rank, node)
    if lie_type == "E" and rank == 6 and node == 6:
        return [list(row) for row in E6_P6_ROWS]
    if lie_type == "E" and rank == 6 and node == 1:
        return [[E6_MIRROR[i] for i in row] for row in E6_P6_ROWS]
    return None


class DiagramLayout:
    """Row layout of R_{>= alpha_P} with the root carried by every box."""

    def __init__(self, group: WeylGroup, node: int, rows: List[List[int]]):
        self.group = group
        self.node = node
        self.rows = rows
        rs = group.rs
        poset = set(rs.roots_geq(node))
        self.box_roots: List[List[Weight]] = []
        x = group.identity
        seen = set()
        for row in rows:
            roots = []
            for i in row:
                beta = group.act(x, rs.simple_root(i))
                if beta not in poset or beta in seen:
                    raise PipelineError(f"layout for {rs.name}/P{node} does not tile R_>=alpha_P (box {i} gives {beta})")
                seen.add(beta)
                roots.append(beta)
                x = group.mul(x, group.simple(i))
            self.box_roots.append(roots)
        if seen != poset:
            raise PipelineError(f"layout for {rs.name}/P{node} misses {len(poset - seen)} roots")

    def label_of(self, ideal: FrozenSet[Weight]) -> Label:
        counts = []
        for roots in self.box_roots:
            inside = [beta in ideal for beta in roots]
            count = sum(inside)
            if inside[:count] != [True] * count:
                raise PipelineError(f"ideal is not a union of row prefixes in {self.group.rs.name}/P{self.node}")
            counts.append(count)
        while counts and counts[-1] == 0:
            counts.pop()
        return tuple(counts)


# -- dictionary per space -----------------------------------------------------


class DiagramDictionary:
    """Bijection between W^P and diagram labels for a cominuscule node."""

    def __init__(self, group: WeylGroup, node: int):
        rs = group.rs
        if node not in rs.cominuscule_nodes():
            raise InvalidInputError(f"node {node} of {rs.name} is not cominuscule")
        self.group = group
        self.node = node
        self.parabolic_nodes = frozenset(range(1, rs.rank + 1)) - {node}
        rows = _rows_for(rs.lie_type, rs.rank, node)
        self.layout = DiagramLayout(group, node, rows) if rows is not None else None
        self._by_label: Dict[str, WeylElt] = {}
        self._labels: Dict[WeylElt, CominDiagram] = {}
        for w in group.parabolic(self.parabolic_nodes).min_reps:
            diagram = CominDiagram(group.inversion_set(w), self._label(w))
            text = format_label(diagram.label)
            if text in self._by_label:
                raise PipelineError(f"duplicate diagram label {text} in {rs.name}/P{node}")
            self._by_label[text] = w
            self._labels[w] = diagram
        logger.debug("diagram dictionary for %s/P%d: %d labels", rs.name, node, len(self._labels))

    def _label(self, w: WeylElt) -> Label:
        rs = self.group.rs
        ideal = self.group.inversion_set(w)
        if self.layout is not None:
            return self.layout.label_of(ideal)
        if rs.lie_type in ("B", "D") and self.node == 1:
            if w.length == 0:
                return ()
            if rs.lie_type == "D" and w.length == rs.rank - 1:
                # middle dimension of an even quadric: two classes
                chain = tuple(1 if j < rs.rank - 1 else 0 for j in range(rs.rank))
                return (w.length, "a" if chain in ideal else "b")
            return (w.length,)
        if w.length == 0:
            return ()
        return ("".join(f"s{i}" for i in self.group.reduced_word(w)),)

    @property
    def strict(self) -> bool:
        """Labels are strict partitions (Lagrangian and orthogonal Grassmannians)."""
        rs = self.group.rs
        if rs.lie_type == "C":
            return self.node == rs.rank
        return rs.lie_type == "D" and rs.rank >= 4 and self.node in (rs.rank - 1, rs.rank)

    def diagram(self, w: WeylElt) -> CominDiagram:
        try:
            return self._labels[w]
        except KeyError:
            raise InvalidInputError(f"element is not a minimal representative for {self.group.rs.name}/P{self.node}") from None

    def element(self, text: str) -> WeylElt:
        key = canonical_label_text(text)
        try:
            return self._by_label[key]
        except KeyError:
            raise InvalidInputError(f"no Schubert variety labelled {text!r} in {self.group.rs.name}/P{self.node}") from None

    def labels(self) -> List[str]:
        return list(self._by_label)

    def __contains__(self, text: str) -> bool:
        return canonical_label_text(text) in self._by_label


@lru_cache(maxsize=None)
def diagram_dictionary(group: WeylGroup, node: int) -> DiagramDictionary:
    return DiagramDictionary(group, node)


# -- text forms ----------------------------------------------------------------

_EMPTY = {"", "()", "0", "∅", "empty"}


def canonical_label_text(text: str) -> str:
    text = text.strip()
    if text in _EMPTY:
        return "()"
    if text.startswith("s"):
        return text.replace(" ", "")
    text = text.strip("()[] ")
    if not text:
        return "()"
    if "," in text:
        parts = [int(p) for p in text.split(",") if p.strip()]
        while parts and parts[-1] == 0:
            parts.pop()
        return format_label(tuple(parts))
    return text.replace(" ", "")


_WORD_S = re.compile(r"^(s\d+)+$")


def parse_word(text: str) -> Tuple[int, ...]:
    """'1 3 2', 's1s3s2', '132' (rank < 10) or 'id' -> letters."""
    text = text.strip()
    if text in ("id", "e", "()", ""):
        return ()
    compact = text.replace(" ", "")
    if _WORD_S.match(compact):
        return tuple(int(x) for x in compact[1:].split("s"))
    if " " in text or "," in text:
        return tuple(int(x) for x in re.split(r"[\s,]+", text) if x)
    if text.isdigit():
        return tuple(int(x) for x in text)
    raise InvalidInputError(f"cannot parse reduced word {text!r}")


def ideal_to_element(group: WeylGroup, node: int, ideal: Iterable[Weight]) -> WeylElt:
    """Grow w one simple reflection at a time until I(w) is the given ideal."""
    rs = group.rs
    ideal = frozenset(tuple(beta) for beta in ideal)
    poset = set(rs.roots_geq(node))
    if not ideal <= poset:
        raise InvalidInputError(f"ideal contains roots outside R_>=alpha_{node}")
    for beta in ideal:
        for gamma in poset:
            if rs.root_leq(gamma, beta) and gamma not in ideal:
                raise InvalidInputError(f"{sorted(ideal)} is not a lower order ideal ({gamma} <= {beta} missing)")
    w = group.identity
    remaining = set(ideal)
    while remaining:
        inv = group.inverse(w)
        for i in range(1, rs.rank + 1):
            beta = group.act(inv, rs.simple_root(i))
            if beta in remaining:
                w = group.mul(group.simple(i), w)
                remaining.discard(beta)
                break
        else:
            raise InvalidInputError("ideal is not the inversion set of a minimal representative")
    if group.inversion_set(w) != ideal:
        raise PipelineError("ideal_to_element produced the wrong inversion set")
    return w


def element_to_diagram(group: WeylGroup, node: int, w: WeylElt) -> CominDiagram:
    return diagram_dictionary(group, node).diagram(w)
