"""
Equivariant Schubert classes on G/B and G/P.

All products with Chern classes happen on G/B through the Chevalley formula;
classes on G/P are images of G/B classes under push-forward.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .diagrams import DiagramDictionary, diagram_dictionary, format_word, parse_word
from .errors import InvalidInputError
from .poly import EquivPoly
from .roots import RootSystem, Weight, parse_root_system
from .weyl import ParabolicQuotient, WeylElt, WeylGroup, weyl_group

logger = logging.getLogger(__name__)

_SPACE = re.compile(r"^\s*([A-Ea-e]\d+)\s*/\s*(B|P[\d,\s]*)\s*$")


@dataclass(frozen=True)
class FlagSpace:
    """G/P for the standard parabolic generated by `parabolic` (empty means G/B)."""

    rs: RootSystem
    parabolic: FrozenSet[int]

    @classmethod
    def parse(cls, text: str) -> "FlagSpace":
        """'A3/P2' (maximal parabolic excluding node 2), 'A3/P1,3', or 'A3/B'."""
        match = _SPACE.match(text)
        if not match:
            raise InvalidInputError(f"cannot parse flag space {text!r} (expected e.g. 'A3/P2' or 'C2/B')")
        rs = parse_root_system(match.group(1))
        everything = frozenset(range(1, rs.rank + 1))
        if match.group(2) == "B":
            return cls(rs, frozenset())
        nodes = frozenset(int(x) for x in re.split(r"[,\s]+", match.group(2)[1:]) if x)
        if not nodes or not nodes <= everything:
            raise InvalidInputError(f"{text!r}: nodes must lie in 1..{rs.rank}")
        return cls(rs, everything - nodes)

    def __str__(self) -> str:
        if not self.parabolic:
            return f"{self.rs.name}/B"
        return f"{self.rs.name}/P" + ",".join(str(i) for i in sorted(self.excluded))

    @property
    def group(self) -> WeylGroup:
        return weyl_group(self.rs)

    @property
    def excluded(self) -> FrozenSet[int]:
        return frozenset(range(1, self.rs.rank + 1)) - self.parabolic

    @property
    def quotient(self) -> ParabolicQuotient:
        return self.group.parabolic(self.parabolic)

    @property
    def is_gb(self) -> bool:
        return not self.parabolic

    def gb(self) -> "FlagSpace":
        return FlagSpace(self.rs, frozenset())

    @property
    def node(self) -> Optional[int]:
        excluded = self.excluded
        return next(iter(excluded)) if len(excluded) == 1 else None

    @property
    def is_cominuscule(self) -> bool:
        return self.node is not None and self.node in self.rs.cominuscule_nodes()

    @property
    def nvars(self) -> int:
        return self.rs.rank + 1

    @property
    def dim(self) -> int:
        return len(self.rs.positive_roots) - len(self.quotient.r_p_plus)

    def min_reps(self) -> Tuple[WeylElt, ...]:
        return self.quotient.min_reps

    def is_min_rep(self, w: WeylElt) -> bool:
        return self.group.is_min_rep(w, self.parabolic)

    def min_rep(self, w: WeylElt) -> WeylElt:
        return self.group.min_rep(w, self.parabolic)

    def max_rep(self, w: WeylElt) -> WeylElt:
        return self.group.mul(self.min_rep(w), self.quotient.w_p)

    def require_min_rep(self, w: WeylElt) -> None:
        if not self.is_min_rep(w):
            raise InvalidInputError(
                f"element with word {self.word(w)} is not a minimal representative for {self}; "
                "use coset_decompose to reduce it"
            )

    def require_cominuscule(self) -> None:
        if not self.is_cominuscule:
            raise InvalidInputError(f"{self} is not a cominuscule flag manifold")

    # -- labels ------------------------------------------------------------

    @property
    def diagrams(self) -> Optional[DiagramDictionary]:
        return diagram_dictionary(self.group, self.node) if self.is_cominuscule else None

    def word(self, w: WeylElt) -> str:
        return format_word(self.group.reduced_word(w), self.rs.rank)

    def label(self, w: WeylElt) -> str:
        diagrams = self.diagrams
        if diagrams is not None:
            return str(diagrams.diagram(w))
        return self.word(w)

    def sort_key(self, w: WeylElt) -> Tuple[int, str]:
        return (w.length, self.label(w))

    def table_key(self, w: WeylElt) -> tuple:
        """Row and column order of full tables: strict partitions lexicographically by parts."""
        diagrams = self.diagrams
        if diagrams is not None and diagrams.strict:
            return diagrams.diagram(w).label
        return self.sort_key(w)

    def parse_element(self, text: str) -> WeylElt:
        """A diagram label on cominuscule spaces, otherwise (or with an s-prefix/spaces) a reduced word."""
        text = text.strip()
        diagrams = self.diagrams
        if diagrams is not None and (text in diagrams or not _looks_like_word(text)):
            return diagrams.element(text)
        word = parse_word(text)
        w = self.group.from_word(word)
        if w.length != len(word):
            raise InvalidInputError(f"word {text!r} is not reduced")
        self.require_min_rep(w)
        return w


def _looks_like_word(text: str) -> bool:
    return text.startswith("s") or " " in text.strip() or text in ("id", "e")


Coefficient = Union[EquivPoly, int, Fraction]


class SchubertClass:
    """Finite combination of Schubert classes [X_w] with polynomial coefficients."""

    __slots__ = ("space", "equivariant", "terms")

    def __init__(self, space: FlagSpace, equivariant: bool, terms: Optional[Mapping[WeylElt, EquivPoly]] = None):
        self.space = space
        self.equivariant = equivariant
        self.terms: Dict[WeylElt, EquivPoly] = {w: p for w, p in (terms or {}).items() if p}

    @classmethod
    def zero(cls, space: FlagSpace, equivariant: bool) -> "SchubertClass":
        return cls(space, equivariant)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"SchubertClass({self.space}, {len(self.terms)} terms)"

    def __iter__(self) -> Iterator[Tuple[WeylElt, EquivPoly]]:
        return iter(self.sorted_items())

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: WeylElt) -> EquivPoly:
        return self.terms.get(w, EquivPoly.zero(self.space.nvars))

    def support(self) -> List[WeylElt]:
        return [w for w, _ in self.sorted_items()]

    def sorted_items(self) -> List[Tuple[WeylElt, EquivPoly]]:
        key = self.space.sort_key
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def by_label(self) -> Dict[str, EquivPoly]:
        return {self.space.label(w): p for w, p in self.sorted_items()}

    def constant_by_label(self) -> Dict[str, int]:
        """Integer coefficients of a non-equivariant class, keyed by label."""
        out = {}
        for label, p in self.by_label().items():
            c = p.constant_term()
            if not p.is_constant() or c.denominator != 1:
                raise InvalidInputError(f"coefficient {p} at {label} is not an integer")
            out[label] = int(c)
        return out

    def _check_compatible(self, other: "SchubertClass") -> None:
        if self.space != other.space:
            raise InvalidInputError(f"classes live on different spaces: {self.space} and {other.space}")

    def __add__(self, other: "SchubertClass") -> "SchubertClass":
        self._check_compatible(other)
        terms = dict(self.terms)
        for w, p in other.terms.items():
            terms[w] = terms[w] + p if w in terms else p
        return SchubertClass(self.space, self.equivariant or other.equivariant, terms)

    def __neg__(self) -> "SchubertClass":
        return SchubertClass(self.space, self.equivariant, {w: -p for w, p in self.terms.items()})

    def __sub__(self, other: "SchubertClass") -> "SchubertClass":
        return self + (-other)

    def scale(self, c: Coefficient) -> "SchubertClass":
        return SchubertClass(self.space, self.equivariant, {w: p * c for w, p in self.terms.items()})

    def specialize(self) -> "SchubertClass":
        """Set every root variable to zero (equivariant -> ordinary class)."""
        return SchubertClass(
            self.space, False, {w: p.substitute_alphas_zero() for w, p in self.terms.items()}
        )

    def map_coefficients(self, fn) -> "SchubertClass":
        return SchubertClass(self.space, self.equivariant, {w: fn(w, p) for w, p in self.terms.items()})


def _accumulate(terms: Dict[WeylElt, EquivPoly], w: WeylElt, p: EquivPoly) -> None:
    if w in terms:
        terms[w] = terms[w] + p
    else:
        terms[w] = p


def weight_poly(weight: Sequence[int]) -> EquivPoly:
    return EquivPoly.linear(weight)


def schubert(space: FlagSpace, w: WeylElt, equivariant: bool = False) -> SchubertClass:
    space.require_min_rep(w)
    return SchubertClass(space, equivariant, {w: EquivPoly.one(space.nvars)})


def _require_gb(c: SchubertClass, what: str) -> None:
    if not c.space.is_gb:
        raise InvalidInputError(f"{what} is only applied on G/B, got a class on {c.space}")


def chevalley_mul(c: SchubertClass, lam: Weight) -> SchubertClass:
    """c_1(L_lam) cap c: w(lam)[X_w] + sum <-lam, alpha^vee>[X_{w s_alpha}] over co-covers."""
    _require_gb(c, "the Chevalley formula")
    rs = c.space.rs
    rs._check_weight(lam)
    group = c.space.group
    pairings = _coroot_pairings(rs, tuple(-x for x in lam))
    out: Dict[WeylElt, EquivPoly] = {}
    for v, p in c.terms.items():
        if c.equivariant:
            _accumulate(out, v, p * weight_poly(group.act(v, lam)))
        for k, u in group.covers_indexed(v):
            coeff = pairings[k]
            if coeff:
                _accumulate(out, u, p * coeff)
    return SchubertClass(c.space, c.equivariant, out)


def _coroot_pairings(rs: RootSystem, lam: Weight) -> List[int]:
    """<lam, beta^vee> for every positive root beta, in positive_roots order."""
    roots = rs.roots_matrix
    num = 2 * (np.asarray(lam, dtype=np.int64) @ rs.gram @ roots)
    den = np.einsum("ij,ik,kj->j", roots, rs.gram, roots)
    if (num % den).any():
        raise InvalidInputError(f"weight {lam} has non-integral coroot pairings")
    return [int(x) for x in num // den]


def total_chern_mul(c: SchubertClass, weights: Iterable[Weight]) -> SchubertClass:
    """prod (1 + c_1(L_lam)) cap c, one line bundle at a time."""
    for lam in weights:
        c = c + chevalley_mul(c, lam)
    return c


def truncate(c: SchubertClass, min_degree: int = 0) -> SchubertClass:
    """Drop monomials whose homological degree l(v) - deg falls below min_degree."""
    out = {}
    for v, p in c.terms.items():
        kept = EquivPoly(p.nvars)
        for exps, coeff in p.terms.items():
            if v.length - sum(exps[:-1]) >= min_degree:
                kept.add_term(coeff, exps)
        if kept:
            out[v] = kept
    return SchubertClass(c.space, c.equivariant, out)


def total_chern_inverse_mul(c: SchubertClass, weights: Iterable[Weight], min_degree: int = 0) -> SchubertClass:
    """prod (1 + c_1(L_lam))^{-1} cap c as finite geometric series."""
    for lam in weights:
        result = c
        term = c
        while not term.is_zero():
            term = truncate(-chevalley_mul(term, lam), min_degree)
            result = result + term
        c = result
    return c


def pushforward(c: SchubertClass, target: FlagSpace) -> SchubertClass:
    if target.rs != c.space.rs or not c.space.parabolic <= target.parabolic:
        raise InvalidInputError(f"no projection from {c.space} to {target}")
    return SchubertClass(target, c.equivariant, {v: p for v, p in c.terms.items() if target.is_min_rep(v)})


def pullback(c: SchubertClass, target: FlagSpace) -> SchubertClass:
    """[X_v^P] -> [X_{(v w_P)^Q}] along G/Q -> G/P."""
    if target.rs != c.space.rs or not target.parabolic <= c.space.parabolic:
        raise InvalidInputError(f"no projection from {target} to {c.space}")
    group = c.space.group
    w_p = c.space.quotient.w_p
    out: Dict[WeylElt, EquivPoly] = {}
    for v, p in c.terms.items():
        _accumulate(out, target.min_rep(group.mul(v, w_p)), p)
    return SchubertClass(target, c.equivariant, out)


def homogenize(c: SchubertClass, target_dim: int = 0) -> SchubertClass:
    """Multiply each monomial on [X_v] by h^(l(v) - deg - target_dim); every term ends in homological degree target_dim."""
    out = {}
    for v, p in c.terms.items():
        if p.has_hbar():
            raise InvalidInputError("class already contains h")
        q = EquivPoly(p.nvars)
        for exps, coeff in p.terms.items():
            k = v.length - sum(exps) - target_dim
            if k < 0:
                raise InvalidInputError(
                    f"monomial of degree {sum(exps)} on a class of dimension {v.length} is below homological degree {target_dim}"
                )
            q.add_term(coeff, exps[:-1] + (k,))
        out[v] = q
    return SchubertClass(c.space, True, out)


def dehomogenize(c: SchubertClass) -> SchubertClass:
    return SchubertClass(c.space, c.equivariant, {v: p.substitute_hbar_one() for v, p in c.terms.items()})


def dual_class(c: SchubertClass, top_degree: int) -> SchubertClass:
    """Sign (-1)^(top_degree - i) on the homological-degree-i component."""
    out = {}
    for v, p in c.terms.items():
        q = EquivPoly(p.nvars)
        for exps, coeff in p.terms.items():
            i = v.length - sum(exps[:-1])
            q.add_term(coeff if (top_degree - i) % 2 == 0 else -coeff, exps)
        out[v] = q
    return SchubertClass(c.space, c.equivariant, out)
