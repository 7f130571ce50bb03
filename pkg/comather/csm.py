"""
CSM classes of Schubert cells and local Euler obstructions.

Cells of G/B are built by the right-descent recursion

    c_SM(X_{w s_i}) = (1 + c_1(L_{-alpha_i})) cap D_i(c_SM(X_w)) - c_SM(X_w),

where D_i pushes to G/P_i and pulls back to G/B. Cells of G/P are
push-forwards of cells of G/B. Euler obstructions are the coefficients of the
Mather class in the CSM basis of the cells.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence

from .chow import FlagSpace, SchubertClass, chevalley_mul, pushforward, schubert, total_chern_mul
from .errors import InvalidInputError, PipelineError
from .mather import guard_interval, mather_class, pullback_mather
from .poly import EquivPoly
from .weyl import WeylElt

logger = logging.getLogger(__name__)


def _divided_difference(c: SchubertClass, i: int) -> SchubertClass:
    """[X_v] -> [X_{v s_i}] when v s_i > v, else 0."""
    group = c.space.group
    s = group.simple(i)
    out = {}
    for v, p in c.terms.items():
        if not group.is_right_descent(v, i):
            out[group.mul(v, s)] = p
    return SchubertClass(c.space, c.equivariant, out)


def _step(c: SchubertClass, i: int) -> SchubertClass:
    rs = c.space.rs
    d = _divided_difference(c, i)
    minus_alpha = tuple(-x for x in rs.simple_root(i))
    return d + chevalley_mul(d, minus_alpha) - c


def csm_cell_gb(space: FlagSpace, w: WeylElt, equivariant: bool = False) -> SchubertClass:
    """c_SM of the cell X_w^o in G/B, memoised per root system."""
    return _cell_gb(space.gb(), w, equivariant)


@lru_cache(maxsize=65536)
def _cell_gb(gb: FlagSpace, w: WeylElt, equivariant: bool) -> SchubertClass:
    group = gb.group
    if w.length == 0:
        return schubert(gb, w, equivariant)
    i = group.right_descents(w)[0]
    return _step(_cell_gb(gb, group.mul(w, group.simple(i)), equivariant), i)


def csm_cell_gb_along(space: FlagSpace, word: Sequence[int], equivariant: bool = False) -> SchubertClass:
    """The same recursion along an explicit reduced word, without the memo."""
    gb = space.gb()
    group = gb.group
    x = group.identity
    c = schubert(gb, x, equivariant)
    for i in word:
        y = group.mul(x, group.simple(i))
        if y.length != x.length + 1:
            raise InvalidInputError(f"word {tuple(word)} is not reduced")
        c = _step(c, i)
        x = y
    return c


def csm_cell_gp(space: FlagSpace, v: WeylElt, equivariant: bool = False) -> SchubertClass:
    space.require_min_rep(v)
    if space.is_gb:
        return csm_cell_gb(space, v, equivariant)
    return pushforward(csm_cell_gb(space, v, equivariant), space)


def fundamental_chern_class(space: FlagSpace, equivariant: bool = False) -> SchubertClass:
    """c(T(G/P)) cap [G/P], computed upstairs from the top cell."""
    top = space.quotient.top
    r_p = space.quotient.r_p_plus
    weights = [tuple(-x for x in beta) for beta in space.rs.positive_roots if beta not in r_p]
    upstairs = total_chern_mul(schubert(space.gb(), top, equivariant), weights)
    return pushforward(upstairs, space)


@dataclass
class CsmTable:
    space: FlagSpace
    equivariant: bool
    classes: Dict[WeylElt, SchubertClass]

    def total(self) -> SchubertClass:
        total = SchubertClass.zero(self.space, self.equivariant)
        for c in self.classes.values():
            total = total + c
        return total

    def check_unitriangular(self) -> bool:
        group = self.space.group
        for w, c in self.classes.items():
            if c.coefficient(w) != 1:
                return False
            if any(not group.bruhat_leq(v, w) for v in c.terms):
                return False
        return True

    def check_total_sum(self) -> bool:
        return self.total() == fundamental_chern_class(self.space, self.equivariant)


@lru_cache(maxsize=64)
def csm_table(space: FlagSpace, equivariant: bool = False) -> CsmTable:
    logger.info("building CSM table for %s (%d cells)", space, len(space.min_reps()))
    return CsmTable(space, equivariant, {v: csm_cell_gp(space, v, equivariant) for v in space.min_reps()})


def solve_triangular(target: SchubertClass, basis: Callable[[WeylElt], SchubertClass]) -> Dict[WeylElt, Fraction]:
    """Coefficients of a non-equivariant class in a unitriangular basis, longest keys first."""
    remainder = target
    coefficients: Dict[WeylElt, Fraction] = {}
    while not remainder.is_zero():
        v = max(remainder.terms, key=lambda u: u.length)
        p = remainder.terms[v]
        if not p.is_constant():
            raise PipelineError(f"non-constant coefficient {p} in a non-equivariant solve")
        b = basis(v)
        if b.coefficient(v) != 1:
            raise PipelineError("basis is not unitriangular")
        c = p.constant_term()
        coefficients[v] = c
        remainder = remainder - b.scale(c)
    return coefficients


@dataclass
class EulerTable:
    space: FlagSpace
    w: WeylElt
    values: Dict[WeylElt, int] = field(default_factory=dict)

    def get(self, v: WeylElt) -> int:
        return self.values.get(v, 0)

    def by_label(self) -> Dict[str, int]:
        return {self.space.label(v): e for v, e in sorted(self.values.items(), key=lambda item: self.space.sort_key(item[0]))}


def _to_int(c: Fraction, what: str) -> int:
    if c.denominator != 1:
        raise PipelineError(f"non-integral {what}: {c}")
    return int(c)


@lru_cache(maxsize=4096)
def _euler_values(space: FlagSpace, w: WeylElt) -> Dict[WeylElt, int]:
    m = mather_class(space, w).downstairs
    coefficients = solve_triangular(m, lambda v: csm_cell_gp(space, v))
    return {v: _to_int(c, "Euler obstruction") for v, c in coefficients.items()}


def euler_obstructions(space: FlagSpace, w: WeylElt, verify_equivariant: bool = False) -> EulerTable:
    """e_{w,v} with c_Ma(X_w) = sum_v e_{w,v} c_SM(X_v^o)."""
    space.require_cominuscule()
    space.require_min_rep(w)
    guard_interval(space, w)
    values = dict(_euler_values(space, w))
    group = space.group
    for v in space.min_reps():
        if group.bruhat_leq(v, w):
            values.setdefault(v, 0)
    if verify_equivariant:
        residual = mather_class(space, w, True).downstairs
        for v, e in values.items():
            if e:
                residual = residual - csm_cell_gp(space, v, True).scale(e)
        if not residual.is_zero():
            raise PipelineError(f"equivariant residual of the Euler solve for {space.label(w)} is non-zero")
    return EulerTable(space, w, values)


def euler_pullback_check(space: FlagSpace, w: WeylElt, target: Optional[FlagSpace] = None) -> bool:
    """The CSM expansion of the pulled-back Mather class spreads e_{w,v} over each coset."""
    target = target or space.gb()
    table = euler_obstructions(space, w)
    pulled = pullback_mather(space, w, target)
    coefficients = solve_triangular(pulled, lambda u: csm_cell_gp(target, u))
    for u in target.min_reps():
        expected = table.get(space.min_rep(u))
        if coefficients.get(u, 0) != expected:
            logger.info("Euler pull-back mismatch at %s: %s != %s", target.label(u), coefficients.get(u, 0), expected)
            return False
    return True


@dataclass
class EulerScanReport:
    space: FlagSpace
    checked: int = 0
    violations: List[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_euler_nonneg(space: FlagSpace, ws: Optional[Sequence[WeylElt]] = None) -> EulerScanReport:
    report = EulerScanReport(space)
    for w in ws if ws is not None else space.min_reps():
        table = euler_obstructions(space, w)
        report.checked += 1
        for v, e in table.values.items():
            if e < 0:
                report.violations.append((space.label(w), space.label(v), e))
    return report


def euler_table_matrix(space: FlagSpace, columns: Optional[Sequence[WeylElt]] = None) -> Dict[str, Dict[str, int]]:
    """Column v -> {row u: Euler obstruction of X_v at u}, over all u in W^P."""
    out = {}
    for v in columns if columns is not None else space.min_reps():
        table = euler_obstructions(space, v)
        out[space.label(v)] = {space.label(u): table.get(u) for u in space.min_reps()}
    return out
