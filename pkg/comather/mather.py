"""
Chern-Mather classes of cominuscule Schubert varieties.

The Mather class of X_w^P is the push-forward of c(T_w) cap [X_w^B], where
c(T_w) is the product of c(L_{-alpha}) over the inversion set of w. The same
machinery gives dual Mather classes, Segre classes of conormal spaces,
Segre-Mather classes and Mather classes of pull-backs to smaller parabolics.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .chow import (
    FlagSpace,
    SchubertClass,
    dual_class,
    pullback,
    pushforward,
    schubert,
    total_chern_inverse_mul,
    total_chern_mul,
    truncate,
)
from .config import get_settings
from .errors import InvalidInputError
from .poly import EquivPoly
from .roots import Weight
from .weyl import WeylElt

logger = logging.getLogger(__name__)


def _neg(beta: Weight) -> Weight:
    return tuple(-x for x in beta)


def guard_interval(space: FlagSpace, w: WeylElt) -> int:
    """Size of [id, w] in W, refusing intervals beyond the configured cap."""
    return len(space.group.lower_interval(w, limit=get_settings().max_interval))


def _check_input(space: FlagSpace, w: WeylElt) -> None:
    space.require_cominuscule()
    space.require_min_rep(w)
    guard_interval(space, w)


@dataclass(frozen=True, eq=False)
class MatherResult:
    space: FlagSpace
    w: WeylElt
    upstairs: SchubertClass
    downstairs: SchubertClass
    equivariant: bool

    def leading_coefficient(self) -> EquivPoly:
        return self.downstairs.coefficient(self.w)

    def coefficient_table(self) -> Dict[str, EquivPoly]:
        return self.downstairs.by_label()


def inversion_weights(space: FlagSpace, w: WeylElt) -> List[Weight]:
    """{-alpha : alpha in I(w)} by increasing height."""
    inversions = space.group.inversion_set(w)
    return [_neg(beta) for beta in space.rs.positive_roots if beta in inversions]


def _complement_roots(space: FlagSpace) -> List[Weight]:
    """R^+ minus R_P^+, in height order."""
    r_p = space.quotient.r_p_plus
    return [beta for beta in space.rs.positive_roots if beta not in r_p]


@lru_cache(maxsize=4096)
def mather_class(space: FlagSpace, w: WeylElt, equivariant: bool = False) -> MatherResult:
    _check_input(space, w)
    gb = space.gb()
    upstairs = total_chern_mul(schubert(gb, w, equivariant), inversion_weights(space, w))
    downstairs = pushforward(upstairs, space)
    logger.debug("Mather class of %s in %s: %d terms upstairs", space.label(w), space, len(upstairs))
    return MatherResult(space, w, upstairs, downstairs, equivariant)


def dual_mather(m: MatherResult) -> SchubertClass:
    return dual_class(m.downstairs, m.w.length)


def pullback_mather(space: FlagSpace, w: WeylElt, target: Optional[FlagSpace] = None,
                    equivariant: bool = False) -> SchubertClass:
    """Mather class of the preimage of X_w^P in G/Q, Q contained in P."""
    target = target or space.gb()
    if target.rs != space.rs or not target.parabolic <= space.parabolic:
        raise InvalidInputError(f"{target} does not project onto {space}")
    m = mather_class(space, w, equivariant)
    gb = space.gb()
    lifted = pullback(m.downstairs, gb)
    relative = [_neg(beta) for beta in space.rs.positive_roots if beta in space.quotient.r_p_plus]
    upstairs = total_chern_mul(lifted, relative)
    if target.is_gb:
        return upstairs
    # fibres of G/B -> G/Q have Euler characteristic |W_Q|
    fibre = len(space.group.parabolic_subgroup(target.parabolic))
    return pushforward(upstairs, target).scale(Fraction(1, fibre))


def _conormal_weights(space: FlagSpace, w: WeylElt) -> List[Weight]:
    group = space.group
    return [beta for beta in _complement_roots(space) if space.rs.is_positive_root(group.act(w, beta))]


def segre_conormal(space: FlagSpace, w: WeylElt, equivariant: bool = False) -> SchubertClass:
    """Segre class of the conormal space of X_w^P."""
    _check_input(space, w)
    upstairs = total_chern_inverse_mul(schubert(space.gb(), w, equivariant), _conormal_weights(space, w))
    return pushforward(upstairs, space)


def segre_mather(space: FlagSpace, w: WeylElt, equivariant: bool = False) -> SchubertClass:
    _check_input(space, w)
    weights = [_neg(beta) for beta in _conormal_weights(space, w)]
    upstairs = total_chern_inverse_mul(schubert(space.gb(), w, equivariant), weights)
    return pushforward(upstairs, space)


def check_dual_identity(space: FlagSpace, w: WeylElt, equivariant: bool = False) -> bool:
    """c(T^*(G/P)) cap s(T^*_{X_w}) equals the dual Mather class."""
    _check_input(space, w)
    upstairs = total_chern_inverse_mul(schubert(space.gb(), w, equivariant), _conormal_weights(space, w))
    upstairs = total_chern_mul(upstairs, _complement_roots(space))
    lhs = truncate(pushforward(upstairs, space), 0)
    return lhs == dual_mather(mather_class(space, w, equivariant))


def check_alternating(c: SchubertClass, top: int) -> List[str]:
    """Labels whose homological-degree-i part does not carry the sign (-1)^(top-i)."""
    bad = []
    for v, p in c.sorted_items():
        if not p.is_constant():
            continue
        sign = 1 if (top - v.length) % 2 == 0 else -1
        if p.constant_term() * sign <= 0:
            bad.append(c.space.label(v))
    return bad


# -- Mather polynomials -------------------------------------------------------


@dataclass(frozen=True)
class MatherPolynomial:
    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        pieces = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = str(c) if (c != 1 or k == 0) else ""
            pieces.append(f"{body}{mono}")
        return "+".join(pieces) or "0"

    def eval(self, x: int) -> int:
        return sum(c * x ** k for k, c in enumerate(self.coeffs))


def mather_polynomial(space: FlagSpace, w: WeylElt) -> MatherPolynomial:
    coeffs = [0] * (w.length + 1)
    for v, p in mather_class(space, w).downstairs.terms.items():
        coeffs[v.length] += int(p.constant_term())
    return MatherPolynomial(tuple(coeffs))


def check_unimodal(p: MatherPolynomial) -> bool:
    coeffs = p.coeffs
    peak = coeffs.index(max(coeffs))
    return all(coeffs[k] <= coeffs[k + 1] for k in range(peak)) and all(
        coeffs[k] >= coeffs[k + 1] for k in range(peak, len(coeffs) - 1)
    )


def check_log_concave(p: MatherPolynomial) -> bool:
    padded = (0,) + p.coeffs + (0,)
    return all(padded[k] ** 2 >= padded[k - 1] * padded[k + 1] for k in range(1, len(padded) - 1))


# -- positivity ---------------------------------------------------------------


@dataclass
class PositivityReport:
    space: FlagSpace
    w: WeylElt
    equivariant: bool
    violations: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_positivity(space: FlagSpace, w: WeylElt, equivariant: bool = False) -> PositivityReport:
    """Every a_{w,v} with v <= w is positive; equivariantly, no negative monomial coefficient."""
    m = mather_class(space, w, equivariant)
    report = PositivityReport(space, w, equivariant)
    group = space.group
    for v in space.min_reps():
        if not group.bruhat_leq(v, w):
            continue
        p = m.downstairs.coefficient(v)
        label = space.label(v)
        if equivariant:
            if p.is_zero() or not p.coefficients_nonnegative():
                report.violations.append((label, p.to_str()))
        elif p.constant_term() <= 0:
            report.violations.append((label, p.to_str()))
    return report


def coefficient_table(space: FlagSpace, w: WeylElt) -> Dict[str, int]:
    return mather_class(space, w).downstairs.constant_by_label()
