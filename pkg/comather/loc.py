"""
Torus-fixed-point localization.

[X_w]|_v is the w0-twist of Billey's subword formula for the opposite class
xi^{w0 w} at w0 v. Localizations on G/P come from those on G/B by summing
over a coset with point-Euler ratios; the ratios share at most |R_P^+| linear
factors, so every sum is put over the lcm of those factors and certified with
one exact division per factor.
"""
import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .chow import FlagSpace, SchubertClass, chevalley_mul, homogenize, schubert, total_chern_mul, weight_poly
from .errors import InvalidInputError, NotPolynomialError, PipelineError
from .mather import inversion_weights, mather_class
from .poly import EquivPoly, RatFun, product
from .roots import Weight
from .weyl import WeylElt, WeylGroup

logger = logging.getLogger(__name__)

LocValue = Union[EquivPoly, RatFun]


def _neg(beta: Weight) -> Weight:
    return tuple(-x for x in beta)


def _twisted_xi(group: WeylGroup, target: WeylElt, point: WeylElt) -> EquivPoly:
    """w0 applied to xi^target|_point, summing over reduced subwords of a word for `point`."""
    nvars = group.rank + 1
    if not group.bruhat_leq(target, point):
        return EquivPoly.zero(nvars)
    w0 = group.longest_element()
    states: Dict[WeylElt, EquivPoly] = {group.identity: EquivPoly.one(nvars)}
    prefix = group.identity
    for i in group.reduced_word(point):
        s = group.simple(i)
        factor = weight_poly(group.act(w0, group.act(prefix, group.rs.simple_root(i))))
        grown = dict(states)
        for z, p in states.items():
            zs = group.mul(z, s)
            if zs.length == z.length + 1 and group.bruhat_leq(zs, target):
                term = p * factor
                grown[zs] = grown[zs] + term if zs in grown else term
        states = grown
        prefix = group.mul(prefix, s)
    return states.get(target, EquivPoly.zero(nvars))


@lru_cache(maxsize=65536)
def _billey_cached(group: WeylGroup, w: WeylElt, v: WeylElt) -> EquivPoly:
    w0 = group.longest_element()
    return _twisted_xi(group, group.mul(w0, w), group.mul(w0, v))


def billey_localize(space: FlagSpace, w: WeylElt, v: WeylElt) -> EquivPoly:
    """[X_w^B]|_v; zero unless v <= w."""
    group = space.group
    if not group.bruhat_leq(v, w):
        return EquivPoly.zero(space.nvars)
    return _billey_cached(group, w, v)


def gp_billey_localize(space: FlagSpace, v: WeylElt, u: WeylElt) -> EquivPoly:
    """[X_v^P]|_{u W_P}, directly from a word of w0 u."""
    space.require_min_rep(v)
    group = space.group
    w0 = group.longest_element()
    return _twisted_xi(group, space.min_rep(group.mul(w0, v)), group.mul(w0, u))


def localize_class(c: SchubertClass, v: WeylElt) -> EquivPoly:
    """Localization of a G/B class at the fixed point v."""
    if not c.space.is_gb:
        raise InvalidInputError("localize_class expects a class on G/B")
    total = EquivPoly.zero(c.space.nvars)
    for w, p in c.terms.items():
        loc = billey_localize(c.space, w, v)
        if loc:
            total = total + p * loc
    return total


def point_euler(space: FlagSpace, u: WeylElt) -> EquivPoly:
    """prod over R^+ \\ R_P^+ of u(-alpha)."""
    group = space.group
    r_p = space.quotient.r_p_plus
    return product(
        (weight_poly(group.act(u, _neg(beta))) for beta in space.rs.positive_roots if beta not in r_p),
        space.nvars,
    )


def _ratio_factors(space: FlagSpace, v: WeylElt) -> Tuple[int, Counter]:
    """prod_{alpha in R_P^+} v(-alpha) as sign * product of positive roots."""
    group = space.group
    sign = 1
    factors: Counter = Counter()
    for beta in space.quotient.r_p_plus:
        image = group.act(v, _neg(beta))
        if space.rs.is_positive_root(image):
            factors[image] += 1
        else:
            sign = -sign
            factors[_neg(image)] += 1
    return sign, factors


def _combine(space: FlagSpace, terms: List[Tuple[EquivPoly, Counter]], certify: bool) -> LocValue:
    """sum num_k / prod(factors_k) over a common denominator."""
    nvars = space.nvars
    if not terms:
        return EquivPoly.zero(nvars)
    common: Counter = Counter()
    for _, factors in terms:
        common |= factors
    numerator = EquivPoly.zero(nvars)
    for num, factors in terms:
        missing = common - factors
        numerator = numerator + num * product(
            (weight_poly(beta) for beta, k in missing.items() for _ in range(k)), nvars
        )
    if not certify:
        den = product((weight_poly(beta) for beta, k in common.items() for _ in range(k)), nvars)
        return RatFun(numerator, den)
    result = numerator
    for beta, k in sorted(common.items()):
        for _ in range(k):
            result = result.exact_divide(weight_poly(beta))
    return result


def parabolic_localize(c: SchubertClass, space: FlagSpace, u: WeylElt, certify: bool = False) -> LocValue:
    """pi_*(c)|_{u W_P} for a class c on G/B."""
    space.require_min_rep(u)
    if not c.space.is_gb or c.space.rs != space.rs:
        raise InvalidInputError(f"expected a class on {space.gb()}, got one on {c.space}")
    group = space.group
    terms = []
    for x in group.parabolic_subgroup(space.parabolic):
        v = group.mul(u, x)
        value = localize_class(c, v)
        if not value:
            continue
        sign, factors = _ratio_factors(space, v)
        terms.append((value * sign, factors))
    return _combine(space, terms, certify)


def _hbar_product(space: FlagSpace, w: WeylElt, v: WeylElt) -> EquivPoly:
    """prod over I(w) of (-h + v(alpha))."""
    group = space.group
    nvars = space.nvars
    factors = []
    for beta in space.rs.positive_roots:
        if beta in group.inversion_set(w):
            factors.append(EquivPoly.linear(group.act(v, beta), hbar=-1))
    return product(factors, nvars)


def ctwloc(space: FlagSpace, w: WeylElt, v: WeylElt) -> EquivPoly:
    """Closed form of (-1)^l(w) (c(T_w) cap [X_w^B])^h restricted to v."""
    value = billey_localize(space, w, v)
    if not value:
        return value
    return _hbar_product(space, w, v) * value


def ctw_pipeline(space: FlagSpace, w: WeylElt, v: WeylElt) -> EquivPoly:
    """The same quantity through the Chevalley formula, homogenization and Billey localization."""
    gb = space.gb()
    upstairs = total_chern_mul(schubert(gb, w, True), inversion_weights(space, w))
    value = localize_class(homogenize(upstairs), v)
    return value if w.length % 2 == 0 else -value


def conormal_localize(space: FlagSpace, w: WeylElt, u: WeylElt) -> EquivPoly:
    """Localization of the conormal space of X_w^P at the fixed point u W_P."""
    space.require_cominuscule()
    space.require_min_rep(w)
    space.require_min_rep(u)
    group = space.group
    if not group.bruhat_leq(u, w):
        return EquivPoly.zero(space.nvars)
    terms = []
    for x in group.parabolic_subgroup(space.parabolic):
        v = group.mul(u, x)
        if not group.bruhat_leq(v, w):
            continue
        value = ctwloc(space, w, v)
        if not value:
            continue
        sign, factors = _ratio_factors(space, v)
        terms.append((value * sign, factors))
    try:
        return _combine(space, terms, certify=True)
    except NotPolynomialError as exc:
        raise PipelineError(f"conormal localization of {space.label(w)} at {space.label(u)} is not polynomial") from exc


def conormal_pipeline(space: FlagSpace, w: WeylElt, u: WeylElt) -> EquivPoly:
    """(-1)^l(w) times the localization of the homogenized upstairs Mather class."""
    upstairs = homogenize(mather_class(space, w, True).upstairs)
    value = parabolic_localize(upstairs, space, u, certify=True)
    return value if w.length % 2 == 0 else -value


def check_chevalley_compatibility(c: SchubertClass, lam: Weight, points: Iterable[WeylElt] = None) -> bool:
    """(c_1(L_lam) cap c)|_v == v(lam) * c|_v at every point."""
    group = c.space.group
    product_class = chevalley_mul(c, lam)
    for v in points if points is not None else group.elements():
        lhs = localize_class(product_class, v)
        rhs = weight_poly(group.act(v, lam)) * localize_class(c, v)
        if lhs != rhs:
            logger.info("Chevalley/localization mismatch at %s", c.space.label(v))
            return False
    return True
