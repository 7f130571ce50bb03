"""
Kazhdan-Lusztig polynomials, KL classes and characteristic-cycle multiplicities.

The stalk polynomial of X_w^P at the point e_x is the ordinary polynomial
P_{x, w w_P} at the maximal representative. It is computed directly on
minimal representatives with the ordinary recursion restricted to cosets,
which needs only W^P and never the full group.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sqlalchemy import text

from . import db
from .chow import FlagSpace, SchubertClass
from .create_tables import create_tables
from .csm import csm_cell_gp, euler_obstructions, solve_triangular
from .errors import InvalidInputError, PipelineError
from .mather import guard_interval, mather_class, pullback_mather
from .weyl import WeylElt, WeylGroup

logger = logging.getLogger(__name__)

QPoly = Tuple[int, ...]


def _add(p: QPoly, q: QPoly) -> QPoly:
    n = max(len(p), len(q))
    out = [(p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _scale_shift(p: QPoly, c: int, k: int) -> QPoly:
    """c * q^k * p."""
    if not p or not c:
        return ()
    return (0,) * k + tuple(c * x for x in p)


@dataclass(frozen=True)
class KLPoly:
    x: WeylElt
    w: WeylElt
    coeffs: QPoly
    # False when x is not below w and coeffs is the conventional zero
    below: bool = True

    def __call__(self, q: int) -> int:
        return sum(c * q ** k for k, c in enumerate(self.coeffs))

    @property
    def at_one(self) -> int:
        return sum(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
                terms.append(f"{c}{mono}" if (c != 1 or k == 0) else mono)
        return "+".join(terms)


class KLCache:
    """Optional sqlite persistence of computed polynomials, keyed by (kind, lie, x, w)."""

    def __init__(self, engine, kind: str, group: WeylGroup):
        self.engine = engine
        self.kind = kind
        self.group = group
        self.pending: Dict[Tuple[str, str], str] = {}

    @staticmethod
    def _key(w: WeylElt) -> str:
        return ",".join(str(x) for row in w.matrix for x in row)

    def load(self) -> Dict[Tuple[str, str], QPoly]:
        create_tables(self.engine)
        by_key = {}
        with self.engine.connect() as conn:
            rows = conn.execute(
                text("SELECT x, w, coeffs FROM kl_polynomials WHERE kind = :kind AND lie = :lie"),
                {"kind": self.kind, "lie": self.group.rs.name},
            ).fetchall()
        for x, w, coeffs in rows:
            by_key[(x, w)] = tuple(int(c) for c in coeffs.split(",") if c)
        logger.info("loaded %d cached KL polynomials (%s, %s)", len(by_key), self.kind, self.group.rs.name)
        return by_key

    def put(self, x: WeylElt, w: WeylElt, coeffs: QPoly) -> None:
        self.pending[(self._key(x), self._key(w))] = ",".join(str(c) for c in coeffs)

    def flush(self) -> None:
        if not self.pending:
            return
        with self.engine.begin() as conn:
            conn.execute(
                text(
                    "INSERT OR REPLACE INTO kl_polynomials (kind, lie, x, w, coeffs) "
                    "VALUES (:kind, :lie, :x, :w, :coeffs)"
                ),
                [
                    {"kind": self.kind, "lie": self.group.rs.name, "x": x, "w": w, "coeffs": c}
                    for (x, w), c in self.pending.items()
                ],
            )
        logger.info("flushed %d KL polynomials to the cache", len(self.pending))
        self.pending.clear()


class ParabolicKL:
    """P_{x, y w_P} for x, y in W^P; with an empty parabolic these are the ordinary polynomials."""

    def __init__(self, space: FlagSpace):
        self.space = space
        self.group = space.group
        self.nodes = space.parabolic
        self._memo: Dict[Tuple[WeylElt, WeylElt], QPoly] = {}
        self._mu: Dict[WeylElt, List[Tuple[WeylElt, int]]] = {}
        self._cache: Optional[KLCache] = None
        self._stored: Dict[Tuple[str, str], QPoly] = {}
        engine = db.get_engine()
        if engine is not None:
            kind = "parabolic:" + ",".join(str(i) for i in sorted(self.nodes))
            self._cache = KLCache(engine, kind, self.group)
            self._stored = self._cache.load()

    def polynomial(self, x: WeylElt, y: WeylElt) -> QPoly:
        return self._p(x, y)

    def _p(self, x: WeylElt, y: WeylElt) -> QPoly:
        group = self.group
        if not group.bruhat_leq(x, y):
            return ()
        if x == y:
            return (1,)
        key = (x, y)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if self._cache is not None:
            stored = self._stored.get((KLCache._key(x), KLCache._key(y)))
            if stored is not None:
                self._memo[key] = stored
                return stored
        i = group.left_descents(y)[0]
        s = group.simple(i)
        v = group.mul(s, y)
        sx = group.mul(s, x)
        if group.is_min_rep(sx, self.nodes):
            if sx.length < x.length:
                result = _add(self._p(sx, v), _scale_shift(self._p(x, v), 1, 1))
            else:
                result = _add(_scale_shift(self._p(sx, v), 1, 1), self._p(x, v))
        else:
            result = _add(self._p(x, v), _scale_shift(self._p(x, v), 1, 1))
        for z, mu in self.mu_list(v):
            sz = group.mul(s, z)
            if (sz.length < z.length or not group.is_min_rep(sz, self.nodes)) and group.bruhat_leq(x, z):
                result = _add(result, _scale_shift(self._p(x, z), -mu, (y.length - z.length) // 2))
        self._memo[key] = result
        if self._cache is not None:
            self._cache.put(x, y, result)
        return result

    def mu_list(self, v: WeylElt) -> List[Tuple[WeylElt, int]]:
        """(z, mu(z, v)) over z < v in W^P with non-zero top coefficient."""
        mus = self._mu.get(v)
        if mus is None:
            mus = []
            for z in self.group.lower_interval(v):
                gap = v.length - z.length
                if z == v or gap % 2 == 0 or not self.group.is_min_rep(z, self.nodes):
                    continue
                p = self._p(z, v)
                top = (gap - 1) // 2
                if len(p) > top and p[top]:
                    mus.append((z, p[top]))
            self._mu[v] = mus
        return mus

    def flush(self) -> None:
        if self._cache is not None:
            self._cache.flush()


@lru_cache(maxsize=None)
def _kl_engine(space: FlagSpace) -> ParabolicKL:
    return ParabolicKL(space)


def _flush_engines(space: FlagSpace) -> None:
    """Write back whatever the parabolic and ordinary engines computed."""
    _kl_engine(space).flush()
    if not space.is_gb:
        _kl_engine(space.gb()).flush()


def kl_polynomial(x: WeylElt, w: WeylElt, space: FlagSpace) -> KLPoly:
    """Ordinary P_{x,w} in the Weyl group of `space`."""
    gb = space.gb()
    if not gb.group.bruhat_leq(x, w):
        logger.warning("KL polynomial requested for %s not below %s; returning 0", gb.label(x), gb.label(w))
        return KLPoly(x, w, (), below=False)
    return KLPoly(x, w, _kl_engine(gb).polynomial(x, w))


def parabolic_kl_polynomial(space: FlagSpace, x: WeylElt, w: WeylElt) -> KLPoly:
    """Stalk polynomial of X_w^P at e_x, i.e. P_{x, w w_P}."""
    space.require_min_rep(x)
    space.require_min_rep(w)
    if not space.group.bruhat_leq(x, w):
        logger.warning("stalk polynomial requested at %s outside X_%s; returning 0", space.label(x), space.label(w))
        return KLPoly(x, w, (), below=False)
    return KLPoly(x, w, _kl_engine(space).polynomial(x, w))


def _stalk_values(space: FlagSpace, w: WeylElt, assume_ordinary: bool) -> Dict[WeylElt, int]:
    group = space.group
    out = {}
    for v in space.min_reps():
        if not group.bruhat_leq(v, w):
            continue
        if assume_ordinary:
            out[v] = kl_polynomial(v, w, space).at_one
        else:
            out[v] = parabolic_kl_polynomial(space, v, w).at_one
    return out


def kl_class(space: FlagSpace, w: WeylElt, equivariant: bool = False, assume_ordinary: bool = False) -> SchubertClass:
    """sum_v P_{w,v}(1) c_SM(X_v^o)."""
    space.require_min_rep(w)
    guard_interval(space, space.max_rep(w))
    total = SchubertClass.zero(space, equivariant)
    for v, value in _stalk_values(space, w, assume_ordinary).items():
        if value:
            total = total + csm_cell_gp(space, v, equivariant).scale(value)
    _flush_engines(space)
    return total


@dataclass
class CCDecomposition:
    space: FlagSpace
    w: WeylElt
    multiplicities: Dict[WeylElt, int] = field(default_factory=dict)

    def by_label(self) -> Dict[str, int]:
        return {
            self.space.label(v): m
            for v, m in sorted(self.multiplicities.items(), key=lambda item: self.space.sort_key(item[0]), reverse=True)
        }

    @property
    def irreducible(self) -> bool:
        return all(m == 0 for v, m in self.multiplicities.items() if v != self.w)


def _signed_int(c: Fraction, sign: int) -> int:
    if c.denominator != 1:
        raise PipelineError(f"non-integral characteristic-cycle multiplicity {c}: invalid basis")
    return sign * int(c)


def cc_multiplicities(space: FlagSpace, w: WeylElt, pullback_to_b: bool = False,
                      assume_ordinary: bool = False) -> CCDecomposition:
    """m_{w,v} from KL_w = sum_v (-1)^(l(w)-l(v)) m_{w,v} c_Ma(X_v)."""
    space.require_cominuscule()
    space.require_min_rep(w)
    if not pullback_to_b:
        kl = kl_class(space, w, assume_ordinary=assume_ordinary)
        coefficients = solve_triangular(kl, lambda v: mather_class(space, v).downstairs)
        multiplicities = {
            v: _signed_int(c, (-1) ** (w.length - v.length)) for v, c in coefficients.items()
        }
        return CCDecomposition(space, w, multiplicities)
    gb = space.gb()
    top = space.max_rep(w)
    kl = kl_class(gb, top, assume_ordinary=assume_ordinary)

    def basis(u: WeylElt) -> SchubertClass:
        v = space.min_rep(u)
        if space.max_rep(v) != u:
            raise PipelineError(f"KL class has a leading term off the maximal representatives ({gb.label(u)})")
        return pullback_mather(space, v, gb)

    coefficients = solve_triangular(kl, basis)
    multiplicities = {
        space.min_rep(u): _signed_int(c, (-1) ** (w.length - space.min_rep(u).length))
        for u, c in coefficients.items()
    }
    return CCDecomposition(space, w, multiplicities)


def cc_irreducible(space: FlagSpace, w: WeylElt, method: str = "multiplicities") -> bool:
    if method == "multiplicities":
        return cc_multiplicities(space, w).irreducible
    if method == "euler":
        table = euler_obstructions(space, w)
        stalks = _stalk_values(space, w, False)
        _flush_engines(space)
        return all(table.get(v) == value for v, value in stalks.items())
    raise InvalidInputError(f"unknown irreducibility method {method!r}")


@dataclass
class OrdinaryComparison:
    space: FlagSpace
    w: WeylElt
    discrepancies: List[Tuple[str, str, str]] = field(default_factory=list)


def compare_ordinary(space: FlagSpace, w: WeylElt) -> OrdinaryComparison:
    """P_{v,w} at minimal representatives against the stalk polynomials P_{v, w w_P}."""
    report = OrdinaryComparison(space, w)
    group = space.group
    for v in space.min_reps():
        if not group.bruhat_leq(v, w):
            continue
        ordinary = kl_polynomial(v, w, space)
        stalk = parabolic_kl_polynomial(space, v, w)
        if ordinary.coeffs != stalk.coeffs:
            report.discrepancies.append((space.label(v), str(ordinary), str(stalk)))
    _flush_engines(space)
    return report
