"""
Sparse polynomials in the simple roots a1..ar and the dilation parameter h.

Terms are stored as {exponent tuple: Fraction}; the last exponent slot is h.
Values are treated as immutable once built.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import InvalidInputError, NotPolynomialError

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


def _grlex(e: Exponents) -> Tuple[int, Exponents]:
    return (sum(e), e)


class EquivPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Dict[Exponents, Scalar]] = None):
        self.nvars = nvars
        self.terms: Dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                self.add_term(coeff, exps)

    def add_term(self, coeff: Scalar, exps: Exponents) -> None:
        """In-place accumulation; only for use while a value is being built."""
        if coeff == 0:
            return
        if len(exps) != self.nvars:
            raise InvalidInputError(f"exponent vector {exps} has the wrong length for {self.nvars} variables")
        total = self.terms.get(exps, 0) + Fraction(coeff)
        if total:
            self.terms[exps] = total
        else:
            self.terms.pop(exps, None)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "EquivPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "EquivPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "EquivPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "EquivPoly":
        return cls(nvars, {tuple(1 if j == index else 0 for j in range(nvars)): 1})

    @classmethod
    def hbar(cls, nvars: int) -> "EquivPoly":
        return cls.variable(nvars, nvars - 1)

    @classmethod
    def linear(cls, coeffs: Sequence[Scalar], hbar: Scalar = 0, constant: Scalar = 0) -> "EquivPoly":
        """constant + sum coeffs[i] a_{i+1} + hbar h, e.g. a weight in simple-root coordinates."""
        nvars = len(coeffs) + 1
        p = cls(nvars)
        p.add_term(constant, (0,) * nvars)
        for i, c in enumerate(coeffs):
            p.add_term(c, tuple(1 if j == i else 0 for j in range(nvars)))
        p.add_term(hbar, (0,) * (nvars - 1) + (1,))
        return p

    def _coerce(self, other) -> "EquivPoly":
        if isinstance(other, EquivPoly):
            if other.nvars != self.nvars:
                raise InvalidInputError(f"cannot combine polynomials in {self.nvars} and {other.nvars} variables")
            return other
        if isinstance(other, (int, Rational)):
            return EquivPoly.constant(self.nvars, Fraction(other))
        return NotImplemented

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "EquivPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = EquivPoly(self.nvars)
        result.terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            result.add_term(coeff, exps)
        return result

    __radd__ = __add__

    def __neg__(self) -> "EquivPoly":
        result = EquivPoly(self.nvars)
        result.terms = {e: -c for e, c in self.terms.items()}
        return result

    def __sub__(self, other) -> "EquivPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "EquivPoly":
        return (-self) + other

    def __mul__(self, other) -> "EquivPoly":
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            if other == 0:
                return EquivPoly(self.nvars)
            result = EquivPoly(self.nvars)
            result.terms = {e: c * other for e, c in self.terms.items()}
            return result
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = EquivPoly(self.nvars)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                result.add_term(c1 * c2, tuple(a + b for a, b in zip(e1, e2)))
        return result

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "EquivPoly":
        if k < 0:
            raise InvalidInputError("negative powers are not polynomials")
        result = EquivPoly.one(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def has_hbar(self) -> bool:
        return any(e[-1] for e in self.terms)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def coefficients_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def homogeneous_components(self) -> Dict[int, "EquivPoly"]:
        parts: Dict[int, EquivPoly] = {}
        for exps, coeff in self.terms.items():
            parts.setdefault(sum(exps), EquivPoly(self.nvars)).add_term(coeff, exps)
        return parts

    # -- evaluation and substitution -----------------------------------------

    def eval(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise InvalidInputError(f"evaluation point needs {self.nvars} coordinates")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for x, k in zip(point, exps):
                if k:
                    term *= Fraction(x) ** k
            total += term
        return total

    def substitute_hbar_one(self) -> "EquivPoly":
        result = EquivPoly(self.nvars)
        for exps, coeff in self.terms.items():
            result.add_term(coeff, exps[:-1] + (0,))
        return result

    def substitute_alphas_zero(self) -> "EquivPoly":
        result = EquivPoly(self.nvars)
        for exps, coeff in self.terms.items():
            if not any(exps[:-1]):
                result.add_term(coeff, exps)
        return result

    def times_hbar_power(self, k: int) -> "EquivPoly":
        result = EquivPoly(self.nvars)
        result.terms = {e[:-1] + (e[-1] + k,): c for e, c in self.terms.items()}
        return result

    # -- division ------------------------------------------------------------

    def leading_term(self) -> Tuple[Exponents, Fraction]:
        if not self.terms:
            raise ZeroDivisionError("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex)
        return exps, self.terms[exps]

    def exact_divide(self, divisor: "EquivPoly") -> "EquivPoly":
        """Quotient q with self = q * divisor, by graded-lex division."""
        divisor = self._coerce(divisor)
        lead_exps, lead_coeff = divisor.leading_term()
        quotient = EquivPoly(self.nvars)
        remainder = EquivPoly(self.nvars)
        remainder.terms = dict(self.terms)
        while remainder.terms:
            exps, coeff = remainder.leading_term()
            shift = tuple(a - b for a, b in zip(exps, lead_exps))
            if min(shift) < 0:
                raise NotPolynomialError(
                    f"{self.to_str()} is not divisible by {divisor.to_str()}", remainder=remainder
                )
            factor = coeff / lead_coeff
            quotient.add_term(factor, shift)
            for e, c in divisor.terms.items():
                remainder.add_term(-factor * c, tuple(a + b for a, b in zip(e, shift)))
        return quotient

    # -- output --------------------------------------------------------------

    def variable_names(self) -> List[str]:
        return [f"a{i}" for i in range(1, self.nvars)] + ["h"]

    def to_str(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        names = list(names or self.variable_names())
        pieces = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), tuple(-x for x in e))):
            coeff = self.terms[exps]
            monomial = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(names, exps) if k
            )
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if not monomial:
                body = str(mag)
            elif mag == 1:
                body = monomial
            elif mag.denominator == 1:
                body = f"{mag}{monomial}"
            else:
                body = f"{mag}*{monomial}"
            pieces.append((sign, body))
        text = "".join(f"{s}{b}" for s, b in pieces)
        return text[1:] if text.startswith("+") else text

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"EquivPoly({self.to_str()})"

    def to_json(self) -> List[dict]:
        return [
            {"exponents": list(exps), "coeff": str(self.terms[exps])}
            for exps in sorted(self.terms, key=_grlex)
        ]


def product(factors: Iterable[EquivPoly], nvars: int) -> EquivPoly:
    result = EquivPoly.one(nvars)
    for f in factors:
        result = result * f
    return result


@dataclass(frozen=True, eq=False)
class RatFun:
    num: EquivPoly
    den: EquivPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    def __eq__(self, other) -> bool:
        if isinstance(other, EquivPoly):
            other = RatFun(other, EquivPoly.one(other.nvars))
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __add__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __mul__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.num * other.num, self.den * other.den)

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def eval(self, point: Sequence[Scalar]) -> Fraction:
        den = self.den.eval(point)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.eval(point) / den

    def to_poly(self) -> EquivPoly:
        return self.num.exact_divide(self.den)
