"""
Exact q-polynomial and truncated q-series arithmetic
Sparse Laurent polynomials with arbitrary-precision integer coefficients,
truncated power series, Gaussian binomials and inverse q-Pochhammer factors
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from validation import DomainError, TruncationError, validate_nonnegative_int

logger = logging.getLogger(__name__)


class QPoly:
    """Immutable sparse Laurent polynomial in q; zero coefficients are never stored"""

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[int, int]] = None):
        cleaned: Dict[int, int] = {}
        for exponent, coefficient in (terms or {}).items():
            coefficient = int(coefficient)
            if coefficient:
                cleaned[int(exponent)] = coefficient
        self._terms = cleaned

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> 'QPoly':
        return cls({exponent: coefficient})

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], start: int = 0) -> 'QPoly':
        """Build from a dense coefficient list beginning at q^start"""
        return cls({start + offset: c for offset, c in enumerate(coefficients)})

    @property
    def terms(self) -> Dict[int, int]:
        """Get a copy of the exponent -> coefficient map"""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def min_degree(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def shift(self, k: int) -> 'QPoly':
        """Multiply by q^k"""
        return QPoly({e + k: c for e, c in self._terms.items()})

    def evaluate(self, x: Union[int, Fraction] = 1) -> Union[int, Fraction]:
        """Exact evaluation; negative exponents make the result a Fraction"""
        total: Union[int, Fraction] = 0
        for exponent, coefficient in self._terms.items():
            if exponent >= 0:
                total += coefficient * x ** exponent
            else:
                total += coefficient * Fraction(1) / Fraction(x) ** (-exponent)
        return total

    def __add__(self, other: Union['QPoly', int]) -> 'QPoly':
        other = _as_poly(other)
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            result[exponent] = result.get(exponent, 0) + coefficient
        return QPoly(result)

    __radd__ = __add__

    def __neg__(self) -> 'QPoly':
        return QPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union['QPoly', int]) -> 'QPoly':
        return self + (-_as_poly(other))

    def __rsub__(self, other: Union['QPoly', int]) -> 'QPoly':
        return _as_poly(other) - self

    def __mul__(self, other: Union['QPoly', int]) -> 'QPoly':
        other = _as_poly(other)
        result: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
        return QPoly(result)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"QPoly({dict(sorted(self._terms.items()))!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exponent in sorted(self._terms):
            coefficient = self._terms[exponent]
            if exponent == 0:
                body = str(abs(coefficient))
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                body = power if abs(coefficient) == 1 else f"{abs(coefficient)}{power}"
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> Dict[str, str]:
        """Serialize as {"exponent": "coefficient"} with decimal-string coefficients"""
        return {str(e): str(c) for e, c in sorted(self._terms.items())}


class TruncSeries:
    """Immutable power series in q known up to and including q^order"""

    __slots__ = ('_order', '_coefficients')

    def __init__(self, coefficients: Sequence[int], order: int):
        order = validate_nonnegative_int(order, 'order')
        dense = [int(c) for c in list(coefficients)[:order + 1]]
        dense.extend([0] * (order + 1 - len(dense)))
        self._order = order
        self._coefficients = tuple(dense)

    @classmethod
    def from_poly(cls, poly: QPoly, order: int) -> 'TruncSeries':
        if poly.min_degree() is not None and poly.min_degree() < 0:
            raise DomainError('poly', poly, "Power series cannot carry negative exponents")
        return cls([poly.coeff(r) for r in range(order + 1)], order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> tuple:
        return self._coefficients

    def coeff(self, exponent: int) -> int:
        if exponent < 0:
            return 0
        if exponent > self._order:
            raise TruncationError(exponent, self._order)
        return self._coefficients[exponent]

    def shift(self, k: int) -> 'TruncSeries':
        """Multiply by q^k, k >= 0, keeping the order"""
        k = validate_nonnegative_int(k, 'k')
        return TruncSeries([0] * k + list(self._coefficients), self._order)

    def __add__(self, other: 'TruncSeries') -> 'TruncSeries':
        order = min(self._order, other._order)
        return TruncSeries(
            [self._coefficients[n] + other._coefficients[n] for n in range(order + 1)], order
        )

    def __mul__(self, other: 'TruncSeries') -> 'TruncSeries':
        order = min(self._order, other._order)
        product = [0] * (order + 1)
        for i in range(order + 1):
            a = self._coefficients[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                product[i + j] += a * other._coefficients[j]
        return TruncSeries(product, order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._order == other._order and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash((self._order, self._coefficients))

    def __repr__(self) -> str:
        return f"TruncSeries({list(self._coefficients)!r}, order={self._order})"

    def to_json(self) -> Dict[str, str]:
        """Nonzero coefficients only, as decimal strings"""
        return {str(n): str(c) for n, c in enumerate(self._coefficients) if c}


def _as_poly(value: Union[QPoly, int]) -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return QPoly.monomial(0, value)
    raise TypeError(f"Cannot combine QPoly with {type(value).__name__}")


def poly_add(x: QPoly, y: QPoly) -> QPoly:
    return x + y


def poly_mul(x: QPoly, y: QPoly) -> QPoly:
    return x * y


def series_add(x: TruncSeries, y: TruncSeries) -> TruncSeries:
    return x + y


def series_mul(x: TruncSeries, y: TruncSeries) -> TruncSeries:
    return x * y


def coeff(x: Union[QPoly, TruncSeries], exponent: int) -> int:
    """Coefficient of q^exponent; raises TruncationError past a series' order"""
    return x.coeff(exponent)


def poly_divexact(numerator: QPoly, denominator: QPoly) -> QPoly:
    """Exact quotient of two polynomials; raises DomainError if a remainder is left"""
    if denominator.is_zero():
        raise DomainError('denominator', denominator, "Division by the zero polynomial")
    top = denominator.degree()
    lead = denominator.coeff(top)
    remainder = numerator.terms
    quotient: Dict[int, int] = {}
    while remainder:
        degree = max(remainder)
        if degree < top:
            break
        value = remainder[degree]
        if value % lead:
            break
        factor = value // lead
        shift = degree - top
        quotient[shift] = factor
        for exponent, c in denominator.terms.items():
            key = exponent + shift
            remainder[key] = remainder.get(key, 0) - factor * c
            if not remainder[key]:
                del remainder[key]
    if remainder:
        raise DomainError('numerator', numerator, f"Not divisible by {denominator}")
    return QPoly(quotient)


def _check_binomial_args(m: int, p: int) -> Tuple[int, int]:
    m = validate_nonnegative_int(m, 'm')
    p = validate_nonnegative_int(p, 'p')
    if p > m:
        raise DomainError('p', p, f"Must not exceed m={m}")
    return m, p


def _shifted_sum(low: List[int], high: List[int], shift: int) -> List[int]:
    """Dense coefficients of low + q^shift * high"""
    if not high:
        return list(low)
    combined = list(low) + [0] * max(0, len(high) + shift - len(low))
    for exponent, value in enumerate(high, start=shift):
        combined[exponent] += value
    return combined


@lru_cache(maxsize=None)
def _gaussian_rows(m: int, p: int) -> QPoly:
    # row n holds [n, j] for j <= min(n, p); [n, j] = [n-1, j-1] + q^j [n-1, j]
    p = min(p, m - p)
    row: List[List[int]] = [[1]]
    for n in range(1, m + 1):
        next_row = [[1]]
        for j in range(1, min(n, p) + 1):
            upper = row[j] if j < len(row) else []
            next_row.append(_shifted_sum(row[j - 1], upper, j))
        row = next_row
    return QPoly.from_coefficients(row[p])


def gaussian_binomial(m: int, p: int) -> QPoly:
    """Gaussian binomial [m choose p]_q, 0 <= p <= m"""
    m, p = _check_binomial_args(m, p)
    return _gaussian_rows(m, p)


def gaussian_binomial_product(m: int, p: int) -> QPoly:
    """Same polynomial via the product formula and exact division"""
    m, p = _check_binomial_args(m, p)
    numerator = QPoly.monomial(0)
    denominator = QPoly.monomial(0)
    for n in range(p):
        numerator = numerator * QPoly({0: 1, m - n: -1})
        denominator = denominator * QPoly({0: 1, p - n: -1})
    return poly_divexact(numerator, denominator)


def q_pochhammer_inv(k: int, order: int) -> TruncSeries:
    """1 / (q; q)_k truncated at q^order"""
    k = validate_nonnegative_int(k, 'k')
    order = validate_nonnegative_int(order, 'order')
    coefficients = [1] + [0] * order
    for part in range(1, k + 1):
        for n in range(part, order + 1):
            coefficients[n] += coefficients[n - part]
    return TruncSeries(coefficients, order)
