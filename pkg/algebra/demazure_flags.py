"""
Demazure Flags Module
Graded multiplicities of level-two Demazure modules in level-one flags,
the beta coefficient families and their stabilized limits
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Union

from algebra.partitions import rho_bounded, rho_bounded_both
from algebra.qseries import QPoly, gaussian_binomial
from config import STABILIZATION_CONFIG
from validation import ConsistencyError, DomainError, UnsupportedLevelError, validate_nonnegative_int, validate_sign

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class FlagMultQuery:
    mu: int
    lam: int
    r: int


@dataclass(frozen=True)
class StabilizedLimit:
    """Eventual value of a beta sequence and the k from which it is constant"""
    value: int
    threshold: int


def weyl_flag_poly(mu: int, lam: int) -> QPoly:
    """
    Graded multiplicity [W(mu) : D(2, lam)](q)
    q^(p*ceil(mu/2)) [floor(mu/2) choose p]_q with p = (mu - lam)/2, zero off parity
    """
    return _weyl_flag_poly(validate_nonnegative_int(mu, 'mu'), validate_nonnegative_int(lam, 'lam'))


@lru_cache(maxsize=None)
def _weyl_flag_poly(mu: int, lam: int) -> QPoly:
    if lam > mu or (mu - lam) % 2:
        return QPoly()
    p = (mu - lam) // 2
    return gaussian_binomial(mu // 2, p).shift(p * ((mu + 1) // 2))


def flag_multiplicity(query: FlagMultQuery) -> int:
    return weyl_flag_poly(query.mu, query.lam).coeff(query.r)


def beta(sign: str, m: int, l: int, r: int) -> int:
    """
    beta-_{m,l}(r) = rho^p_l(r - m p) and beta+_{m,l}(r) = rho^p_l(r - (m+1) p), p = m - l
    Zero unless 0 <= l <= m
    """
    sign = validate_sign(sign)
    if l < 0 or l > m:
        return 0
    p = m - l
    offset = m * p if sign == '-' else (m + 1) * p
    return rho_bounded_both(l, p, r - offset)


def _integral_nonnegative(m: Rational):
    value = Fraction(m)
    if value.denominator != 1 or value < 0:
        return None
    return int(value)


def alpha1(lam: int, m: Rational, r: int) -> int:
    """Level-one flag coefficient; zero when m is not a nonnegative integer"""
    whole = _integral_nonnegative(m)
    if whole is None:
        return 0
    return weyl_flag_poly(lam + 2 * whole, lam).coeff(r)


def alpha1_via_beta(lam: int, m: Rational, r: int) -> int:
    """Same coefficient read off the beta family of sign (-1)^(lam+1)"""
    whole = _integral_nonnegative(m)
    if whole is None:
        return 0
    sign = '-' if lam % 2 == 0 else '+'
    return beta(sign, lam // 2 + whole, lam // 2, r)


def flag_generating_series(lam: int, m_max: int) -> Dict[int, QPoly]:
    """Coefficients of x^m, m <= m_max, in the generating series of alpha1(lam, m, .)"""
    m_max = validate_nonnegative_int(m_max, 'm_max')
    return {m: weyl_flag_poly(lam + 2 * m, lam) for m in range(m_max + 1)}


def beta_sequence(sign: str, k: int, b: int, f: int) -> int:
    """k-th term of the beta sequence whose limit is rho_b(f)"""
    if sign == '-':
        return beta('-', k, b, k * k - b * b - f)
    return beta('+', k, b, (k - b) * (k + b + 1) - f)


def stabilized_limit(parity_sign: str, b: int, f: int) -> StabilizedLimit:
    """
    Limit of the beta sequence of the given sign along k with fixed b and f
    The value rho_b(f) is checked against the sequence on threshold..threshold+extra_checks
    """
    parity_sign = validate_sign(parity_sign)
    b = validate_nonnegative_int(b, 'b')

    value = rho_bounded(b, f)
    threshold = max(f, 0) + b

    for k in range(threshold, threshold + STABILIZATION_CONFIG['extra_checks'] + 1):
        observed = beta_sequence(parity_sign, k, b, f)
        if observed != value:
            logger.error(f"❌ beta{parity_sign} sequence for b={b}, f={f} gave {observed} at k={k}, "
                         f"expected {value}")
            raise ConsistencyError(
                f"Stabilized limit mismatch: sign={parity_sign} b={b} f={f} k={k} "
                f"sequence={observed} closed form={value}"
            )
    return StabilizedLimit(value=value, threshold=threshold)


def paired_limit_plus(l: int, s: int) -> int:
    """
    Combined limit of the beta+ pair at b=2l and b=2l-1: rho_2l(s - 2l^2 + l)
    """
    if l < 1:
        raise DomainError('l', l, "Must be at least 1")
    value = rho_bounded(2 * l, s - 2 * l * l + l)
    upper = stabilized_limit('+', 2 * l, s - 2 * l * l - l).value
    lower = stabilized_limit('+', 2 * l - 1, s - 2 * l * l + l).value
    if upper + lower != value:
        raise ConsistencyError(
            f"Paired limit mismatch at l={l}, s={s}: {upper} + {lower} != {value}"
        )
    return value


class FlagMultiplicityProvider(ABC):
    """Source of the flag coefficients alpha^level_lam(m, r)"""

    level: int

    @abstractmethod
    def alpha(self, lam: int, m: Rational, r: int) -> int:
        ...

    @abstractmethod
    def limit(self, parity_sign: str, b: int, f: int) -> StabilizedLimit:
        ...


class LevelOneFlagProvider(FlagMultiplicityProvider):
    level = 1

    def alpha(self, lam: int, m: Rational, r: int) -> int:
        return alpha1(lam, m, r)

    def limit(self, parity_sign: str, b: int, f: int) -> StabilizedLimit:
        return stabilized_limit(parity_sign, b, f)


def provider_for_level(level: int) -> FlagMultiplicityProvider:
    """Flag data is available at level one only"""
    if level != 1:
        raise UnsupportedLevelError(f"No flag multiplicity data for level {level}")
    return LevelOneFlagProvider()
