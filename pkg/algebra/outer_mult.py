"""
Outer Multiplicities Module
Multiplicities of irreducible components in V(Lambda_i) (x) V(Lambda) for
affine sl2: the bounded-partition closed forms, the limit formula assembled
from stabilized flag multiplicities, the distinct-parts formula, the
diagram-automorphism transfer and the identity checks built on them
"""
import logging
from dataclasses import dataclass
from math import isqrt
from typing import List, Optional, Tuple

from algebra.affine_weights import (
    GammaEntry,
    Weight,
    apply_automorphism,
    dominance_diff,
    fundamental,
    gamma_branch_entry,
    gamma_set,
)
from algebra.demazure_flags import FlagMultiplicityProvider, paired_limit_plus, provider_for_level
from algebra.partitions import rho_bounded, rho_distinct_parity
from algebra.qseries import TruncSeries, q_pochhammer_inv
from reporting import CaseResult, make_case
from validation import (
    BoundError,
    ConsistencyError,
    DomainError,
    validate_index,
    validate_nonnegative_int,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhiLabel:
    """Phi^i_{j,s} = 2*Lambda0 + (2j+i)*omega1 - s*delta"""
    i: int
    j: int
    s: int

    def weight(self) -> Weight:
        return Weight(2, 2 * self.j + self.i, -self.s)


@dataclass(frozen=True)
class LimitTerm:
    """
    Contribution of one Demazure label (or of a paired couple of labels)
    to the limit formula; f is the argument of rho_b
    """
    entries: Tuple[GammaEntry, ...]
    sign: str
    b: int
    f: int
    value: int
    threshold: int


def _admissible(i: int, j: int, s: int) -> bool:
    upper_j = 1 if i == 0 else 0
    return 0 <= j <= upper_j and s >= j


def _require_admissible(i: int, j: int, s: int) -> None:
    if not _admissible(i, j, s):
        raise DomainError('(i, j, s)', (i, j, s), "Need 0 <= j <= delta_{i,0} and s >= j")


def classify_phi(i: int, Phi: Weight) -> Optional[PhiLabel]:
    """Decode (j, s) when Phi has the shape 2*Lambda0 + (2j+i)*omega1 - s*delta"""
    i = validate_index(i)
    if Phi.a != 2 or (Phi.b - i) % 2:
        return None
    j = (Phi.b - i) // 2
    s = -Phi.c
    if not _admissible(i, j, s):
        return None
    return PhiLabel(i, j, s)


def summation_bound(i: int, j: int, s: int) -> int:
    """Integer part of the upper summation limit L of the closed forms"""
    _require_admissible(i, j, s)
    if i == 0:
        return (isqrt(2 * s - j) - j) // 2
    return (1 + isqrt(8 * s + 1)) // 4


def outer_mult_fundamental(i: int, Phi: Weight) -> int:
    """[V(Lambda0) (x) V(Lambda_i) : V(Phi)] by the bounded-partition closed form"""
    label = classify_phi(i, Phi)
    if label is None:
        return 0
    j, s = label.j, label.s
    bound = summation_bound(label.i, j, s)
    if label.i == 0:
        return sum(rho_bounded(2 * l + j, s - 2 * l * l - 2 * j * l - j) for l in range(bound + 1))
    return sum(rho_bounded(2 * l, s - 2 * l * l + l) for l in range(bound + 1))


def outer_mult_11(Phi: Weight) -> int:
    """[V(Lambda1) (x) V(Lambda1) : V(Phi)], nonzero only for Phi = 2*Lambda_{1-j} - s*delta"""
    if Phi.a != 2 or Phi.b not in (0, 2) or Phi.c > 0:
        return 0
    j = 1 if Phi.b == 0 else 0
    s = -Phi.c
    bound = (isqrt(2 * s + j) - j) // 2
    return sum(rho_bounded(2 * l + j, s - 2 * l * l - 2 * j * l) for l in range(bound + 1))


def misra_wilson(i: int, j: int, s: int) -> int:
    """Distinct-parts count for Phi^i_{j,s}"""
    i = validate_index(i)
    _require_admissible(i, j, s)
    return rho_distinct_parity(i, 2 * s - j)


def transfer_automorphism(j: int, Lambda: Weight, Phi: Weight) -> Optional[Tuple[Weight, Weight]]:
    """
    Rewrite [V(Lambda_j) (x) V(Lambda) : V(Phi)] as a multiplicity in
    V(Lambda0) (x) V(sigma^j Lambda); None when Phi is not below Lambda_j + Lambda
    """
    j = validate_index(j, 'j')
    coefficients = dominance_diff(Lambda, Phi, j)
    if coefficients is None:
        return None
    shift = coefficients[0] - coefficients[j]
    return apply_automorphism(Lambda, j), apply_automorphism(Phi, j).shift_delta(shift)


def _check_level_one(Lambda: Weight) -> FlagMultiplicityProvider:
    provider = provider_for_level(Lambda.level)
    if not Lambda.is_dominant():
        raise DomainError('Lambda', Lambda, "Must be dominant")
    return provider


def _term_f(S: int, r_i: int, entry: GammaEntry, m_i: int) -> int:
    b = entry.lam // 2
    return S - r_i - entry.r - b * (b + m_i)


def default_lambda_max(s_eff: int) -> int:
    return 4 * (isqrt(max(s_eff, 0)) + 2) + 2


def _certify_cutoff(target: Weight, branch: str, lambda_max: int, S: int, r_i: int, m_i: int) -> None:
    """
    Every label past lambda_max on this branch contributes rho_b(f) with f < 0.
    f is quadratic along a branch, so f(n0) < 0, a nonpositive first step and
    a nonpositive second difference make it negative from n0 on
    """
    n = 0 if branch == '+' else 1
    while gamma_branch_entry(target, n, branch).lam <= lambda_max:
        n += 1
    f0, f1, f2 = (_term_f(S, r_i, gamma_branch_entry(target, n + step, branch), m_i) for step in range(3))
    if not (f0 < 0 and f1 <= f0 and f2 - 2 * f1 + f0 <= 0):
        raise BoundError(
            f"Cannot certify cut-off lambda_max={lambda_max} on branch {branch} "
            f"(f values {f0}, {f1}, {f2}); increase lambda_max"
        )


def limit_terms(i: int, Lambda: Weight, Phi: Weight, lambda_max: Optional[int] = None) -> List[LimitTerm]:
    """
    Nonvanishing-candidate terms of the limit formula for [V(Lambda_i) (x) V(Lambda) : V(Phi)]
    at level one, with every stabilization threshold checked at runtime
    """
    i = validate_index(i)
    provider = _check_level_one(Lambda)

    if Phi.level != Lambda.level + 1 or not Phi.is_dominant():
        return []

    m_i = Lambda.eval_h(1 - i)
    S = Lambda.c
    numerator = i * (Lambda.eval_h(0) - Phi.eval_h(0))
    if numerator % 2:
        return []
    r_i = numerator // 2
    target = apply_automorphism(Phi, i)
    if (target.b - m_i) % 2:
        return []

    s_eff = S - r_i - target.c
    if lambda_max is None:
        lambda_max = default_lambda_max(s_eff)
    lambda_max = validate_nonnegative_int(lambda_max, 'lambda_max')

    for branch in ('+', '-'):
        _certify_cutoff(target, branch, lambda_max, S, r_i, m_i)

    entries = gamma_set(target, lambda_max)
    sign = '-' if m_i % 2 == 0 else '+'
    terms: List[LimitTerm] = []

    if sign == '-':
        for entry in entries:
            b = entry.lam // 2
            f = _term_f(S, r_i, entry, m_i)
            limit = provider.limit(sign, b, f)
            terms.append(LimitTerm((entry,), sign, b, f, limit.value, limit.threshold))
        return terms

    # labels 4l-1 and 4l+1 combine into one bounded-partition count
    by_lam = {entry.lam: entry for entry in entries}
    for lam in sorted(by_lam):
        entry = by_lam[lam]
        l = (lam + 1) // 4
        if lam == 4 * l + 1 and l >= 1 and (4 * l - 1) in by_lam:
            continue
        if lam == 4 * l - 1 and (4 * l + 1) in by_lam:
            upper = by_lam[4 * l + 1]
            f_lower = _term_f(S, r_i, entry, m_i)
            f_upper = _term_f(S, r_i, upper, m_i)
            if f_lower - f_upper != 2 * l:
                raise ConsistencyError(f"Unexpected pairing offsets at l={l}: {f_lower} vs {f_upper}")
            value = paired_limit_plus(l, s_eff)
            threshold = max(max(f_upper, 0) + 2 * l, max(f_lower, 0) + 2 * l - 1)
            terms.append(LimitTerm((entry, upper), sign, 2 * l, f_lower, value, threshold))
        else:
            b = lam // 2
            f = _term_f(S, r_i, entry, m_i)
            limit = provider.limit(sign, b, f)
            terms.append(LimitTerm((entry,), sign, b, f, limit.value, limit.threshold))
    return terms


def outer_mult_limit(i: int, Lambda: Weight, Phi: Weight, lambda_max: Optional[int] = None) -> int:
    """[V(Lambda_i) (x) V(Lambda) : V(Phi)] assembled from stabilized flag multiplicities"""
    return sum(term.value for term in limit_terms(i, Lambda, Phi, lambda_max))


def limit_support_size(i: int, Lambda: Weight, Phi: Weight, lambda_max: Optional[int] = None) -> int:
    """Number of terms with a nonzero limit; paired labels count once"""
    return sum(1 for term in limit_terms(i, Lambda, Phi, lambda_max) if term.value)


def outer_mult_transferred(j: int, Lambda: Weight, Phi: Weight, lambda_max: Optional[int] = None) -> int:
    """Transfer to V(Lambda0) (x) V(sigma^j Lambda), then apply the limit formula"""
    transferred = transfer_automorphism(j, Lambda, Phi)
    if transferred is None:
        return 0
    new_lambda, new_phi = transferred
    return outer_mult_limit(0, new_lambda, new_phi, lambda_max)


def outer_mult_closed_form(i: int, Lambda: Weight, Phi: Weight) -> int:
    """Closed form for any level-one dominant Lambda, using delta-translation"""
    i = validate_index(i)
    _check_level_one(Lambda)
    shifted = Phi.shift_delta(-Lambda.c)
    other = Lambda.b  # Lambda = Lambda_other + c*delta
    if i == 1 and other == 1:
        return outer_mult_11(shifted)
    return outer_mult_fundamental(i + other, shifted)


def candidate_phis(i: int, Lambda: Weight, s_max: int) -> List[Weight]:
    """Dominant Phi <= Lambda_i + Lambda within depth s_max of the top, sorted"""
    i = validate_index(i)
    s_max = validate_nonnegative_int(s_max, 's_max')
    top = fundamental(i) + Lambda
    found = []
    for depth in range(s_max + 1):
        for b in range(top.a + 1):
            Phi = Weight(top.a, b, top.c - depth)
            if dominance_diff(Lambda, Phi, i) is not None:
                found.append(Phi)
    return sorted(found, key=lambda w: (-w.c, w.b))


def multiplicity_series(i: int, j: int, order: int) -> TruncSeries:
    """sum_s b^i_{j,s} q^(s-j) truncated at q^order"""
    i = validate_index(i)
    order = validate_nonnegative_int(order, 'order')
    _require_admissible(i, j, j)
    return TruncSeries(
        [outer_mult_fundamental(i, PhiLabel(i, j, s).weight()) for s in range(j, j + order + 1)],
        order,
    )


def b_formula_series(j: int, order: int) -> TruncSeries:
    """sum_l q^(2l(l+j)) / (q;q)_(2l+j) truncated at q^order"""
    order = validate_nonnegative_int(order, 'order')
    _require_admissible(0, j, j)
    total = TruncSeries([], order)
    l = 0
    while 2 * l * (l + j) <= order:
        total = total + q_pochhammer_inv(2 * l + j, order).shift(2 * l * (l + j))
        l += 1
    return total


def b_series(j: int, order: int) -> Tuple[TruncSeries, TruncSeries]:
    """Both sides of the generating-series identity for i = 0"""
    return multiplicity_series(0, j, order), b_formula_series(j, order)


def verify_b_formula(j: int, order: int) -> List[CaseResult]:
    lhs, rhs = b_series(j, order)
    return [
        make_case(('bformula', j, n), f"j={j},n={n}", lhs.coeff(n), rhs.coeff(n))
        for n in range(order + 1)
    ]


def partition_identity_rhs(i: int, j: int, s: int) -> int:
    """sum_l rho_{2l+j}(s - 2l^2 - (2j-i)l - j); terms are decreasing in l and stop once negative"""
    total = 0
    l = 0
    while True:
        argument = s - 2 * l * l - (2 * j - i) * l - j
        if argument < 0:
            break
        total += rho_bounded(2 * l + j, argument)
        l += 1
    return total


def admissible_labels(s_max: int) -> List[PhiLabel]:
    s_max = validate_nonnegative_int(s_max, 's_max')
    return [
        PhiLabel(i, j, s)
        for i in (0, 1)
        for j in range(2 if i == 0 else 1)
        for s in range(j, s_max + 1)
    ]


def verify_partition_identity(s_max: int) -> List[CaseResult]:
    """Distinct-parity counts against sums of bounded-part counts for all labels up to s_max"""
    results = []
    for label in admissible_labels(s_max):
        lhs = rho_distinct_parity(label.i, 2 * label.s - label.j)
        rhs = partition_identity_rhs(label.i, label.j, label.s)
        results.append(make_case(('partrel', label.i, label.j, label.s),
                                 f"i={label.i},j={label.j},s={label.s}", lhs, rhs))
    failures = [r for r in results if not r.passed]
    if failures:
        logger.warning(f"❌ Partition identity failed in {len(failures)} case(s)")
    return results
