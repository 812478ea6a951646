"""
Affine Weights Module
The weight lattice of affine sl2 in the basis (Lambda0, omega1, delta):
evaluations, dominance, simple reflections, the diagram automorphism,
closed-form Weyl orbit elements and the sets of Demazure labels
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from validation import DomainError, parse_weight_spec, validate_index, validate_nonnegative_int

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Weight:
    """a*Lambda0 + b*omega1 + c*delta with integer coordinates"""
    a: int
    b: int
    c: int

    def __post_init__(self):
        for field_name in ('a', 'b', 'c'):
            value = getattr(self, field_name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(field_name, value, "Weight coordinates must be integers")

    @property
    def level(self) -> int:
        return self.a

    def eval_h(self, i: int) -> int:
        """Value on the coroot h_i"""
        return self.a - self.b if validate_index(i) == 0 else self.b

    def eval_d(self) -> int:
        return self.c

    def is_dominant(self) -> bool:
        return self.a - self.b >= 0 and self.b >= 0

    def shift_delta(self, t: int) -> 'Weight':
        return Weight(self.a, self.b, self.c + t)

    def __add__(self, other: 'Weight') -> 'Weight':
        return Weight(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other: 'Weight') -> 'Weight':
        return Weight(self.a - other.a, self.b - other.b, self.c - other.c)

    def __neg__(self) -> 'Weight':
        return Weight(-self.a, -self.b, -self.c)

    def __mul__(self, n: int) -> 'Weight':
        return Weight(n * self.a, n * self.b, n * self.c)

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms = []
        for value, name in ((self.a, 'Lambda0'), (self.b, 'omega1'), (self.c, 'delta')):
            if value:
                sign = '-' if value < 0 else '+'
                body = name if abs(value) == 1 else f"{abs(value)}*{name}"
                terms.append((sign, body))
        if not terms:
            return "0*delta"
        text = ('-' if terms[0][0] == '-' else '') + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> Dict[str, int]:
        return {'L0': self.a, 'w1': self.b, 'delta': self.c}


LAMBDA0 = Weight(1, 0, 0)
LAMBDA1 = Weight(1, 1, 0)
OMEGA1 = Weight(0, 1, 0)
DELTA = Weight(0, 0, 1)
ALPHA0 = Weight(0, -2, 1)
ALPHA1 = Weight(0, 2, 0)


class GammaEntry(NamedTuple):
    """Label (lambda, r) of a g-stable Demazure module inside V(Phi)"""
    lam: int
    r: int


def fundamental(i: int) -> Weight:
    """Fundamental weight Lambda_i"""
    return LAMBDA1 if validate_index(i) == 1 else LAMBDA0


def parse_weight(spec: str) -> Weight:
    """Parse the CLI weight grammar, e.g. '2*Lambda0 - omega1 + 3*delta'"""
    return Weight(*parse_weight_spec(spec))


def reflect(w: Weight, i: int) -> Weight:
    """Simple reflection s_i(w) = w - w(h_i) alpha_i"""
    if validate_index(i) == 1:
        return Weight(w.a, -w.b, w.c)
    return Weight(w.a, 2 * w.a - w.b, w.c - w.a + w.b)


def apply_word(w: Weight, word: Sequence[int]) -> Weight:
    """Apply s_{word[0]} s_{word[1]} ... to w, rightmost reflection first"""
    for i in reversed(word):
        w = reflect(w, i)
    return w


def sigma_k_word(k: int, with_s1: bool) -> Tuple[int, ...]:
    """
    Reflection word of sigma_k (or sigma_k s1)
    sigma_k = (s1 s0)^k s1, negative k uses (s0 s1)^|k|
    """
    body = (1, 0) * k if k >= 0 else (0, 1) * (-k)
    return body if with_s1 else body + (1,)


def _require_dominant_positive_level(w: Weight, field: str) -> None:
    if not w.is_dominant():
        raise DomainError(field, w, "Must be dominant")
    if w.level < 1:
        raise DomainError(field, w, "Must have positive level")


def sigma_k(Lambda: Weight, k: int, with_s1: bool = False) -> Weight:
    """Closed form of sigma_k(Lambda), or sigma_k s1(Lambda) when with_s1 is set"""
    _require_dominant_positive_level(Lambda, 'Lambda')
    level, m, s = Lambda.a, Lambda.b, Lambda.c
    if with_s1:
        m = -m
    return Weight(level, -(2 * k * level + m), s - k * (k * level + m))


def orbit_segment(Lambda: Weight, k_max: int) -> List[Tuple[int, bool, Weight]]:
    """All sigma_k and sigma_k s1 images for |k| <= k_max, as (k, with_s1, weight)"""
    k_max = validate_nonnegative_int(k_max, 'k_max')
    return [
        (k, with_s1, sigma_k(Lambda, k, with_s1))
        for k in range(-k_max, k_max + 1)
        for with_s1 in (False, True)
    ]


def gamma_branch_entry(Phi: Weight, n: int, branch: str) -> GammaEntry:
    """
    n-th entry of one branch of the Demazure label set
    '+' : (2n*l + m, s - n(n*l + m)) for n >= 0
    '-' : (2n*l - m, s - n(n*l - m)) for n >= 1
    """
    level, m, s = Phi.a, Phi.b, Phi.c
    if branch == '+':
        return GammaEntry(2 * n * level + m, s - n * (n * level + m))
    if branch == '-':
        return GammaEntry(2 * n * level - m, s - n * (n * level - m))
    raise DomainError('branch', branch, "Must be '+' or '-'")


def gamma_set(Phi: Weight, lambda_max: int) -> List[GammaEntry]:
    """
    Labels (lambda, r) with lambda <= lambda_max such that
    l*Lambda0 + lambda*omega1 + r*delta lies in the Weyl orbit of Phi
    """
    lambda_max = validate_nonnegative_int(lambda_max, 'lambda_max')
    if not Phi.is_dominant():
        raise DomainError('Phi', Phi, "Must be dominant")

    if Phi.level == 0:
        return [GammaEntry(0, Phi.c)]

    entries: Dict[int, int] = {}
    for branch, start in (('+', 0), ('-', 1)):
        n = start
        while True:
            entry = gamma_branch_entry(Phi, n, branch)
            if entry.lam > lambda_max:
                break
            previous = entries.setdefault(entry.lam, entry.r)
            if previous != entry.r:
                raise DomainError('Phi', Phi, f"Orbit branches disagree at lambda={entry.lam}")
            n += 1

    return [GammaEntry(lam, r) for lam, r in sorted(entries.items())]


def diagram_automorphism(w: Weight) -> Weight:
    """Swap Lambda0 and Lambda1, fix delta"""
    return Weight(w.a, w.a - w.b, w.c)


def apply_automorphism(w: Weight, power: int) -> Weight:
    return diagram_automorphism(w) if power % 2 else w


def dominance_diff(upper: Weight, lower: Weight, j: int) -> Optional[Tuple[int, int]]:
    """
    Solve Lambda_j + upper - lower = c0*alpha0 + c1*alpha1
    Returns (c0, c1) when both are nonnegative integers, otherwise None
    """
    diff = fundamental(j) + upper - lower
    if diff.a != 0:
        return None
    c0 = diff.c
    numerator = diff.b + 2 * c0
    if numerator % 2:
        return None
    c1 = numerator // 2
    if c0 < 0 or c1 < 0:
        return None
    return c0, c1
