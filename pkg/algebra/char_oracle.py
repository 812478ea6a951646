"""
Character Oracle Module
Brute-force truncated characters of integrable highest-weight modules of
affine sl2 via the Freudenthal recursion, tensor products by convolution and
outer multiplicities by repeated subtraction of irreducible characters
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from algebra.affine_weights import Weight, fundamental
from config import ORACLE_CONFIG
from memo_store import character_store
from validation import (
    ConsistencyError,
    DomainError,
    IntegrityError,
    ResourceError,
    validate_nonnegative_int,
)

logger = logging.getLogger(__name__)

RHO = Weight(2, 1, 0)


def inner(x: Weight, y: Weight) -> Fraction:
    """
    Normalized invariant form: (alpha1, alpha1) = 2, (Lambda0, delta) = 1,
    every other pairing of basis vectors zero
    """
    return Fraction(x.a * y.c + x.c * y.a) + Fraction(x.b * y.b, 2)


def norm_squared(x: Weight) -> Fraction:
    return inner(x, x)


@dataclass
class WeightMultMap:
    """
    Truncated character: exact multiplicities of every weight whose d-eigenvalue
    lies within depth of top_c; weights missing from entries have multiplicity 0
    """
    level: int
    top_c: int
    depth: int
    entries: Dict[Weight, int] = field(default_factory=dict)

    def mult(self, w: Weight) -> int:
        if self.top_c - w.c > self.depth:
            raise DomainError('weight', w, f"Deeper than truncation depth {self.depth}")
        return self.entries.get(w, 0)

    def depth_of(self, w: Weight) -> int:
        return self.top_c - w.c

    def weights_at(self, depth: int) -> List[Weight]:
        return sorted((w for w in self.entries if self.top_c - w.c == depth), key=lambda w: -w.b)

    def total(self) -> int:
        return sum(self.entries.values())

    def restrict(self, depth: int) -> 'WeightMultMap':
        depth = min(depth, self.depth)
        return WeightMultMap(
            self.level, self.top_c, depth,
            {w: m for w, m in self.entries.items() if self.top_c - w.c <= depth},
        )

    def to_json(self) -> List[Dict]:
        ordered = sorted(self.entries.items(), key=lambda item: (-item[0].c, -item[0].b))
        return [{'weight': w.to_json(), 'mult': str(m)} for w, m in ordered]


def _check_depth(depth: int) -> int:
    depth = validate_nonnegative_int(depth, 'depth')
    if depth > ORACLE_CONFIG['max_depth']:
        raise ResourceError(f"Oracle depth {depth} exceeds cap {ORACLE_CONFIG['max_depth']}")
    return depth


def _freudenthal_table(Lambda: Weight, depth: int) -> Dict[Tuple[int, int], int]:
    """
    Multiplicities of Lambda - c0*alpha0 - c1*alpha1 keyed by (c0, c1)
    Region: 0 <= c0 <= depth, 0 <= c1 <= m + 2*c0; outside it the
    multiplicity is zero (s1-symmetry maps c1 > m + 2*c0 to c1 < 0), so every
    weight the recursion consults is either already computed or known zero
    """
    level, m = Lambda.a, Lambda.b
    top_norm = norm_squared(Lambda + RHO)
    table: Dict[Tuple[int, int], int] = {}

    def known(c0: int, c1: int) -> int:
        if c0 < 0 or c1 < 0 or c1 > m + 2 * c0:
            return 0
        return table[(c0, c1)]

    def weight_of(c0: int, c1: int) -> Weight:
        return Weight(level, m + 2 * c0 - 2 * c1, Lambda.c - c0)

    for c0 in range(depth + 1):
        for c1 in range(m + 2 * c0 + 1):
            if c0 == 0 and c1 == 0:
                table[(0, 0)] = 1
                continue
            mu = weight_of(c0, c1)
            total = Fraction(0)

            # real roots epsilon*alpha1 + n*delta = n*alpha0 + (n + epsilon)*alpha1
            for n in range(0, c0 + 1):
                for epsilon in ((1, -1) if n else (1,)):
                    root = Weight(0, 2 * epsilon, n)
                    k = 1
                    while True:
                        shifted_c0 = c0 - k * n
                        shifted_c1 = c1 - k * (n + epsilon)
                        if shifted_c0 < 0 or (n == 0 and shifted_c1 < 0):
                            break
                        value = known(shifted_c0, shifted_c1)
                        if value:
                            total += inner(mu + k * root, root) * value
                        k += 1

            # imaginary roots n*delta, multiplicity one, (mu + k n delta, n delta) = n * level
            for n in range(1, c0 + 1):
                for k in range(1, c0 // n + 1):
                    total += n * level * known(c0 - k * n, c1 - k * n)

            total *= 2
            coefficient = top_norm - norm_squared(mu + RHO)
            if coefficient <= 0:
                if total != 0:
                    raise ConsistencyError(
                        f"Freudenthal recursion at {mu}: coefficient {coefficient} with sum {total}"
                    )
                table[(c0, c1)] = 0
                continue
            quotient = total / coefficient
            if quotient.denominator != 1 or quotient < 0:
                raise ConsistencyError(f"Non-integral multiplicity {quotient} at {mu}")
            table[(c0, c1)] = int(quotient)

    return table


def freudenthal(Lambda: Weight, depth: int) -> WeightMultMap:
    """Truncated character of V(Lambda) down to depth delta-steps below the top"""
    if not Lambda.is_dominant():
        raise DomainError('Lambda', Lambda, "Must be dominant")
    if Lambda.level < 1:
        raise DomainError('Lambda', Lambda, "Must have positive level")
    depth = _check_depth(depth)

    def compute() -> WeightMultMap:
        logger.debug(f"🧮 Freudenthal recursion for {Lambda} to depth {depth}")
        table = _freudenthal_table(Lambda, depth)
        entries = {
            Weight(Lambda.a, Lambda.b + 2 * c0 - 2 * c1, Lambda.c - c0): mult
            for (c0, c1), mult in table.items() if mult
        }
        return WeightMultMap(Lambda.level, Lambda.c, depth, entries)

    cached = character_store.get_or_compute((Lambda, depth), compute)
    return WeightMultMap(cached.level, cached.top_c, cached.depth, dict(cached.entries))


def tensor_character(A: WeightMultMap, B: WeightMultMap) -> WeightMultMap:
    """Product of characters, truncated to the smaller depth"""
    depth = min(A.depth, B.depth)
    top_c = A.top_c + B.top_c
    product: Dict[Weight, int] = {}
    for mu, x in A.entries.items():
        used = A.top_c - mu.c
        if used > depth:
            continue
        for nu, y in B.entries.items():
            if used + B.top_c - nu.c > depth:
                continue
            w = mu + nu
            product[w] = product.get(w, 0) + x * y
    return WeightMultMap(A.level + B.level, top_c, depth, product)


def _pick_maximal(pending: List[Weight], rng: Optional[random.Random]) -> Weight:
    """A pending candidate that is not below another pending one by a multiple of alpha1"""
    maximal = [
        w for w in pending
        if not any(other.b > w.b and (other.b - w.b) % 2 == 0 for other in pending)
    ]
    if rng is None:
        return max(maximal, key=lambda w: w.b)
    return rng.choice(sorted(maximal))


def decompose(T: WeightMultMap, depth: Optional[int] = None, seed: Optional[int] = None) -> Dict[Weight, int]:
    """
    Outer multiplicities of a truncated character, level by level
    With a seed, incomparable candidates are picked in a shuffled order
    """
    depth = T.depth if depth is None else min(validate_nonnegative_int(depth, 'depth'), T.depth)
    rng = random.Random(seed) if seed is not None else None
    residual = dict(T.restrict(depth).entries)
    table: Dict[Weight, int] = {}

    for c0 in range(depth + 1):
        level_c = T.top_c - c0
        while True:
            pending = [
                w for w, m in residual.items()
                if w.c == level_c and m > 0 and w.is_dominant()
            ]
            if not pending:
                break
            Phi = _pick_maximal(pending, rng)
            count = residual[Phi]
            table[Phi] = table.get(Phi, 0) + count
            for w, m in freudenthal(Phi, depth - c0).entries.items():
                remaining = residual.get(w, 0) - count * m
                if remaining < 0:
                    raise IntegrityError(
                        f"Negative residual {remaining} at {w} after removing {count} x V({Phi})"
                    )
                if remaining:
                    residual[w] = remaining
                else:
                    residual.pop(w, None)

        leftover = {w: m for w, m in residual.items() if w.c == level_c and m}
        if leftover:
            raise IntegrityError(f"Residual left at depth {c0}: {leftover}")

    return table


def oracle_tensor_table(i: int, Lambda: Weight, depth: int) -> Dict[Weight, int]:
    """Decomposition of V(Lambda_i) (x) V(Lambda) down to the given depth"""
    product = tensor_character(freudenthal(fundamental(i), depth), freudenthal(Lambda, depth))
    return decompose(product, depth)
