"""
Partition Counting Module
Exact counts of integer partitions with bounded parts, bounded part count,
or distinct parts of one parity, plus an explicit enumerator used as oracle
"""
import logging
from dataclasses import dataclass
from typing import Generator, List, Optional, Tuple

from algebra.qseries import q_pochhammer_inv
from config import PARTITION_CONFIG
from memo_store import partition_store
from validation import ResourceError, ValidationError, validate_index, validate_nonnegative_int

logger = logging.getLogger(__name__)


def _capacity_for(m: int) -> int:
    """Smallest power-of-two table size holding index m"""
    capacity = PARTITION_CONFIG['table_min_capacity']
    while capacity <= m:
        capacity *= 2
    return capacity


def _bounded_table(k: int, capacity: int) -> Tuple[int, ...]:
    def compute() -> Tuple[int, ...]:
        return q_pochhammer_inv(k, capacity - 1).coefficients

    return partition_store.get_or_compute(('bounded', k, capacity), compute)


def rho_bounded(k: int, m: int) -> int:
    """Number of partitions of m with every part at most k"""
    k = validate_nonnegative_int(k, 'k')
    if m < 0:
        return 0
    if m == 0:
        return 1
    # parts larger than m never occur
    k = min(k, m)
    return _bounded_table(k, _capacity_for(m))[m]


def _shift_add(low: Tuple[int, ...], high: Tuple[int, ...], shift: int, length: int) -> Tuple[int, ...]:
    combined = list(low) + [0] * (length - len(low))
    for exponent, value in enumerate(high):
        if exponent + shift < length:
            combined[exponent + shift] += value
    return tuple(combined)


def _box_coefficients(k: int, p: int) -> Tuple[int, ...]:
    """
    Coefficients of the generating polynomial for partitions fitting in a
    p-row, k-column box; equals the Gaussian binomial [k+p choose p]_q
    """
    if k > p:
        k, p = p, k

    def compute() -> Tuple[int, ...]:
        # B(k, p) = B(k-1, p) + q^k B(k, p-1), filled row by row
        previous_row = [(1,)] * (p + 1)
        for width in range(1, k + 1):
            row = [(1,)]
            for height in range(1, p + 1):
                row.append(_shift_add(previous_row[height], row[height - 1], width, width * height + 1))
            previous_row = row
        return previous_row[p]

    return partition_store.get_or_compute(('box', k, p), compute)


def rho_bounded_both(k: int, p: int, m: int) -> int:
    """Number of partitions of m into at most p parts, each part at most k"""
    k = validate_nonnegative_int(k, 'k')
    p = validate_nonnegative_int(p, 'p')
    if m < 0 or m > k * p:
        return 0
    if m == 0:
        return 1
    return _box_coefficients(k, p)[m]


def _distinct_parity_table(i: int, capacity: int) -> Tuple[int, ...]:
    def compute() -> Tuple[int, ...]:
        counts = [1] + [0] * (capacity - 1)
        first_part = 2 if i == 1 else 1
        # 0/1 knapsack: each admissible part used at most once
        for part in range(first_part, capacity, 2):
            for total in range(capacity - 1, part - 1, -1):
                counts[total] += counts[total - part]
        return tuple(counts)

    return partition_store.get_or_compute(('distinct', i, capacity), compute)


def rho_distinct_parity(i: int, m: int) -> int:
    """
    Number of partitions of m into distinct parts whose parity differs from i
    i=0 counts distinct odd parts, i=1 counts distinct even parts
    """
    i = validate_index(i)
    if m < 0:
        return 0
    return _distinct_parity_table(i, _capacity_for(m))[m]


@dataclass(frozen=True)
class PartitionConstraints:
    """Constraint bundle for enumerate_partitions; None means unconstrained"""
    max_part: Optional[int] = None
    max_parts: Optional[int] = None
    distinct: bool = False
    part_parity: Optional[int] = None  # 0 even parts only, 1 odd parts only

    def admits(self, part: int) -> bool:
        if self.max_part is not None and part > self.max_part:
            return False
        if self.part_parity is not None and part % 2 != self.part_parity:
            return False
        return True


def _weakly_decreasing(remaining: int, ceiling: int, slots: Optional[int],
                       constraints: PartitionConstraints) -> Generator[List[int], None, None]:
    if remaining == 0:
        yield []
        return
    if slots == 0:
        return
    for part in range(min(ceiling, remaining), 0, -1):
        if not constraints.admits(part):
            continue
        next_ceiling = part - 1 if constraints.distinct else part
        next_slots = None if slots is None else slots - 1
        for rest in _weakly_decreasing(remaining - part, next_ceiling, next_slots, constraints):
            yield [part] + rest


def enumerate_partitions(m: int, constraints: Optional[PartitionConstraints] = None) -> List[List[int]]:
    """
    Explicitly list the partitions of m satisfying constraints, parts weakly decreasing
    Raises ResourceError above the configured enumeration cap
    """
    m = validate_nonnegative_int(m, 'm')
    cap = PARTITION_CONFIG['enumeration_cap']
    if m > cap:
        raise ResourceError(f"Enumeration of partitions of {m} exceeds cap {cap}")

    constraints = constraints or PartitionConstraints()
    if constraints.part_parity not in (None, 0, 1):
        raise ValidationError('part_parity', constraints.part_parity, "Must be 0, 1 or None")

    return list(_weakly_decreasing(m, m, constraints.max_parts, constraints))
