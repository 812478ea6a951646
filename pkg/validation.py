#!/usr/bin/env python3
"""
Input validation and error vocabulary for the Demazure multiplicity toolkit
Provides validators for CLI and library inputs plus the computation errors
"""

import re
from typing import Any, Tuple

from config import METHODS, OUTPUT_FORMATS, VERIFY_TARGETS

VALID_INDICES = (0, 1)
VALID_SIGNS = ('+', '-')

# Weight-spec grammar: signed terms "c*Name" or "Name", Name one of the basis
# symbols or the Lambda1 alias; whitespace is stripped before matching.
WEIGHT_TERM_PATTERN = re.compile(r'([+-]?)(?:(\d+)\*)?(Lambda0|Lambda1|omega1|delta)')
WEIGHT_SPEC_PATTERN = re.compile(
    r'^[+-]?(?:\d+\*)?(?:Lambda0|Lambda1|omega1|delta)'
    r'(?:[+-](?:\d+\*)?(?:Lambda0|Lambda1|omega1|delta))*$'
)


class ValidationError(Exception):
    """Custom validation error with field information"""
    def __init__(self, field: str, value: Any, message: str):
        self.field = field
        self.value = value
        self.message = message
        super().__init__(f"Validation error for field '{field}': {message} (value: {value})")


class DomainError(ValidationError):
    """Argument outside the mathematical domain of an operation"""


class TruncationError(Exception):
    """Coefficient requested beyond the truncation order of a series"""
    def __init__(self, exponent: int, order: int):
        self.exponent = exponent
        self.order = order
        super().__init__(f"Coefficient of q^{exponent} is beyond truncation order {order}")


class ResourceError(Exception):
    """Request exceeds a configured resource cap"""


class ConsistencyError(Exception):
    """Two code paths that must agree produced different values"""


class IntegrityError(Exception):
    """A character is not a nonnegative sum of irreducible characters"""


class UnsupportedLevelError(Exception):
    """Flag multiplicity data is only available at level one"""


class BoundError(Exception):
    """A truncation bound could not be certified"""


def validate_nonnegative_int(value: Any, field: str) -> int:
    """Validate and convert a nonnegative integer"""
    if isinstance(value, bool):
        raise ValidationError(field, value, "Must be an integer, got bool")
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ValidationError(field, value, "Cannot convert to integer")
    if isinstance(value, float) and number != value:
        raise ValidationError(field, value, "Must be integral")
    if number < 0:
        raise ValidationError(field, value, "Must be nonnegative")
    return number


def validate_index(value: Any, field: str = 'i') -> int:
    """Validate a node of the affine Dynkin diagram (0 or 1)"""
    try:
        index = int(value)
    except (TypeError, ValueError):
        raise DomainError(field, value, "Cannot convert to integer")
    if index not in VALID_INDICES:
        raise DomainError(field, value, f"Must be one of {VALID_INDICES}")
    return index


def validate_sign(value: str) -> str:
    """Validate a beta sign"""
    if value not in VALID_SIGNS:
        raise DomainError('sign', value, f"Must be one of {VALID_SIGNS}")
    return value


def validate_format(value: str) -> str:
    """Validate output format"""
    if value not in OUTPUT_FORMATS:
        raise ValidationError('format', value, f"Must be one of {list(OUTPUT_FORMATS)}")
    return value


def validate_method(value: str) -> str:
    """Validate outer multiplicity method"""
    if value not in METHODS:
        raise ValidationError('method', value, f"Must be one of {list(METHODS)}")
    return value


def validate_verify_target(value: str) -> str:
    """Validate verification sweep name"""
    if value not in VERIFY_TARGETS:
        raise ValidationError('which', value, f"Must be one of {list(VERIFY_TARGETS)}")
    return value


def validate_worker_count(value: Any) -> int:
    """Worker caps must be at least one"""
    count = validate_nonnegative_int(value, 'threads')
    if count < 1:
        raise ValidationError('threads', value, "Must be at least 1")
    return count


def parse_weight_spec(spec: str) -> Tuple[int, int, int]:
    """
    Parse 'a*Lambda0 + b*omega1 + c*delta' style text into (a, b, c)
    Lambda1 is accepted as an alias for Lambda0 + omega1
    """
    if not isinstance(spec, str):
        raise ValidationError('weight', spec, "Must be a string")

    compact = re.sub(r'\s+', '', spec)
    if not compact or not WEIGHT_SPEC_PATTERN.match(compact):
        raise ValidationError('weight', spec, "Expected terms like 2*Lambda0 - omega1 + 3*delta")

    a = b = c = 0
    for sign, coefficient, name in WEIGHT_TERM_PATTERN.findall(compact):
        amount = int(coefficient) if coefficient else 1
        if sign == '-':
            amount = -amount
        if name == 'Lambda0':
            a += amount
        elif name == 'Lambda1':
            a += amount
            b += amount
        elif name == 'omega1':
            b += amount
        else:
            c += amount
    return a, b, c
