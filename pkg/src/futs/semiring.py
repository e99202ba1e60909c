"""The two semirings used for continuations.

Values are plain Python objects: ``bool`` for the Boolean semiring and
:class:`fractions.Fraction` for nonnegative rationals.  The owning semiring
is recovered from the value's type, so a value never needs a wrapper.

New semirings would be added as members of :class:`Semiring` together with
a branch in :func:`semiring_of`, :func:`add` and :func:`mul`.
"""

import enum
import re
from fractions import Fraction

from .errors import MissingSemiringId, MixedSemiring

__all__ = [
    "Semiring",
    "BOOL",
    "RAT",
    "semiring_of",
    "coerce",
    "add",
    "mul",
    "sum",
    "is_zero",
    "parse_rational",
    "format_value",
]


class Semiring(enum.Enum):
    BOOLEAN = "bool"
    NONNEG_RATIONAL = "rat"

    @property
    def zero(self):
        return False if self is Semiring.BOOLEAN else Fraction(0)

    @property
    def one(self):
        return True if self is Semiring.BOOLEAN else Fraction(1)

    def __repr__(self):
        return f"Semiring.{self.name}"


BOOL = Semiring.BOOLEAN
RAT = Semiring.NONNEG_RATIONAL


def semiring_of(value):
    # bool is a subclass of int: test it first.
    if isinstance(value, bool):
        return BOOL
    if isinstance(value, Fraction):
        return RAT
    raise MixedSemiring(f"not a semiring value: {value!r}")


def coerce(value, semiring):
    """Convert ``value`` (bool, int, Fraction, or literal string) into ``semiring``."""
    if semiring is BOOL:
        if isinstance(value, bool):
            return value
        if isinstance(value, str) and value in ("true", "false"):
            return value == "true"
        raise MixedSemiring(f"{value!r} is not a Boolean value")
    if isinstance(value, bool):
        raise MixedSemiring(f"{value!r} is not a rational value")
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, (int, Fraction)):
        value = Fraction(value)
        if value < 0:
            raise ValueError(f"negative value {value} in the nonnegative rationals")
        return value
    raise MixedSemiring(f"{value!r} is not a rational value")


def _same(a, b):
    r = semiring_of(a)
    if semiring_of(b) is not r:
        raise MixedSemiring(f"cannot combine {a!r} and {b!r}")
    return r


def add(a, b):
    if _same(a, b) is BOOL:
        return a or b
    return a + b


def mul(a, b):
    if _same(a, b) is BOOL:
        return a and b
    return a * b


def sum(values, semiring=None):  # noqa: A001 - mirrors add/mul naming
    """Fold ``values`` with :func:`add`; ``semiring`` is required for empty input."""
    values = list(values)
    if not values:
        if semiring is None:
            raise MissingSemiringId("empty sum needs an explicit semiring")
        return semiring.zero
    r = semiring if semiring is not None else semiring_of(values[0])
    total = r.zero
    for v in values:
        if semiring_of(v) is not r:
            raise MixedSemiring(f"{v!r} does not belong to {r}")
        total = add(total, v)
    return total


def is_zero(value):
    return not value


_RATIONAL = re.compile(r"^(\d+)(?:/(\d+)|\.(\d+))?$|^\.(\d+)$")


def parse_rational(text):
    """Parse ``"3"``, ``"3/4"`` or ``"0.25"`` into an exact nonnegative Fraction."""
    text = text.strip()
    m = _RATIONAL.match(text)
    if not m:
        raise ValueError(f"bad rational literal {text!r}")
    if m.group(2) is not None and int(m.group(2)) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(text)


def format_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
