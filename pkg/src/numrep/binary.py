"""Canonical binary naturals built from two digit constructors.

``Even(x)`` denotes 2x and ``Odd(x)`` denotes 2x+1, with the least
significant digit outermost, so a number reads like a bit string written
back to front.  ``Zero`` is the empty digit string.  Uniqueness needs one
rule: ``Even`` is never applied directly to ``Zero`` (that would be a
leading zero).  The smart constructors :func:`even` and :func:`odd`
maintain the rule, and all arithmetic goes through them.

Two addition algorithms are kept side by side on purpose: :func:`add_v1`
resolves digit carries with a separate increment, :func:`add_v2` folds the
carry into a mutually recursive "add plus one" so every recursive call
shrinks its arguments.  They always produce identical structures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


class CanonicalityError(ValueError):
    """A numeral violates its representation rules."""


@dataclass(frozen=True, slots=True)
class Zero:
    """The empty digit string: 0."""


@dataclass(frozen=True, slots=True)
class Even:
    """Digit constructor for 2n: appends a 0 bit."""

    rest: "BinNat"


@dataclass(frozen=True, slots=True)
class Odd:
    """Digit constructor for 2n+1: appends a 1 bit."""

    rest: "BinNat"


BinNat = Union[Zero, Even, Odd]


def even(x: BinNat) -> BinNat:
    # 2 * 0 = 0, so collapsing keeps results canonical without special cases
    return x if isinstance(x, Zero) else Even(x)


def odd(x: BinNat) -> BinNat:
    return Odd(x)


def from_int(n: int) -> BinNat:
    """Binary digits of n, least significant constructor outermost."""
    if n < 0:
        raise ValueError(f"cannot represent {n} as a binary natural")
    bits = []
    while n:
        bits.append(n & 1)
        n >>= 1
    value: BinNat = Zero()
    for bit in reversed(bits):
        value = Odd(value) if bit else Even(value)
    return value


def to_int(x: BinNat) -> int:
    """Inverse of :func:`from_int`; rejects non-canonical input."""
    if not is_canonical(x):
        raise CanonicalityError(f"non-canonical binary natural: {x!r}")
    n = 0
    shift = 0
    while isinstance(x, (Even, Odd)):
        if isinstance(x, Odd):
            n |= 1 << shift
        shift += 1
        x = x.rest
    if not isinstance(x, Zero):
        raise TypeError(f"not a binary natural: {x!r}")
    return n


def is_canonical(x: BinNat) -> bool:
    """True iff no ``Even`` is applied directly to ``Zero`` anywhere."""
    while isinstance(x, (Even, Odd)):
        if isinstance(x, Even) and isinstance(x.rest, Zero):
            return False
        x = x.rest
    return isinstance(x, Zero)


def size(x: BinNat) -> int:
    """Number of digit constructors (0 for the zero numeral)."""
    n = 0
    while isinstance(x, (Even, Odd)):
        n += 1
        x = x.rest
    return n


def add1(x: BinNat) -> BinNat:
    """Increment: flip trailing 1 bits until a 0 bit absorbs the carry."""
    match x:
        case Zero():
            return Odd(Zero())
        case Even(a):
            return odd(a)
        case Odd(a):
            return even(add1(a))
    raise TypeError(f"not a binary natural: {x!r}")


def add_v1(x: BinNat, y: BinNat) -> BinNat:
    """Addition, first formulation: the 1+1 carry goes through add1."""
    match (x, y):
        case (_, Zero()):
            return x
        case (Zero(), _):
            return y
        case (Even(a), Even(b)):
            return even(add_v1(a, b))
        case (Even(a), Odd(b)):
            return odd(add_v1(a, b))
        case (Odd(a), Even(b)):
            return odd(add_v1(a, b))
        case (Odd(a), Odd(b)):
            return even(add1(add_v1(a, b)))
    raise TypeError(f"not binary naturals: {x!r}, {y!r}")


def add_v2(x: BinNat, y: BinNat) -> BinNat:
    """Addition, second formulation: carries handled by :func:`add_plus1`.

    Every recursive call consumes a digit from each nonzero argument, so
    the running time is plainly linear in the larger digit count.
    """
    match (x, y):
        case (_, Zero()):
            return x
        case (Zero(), _):
            return y
        case (Even(a), Even(b)):
            return even(add_v2(a, b))
        case (Even(a), Odd(b)):
            return odd(add_v2(a, b))
        case (Odd(a), Even(b)):
            return odd(add_v2(a, b))
        case (Odd(a), Odd(b)):
            return even(add_plus1(a, b))
    raise TypeError(f"not binary naturals: {x!r}, {y!r}")


def add_plus1(x: BinNat, y: BinNat) -> BinNat:
    """x + y + 1, mutually recursive with :func:`add_v2`."""
    match (x, y):
        case (Zero(), Zero()):
            return Odd(Zero())
        case (Zero(), Even(b)):
            return odd(b)
        case (Zero(), Odd(b)):
            return even(add_plus1(Zero(), b))
        case (Even(a), Zero()):
            return odd(a)
        case (Odd(a), Zero()):
            return even(add_plus1(a, Zero()))
        case (Even(a), Even(b)):
            return odd(add_v2(a, b))
        case (Even(a), Odd(b)):
            return even(add_plus1(a, b))
        case (Odd(a), Even(b)):
            return even(add_plus1(a, b))
        case (Odd(a), Odd(b)):
            return odd(add_plus1(a, b))
    raise TypeError(f"not binary naturals: {x!r}, {y!r}")


def mult(x: BinNat, y: BinNat) -> BinNat:
    """Multiplication, structural on the second argument (shift and add)."""
    match y:
        case Zero():
            return Zero()
        case Even(b):
            return even(mult(x, b))
        case Odd(b):
            return add_v2(x, even(mult(x, b)))
    raise TypeError(f"not a binary natural: {y!r}")
