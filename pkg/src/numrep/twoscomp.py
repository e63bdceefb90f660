"""Two's-complement integers: the binary digits plus a -1 terminator.

The digit constructors are shared with :mod:`numrep.binary`, so a
nonnegative integer here *is* the corresponding binary natural, same
objects and all.  The only addition to the grammar is the nullary
``MinusOne``, an implicit infinite run of 1 bits.  Canonical form needs
one extra rule mirroring the binary one: ``Odd`` is never applied
directly to ``MinusOne`` (2*(-1)+1 = -1, a redundant trailing 1).

Negation is complement-then-increment, the classic identity; subtraction
is addition of the negation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .binary import CanonicalityError, Even, Odd, Zero, even

__all__ = [
    "MinusOne", "TcInt", "CanonicalityError", "Even", "Odd", "Zero",
    "even", "odd", "from_int", "to_int", "is_canonical", "complement",
    "add1", "sub1", "add", "add_plus1", "neg", "sub",
    "render_bits", "parse_bits",
]


@dataclass(frozen=True, slots=True)
class MinusOne:
    """The integer -1: an infinite tail of 1 bits."""


TcInt = Union[Zero, MinusOne, Even, Odd]


def odd(x: TcInt) -> TcInt:
    # 2 * -1 + 1 = -1, the signed counterpart of even() collapsing on zero
    return x if isinstance(x, MinusOne) else Odd(x)


def from_int(n: int) -> TcInt:
    """Two's-complement digits of n, least significant outermost."""
    bits = []
    if n >= 0:
        while n:
            bits.append(n & 1)
            n >>= 1
        value: TcInt = Zero()
    else:
        while n != -1:
            bits.append(n & 1)
            n >>= 1
        value = MinusOne()
    for bit in reversed(bits):
        value = Odd(value) if bit else Even(value)
    return value


def to_int(x: TcInt) -> int:
    """Inverse of :func:`from_int`; rejects non-canonical input."""
    if not is_canonical(x):
        raise CanonicalityError(f"non-canonical two's-complement value: {x!r}")
    n = 0
    shift = 0
    while isinstance(x, (Even, Odd)):
        if isinstance(x, Odd):
            n |= 1 << shift
        shift += 1
        x = x.rest
    if isinstance(x, MinusOne):
        n -= 1 << shift
    return n


def is_canonical(x: TcInt) -> bool:
    """No ``Even`` directly on ``Zero``, no ``Odd`` directly on ``MinusOne``."""
    while isinstance(x, (Even, Odd)):
        if isinstance(x, Even) and isinstance(x.rest, Zero):
            return False
        if isinstance(x, Odd) and isinstance(x.rest, MinusOne):
            return False
        x = x.rest
    return isinstance(x, (Zero, MinusOne))


def complement(x: TcInt) -> TcInt:
    """Bitwise NOT: swaps the digit constructors and the two tails.

    Sends n to -n-1.  The two canonicality rules swap into each other,
    so plain constructors stay canonical here.
    """
    match x:
        case Zero():
            return MinusOne()
        case MinusOne():
            return Zero()
        case Even(a):
            return Odd(complement(a))
        case Odd(a):
            return Even(complement(a))
    raise TypeError(f"not a two's-complement value: {x!r}")


def add1(x: TcInt) -> TcInt:
    match x:
        case Zero():
            return Odd(Zero())
        case MinusOne():
            return Zero()
        case Even(a):
            return odd(a)
        case Odd(a):
            return even(add1(a))
    raise TypeError(f"not a two's-complement value: {x!r}")


def sub1(x: TcInt) -> TcInt:
    match x:
        case Zero():
            return MinusOne()
        case MinusOne():
            return Even(MinusOne())
        case Even(a):
            return odd(sub1(a))
        case Odd(a):
            return even(a)
    raise TypeError(f"not a two's-complement value: {x!r}")


def add(x: TcInt, y: TcInt) -> TcInt:
    """Signed addition.

    On nonnegative arguments only the digit clauses fire, and they are
    the clauses of :func:`numrep.binary.add_v2`, so the result is the
    identical structure.  The ``MinusOne`` clauses thread the infinite
    1 tail through the same digit recursion.
    """
    match (x, y):
        case (_, Zero()):
            return x
        case (Zero(), _):
            return y
        case (MinusOne(), MinusOne()):
            return Even(MinusOne())
        case (MinusOne(), Even(b)):
            return odd(add(MinusOne(), b))
        case (MinusOne(), Odd(b)):
            return even(b)
        case (Even(a), MinusOne()):
            return odd(add(a, MinusOne()))
        case (Odd(a), MinusOne()):
            return even(a)
        case (Even(a), Even(b)):
            return even(add(a, b))
        case (Even(a), Odd(b)):
            return odd(add(a, b))
        case (Odd(a), Even(b)):
            return odd(add(a, b))
        case (Odd(a), Odd(b)):
            return even(add_plus1(a, b))
    raise TypeError(f"not two's-complement values: {x!r}, {y!r}")


def add_plus1(x: TcInt, y: TcInt) -> TcInt:
    """x + y + 1, mutually recursive with :func:`add`."""
    match (x, y):
        case (_, MinusOne()):
            return x
        case (MinusOne(), _):
            return y
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
            return odd(add(a, b))
        case (Even(a), Odd(b)):
            return even(add_plus1(a, b))
        case (Odd(a), Even(b)):
            return even(add_plus1(a, b))
        case (Odd(a), Odd(b)):
            return odd(add_plus1(a, b))
    raise TypeError(f"not two's-complement values: {x!r}, {y!r}")


def neg(x: TcInt) -> TcInt:
    """Negation as complement plus one."""
    return add1(complement(x))


def sub(x: TcInt, y: TcInt) -> TcInt:
    """Subtraction as addition of the negation."""
    return add(x, neg(y))


def render_bits(x: TcInt) -> str:
    """Bit-string form, most significant digit leftmost.

    The infinite tail prints as ``...0`` (zero tail) or ``...1`` (ones
    tail), followed by one 0/1 per digit constructor.  The sole
    exception is -1 itself, which prints as ``...11`` so that it carries
    one explicit bit.  Assumes canonical input.
    """
    digits = []
    while isinstance(x, (Even, Odd)):
        digits.append("1" if isinstance(x, Odd) else "0")
        x = x.rest
    if isinstance(x, MinusOne):
        if not digits:
            return "...11"
        return "...1" + "".join(reversed(digits))
    if not isinstance(x, Zero):
        raise TypeError(f"not a two's-complement value: {x!r}")
    return "...0" + "".join(reversed(digits))


def parse_bits(text: str) -> TcInt:
    """Inverse of :func:`render_bits`; normalizes redundant leading bits."""
    s = text.strip()
    if not s.startswith("..."):
        raise ValueError(f"bit string must start with '...': {text!r}")
    body = s[3:]
    if not body or any(c not in "01" for c in body):
        raise ValueError(f"bit string needs a 0/1 tail digit and bits: {text!r}")
    tail, digits = body[0], body[1:]
    # explicit copies of the tail bit on the left are part of the tail
    digits = digits.lstrip(tail)
    value: TcInt = MinusOne() if tail == "1" else Zero()
    for d in digits:
        value = Odd(value) if d == "1" else Even(value)
    return value
