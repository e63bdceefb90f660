"""Text layer: numeral literals and CSV emission.

Literals are fully parenthesized constructor applications, one letter per
constructor, such as ``S(S(Z))`` or ``B(A(N))``.  Whitespace is ignored
everywhere.  Each numeral kind has its own alphabet:

    unary     Z | S(x)
    binary    Z | A(x) | B(x)        A never directly on Z
    twoscomp  Z | N | A(x) | B(x)    additionally B never directly on N
    cd        Z | C(x) | D(x)

Parsing rejects non-canonical binary and twoscomp literals; that failure
is a :class:`CanonicalityError`, distinct from a :class:`ParseError`,
which reports the character position of a syntax problem.
"""

from __future__ import annotations

from typing import Any, List, Tuple

from . import binary, braun, twoscomp, unary
from .binary import CanonicalityError

KINDS = ("unary", "binary", "twoscomp", "cd")


class ParseError(ValueError):
    """Syntax error in a numeral literal, with the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


# per kind: wrapper letter -> one-argument constructor, and nullary letters
_WRAPPERS = {
    "unary": {"S": unary.Succ},
    "binary": {"A": binary.Even, "B": binary.Odd},
    "twoscomp": {"A": binary.Even, "B": binary.Odd},
    "cd": {"C": braun.IxOdd, "D": braun.IxEven},
}
_NULLARIES = {
    "unary": {"Z": unary.Zero},
    "binary": {"Z": binary.Zero},
    "twoscomp": {"Z": binary.Zero, "N": twoscomp.MinusOne},
    "cd": {"Z": braun.IxZero},
}

# printing tables: class -> letter, and the field holding the wrapped value
_LETTERS = {
    unary.Zero: "Z", unary.Succ: "S",
    binary.Zero: "Z", binary.Even: "A", binary.Odd: "B",
    twoscomp.MinusOne: "N",
    braun.IxZero: "Z", braun.IxOdd: "C", braun.IxEven: "D",
}
_CHILD_FIELD = {
    unary.Succ: "pred",
    binary.Even: "rest", binary.Odd: "rest",
    braun.IxOdd: "rest", braun.IxEven: "rest",
}


def parse_numeral(text: str, kind: str) -> Any:
    """Parse a literal of the given kind; whitespace-insensitive."""
    if kind not in KINDS:
        raise ValueError(f"unknown numeral kind: {kind!r}")
    wrappers = _WRAPPERS[kind]
    nullaries = _NULLARIES[kind]

    i, n = 0, len(text)

    def skip_ws() -> None:
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    # the grammar is a linear chain: wrapper letters with "(", one nullary,
    # then the matching ")"s, so no recursion is needed
    stack: List[type] = []
    value = None
    while True:
        skip_ws()
        if i >= n:
            raise ParseError("unexpected end of input, expected a constructor", i)
        c = text[i]
        if c in wrappers:
            stack.append(wrappers[c])
            i += 1
            skip_ws()
            if i >= n or text[i] != "(":
                raise ParseError(f"expected '(' after {c!r}", i)
            i += 1
        elif c in nullaries:
            value = nullaries[c]()
            i += 1
            break
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    for _ in stack:
        skip_ws()
        if i >= n or text[i] != ")":
            raise ParseError("expected ')'", i)
        i += 1
    skip_ws()
    if i < n:
        raise ParseError(f"trailing input {text[i]!r}", i)

    for ctor in reversed(stack):
        value = ctor(value)

    if kind == "binary" and not binary.is_canonical(value):
        raise CanonicalityError("non-canonical literal: A applied directly to Z")
    if kind == "twoscomp" and not twoscomp.is_canonical(value):
        raise CanonicalityError(
            "non-canonical literal: A applied directly to Z, or B directly to N"
        )
    return value


def print_numeral(value: Any) -> str:
    """Canonical text of a numeral value; exact inverse of the parser."""
    parts: List[str] = []
    while type(value) in _CHILD_FIELD:
        parts.append(_LETTERS[type(value)])
        value = getattr(value, _CHILD_FIELD[type(value)])
    try:
        tail = _LETTERS[type(value)]
    except KeyError:
        raise TypeError(f"not a printable numeral: {value!r}") from None
    return "".join(f"{p}(" for p in parts) + tail + ")" * len(parts)


def csv_emit(rows: List[Tuple[int, int]]) -> str:
    """Benchmark CSV: an ``n,steps`` header then one line per sample."""
    lines = ["n,steps"]
    lines.extend(f"{n},{steps}" for n, steps in rows)
    return "\n".join(lines) + "\n"
