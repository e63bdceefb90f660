"""Braun-tree sequences indexed by bijective base-2 numerals.

An index numeral is built from ``IxOdd`` (n -> 2n+1) and ``IxEven``
(n -> 2n+2) over ``IxZero``, least significant digit outermost.  Unlike
ordinary binary, every digit string denotes a distinct number and every
number has exactly one digit string, with no extra canonicality rule.

That bijectivity is what makes the numerals usable as tree paths: store
element 0 at the root, elements with odd index in the left subtree and
elements with even index >= 2 in the right, recursively.  The digits of
an index then spell its root-to-node path (odd digit: left, even digit:
right), every node holds an element, and the tree is a Braun tree: at
each node the left subtree has the same size as the right or one more.

Had we used the ordinary 0-based binary digits as paths instead, the
leading-zero rule would bite: no index's digit string ends with the
doubling digit, so the slot at every left child would sit permanently
empty and half the tree would be wasted.  Starting the digit values at
1 and 2 closes the gap (see the negative demonstration in the tests).

Sequences are persistent: every operation returns a new value and never
touches the old one, sharing untouched subtrees.  ``BraunSeq`` carries
an explicit length so range and emptiness checks are constant time; the
nodes themselves store no sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Union


@dataclass(frozen=True, slots=True)
class IxZero:
    """Index 0: the empty digit string."""


@dataclass(frozen=True, slots=True)
class IxOdd:
    """Index digit for 2n+1."""

    rest: "CdIndex"


@dataclass(frozen=True, slots=True)
class IxEven:
    """Index digit for 2n+2."""

    rest: "CdIndex"


CdIndex = Union[IxZero, IxOdd, IxEven]


@dataclass(frozen=True, slots=True)
class Node:
    elem: Any
    left: "BraunTree"
    right: "BraunTree"


BraunTree = Optional[Node]  # None is the empty tree


@dataclass(frozen=True, slots=True)
class BraunSeq:
    """A sequence stored as a Braun tree plus its cached length."""

    length: int
    tree: BraunTree

    def __len__(self) -> int:
        return self.length


EMPTY = BraunSeq(0, None)


def cd_from_int(n: int) -> CdIndex:
    """Index numeral of n, least significant digit outermost."""
    if n < 0:
        raise ValueError(f"cannot represent {n} as an index numeral")
    digits = []
    while n:
        if n & 1:
            digits.append(1)
            n = (n - 1) >> 1
        else:
            digits.append(2)
            n = (n - 2) >> 1
    value: CdIndex = IxZero()
    for d in reversed(digits):
        value = IxOdd(value) if d == 1 else IxEven(value)
    return value


def cd_to_int(ix: CdIndex) -> int:
    """Inverse of :func:`cd_from_int`."""
    digits = []
    while isinstance(ix, (IxOdd, IxEven)):
        digits.append(1 if isinstance(ix, IxOdd) else 2)
        ix = ix.rest
    if not isinstance(ix, IxZero):
        raise TypeError(f"not an index numeral: {ix!r}")
    n = 0
    for d in reversed(digits):
        n = 2 * n + d
    return n


def from_list(xs: Iterable[Any]) -> BraunSeq:
    """Build a sequence; odd positions go left, even positions right."""
    items = list(xs)

    def build(chunk: List[Any]) -> BraunTree:
        if not chunk:
            return None
        return Node(chunk[0], build(chunk[1::2]), build(chunk[2::2]))

    return BraunSeq(len(items), build(items))


def to_list(s: BraunSeq) -> List[Any]:
    """Enumerate elements in index order; inverse of :func:`from_list`."""

    def flatten(node: BraunTree) -> List[Any]:
        if node is None:
            return []
        left = flatten(node.left)
        right = flatten(node.right)
        out: List[Any] = [node.elem] + [None] * (len(left) + len(right))
        out[1::2] = left
        out[2::2] = right
        return out

    return flatten(s.tree)


def access(s: BraunSeq, i: int) -> Any:
    """Element at index i, by descending along i's digits."""
    if not 0 <= i < s.length:
        raise IndexError(f"index {i} out of range for length {s.length}")
    node = s.tree
    while i:
        if i & 1:
            node = node.left
            i = (i - 1) >> 1
        else:
            node = node.right
            i = (i - 2) >> 1
    return node.elem


def access_cd(s: BraunSeq, ix: CdIndex) -> Any:
    """Element at a structured index: pure digit descent, no arithmetic.

    Range is not pre-checked; running off the tree raises IndexError.
    """
    node = s.tree
    while True:
        if node is None:
            raise IndexError("index reaches past the sequence end")
        match ix:
            case IxZero():
                return node.elem
            case IxOdd(r):
                node, ix = node.left, r
            case IxEven(r):
                node, ix = node.right, r
            case _:
                raise TypeError(f"not an index numeral: {ix!r}")


def update(s: BraunSeq, i: int, v: Any) -> BraunSeq:
    """Copy of s with element i replaced by v; only the path is copied."""
    if not 0 <= i < s.length:
        raise IndexError(f"index {i} out of range for length {s.length}")

    def upd(node: Node, j: int) -> Node:
        if j == 0:
            return Node(v, node.left, node.right)
        if j & 1:
            return Node(node.elem, upd(node.left, (j - 1) >> 1), node.right)
        return Node(node.elem, node.left, upd(node.right, (j - 2) >> 1))

    return BraunSeq(s.length, upd(s.tree, i))


def cons(v: Any, s: BraunSeq) -> BraunSeq:
    """Prepend v.  Every old index shifts up by one, which turns the old
    left subtree into the new right and pushes the old root leftward."""

    def push(w: Any, node: BraunTree) -> Node:
        if node is None:
            return Node(w, None, None)
        return Node(w, push(node.elem, node.right), node.left)

    return BraunSeq(s.length + 1, push(v, s.tree))


def first(s: BraunSeq) -> Any:
    """The element at index 0."""
    if s.length == 0:
        raise ValueError("first of an empty sequence")
    return s.tree.elem


def rest(s: BraunSeq) -> BraunSeq:
    """Everything after index 0; the exact inverse of :func:`cons`."""
    if s.length == 0:
        raise ValueError("rest of an empty sequence")
    return BraunSeq(s.length - 1, _untop(s.tree)[1])


def _untop(node: Node) -> tuple:
    # (root element, tree with the root removed), in one left-spine pass
    if node.left is None:
        return node.elem, None
    head, left_rest = _untop(node.left)
    return node.elem, Node(head, node.right, left_rest)


def depth(s: BraunSeq) -> int:
    """Longest root-to-node path, counted in nodes (empty tree: 0)."""

    def walk(node: BraunTree) -> int:
        if node is None:
            return 0
        return 1 + max(walk(node.left), walk(node.right))

    return walk(s.tree)
