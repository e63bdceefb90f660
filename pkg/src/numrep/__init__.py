"""Inductive number representations and the sequences they index.

Submodules: :mod:`numrep.unary` (Peano naturals), :mod:`numrep.binary`
(canonical binary naturals), :mod:`numrep.twoscomp` (two's-complement
integers), :mod:`numrep.braun` (index numerals and Braun-tree
sequences), :mod:`numrep.listlab` (list-recursion exemplars),
:mod:`numrep.costmeter` (step counting), :mod:`numrep.numio` (literal
parsing/printing and CSV), :mod:`numrep.checks` (property suites).
"""

from . import binary, braun, checks, costmeter, listlab, numio, twoscomp, unary

__all__ = [
    "binary", "braun", "checks", "costmeter", "listlab", "numio",
    "twoscomp", "unary",
]
__version__ = "0.1.0"
