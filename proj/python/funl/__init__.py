"""Active learning for word automata: deterministic acceptors, automata
weighted over the exact rationals, and subsequential transducers.

Automata are passed around as JSON documents (strings); see the README
for the schema. The heavy lifting happens in the compiled extension.
"""

from ._core import (
    CapExceededError,
    ParseError,
    canonicalize,
    equiv,
    evaluate,
    learn,
    minimize,
    to_dot,
)

__all__ = [
    "CapExceededError",
    "ParseError",
    "canonicalize",
    "equiv",
    "evaluate",
    "learn",
    "minimize",
    "to_dot",
]
