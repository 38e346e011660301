"""Named ring collections used by the sweep tests and the CLI.

Rings appear as descriptor strings, not built objects, so every consumer
round-trips through the parser. The small corpus keeps everything at order
256 or below; the medium corpus is the sweep set (about forty rings, the
largest being the 2401-element matrix ring).
"""

from __future__ import annotations

from typing import Callable, Dict, List

_EXTRAS_SMALL = [
    "sub(Z(4); 2)",
    "sub(Z(9); 3)",
    "sub(Z(6); 2)",
    "prod(Z(2), Z(2))",
    "prod(Z(2), Z(3))",
    "prod(Z(3), Z(3))",
    "M(2, Z(2))",
    "M(2, Z(3))",
    "M(2, Z(4))",
]

_EXTRAS_MEDIUM = [
    "M(2, Z(5))",
    "M(2, Z(6))",
    "M(2, Z(7))",
]


def cyclic_corpus(lo: int = 2, hi: int = 30) -> List[str]:
    return ["Z(%d)" % m for m in range(lo, hi + 1)]


def small_corpus() -> List[str]:
    return cyclic_corpus(2, 16) + list(_EXTRAS_SMALL)


def medium_corpus() -> List[str]:
    return cyclic_corpus(2, 30) + list(_EXTRAS_SMALL) + list(_EXTRAS_MEDIUM)


CORPORA: Dict[str, Callable[..., List[str]]] = {
    "small": small_corpus,
    "medium": medium_corpus,
    "all-cyclic": cyclic_corpus,
}


def corpus_by_name(name: str) -> List[str]:
    try:
        fn = CORPORA[name]
    except KeyError:
        raise KeyError(
            "unknown corpus %r (expected one of %s)"
            % (name, ", ".join(sorted(CORPORA)))
        )
    return fn()
