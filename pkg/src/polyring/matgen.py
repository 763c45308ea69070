"""Generate the 9x9 transition matrix of an m-gon at offset i.

Row ``x`` fixes how the face meets the graph before it (vertices of the
entering edge ab removed or required covered); every maximal matching of
the gadget under that condition is sorted into column ``y`` by which of
k1, e, k2, f it covers.  The columns follow the component order of the
vector of the graph glued on beyond dc.
"""
from __future__ import annotations

import threading
from typing import NamedTuple

from .oracle import COMPONENT_CONDITIONS, ConstraintSet, iter_maximal
from .polygraph import build_gadget

__all__ = ["RowCondition", "ROW_CONDITIONS", "ClassificationError", "classify",
           "matching_cases", "transition_matrix", "clear_cache"]


class ClassificationError(AssertionError):
    pass


class RowCondition(NamedTuple):
    index: int  # 1-based
    removed: frozenset  # subset of {"a", "b"}
    covered: frozenset


ROW_CONDITIONS = tuple(
    RowCondition(j + 1, frozenset({"x": "a", "y": "b"}[s] for s in r),
                 frozenset({"x": "a", "y": "b"}[s] for s in c))
    for j, (r, c) in enumerate(COMPONENT_CONDITIONS)
)


def matching_cases(cov: set, k1, e, k2, f) -> list[int]:
    """All of the nine cases whose condition holds, in listed order."""
    K1, E, K2, F = k1 in cov, e in cov, k2 in cov, f in cov
    tests = (
        K1 and E and K2 and F,
        K2 and F and not K1,
        K1 and E and not K2,
        not K1 and not K2,
        not E and not F,
        not K1 and not F,
        not K2 and not E,
        K2 and F and not E,
        K1 and E and not F,
    )
    return [y for y, ok in enumerate(tests, start=1) if ok]


def classify(covered, marks) -> int:
    """Column (1..9) for a matching whose covered set, removed vertices
    included, is ``covered``.  ``marks`` is ``(k1, e, k2, f)``.

    The first listed case wins; a matching that fires none of them, or
    more than one, raises :class:`ClassificationError`.
    """
    hits = matching_cases(set(covered), *marks)
    if len(hits) != 1:
        raise ClassificationError(f"matching fires cases {hits}, expected exactly one")
    return hits[0]


_cache: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}
_lock = threading.Lock()


def clear_cache() -> None:
    with _lock:
        _cache.clear()


def _generate(m: int, i: int) -> tuple[tuple[int, ...], ...]:
    g = build_gadget(m, i)
    mk = g.marks
    marks = (mk["k1"], mk["e"], mk["k2"], mk["f"])
    T = [[0] * 9 for _ in range(9)]
    for row in ROW_CONDITIONS:
        R = frozenset(mk[s] for s in row.removed)
        C = frozenset(mk[s] for s in row.covered)
        for matching in iter_maximal(g, ConstraintSet(removed=R, require_covered=C)):
            cov = set(R)
            for u, v in matching:
                cov.add(u)
                cov.add(v)
            T[row.index - 1][classify(cov, marks) - 1] += 1
    return tuple(tuple(r) for r in T)


def transition_matrix(m: int, i: int) -> tuple[tuple[int, ...], ...]:
    """T_{m,i} as a 9-tuple of 9-tuples of ints (memoized)."""
    key = (m, i)
    hit = _cache.get(key)
    if hit is None:
        hit = _generate(m, i)  # raises GraphError on bad (m, i)
        with _lock:
            _cache[key] = hit
    return hit
