"""Ground-truth counting of maximal matchings under constraints.

Two independent tiers:

* :func:`count_maximal` -- branch-and-count search (compiled kernel when
  available, pure Python otherwise), plus the streaming
  :func:`iter_maximal` used by matrix generation;
* :func:`count_maximal_naive` -- filter over all ``2**|E|`` edge subsets.

Maximality is always judged in ``graph - removed`` with forbidden edges
still present; ``require_uncovered`` filters, it never deletes.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

import numpy as np

from . import _pykernel
from .polygraph import Graph

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

__all__ = [
    "ConstraintSet",
    "ConstraintError",
    "MMVector",
    "COMPONENT_CONDITIONS",
    "count_maximal",
    "count_maximal_naive",
    "iter_maximal",
    "is_maximal",
    "mm_vector",
    "backend",
    "set_backend",
    "available_backends",
]

NAIVE_MAX_EDGES = 22


class ConstraintError(ValueError):
    pass


def _ekey(e) -> frozenset:
    return frozenset(e)


@dataclass(frozen=True)
class ConstraintSet:
    removed: frozenset = frozenset()
    require_covered: frozenset = frozenset()
    require_uncovered: frozenset = frozenset()
    require_edges: frozenset = frozenset()
    forbid_edges: frozenset = frozenset()

    def __post_init__(self) -> None:
        for name in ("removed", "require_covered", "require_uncovered"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        for name in ("require_edges", "forbid_edges"):
            object.__setattr__(self, name, frozenset(_ekey(e) for e in getattr(self, name)))
        for e in self.require_edges | self.forbid_edges:
            if len(e) != 2:
                raise ConstraintError(f"not an edge: {tuple(e)!r}")
        touched = self.require_covered | self.require_uncovered
        for e in self.require_edges | self.forbid_edges:
            touched |= e
        if self.removed & touched:
            raise ConstraintError(f"removed vertices also constrained: {sorted(map(repr, self.removed & touched))}")
        if self.require_covered & self.require_uncovered:
            raise ConstraintError("a vertex cannot be both required covered and uncovered")
        if self.require_edges & self.forbid_edges:
            raise ConstraintError("an edge cannot be both required and forbidden")

    def check_against(self, graph: Graph) -> None:
        vs = set(graph.vertices)
        for v in self.removed | self.require_covered | self.require_uncovered:
            if v not in vs:
                raise ConstraintError(f"unknown vertex {v!r}")
        for e in self.require_edges | self.forbid_edges:
            if not graph.has_edge(*tuple(e)):
                raise ConstraintError(f"unknown edge {tuple(e)!r}")


NO_CONSTRAINTS = ConstraintSet()


class MMVector(NamedTuple):
    """Maximal matching vector for a marked edge xy."""

    whole: int
    minus_x: int
    minus_y: int
    minus_xy: int
    cover_xy: int
    minus_x_cover_y: int
    minus_y_cover_x: int
    cover_x: int
    cover_y: int


# (removed, required covered) per component, in terms of the marked edge xy
COMPONENT_CONDITIONS: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...] = (
    ((), ()),
    (("x",), ()),
    (("y",), ()),
    (("x", "y"), ()),
    ((), ("x", "y")),
    (("x",), ("y",)),
    (("y",), ("x",)),
    ((), ("x",)),
    ((), ("y",)),
)


# -- backend selection -------------------------------------------------------

_BACKENDS = {"python": _pykernel}
if _ckernel is not None:
    _BACKENDS["cython"] = _ckernel

_active = "python" if os.getenv("POLYRING_PURE_PYTHON") or _ckernel is None else "cython"


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def backend() -> str:
    return _active


def set_backend(name: str) -> str:
    """Select the counting kernel; returns the previous choice."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    prev, _active = _active, name
    return prev


# -- preparation -------------------------------------------------------------

@dataclass
class _Problem:
    live: list
    adj: list
    avail: list
    must: int
    D: int
    U: int
    pre: list  # required edges, as vertex pairs


def _prepare(graph: Graph, cons: ConstraintSet) -> Optional[_Problem]:
    """Translate to bitmasks; ``None`` means no matching can qualify."""
    cons.check_against(graph)
    live = [v for v in graph.vertices if v not in cons.removed]
    idx = {v: j for j, v in enumerate(live)}
    adj = [0] * len(live)
    avail = [0] * len(live)
    for u, v in graph.edges:
        if u in idx and v in idx:
            iu, iv = idx[u], idx[v]
            adj[iu] |= 1 << iv
            adj[iv] |= 1 << iu
            if _ekey((u, v)) not in cons.forbid_edges:
                avail[iu] |= 1 << iv
                avail[iv] |= 1 << iu
    covered = 0
    pre = []
    for e in sorted(cons.require_edges, key=lambda e: sorted(idx[x] for x in e)):
        u, v = sorted(e, key=idx.__getitem__)
        bits = (1 << idx[u]) | (1 << idx[v])
        if covered & bits:
            return None
        covered |= bits
        pre.append((u, v))
    U = 0
    for v in cons.require_uncovered:
        U |= 1 << idx[v]
    if U & covered:
        return None
    for j in range(len(live)):
        if U >> j & 1 and adj[j] & U:
            return None
    must = 0
    for v in cons.require_covered:
        must |= 1 << idx[v]
    must &= ~covered
    D = ((1 << len(live)) - 1) & ~covered & ~U
    return _Problem(live, adj, avail, must, D, U, pre)


def _as_constraints(constraints: Optional[ConstraintSet], kw: dict) -> ConstraintSet:
    if constraints is not None and kw:
        raise TypeError("pass either a ConstraintSet or keyword constraints, not both")
    return constraints if constraints is not None else ConstraintSet(**kw) if kw else NO_CONSTRAINTS


def count_maximal(graph: Graph, constraints: Optional[ConstraintSet] = None, **kw) -> int:
    """Number of maximal matchings of ``graph - removed`` meeting the constraints.

    Keyword arguments are forwarded to :class:`ConstraintSet`.
    """
    cons = _as_constraints(constraints, kw)
    prob = _prepare(graph, cons)
    if prob is None:
        return 0
    kernel = _BACKENDS[_active]
    if kernel is not _pykernel and len(prob.live) > kernel.MAX_VERTICES:
        kernel = _pykernel
    return kernel.count(prob.adj, prob.avail, prob.must, prob.D, prob.U)


def iter_maximal(graph: Graph, constraints: Optional[ConstraintSet] = None, **kw) -> Iterator[frozenset]:
    """Stream the qualifying maximal matchings as frozensets of edges.

    Edges are returned in the orientation they have in ``graph.edges``.
    Order is deterministic (depth-first, lowest vertex first).
    """
    cons = _as_constraints(constraints, kw)
    prob = _prepare(graph, cons)
    if prob is None:
        return
    orient = {_ekey(e): tuple(e) for e in graph.edges}
    pre = [orient[_ekey(e)] for e in prob.pre]
    live = prob.live
    for pairs in _pykernel.enumerate_matchings(prob.adj, prob.avail, prob.must, prob.D, prob.U):
        yield frozenset(pre + [orient[_ekey((live[v], live[u]))] for v, u in pairs])


def count_maximal_naive(graph: Graph, constraints: Optional[ConstraintSet] = None, **kw) -> int:
    """Reference count: test every edge subset of ``graph - removed``."""
    cons = _as_constraints(constraints, kw)
    cons.check_against(graph)
    live = [v for v in graph.vertices if v not in cons.removed]
    liveset = set(live)
    edges = [e for e in graph.edges if e[0] in liveset and e[1] in liveset]
    m = len(edges)
    if m > NAIVE_MAX_EDGES:
        raise ValueError(f"naive filter limited to {NAIVE_MAX_EDGES} edges, graph has {m}")
    subsets = np.arange(1 << m, dtype=np.int64)
    chosen = [((subsets >> j) & 1).astype(np.uint8) for j in range(m)]
    cover = {v: np.zeros(1 << m, dtype=np.uint8) for v in live}
    for j, (u, v) in enumerate(edges):
        cover[u] += chosen[j]
        cover[v] += chosen[j]
    ok = np.ones(1 << m, dtype=bool)
    for v in live:
        ok &= cover[v] <= 1
    for u, v in edges:
        ok &= (cover[u] + cover[v]) >= 1
    for v in cons.require_covered:
        ok &= cover[v] == 1
    for v in cons.require_uncovered:
        ok &= cover[v] == 0
    for j, e in enumerate(edges):
        key = _ekey(e)
        if key in cons.require_edges:
            ok &= chosen[j] == 1
        elif key in cons.forbid_edges:
            ok &= chosen[j] == 0
    return int(ok.sum())


def is_maximal(graph: Graph, matching: Iterable) -> bool:
    """True iff ``matching`` is a matching of ``graph`` that no edge can extend."""
    covered: set = set()
    for e in matching:
        u, v = tuple(e)
        if not graph.has_edge(u, v):
            raise ValueError(f"{(u, v)!r} is not an edge of the graph")
        if u in covered or v in covered:
            return False
        covered.update((u, v))
    return all(u in covered or v in covered for u, v in graph.edges)


def component_constraints(j: int, x, y) -> ConstraintSet:
    """Constraints for component ``j`` (0-based) of the vector on edge xy."""
    name = {"x": x, "y": y}
    removed, cov = COMPONENT_CONDITIONS[j]
    return ConstraintSet(
        removed=frozenset(name[s] for s in removed),
        require_covered=frozenset(name[s] for s in cov),
    )


def mm_vector(graph: Graph, x, y, constraints: Optional[ConstraintSet] = None) -> MMVector:
    """The nine constrained counts for edge xy, in the fixed component order.

    Extra ``constraints`` (which must not touch x or y) are merged into
    every component.
    """
    if not graph.has_edge(x, y):
        raise ValueError(f"{(x, y)!r} is not an edge")
    base = constraints or NO_CONSTRAINTS
    out = []
    for j in range(9):
        c = component_constraints(j, x, y)
        merged = ConstraintSet(
            removed=base.removed | c.removed,
            require_covered=base.require_covered | c.require_covered,
            require_uncovered=base.require_uncovered,
            require_edges=base.require_edges,
            forbid_edges=base.forbid_edges,
        )
        out.append(count_maximal(graph, merged))
    return MMVector(*out)
