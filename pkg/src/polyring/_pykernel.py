"""Pure-Python maximal-matching kernel (fallback for ``_ckernel``).

Graphs arrive as bitmasks over vertex indices:

``adj[v]``
    all neighbours of ``v`` (maximality is judged against these)
``avail[v]``
    neighbours ``v`` may be matched to (``adj`` minus forbidden edges)
``must``
    vertices that have to end up covered
``D``
    undecided vertices
``U``
    vertices fixed as uncovered

The search takes the lowest undecided vertex ``v`` and either matches it
to an undecided partner or fixes it uncovered.  Fixing is allowed only if
``v`` is not in ``must`` and has no uncovered neighbour, so a finished
branch never leaves an edge with both ends uncovered.
"""
from __future__ import annotations

from typing import Iterator, Sequence

BACKEND = "python"


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def count(adj: Sequence[int], avail: Sequence[int], must: int, D: int, U: int) -> int:
    adj = list(adj)
    avail = list(avail)

    def rec(D: int, U: int) -> int:
        if not D:
            return 1
        vb = D & -D
        v = vb.bit_length() - 1
        rest = D ^ vb
        cand = avail[v] & rest
        forced = (must & vb) or (adj[v] & U)
        if forced and not cand:
            return 0
        total = 0
        while cand:
            ub = cand & -cand
            cand ^= ub
            total += rec(rest ^ ub, U)
        if not forced:
            nb = adj[v] & rest
            while nb:
                wb = nb & -nb
                nb ^= wb
                if not avail[wb.bit_length() - 1] & rest:
                    return total
            total += rec(rest, U | vb)
        return total

    return rec(D, U)


def enumerate_matchings(
    adj: Sequence[int], avail: Sequence[int], must: int, D: int, U: int
) -> Iterator[list[tuple[int, int]]]:
    """Yield each maximal matching as a list of ``(v, u)`` index pairs."""
    adj = list(adj)
    avail = list(avail)
    stack: list[tuple[int, int]] = []

    def rec(D: int, U: int):
        if not D:
            yield list(stack)
            return
        vb = D & -D
        v = vb.bit_length() - 1
        rest = D ^ vb
        cand = avail[v] & rest
        forced = (must & vb) or (adj[v] & U)
        if forced and not cand:
            return
        while cand:
            ub = cand & -cand
            cand ^= ub
            stack.append((v, ub.bit_length() - 1))
            yield from rec(rest ^ ub, U)
            stack.pop()
        if not forced:
            nb = adj[v] & rest
            while nb:
                wb = nb & -nb
                nb ^= wb
                if not avail[wb.bit_length() - 1] & rest:
                    return
            yield from rec(rest, U | vb)

    yield from rec(D, U)
