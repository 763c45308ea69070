"""Self-check suites: transfer formulas against the enumeration oracle.

Each suite returns a :class:`SuiteResult`; on failure ``detail`` names the
first (smallest) counterexample found.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from . import matgen, transfer
from .notation import ChainSpec, FaceSpec, RingSpec, format_spec, rotate
from .oracle import ConstraintSet, count_maximal, mm_vector
from .polygraph import build_chain, build_gadget, build_ring, cycle_graph, glue_on_edge, path_graph

__all__ = ["SuiteResult", "run_all", "SUITES", "diagonal_cases", "gluing_graphs",
           "face_types", "chain_specs", "ring_specs"]

EXHAUSTIVE_LIMIT = 400


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""


@dataclass
class Config:
    max_faces: int = 4
    sizes: tuple = (4, 5, 6, 7)
    seed: int = 0
    samples: int = 100


def face_types(sizes: Iterable[int]) -> list[FaceSpec]:
    return [FaceSpec(s, k) for s in sizes for k in range(1, s - 2)]


def _sample(pool: list, n: int, rng: random.Random, samples: int) -> list[tuple]:
    total = len(pool) ** n
    if total <= max(EXHAUSTIVE_LIMIT, samples):
        return list(itertools.product(pool, repeat=n))
    picked = set()
    while len(picked) < samples:
        picked.add(tuple(rng.randrange(len(pool)) for _ in range(n)))
    return [tuple(pool[j] for j in combo) for combo in sorted(picked)]


def ring_specs(n: int, sizes: Sequence[int], rng: random.Random, samples: int) -> list[RingSpec]:
    return [RingSpec(faces) for faces in _sample(face_types(sizes), n, rng, samples)]


def chain_specs(n: int, sizes: Sequence[int], rng: random.Random, samples: int) -> list[ChainSpec]:
    ends = [FaceSpec(s) for s in sizes]
    inner = face_types(sizes)
    if n == 1:
        return [ChainSpec((f,)) for f in ends]
    out = []
    for first, last in itertools.product(ends, repeat=2):
        for mid in _sample(inner, n - 2, rng, max(1, samples // len(ends) ** 2)):
            out.append(ChainSpec((first,) + tuple(mid) + (last,)))
    return out


def gluing_graphs():
    """Small graphs K with a marked edge (1, 2) to glue onto dc."""
    return {"K2": path_graph(2), "P3": path_graph(3), "C4": cycle_graph(4), "C5": cycle_graph(5)}


def diagonal_cases(g) -> list[tuple[int, ConstraintSet]]:
    """The nine constrained counts of a ring split around its adhesive edge.

    Each entry is ``(diagonal index 1..9, constraints)``; together they
    partition the maximal matchings of the ring.
    """
    mk = g.marks
    e, d, c, f = mk["e"], mk["d"], mk["c"], mk["f"]
    ed, fc = (e, d), (f, c)
    C = ConstraintSet
    return [
        (4, C(require_edges={ed, fc})),
        (2, C(require_edges={ed}, forbid_edges={fc}, require_covered={f})),
        (6, C(require_edges={ed}, forbid_edges={fc}, require_uncovered={f})),
        (3, C(require_edges={fc}, forbid_edges={ed}, require_covered={e})),
        (7, C(require_edges={fc}, forbid_edges={ed}, require_uncovered={e})),
        (1, C(forbid_edges={ed, fc}, require_covered={e, f})),
        (9, C(forbid_edges={ed, fc}, require_covered={e}, require_uncovered={f})),
        (8, C(forbid_edges={ed, fc}, require_covered={f}, require_uncovered={e})),
        (5, C(forbid_edges={ed, fc}, require_uncovered={e, f})),
    ]


def _suite(name: str, checks: Iterable[tuple[str, Callable[[], Optional[str]]]]) -> SuiteResult:
    n = 0
    for label, check in checks:
        n += 1
        problem = check()
        if problem:
            return SuiteResult(name, False, n, f"{label}: {problem}")
    return SuiteResult(name, True, n)


def _ne(a, b) -> Optional[str]:
    return None if a == b else f"{a} != {b}"


def suite_regeneration(cfg: Config) -> SuiteResult:
    def check(k):
        gen = matgen.transition_matrix(6, k)
        ref = transfer.HEXAGONAL[k]
        for r in range(9):
            for col in range(9):
                if gen[r][col] != ref[r][col]:
                    return f"entry [{r + 1},{col + 1}] generated {gen[r][col]}, hard-coded {ref[r][col]}"
        return None

    names = {1: "L", 2: "S", 3: "R"}
    return _suite("regeneration", ((f"T(6,{k}) vs {names[k]}", lambda k=k: check(k)) for k in (1, 2, 3)))


def suite_boundary(cfg: Config) -> SuiteResult:
    S, X, Y = transfer.HEXAGONAL[2], transfer.X, transfer.Y
    checks = [
        ("X*S", lambda: _ne(transfer.vec_mat(X, S), (1, 1, 1, 1, 1, 1, 1, 0, 0))),
        ("S*Y", lambda: _ne(transfer.mat_vec(S, Y), (5, 3, 3, 2, 3, 2, 2, 4, 4))),
        ("mm_vector(K2)", lambda: _ne(tuple(mm_vector(path_graph(2), 1, 2)), Y)),
    ]
    return _suite("boundary", checks)


def suite_matgen_rows(cfg: Config) -> SuiteResult:
    def check(m, i):
        T = matgen.transition_matrix(m, i)
        g = build_gadget(m, i)
        for row in matgen.ROW_CONDITIONS:
            want = count_maximal(
                g,
                removed={g.marks[s] for s in row.removed},
                require_covered={g.marks[s] for s in row.covered},
            )
            if sum(T[row.index - 1]) != want:
                return f"row {row.index} sums to {sum(T[row.index - 1])}, oracle {want}"
        return None

    return _suite("matgen-rows", ((f"T({m},{i})", lambda m=m, i=i: check(m, i))
                                  for m in cfg.sizes for i in range(1, m - 2)))


def suite_terminal(cfg: Config) -> SuiteResult:
    def check(m):
        mats = [matgen.transition_matrix(m, i) for i in range(1, m - 2)]
        rows = {transfer.vec_mat(transfer.X, T) for T in mats}
        cols = {transfer.mat_vec(T, transfer.Y) for T in mats}
        if len(rows) != 1 or len(cols) != 1:
            return "X*T or T*Y depends on the offset"
        want = count_maximal(cycle_graph(m))
        for i, T in enumerate(mats, start=1):
            got = transfer.mat_mul(transfer.vec_mat(transfer.X, T), transfer.Y)
            if got != want:
                return f"X*T({m},{i})*Y = {got}, oracle C_{m} = {want}"
        return None

    return _suite("terminal", ((f"m={m}", lambda m=m: check(m)) for m in cfg.sizes))


def suite_chain_sweep(cfg: Config) -> SuiteResult:
    rng = random.Random(cfg.seed)

    def checks():
        for n in range(1, cfg.max_faces + 1):
            for spec in chain_specs(n, cfg.sizes, rng, cfg.samples):
                yield format_spec(spec), lambda spec=spec: _ne(
                    transfer.count_chain(spec), count_maximal(build_chain(spec)))

    return _suite("chain-sweep", checks())


def suite_ring_sweep(cfg: Config) -> SuiteResult:
    rng = random.Random(cfg.seed + 1)

    def checks():
        for n in range(3, max(3, cfg.max_faces) + 1):
            for spec in ring_specs(n, cfg.sizes, rng, cfg.samples):
                yield format_spec(spec), lambda spec=spec: _ne(
                    transfer.count_ring(spec), count_maximal(build_ring(spec)))

    return _suite("ring-sweep", checks())


def suite_rotation(cfg: Config) -> SuiteResult:
    rng = random.Random(cfg.seed + 2)

    def check(spec):
        base = transfer.count_ring(spec)
        for j in range(1, len(spec)):
            got = transfer.count_ring(rotate(spec, j))
            if got != base:
                return f"rotation {j} gives {got}, unrotated {base}"
        return _ne(count_maximal(build_ring(rotate(spec, 1))), base)

    def checks():
        for n in range(3, max(3, min(cfg.max_faces, 5)) + 1):
            for spec in ring_specs(n, cfg.sizes, rng, max(1, cfg.samples // 4)):
                yield format_spec(spec), lambda spec=spec: check(spec)

    return _suite("rotation", checks())


def suite_gluing(cfg: Config) -> SuiteResult:
    rng = random.Random(cfg.seed + 3)
    ks = gluing_graphs()

    def check(spec):
        g = build_chain(spec)
        M = transfer.mat_prod(transfer.face_matrices(spec))
        (a, b), (d, c) = g.terminal_edges
        for name, K in ks.items():
            F = glue_on_edge(g, (d, c), K, (1, 2))
            left = tuple(mm_vector(F, a, b))
            right = transfer.mat_vec(M, tuple(mm_vector(K, 1, 2)))
            if left != right:
                return f"K={name}: oracle {left}, matrix {right}"
        return None

    def checks():
        for n in range(1, min(cfg.max_faces, 4) + 1):
            for spec in chain_specs(n, cfg.sizes, rng, max(1, cfg.samples // 4)):
                yield format_spec(spec), lambda spec=spec: check(spec)

    return _suite("gluing", checks())


def suite_trace_decomposition(cfg: Config) -> SuiteResult:
    rng = random.Random(cfg.seed + 4)

    def check(spec):
        g = build_ring(spec)
        M = transfer.ring_product(spec)
        total = 0
        for j, cons in diagonal_cases(g):
            got = count_maximal(g, cons)
            total += got
            if got != M[j - 1][j - 1]:
                return f"case M[{j},{j}]: oracle {got}, matrix {M[j - 1][j - 1]}"
        return _ne(total, transfer.mat_trace(M))

    def checks():
        for n in range(3, max(3, min(cfg.max_faces, 4)) + 1):
            for spec in ring_specs(n, cfg.sizes, rng, max(1, cfg.samples // 2)):
                yield format_spec(spec), lambda spec=spec: check(spec)

    return _suite("trace-decomposition", checks())


SUITES = {
    "boundary": suite_boundary,
    "chain-sweep": suite_chain_sweep,
    "gluing": suite_gluing,
    "matgen-rows": suite_matgen_rows,
    "regeneration": suite_regeneration,
    "ring-sweep": suite_ring_sweep,
    "rotation": suite_rotation,
    "terminal": suite_terminal,
    "trace-decomposition": suite_trace_decomposition,
}


def run_all(max_faces: int = 4, sizes: Sequence[int] = (4, 5, 6, 7), seed: int = 0,
            samples: int = 100, only: Optional[Iterable[str]] = None) -> list[SuiteResult]:
    cfg = Config(max_faces, tuple(sizes), seed, samples)
    names = sorted(only) if only else sorted(SUITES)
    return [SUITES[name](cfg) for name in names]
