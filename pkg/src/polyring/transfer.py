"""9x9 transfer matrices over exact integers and the chain/ring formulas.

Matrices are tuples of nine 9-tuples of Python ints; rows and columns are
numbered 1..9 in messages.  Chains fold a row vector left to right; rings
form the full product (balanced, so big-number multiplications happen on
operands of similar size) and take its trace.
"""
from __future__ import annotations

import json
import sys
from operator import mul
from typing import Callable, Optional, Sequence

from . import matgen
from .notation import ChainSpec, FaceSpec, RingSpec
from .polygraph import chain_offsets

__all__ = [
    "S", "L", "R", "X", "Y", "IDENTITY",
    "mat_mul", "mat_trace", "mat_prod", "vec_mat", "mat_vec",
    "matrix_for", "face_matrices", "count_chain", "count_ring", "chain_vector",
    "ring_product", "format_matrix", "parse_matrix", "matrix_to_json",
    "matrix_from_json", "MatrixFormatError", "to_decimal", "from_decimal",
]

Matrix = tuple  # tuple[tuple[int, ...], ...]


def _m(rows: str) -> Matrix:
    return tuple(tuple(int(c) for c in r) for r in rows.split())


S = _m("""
111111100 010100110 001101001 000111100 100111100
010000010 001000001 101111100 110111100
""")
L = _m("""
111111100 101000001 010100110 101000000 101101000
001000001 010100000 111101000 101111100
""")
R = _m("""
111111100 001101001 110000010 110000000 110100100
001100000 010000010 110111100 111100100
""")
X = (1, 0, 0, 0, 0, 0, 0, 0, 0)
Y = (1, 1, 1, 1, 1, 0, 0, 1, 1)
IDENTITY = tuple(tuple(int(r == c) for c in range(9)) for r in range(9))

HEXAGONAL = {1: L, 2: S, 3: R}


def vec_mat(v: Sequence[int], A: Matrix) -> tuple:
    """Row vector times matrix."""
    return tuple(sum(map(mul, v, col)) for col in zip(*A))


def mat_vec(A: Matrix, v: Sequence[int]) -> tuple:
    """Matrix times column vector."""
    return tuple(sum(map(mul, row, v)) for row in A)


def mat_mul(A, B):
    """Exact product.  A flat ``A`` is a row vector, a flat ``B`` a column
    vector; two flat operands give their dot product."""
    a_flat = not isinstance(A[0], (tuple, list))
    b_flat = not isinstance(B[0], (tuple, list))
    if a_flat and b_flat:
        return sum(map(mul, A, B))
    if a_flat:
        return vec_mat(A, B)
    if b_flat:
        return mat_vec(A, B)
    cols = tuple(zip(*B))
    return tuple(tuple(sum(map(mul, row, col)) for col in cols) for row in A)


def mat_trace(A: Matrix) -> int:
    return sum(A[j][j] for j in range(len(A)))


def mat_prod(mats: Sequence[Matrix]) -> Matrix:
    """Ordered product of ``mats`` by pairwise reduction."""
    layer = list(mats)
    if not layer:
        return IDENTITY
    while len(layer) > 1:
        nxt = [mat_mul(layer[j], layer[j + 1]) for j in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


Provider = Callable[[int, int], Matrix]


def default_provider(m: int, i: int) -> Matrix:
    if m == 6 and i in HEXAGONAL:
        return HEXAGONAL[i]
    return matgen.transition_matrix(m, i)


def matrix_for(face: FaceSpec, provider: Optional[Provider] = None) -> Matrix:
    if face.offset is None:
        raise ValueError(f"{face} has a wildcard offset; resolve terminals first")
    return (provider or default_provider)(face.size, face.offset)


def face_matrices(spec, provider: Optional[Provider] = None) -> list[Matrix]:
    """One matrix per face; chain terminals use offset 1."""
    p = provider or default_provider
    if isinstance(spec, ChainSpec):
        return [p(s, k) for s, k in zip(spec.sizes, chain_offsets(spec))]
    return [p(f.size, f.offset) for f in spec.faces]


def chain_vector(spec: ChainSpec, provider: Optional[Provider] = None) -> tuple:
    """The 9-vector of the chain on its terminal edge ab (column fold)."""
    v = Y
    for T in reversed(face_matrices(spec, provider)):
        v = mat_vec(T, v)
    return v


def count_chain(spec: ChainSpec, provider: Optional[Provider] = None) -> int:
    v = X
    for T in face_matrices(spec, provider):
        v = vec_mat(v, T)
    return sum(map(mul, v, Y))


def ring_product(spec: RingSpec, provider: Optional[Provider] = None) -> Matrix:
    return mat_prod(face_matrices(spec, provider))


def count_ring(spec: RingSpec, provider: Optional[Provider] = None) -> int:
    return mat_trace(ring_product(spec, provider))


class MatrixFormatError(ValueError):
    pass


def format_matrix(T: Matrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in T) + "\n"


def parse_matrix(text: str) -> Matrix:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if len(rows) != 9 or any(len(r) != 9 for r in rows):
        raise MatrixFormatError("expected 9 lines of 9 integers")
    try:
        out = tuple(tuple(int(x) for x in r) for r in rows)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from None
    if any(x < 0 for r in out for x in r):
        raise MatrixFormatError("entries must be non-negative")
    return out


def matrix_to_json(T: Matrix, size: Optional[int] = None, offset: Optional[int] = None) -> str:
    return json.dumps({"size": size, "offset": offset, "rows": [list(r) for r in T]})


def matrix_from_json(text: str) -> tuple[Optional[int], Optional[int], Matrix]:
    obj = json.loads(text)
    rows = obj.get("rows")
    if not isinstance(rows, list) or len(rows) != 9 or any(
        not isinstance(r, list) or len(r) != 9 for r in rows
    ):
        raise MatrixFormatError("'rows' must be a 9x9 list")
    return obj.get("size"), obj.get("offset"), tuple(tuple(int(x) for x in r) for r in rows)


def to_decimal(n: int) -> str:
    """``str(n)`` without the interpreter's digit limit for huge counts."""
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        return str(n)
    old = getter()
    sys.set_int_max_str_digits(0)
    try:
        return str(n)
    finally:
        sys.set_int_max_str_digits(old)


def from_decimal(text: str) -> int:
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        return int(text)
    old = getter()
    sys.set_int_max_str_digits(0)
    try:
        return int(text)
    finally:
        sys.set_int_max_str_digits(old)
