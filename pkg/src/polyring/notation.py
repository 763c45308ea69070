"""Connection-type strings for polygon chains and rings.

A face is written ``t(s,k)``: an ``s``-cycle whose exiting shared edge lies
``k`` edges clockwise past its entering shared edge.  Chain terminals carry
the wildcard ``t(s,*)``.  Hexagonal shorthand ``t(j)`` stands for ``t(6,j)``.

    spec  := token+
    token := "t(" int ("," (int | "*"))? ")"

Whitespace between tokens is ignored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

__all__ = [
    "FaceSpec",
    "ChainSpec",
    "RingSpec",
    "SpecError",
    "SpecSyntaxError",
    "SpecRangeError",
    "SpecStructureError",
    "parse_chain",
    "parse_ring",
    "parse_spec",
    "format_spec",
    "rotate",
]

WILDCARD = "*"


class SpecError(ValueError):
    """Base class for every rejected connection-type string."""


class SpecSyntaxError(SpecError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SpecRangeError(SpecError):
    pass


class SpecStructureError(SpecError):
    pass


@dataclass(frozen=True)
class FaceSpec:
    """One face: cycle length and clockwise offset (``None`` is the wildcard)."""

    size: int
    offset: Optional[int] = None

    def __post_init__(self) -> None:
        if self.size < 4:
            raise SpecRangeError(f"face size {self.size} < 4")
        if self.offset is not None and not 1 <= self.offset <= self.size - 3:
            raise SpecRangeError(
                f"offset {self.offset} outside [1, {self.size - 3}] for size {self.size}"
            )

    @property
    def is_terminal(self) -> bool:
        return self.offset is None

    def __str__(self) -> str:
        k = WILDCARD if self.offset is None else str(self.offset)
        return f"t({self.size},{k})"


@dataclass(frozen=True)
class ChainSpec:
    faces: tuple[FaceSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "faces", tuple(self.faces))
        n = len(self.faces)
        if n == 0:
            raise SpecStructureError("a chain needs at least one face")
        if n == 1:
            if not self.faces[0].is_terminal:
                raise SpecStructureError("a single-face chain must be written t(s,*)")
            return
        if not (self.faces[0].is_terminal and self.faces[-1].is_terminal):
            raise SpecStructureError("chain terminals must use the wildcard offset '*'")
        for j, face in enumerate(self.faces[1:-1], start=2):
            if face.is_terminal:
                raise SpecStructureError(f"wildcard offset on interior face {j}")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(f.size for f in self.faces)

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class RingSpec:
    faces: tuple[FaceSpec, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "faces", tuple(self.faces))
        if len(self.faces) < 3:
            raise SpecStructureError(f"a ring needs at least 3 faces, got {len(self.faces)}")
        for j, face in enumerate(self.faces, start=1):
            if face.is_terminal:
                raise SpecStructureError(f"wildcard offset on ring face {j}")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(f.size for f in self.faces)

    def __len__(self) -> int:
        return len(self.faces)


Spec = Union[ChainSpec, RingSpec]

_TOKEN = re.compile(r"t\((\d+)(?:,(\d+|\*))?\)")
_SPACE = re.compile(r"\s*")


def _tokens(text: str) -> list[tuple[int, Optional[int], bool]]:
    """Scan ``text`` into ``(size, offset, shorthand)`` triples."""
    if not text or not text.strip():
        raise SpecSyntaxError("empty connection-type string", 0)
    out = []
    pos = _SPACE.match(text, 0).end()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SpecSyntaxError(f"expected token 't(...)', found {text[pos:pos + 8]!r}", pos)
        first, second = m.group(1), m.group(2)
        if second is None:
            j = int(first)
            if j not in (1, 2, 3):
                raise SpecRangeError(f"hexagonal shorthand t({j}) needs j in 1..3")
            out.append((6, j, True))
        else:
            out.append((int(first), None if second == WILDCARD else int(second), False))
        pos = _SPACE.match(text, m.end()).end()
    return out


def parse_chain(text: str) -> ChainSpec:
    """Parse a chain type such as ``t(7,*)t(5,2)t(6,*)``.

    A string made only of hexagonal shorthand tokens lists the interior
    faces and is padded with ``t(6,*)`` terminals.
    """
    toks = _tokens(text)
    if all(short for _, _, short in toks):
        faces = [FaceSpec(6)] + [FaceSpec(6, k) for _, k, _ in toks] + [FaceSpec(6)]
    else:
        faces = [FaceSpec(s, k) for s, k, _ in toks]
    return ChainSpec(tuple(faces))


def parse_ring(text: str) -> RingSpec:
    return RingSpec(tuple(FaceSpec(s, k) for s, k, _ in _tokens(text)))


def parse_spec(kind: str, text: str) -> Spec:
    if kind == "chain":
        return parse_chain(text)
    if kind == "ring":
        return parse_ring(text)
    raise ValueError(f"unknown spec kind {kind!r}")


def format_spec(spec: Spec) -> str:
    return "".join(str(f) for f in spec.faces)


def rotate(spec: RingSpec, j: int) -> RingSpec:
    """Start the ring at face ``j`` (0-based) instead of face 0."""
    n = len(spec.faces)
    j %= n
    return RingSpec(spec.faces[j:] + spec.faces[:j])
