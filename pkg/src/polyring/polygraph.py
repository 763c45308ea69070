"""Explicit labeled graphs for polygon chains, rings and the matrix gadget.

Every face is laid out with positions ``0..s-1`` in clockwise order::

    a = 0,  d = k,  c = k + 1,  b = s - 1

so the entering shared edge is traversed ``b -> a``, the exiting one
``d -> c``, and exactly ``k`` edges run clockwise from ``a`` to ``d``.
The next face takes ``a' = d`` and ``b' = c`` and therefore traverses the
shared edge ``c -> d``, opposite to its predecessor as a planar drawing
requires.  Vertex labels are ``(face index, position)`` of the face that
first introduced the vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional, Sequence

from .notation import ChainSpec, RingSpec

__all__ = [
    "Graph",
    "MarkedGraph",
    "GraphError",
    "build_chain",
    "build_ring",
    "build_gadget",
    "glue_on_edge",
    "cycle_graph",
    "path_graph",
    "dump_graph",
    "read_edge_list",
]

Vertex = Hashable
Edge = tuple  # (u, v)

TERMINAL_OFFSET = 1


class GraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph; vertex order is the enumeration order."""

    vertices: tuple
    edges: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise GraphError("duplicate vertex labels")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at {u!r}")
            if u not in vs or v not in vs:
                raise GraphError(f"edge {(u, v)!r} has an unknown endpoint")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"parallel edge {(u, v)!r}")
            seen.add(key)
        object.__setattr__(self, "_edge_keys", frozenset(seen))

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Optional[Sequence] = None) -> "Graph":
        edges = [tuple(e) for e in edges]
        if vertices is None:
            vertices = []
            for e in edges:
                for x in e:
                    if x not in vertices:
                        vertices.append(x)
        return cls(tuple(vertices), tuple(edges))

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self._edge_keys

    def neighbors(self, v) -> list:
        out = []
        for x, y in self.edges:
            if x == v:
                out.append(y)
            elif y == v:
                out.append(x)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self._edge_keys == other._edge_keys

    def __repr__(self) -> str:
        return f"{type(self).__name__}(|V|={len(self.vertices)}, |E|={len(self.edges)})"


@dataclass(frozen=True, eq=False, repr=False)
class MarkedGraph(Graph):
    """A graph plus the face cycles and distinguished edges/vertices.

    ``shared_edges[j]`` is e_{j+1}, stored in the orientation the face ``j``
    traverses it as (a, b); for chains ``shared_edges[0]`` is ``None``.
    ``marks`` names special vertices: a, b, c, d always, plus e, f for rings
    (around the adhesive edge) and e, f, k1, k2 for the gadget.
    """

    faces: tuple = ()
    shared_edges: tuple = ()
    terminal_edges: Optional[tuple] = None
    marks: dict = field(default_factory=dict)
    kind: str = "graph"


def _face_layouts(sizes: Sequence[int], offsets: Sequence[int], ring: bool):
    faces = []
    prev_dc = None
    for j, (s, k) in enumerate(zip(sizes, offsets)):
        cyc = [(j, p) for p in range(s)]
        if prev_dc is not None:
            cyc[0], cyc[s - 1] = prev_dc
        prev_dc = (cyc[k], cyc[k + 1])
        faces.append(cyc)
    if ring:
        a0, b0 = faces[0][0], faces[0][-1]
        last, k = faces[-1], offsets[-1]
        last[k], last[k + 1] = a0, b0
    return faces


def _assemble(faces, kind, shared, terminal, marks) -> MarkedGraph:
    vertices, seen = [], set()
    edges, ekeys = [], set()
    for cyc in faces:
        for v in cyc:
            if v not in seen:
                seen.add(v)
                vertices.append(v)
        for p in range(len(cyc)):
            u, v = cyc[p], cyc[(p + 1) % len(cyc)]
            key = frozenset((u, v))
            if len(key) < 2:
                raise GraphError("gluing conflict: loop")
            if key not in ekeys:
                ekeys.add(key)
                edges.append((u, v))
    return MarkedGraph(
        tuple(vertices),
        tuple(edges),
        faces=tuple(tuple(c) for c in faces),
        shared_edges=tuple(shared),
        terminal_edges=terminal,
        marks=marks,
        kind=kind,
    )


def chain_offsets(spec: ChainSpec) -> list[int]:
    """Face offsets with the terminal wildcards resolved."""
    return [TERMINAL_OFFSET if f.offset is None else f.offset for f in spec.faces]


def build_chain(spec: ChainSpec) -> MarkedGraph:
    sizes, offsets = spec.sizes, chain_offsets(spec)
    faces = _face_layouts(sizes, offsets, ring=False)
    shared = [None] + [(cyc[0], cyc[-1]) for cyc in faces[1:]]
    first, last = faces[0], faces[-1]
    kl = offsets[-1]
    ab = (first[0], first[-1])
    dc = (last[kl], last[kl + 1])
    marks = {"a": ab[0], "b": ab[1], "d": dc[0], "c": dc[1]}
    return _assemble(faces, "chain", shared, (ab, dc), marks)


def build_ring(spec: RingSpec) -> MarkedGraph:
    sizes = spec.sizes
    offsets = [f.offset for f in spec.faces]
    faces = _face_layouts(sizes, offsets, ring=True)
    shared = [(cyc[0], cyc[-1]) for cyc in faces]
    last, k = faces[-1], offsets[-1]
    # the adhesive edge seen from the last face: d -> c, with e and f its
    # other polygon neighbours on that face
    marks = {
        "d": last[k],
        "c": last[k + 1],
        "e": last[k - 1],
        "f": last[k + 2],
        "a": faces[0][0],
        "b": faces[0][-1],
    }
    g = _assemble(faces, "ring", shared, None, marks)
    expected_v = sum(sizes) - 2 * len(sizes)
    if len(g.vertices) != expected_v or len(g.edges) != sum(sizes) - len(sizes):
        raise GraphError("gluing conflict: identification merged extra vertices or edges")
    return g


def build_gadget(m: int, i: int) -> MarkedGraph:
    """The m-cycle with dc deleted and pendants k1 on d, k2 on c."""
    if m < 4 or not 1 <= i <= m - 3:
        raise GraphError(f"gadget needs m >= 4 and 1 <= i <= m-3, got m={m}, i={i}")
    cyc = [(0, p) for p in range(m)]
    a, b, d, c = cyc[0], cyc[-1], cyc[i], cyc[i + 1]
    k1, k2 = (1, 0), (1, 1)
    edges = [(cyc[p], cyc[(p + 1) % m]) for p in range(m) if p != i]
    edges += [(d, k1), (c, k2)]
    marks = {"a": a, "b": b, "d": d, "c": c, "e": cyc[i - 1], "f": cyc[i + 2], "k1": k1, "k2": k2}
    return MarkedGraph(
        tuple(cyc) + (k1, k2),
        tuple(edges),
        faces=(tuple(cyc),),
        shared_edges=(),
        terminal_edges=((a, b), (d, c)),
        marks=marks,
        kind="gadget",
    )


def glue_on_edge(base: Graph, edge: Edge, other: Graph, other_edge: Edge) -> MarkedGraph:
    """Identify ``other_edge`` of ``other`` with ``edge`` of ``base``.

    The first endpoints are merged with each other, and so are the second.
    Remaining vertices of ``other`` become ``("K", v)``.
    """
    if not base.has_edge(*edge) or not other.has_edge(*other_edge):
        raise GraphError("gluing edge missing")
    rename = {other_edge[0]: edge[0], other_edge[1]: edge[1]}
    for v in other.vertices:
        rename.setdefault(v, ("K", v))
    vertices = list(base.vertices) + [rename[v] for v in other.vertices if v not in other_edge]
    edges = list(base.edges)
    for u, v in other.edges:
        if {u, v} != set(other_edge):
            edges.append((rename[u], rename[v]))
    marks = dict(getattr(base, "marks", {}))
    return MarkedGraph(
        tuple(vertices),
        tuple(edges),
        faces=getattr(base, "faces", ()),
        shared_edges=getattr(base, "shared_edges", ()),
        terminal_edges=getattr(base, "terminal_edges", None),
        marks=marks,
        kind="glued",
    )


def cycle_graph(n: int) -> Graph:
    return Graph(tuple(range(1, n + 1)), tuple((j, j % n + 1) for j in range(1, n + 1)))


def path_graph(n: int) -> Graph:
    return Graph(tuple(range(1, n + 1)), tuple((j, j + 1) for j in range(1, n)))


def _fmt(v) -> str:
    if isinstance(v, tuple):
        return ".".join(_fmt(x) for x in v)
    return str(v)


def dump_graph(g: Graph) -> str:
    """Edge list, one ``u v`` per line, after a ``#`` header of marks."""
    lines = [f"# kind {getattr(g, 'kind', 'graph')}", f"# vertices {len(g.vertices)}",
             f"# edges {len(g.edges)}"]
    for name, v in sorted(getattr(g, "marks", {}).items()):
        lines.append(f"# mark {name} {_fmt(v)}")
    for j, e in enumerate(getattr(g, "shared_edges", ()), start=1):
        if e is not None:
            lines.append(f"# shared e{j} {_fmt(e[0])} {_fmt(e[1])}")
    term = getattr(g, "terminal_edges", None)
    if term:
        for name, e in zip(("ab", "dc"), term):
            lines.append(f"# terminal {name} {_fmt(e[0])} {_fmt(e[1])}")
    lines.append("# isolated " + " ".join(_fmt(v) for v in g.vertices if not g.neighbors(v)))
    lines.extend(f"{_fmt(u)} {_fmt(v)}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse the :func:`dump_graph` format (or any bare ``u v`` list).

    Labels come back as strings; mark headers are kept in ``marks``.
    """
    edges, marks, isolated = [], {}, []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 3 and parts[0] == "mark":
                marks[parts[1]] = parts[2]
            elif parts and parts[0] == "isolated":
                isolated.extend(parts[1:])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((parts[0], parts[1]))
    g = Graph.from_edges(edges)
    vertices = list(g.vertices) + [v for v in isolated if v not in g.vertices]
    return MarkedGraph(tuple(vertices), g.edges, marks=marks, kind="file")
