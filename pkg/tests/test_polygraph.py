import itertools

import pytest
from hypothesis import given, settings, strategies as st

from polyring.notation import ChainSpec, FaceSpec, RingSpec, parse_chain, parse_ring
from polyring.polygraph import (
    Graph, GraphError, build_chain, build_gadget, build_ring, cycle_graph, dump_graph,
    glue_on_edge, path_graph, read_edge_list,
)


def check_structure(g, sizes, ring):
    n = len(sizes)
    assert len(g.faces) == n
    for cyc, s in zip(g.faces, sizes):
        assert len(cyc) == s and len(set(cyc)) == s
        for p in range(s):
            assert g.has_edge(cyc[p], cyc[(p + 1) % s])
    on_faces = {}
    for j, cyc in enumerate(g.faces):
        for v in cyc:
            on_faces.setdefault(v, set()).add(j)
    assert max(len(f) for f in on_faces.values()) <= 2
    directed = [{(c[p], c[(p + 1) % len(c)]) for p in range(len(c))} for c in g.faces]
    shared = [e for e in g.shared_edges if e is not None]
    assert len(shared) == (n if ring else n - 1)
    for e in shared:
        holders = [j for j, d in enumerate(directed) if e in d or e[::-1] in d]
        assert len(holders) == 2
        fwd = [j for j in holders if e in directed[j]]
        assert len(fwd) == 1  # traversed in opposite directions
    pairs = [(j, (j + 1) % n) for j in range(n if ring else n - 1)]
    for j, k in pairs:
        common = {frozenset(e) for e in directed[j]} & {frozenset(e) for e in directed[k]}
        assert len(common) == 1
    # shared edges of one face are never incident to each other
    for cyc in g.faces:
        edges_here = [set(e) for e in shared if e[0] in cyc and e[1] in cyc]
        for x, y in itertools.combinations(edges_here, 2):
            assert not x & y


def test_hexagonal_chain_counts():
    for n in range(1, 8):
        spec = ChainSpec((FaceSpec(6),) + (FaceSpec(6, 2),) * max(0, n - 2) + ((FaceSpec(6),) if n > 1 else ()))
        g = build_chain(spec)
        assert (len(g.vertices), len(g.edges)) == (4 * n + 2, 5 * n + 1)


def test_two_squares():
    g = build_chain(parse_chain("t(4,*)t(4,*)"))
    assert (len(g.vertices), len(g.edges)) == (6, 7)


def test_nine_polygon_chain():
    g = build_chain(parse_chain("t(7,*)t(5,2)t(8,4)t(6,3)t(5,2)t(6,2)t(8,3)t(6,3)t(6,*)"))
    # sum of sizes 57, 9 faces, 8 shared edges
    assert (len(g.vertices), len(g.edges)) == (57 - 2 * 8, 57 - 8) == (41, 49)
    check_structure(g, (7, 5, 8, 6, 5, 6, 8, 6, 6), ring=False)


def test_rings():
    g = build_ring(parse_ring("t(2)t(3)t(3)t(1)t(3)t(3)t(3)t(2)t(2)t(3)t(3)"))
    assert (len(g.vertices), len(g.edges)) == (44, 55)
    g = build_ring(parse_ring("t(6,2)t(6,2)t(6,2)"))
    assert (len(g.vertices), len(g.edges)) == (12, 15)
    g = build_ring(parse_ring("t(7,3)t(5,2)t(8,4)t(6,3)t(5,2)t(6,2)t(8,3)t(6,3)t(6,3)"))
    assert (len(g.vertices), len(g.edges)) == (39, 48)
    check_structure(g, (7, 5, 8, 6, 5, 6, 8, 6, 6), ring=True)


def test_offset_is_clockwise_edge_count():
    spec = parse_ring("t(7,3)t(5,2)t(8,4)")
    g = build_ring(spec)
    for j, (cyc, face) in enumerate(zip(g.faces, spec.faces)):
        enter = g.shared_edges[j]
        leave = g.shared_edges[(j + 1) % 3]
        # entering edge is traversed b -> a, i.e. the last vertex then the first
        assert (cyc[-1], cyc[0]) == (enter[1], enter[0])
        assert (cyc[face.offset], cyc[face.offset + 1]) == leave


def test_ring_marks_around_adhesive_edge():
    g = build_ring(parse_ring("t(1)t(2)t(3)"))
    mk = g.marks
    assert g.has_edge(mk["d"], mk["c"]) and g.has_edge(mk["e"], mk["d"]) and g.has_edge(mk["f"], mk["c"])
    assert (mk["d"], mk["c"]) == (mk["a"], mk["b"])


def test_gadget_shapes():
    g = build_gadget(6, 2)
    assert (len(g.vertices), len(g.edges)) == (8, 7)
    assert not g.has_edge(g.marks["d"], g.marks["c"])
    assert g.neighbors(g.marks["k1"]) == [g.marks["d"]]
    assert g.neighbors(g.marks["k2"]) == [g.marks["c"]]
    g = build_gadget(4, 1)
    assert (len(g.vertices), len(g.edges)) == (6, 5)


def test_gadget_degenerate_coincidences():
    # with dc one edge clockwise past a, d's other polygon neighbour is a
    g = build_gadget(6, 1)
    assert g.marks["e"] == g.marks["a"]
    assert g.marks["f"] not in (g.marks["a"], g.marks["b"])
    g = build_gadget(6, 3)
    assert g.marks["f"] == g.marks["b"]
    g = build_gadget(4, 1)
    assert g.marks["e"] == g.marks["a"] and g.marks["f"] == g.marks["b"]


@pytest.mark.parametrize("m, i", [(3, 1), (6, 0), (6, 4), (4, 2)])
def test_gadget_range(m, i):
    with pytest.raises(GraphError):
        build_gadget(m, i)


def all_faces(sizes):
    return [FaceSpec(s, k) for s in sizes for k in range(1, s - 2)]


def test_exhaustive_small_rings_and_chains():
    pool = all_faces(range(4, 10))
    for n in (3,):
        for combo in itertools.product(pool, repeat=n):
            spec = RingSpec(combo)
            g = build_ring(spec)
            s = sum(spec.sizes)
            assert (len(g.vertices), len(g.edges)) == (s - 2 * n, s - n)
    for combo in itertools.product(pool, repeat=2):
        ends = [FaceSpec(f.size) for f in combo]
        g = build_chain(ChainSpec((ends[0], FaceSpec(6, 2), ends[1])))
        s = sum(f.size for f in combo) + 6
        assert (len(g.vertices), len(g.edges)) == (s - 4, s - 2)


faces = st.integers(4, 9).flatmap(lambda s: st.builds(FaceSpec, st.just(s), st.integers(1, s - 3)))


@settings(max_examples=150, deadline=None)
@given(st.lists(faces, min_size=3, max_size=6))
def test_ring_invariants(fs):
    spec = RingSpec(tuple(fs))
    g = build_ring(spec)
    s, n = sum(spec.sizes), len(fs)
    assert (len(g.vertices), len(g.edges)) == (s - 2 * n, s - n)
    check_structure(g, spec.sizes, ring=True)


@settings(max_examples=150, deadline=None)
@given(st.integers(4, 9), st.lists(faces, max_size=4), st.integers(4, 9))
def test_chain_invariants(first, mid, last):
    spec = ChainSpec((FaceSpec(first),) + tuple(mid) + (FaceSpec(last),))
    g = build_chain(spec)
    s, n = sum(spec.sizes), len(spec)
    assert (len(g.vertices), len(g.edges)) == (s - 2 * (n - 1), s - (n - 1))
    check_structure(g, spec.sizes, ring=False)


def test_labels_deterministic():
    a = build_ring(parse_ring("t(7,3)t(5,2)t(8,4)"))
    b = build_ring(parse_ring("t(7,3)t(5,2)t(8,4)"))
    assert a.vertices == b.vertices and a.edges == b.edges
    assert all(isinstance(v, tuple) and len(v) == 2 for v in a.vertices)


def test_simple_graph_validation():
    with pytest.raises(GraphError):
        Graph((1, 2), ((1, 2), (2, 1)))
    with pytest.raises(GraphError):
        Graph((1,), ((1, 1),))
    with pytest.raises(GraphError):
        Graph((1, 2), ((1, 3),))


def test_glue_on_edge():
    g = build_chain(parse_chain("t(6,*)t(6,*)"))
    d, c = g.terminal_edges[1]
    f = glue_on_edge(g, (d, c), cycle_graph(5), (1, 2))
    assert len(f.vertices) == len(g.vertices) + 3
    assert len(f.edges) == len(g.edges) + 4
    assert glue_on_edge(g, (d, c), path_graph(2), (1, 2)) == g


def test_dump_round_trip(tmp_path):
    g = build_ring(parse_ring("t(6,1)t(5,2)t(7,4)"))
    text = dump_graph(g)
    assert "# mark e" in text and "# shared e1" in text
    h = read_edge_list(text)
    assert len(h.vertices) == len(g.vertices) and len(h.edges) == len(g.edges)
    assert h.marks["d"] == ".".join(map(str, g.marks["d"]))


def test_read_rejects_bad_line():
    with pytest.raises(GraphError):
        read_edge_list("1 2\n3\n")
