import random
import subprocess
import sys

import pytest

from polyring import _pykernel, oracle
from polyring.notation import parse_ring
from polyring.oracle import count_maximal
from polyring.polygraph import Graph, build_ring

needs_ext = pytest.mark.skipif("cython" not in oracle.available_backends(),
                               reason="compiled kernel not built")


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(tuple(range(n)), tuple(edges))


@needs_ext
def test_backends_agree_on_random_graphs():
    rng = random.Random(5)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 18), rng.choice((0.15, 0.3, 0.5)))
        vs = list(g.vertices)
        kw = {}
        if len(vs) > 3 and rng.random() < 0.5:
            kw["require_covered"] = {vs[0]}
            kw["removed"] = {vs[-1]}
        counts = set()
        for name in ("python", "cython"):
            prev = oracle.set_backend(name)
            try:
                counts.add(count_maximal(g, **kw))
            finally:
                oracle.set_backend(prev)
        assert len(counts) == 1


@needs_ext
def test_compiled_kernel_eleven_hexagon_ring():
    prev = oracle.set_backend("cython")
    try:
        g = build_ring(parse_ring("t(2)t(3)t(3)t(1)t(3)t(3)t(3)t(2)t(2)t(3)t(3)"))
        assert count_maximal(g) == 2804280
    finally:
        oracle.set_backend(prev)


def test_large_graph_falls_back_to_python():
    # more vertices than the compiled kernel's 64-bit masks hold
    n = 66
    star = Graph(tuple(range(n + 1)), tuple((0, j) for j in range(1, n + 1)))
    assert count_maximal(star) == n
    assert count_maximal(star, require_uncovered={1}) == n - 1


def test_env_var_forces_python():
    code = "import polyring.oracle as o; print(o.backend())"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"POLYRING_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        oracle.set_backend("fortran")


def test_python_kernel_backend_name():
    assert _pykernel.BACKEND == "python"


@pytest.mark.slow
def test_pure_python_eleven_hexagon_ring():
    prev = oracle.set_backend("python")
    try:
        g = build_ring(parse_ring("t(2)t(3)t(3)t(1)t(3)t(3)t(3)t(2)t(2)t(3)t(3)"))
        assert count_maximal(g) == 2804280
    finally:
        oracle.set_backend(prev)
