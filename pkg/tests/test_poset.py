import itertools

import pydot
import pytest
from hypothesis import given, settings, strategies as st

from cobweb.errors import DomainError, RangeError, ResourceError
from cobweb.poset import Vertex, build, export_dot
from cobweb.sequence import SequenceSpec, parse_spec


def test_build_const2():
    p = build(parse_spec("const:2"), 1)
    assert p.level_sizes == (1, 2)
    assert p.vertex_count == 3


def test_build_nat():
    p = build(parse_spec("nat"), 3)
    assert p.level_sizes == (1, 2, 3, 4)
    assert p.vertex_count == 10
    assert p.length == 3


def test_build_fib():
    assert build(parse_spec("fib"), 5).level_sizes == (1, 1, 2, 3, 5, 8)


def test_build_rejects():
    with pytest.raises(DomainError):
        build(parse_spec("nat"), -1)
    with pytest.raises(RangeError):
        build(parse_spec("list:1,2"), 4)


def test_order_examples():
    p = build(parse_spec("nat"), 3)
    assert p.less_than(Vertex(0, 1), Vertex(3, 2))
    assert not p.less_than(Vertex(2, 1), Vertex(2, 2))
    assert p.less_than(Vertex(1, 2), Vertex(1, 2))
    assert not p.less_than(Vertex(1, 2), Vertex(1, 2), strict=True)


def test_invalid_vertex():
    p = build(parse_spec("nat"), 2)
    with pytest.raises(RangeError):
        p.less_than(Vertex(0, 2), Vertex(1, 1))
    with pytest.raises(RangeError):
        p.covers(Vertex(3, 1), Vertex(1, 1))


def test_cover_examples():
    p = build(parse_spec("nat"), 3)
    assert p.covers(Vertex(0, 1), Vertex(1, 2))
    assert not p.covers(Vertex(0, 1), Vertex(2, 1))
    assert build(parse_spec("nat"), 2).cover_count() == 8


def _brute_covers(p, x, y):
    # y covers x iff x < y with nothing strictly between
    if not p.less_than(x, y, strict=True):
        return False
    return not any(p.less_than(x, z, strict=True) and p.less_than(z, y, strict=True) for z in p.vertices())


small_posets = st.tuples(st.lists(st.integers(1, 4), max_size=5)).map(
    lambda t: build(SequenceSpec.explicit([1] + t[0]), len(t[0]))
)


@settings(max_examples=60, deadline=None)
@given(small_posets)
def test_partial_order_axioms_and_covers(p):
    V = list(p.vertices())
    assert len(V) == p.vertex_count == sum(p.level_sizes)
    for x, y in itertools.product(V, V):
        le = p.less_than(x, y)
        if le and p.less_than(y, x):
            assert x == y
        assert p.covers(x, y) == _brute_covers(p, x, y)
        if p.covers(x, y):
            assert p.rank(y) == p.rank(x) + 1
        for z in V:
            if le and p.less_than(y, z):
                assert p.less_than(x, z)
    assert sum(1 for _ in p.cover_pairs()) == p.cover_count()
    assert p.cover_count() == sum(p.level_sizes[s] * p.level_sizes[s + 1] for s in range(p.n))
    for x in V:
        assert p.strict_down_set_size(x) == sum(1 for z in V if p.less_than(z, x, strict=True))


def _parse_dot(text):
    (g,) = pydot.graph_from_dot_data(text)
    nodes = []
    for sg in g.get_subgraphs():
        nodes += [n.get_name() for n in sg.get_nodes()]
    return g, nodes, g.get_edges()


@pytest.mark.parametrize("text,n,n_nodes,n_arcs", [("const:1", 1, 2, 1), ("nat", 2, 6, 8), ("fib", 2, 4, 3), ("nat", 1, 3, 2)])
def test_dot_counts(text, n, n_nodes, n_arcs):
    dot = export_dot(build(parse_spec(text), n))
    g, nodes, edges = _parse_dot(dot)
    assert len(nodes) == n_nodes
    assert len(edges) == n_arcs
    for e in edges:
        lo = int(e.get_source().split("_")[1])
        hi = int(e.get_destination().split("_")[1])
        assert hi == lo + 1


def test_dot_deterministic_and_grouped():
    p = build(parse_spec("odd"), 3)
    assert export_dot(p) == export_dot(build(parse_spec("odd"), 3))
    dot = export_dot(p)
    assert dot.count("rank=same") == 4
    assert "v_3_7 [" in dot


def test_dot_cap():
    p = build(parse_spec("const:100"), 101)
    with pytest.raises(ResourceError) as exc:
        export_dot(p)
    assert "10000" in str(exc.value)
    assert export_dot(p, max_vertices=20_000).startswith("digraph")
