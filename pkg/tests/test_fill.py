import random
from fractions import Fraction

from cuspedforms.chains import Chain
from cuspedforms.graph import Vertex
from cuspedforms.quasicocycle import STRATA, sample_tuple
from cuspedforms.words import COMM, GroupElem, word_pow


def sample_triple(graph, rng, idx):
    return sample_tuple(graph, rng, STRATA[idx % len(STRATA)], 3)


def test_combing_path_boundary(engine, graph):
    rng = random.Random(23)
    for i in range(60):
        u, v, _ = sample_triple(graph, rng, i)
        q = engine.combing_path(u, v)
        b = q.boundary()
        expect = Chain(0)
        expect.add((v,), 1)
        expect.add((u,), -1)
        assert b == expect


def test_combing_path_antisymmetric(engine, graph):
    rng = random.Random(24)
    for i in range(40):
        u, v, _ = sample_triple(graph, rng, i)
        assert engine.combing_path(v, u) == -engine.combing_path(u, v)


def test_combing_path_equivariant(engine, graph):
    rng = random.Random(25)
    g = GroupElem("ba", -1)
    for i in range(30):
        u, v, _ = sample_triple(graph, rng, i)
        assert engine.combing_path(u, v).translate(graph, g) == \
            engine.combing_path(graph.left_mul(g, u), graph.left_mul(g, v))


def test_fill_boundary_is_triangle_cycle(engine, graph):
    rng = random.Random(26)
    for i in range(120):
        pts = sample_triple(graph, rng, i)
        if len(set(pts)) < 3:
            continue
        res = engine.fill_triangle(*pts)
        assert res.chain.boundary() == engine.triangle_cycle(*pts)
        assert res.norm == res.chain.l1_norm()


def test_fill_alternation(engine, graph):
    rng = random.Random(27)
    for i in range(40):
        x0, x1, x2 = sample_triple(graph, rng, i)
        if len({x0, x1, x2}) < 3:
            continue
        base = engine.fill_triangle(x0, x1, x2).chain
        assert engine.fill_triangle(x1, x0, x2).chain == -base
        assert engine.fill_triangle(x1, x2, x0).chain == base
        assert engine.fill_triangle(x2, x1, x0).chain == -base


def test_fill_equivariance(engine, graph):
    rng = random.Random(28)
    g = GroupElem("ab", 2)
    for i in range(30):
        pts = sample_triple(graph, rng, i)
        if len(set(pts)) < 3:
            continue
        moved = tuple(graph.left_mul(g, v) for v in pts)
        assert engine.fill_triangle(*moved).chain == \
            engine.fill_triangle(*pts).chain.translate(graph, g)


def test_fill_degenerate(engine):
    v = Vertex("", 0, 0)
    res = engine.fill_triangle(v, v, Vertex("a", 0, 0))
    assert res.method == "degenerate"
    assert not res.chain


def test_fill_anchored_consistent_with_fill(engine, graph):
    rng = random.Random(29)
    for i in range(25):
        pts = sample_triple(graph, rng, i)
        if len(set(pts)) < 3:
            continue
        chain, sign, shift, method = engine.fill_anchored(*pts)
        rebuilt = chain.translate(graph, shift)
        if sign < 0:
            rebuilt = -rebuilt
        assert rebuilt == engine.fill_triangle(*pts).chain


def test_nearby_triangle_is_unit_simplex(engine):
    res = engine.fill_triangle(Vertex("", 0, 0), Vertex("a", 0, 0),
                               Vertex("ab", 0, 0))
    assert res.method == "unit-simplex"
    assert res.norm == 1


def test_far_triangle_cone_splits(engine):
    far = Vertex(word_pow("ab", 8), 0, 0)
    res = engine.fill_triangle(Vertex("", 0, 0), far, Vertex("a", 0, 0))
    assert res.method == "cone-split"
    assert res.chain
    assert res.chain.boundary() == engine.triangle_cycle(
        Vertex("", 0, 0), far, Vertex("a", 0, 0))


def test_lp_fill_matches_boundary_and_norm(engine, graph):
    # the LP filler on a cone-split instance: exact boundary, and never a
    # worse norm than the cone fill it is seeded from
    far = Vertex(word_pow("ab", 8), 0, 0)
    tri = (Vertex("", 0, 0), far, Vertex("a", 0, 0))
    cone = engine.fill_triangle(*tri)
    z = engine.triangle_cycle(*tri)
    res = engine.fill_cycle_lp(z, window_radius=0,
                               extra_vertices=cone.chain.support())
    assert res.chain.boundary() == z
    assert res.norm <= cone.norm


def test_relative_fill_unit_simplex(engine):
    out = engine.relative_fill_check(Vertex("", 0, 0), Vertex("b", 0, 0),
                                     Vertex("ba", 0, 0), Vertex("ab", 0, 0))
    assert out["method"] == "unit-simplex"
    assert out["norm"] == 1


def test_relative_fill_degenerate(engine):
    v = Vertex("", 0, 0)
    out = engine.relative_fill_check(v, v, Vertex("a", 0, 0),
                                     Vertex("b", 0, 0))
    assert out["norm"] == 0


def test_fill_in_horoball_annulus(engine):
    # the annulus triangles used by the explicit cycles are unit simplices
    w1, w2 = word_pow(COMM, 1), word_pow(COMM, 2)
    res = engine.fill_triangle(Vertex("", 0, 0), Vertex("", 0, 1),
                               Vertex(w1, 0, 0))
    assert res.method == "unit-simplex"
    res = engine.fill_triangle(Vertex(w1, 0, 0), Vertex("", 0, 1),
                               Vertex(w2, 0, 1))
    assert res.method == "unit-simplex"
