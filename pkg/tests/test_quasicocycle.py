import random
from fractions import Fraction

from cuspedforms import lipschitz as lf
from cuspedforms.chains import CoinvariantChain
from cuspedforms.graph import Vertex
from cuspedforms.quasicocycle import (boundary_class, build_A, build_aK,
                                      build_c, build_d, build_e, defect_scan,
                                      evaluate_on_Am, free_ball,
                                      independence_rank, k_of, sample_tuple,
                                      translate_chain, vanishing_certificate)
from cuspedforms.words import COMM, GroupElem


def test_k_of():
    assert [k_of(m) for m in (1, 2, 3, 4, 7, 8, 16)] == [1, 2, 2, 3, 3, 4, 5]


def test_boundary_of_c():
    assert build_c().boundary() == boundary_class()


def test_boundary_of_d(graph):
    for m in (1, 3, 6):
        K = k_of(m)
        assert build_d(m).boundary() == -boundary_class() + build_aK(K)


def test_boundary_of_e(graph):
    for m in (1, 3, 6):
        K = k_of(m)
        aK = build_aK(K)
        t_m = GroupElem("", m)
        assert build_e(m).boundary() == aK - translate_chain(aK, graph, t_m)


def test_A_is_a_cycle(graph):
    for m in (1, 2, 3, 5):
        assert not build_A(graph, m).boundary()


def test_A_norm_formula(graph):
    for m in (1, 2, 5, 8):
        K = k_of(m)
        assert build_A(graph, m).l1_norm() == 12 - Fraction(4, 2 ** K)


def test_alpha_vanishes_on_horoball_simplices(qc):
    # all three bases in one commutator coset: the orbit points coincide
    w = Vertex(COMM, 0, 1)
    val = qc.F(lf.linear(1), (Vertex("", 0, 1), w, Vertex(COMM, 1, 1)))
    assert val == 0


def test_alpha_alternates_and_is_invariant(qc, graph):
    f = lf.linear(1)
    tri = (Vertex("", 0, 0), Vertex("b", 0, 0), Vertex("ba", 1, 0))
    base = qc.alpha(f, *tri)
    assert qc.alpha(f, tri[1], tri[0], tri[2]) == -base
    # invariant under the fiber group (t-translates shift what f sees)
    g = GroupElem("ab", 0)
    moved = tuple(graph.left_mul(g, v) for v in tri)
    assert qc.alpha(f, *moved) == base


def test_evaluate_on_Am_small(qc):
    f = lf.linear(1)
    for m in (1, 2, 3, 4):
        assert evaluate_on_Am(qc, f, m) == 2 * m


def test_delta_alpha_of_constant_vanishes(qc, graph):
    rng = random.Random(31)
    f = lf.constant(Fraction(5, 3))
    for i in range(40):
        pts = sample_tuple(graph, rng, ("cayley", "mixed", "cross")[i % 3], 4)
        assert qc.delta_alpha(f, *pts) == 0


def test_defect_scan_deterministic(qc):
    a = defect_scan(qc, lf.linear(1), 60, 42)
    b = defect_scan(qc, lf.linear(1), 60, 42)
    assert a == b
    c = defect_scan(qc, lf.linear(1), 60, 43)
    assert c.seed != a.seed


def test_defect_scaling_invariance(qc):
    base = defect_scan(qc, lf.linear(1), 60, 5)
    tripled = defect_scan(qc, lf.linear(1).scale(3), 60, 5)
    shifted = defect_scan(qc, lf.linear(1).shift(Fraction(7, 2)), 60, 5)
    assert tripled.max_abs_delta == 3 * base.max_abs_delta
    assert tripled.ratio_to_lip == base.ratio_to_lip
    assert shifted.max_abs_delta == base.max_abs_delta


def test_free_ball_sizes():
    # 1 + 4 * (3^r - 1) / 2 elements at radius r in F(a, b)
    assert [len(free_ball(r)) for r in range(4)] == [1, 5, 17, 53]


def test_vanishing_certificate_finds_witness_and_vanishing(qc):
    f = lf.power_floor(1, 2)
    cert = vanishing_certificate(qc, f, 0, 1)
    assert cert["vanishes"] is False or cert["witness"] is None
    # truncating far beyond the touched window forces exact vanishing
    deep = vanishing_certificate(qc, f, 16, 1)
    assert deep["vanishes"] is True
    assert deep["theta_span"] <= 16


def test_independence_rank_full_and_defective():
    full = [lf.linear(1), lf.power_floor(1, 2),
            lf.table({0: Fraction(0), 4: Fraction(1)})]
    assert independence_rank(full, [1, 4, 16]) == 3
    dependent = [lf.linear(1), lf.linear(2), lf.linear(3)]
    assert independence_rank(dependent, [1, 4, 16]) == 1


def test_build_A_uses_coinvariants(graph):
    # translating the whole cycle by a free-group element must not change it
    A = build_A(graph, 2)
    moved = translate_chain(A, graph, GroupElem("ab", 0))
    assert isinstance(A, CoinvariantChain)
    assert moved == A
