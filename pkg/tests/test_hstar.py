import pytest

from cosmotope.hstar import (
    FORMULA_METHODS,
    PIPELINES,
    closed_form_k2n,
    closed_form_multicycle,
    closed_form_multitree,
    closed_form_theta,
    compute_hstar,
    hstar_acyclic,
    hstar_delcon,
    hstar_moebius,
    hstar_tutte,
    k2n_volume,
    moebius_values,
    volume,
)
from cosmotope.multigraph import (
    Multigraph,
    SubsetLimitError,
    disjoint_union,
    enumerate_bridge_free_subsets,
    is_acyclic,
    k2n_graph,
    multicycle_graph,
    multitree_graph,
    path_graph,
    star_graph,
    theta_graph,
)
from cosmotope.polynomials import IntPolynomial as P, check_coefficient_bound, check_ultra_log_concave

from conftest import SINGLE_LOOP, THETA111, TRIANGLE, TWO_PARALLEL, random_suite

FORMULAS = [PIPELINES[m] for m in FORMULA_METHODS]


@pytest.mark.parametrize("pipeline", FORMULAS, ids=FORMULA_METHODS)
def test_reference_values(pipeline):
    assert pipeline(TWO_PARALLEL) == P([1, 6, 5])
    # (z+1)(19z^2+8z+1)
    assert pipeline(TRIANGLE) == P([1, 1]) * P([1, 8, 19]) == P([1, 9, 27, 19])
    assert pipeline(Multigraph(3)) == P([1])
    assert pipeline(SINGLE_LOOP) == P([1, 1])
    assert pipeline(path_graph(1)) == P([1, 3])
    assert pipeline(THETA111) == P([1, 9, 15, 7])


def test_delcon_worked_example():
    # delete -> bridge: (1+z)(1+3z); contract -> loop: 2z(1+z)
    assert P([1, 1]) * P([1, 3]) + P([0, 2]) * P([1, 1]) == hstar_delcon(TWO_PARALLEL)


def test_tutte_substitution_example():
    # T(x,1) = x + 1, r = 1, m = 2
    assert P([1, 1]) * (P([1, 3]) + P([0, 2])) == hstar_tutte(TWO_PARALLEL)


def test_moebius_values_theta():
    masks = list(enumerate_bridge_free_subsets(THETA111))
    mu = moebius_values(masks)
    assert mu == {0: 1, 0b011: -1, 0b101: -1, 0b110: -1, 0b111: 2}
    assert moebius_values(list(enumerate_bridge_free_subsets(TRIANGLE))) == {0: 1, 0b111: -1}


def test_moebius_triangle_is_difference():
    assert hstar_moebius(TRIANGLE) == P([1, 3]) ** 3 - P([0, 2]) ** 3


def test_forests_give_binomial_power():
    for m in range(7):
        for g in (path_graph(m), star_graph(m)):
            for pipe in FORMULAS:
                assert pipe(g) == P([1, 3]) ** m


def test_four_way_agreement_random():
    for g in random_suite(120, seed=2024, max_nodes=6, max_edges=10):
        results = {name: PIPELINES[name](g) for name in FORMULA_METHODS}
        assert len(set(results.values())) == 1, (g, results)


def test_isolated_nodes_do_not_matter():
    for g in random_suite(30, seed=3, max_nodes=4, max_edges=6):
        padded = disjoint_union(g, Multigraph(3))
        for pipe in FORMULAS:
            assert pipe(padded) == pipe(g)


def test_invariants_on_random_suite():
    for g in random_suite(120, seed=99, max_nodes=6, max_edges=10):
        h = hstar_delcon(g)
        m, loops = g.m, g.loop_count()
        assert h[0] == 1 and h.degree <= m
        assert all(c >= 0 for c in h.coeffs)
        assert h[1] == 3 * m - 2 * loops
        assert check_ultra_log_concave(h, m)[0]
        assert check_coefficient_bound(h, m)
        vol = volume(g)
        assert sum(h.coeffs) == vol
        forest = is_acyclic(g, g.full_mask)
        assert 2**m <= vol <= 4**m
        assert (vol == 4**m) == forest


def test_limits():
    with pytest.raises(SubsetLimitError):
        hstar_acyclic(path_graph(6), limit=10)
    with pytest.raises(SubsetLimitError):
        hstar_moebius(path_graph(6), limit=10)


def test_report():
    rep = compute_hstar(TWO_PARALLEL, "acyclic")
    assert rep.volume == 12
    assert rep.coefficients == [1, 6, 5]
    rep = compute_hstar(path_graph(3), "tutte")
    assert rep.coefficients == [1, 9, 27, 27]
    with pytest.raises(ValueError):
        compute_hstar(TRIANGLE, "bogus")


class TestClosedForms:
    def test_multitree(self):
        assert closed_form_multitree([2]) == P([1, 6, 5])
        assert closed_form_multitree([3]) == P([1, 1]) ** 2 * P([1, 7]) == P([1, 9, 15, 7])
        assert closed_form_multitree([1, 1]) == P([1, 3]) ** 2

    def test_multicycle(self):
        assert closed_form_multicycle([1, 1, 1]) == P([1, 9, 27, 19])
        c4 = closed_form_multicycle([1, 1, 1, 1])
        assert c4 == P([1, 3]) ** 4 - P([0, 2]) ** 4 == P([1, 12, 54, 108, 65])
        assert c4 == closed_form_k2n(2)
        assert closed_form_multicycle([1]) == P([1, 1])

    def test_theta(self):
        assert closed_form_theta(1, 1, 1) == P([1, 9, 15, 7]) == closed_form_multitree([3])
        assert closed_form_theta(1, 2, 3) == hstar_acyclic(theta_graph(1, 2, 3))
        assert closed_form_theta(1, 1, 2) == hstar_delcon(theta_graph(1, 1, 2))

    def test_k2n(self):
        assert closed_form_k2n(2) == P([1, 12, 54, 108, 65])
        assert sum(closed_form_k2n(2).coeffs) == 240
        assert sum(closed_form_k2n(3).coeffs) == 3456 == k2n_volume(3)
        assert closed_form_k2n(1) == P([1, 6, 9]) == P([1, 3]) ** 2

    def test_families_match_graphs_up_to_ten_edges(self):
        for a in range(1, 5):
            for b in range(1, 5):
                mult = [a, b]
                assert closed_form_multitree(mult) == hstar_acyclic(multitree_graph(mult))
                assert closed_form_multicycle(mult) == hstar_acyclic(multicycle_graph(mult))
                for c in range(1, 4):
                    mult3 = [a, b, c]
                    if sum(mult3) <= 10:
                        assert closed_form_multitree(mult3) == hstar_acyclic(multitree_graph(mult3))
                        assert closed_form_multicycle(mult3) == hstar_acyclic(multicycle_graph(mult3))
        for a in range(1, 5):
            for b in range(a, 5):
                for c in range(b, 5):
                    if a + b + c <= 10:
                        assert closed_form_theta(a, b, c) == hstar_acyclic(theta_graph(a, b, c))
        for n in range(1, 6):
            assert closed_form_k2n(n) == hstar_acyclic(k2n_graph(n))
            assert sum(closed_form_k2n(n).coeffs) == k2n_volume(n) == volume(k2n_graph(n))
        for a in range(1, 6):
            # one node: a bouquet of loops
            assert closed_form_multicycle([a]) == hstar_acyclic(multicycle_graph([a])) == P([1, 1]) ** a

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            closed_form_multitree([0])
        with pytest.raises(ValueError):
            closed_form_multicycle([])
        with pytest.raises(ValueError):
            closed_form_theta(0, 1, 1)
        with pytest.raises(ValueError):
            closed_form_k2n(0)


def test_volume_examples():
    assert volume(TWO_PARALLEL) == 12
    assert volume(path_graph(2)) == 16
    for m in range(1, 6):
        assert volume(Multigraph(1, ((0, 0),) * m)) == 2**m
