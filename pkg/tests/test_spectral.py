import math
import random

import pytest

import evenfactor as ef
from helpers import random_graph


# ---------------------------------------------------------------- lambda1

def test_lambda1_regular_graphs():
    for n in range(2, 8):
        assert ef.lambda1(ef.complete_graph(n)).lambda1 == pytest.approx(n - 1, abs=1e-9)
    assert ef.lambda1(ef.cycle_graph(6)).lambda1 == pytest.approx(2, abs=1e-9)


def test_lambda1_complete_bipartite_is_geometric_mean():
    assert ef.lambda1(ef.complete_bipartite(3, 3)).lambda1 == pytest.approx(3, abs=1e-9)
    assert ef.lambda1(ef.complete_bipartite(2, 6)).lambda1 == pytest.approx(
        math.sqrt(12), abs=1e-9)


def test_lambda1_disconnected_takes_max_over_components():
    g = ef.build_graph(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 3)])
    assert ef.lambda1(g).lambda1 == pytest.approx(2, abs=1e-9)  # C4 beats K3


def test_lambda1_residual_meets_tolerance():
    res = ef.lambda1(ef.path_graph(9), tol=1e-12)
    assert res.residual <= 1e-12
    assert res.iterations > 0


def test_lambda1_validates_input():
    with pytest.raises(ValueError):
        ef.lambda1(ef.build_graph(0, []))
    with pytest.raises(ValueError):
        ef.lambda1(ef.complete_graph(3), tol=0)


def test_lambda1_rayleigh_bounds():
    rng = random.Random(41)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 10), rng.random())
        lam = ef.lambda1(g).lambda1
        if g.n == 0:
            continue
        _, lo, hi = ef.degree_profile(g)
        assert lo - 1e-8 <= lam <= hi + 1e-8
    for g in (ef.example1(4, 12, 9), ef.example2(4, 24, 6), ef.h_na(8, 4)):
        lam = ef.lambda1(g).lambda1
        _, lo, hi = ef.degree_profile(g)
        assert lo - 1e-8 <= lam <= hi + 1e-8


def test_lambda1_strictly_increases_when_adding_an_edge():
    rng = random.Random(42)
    done = 0
    while done < 25:
        g = random_graph(rng, rng.randint(3, 9), 0.5)
        if not ef.is_connected(g) or g.is_complete():
            continue
        non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                     if not g.has_edge(u, v)]
        extra = rng.choice(non_edges)
        bigger = ef.build_graph(g.n, list(g.edges) + [extra])
        assert ef.lambda1(bigger).lambda1 > ef.lambda1(g).lambda1 + 1e-9
        done += 1


# ------------------------------------------------------ bipartite threshold

def test_bipartite_threshold_branches():
    assert ef.bipartite_threshold(2, 4, 6) == pytest.approx(math.sqrt(8), abs=1e-12)
    assert ef.bipartite_threshold(2, 4, 5) == pytest.approx(math.sqrt(6), abs=1e-12)


def test_bipartite_threshold_seam_agrees_for_equal_bounds():
    for a in (2, 4, 6):
        assert ef.bipartite_threshold(a, a, 2 * a) == pytest.approx(a, abs=1e-12)
        assert math.sqrt(a * (2 * a - a)) == pytest.approx(a, abs=1e-12)


def test_bipartite_threshold_leaves_reals_below_its_domain():
    with pytest.raises(ValueError, match="radicand"):
        ef.bipartite_threshold(3, 5, 2)


def test_observation_decide_examples():
    assert ef.observation_decide(3, 3, 2, 4)
    assert not ef.observation_decide(2, 6, 2, 2)
    assert not ef.observation_decide(1, 3, 2, 2)
    with pytest.raises(ValueError, match="x <= y"):
        ef.observation_decide(4, 2, 2, 2)


def test_observation_equivalence_on_effective_domain():
    # all three decision routes agree wherever n >= 2a (below that no split
    # can reach minimum degree a, and the closed form says so)
    for n in range(2, 15):
        for x in range(1, n // 2 + 1):
            y = n - x
            g = ef.complete_bipartite(x, y)
            lam = ef.lambda1(g).lambda1
            for a, b in [(2, 2), (2, 4), (3, 5), (4, 4)]:
                if n < 2 * a:
                    continue
                closed = ef.observation_decide(x, y, a, b)
                searched = ef.find_ab_factor(g, a, b) is not None
                cls = ef.classify_threshold(lam, ef.bipartite_threshold(a, b, n))
                assert closed == searched
                if cls != "boundary":
                    assert (cls == "above") == closed


# ---------------------------------------------------------------------- rho

def test_rho_reference_value():
    # largest root of x^3 - 2x^2 - 4x + 2, cross-checked against numpy.roots
    assert ef.rho(5, 2) == pytest.approx(3.0861301976514945, abs=1e-9)
    assert 3 < ef.rho(5, 2) < 3.2


def test_rho_isolated_vertex_case_is_exact():
    # a=1 leaves the low vertex isolated: the cubic factors with root n-2
    assert ef.rho(6, 1) == pytest.approx(4, abs=1e-10)


def test_rho_near_complete_case():
    # a = n-1 gives a clique missing one edge
    assert ef.rho(5, 4) == pytest.approx(1 + math.sqrt(7), abs=1e-9)


def test_rho_below_clique_eigenvalue():
    for n in range(5, 16):
        for a in range(1, n - 1):
            if (a * n) % 2:
                continue
            assert ef.rho(n, a) < n - 1
    assert ef.rho(6, 4) < 5


def test_rho_validates_input():
    with pytest.raises(ValueError, match="a\\*n even"):
        ef.rho(5, 3)
    with pytest.raises(ValueError, match="n >= a\\+1"):
        ef.rho(4, 4)


def test_rho_matches_lambda1_spot_checks():
    for n, a in [(6, 2), (8, 4), (10, 5), (12, 7)]:
        assert abs(ef.lambda1(ef.h_na(n, a)).lambda1 - ef.rho(n, a)) <= 1e-8


# ------------------------------------------------------------------- sweeps

def test_sweep_exhaustive_small_clean():
    records = ef.conjecture_sweep(4, 2, 2, source="exhaustive")
    summary = ef.sweep_summary(records)
    assert summary["absent"] == 0
    assert summary["present"] == summary["candidates"]
    for rec in records:
        if rec.classification == "candidate":
            assert rec.lambda1 > rec.rho + 1e-9


def test_sweep_extremal_graph_sits_on_the_boundary():
    lam = ef.lambda1(ef.h_na(5, 2)).lambda1
    assert ef.classify_threshold(lam, ef.rho(5, 2)) == "boundary"


def test_sweep_includes_clique_as_present():
    records = ef.conjecture_sweep(5, 2, 2, source="exhaustive")
    clique_mask = (1 << 10) - 1
    by_mask = {r.mask: r for r in records}
    assert by_mask[clique_mask].verdict == "present"


def test_sweep_random_requires_seed():
    with pytest.raises(ValueError, match="seed"):
        ef.conjecture_sweep(5, 2, 2, source="random")
    records = ef.conjecture_sweep(5, 2, 2, source="random", seed=9, count=64)
    assert ef.sweep_summary(records)["absent"] == 0


def test_sweep_random_is_reproducible():
    one = ef.conjecture_sweep(6, 2, 2, source="random", seed=13, count=40)
    two = ef.conjecture_sweep(6, 2, 2, source="random", seed=13, count=40)
    assert one == two


def test_sweep_parallel_matches_serial():
    serial = ef.conjecture_sweep(4, 2, 2, source="exhaustive", jobs=1)
    parallel = ef.conjecture_sweep(4, 2, 2, source="exhaustive", jobs=2)
    assert serial == parallel


def test_sweep_exhaustive_cap():
    with pytest.raises(ef.ScaleError):
        ef.conjecture_sweep(9, 2, 2, source="exhaustive")


def test_sweep_records_budget_exhaustion_instead_of_dropping():
    from evenfactor.spectral import _examine

    # K8 has 28 edges: too many for the exhaustive search, not bipartite,
    # so the one-node budget must surface as a distinct verdict
    record = _examine(ef.complete_graph(8), None, 2, 2, 5.0, budget=1)
    assert record.classification == "candidate"
    assert record.verdict == "budget_exhausted"


def test_sweep_record_serialization():
    records = ef.conjecture_sweep(4, 2, 2, source="exhaustive")
    payload = records[0].to_json()
    assert set(payload) == {"n", "a", "b", "mask", "edges", "lambda1", "rho",
                            "classification", "verdict"}
