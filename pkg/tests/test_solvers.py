import random

import pytest

from domprod import (
    Budget,
    NoTotalDominationError,
    NotMinimalError,
    OracleCapError,
    ProductSpec,
    classify,
    complete_graph,
    gamma_exact,
    gamma_oracle,
    gamma_total_exact,
    gamma_upper_exact,
    is_dominating,
    is_minimal_dominating,
    is_total_dominating,
    multipartite,
    product_spec_graph,
    shrink_to_minimal,
    unitary_cayley,
)
from domprod.graphs import Graph
from domprod.solvers import bipartition

from helpers import minimality_by_deletion, random_bipartite_graph, random_graph


# ==== CHECKERS ====


def test_is_dominating_basics():
    g = complete_graph(4)
    assert is_dominating(g, (0,))
    assert not is_dominating(g, ())
    path = Graph([0b010, 0b101, 0b010])
    assert is_dominating(path, (1,))
    assert not is_dominating(path, (0,))
    assert is_total_dominating(path, (1, 0))
    assert not is_total_dominating(path, (1,))  # 1 itself has no neighbor in D


def test_checkers_reject_out_of_range():
    g = complete_graph(3)
    with pytest.raises(ValueError):
        is_dominating(g, (3,))


def test_classify_identifies_roles():
    # star K_{1,3}: center 0
    g = Graph([0b1110, 0b0001, 0b0001, 0b0001])
    roles = classify(g, (0,))
    assert roles.lonely == (0,)
    assert roles.social == ()
    roles = classify(g, (1, 2, 3))
    assert roles.lonely == (1, 2, 3)
    with pytest.raises(ValueError):
        classify(g, (1, 2))  # not dominating


def test_classify_social_private_neighbors():
    p4 = Graph([0b0010, 0b0101, 0b1010, 0b0100])
    roles = classify(p4, (1, 2))
    assert roles.social == (1, 2)
    assert roles.private_neighbor == {1: 0, 2: 3}


def test_classify_raises_on_redundant_member():
    g = complete_graph(4)
    with pytest.raises(NotMinimalError) as info:
        classify(g, (0, 1))
    assert info.value.vertex in (0, 1)


def test_minimality_matches_deletion_rule_500_pairs():
    rng = random.Random(41)
    for _ in range(500):
        n = rng.randint(1, 12)
        g = random_graph(rng, n)
        d = tuple(v for v in range(n) if rng.random() < 0.45)
        assert is_minimal_dominating(g, d) == minimality_by_deletion(g, d)


def test_shrink_to_minimal():
    rng = random.Random(43)
    for _ in range(100):
        n = rng.randint(1, 12)
        g = random_graph(rng, n)
        d = shrink_to_minimal(g, range(n))
        assert is_minimal_dominating(g, d)
    with pytest.raises(ValueError):
        shrink_to_minimal(complete_graph(3), ())


# ==== ORACLE ====


def test_oracle_small_known_values():
    assert gamma_oracle(complete_graph(5), "gamma").value == 1
    assert gamma_oracle(complete_graph(5), "gamma_total").value == 2
    assert gamma_oracle(complete_graph(5), "upper").value == 1
    c4 = unitary_cayley(4)
    assert gamma_oracle(c4, "gamma").value == 2
    assert gamma_oracle(c4, "upper").value == 2


def test_oracle_cap_enforced():
    with pytest.raises(OracleCapError):
        gamma_oracle(unitary_cayley(30), "gamma")
    with pytest.raises(OracleCapError):
        gamma_oracle(complete_graph(17), "upper")


def test_oracle_total_rejects_isolated():
    g = Graph([0b010, 0b001, 0b000])
    with pytest.raises(NoTotalDominationError):
        gamma_oracle(g, "gamma_total")
    with pytest.raises(NoTotalDominationError):
        gamma_total_exact(g)


# ==== SOLVER VS ORACLE ====


def test_gamma_matches_oracle_random():
    rng = random.Random(47)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 13))
        want = gamma_oracle(g, "gamma")
        got = gamma_exact(g)
        assert got.value == want.value
        assert got.optimal and got.lo == got.hi == got.value
        assert is_dominating(g, got.witness)


def test_gamma_total_matches_oracle_random():
    rng = random.Random(53)
    done = 0
    while done < 60:
        g = random_graph(rng, rng.randint(2, 13), rng.uniform(0.3, 0.8))
        if any(g.adj[v] == 0 for v in range(g.n)):
            continue
        want = gamma_oracle(g, "gamma_total")
        got = gamma_total_exact(g)
        assert got.value == want.value
        assert is_total_dominating(g, got.witness)
        done += 1


def test_gamma_total_bipartite_reduction():
    rng = random.Random(59)
    done = 0
    while done < 40:
        g = random_bipartite_graph(rng, rng.randint(4, 13))
        if any(g.adj[v] == 0 for v in range(g.n)):
            continue
        assert bipartition(g) is not None
        got = gamma_total_exact(g)
        assert got.method == "reduction"
        assert got.value == gamma_oracle(g, "gamma_total").value
        done += 1


def test_upper_matches_oracle_random():
    rng = random.Random(61)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 13))
        want = gamma_oracle(g, "upper")
        got = gamma_upper_exact(g)
        assert got.value == want.value
        assert is_minimal_dominating(g, got.witness)


def test_solver_matches_oracle_on_small_specs():
    shapes = [
        [(1, 2)], [(2, 2)], [(1, 3)], [(1, 2), (1, 2)], [(1, 2), (1, 3)],
        [(1, 3), (1, 3)], [(2, 2), (1, 3)], [(1, 2), (1, 2), (1, 2)],
        [(1, 2), (1, 2), (1, 3)], [(1, 2), (1, 7)], [(5, 3)], [(4, 2), (1, 2)],
    ]
    for pairs in shapes:
        spec = ProductSpec.from_pairs(pairs).canonical()
        g = product_spec_graph(spec)
        assert gamma_exact(g).value == gamma_oracle(g, "gamma").value, pairs
        assert gamma_total_exact(g).value == gamma_oracle(g, "gamma_total").value, pairs
        assert (
            gamma_upper_exact(g, clique_size=spec.b1).value
            == gamma_oracle(g, "upper").value
        ), pairs


# ==== KNOWN VALUES ====


def test_known_domination_values():
    assert gamma_exact(unitary_cayley(30)).value == 4
    assert gamma_exact(product_spec_graph(ProductSpec.from_pairs([(1, 3)] * 3))).value == 4
    assert gamma_exact(multipartite(3, 2)).value == 2
    assert gamma_total_exact(unitary_cayley(30)).value == 6


def test_known_upper_values():
    k33 = product_spec_graph(ProductSpec.from_pairs([(1, 3), (1, 3)]))
    assert gamma_upper_exact(k33, clique_size=3).value == 3
    x20 = unitary_cayley(20)
    r = gamma_upper_exact(x20, clique_size=2)
    assert r.value == 10 and r.method == "reduction"
    # without the clique partition hint the search still gets there
    assert gamma_upper_exact(unitary_cayley(8), clique_size=2).value == 4


def test_upper_seed_is_minimal():
    rng = random.Random(67)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 14))
        r = gamma_upper_exact(g)
        assert is_minimal_dominating(g, r.witness)


# ==== BUDGETS ====


def test_budget_exhaustion_degrades_gracefully():
    g = product_spec_graph(ProductSpec.from_pairs([(1, 3), (1, 3), (1, 3)]))
    r = gamma_upper_exact(g, Budget(max_nodes=30, time_limit=60), clique_size=3)
    assert not r.optimal
    assert r.lo <= 9 <= r.hi
    assert is_minimal_dominating(g, r.witness)

    r2 = gamma_exact(unitary_cayley(105), Budget(max_nodes=3, time_limit=60))
    assert not r2.optimal
    assert is_dominating(unitary_cayley(105), r2.witness)
    assert r2.lo <= r2.value == r2.hi


def test_budget_time_limit():
    g = product_spec_graph(ProductSpec.from_pairs([(1, 3), (1, 3), (1, 3)]))
    r = gamma_upper_exact(g, Budget(max_nodes=10**12, time_limit=0.01), clique_size=3)
    assert not r.optimal


# ==== DETERMINISTIC WITNESSES ====


def _all_optimal_witnesses(g, kind, size):
    from itertools import combinations

    out = []
    check = {
        "gamma": is_dominating,
        "gamma_total": is_total_dominating,
        "upper": is_minimal_dominating,
    }[kind]
    for combo in combinations(range(g.n), size):
        if check(g, combo):
            out.append(tuple(combo))
    return out


def test_deterministic_gamma_is_lexmin():
    rng = random.Random(71)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 10))
        r = gamma_exact(g, deterministic=True)
        assert r.witness == min(_all_optimal_witnesses(g, "gamma", r.value))


def test_deterministic_gamma_total_is_lexmin():
    rng = random.Random(73)
    done = 0
    while done < 25:
        g = random_graph(rng, rng.randint(2, 10), rng.uniform(0.4, 0.8))
        if any(g.adj[v] == 0 for v in range(g.n)):
            continue
        r = gamma_total_exact(g, deterministic=True)
        assert r.witness == min(_all_optimal_witnesses(g, "gamma_total", r.value))
        done += 1


def test_deterministic_upper_is_lexmin():
    rng = random.Random(79)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 10))
        r = gamma_upper_exact(g, deterministic=True)
        assert r.witness == min(_all_optimal_witnesses(g, "upper", r.value))


def test_deterministic_repeatable():
    g = unitary_cayley(30)
    a = gamma_exact(g, deterministic=True).witness
    b = gamma_exact(g, deterministic=True).witness
    assert a == b


# ==== PACKING INEQUALITY ====


def test_packing_inequality_on_minimal_sets():
    rng = random.Random(83)
    done = 0
    while done < 40:
        pairs = [(rng.randint(1, 2), rng.randint(2, 3)) for _ in range(rng.randint(1, 3))]
        spec = ProductSpec.from_pairs(pairs).canonical()
        if spec.n_vertices > 36:
            continue
        g = product_spec_graph(spec)
        seed = [v for v in range(g.n) if rng.random() < 0.8] or [0]
        if not is_dominating(g, seed):
            seed = list(range(g.n))
        d = shrink_to_minimal(g, seed)
        roles = classify(g, d)
        b1 = spec.b1
        assert b1 * len(roles.lonely) + 2 * len(roles.social) <= g.n
        done += 1
