import random

import pytest
from hypothesis import given, settings, strategies as st

from termrank.textgraph import TextGraph
from termrank.textrank import RankConfig, rank, solve_exact

EPS = 1e-4


def path(*nodes):
    return TextGraph.from_edges(zip(nodes, nodes[1:]))


def random_graph(rng, max_nodes=20):
    n = rng.randint(1, max_nodes)
    names = [f"n{i}" for i in range(n)]
    p = rng.random()
    edges = [(a, b) for i, a in enumerate(names) for b in names[i + 1:] if rng.random() < p]
    return TextGraph.from_edges(edges, names)


def raw(result):
    return {k: s.raw for k, s in result.scores.items()}


def test_two_nodes():
    # stopping on a step smaller than eps leaves up to eps * d / (1 - d) of error
    r = rank(path("a", "b"))
    assert r.converged
    assert raw(r) == pytest.approx({"a": 1.0, "b": 1.0}, abs=EPS * 0.85 / 0.15)
    assert r.last_delta < EPS


def test_two_nodes_start_at_fixed_point():
    r = rank(path("a", "b"), RankConfig(init_score=1.0))
    assert raw(r) == {"a": 1.0, "b": 1.0}
    assert r.iterations_used == 1


def test_isolated_node():
    r = rank(TextGraph.from_edges([], ["solo"]))
    assert r.scores["solo"].raw == pytest.approx(0.15, abs=EPS)
    assert r.scores["solo"].normalized == 1.0


def test_empty_graph():
    r = rank(TextGraph({}, {}))
    assert r.scores == {} and r.iterations_used == 0 and r.converged


def test_zero_damping():
    r = rank(random_graph(random.Random(5)), RankConfig(damping=0.0))
    assert all(v == 1.0 for v in raw(r).values())


def test_path_graph_exact():
    # a = 0.15 + 0.85 b / 2, b = 0.15 + 0.85 (a + c), a = c
    # => a = 0.21375 / 0.2775, b = 0.15 + 1.7 a
    s = solve_exact(path("a", "b", "c"))
    assert s["a"] == pytest.approx(0.21375 / 0.2775, rel=1e-12)
    assert s["c"] == pytest.approx(s["a"], rel=1e-12)
    assert s["b"] == pytest.approx(0.15 + 1.7 * 0.21375 / 0.2775, rel=1e-12)


def test_star_exact():
    # center c = 0.15 + 0.85 * 3 * leaf, leaf = 0.15 + 0.85 c / 3
    # => c = 0.5325 / 0.2775 = 1.918918..., leaf = 0.693693...
    g = TextGraph.from_edges([("hub", x) for x in ("p", "q", "r")])
    s = solve_exact(g)
    assert s["hub"] == pytest.approx(1.9189189189189189, rel=1e-12)
    assert s["p"] == pytest.approx(0.6936936936936937, rel=1e-12)
    assert s["hub"] > s["p"]
    r = rank(g)
    assert r.scores["hub"].raw == pytest.approx(s["hub"], abs=10 * EPS)


def test_two_node_exact():
    assert solve_exact(path("a", "b")) == pytest.approx({"a": 1.0, "b": 1.0})


def test_solve_exact_size_limit():
    with pytest.raises(ValueError):
        solve_exact(path(*[f"n{i}" for i in range(51)]))


def test_nonconvergence_is_reported(caplog):
    r = rank(path("a", "b", "c"), RankConfig(max_iterations=2))
    assert not r.converged and r.iterations_used == 2
    assert "did not converge" in caplog.text


def test_config_validation():
    for bad in (dict(damping=1.5), dict(epsilon=0), dict(max_iterations=0)):
        with pytest.raises(ValueError):
            RankConfig(**bad)


def test_normalized_max_is_one():
    r = rank(random_graph(random.Random(11)))
    assert max(s.normalized for s in r.scores.values()) == 1.0


def test_ranked_tie_break_by_key():
    r = rank(path("b", "a"))
    assert [s.term for s in r.ranked()] == ["a", "b"]


graphs = st.integers(0, 10_000).map(lambda seed: random_graph(random.Random(seed)))


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_matches_linear_oracle(g):
    r = rank(g)
    assert r.converged and r.iterations_used <= 100
    exact = solve_exact(g)
    assert all(abs(r.scores[k].raw - exact[k]) <= 10 * EPS for k in exact)
    assert all(s.raw >= 0.15 - EPS for s in r.scores.values())


@settings(max_examples=40, deadline=None)
@given(graphs, st.integers(0, 1000))
def test_relabeling_invariance(g, seed):
    keys = sorted(g.adjacency)
    perm = keys[:]
    random.Random(seed).shuffle(perm)
    mapping = {k: "x" + p for k, p in zip(keys, perm)}
    relabeled = TextGraph.from_edges(
        [(mapping[a], mapping[b]) for a, b in g.edges()], mapping.values())
    r1, r2 = raw(rank(g)), raw(rank(relabeled))
    assert all(abs(r1[k] - r2[mapping[k]]) <= EPS for k in keys)


def test_automorphic_nodes_equal():
    # cycle of 6: every node is swappable with every other
    nodes = [f"c{i}" for i in range(6)]
    g = TextGraph.from_edges(zip(nodes, nodes[1:] + nodes[:1]))
    values = list(raw(rank(g)).values())
    assert max(values) - min(values) < EPS


@settings(max_examples=40, deadline=None)
@given(graphs)
def test_init_independence(g):
    a = raw(rank(g, RankConfig(init_score=0.25)))
    b = raw(rank(g, RankConfig(init_score=1.0)))
    assert all(abs(a[k] - b[k]) <= 10 * EPS for k in a)
