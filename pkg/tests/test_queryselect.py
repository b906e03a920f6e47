import math

import pytest
from hypothesis import given, settings, strategies as st

from termrank.ingest import ChangeTask
from termrank.preprocess import Field, preprocess_task
from termrank.queryselect import (
    HeuristicWeights, Method, build_task_stats, is_camel_case, kevic_features, select_kevic,
    select_random_summary, select_textrank, suggest,
)
from termrank.textgraph import build_graph
from termrank.textrank import rank

TASKS = [
    ChangeTask("1", "", "", "Breakpoint condition editor loses focus",
               "The condition editor of a line breakpoint loses focus. Typing in the editor "
               "moves the caret to JavaLineBreakpoint source. Breakpoint hits are ignored."),
    ChangeTask("2", "", "", "Console hyperlink broken",
               "StackTraceHyperlink fails for inner classes in the stack trace console."),
    ChangeTask("3", "", "", "", "Only a description mentioning PatternLayout and a timezone bug."),
]


def textrank_query(task, stops, k=5):
    sentences = preprocess_task(task, stops)
    return select_textrank(rank(build_graph(sentences)), sentences, k, task.id)


def test_listing1_selection(listing1_task, listing1_stops):
    q = textrank_query(listing1_task, listing1_stops)
    assert [t.term for t in q.terms][:4] == ["Mac", "installs", "improvement", "selection"]
    assert q.terms[4].term == "JREs" and q.terms[4].source is Field.DESCRIPTION
    assert q.terms[4].score == 1.0
    assert all(t.source is Field.SUMMARY for t in q.terms[:4])


def test_summary_fills_query(stops):
    task = ChangeTask("x", "", "", "alpha beta gamma delta epsilon zeta",
                      "alpha beta. other words here")
    q = textrank_query(task, stops, k=5)
    assert len(q.terms) == 5 and all(t.source is Field.SUMMARY for t in q.terms)


def test_empty_summary_uses_description(stops):
    q = textrank_query(TASKS[2], stops)
    assert q.terms and all(t.source is Field.DESCRIPTION for t in q.terms)


def test_select_textrank_rejects_bad_k(stops):
    sentences = preprocess_task(TASKS[0], stops)
    with pytest.raises(ValueError):
        select_textrank(rank(build_graph(sentences)), sentences, k=0)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(TASKS), st.integers(1, 8))
def test_textrank_properties(task, k):
    from termrank.preprocess import StopwordSet
    stops = StopwordSet.default()
    sentences = preprocess_task(task, stops)
    result = rank(build_graph(sentences))
    q = select_textrank(result, sentences, k)
    tokens = {t.lower() for s in sentences for t in s.tokens}
    keys = [t.key for t in q.terms]
    assert len(q.terms) <= k and len(set(keys)) == len(keys)
    assert set(keys) <= tokens
    sources = [t.source for t in q.terms]
    assert sources == sorted(sources, key=lambda f: f is Field.DESCRIPTION)
    bigger = select_textrank(result, sentences, k + 1)
    assert set(keys) <= {t.key for t in bigger.terms}


def test_camel_case_feature():
    assert is_camel_case("PageBookView")
    assert not is_camel_case("pagebookview")
    assert not is_camel_case("JRE")


def test_in_sum_and_body_raises_score(stops):
    task = ChangeTask("1", "", "", "wizard alpha", "wizard crashes. beta appears")
    stats = build_task_stats([task], stops)
    f = kevic_features(task, stats, stops)
    assert f["wizard"]["inSumAndBody"] == 1.0 and f["alpha"]["inSumAndBody"] == 0.0
    weights = HeuristicWeights(w_tfidf=0, w_isInMiddle=0, w_isCamelCase=0, w_inSumAndBody=2.0)
    q = select_kevic(task, stats, weights, k=1, stops=stops)
    assert q.terms[0].term == "wizard"


def test_is_in_middle(stops):
    task = ChangeTask("1", "", "", "opening middle closing", "")
    f = kevic_features(task, build_task_stats([task], stops), stops)
    assert (f["opening"]["isInMiddle"], f["middle"]["isInMiddle"], f["closing"]["isInMiddle"]) == (0, 1, 0)


def test_tfidf_over_task_set(stops):
    stats = build_task_stats(TASKS, stops)
    assert stats.n_docs == 3
    assert stats.df["breakpoint"] == 1
    f = kevic_features(TASKS[0], stats, stops)
    # Breakpoint, breakpoint, Breakpoint; JavaLineBreakpoint is its own term
    assert f["breakpoint"]["tfidf"] == pytest.approx(3 * math.log(3))


def test_zero_weights_tie_break(stops):
    stats = build_task_stats(TASKS, stops)
    zero = HeuristicWeights(0, 0, 0, 0, 0)
    q = select_kevic(TASKS[0], stats, zero, k=3, stops=stops)
    keys = sorted(kevic_features(TASKS[0], stats, stops))
    assert [t.key for t in q.terms] == keys[:3]


def test_kevic_bad_k(stops):
    with pytest.raises(ValueError):
        select_kevic(TASKS[0], build_task_stats(TASKS, stops), k=0, stops=stops)


@given(st.sampled_from(TASKS),
       st.tuples(*[st.floats(-4, 4, allow_nan=False)] * 5),
       st.sampled_from([0.25, 0.5, 2.0, 8.0]))
def test_kevic_scale_invariance(task, w, scale):
    from termrank.preprocess import StopwordSet
    stops = StopwordSet.default()
    stats = build_task_stats(TASKS, stops)
    a = select_kevic(task, stats, HeuristicWeights(*w), 5, stops)
    b = select_kevic(task, stats, HeuristicWeights(*(x * scale for x in w)), 5, stops)
    assert [t.key for t in a.terms] == [t.key for t in b.terms]


def test_random_summary(stops):
    task = ChangeTask("1", "", "", "alpha beta gamma delta epsilon", "unused words")
    for seed in (0, 1, 99):
        q = select_random_summary(task, stops, 5, seed)
        assert [t.term for t in q.terms] == ["alpha", "beta", "gamma", "delta", "epsilon"]
    big = ChangeTask("2", "", "", "alpha beta gamma delta epsilon zeta theta iota", "")
    q1 = select_random_summary(big, stops, 5, 42)
    assert q1 == select_random_summary(big, stops, 5, 42)
    assert len({t.key for t in q1.terms}) == 5
    assert {t.term for t in q1.terms} <= set(big.summary.split())
    empty = ChangeTask("3", "", "", "", "some text")
    assert select_random_summary(empty, stops, 5, 1).terms == ()


def test_suggest_dispatch(listing1_task, listing1_stops):
    q = suggest(listing1_task, "textrank", stops=listing1_stops)
    assert q.method is Method.TEXTRANK and len(q.terms) == 5
    assert len(suggest(listing1_task, "kevic", stops=listing1_stops).terms) == 3
    assert suggest(listing1_task, Method.RANDOM, stops=listing1_stops, seed=3).method is Method.RANDOM


def test_weights_file(tmp_path):
    p = tmp_path / "w.json"
    p.write_text('{"w_tfidf": 2, "w_inSumAndBody": 0.5, "w_isInMiddle": 0, '
                 '"w_isCamelCase": 1, "bias": -1}')
    assert HeuristicWeights.from_file(p) == HeuristicWeights(2.0, 0.5, 0.0, 1.0, -1.0)
    p.write_text('{"w_other": 1}')
    with pytest.raises(ValueError):
        HeuristicWeights.from_file(p)
    with pytest.raises(ValueError):
        HeuristicWeights(w_tfidf=float("inf"))


def test_query_format(listing1_task, listing1_stops):
    line = suggest(listing1_task, stops=listing1_stops).format().splitlines()[4]
    assert line == "5\tJREs\t1.0000\tDescription"
