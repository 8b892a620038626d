import json

import pytest

from totaldom import graph as gr
from totaldom.errors import InputError
from totaldom.polynomial import Polynomial
from totaldom.report import CheckReport
from totaldom.verify import (
    check_bn_no_nonzero_real,
    check_book_published,
    check_fn_root_interval,
    check_ie_identity,
    check_integer_root_conjecture,
    check_kmn_circle,
    check_kn_even_no_real,
    check_limit_lemma,
    check_monotone_counts,
    check_unimodality,
    check_zero_polynomial,
    default_config,
    fn_interval_summary,
    kmn_analytic_roots,
    random_corpus,
    reports_to_jsonl,
    run_campaign,
    summarize,
)


def test_report_requires_witness_on_failure():
    with pytest.raises(ValueError):
        CheckReport("x", "y", "fail")
    with pytest.raises(ValueError):
        CheckReport("x", "y", "maybe")
    r = CheckReport("x", "y", "fail", witness={"n": 1}, metrics={"a": [1, 2]})
    assert CheckReport.from_json(r.to_json()) == r


def test_corpus_is_seeded_per_cell():
    a = random_corpus(7, [5, 6], [0.5], 3)
    b = random_corpus(7, [6], [0.5], 3)
    assert [e.graph for e in a if e.n == 6] == [e.graph for e in b]
    assert random_corpus(7, [6], [0.5], 3) == b
    assert random_corpus(8, [6], [0.5], 3) != b


def test_graph_checks_pass_on_small_cases():
    assert check_ie_identity(gr.book(2)).status == "pass"
    assert check_ie_identity(gr.path(16)).status == "skipped"
    assert check_monotone_counts(gr.cycle(8)).status == "pass"
    assert check_zero_polynomial(gr.empty_graph(3)).status == "pass"
    assert check_integer_root_conjecture(gr.complete(6)).status == "pass"
    assert check_integer_root_conjecture(gr.complete(6)).level == "theorem"
    assert check_integer_root_conjecture(gr.cycle(6)).level == "conjecture"


def test_monotone_check_reports_a_bad_table():
    r = check_monotone_counts(gr.path(4), counts=(0, 3, 1, 2, 1))
    assert r.status == "fail"
    assert r.witness["indices"] == [1]


def test_unimodality_counterexample_is_kept_verbatim():
    r = check_unimodality(Polynomial([1, 5, 1, 5]), "made-up")
    assert (r.status, r.level) == ("fail", "conjecture")
    assert r.witness["coeffs"] == ["1", "5", "1", "5"]


def test_real_root_checks():
    assert check_kn_even_no_real(8).status == "pass"
    with pytest.raises(InputError):
        check_kn_even_no_real(7)
    r = check_bn_no_nonzero_real(2)
    # the book graph's polynomial has real roots -(3 +- sqrt 5)/2, each double
    assert r.status == "fail"
    assert r.metrics["nonzero_real_roots"] == 2
    assert r.metrics["printed_formula_nonzero_real_roots"] == 0
    assert check_book_published(2).status == "fail"


def test_fn_interval_checks():
    small, large = check_fn_root_interval(3), check_fn_root_interval(30)
    assert small.level == "info"
    assert large.metrics["sturm_count"] >= 1
    summary = fn_interval_summary([check_fn_root_interval(n) for n in range(20, 26)])
    assert summary.status == "pass"
    assert summary.metrics["persistent_from_n"] == 20


def test_limit_lemma():
    assert check_limit_lemma(20).status == "pass"
    assert check_limit_lemma(5).status == "fail"


def test_kmn_circle_and_analytic_roots():
    assert len(kmn_analytic_roots(3, 5)) == 8
    r = check_kmn_circle(3, 4)
    assert r.status == "pass"
    assert r.metrics["max_match_distance"] < 1e-9


def test_empty_config_runs_nothing():
    assert run_campaign({}) == []


@pytest.mark.parametrize("config", [
    {"checks": ["no_such_check"]},
    {"checks": [{"name": "kn_even", "bogus": 1}]},
    {"checks": "kn_even"},
    {"unexpected": 1},
    {"seed": "x"},
    [],
])
def test_malformed_config(config):
    with pytest.raises(InputError):
        run_campaign(config)


def test_campaign_is_deterministic():
    config = {"seed": 3, "corpus": {"orders": [4, 7], "per_cell": 5},
              "checks": ["ie_identity", "disc_bound", {"name": "kn_even", "range": [2, 8]}]}
    first = reports_to_jsonl(run_campaign(config))
    assert first == reports_to_jsonl(run_campaign(config))
    lines = [json.loads(l) for l in first.splitlines()]
    assert {l["check_id"] for l in lines} == {"ie_identity", "disc_bound", "kn_even_no_real"}


def test_summary_separates_levels():
    reports = [CheckReport("a", "1", "pass"),
               CheckReport("b", "2", "fail", witness={}),
               CheckReport("c", "3", "fail", level="conjecture", witness={})]
    s = summarize(reports)
    assert s.theorem_failures == ["b:2"]
    assert s.conjecture_failures == ["c:3"]
    assert not s.ok


def test_default_config_names_every_check():
    config = default_config()
    assert "bn_real" in config["checks"] and "corpus_unimodality" in config["checks"]
