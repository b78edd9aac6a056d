import json
import os
import pathlib

import pytest

import threadlens

FIXTURES = pathlib.Path(
    os.environ.get("THREADLENS_FIXTURE_DIR", pathlib.Path(__file__).resolve().parents[2] / "fixtures")
)


def table1():
    return FIXTURES / "table1.json"


def test_analyze_fixture():
    report = threadlens.analyze(table1())
    assert report["redundancy"]["n"] == 20
    assert report["redundancy"]["n_d"] == 2
    assert report["redundancy"]["r"] == pytest.approx(2 / 18, abs=1e-12)
    assert (report["hierarchy"]["d"], report["hierarchy"]["b"]) == (4, 11)
    assert report["hierarchy"]["h"] == pytest.approx(4 / 11, abs=1e-12)
    assert [t["topic"] for t in report["topics"]] == ["T1", "T2", "T3", "T4", "T5"]


def test_restructure_fixture():
    result = threadlens.restructure(table1())
    after = result["after"]
    assert len(result["thread"]["posts"]) == 18
    assert after["redundancy"]["r"] == 0
    assert (after["hierarchy"]["d"], after["hierarchy"]["b"], after["hierarchy"]["h"]) == (4, 5, 0.8)
    assert [r["post"] for r in result["plan"]["removals"]] == ["p03", "p19"]


def test_thread_class():
    t = threadlens.load(table1())
    assert len(t) == 20
    assert "p17" in t and "zz" not in t
    assert t.hierarchy() == (4, 11, pytest.approx(4 / 11))
    assert t.depth("p15") == 4
    assert t.parent("p19") == "p17"
    assert t.parent("p01") is None
    assert threadlens.Thread.from_json(t.to_json()) == t
    assert threadlens.analyze(t)["redundancy"]["n"] == 20


def test_scalar_functions():
    assert threadlens.redundancy_factor(20, 2) == pytest.approx(2 / 18)
    assert threadlens.hierarchical_reference([1, 5, 9, 1, 2]) == 1.8
    assert threadlens.chronological_coherence(["b", "a", "c"], ["a", "b", "c"]) == pytest.approx(1 / 3)
    assert threadlens.population_stddev([16, 17, 18]) == pytest.approx((2 / 3) ** 0.5)
    a = threadlens.shingles("Java is fast, really fast", 3)
    assert a == {"java is fast", "is fast really", "fast really fast"}
    assert threadlens.jaccard(a, a) == 1.0


def test_detect_duplicates_and_validate():
    doc = json.loads(table1().read_text())
    dups = threadlens.detect_duplicates(doc)
    assert {(d["post"], d["of"]) for d in dups} == {("p03", "p02"), ("p19", "p18")}
    assert threadlens.validate(doc) == []


def test_errors():
    with pytest.raises(threadlens.ParseError):
        threadlens.analyze("{not json")
    bad = {"posts": [{"id": "a", "parent_id": "missing", "timestamp": "2012-01-01T00:00:00Z"}]}
    with pytest.raises(threadlens.ThreadlensError, match="unknown parent"):
        threadlens.validate(bad)
    with pytest.raises(threadlens.ThreadlensError):
        threadlens.chronological_coherence(["a"], ["b"])
    with pytest.raises(threadlens.ThreadlensError):
        threadlens.analyze(table1(), tau=0.0)
    assert issubclass(threadlens.ParseError, threadlens.ThreadlensError)
    assert issubclass(threadlens.ThreadlensError, ValueError)
