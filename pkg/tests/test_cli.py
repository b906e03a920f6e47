import io
import json

import pytest

from termrank.cli import main

from conftest import LISTING1, MINI

L1 = ["--tasks", str(LISTING1 / "tasks.json"), "--stopwords", str(LISTING1 / "stopwords.txt")]
MINI_ARGS = ["--tasks", str(MINI / "tasks.json"), "--solutions", str(MINI / "solutions.json"),
             "--corpus", str(MINI / "corpus")]


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_suggest_listing1():
    code, out = run("suggest", *L1, "--k", "5")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert {r[1] for r in rows} == {"Mac", "selection", "installs", "improvement", "JREs"}
    assert [r[0] for r in rows] == ["1", "2", "3", "4", "5"]


def test_suggest_random_repeatable():
    args = ("suggest", *L1, "--method", "random", "--seed", "9")
    assert run(*args) == run(*args)


def test_suggest_k_zero_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run("suggest", *L1, "--k", "0")
    assert exc.value.code == 2


def test_suggest_unknown_id():
    with pytest.raises(SystemExit):
        run("suggest", *L1, "--id", "nope")


def test_suggest_json_and_graph_dump(tmp_path):
    dump = tmp_path / "g.tsv"
    code, out = run("suggest", *L1, "--json", "--dump-graph", str(dump))
    data = json.loads(out)
    assert data[0]["task_id"] == "401358" and len(data[0]["terms"]) == 5
    lines = dump.read_text().splitlines()
    assert lines[0] == "# 401358" and "Mac\tselection" in lines


def test_index_and_search(tmp_path, capsys):
    snap = tmp_path / "idx.json"
    assert run("index", "--corpus", str(MINI / "corpus"), "--out", str(snap))[0] == 0
    assert "indexed 54 documents" in capsys.readouterr().err
    code, out = run("search", "--index", str(snap), "RollingFileAppender", "MaxFileSize")
    first = out.splitlines()[0].split("\t")
    assert first[:2] == ["1", "org/apache/log4j/RollingFileAppender.java"]
    assert len(first[2].split(".")[1]) == 6
    assert run("search", "--corpus", str(MINI / "corpus"),
               "RollingFileAppender", "MaxFileSize") == (code, out)


def test_evaluate_is_byte_identical():
    args = ("evaluate", *MINI_ARGS, "--method", "random", "--seed", "5", "--json")
    first = run(*args)
    assert first == run(*args)
    report = json.loads(first[1])
    assert report["method"] == "random" and report["seed"] == 5 and report["k"] == 5


def test_missing_solutions_file(capsys):
    code, _ = run("evaluate", "--tasks", str(MINI / "tasks.json"), "--solutions", "/no/such.json",
                  "--corpus", str(MINI / "corpus"))
    assert code == 1
    assert "/no/such.json" in capsys.readouterr().err


def test_config_file_precedence(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"method": "kevic", "k": 2}))
    _, out = run("evaluate", *MINI_ARGS, "--config", str(cfg), "--json")
    assert (json.loads(out)["method"], json.loads(out)["k"]) == ("kevic", 2)
    _, out = run("evaluate", *MINI_ARGS, "--config", str(cfg), "--k", "4", "--json")
    assert json.loads(out)["k"] == 4


def test_compare_table():
    code, out = run("compare", *MINI_ARGS)
    assert code == 0
    assert out.splitlines()[0].split() == ["Metric", "textrank", "(k=5)", "kevic", "(k=3)"]


def test_diagnostics_go_to_stderr(capsys):
    code, out = run("evaluate", *MINI_ARGS, "--json")
    assert code == 0
    json.loads(out)
    assert capsys.readouterr().out == ""
