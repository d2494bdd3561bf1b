import json
import subprocess
import sys
from importlib import resources

import pytest

from stratcat.cli import EXIT_ERROR, EXIT_FAIL, EXIT_PASS, RunConfig, bundled_corpus, main, run, run_corpus


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


def test_stratify_russell_and_identity(capsys):
    assert main(["stratify", "not (x in x)"]) == EXIT_FAIL
    out = capsys.readouterr().out
    assert out.startswith("UNSTRAT") and "unstratifiable: cycle of 1 constraint(s)" in out
    assert main(["stratify", "x = x"]) == EXIT_PASS
    assert capsys.readouterr().out.startswith("STRAT")


def test_stratify_json_reports_levels_and_cycles(capsys):
    code, body = run_json(capsys, "stratify", "x in y")
    assert code == EXIT_PASS
    assert body["results"][0]["levels"] == {"x": 0, "y": 1}
    code, body = run_json(capsys, "stratify", "<x,f> = f`x")
    assert code == EXIT_FAIL and body["results"][0]["verdict"] == "UNSTRAT"
    assert body["results"][0]["weight"] > 0


def test_stratify_conventions(capsys):
    assert main(["stratify", "<{x},f> = {f`x}"]) == EXIT_PASS
    assert main(["stratify", "<{x},f> = {f`x}", "--conv", "wk"]) == EXIT_FAIL
    assert main(["stratify", "x = x", "--conv", "nope"]) == EXIT_ERROR


def test_parse_errors_exit_two(capsys):
    assert main(["stratify", "x in"]) == EXIT_ERROR
    assert "parse error" in capsys.readouterr().out
    assert main(["stratify"]) == EXIT_ERROR
    assert main(["no-such-command"]) == EXIT_ERROR


def test_bundled_corpus_passes():
    rep = run_corpus()
    assert rep.exit_code == EXIT_PASS
    assert rep.summary["matched"] >= 20 and rep.summary["mismatched"] == 0
    assert bundled_corpus().is_file()


def test_empty_corpus_is_trivial_pass(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    rep = run_corpus(path)
    assert rep.exit_code == EXIT_PASS
    assert rep.summary == {"matched": 0, "mismatched": 0, "errors": 0}


def test_bad_line_is_reported_and_rest_processed(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("x = x\tSTRAT\nx in\tSTRAT\nnot (x in x)\tUNSTRAT\n")
    rep = run_corpus(path)
    assert rep.summary == {"matched": 2, "mismatched": 0, "errors": 1}
    assert rep.results[1]["line"] == 2 and "error" in rep.results[1]
    assert rep.exit_code == EXIT_ERROR


def test_mismatch_exits_one(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("x in x\tSTRAT\n<x,f> = f`x\tUNSTRAT\tQUINE\n")
    rep = run_corpus(path)
    assert rep.summary["mismatched"] == 1 and rep.exit_code == EXIT_FAIL


def test_missing_corpus_is_an_error():
    assert run_corpus("/nonexistent/corpus.txt").exit_code == EXIT_ERROR


def test_smallmaps_audit(capsys):
    code, body = run_json(capsys, "smallmaps-audit", "--pred", "fibre:2", "--rank", "1", "--cap", "300")
    assert body["config"]["seed"] == 0
    assert code in (EXIT_PASS, EXIT_FAIL)
    assert main(["smallmaps-audit", "--pred", "all", "--rank", "1", "--cap", "200"]) == EXIT_PASS
    assert main(["smallmaps-audit", "--pred", "bogus"]) == EXIT_ERROR


def test_internal_full_and_yoneda(capsys):
    assert main(["internal-full", "--rank", "1"]) == EXIT_PASS
    assert main(["yoneda", "--cat", "walking_arrow", "--max-fibre", "1"]) == EXIT_PASS
    assert main(["yoneda", "--cat", "walking_arrow", "--object", "{{{}}}"]) == EXIT_ERROR
    assert main(["yoneda", "--cat", "/nonexistent.json"]) == EXIT_ERROR


def test_yoneda_with_bundled_files(capsys):
    data = resources.files("stratcat") / "data"
    code = main(["yoneda", "--cat", str(data / "walking_arrow.json"), "--object", "{}",
                 "--diagram", str(data / "walking_arrow_free.json")])
    assert code == EXIT_PASS


def test_spe_verify_rank1(capsys):
    code, body = run_json(capsys, "spe-verify", "--rank", "1")
    assert code == EXIT_PASS
    statuses = {r["axiom"]: r["status"] for r in body["results"]}
    assert statuses["3e"] == "UNCHECKED"


@pytest.mark.parametrize(
    "argv",
    [
        ["stratify", "forall x. x in y"],
        ["corpus"],
        ["smallmaps-audit", "--pred", "fibre:2", "--rank", "1", "--cap", "200", "--seed", "5"],
        ["yoneda", "--cat", "Z2"],
        ["internal-full", "--rank", "1"],
    ],
)
def test_json_is_byte_identical(capsys, argv):
    main([*argv, "--json"])
    first = capsys.readouterr().out
    main([*argv, "--json"])
    assert capsys.readouterr().out == first


def test_run_records_seed():
    rep = run(RunConfig("smallmaps-audit", rank=1, seed=7, cap=50))
    assert rep.config["seed"] == 7 and '"seed": 7' in rep.to_json()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stratcat", "stratify", "x = x"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("STRAT")
