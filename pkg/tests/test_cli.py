"""Command line interface, exercised in process through main()."""

import io
import json

import pytest

from alcove_atlas.alcoves import read_alcoves
from alcove_atlas.cli import (
    EXIT_FAIL,
    EXIT_INCONCLUSIVE,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_alcoves_jsonl_roundtrip(capsys):
    code, out, _ = run(
        capsys, "alcoves", "--r", "2", "--i", "2", "--d", "3"
    )
    assert code == EXIT_OK
    spec, strategy, alcoves = read_alcoves(io.StringIO(out))
    assert (spec.r, spec.i, spec.d) == (2, 2, 3)
    assert strategy == "words"
    assert len(alcoves) == 32


def test_alcoves_json_format(capsys):
    code, out, _ = run(
        capsys,
        "alcoves", "--r", "1", "--i", "2", "--d", "4", "--format", "json",
        "--strategy", "pairs",
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 11
    assert doc["schema_version"] == "1"
    assert len(doc["alcoves"]) == 11


def test_alcoves_text_format(capsys):
    code, out, _ = run(
        capsys,
        "alcoves", "--r", "2", "--i", "1", "--d", "2", "--format", "text",
    )
    assert code == EXIT_OK
    assert out.startswith("# 4 alcoves")


def test_alcoves_respects_limit(capsys):
    code, _, err = run(
        capsys,
        "alcoves", "--r", "2", "--i", "2", "--d", "30", "--limit", "1000",
    )
    assert code == EXIT_USAGE
    assert "size-limit" in err


def test_alcoves_rejects_bad_parameters(capsys):
    code, _, err = run(capsys, "alcoves", "--r", "0", "--i", "1", "--d", "2")
    assert code == EXIT_USAGE
    assert "invalid-parameter" in err
    code, _, err = run(capsys, "alcoves", "--r", "1", "--i", "3", "--d", "2")
    assert code == EXIT_USAGE


def test_missing_required_flags_exit_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["alcoves", "--r", "2"])
    assert excinfo.value.code == 2


def test_label_word1_roundtrip(capsys):
    code, out, _ = run(
        capsys,
        "label", "--r", "2", "--i", "1", "--d", "3",
        "--map", "word1", "--roundtrip", "--format", "text",
    )
    assert code == EXIT_OK
    assert "# roundtrip: 8/8 ok" in out


def test_label_word1_requires_i_1(capsys):
    code, _, err = run(
        capsys,
        "label", "--r", "2", "--i", "2", "--d", "3", "--map", "word1",
    )
    assert code == EXIT_USAGE
    assert "word1" in err


def test_label_comp_has_no_inverse(capsys):
    code, _, err = run(
        capsys,
        "label", "--r", "2", "--i", "1", "--d", "3",
        "--map", "comp", "--roundtrip",
    )
    assert code == EXIT_USAGE
    assert "roundtrip" in err


def test_label_sigma_roundtrip_only_at_dilation_1(capsys):
    code, _, err = run(
        capsys,
        "label", "--r", "2", "--i", "1", "--d", "3",
        "--map", "sigma", "--roundtrip",
    )
    assert code == EXIT_USAGE
    code, out, _ = run(
        capsys,
        "label", "--r", "1", "--i", "2", "--d", "3",
        "--map", "sigma", "--roundtrip", "--format", "text",
    )
    assert code == EXIT_OK
    assert "4/4 ok" in out


@pytest.mark.parametrize("label_map", ["pair", "words"])
def test_label_pair_and_words_roundtrip(capsys, label_map):
    code, out, _ = run(
        capsys,
        "label", "--r", "2", "--i", "2", "--d", "3",
        "--map", label_map, "--roundtrip", "--format", "jsonl",
    )
    assert code == EXIT_OK
    lines = [json.loads(line) for line in out.splitlines()]
    manifest = lines[0]
    assert manifest["roundtrip_failures"] == 0
    assert manifest["count"] == 32
    assert all(line["roundtrip_ok"] for line in lines[1:])


def test_label_comp_plain_output(capsys):
    code, out, _ = run(
        capsys,
        "label", "--r", "2", "--i", "1", "--d", "2",
        "--map", "comp", "--format", "json",
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 4
    assert doc["roundtrip_failures"] is None


def test_dual_graph_text_and_dot(capsys):
    code, out, _ = run(
        capsys, "dual-graph", "--r", "2", "--i", "1", "--d", "2"
    )
    assert code == EXIT_OK
    assert out.startswith("# 4 vertices, 3 edges")
    code, out, _ = run(
        capsys,
        "dual-graph", "--r", "2", "--i", "1", "--d", "2", "--format", "dot",
    )
    assert code == EXIT_OK
    assert out.startswith('graph "alcove_atlas" {')
    assert out.count(" -- ") == 3


def test_dual_graph_abstract_models(capsys):
    # i = 1 gives the word graph.
    code, out, _ = run(
        capsys,
        "dual-graph", "--r", "2", "--i", "1", "--d", "3",
        "--abstract", "--format", "json",
    )
    assert code == EXIT_OK
    assert json.loads(out)["order"] == 8
    # r = 1 gives the permutation graph.
    code, out, _ = run(
        capsys,
        "dual-graph", "--r", "1", "--i", "2", "--d", "3",
        "--abstract", "--format", "json",
    )
    assert code == EXIT_OK
    assert json.loads(out)["order"] == 4
    # The general case composes word-graph copies over the base cells.
    code, out, _ = run(
        capsys,
        "dual-graph", "--r", "2", "--i", "2", "--d", "3",
        "--abstract", "--format", "json",
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["order"] == 32 and doc["size"] == 48


def test_dual_graph_writes_file(capsys, tmp_path):
    target = tmp_path / "graph.dot"
    code, out, _ = run(
        capsys,
        "dual-graph", "--r", "2", "--i", "1", "--d", "2",
        "--format", "dot", "--out", str(target),
    )
    assert code == EXIT_OK
    assert out == ""
    assert target.read_text().startswith("graph")


def test_verify_text_and_json(capsys):
    code, out, _ = run(capsys, "verify", "--rmax", "2", "--dmax", "3")
    assert code == EXIT_OK
    assert "all passed" in out
    code, out, _ = run(
        capsys, "verify", "--rmax", "2", "--dmax", "3", "--format", "json"
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["passed"] is True
    assert len(doc["reports"]) == 6


def test_verify_uses_jobs_environment_default(capsys, monkeypatch):
    monkeypatch.setenv("ALCOVE_ATLAS_JOBS", "2")
    code, out, _ = run(capsys, "verify", "--rmax", "1", "--dmax", "2")
    assert code == EXIT_OK
    assert "all passed" in out


def test_conjecture_holds_for_small_case(capsys):
    code, out, _ = run(
        capsys, "conjecture", "--r", "2", "--i", "2", "--d", "3"
    )
    assert code == EXIT_OK
    assert "holds-via-label-map" in out
    assert "holds-via-search" in out


def test_conjecture_json_format(capsys):
    code, out, _ = run(
        capsys,
        "conjecture", "--r", "2", "--i", "2", "--d", "3",
        "--scheme", "facet", "--format", "json",
    )
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["reports"][0]["verdict"] == "holds-via-label-map"


def test_conjecture_zero_budget_is_inconclusive(capsys):
    code, out, _ = run(
        capsys,
        "conjecture", "--r", "2", "--i", "2", "--d", "3",
        "--scheme", "color", "--budget", "0",
    )
    assert code == EXIT_INCONCLUSIVE
    assert "inconclusive" in out


def test_exit_codes_are_distinct():
    assert (EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE) == (
        0, 1, 2, 3,
    )
