import json

from svbraid.cli import run


def test_parse_echoes_normal_spelling():
    code, out = run(["parse", "--n", "3", "r1 s2' t1 r2 s2 t2"])
    assert code == 0
    assert out == "r1 s2' t1 r2 s2 t2\n"


def test_parse_json_payload():
    code, out = run(["parse", "--n", "2", "s1 s1'", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"n": 2, "word": "s1 s1'", "length": 2}


def test_invariants_text_and_json():
    code, out = run(["invariants", "--n", "3", "t1 t2"])
    assert code == 0
    assert out == "theta: [3, 1, 2]\ndegree: 0\nsingularities: 2\n"
    code, out = run(["invariants", "--n", "3", "t1 t2", "--format", "json"])
    assert json.loads(out) == {"theta": [3, 1, 2], "degree": 0, "singularities": 2}


def test_equiv_exit_codes():
    code, out = run(["equiv", "--n", "2", "s1 s1'", "e"])
    assert code == 0 and out.startswith("equivalent")
    code, out = run(["equiv", "--n", "2", "s1", "s1'"])
    assert code == 3 and out.startswith("distinct")
    # same invariants, genuinely different diagrams: bounded search gives up
    code, out = run(["equiv", "--n", "3", "s1 t2", "r1 s1 r1 t2",
                     "--budget", "3000"])
    assert code == 4 and out.startswith("unknown")


def test_equiv_json_trace():
    code, out = run(["equiv", "--n", "2", "t1 s1", "s1 t1", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "equivalent"
    assert payload["moves"] == 1
    assert payload["trace"][0]["label"] == "S3"


def test_gauss_roundtrip_through_cli():
    code, out = run(["to-gauss", "--n", "3", "s1 t2", "--format", "json"])
    assert code == 0
    diagram = json.loads(out)
    assert diagram == {"n": 3,
                       "arrows": [{"tail": 1, "head": 2, "kind": "+"},
                                  {"tail": 1, "head": 3, "kind": "s"}],
                       "perm": [3, 1, 2]}
    code, out = run(["from-gauss", json.dumps(diagram)])
    assert code == 0
    assert out == "s1 t2\n"


def test_from_gauss_bad_json_is_domain_error():
    code, out = run(["from-gauss", "{not json"])
    assert code == 1 and out == ""


def test_desing_worked_example():
    code, out = run(["desing", "--n", "3", "r1 s2' t1 r2 s2 t2"])
    assert code == 0
    assert out == ("+1 r1 s2' s1 r2 s2 s2\n"
                   "-1 r1 s2' s1 r2 s2 s2'\n"
                   "-1 r1 s2' s1' r2 s2 s2\n"
                   "+1 r1 s2' s1' r2 s2 s2'\n"
                   "spectrum: -2:1 0:2 2:1\n")
    code, out = run(["desing", "--n", "3", "r1 s2' t1 r2 s2 t2",
                     "--format", "json"])
    payload = json.loads(out)
    assert [r["coeff"] for r in payload["terms"]] == [1, -1, -1, 1]
    assert payload["spectrum"] == {"-2": 1, "0": 2, "2": 1}


def test_decompose_and_factor():
    code, out = run(["decompose", "--n", "3", "s1 t2", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"pure": "X+1,2 Y1,3", "perm": [3, 1, 2]}
    code, out = run(["factor", "--n", "3", "r1 s2' t1 r2 s2 t2",
                     "--format", "json"])
    assert json.loads(out) == {
        "taus": [{"conjugator": "r1 s2'", "index": 1},
                 {"conjugator": "r1 s2' r2 s2", "index": 2}],
        "virtual": "r1 s2' r2 s2"}


def test_genus_json_schema():
    code, out = run(["genus", "--n", "2", "r1", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"euler": -2, "boundaries": 4, "genus": 0}


def test_relations_listing():
    code, out = run(["relations", "--n", "2"])
    assert code == 0
    assert out.splitlines() == ["R2: s1 s1' == e", "R2: s1' s1 == e",
                                "V3: r1 r1 == e", "S3: t1 s1 == s1 t1"]
    code, out = run(["relations", "--n", "3", "--format", "json"])
    assert len(json.loads(out)) == 13


def test_verify_suite_passes():
    code, out = run(["verify", "relations", "--n", "3"])
    assert code == 0
    assert out.splitlines()[-1] == "relations: 13 passed, 0 failed"
    code, out = run(["verify", "surface", "--n", "3", "--seed", "5",
                     "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["counts"]["failed"] == 0


def test_error_exit_codes():
    code, out = run(["parse", "--n", "2", "s5"])
    assert code == 1 and out == ""
    code, out = run(["parse", "s1"])
    assert code == 2
    code, out = run(["verify", "nonsense", "--n", "3"])
    assert code == 2
    code, out = run(["equiv", "--n", "2", "s1", "s1", "--budget", "0"])
    assert code == 1


def test_output_is_deterministic():
    argv = ["verify", "degree-lemma", "--n", "4", "--seed", "9",
            "--format", "json"]
    assert run(argv) == run(argv)
