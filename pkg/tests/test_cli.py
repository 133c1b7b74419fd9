import json

from conftest import run_cli


def test_classify_type4(F5):
    res = run_cli("classify", "--p", "5", "--s", "1", "--matrix", "0,1,4,1")
    assert res.returncode == 0
    out = json.loads(res.stdout)
    assert out["type"] == 4 and out["order"] == 3
    assert out["reduced"] == [0, 1, 4, 1] and out["param"] == 4

def test_classify_type2(F3):
    res = run_cli("classify", "--p", "3", "--s", "1", "--matrix", "0,1,2,1")
    out = json.loads(res.stdout)
    assert res.returncode == 0 and out["type"] == 2 and out["reduced"] == [1, 0, 1, 1]

def test_classify_identity_exits_zero():
    res = run_cli("classify", "--p", "2", "--s", "1", "--matrix", "1,0,0,1")
    assert res.returncode == 0
    assert json.loads(res.stdout)["type"] == "identity"

def test_classify_rejects_singular_matrix():
    res = run_cli("classify", "--p", "3", "--s", "1", "--matrix", "1,1,1,1")
    assert res.returncode == 2

def test_classify_rejects_bad_field():
    res = run_cli("classify", "--p", "6", "--s", "1", "--matrix", "0,1,1,0")
    assert res.returncode == 2


def test_qmap_q3():
    res = run_cli("qmap", "--p", "3", "--s", "1", "--matrix", "0,1,2,1")
    out = json.loads(res.stdout)
    assert res.returncode == 0
    assert out["num"]["coeffs"] == [0, 1, 1]
    assert out["den"]["coeffs"] == [2, 0, 0, 1]
    assert out["fixed_point_verified"] is True

def test_qmap_q5():
    res = run_cli("qmap", "--p", "5", "--s", "1", "--matrix", "0,1,4,1")
    out = json.loads(res.stdout)
    assert out["num"]["coeffs"] == [4, 0, 3, 1]
    assert out["den"]["coeffs"] == [0, 3, 3]

def test_qmap_q2():
    res = run_cli("qmap", "--p", "2", "--s", "1", "--matrix", "0,1,1,1")
    out = json.loads(res.stdout)
    assert out["num"]["text"] == "x^3+x^2+1" and out["den"]["text"] == "x^2+x"

def test_qmap_identity_exits_two():
    res = run_cli("qmap", "--p", "2", "--s", "1", "--matrix", "1,0,0,1")
    assert res.returncode == 2


def test_invariants_cubics_with_check():
    res = run_cli("invariants", "--p", "2", "--s", "1", "--matrix", "0,1,1,1",
                  "--m", "1", "--check")
    out = json.loads(res.stdout)
    assert res.returncode == 0 and out["checked"] is True
    assert [f["text"] for f in out["invariants"]] == ["x^3+x+1", "x^3+x^2+1"]

def test_invariants_empty_list_exits_zero():
    res = run_cli("invariants", "--p", "2", "--s", "1", "--matrix", "0,1,1,1",
                  "--m", "2")
    out = json.loads(res.stdout)
    assert res.returncode == 0 and out["count"] == 0 and out["invariants"] == []

def test_invariants_small_degree_exits_two():
    res = run_cli("invariants", "--p", "2", "--s", "1", "--matrix", "1,0,1,1",
                  "--m", "1")
    assert res.returncode == 2


def test_count_all_methods_agree():
    res = run_cli("count", "--p", "3", "--s", "1", "--matrix", "0,1,2,0",
                  "--n", "4", "--method", "all")
    out = json.loads(res.stdout)
    assert res.returncode == 0
    assert out["formula"] == out["brute"] == out["criterion"] == 2
    assert out["agree"] is True

def test_count_brute_off_multiple():
    res = run_cli("count", "--p", "2", "--s", "1", "--matrix", "0,1,1,1",
                  "--n", "5", "--method", "brute")
    assert res.returncode == 0 and json.loads(res.stdout)["brute"] == 0

def test_count_formula_quadratic_domain_error():
    res = run_cli("count", "--p", "2", "--s", "1", "--matrix", "0,1,1,1",
                  "--n", "2", "--method", "formula")
    assert res.returncode == 2
    assert "n > 2" in res.stderr


def test_verify_counting_suite_passes():
    res = run_cli("verify", "--suite", "counting", "--p", "2", "--s", "1")
    assert res.returncode == 0

def test_verify_action_laws_exhaustive_q2():
    res = run_cli("verify", "--suite", "action-laws", "--p", "2", "--s", "1",
                  "--format", "tsv")
    assert res.returncode == 0
    assert "FAIL" not in res.stdout

def test_verify_noncyclic_seeded():
    res = run_cli("verify", "--suite", "noncyclic", "--p", "3", "--s", "1",
                  "--seed", "7")
    assert res.returncode == 0

def test_verify_output_is_deterministic():
    args = ("verify", "--suite", "sigma", "--p", "3", "--s", "1", "--seed", "42")
    assert run_cli(*args).stdout == run_cli(*args).stdout

def test_json_output_round_trips():
    res = run_cli("verify", "--suite", "qmap-fixed-point", "--p", "3", "--s", "1")
    rows = json.loads(res.stdout)
    assert all(set(r) == {"suite", "name", "passed", "detail"} for r in rows)

def test_tsv_has_fixed_header():
    res = run_cli("count", "--p", "3", "--s", "1", "--matrix", "0,1,2,0",
                  "--n", "4", "--method", "all", "--format", "tsv")
    header = res.stdout.splitlines()[0].split("\t")
    assert header[0] == "field" and "formula" in header
