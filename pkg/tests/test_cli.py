import json

from ncdef.cli import main, run_command


def run(capsys, *argv):
    code, doc = run_command(list(argv))
    captured = capsys.readouterr()
    return code, doc, captured


def strip_timing(doc):
    return {k: v for k, v in doc.items() if k != "timing_ms"}


# ------------------------------------------------------------ happy paths


def test_zoo_laufer_specialized(capsys):
    code, doc, cap = run(
        capsys, "zoo", "laufer", "--n", "1", "--lambda", "0,0",
        "--max-degree", "10",
    )
    assert code == 0
    assert doc["ok"] and doc["dimension"] == 9
    assert doc["status"] == "finite"
    assert "a^2*b^2" in doc["basis"]
    parsed = json.loads(cap.out)
    assert parsed["dimension"] == 9


def test_zoo_laufer_symbolic_reports_presentation(capsys):
    code, doc, _ = run(capsys, "zoo", "laufer", "--n", "1")
    assert code == 0
    assert doc["checks"][0]["detail"]["symbolic"] is True
    assert "generators:" in doc["presentation"]


def test_zoo_laufer_bad_lambda_is_usage_error(capsys):
    code, doc, _ = run(capsys, "zoo", "laufer", "--n", "1", "--lambda", "0")
    assert code == 2 and doc is None


def test_zoo_length2(capsys):
    code, doc, _ = run(capsys, "zoo", "length2", "--max-degree", "8")
    assert code == 0 and doc["ok"]
    prefixes = {c["name"].split(":", 1)[0] for c in doc["checks"]}
    assert prefixes == {"forward", "backward", "abelianized", "s1"}


def test_zoo_karmazyn_render_only(capsys):
    code, doc, _ = run(capsys, "zoo", "karmazyn", "--length", "3")
    assert code == 0
    assert "relations:" in doc["presentation"]


def test_zoo_karmazyn_verify(capsys):
    code, doc, _ = run(
        capsys, "zoo", "karmazyn", "--length", "3", "--verify",
        "--max-degree", "7",
    )
    assert code == 0 and doc["ok"]
    fwd = [c for c in doc["checks"] if c["name"].startswith("forward")]
    assert fwd and all(c["status"] == "certified" for c in fwd)


def test_matfac_verify_all(capsys):
    code, doc, _ = run(capsys, "matfac", "verify-all")
    assert code == 0 and doc["ok"]
    names = {c["name"] for c in doc["checks"]}
    assert "factorization" in names
    assert any(n.startswith("polynomial:n=2:") for n in names)


def test_bundle_by_length(capsys):
    code, doc, _ = run(capsys, "bundle", "--length", "3")
    assert code == 0
    assert (doc["generators"], doc["relations"], doc["quadratic_relations"]) \
        == (5, 12, 9)


def test_bundle_by_degrees(capsys):
    code, doc, _ = run(capsys, "bundle", "--degrees", "1,0,-1")
    assert code == 0 and doc["degrees"] == [1, 0, -1]


def test_bundle_without_selector_is_usage_error(capsys):
    code, doc, _ = run(capsys, "bundle")
    assert code == 2 and doc is None


def test_identities_symbolic_and_rational(capsys):
    code, doc, _ = run(capsys, "identities", "--n", "1")
    assert code == 0 and doc["input"]["lambda"] == "sym"
    code, doc, _ = run(capsys, "identities", "--n", "1", "--lambda", "1/3,0")
    assert code == 0 and doc["input"]["lambda"] == ["1/3", "0"]


# ----------------------------------------------------------- gb subcommand


def test_gb_finite_quotient(tmp_path, capsys):
    f = tmp_path / "alg.txt"
    f.write_text("generators: a\nrelations: a^3\n")
    code, doc, _ = run(capsys, "gb", str(f), "--max-degree", "8")
    assert code == 0
    assert doc["dimension"] == 3 and doc["basis"] == ["1", "a", "a^2"]


def test_gb_not_finite_reports_exit_zero(tmp_path, capsys):
    f = tmp_path / "alg.txt"
    f.write_text("generators: a b\nrelations: a*b + b*a ; a^2 + b^2\n")
    code, doc, _ = run(capsys, "gb", str(f), "--max-degree", "10")
    assert code == 0
    assert doc["status"] == "not-finite" and doc["up_to"] == 10
    assert doc["checks"][0]["detail"]["outcome"] == "not-finite"


def test_gb_parse_error_exit_two(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("generators: a\nrelations: a + %\n")
    code, doc, cap = run(capsys, "gb", str(f))
    assert code == 2 and doc is None
    assert "error" in cap.err


def test_gb_missing_file_exit_two(capsys):
    code, doc, _ = run(capsys, "gb", "/nonexistent/alg.txt")
    assert code == 2 and doc is None


# ------------------------------------------------------------ infrastructure


def test_json_deterministic_across_runs(capsys):
    _, d1, _ = run(capsys, "zoo", "laufer", "--n", "1", "--lambda", "0,0",
                   "--max-degree", "8")
    _, d2, _ = run(capsys, "zoo", "laufer", "--n", "1", "--lambda", "0,0",
                   "--max-degree", "8")
    assert strip_timing(d1) == strip_timing(d2)


def test_out_file_and_text_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, cap = run(capsys, "bundle", "--length", "2", "--out", str(out))
    assert code == 0 and cap.out == ""
    assert json.loads(out.read_text())["generators"] == 3
    code, _, cap = run(capsys, "bundle", "--length", "2", "--report", "text")
    assert code == 0 and "overall: ok" in cap.out


def test_env_max_degree(monkeypatch, capsys):
    monkeypatch.setenv("NCDEF_MAX_DEGREE", "7")
    code, doc, _ = run(capsys, "zoo", "laufer", "--n", "1", "--lambda", "0,0")
    assert code == 0
    assert doc["input"]["max_degree"] == 7


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["zoo"]) == 2
    assert main(["bundle", "--length", "9"]) == 2
    capsys.readouterr()


def test_version_exits_zero(capsys):
    code, doc, cap = run(capsys, "--version")
    assert code == 0 and doc is None
    assert cap.out.strip()
