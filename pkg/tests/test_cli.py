import json
import subprocess
import sys
from pathlib import Path

FIXTURES = Path(__file__).parent.parent / "fixtures"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "torsionheart.cli", *args],
        capture_output=True, text=True,
    )


def test_indec_text():
    out = run_cli("indec", str(FIXTURES / "a2.quiver"))
    assert out.returncode == 0
    assert "3 indecomposables" in out.stdout
    assert "brick=yes" in out.stdout


def test_indec_json_schema():
    out = run_cli("indec", str(FIXTURES / "a2.quiver"), "--format", "json")
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["schemaVersion"] == "1"
    assert len(payload["universe"]) == 3
    assert payload["algebra"]["field"] == 2
    assert payload["complete"] is True
    assert len(payload["homTable"]) == 3


def test_indec_single_vertex(tmp_path):
    f = tmp_path / "a1.quiver"
    f.write_text("field 2\nvertices v\n")
    out = run_cli("indec", str(f))
    assert out.returncode == 0
    assert "1 indecomposables" in out.stdout


def test_indec_incomplete_bound_exit_code():
    out = run_cli("indec", str(FIXTURES / "a2.quiver"), "--dim-bound", "1,0")
    assert out.returncode == 3
    assert "incomplete" in out.stderr


def test_parse_error_exit_code(tmp_path):
    f = tmp_path / "bad.quiver"
    f.write_text("vertices 1 2\n")
    out = run_cli("indec", str(f))
    assert out.returncode == 1


def test_resource_error_exit_code():
    out = run_cli("indec", str(FIXTURES / "a2.quiver"), "--dim-bound", "9,9")
    assert out.returncode == 2


def test_heart_report_a2():
    out = run_cli("heart", str(FIXTURES / "a2.quiver"), "--gens", "1.0")
    assert out.returncode == 0
    assert "hereditary" in out.stdout
    assert "special: 0 -> (0,1) -> (1,1) -> (1,0) -> 0" in out.stdout
    assert "critical: 0 -> (1,1) -> (1,1) -> (0,0) -> 0" in out.stdout


def test_heart_report_json():
    out = run_cli("heart", str(FIXTURES / "a2.quiver"), "--gens", "1.0",
                  "--format", "json")
    payload = json.loads(out.stdout)
    assert payload["schemaVersion"] == "1"
    cot = payload["cotilting"]
    assert cot["C0"]["dims"] == [2, 2]
    assert cot["C1"]["dims"] == [0, 1]
    assert cot["tildeC"]["summands"] == cot["C"]["summands"]
    kinds = sorted(s["kind"] for s in payload["heartSimples"])
    assert kinds == ["torsion almost torsion-free, shifted",
                     "torsion-free almost torsion"]
    assert payload["classification"]["critical"] != \
        payload["classification"]["special"]
    assert all(c["passed"] for c in payload["checks"])


def test_heart_empty_generators_is_module_category():
    out = run_cli("heart", str(FIXTURES / "a2.quiver"), "--format", "json")
    payload = json.loads(out.stdout)
    assert payload["torsionPair"]["torsion"] == []
    assert len(payload["heartSimples"]) == 2
    assert payload["classification"]["special"] == []


def test_heart_not_cotilting_diagnostic():
    # torsion class generated by S(2) alone
    out = run_cli("heart", str(FIXTURES / "a2.quiver"), "--gens", "0.1")
    assert out.returncode == 1
    assert "not cotilting" in out.stderr
    assert "Cogen" in out.stderr


def test_heart_oracle_flag_check():
    out = run_cli("heart", str(FIXTURES / "a2.quiver"), "--gens", "1.0",
                  "--oracle", "--format", "json")
    payload = json.loads(out.stdout)
    agreement = [c for c in payload["checks"]
                 if c["name"] == "fast-oracle-agreement"]
    assert agreement and agreement[0]["passed"]


def test_heart_generator_by_index_matches_dim_vector():
    by_dim = run_cli("heart", str(FIXTURES / "a2.quiver"), "--gens", "1.0",
                     "--format", "json")
    payload = json.loads(by_dim.stdout)
    idx = next(s["index"] for s in payload["heartSimples"] if s["shifted"])
    by_idx = run_cli("heart", str(FIXTURES / "a2.quiver"), "--gens", str(idx),
                     "--format", "json")
    assert by_idx.stdout == by_dim.stdout


def test_tors_dot_output():
    out = run_cli("tors", str(FIXTURES / "a2.quiver"), "--format", "dot")
    assert out.returncode == 0
    lines = out.stdout.strip().splitlines()
    assert lines[0] == "digraph tors {"
    assert lines[-1] == "}"
    assert sum(1 for ln in lines if "->" in ln) == 5
    assert sum(1 for ln in lines if "label=" in ln and "->" not in ln) == 5


def test_tors_a3_node_count():
    out = run_cli("tors", str(FIXTURES / "a3.quiver"), "--format", "json")
    payload = json.loads(out.stdout)
    assert len(payload["lattice"]["classes"]) == 14


def test_tors_a1_chain(tmp_path):
    f = tmp_path / "a1.quiver"
    f.write_text("field 2\nvertices v\n")
    out = run_cli("tors", str(f), "--format", "dot")
    assert out.returncode == 0
    assert sum(1 for ln in out.stdout.splitlines() if "->" in ln) == 1


def test_verify_a2_passes():
    out = run_cli("verify", str(FIXTURES / "a2.quiver"))
    assert out.returncode == 0
    lines = [ln for ln in out.stdout.splitlines() if ln]
    assert all(ln.startswith("PASS") for ln in lines)
    assert any("oracle-equivalence" in ln for ln in lines)


def test_verify_incomplete_universe_exit3():
    out = run_cli("verify", str(FIXTURES / "a2.quiver"), "--dim-bound", "1,0")
    assert out.returncode == 3
    assert "FAIL universe-completeness" in out.stdout


def test_field_override_flag():
    out = run_cli("indec", str(FIXTURES / "a2.quiver"), "--field", "3",
                  "--format", "json")
    payload = json.loads(out.stdout)
    assert payload["algebra"]["field"] == 3
    assert len(payload["universe"]) == 3


def test_deterministic_output():
    a = run_cli("heart", str(FIXTURES / "a2.quiver"), "--gens", "1.0",
                "--format", "json")
    b = run_cli("heart", str(FIXTURES / "a2.quiver"), "--gens", "1.0",
                "--format", "json")
    assert a.stdout == b.stdout


def test_verify_nakayama_zero_relation(tmp_path):
    # linear quiver with a zero relation: five interval modules survive
    f = tmp_path / "nakayama.quiver"
    f.write_text(
        "field 2\nvertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n"
        "relation a*b\n")
    out = run_cli("verify", str(f))
    assert out.returncode == 0
    assert "5 indecomposables closed" in out.stdout
    assert "2 cotilting pairs among 12 torsion classes" in out.stdout
