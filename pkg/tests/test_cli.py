import json

import pytest

from ranktwo.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBuildEnumerate:
    def test_round_trip(self, tmp_path, capsys):
        poset_file = tmp_path / "p.json"
        lattice_file = tmp_path / "l.json"
        code, _, _ = run(capsys, "build", "--algebra", "c2", "--weight", "1,1",
                         "--order", "ba", "--out", str(poset_file))
        assert code == 0
        code, _, _ = run(capsys, "enumerate", "--in", str(poset_file),
                         "--out", str(lattice_file))
        assert code == 0
        obj = json.loads(lattice_file.read_text())
        assert len(obj["elements"]) == 16
        assert len(obj["covers"]) == 23

    def test_deterministic_bytes(self, tmp_path, capsys):
        f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
        for f in (f1, f2):
            run(capsys, "build", "--algebra", "g2", "--weight", "2,1",
                "--out", str(f))
        assert f1.read_bytes() == f2.read_bytes()

    def test_max_ideals_guard(self, tmp_path, capsys):
        poset_file = tmp_path / "p.json"
        run(capsys, "build", "--algebra", "g2", "--weight", "2,2",
            "--out", str(poset_file))
        code, _, err = run(capsys, "enumerate", "--in", str(poset_file),
                           "--out", str(tmp_path / "l.json"), "--max-ideals", "10")
        assert code == 1
        assert "refused" in err


class TestCharacter:
    def test_verify_infers_algebra_and_weight(self, tmp_path, capsys):
        poset_file, lattice_file = tmp_path / "p.json", tmp_path / "l.json"
        run(capsys, "build", "--algebra", "a2", "--weight", "1,1",
            "--out", str(poset_file))
        run(capsys, "enumerate", "--in", str(poset_file), "--out", str(lattice_file))
        code, out, _ = run(capsys, "character", "--in", str(lattice_file), "--verify")
        assert code == 0
        assert "PASS (algebra a2, weight 1,1)" in out

    def test_prints_sorted_terms(self, tmp_path, capsys):
        poset_file, lattice_file = tmp_path / "p.json", tmp_path / "l.json"
        run(capsys, "build", "--algebra", "a2", "--weight", "1,0",
            "--out", str(poset_file))
        run(capsys, "enumerate", "--in", str(poset_file), "--out", str(lattice_file))
        code, out, _ = run(capsys, "character", "--in", str(lattice_file))
        assert code == 0
        assert out.strip() == "1*x^-1*y^1 + 1*x^0*y^-1 + 1*x^1*y^0"


class TestRgf:
    def test_check_product(self, capsys):
        code, out, _ = run(capsys, "rgf", "--algebra", "g2", "--weight", "2,2",
                           "--check-product")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[-1] == "PASS"
        coeffs = [int(c) for c in lines[0].split()]
        assert sum(coeffs) == 729
        assert coeffs == coeffs[::-1]


class TestTableaux:
    def test_count_only(self, capsys):
        code, out, _ = run(capsys, "tableaux", "--algebra", "g2",
                           "--weight", "2,2", "--count-only")
        assert code == 0 and out.strip() == "729"

    def test_stream(self, capsys):
        code, out, _ = run(capsys, "tableaux", "--algebra", "c2", "--weight", "1,1")
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 16
        assert lines[0] == "[1,2][1]" and lines[-1] == "[3,4][4]"

    def test_littelmann_stream(self, capsys):
        code, out, _ = run(capsys, "tableaux", "--algebra", "c2", "--weight", "1,1",
                           "--littelmann", "--count-only")
        assert code == 0 and out.strip() == "16"


class TestVerifyCommand:
    def test_structure_fixture_fails(self, tmp_path, capsys):
        report = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "--structure", "nonsplitting_grid",
                           "--out", str(report))
        assert code == 1
        assert "FAIL" in out and "no matrix M" in out
        obj = json.loads(report.read_text())
        assert obj["checks"][0]["status"] == "FAIL"
        assert set(obj["checks"][0]) == {"name", "params", "status", "millis"}

    def test_structure_on_built_file(self, tmp_path, capsys):
        poset_file = tmp_path / "p.json"
        run(capsys, "build", "--algebra", "c2", "--weight", "1,1",
            "--out", str(poset_file))
        code, out, _ = run(capsys, "verify", "--structure", str(poset_file))
        assert code == 0 and "PASS" in out

    def test_bijection_small_range(self, capsys):
        code, out, _ = run(capsys, "verify", "--bijection", "--seed-range", "1,1")
        assert code == 0
        assert "tableau_suite" in out

    def test_missing_fixture(self, capsys):
        code, _, err = run(capsys, "verify", "--structure", "no_such_thing")
        assert code == 2


class TestExport:
    def test_json_round_trip_is_identity(self, tmp_path, capsys):
        poset_file = tmp_path / "p.json"
        run(capsys, "build", "--algebra", "c2", "--weight", "2,1",
            "--out", str(poset_file))
        code, out, _ = run(capsys, "export", "--in", str(poset_file),
                           "--format", "json")
        assert code == 0
        assert out == poset_file.read_text()

    def test_empty_poset_dot(self, tmp_path, capsys):
        poset_file = tmp_path / "p.json"
        run(capsys, "build", "--algebra", "a2", "--weight", "0,0",
            "--out", str(poset_file))
        code, out, _ = run(capsys, "export", "--in", str(poset_file),
                           "--format", "dot")
        assert code == 0
        assert out.startswith("digraph poset {") and out.rstrip().endswith("}")

    def test_lattice_dot_edges(self, tmp_path, capsys):
        poset_file, lattice_file = tmp_path / "p.json", tmp_path / "l.json"
        run(capsys, "build", "--algebra", "c2", "--weight", "1,1",
            "--out", str(poset_file))
        run(capsys, "enumerate", "--in", str(poset_file), "--out", str(lattice_file))
        code, out, _ = run(capsys, "export", "--in", str(lattice_file),
                           "--format", "dot")
        assert code == 0
        assert out.count("->") == 23
        assert 'label="a"' in out and 'label="b"' in out

    def test_unknown_format_is_usage_error(self, tmp_path, capsys):
        poset_file = tmp_path / "p.json"
        run(capsys, "build", "--algebra", "a2", "--weight", "1,0",
            "--out", str(poset_file))
        with pytest.raises(SystemExit) as exc:
            main(["export", "--in", str(poset_file), "--format", "png"])
        assert exc.value.code == 2

    def test_text_summary(self, tmp_path, capsys):
        poset_file = tmp_path / "p.json"
        run(capsys, "build", "--algebra", "g2", "--weight", "1,1",
            "--out", str(poset_file))
        code, out, _ = run(capsys, "export", "--in", str(poset_file),
                           "--format", "text")
        assert code == 0 and "16 vertices" in out


def test_corrupt_file_is_reported(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "nope"}')
    code, _, err = run(capsys, "export", "--in", str(bad), "--format", "json")
    assert code == 2 and "error" in err


def test_character_verify_on_trivial_lattice(tmp_path, capsys):
    poset_file, lattice_file = tmp_path / "p.json", tmp_path / "l.json"
    run(capsys, "build", "--algebra", "g2", "--weight", "0,0",
        "--out", str(poset_file))
    run(capsys, "enumerate", "--in", str(poset_file), "--out", str(lattice_file))
    code, out, _ = run(capsys, "character", "--in", str(lattice_file), "--verify")
    assert code == 0 and "PASS" in out
