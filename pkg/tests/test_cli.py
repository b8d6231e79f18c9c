"""The command surface: every answer is the library's answer, exit codes 0/1/2."""

import json

import pytest

from signedconn.cli import main
from signedconn.io import FIXTURE_NAMES


@pytest.fixture(scope="module")
def fixture_dir(tmp_path_factory):
    outdir = tmp_path_factory.mktemp("fixtures")
    assert main(["fixtures", "--emit", str(outdir)]) == 0
    return outdir


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCommands:
    def test_fixture_emission(self, fixture_dir):
        assert {p.stem for p in fixture_dir.glob("*.sg")} == set(FIXTURE_NAMES)

    def test_sign_isthmi_of_unbalanced_triangle(self, fixture_dir, capsys):
        code, out = run(capsys, "isthmi", "--kind", "sign", str(fixture_dir / "T-.sg"))
        assert code == 0 and out.strip() == "0 1 2"

    def test_sign_components_of_balanced_triangle(self, fixture_dir, capsys):
        code, out = run(capsys, "components", "--kind", "sign", str(fixture_dir / "T+.sg"))
        assert code == 0
        assert out.splitlines() == ["0", "1", "2"]

    def test_lift_rank_of_loose_pair(self, fixture_dir, capsys):
        code, out = run(
            capsys, "rank", "--kind", "lift", "--edges", "all", str(fixture_dir / "LOOSE.sg")
        )
        assert code == 0 and out.strip() == "6"

    def test_frame_rank_subset(self, fixture_dir, capsys):
        code, out = run(
            capsys, "rank", "--kind", "frame", "--edges", "0,1", str(fixture_dir / "T+.sg")
        )
        assert code == 0 and out.strip() == "2"

    def test_circuit_classification(self, fixture_dir, capsys):
        code, out = run(capsys, "circuit", "--edges", "all", str(fixture_dir / "TIGHT.sg"))
        assert code == 0 and out.strip() == "tight-handcuff"

    def test_witness_prints_two_edge_sequences(self, fixture_dir, capsys):
        code, out = run(capsys, "witness", str(fixture_dir / "T-.sg"), "0", "1")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        assert lines[0].split() == ["0"]  # the positive edge 0-1
        assert set(lines[1].split()) == {"1", "2"}  # around the negative side

    def test_articulation(self, fixture_dir, capsys):
        code, out = run(
            capsys, "articulation", "--kind", "sign", str(fixture_dir / "LOOSE.sg")
        )
        assert code == 0 and out.strip() == "0 3"
        code, out = run(
            capsys, "articulation", "--kind", "graph", str(fixture_dir / "LOOSE.sg")
        )
        assert code == 0 and out.strip() == "0 3"

    def test_analyze_json_round_trips(self, fixture_dir, capsys):
        code, out = run(capsys, "analyze", "--json", str(fixture_dir / "LOOSE.sg"))
        assert code == 0
        report = json.loads(out)
        assert report["balanced"] is False
        assert report["sign_isthmi"] == [6]
        assert report["balancing_edges"] == []
        assert report["frame_coloops"] == []
        assert report["lift_coloops"] == [6]
        assert report["frame_connected"] is True
        assert report["lift_connected"] is False

    def test_check_small_bounds_passes(self, capsys):
        code, out = run(capsys, "check", "--max-n", "2", "--max-m", "2")
        assert code == 0
        assert out.count("[pass]") == 9


class TestExitCodes:
    def test_missing_file_is_an_error(self, capsys):
        assert main(["analyze", "/nonexistent.sg"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_syntax_error_reports_line(self, tmp_path, capsys):
        bad = tmp_path / "bad.sg"
        bad.write_text("signed-graph n=2\n0 1 *\n")
        assert main(["analyze", str(bad)]) == 1
        assert "line 2" in capsys.readouterr().err

    def test_precondition_failure_is_an_error(self, fixture_dir, capsys):
        # sign isthmi are undefined for balanced graphs
        assert main(["isthmi", "--kind", "sign", str(fixture_dir / "T+.sg")]) == 1

    def test_bad_edge_id(self, fixture_dir, capsys):
        assert main(["rank", "--kind", "frame", "--edges", "9", str(fixture_dir / "P2.sg")]) == 1
