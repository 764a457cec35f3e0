import pytest

from localekit import cli, io
from localekit.lattice import NotALattice
from localekit.spaces import sierpinski


@pytest.fixture
def c3_file(tmp_path):
    path = tmp_path / "c3.lat"
    path.write_text("lattice 3\n0 < 1\n1 < 2\n")
    return str(path)


@pytest.fixture
def b2_file(tmp_path):
    path = tmp_path / "b2.lat"
    path.write_text("lattice 4\n0 < 1\n0 < 2\n1 < 3\n2 < 3\n")
    return str(path)


@pytest.fixture
def sier_file(tmp_path):
    path = tmp_path / "sier.space"
    path.write_text("space 2\n00\n01\n11\n")
    return str(path)


class TestIO:
    def test_cover_and_full_relation_forms_agree(self):
        covers = io.load_lattice_text("lattice 3\n0 < 1\n1 < 2\n")
        full = io.load_lattice_text("lattice 3\n0 <= 1\n1 <= 2\n0 <= 2\n0 <= 0\n")
        assert (covers.leq == full.leq).all()

    def test_canonical_echo(self):
        frame = io.load_lattice_text("lattice 3\n2 < 1\n1 < 0\n")  # upside down
        assert io.format_lattice(frame) == "lattice 3\n0 < 1\n1 < 2\n"

    def test_comments_and_blanks(self):
        frame = io.load_lattice_text("# chain\nlattice 2\n\n0 < 1  # cover\n")
        assert frame.n == 2

    def test_parse_error_carries_line(self):
        with pytest.raises(io.ParseError) as err:
            io.load_lattice_text("lattice 2\n0 ! 1\n")
        assert err.value.line == 2

    def test_lattice_error_propagates(self):
        with pytest.raises(NotALattice):
            io.load_lattice_text(
                "lattice 6\n0 < 1\n0 < 2\n1 < 3\n1 < 4\n2 < 3\n2 < 4\n3 < 5\n4 < 5\n")

    def test_space_roundtrip(self):
        space = io.load_space_text("space 2\n01\n")  # empty/full implied
        assert space.opens == (0, 2, 3)
        assert io.format_space(space) == "space 2\n00\n01\n11\n"

    def test_space_bad_width(self):
        with pytest.raises(io.ParseError):
            io.load_space_text("space 2\n010\n")

    def test_sniffing_loader(self):
        assert io.load_any("lattice 1\n").n == 1
        assert io.load_any("space 1\n0\n1\n").points == 1
        with pytest.raises(io.ParseError):
            io.load_any("graph 1\n")

    def test_dot_hasse(self, c3):
        dot = io.dot_hasse(c3)
        assert dot.count("->") == 2 and "digraph" in dot

    def test_dot_specialization(self):
        dot = io.dot_specialization(sierpinski())
        assert '"p0" -> "p1";' in dot and '"p1" -> "p0";' not in dot


class TestCliCommands:
    def test_check_frame(self, c3_file, capsys):
        assert cli.main(["check-frame", c3_file]) == 0
        out = capsys.readouterr().out
        assert "valid frame with 3 elements" in out
        assert "lattice 3" in out

    def test_separation_exit_codes(self, c3_file, b2_file, capsys):
        assert cli.main(["separation", c3_file, "--axiom", "subfit"]) == 1
        assert "witness 1,0" in capsys.readouterr().out
        assert cli.main(["separation", b2_file, "--axiom", "subfit"]) == 0
        assert cli.main(["separation", c3_file, "--axiom", "ppt"]) == 0
        assert cli.main(["separation", c3_file, "--axiom", "symmetric"]) == 1
        assert cli.main(["separation", c3_file, "--axiom", "pcformula"]) == 0

    def test_sublocales_listing(self, c3_file, capsys):
        assert cli.main(["sublocales", c3_file]) == 0
        out = capsys.readouterr().out
        assert "4 sublocales" in out

    def test_sc_listing(self, c3_file, capsys):
        assert cli.main(["--machine", "sc", c3_file]) == 0
        out = capsys.readouterr().out
        assert "label=c(1)" in out

    def test_realline_lemma1(self, capsys):
        assert cli.main(["realline", "lemma1", "--set", "(1,2)", "--n", "4"]) == 0
        assert "(-1/4,1/4);(1,2)" in capsys.readouterr().out

    def test_realline_obstruct(self, capsys):
        assert cli.main(["realline", "obstruct", "--set", "(1,2)", "--x", "1/2"]) == 0
        assert "N=3" in capsys.readouterr().out

    def test_realline_obstruct_zero_fails(self, capsys):
        assert cli.main(["realline", "obstruct", "--set", "(1,2)", "--x", "0"]) == 1

    def test_realline_prop2(self, capsys):
        code = cli.main(["realline", "prop2", "--u", "(1,2)", "--v", "(1,2)", "--n", "2"])
        assert code == 0
        out = capsys.readouterr().out
        assert "U_2=(-1/2,0);(0,1/2);(1,2)" in out
        assert "V_2=(-1/2,1/2);(1,2)" in out

    def test_realline_prop1(self, capsys):
        code = cli.main(["realline", "prop1", "--u", "(-inf,0);(0,inf)",
                         "--v", "(-inf,inf)", "--n", "5"])
        assert code == 0
        assert "forced=False" in capsys.readouterr().out

    def test_spaces_check(self, sier_file, capsys):
        assert cli.main(["spaces", "check", sier_file]) == 1
        assert "symmetric: False" in capsys.readouterr().out

    def test_spaces_enumerate(self, capsys):
        assert cli.main(["--machine", "spaces", "enumerate", "--n", "2"]) == 0
        out = capsys.readouterr().out
        assert "count=4" in out

    def test_export_dot_targets(self, c3_file, sier_file, capsys):
        for target in ("hasse", "sublocales", "sc"):
            assert cli.main(["export-dot", c3_file, "--target", target]) == 0
            assert "digraph" in capsys.readouterr().out
        assert cli.main(["export-dot", sier_file, "--target", "specialization"]) == 0
        capsys.readouterr()
        assert cli.main(["export-dot", sier_file, "--target", "hasse"]) == 2

    def test_parse_error_exit(self, tmp_path, capsys):
        bad = tmp_path / "bad.lat"
        bad.write_text("lattice x\n")
        assert cli.main(["check-frame", str(bad)]) == 2
        assert "error" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert cli.main(["check-frame", "/nonexistent.lat"]) == 2

    def test_budget_flag(self, b2_file, capsys):
        assert cli.main(["--budget", "2", "sublocales", b2_file]) == 2
        assert "budget" in capsys.readouterr().err


class TestCampaigns:
    def test_lattice_campaign_passes(self, capsys):
        code = cli.main(["--machine", "campaign", "lattices", "--max-size", "4",
                         "--checks", "frame-laws,identities,coframe-law,ppt"])
        assert code == 0
        out = capsys.readouterr().out
        assert "violation=0" in out and "fail=0" in out

    def test_space_campaign_counts(self, capsys):
        code = cli.main(["--machine", "campaign", "spaces", "--points", "3",
                         "--checks", "space-proposition,td-remark"])
        assert code == 0
        assert "count=29" in capsys.readouterr().out

    def test_realline_campaign(self, capsys):
        code = cli.main(["--machine", "--seed", "42", "campaign", "realline",
                         "--count", "20",
                         "--checks", "boolean-laws,raw-open-laws,prop1-forcing"])
        assert code == 0
        assert "violation=0" in capsys.readouterr().out

    def test_unknown_check_rejected(self, capsys):
        assert cli.main(["campaign", "lattices", "--checks", "nope"]) == 2
        assert "nope" in capsys.readouterr().err

    def test_machine_reports_are_deterministic(self, capsys):
        argv = ["--machine", "--seed", "42", "campaign", "realline", "--count", "15",
                "--checks", "boolean-laws,lemma1-invariants"]
        assert cli.main(argv) == 0
        first = capsys.readouterr().out
        assert cli.main(argv) == 0
        second = capsys.readouterr().out
        assert first == second
