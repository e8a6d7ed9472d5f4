"""Integration tests for the workbench CLI."""

import pytest
from click.testing import CliRunner

from src.contexts.calculus.presentation.cli.commands import cli

SCENARIO = """ctx m:A \\/ B, n:C -> D, o:C -> D, e:C;
M = m;
N1 = n;
N2 = o;
eps = e;
"""


@pytest.fixture
def runner():
    """Fixture that provides a click runner."""
    return CliRunner()


@pytest.fixture
def write(tmp_path):
    """Fixture that writes a source file and returns its path."""

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


class TestCheckCommand:
    """Integration tests for the check command."""

    def test_should_print_type(self, runner, write):
        """Should print the type and exit 0."""
        result = runner.invoke(cli, ["check", write("id.nd", "\\x:A. x")])

        assert result.exit_code == 0
        assert result.stdout == "A -> A\n"

    def test_should_exit_1_on_type_error(self, runner, write):
        """Should print a located error on stderr."""
        result = runner.invoke(cli, ["check", write("bad.nd", "ctx y:A; (y y)")])

        assert result.exit_code == 1
        assert result.stdout == ""
        assert "error: TypingException: at /elim: application of non-function A" in result.stderr

    def test_should_exit_1_on_syntax_error(self, runner, write):
        """Should report parse errors as domain errors."""
        result = runner.invoke(cli, ["check", write("bad.nd", "(x ]")])

        assert result.exit_code == 1
        assert "error: SyntaxErrorException: 1:4:" in result.stderr

    def test_should_exit_1_on_undecodable_file(self, runner, tmp_path):
        """Should report bytes outside UTF-8 as a located syntax error."""
        path = tmp_path / "latin.nd"
        path.write_bytes(b"\\x:A. \xff")

        result = runner.invoke(cli, ["check", str(path)])

        assert result.exit_code == 1
        assert result.stdout == ""
        assert (
            "error: SyntaxErrorException: 1:7: latin.nd: invalid UTF-8 byte at offset 6"
            in result.stderr
        )

    def test_should_exit_2_on_missing_file(self, runner, tmp_path):
        """Should treat a missing file as a usage error."""
        result = runner.invoke(cli, ["check", str(tmp_path / "missing.nd")])

        assert result.exit_code == 2


class TestStepCommand:
    """Integration tests for the step command."""

    def test_should_print_reduct(self, runner, write):
        """Should contract the selected redex."""
        result = runner.invoke(cli, ["step", write("beta.nd", "(\\x:A. x y)")])

        assert result.exit_code == 0
        assert result.stdout == "y\n"

    def test_should_exit_1_on_normal_form(self, runner, write):
        """Should report that nothing reduces."""
        result = runner.invoke(cli, ["step", write("nf.nd", "y")])

        assert result.exit_code == 1
        assert "error: NotARedexException: no redex at /" in result.stderr

    def test_should_exit_2_on_unknown_strategy(self, runner, write):
        """Should refuse strategies outside the choice."""
        result = runner.invoke(
            cli, ["step", write("beta.nd", "(\\x:A. x y)"), "--strategy", "random"]
        )

        assert result.exit_code == 2


class TestNormalizeCommand:
    """Integration tests for the normalize command."""

    def test_should_print_trace_and_normal_form(self, runner, write):
        """Should print one line per step before the result."""
        source = write("dup.nd", "(\\x:A. <x, x> (\\y:A. y z))")
        result = runner.invoke(
            cli, ["normalize", source, "--strategy", "leftmost", "--trace"]
        )

        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert [line.split("\t")[0] for line in lines[:-1]] == [
            "/ Beta",
            "/left Beta",
            "/right Beta",
        ]
        assert lines[-1] == "<z, z>"


class TestExploreCommand:
    """Integration tests for the explore command."""

    def test_should_print_summary(self, runner, write):
        """Should print the summary line."""
        result = runner.invoke(cli, ["explore", write("beta.nd", "(\\x:A. x y)")])

        assert result.exit_code == 0
        assert result.stdout == "nodes=2 edges=1 eta=1 nf=1\n"

    def test_should_write_dot_file(self, runner, write, tmp_path):
        """Should write the DOT rendering next to the summary."""
        dot = tmp_path / "beta.dot"
        result = runner.invoke(
            cli, ["explore", write("beta.nd", "(\\x:A. x y)"), "--dot", str(dot)]
        )

        assert result.exit_code == 0
        assert dot.read_text(encoding="utf-8").startswith("digraph reductions {")

    def test_should_flag_incomplete_exploration(self, runner, write):
        """Should mark the summary when the limit is hit."""
        source = write("dup.nd", "(\\x:A. <x, x> (\\y:A. y z))")
        result = runner.invoke(cli, ["explore", source, "--limit", "3"])

        assert result.exit_code == 0
        assert result.stdout == "nodes=3 edges=2 eta=? nf=? complete=false\n"


class TestClassifyCommand:
    """Integration tests for the classify command."""

    def test_should_print_head_row(self, runner, write):
        """Should print the row, head, arguments and head reduct."""
        result = runner.invoke(cli, ["classify", write("simple.nd", "(x y p1)")])

        assert result.exit_code == 0
        assert result.stdout == "row 0\nhead x\nargs {y, p1}\nhred -\n"


class TestGenCommand:
    """Integration tests for the gen command."""

    def test_should_be_deterministic(self, runner):
        """Should print the same samples for the same seed."""
        args = ["gen", "--seed", "4", "--size", "15", "--count", "2", "--goal", "A -> A"]

        first = runner.invoke(cli, args)
        second = runner.invoke(cli, args)

        assert first.exit_code == 0
        assert first.stdout == second.stdout
        assert first.stdout.count(";\n") == 1

    def test_should_write_one_file_per_sample(self, runner, tmp_path):
        """Should write numbered files into the output directory."""
        out = tmp_path / "samples"
        result = runner.invoke(
            cli,
            ["gen", "--seed", "4", "--size", "15", "--count", "2", "--goal", "A -> A", "--out", str(out)],
        )

        assert result.exit_code == 0
        assert sorted(path.name for path in out.iterdir()) == [
            "sample_0000.nd",
            "sample_0001.nd",
        ]

    def test_should_exit_2_without_seed(self, runner):
        """Should require an explicit seed."""
        result = runner.invoke(cli, ["gen", "--size", "10"])

        assert result.exit_code == 2


class TestHarnessAppCommand:
    """Integration tests for the harness app command."""

    def test_should_print_verdict_and_certificate(self, runner, write):
        """Should certify the head normalization of S1."""
        result = runner.invoke(cli, ["harness", "app", write("pivot.scn", SCENARIO)])

        assert result.exit_code == 0
        first, second = result.stdout.splitlines()
        assert first.startswith("sn=true steps=1 stalled=1 t2_steps=0 lg=")
        assert second.startswith("1 / Perm marked=Perm")

    def test_should_certify_given_trace(self, runner, write):
        """Should certify a trace read from a file."""
        scenario = write("pivot.scn", SCENARIO)
        trace = write("trace.nd", "(m [x1.n | x2.o] e)")
        result = runner.invoke(cli, ["harness", "app", scenario, "--trace", trace])

        assert result.exit_code == 0
        assert result.stdout.startswith("sn=true steps=0 stalled=0 t2_steps=0")
