from pathlib import Path

import pytest
from click.testing import CliRunner

from src.cli.commands import EXIT_FAILS, EXIT_USAGE, cocoa_kit


FIN_A = "aut fin-a\nalphabet a b\nstates 1\ninitial 0\ntrans 0 a 1 0\ntrans 0 b 2 0\nend\n"
NONE = "aut none\nalphabet a b\nstates 1\ninitial 0\ntrans 0 a 1 0\ntrans 0 b 1 0\nend\n"


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cocoa_kit, list(args))


class TestGen:

    def test_gen_to_stdout(self, runner):
        with runner.isolated_filesystem():
            result = invoke(runner, "gen", "cocoa-c", "--k", "2")

            assert result.exit_code == 0
            assert "cocoa cocoa-c-2 2" in result.output
            assert "endcocoa" in result.output

    def test_gen_to_file(self, runner):
        with runner.isolated_filesystem():
            result = invoke(runner, "gen", "cocoa-c", "--k", "2", "--out", "c2.cocoa")

            assert result.exit_code == 0
            assert "✅ Wrote cocoa-c (cocoa, 4 states) to c2.cocoa" in result.output
            assert Path("c2.cocoa").read_text(encoding="utf-8").startswith("cocoa cocoa-c-2 2\n")

    def test_gen_hoa(self, runner):
        with runner.isolated_filesystem():
            result = invoke(runner, "gen", "dpw-p", "--k", "1", "--format", "hoa")

            assert result.exit_code == 0
            assert "HOA: v1" in result.output

    def test_gen_missing_level(self, runner):
        """dcw-l needs --i"""
        with runner.isolated_filesystem():
            result = invoke(runner, "gen", "dcw-l", "--k", "2")

            assert result.exit_code == EXIT_USAGE
            assert "❌ Error:" in result.output

    def test_gen_unknown_family(self, runner):
        with runner.isolated_filesystem():
            result = invoke(runner, "gen", "no-such-family", "--k", "2")
            assert result.exit_code == 2


class TestEval:

    @pytest.mark.parametrize("lasso,expected", [
        ("|x_1 y_1", "color=0 accepted=true"),
        ("|x_2 y_2", "color=1 accepted=false"),
        ("|x_1", "color=2 accepted=true"),
    ])
    def test_eval_chain(self, runner, lasso, expected):
        with runner.isolated_filesystem():
            invoke(runner, "gen", "cocoa-c", "--k", "2", "--out", "c2.cocoa")
            result = invoke(runner, "eval", "c2.cocoa", lasso)

            assert result.exit_code == 0
            assert expected in result.output

    def test_eval_bad_lasso(self, runner):
        with runner.isolated_filesystem():
            Path("fin-a.aut").write_text(FIN_A, encoding="utf-8")
            result = invoke(runner, "eval", "fin-a.aut", "a b")

            assert result.exit_code == EXIT_USAGE

    def test_eval_missing_file(self, runner):
        with runner.isolated_filesystem():
            result = invoke(runner, "eval", "missing.aut", "|a")
            assert result.exit_code == EXIT_USAGE

    def test_eval_invalid_utf8(self, runner):
        with runner.isolated_filesystem():
            Path("bad.aut").write_bytes(b"aut bad\nalphabet \xff\xfe\nstates 1\ninitial 0\nend\n")
            result = invoke(runner, "eval", "bad.aut", "|a")
            assert result.exit_code == EXIT_USAGE


class TestCheck:

    def test_contains_fails_with_witness(self, runner):
        with runner.isolated_filesystem():
            Path("fin-a.aut").write_text(FIN_A, encoding="utf-8")
            Path("none.aut").write_text(NONE, encoding="utf-8")
            result = invoke(runner, "check", "contains", "fin-a.aut", "none.aut")

            assert result.exit_code == EXIT_FAILS
            assert "❌ contains fails" in result.output
            assert "witness: |b" in result.output

    def test_contains_holds(self, runner):
        with runner.isolated_filesystem():
            Path("fin-a.aut").write_text(FIN_A, encoding="utf-8")
            Path("none.aut").write_text(NONE, encoding="utf-8")
            result = invoke(runner, "check", "contains", "none.aut", "fin-a.aut")

            assert result.exit_code == 0
            assert "✅ contains holds" in result.output

    def test_chain(self, runner):
        with runner.isolated_filesystem():
            invoke(runner, "gen", "cocoa-theorem2", "--k", "1", "--out", "t1.cocoa")
            result = invoke(runner, "check", "chain", "t1.cocoa")

            assert result.exit_code == 0
            assert "✅ chain holds" in result.output

    def test_certify(self, runner):
        with runner.isolated_filesystem():
            invoke(runner, "gen", "dpw-c", "--k", "3", "--out", "dpw-c-3.aut")
            result = invoke(runner, "check", "certify", "dpw-c-3.aut", "--k", "3",
                            "--cert-out", "c3.cert")

            assert result.exit_code == 0
            assert "📊 Bound: 8 (8 states)" in result.output
            assert Path("c3.cert").exists()

    def test_certify_violation(self, runner):
        """The C^1 automaton lacks the letters k=2 needs"""
        with runner.isolated_filesystem():
            invoke(runner, "gen", "dpw-c", "--k", "1", "--out", "dpw-c-1.aut")
            result = invoke(runner, "check", "certify", "dpw-c-1.aut", "--k", "2")

            assert result.exit_code == EXIT_USAGE

    def test_certify_needs_k(self, runner):
        with runner.isolated_filesystem():
            Path("fin-a.aut").write_text(FIN_A, encoding="utf-8")
            result = invoke(runner, "check", "certify", "fin-a.aut")
            assert result.exit_code == EXIT_USAGE

    def test_sample(self, runner):
        with runner.isolated_filesystem():
            Path("fin-a.aut").write_text(FIN_A, encoding="utf-8")
            result = invoke(runner, "check", "sample", "fin-a.aut")

            assert result.exit_code == 0
            assert "✅ sample holds" in result.output
            assert "📊 Agreed on" in result.output


class TestTable:

    def test_csv_to_stdout(self, runner):
        with runner.isolated_filesystem():
            result = invoke(runner, "table", "theorem1", "--kmax", "2", "--format", "csv")

            assert result.exit_code == 0
            assert "family,k,representation,states,colors,residuals,bound,note" in result.output
            assert "theorem1,2,cocoa,4,2,,," in result.output

    def test_table_to_file(self, runner):
        with runner.isolated_filesystem():
            result = invoke(runner, "table", "prop1", "--kmax", "2", "--format", "csv",
                            "--out", "tables/prop1.csv")

            assert result.exit_code == 0
            assert "✅ Wrote 4 rows to tables/prop1.csv" in result.output
            assert Path("tables/prop1.csv").read_text(encoding="utf-8").count("\n") == 5

    def test_bad_kmax(self, runner):
        with runner.isolated_filesystem():
            result = invoke(runner, "table", "prop1", "--kmax", "0")
            assert result.exit_code == EXIT_USAGE


class TestConfigTest:

    def test_defaults(self, runner):
        with runner.isolated_filesystem():
            result = invoke(runner, "config-test")

            assert result.exit_code == 0
            assert "✅ Configuration is valid!" in result.output
            assert "theorem2: kmax 2" in result.output

    def test_invalid_config(self, runner):
        with runner.isolated_filesystem():
            Path("conf").mkdir()
            Path("conf/cocoakit.yaml").write_text("tables:\n  max_workers: 0\n", encoding="utf-8")
            result = invoke(runner, "--config", "conf", "config-test")

            assert result.exit_code == EXIT_FAILS
            assert "tables.max_workers" in result.output
