import pytest


def test_help_execution(run_wittengap):
    result = run_wittengap("--help")
    assert result.exit_code == 0
    assert "--show-completion" in result.output


@pytest.mark.parametrize("command", ["bounds", "ou", "spectral", "shrinker", "verify-all"])
def test_subcommand_help(run_wittengap, command):
    result = run_wittengap([command, "--help"])
    assert result.exit_code == 0
    assert "Usage:" in result.output
