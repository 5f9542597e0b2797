from wittengap import version


def test_dash_dash_versions(run_wittengap):
    result = run_wittengap("--version")
    assert result.exit_code == 0
    assert f"wittengap version: {version}\n" == result.output
