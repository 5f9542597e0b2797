import logging


def test_verbosity_raises_log_level(run_wittengap, mocker):
    basic_config = mocker.patch("wittengap.commandline.cli.logging.basicConfig")
    result = run_wittengap(["-vv", "bounds", "--K", "0", "--d", "1"])
    assert result.exit_code == 0
    assert basic_config.call_args.kwargs["level"] == logging.DEBUG


def test_verbosity_saturates(run_wittengap, mocker):
    basic_config = mocker.patch("wittengap.commandline.cli.logging.basicConfig")
    run_wittengap(["-vvvv", "bounds", "--K", "0", "--d", "1"])
    assert basic_config.call_args.kwargs["level"] == logging.DEBUG


def test_default_is_warning(run_wittengap, mocker):
    basic_config = mocker.patch("wittengap.commandline.cli.logging.basicConfig")
    run_wittengap(["bounds", "--K", "0", "--d", "1"])
    assert basic_config.call_args.kwargs["level"] == logging.WARNING
