import os

import pytest

from quasi_core.QuasialgConfig import DEFAULT_CONFIG
import quasialg


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", default=False,
                     help="rewrite golden report files instead of comparing against them")


@pytest.fixture
def update_golden(request):
    return request.config.getoption("--update-golden")


@pytest.fixture
def fixture_path():
    def path(name):
        return os.path.join(DEFAULT_CONFIG.fixtures_path, name)
    return path


@pytest.fixture
def golden_dir():
    return DEFAULT_CONFIG.golden_path


@pytest.fixture
def run_cli(capsys):
    """Run the command line in-process; returns (exit code, stdout, stderr)."""
    def run(*argv):
        code = quasialg.main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run
