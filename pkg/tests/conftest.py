from pathlib import Path

import pytest

from expreg.cli import main as cli_main

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"
SCHEMA = REPO_ROOT / "schema" / "decision-report.schema.json"
GOLDEN = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def run_cli(capsys):
    def run(*argv):
        code = cli_main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


@pytest.fixture
def fixture_path():
    return lambda name: str(FIXTURES / name)
