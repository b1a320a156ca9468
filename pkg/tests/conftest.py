import pytest

from rotohfs.cli import main


@pytest.fixture
def run_cli(capsys):
    def run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    return run


@pytest.fixture
def scenario_file(tmp_path):
    """Write a scenario INI built from the bundled one with edits applied."""
    from importlib import resources

    base = resources.files("rotohfs").joinpath("data/u238_default.ini").read_text()

    def make(replacements=(), extra=""):
        text = base
        for old, new in replacements:
            assert old in text, old
            text = text.replace(old, new)
        path = tmp_path / "scenario.ini"
        path.write_text(text + extra)
        return str(path)

    return make


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
