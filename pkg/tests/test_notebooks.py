import pathlib
import runpy

import pytest

NOTEBOOKS = sorted((pathlib.Path(__file__).parents[1] / "notebooks").glob("*.py"))


@pytest.mark.parametrize("path", NOTEBOOKS, ids=lambda p: p.name)
def test_notebook_runs(path, capsys):
    runpy.run_path(str(path), run_name="__main__")
    assert capsys.readouterr().out


def test_grouping_notebook_shows_flip(capsys):
    runpy.run_path(str(NOTEBOOKS[1]), run_name="__main__")
    out = capsys.readouterr().out
    assert "Austria groups with Sweden" in out and "Austria groups with Hungary" in out
