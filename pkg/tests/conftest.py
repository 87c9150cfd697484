import json
import random
from pathlib import Path

import pytest

from cliffordinkra.graph import Cliffordinkra

DATA = Path(__file__).parent / "data"

FIGURES = ("square_n2", "cube_n3", "cube_n4", "fig2_four_colors", "d4_fold", "twin_a", "twin_b")


def load_figure(name: str) -> Cliffordinkra:
    return Cliffordinkra.from_dict(json.loads((DATA / f"{name}.json").read_text()))


@pytest.fixture(params=FIGURES)
def figure(request):
    return load_figure(request.param)


@pytest.fixture
def rng():
    return random.Random(20260101)


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
