import os
import sys
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from extremal_lie.fields import parse_field  # noqa: E402
from extremal_lie.graphs import catalog_entry  # noqa: E402
from extremal_lie.pipeline import run_full  # noqa: E402


@lru_cache(maxsize=None)
def pipeline(name: str, field: str = "q"):
    """Full run of a catalog graph, shared across test modules."""
    return run_full(catalog_entry(name).graph, parse_field(field))


SMALL = ["G11", "G211", "G222"]
FOUR = ["G3111", "G2211", "G2222", "G3221", "G3322", "G3333"]
LIGHT5 = ["G41111", "G32111", "G22211", "G42211", "G33211", "G32221-tail", "G32221-square",
          "G22222", "G43221", "G33321", "G42222", "G33222-house", "G33222-K23"]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, (ok, detail) in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_addoption(parser):
    parser.addoption("--include-heavy", action="store_true", help="run the heavy catalog rows and K5 in full")


def pytest_configure(config):
    if config.getoption("--include-heavy"):
        os.environ["EXTREMAL_LIE_HEAVY"] = "1"
