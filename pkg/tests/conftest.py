import random
from pathlib import Path

import pytest

from metapoisson.basis import enumerate_monomials
from metapoisson.presfile import parse_file

DATA = Path(__file__).parent / "data"

# presentations whose relations the acceptance criteria quantify over
PRESENTATIONS = sorted(p.stem for p in DATA.glob("*.txt") if not p.stem.startswith("auto_"))
ENDOMORPHISMS = sorted(p.stem for p in DATA.glob("auto_*.txt"))


def load(name):
    return parse_file((DATA / f"{name}.txt").read_text())


def random_poly(algebra, rng, max_len, terms=3, min_len=1):
    mons = enumerate_monomials(len(algebra.alphabet), algebra.characteristic, max_len, min_len)
    F = algebra.field
    f = algebra.zero()
    for m in rng.sample(mons, min(terms, len(mons))):
        c = rng.randint(-3, 3) or 1
        f.iadd_scaled(algebra.mono(m), F(c))
    return f


@pytest.fixture
def rng():
    return random.Random(20240611)


# one PASS/FAIL line per acceptance criterion at the end of the run

_criteria: dict[int, list[bool]] = {}


def pytest_runtest_logreport(report):
    marker = "test_acceptance.py::test_criterion_"
    if marker not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        num = int(report.nodeid.split(marker)[1].split("_")[0])
        _criteria.setdefault(num, []).append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        results = _criteria[num]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {status}  ({sum(results)}/{len(results)} checks)")
