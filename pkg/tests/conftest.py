import functools
from pathlib import Path

import pytest

from assocloc.algebra import is_commutative
from assocloc.fileio import load_algebra, load_module
from assocloc.modules import simples

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
ALGEBRA_NAMES = sorted(p.stem for p in CORPUS.glob("*.alg") if p.stem != "broken")

# criterion number -> list of (ok, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


@functools.cache
def algebra(name: str):
    return load_algebra(CORPUS / f"{name}.alg")


@functools.cache
def corpus_simples(name: str):
    return simples(algebra(name))


def commutative_names() -> list[str]:
    return [n for n in ALGEBRA_NAMES if is_commutative(algebra(n))]


@pytest.fixture
def m2f2():
    return algebra("m2f2")


@pytest.fixture
def m2f2_nat(m2f2):
    return load_module(CORPUS / "m2f2_nat.mod", m2f2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        rows = ACCEPTANCE[k]
        bad = [d for ok, d in rows if not ok]
        status = "PASS" if not bad else "FAIL"
        detail = f"{len(rows)} cases" if not bad else "; ".join(bad[:3])
        terminalreporter.write_line(f"criterion {k}: {status} ({detail})")
