from __future__ import annotations

import pytest

from argcontrast.aspic import derive_af
from argcontrast.formats import parse_af, parse_theory

from oracles import FIXTURES


@pytest.fixture(scope="session")
def af1():
    return parse_af((FIXTURES / "af1.apx").read_text())


@pytest.fixture(scope="session")
def af2():
    return parse_af((FIXTURES / "af2.apx").read_text())


@pytest.fixture(scope="session")
def webshop():
    return derive_af(parse_theory((FIXTURES / "webshop.thy").read_text()))
