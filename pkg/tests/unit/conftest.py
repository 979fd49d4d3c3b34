# Copyright 2026 Canonical Ltd.
# See LICENSE file for licensing details.

from typing import Any, Dict

import pytest

from geometry import SimplicialComplex, build_complex
from words import PLWord, WordKind, make_word

HOLLOW3: Dict[str, Any] = {
    "ambient_dim": 2,
    "vertices": [
        {"id": "A", "coords": ["0", "0"]},
        {"id": "B", "coords": ["1", "0"]},
        {"id": "C", "coords": ["0", "1"]},
    ],
    "simplices": [["A", "B"], ["B", "C"], ["C", "A"]],
    "basepoint": "A",
}

FILLED3: Dict[str, Any] = {
    **HOLLOW3,
    "simplices": [["A", "B"], ["B", "C"], ["C", "A"], ["A", "B", "C"]],
}

LINE: Dict[str, Any] = {
    "ambient_dim": 1,
    "vertices": [{"id": "P", "coords": ["0"]}, {"id": "Q", "coords": ["3"]}],
    "simplices": [["P", "Q"]],
    "basepoint": "P",
}

RT345: Dict[str, Any] = {
    "ambient_dim": 2,
    "vertices": [
        {"id": "A", "coords": ["0", "0"]},
        {"id": "B", "coords": ["3", "0"]},
        {"id": "C", "coords": ["3", "4"]},
    ],
    "simplices": [["A", "B"], ["B", "C"], ["C", "A"]],
    "basepoint": "A",
}

FIXTURE_NAMES = ["hollow3", "filled3", "line", "rt345"]


@pytest.fixture
def hollow3() -> SimplicialComplex:
    return build_complex(HOLLOW3)


@pytest.fixture
def filled3() -> SimplicialComplex:
    return build_complex(FILLED3)


@pytest.fixture
def line() -> SimplicialComplex:
    return build_complex(LINE)


@pytest.fixture
def rt345() -> SimplicialComplex:
    return build_complex(RT345)


@pytest.fixture(params=FIXTURE_NAMES)
def any_complex(request: pytest.FixtureRequest) -> SimplicialComplex:
    """Each of the reference complexes in turn."""
    return request.getfixturevalue(request.param)


@pytest.fixture
def loop():
    """Return a factory validating points as a loop word."""

    def _loop(complex_: SimplicialComplex, *points) -> PLWord:
        return make_word(complex_, points, WordKind.LOOP)

    return _loop


@pytest.fixture
def path():
    """Return a factory validating points as a path word."""

    def _path(complex_: SimplicialComplex, *points) -> PLWord:
        return make_word(complex_, points, WordKind.PATH)

    return _path
