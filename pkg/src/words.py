"""PL loops and paths encoded as words of points, with their parametrizations.

A word (x_0, ..., x_n) together with a subdivision 0 = t_0 <= ... <= t_n = 1 describes the PL
map that sends t_i to x_i and is affine in between. Chord lengths and breakpoints are computed
in floating point; they are reporting quantities and no reduction depends on them.
"""

import bisect
import enum
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Tuple

import numpy as np

from constants import UNIFORM_REL_TOL
from errors import (
    EmptyWord,
    InvalidSubdivision,
    NoCommonSimplex,
    NotBased,
    NotClosed,
    OutOfRange,
    PointNotInComplex,
)
from geometry import Point, SimplicialComplex, common_simplices, locate

logger = logging.getLogger(__name__)


class WordKind(str, enum.Enum):
    """Whether a word is a based loop or a based path with a free endpoint."""

    LOOP = "loop"
    PATH = "path"


@dataclass(frozen=True)
class PLWord:
    """A finite point sequence modelling a PL loop or path.

    Instances built directly are trusted; use :func:`make_word` to validate user input.
    """

    complex: SimplicialComplex
    points: Tuple[Point, ...]
    kind: WordKind

    def __len__(self) -> int:
        return len(self.points)

    @property
    def filtration_index(self) -> int:
        """Vertex count of the word; the filtration stage it first appears in."""
        return len(self.points)

    @property
    def is_constant(self) -> bool:
        """Whether every point equals the first."""
        return all(p == self.points[0] for p in self.points)

    def with_points(self, points: Iterable[Point], kind: Optional[WordKind] = None) -> "PLWord":
        """Return a word on the same complex with other points."""
        return PLWord(self.complex, tuple(points), self.kind if kind is None else kind)


def make_word(
    complex_: SimplicialComplex, points: Sequence[Sequence[Any]], kind: WordKind
) -> PLWord:
    """Validate a point sequence as a loop or path word.

    Raises:
        EmptyWord: if there are no points.
        DimensionMismatch: if a point does not have the ambient dimension.
        PointNotInComplex: if a point lies in no simplex.
        NotBased: if the first point is not the basepoint.
        NotClosed: if a loop does not end at the basepoint.
        NoCommonSimplex: for the first consecutive pair sharing no simplex.
    """
    if not points:
        raise EmptyWord()
    exact = tuple(complex_.check_point(p) for p in points)
    for i, p in enumerate(exact):
        if not locate(complex_, p):
            raise PointNotInComplex(p, i)
    if exact[0] != complex_.basepoint_coords:
        raise NotBased()
    if kind == WordKind.LOOP and exact[-1] != complex_.basepoint_coords:
        raise NotClosed(len(exact) - 1)
    for i in range(len(exact) - 1):
        if not common_simplices(complex_, exact[i], exact[i + 1]):
            raise NoCommonSimplex(i)
    return PLWord(complex_, exact, WordKind(kind))


def reverse(points: Sequence[Point]) -> Tuple[Point, ...]:
    """Return the points in reverse order."""
    return tuple(reversed(points))


def concat(*segments: Sequence[Point]) -> Tuple[Point, ...]:
    """Glue point sequences end to start, writing each shared junction point once."""
    glued = list(segments[0])
    for segment in segments[1:]:
        if not segment:
            continue
        if glued and glued[-1] != segment[0]:
            raise ValueError("segments do not meet at their junction")
        glued.extend(segment[1:] if glued else segment)
    return tuple(glued)


@dataclass(frozen=True)
class Subdivision:
    """Breakpoints 0 = t_0 <= t_1 <= ... <= t_n = 1; zero-width gaps are allowed."""

    breakpoints: Tuple[float, ...]

    def __post_init__(self):
        bps = self.breakpoints
        if not bps or bps[0] != 0 or (len(bps) > 1 and bps[-1] != 1):
            raise InvalidSubdivision("breakpoints must start at 0 and end at 1")
        if any(b < a for a, b in zip(bps, bps[1:])):
            raise InvalidSubdivision("breakpoints must be nondecreasing")

    @classmethod
    def even(cls, n: int) -> "Subdivision":
        """Return the subdivision (0, 1/n, ..., 1) with n gaps."""
        if n == 0:
            return cls((0.0,))
        return cls(tuple(i / n for i in range(n)) + (1.0,))

    def __len__(self) -> int:
        return len(self.breakpoints)


@dataclass(frozen=True)
class UniformParam:
    """Constant-speed breakpoints of a word and its total chord length."""

    breakpoints: Subdivision
    total_length: float


def _check_matching(w: PLWord, sub: Subdivision) -> None:
    if len(sub) != len(w):
        raise InvalidSubdivision(
            f"subdivision has {len(sub)} breakpoints but the word has {len(w)} points"
        )


def _as_floats(points: Sequence[Point]) -> np.ndarray:
    return np.array([[float(c) for c in p] for p in points], dtype=float)


def _sqrt(q: Fraction) -> float:
    """Return the square root of a nonnegative rational whose square may not fit a float."""
    if q == 0:
        return 0.0
    # q = m * 4**shift with m in [1/4, 4).
    shift = (q.numerator.bit_length() - q.denominator.bit_length()) // 2
    m = q / Fraction(4) ** shift
    return math.ldexp(math.sqrt(float(m)), shift)


def chord_lengths(w: PLWord) -> np.ndarray:
    """Return the chord distance d(x_{i-1}, x_i) of every segment.

    Squared distances are exact; only the square root is taken in floating point.

    Raises:
        OverflowError: if a chord is longer than the largest float.
    """
    return np.array(
        [
            _sqrt(Fraction(sum((b - a) ** 2 for a, b in zip(p, q))))
            for p, q in zip(w.points, w.points[1:])
        ],
        dtype=float,
    )


def length(w: PLWord) -> float:
    """Return the total chord length of the word."""
    return float(chord_lengths(w).sum())


def uniform_breakpoints(w: PLWord, sub: Optional[Subdivision] = None) -> UniformParam:
    """Return the constant-speed subdivision t̃_i = t̃_{i-1} + d(x_i, x_{i-1}) / L.

    For a constant word the input subdivision is kept unchanged (even spacing if none is given).
    """
    chords = chord_lengths(w)
    total = float(chords.sum())
    n = len(w) - 1
    if total == 0:
        if sub is not None:
            _check_matching(w, sub)
            return UniformParam(breakpoints=sub, total_length=0.0)
        return UniformParam(breakpoints=Subdivision.even(n), total_length=0.0)
    # Dividing by the last partial sum keeps interior breakpoints <= 1.
    cumulative = np.cumsum(chords)
    cumulative = np.minimum(cumulative / cumulative[-1], 1.0)
    breakpoints = (0.0, *(float(c) for c in cumulative[:-1]), 1.0)
    return UniformParam(breakpoints=Subdivision(breakpoints), total_length=total)


def evaluate(w: PLWord, sub: Subdivision, t: float) -> np.ndarray:
    """Return the position at time ``t`` of the PL map given by the word and subdivision.

    At a breakpoint the corresponding word point is returned; zero-width segments are skipped.

    Raises:
        OutOfRange: if t is outside [0, 1].
    """
    _check_matching(w, sub)
    if not 0 <= t <= 1:
        raise OutOfRange("t", t)
    coords = _as_floats(w.points)
    bps = sub.breakpoints
    if t == 1:
        return coords[-1]
    hit = bisect.bisect_left(bps, t)
    if hit < len(bps) and bps[hit] == t:
        return coords[hit]
    # bps[hit - 1] < t < bps[hit], so the segment has positive width.
    lo, hi = bps[hit - 1], bps[hit]
    s = (t - lo) / (hi - lo)
    return coords[hit - 1] + s * (coords[hit] - coords[hit - 1])


def uniformize_homotopy(w: PLWord, sub: Subdivision, s: float) -> Subdivision:
    """Return the subdivision t_i^s = (1 - s) t_i + s t̃_i between ``sub`` and the uniform one.

    Raises:
        OutOfRange: if s is outside [0, 1].
    """
    _check_matching(w, sub)
    if not 0 <= s <= 1:
        raise OutOfRange("s", s)
    if s == 0:
        return sub
    uniform = uniform_breakpoints(w, sub).breakpoints
    if s == 1:
        return uniform
    mixed = [(1 - s) * a + s * b for a, b in zip(sub.breakpoints, uniform.breakpoints)]
    mixed[0], mixed[-1] = 0.0, 1.0
    return Subdivision(tuple(mixed))


def is_uniform(w: PLWord, sub: Subdivision, rel_tol: float = UNIFORM_REL_TOL) -> bool:
    """Return True if every gap equals its chord ratio within ``rel_tol``, or w is constant."""
    _check_matching(w, sub)
    chords = chord_lengths(w)
    total = float(chords.sum())
    if total == 0:
        return True
    gaps = np.diff(np.array(sub.breakpoints, dtype=float))
    expected = chords / total
    flat = expected == 0
    # Zero-length chords need zero-width gaps; the rest compare relatively.
    if np.any(gaps[flat] != 0):
        return False
    return bool(np.allclose(gaps[~flat], expected[~flat], rtol=rel_tol, atol=0.0))
