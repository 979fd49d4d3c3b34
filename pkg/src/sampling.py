"""Seeded generation of random loops and paths.

The generator is splitmix64 so that runs are reproducible across implementations: the state
advances by a fixed odd gamma and each output is a mixed copy of the state (see
``constants.SPLITMIX_*``). ``below(n)`` reduces an output modulo n.
"""

import logging
from fractions import Fraction
from typing import List, Optional

import networkx as nx

from constants import (
    DEFAULT_DENOM_BOUND,
    MASK64,
    SPLITMIX_GAMMA,
    SPLITMIX_MUL1,
    SPLITMIX_MUL2,
)
from geometry import Point, Simplex, SimplicialComplex, from_barycentric, locate, star
from words import PLWord, WordKind

logger = logging.getLogger(__name__)


class SplitMix64:
    """A 64-bit splitmix generator."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        """Advance the state and return the next 64-bit output."""
        self.state = (self.state + SPLITMIX_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * SPLITMIX_MUL1) & MASK64
        z = ((z ^ (z >> 27)) * SPLITMIX_MUL2) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Return an integer in [0, n)."""
        if n <= 0:
            raise ValueError("n must be positive")
        return self.next() % n


def random_point_in(
    complex_: SimplicialComplex, sigma: Simplex, rng: SplitMix64, denom_bound: int
) -> Point:
    """Pick a point of sigma whose barycentric coordinates have denominator at most the bound."""
    denominator = 1 + rng.below(denom_bound)
    cuts = sorted(rng.below(denominator + 1) for _ in range(sigma.dim))
    parts = [b - a for a, b in zip([0, *cuts], [*cuts, denominator])]
    weights = {v: Fraction(part, denominator) for v, part in zip(sigma.vertex_ids, parts)}
    return from_barycentric(complex_, weights)


def _walk(
    complex_: SimplicialComplex, steps: int, rng: SplitMix64, denom_bound: int
) -> List[Point]:
    current = complex_.basepoint_coords
    points = [current]
    for _ in range(steps):
        neighbourhood = complex_.sorted_simplices(star(complex_, current))
        sigma = neighbourhood[rng.below(len(neighbourhood))]
        current = random_point_in(complex_, sigma, rng, denom_bound)
        points.append(current)
    return points


def route_to_vertex(
    complex_: SimplicialComplex, current: Point, vertex_id: str
) -> List[Point]:
    """Return points leading from ``current`` to a vertex along the 1-skeleton.

    The route first moves to a vertex of a carrier of ``current`` (inside that carrier), then
    follows a breadth-first shortest path. ``current`` itself is not included.
    """
    carrier = complex_.sorted_simplices(locate(complex_, current))[0]
    start = carrier.vertex_ids[0]
    route = [complex_.coords(v) for v in nx.shortest_path(complex_.skeleton, start, vertex_id)]
    if route[0] == current:
        route = route[1:]
    return route


def random_loop(
    complex_: SimplicialComplex,
    steps: int,
    seed: int,
    denom_bound: int = DEFAULT_DENOM_BOUND,
) -> PLWord:
    """Walk ``steps`` random points through stars, then return to the basepoint.

    With zero steps the result is the constant loop.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    rng = SplitMix64(seed)
    points = _walk(complex_, steps, rng, denom_bound)
    points.extend(route_to_vertex(complex_, points[-1], complex_.basepoint))
    return PLWord(complex_, tuple(points), WordKind.LOOP)


def random_path(
    complex_: SimplicialComplex,
    steps: int,
    seed: int,
    denom_bound: int = DEFAULT_DENOM_BOUND,
    to_vertex: Optional[str] = None,
) -> PLWord:
    """Walk ``steps`` random points through stars; optionally finish at a given vertex."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    rng = SplitMix64(seed)
    points = _walk(complex_, steps, rng, denom_bound)
    if to_vertex is not None:
        points.extend(route_to_vertex(complex_, points[-1], to_vertex))
    return PLWord(complex_, tuple(points), WordKind.PATH)


def random_loop_upto(
    complex_: SimplicialComplex,
    max_len: int,
    seed: int,
    denom_bound: int = DEFAULT_DENOM_BOUND,
) -> PLWord:
    """Return a random loop with at most ``max_len`` points.

    The step count is drawn from the seed and lowered until the loop fits; zero steps always
    fits.
    """
    steps = SplitMix64(seed).below(max(max_len - 1, 1))
    while True:
        loop = random_loop(complex_, steps, seed, denom_bound)
        if len(loop) <= max_len or steps == 0:
            return loop
        steps -= 1
