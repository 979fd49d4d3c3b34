"""The thin path space: reduced based paths, acted on by thin loops.

Thin loops act on thin paths by concatenation at the basepoint; the endpoint map is the bundle
projection. Over the star of a point x, choosing a reference path to x identifies the paths
ending in the star with pairs (loop class, endpoint).
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from errors import (
    ComplexMismatch,
    EndpointMismatch,
    KindMismatch,
    OutOfRange,
    PointNotInSimplex,
    PointNotInStar,
    RefEndpointMismatch,
)
from geometry import Point, Simplex, SimplicialComplex, in_star, locate
from thin_group import Rule, ThinClass, core, reduce_word
from words import PLWord, WordKind, concat, reverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThinPath:
    """A thin path class, held as its reduced path word."""

    word: PLWord

    @property
    def complex(self) -> SimplicialComplex:
        """Return the complex the path lives on."""
        return self.word.complex

    @property
    def points(self) -> Tuple[Point, ...]:
        """Return the points of the reduced word."""
        return self.word.points

    @property
    def endpoint(self) -> Point:
        """Return the end of the path."""
        return self.word.points[-1]


def _path(complex_: SimplicialComplex, points: Sequence[Point]) -> PLWord:
    return PLWord(complex_, tuple(points), WordKind.PATH)


def path_core(w: PLWord) -> ThinPath:
    """Reduce a path word; both endpoints stay fixed."""
    if w.kind != WordKind.PATH:
        raise KindMismatch(WordKind.PATH.value, w.kind.value)
    reduced, _ = reduce_word(w, Rule.THIN)
    return ThinPath(reduced)


def endpoint(p: ThinPath) -> Point:
    """Return the bundle projection of a thin path: its last point."""
    return p.endpoint


def act(g: ThinClass, p: ThinPath) -> ThinPath:
    """Return g · p, the path that runs the loop g first and then p."""
    if g.complex is not p.complex:
        raise ComplexMismatch()
    return path_core(_path(p.complex, concat(g.points, p.points)))


def _check_chart(complex_: SimplicialComplex, x: Sequence[Any], ref: ThinPath) -> Point:
    centre = complex_.check_point(x)
    if ref.complex is not complex_:
        raise ComplexMismatch()
    if ref.endpoint != centre:
        raise RefEndpointMismatch()
    return centre


def local_triv(
    complex_: SimplicialComplex,
    x: Sequence[Any],
    ref: ThinPath,
    g: ThinClass,
    y: Sequence[Any],
) -> ThinPath:
    """Map (g, y) to the path g · ref · [x, y] over the star of x.

    Raises:
        RefEndpointMismatch: if ref does not end at x.
        PointNotInStar: if y is outside the star of x.
    """
    centre = _check_chart(complex_, x, ref)
    target = complex_.check_point(y)
    if not in_star(complex_, centre, target):
        raise PointNotInStar(target)
    if g.complex is not complex_:
        raise ComplexMismatch()
    return path_core(_path(complex_, concat(g.points, ref.points, (centre, target))))


def local_triv_inv(
    complex_: SimplicialComplex, x: Sequence[Any], ref: ThinPath, p: ThinPath
) -> Tuple[ThinClass, Point]:
    """Map a path p ending at y in the star of x to (p · [y, x] · ref⁻¹, y).

    Raises:
        RefEndpointMismatch: if ref does not end at x.
        PointNotInStar: if p ends outside the star of x.
    """
    centre = _check_chart(complex_, x, ref)
    if p.complex is not complex_:
        raise ComplexMismatch()
    y = p.endpoint
    if not in_star(complex_, centre, y):
        raise PointNotInStar(y)
    loop = concat(p.points, (y, centre), reverse(ref.points))
    return core(PLWord(complex_, loop, WordKind.LOOP)), y


def lift(
    complex_: SimplicialComplex,
    e: ThinPath,
    sigma: Simplex,
    gamma_t: Sequence[Any],
    t: float,
) -> ThinPath:
    """Extend e, which ends at x in sigma, to the position γ(t) of a path traversing sigma.

    Raises:
        PointNotInSimplex: if x or γ(t) is outside sigma.
        OutOfRange: if t is outside [0, 1].
    """
    if not 0 <= t <= 1:
        raise OutOfRange("t", t)
    position = complex_.check_point(gamma_t)
    for point in (e.endpoint, position):
        if sigma not in locate(complex_, point):
            raise PointNotInSimplex(point, sigma.vertex_ids)
    logger.debug("Lifting through %s at t=%s", sigma, t)
    return path_core(_path(complex_, e.points + (position,)))


def fiber_element(p: ThinPath, q: ThinPath) -> ThinClass:
    """Return the loop class g = p · q⁻¹, the unique g with g · q = p.

    Raises:
        EndpointMismatch: if p and q end at different points.
    """
    if p.complex is not q.complex:
        raise ComplexMismatch()
    if p.endpoint != q.endpoint:
        raise EndpointMismatch()
    return core(PLWord(p.complex, concat(p.points, reverse(q.points)), WordKind.LOOP))


def paths_thin_equal(p: ThinPath, q: ThinPath) -> bool:
    """Return True if p and q end at the same point and p · q⁻¹ is thin trivial."""
    if p.endpoint != q.endpoint:
        return False
    return fiber_element(p, q).is_identity


def contract(p: ThinPath) -> List[ThinPath]:
    """Return the step contraction of p: drop the last point until only the basepoint is left.

    Every prefix of a reduced path is reduced, so each step is a thin path.
    """
    steps = [p]
    points = p.points
    while len(points) > 1:
        points = points[:-1]
        steps.append(ThinPath(_path(p.complex, points)))
    return steps
