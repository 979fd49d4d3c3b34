"""Exact geometry of finite simplicial complexes affinely embedded in rational space.

Every predicate here is decided in exact rational arithmetic. Coordinates are
:class:`fractions.Fraction` tuples; nothing is ever rounded.
"""

import functools
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import sympy

from constants import LOCATE_CACHE_SIZE
from errors import (
    AffinelyDependentSimplex,
    DimensionMismatch,
    DisconnectedComplex,
    DuplicateVertexId,
    MissingBasepoint,
    PointNotInComplex,
    UnknownVertexInSimplex,
)
from models import ComplexSpec, check_rational

logger = logging.getLogger(__name__)

Scalar = Fraction
Point = Tuple[Fraction, ...]


def parse_rational(text: Union[str, int]) -> Fraction:
    """Parse a rational string ("0", "-3", "7/12") into an exact scalar."""
    return Fraction(check_rational(text))


def format_rational(value: Fraction) -> str:
    """Render a scalar in canonical reduced form; integers have no denominator."""
    return str(Fraction(value))


def make_point(coords: Iterable[Any]) -> Point:
    """Build a point from rational strings, integers or fractions."""
    return tuple(parse_rational(c) if isinstance(c, str) else Fraction(c) for c in coords)


def format_point(point: Point) -> List[str]:
    """Render a point as an array of rational strings."""
    return [format_rational(c) for c in point]


def interpolate(p: Point, r: Point, t: Fraction) -> Point:
    """Return p + t (r - p)."""
    return tuple(a + t * (b - a) for a, b in zip(p, r))


@dataclass(frozen=True, order=True)
class Simplex:
    """A simplex, named by the sorted ids of its vertices."""

    vertex_ids: Tuple[str, ...]

    @classmethod
    def of(cls, ids: Iterable[str]) -> "Simplex":
        """Build a simplex from vertex ids in any order."""
        return cls(tuple(sorted(ids)))

    @property
    def dim(self) -> int:
        """Return the dimension of the simplex."""
        return len(self.vertex_ids) - 1

    def is_face_of(self, other: "Simplex") -> bool:
        """Return True if every vertex of this simplex is a vertex of ``other``."""
        return set(self.vertex_ids) <= set(other.vertex_ids)

    def sort_key(self) -> Tuple[int, Tuple[str, ...]]:
        """Order simplices by dimension, then by vertex ids."""
        return self.dim, self.vertex_ids

    def __str__(self) -> str:
        if all(len(v) == 1 for v in self.vertex_ids):
            return "".join(self.vertex_ids)
        return "{" + ",".join(self.vertex_ids) + "}"


@dataclass(frozen=True)
class _Chart:
    """Exact data for solving barycentric coordinates in one simplex.

    ``columns`` are the edge vectors v_i - v_0 and ``left_inverse`` is (MᵀM)⁻¹Mᵀ for the matrix
    M having those columns, so that λ = L (p - v_0) whenever p is in the affine hull.
    """

    origin: Point
    columns: Tuple[Point, ...]
    left_inverse: Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True, eq=False)
class SimplicialComplex:
    """A finite connected simplicial complex with an exact affine embedding and a basepoint.

    Attributes:
        ambient_dim: dimension N of the ambient rational space.
        vertices: vertex id to coordinates.
        simplices: every simplex, closed under taking faces.
        basepoint: id of the basepoint vertex.
        skeleton: the 1-skeleton; nodes are vertex ids.
    """

    ambient_dim: int
    vertices: Mapping[str, Point]
    simplices: FrozenSet[Simplex]
    basepoint: str
    skeleton: nx.Graph = field(repr=False)
    _charts: Mapping[Simplex, _Chart] = field(repr=False)

    @property
    def basepoint_coords(self) -> Point:
        """Return the coordinates of the basepoint vertex."""
        return self.vertices[self.basepoint]

    def coords(self, vertex_id: str) -> Point:
        """Return the coordinates of a vertex."""
        return self.vertices[vertex_id]

    def check_point(self, point: Sequence[Any]) -> Point:
        """Return the point as exact coordinates, checking its dimension."""
        if len(point) != self.ambient_dim:
            raise DimensionMismatch(self.ambient_dim, len(point))
        return make_point(point)

    def sorted_simplices(self, simplices: Optional[Iterable[Simplex]] = None) -> List[Simplex]:
        """Return simplices ordered by dimension, then by vertex ids."""
        return sorted(self.simplices if simplices is None else simplices, key=Simplex.sort_key)


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value: Any) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _chart(points: Sequence[Point], ambient_dim: int) -> Optional[_Chart]:
    """Build the barycentric chart of a simplex, or None if its vertices are dependent."""
    origin = points[0]
    columns = tuple(tuple(a - b for a, b in zip(v, origin)) for v in points[1:])
    k = len(columns)
    if k == 0:
        return _Chart(origin=origin, columns=(), left_inverse=())
    if k > ambient_dim:
        return None
    matrix = sympy.Matrix(ambient_dim, k, lambda i, j: _to_sympy(columns[j][i]))
    if matrix.rank() != k:
        return None
    left_inverse = (matrix.T * matrix).inv() * matrix.T
    return _Chart(
        origin=origin,
        columns=columns,
        left_inverse=tuple(
            tuple(_to_fraction(left_inverse[i, j]) for j in range(ambient_dim))
            for i in range(k)
        ),
    )


def build_complex(spec: Union[ComplexSpec, Mapping[str, Any]]) -> SimplicialComplex:
    """Validate a complex description and compute its face closure.

    Args:
        spec: a validated :class:`ComplexSpec` or a mapping in the complex file format.

    Raises:
        DimensionMismatch: if a vertex does not have ``ambient_dim`` coordinates.
        DuplicateVertexId: if a vertex id is declared twice.
        MissingBasepoint: if the basepoint is not a declared vertex.
        UnknownVertexInSimplex: if a simplex names an undeclared vertex.
        AffinelyDependentSimplex: if a simplex has affinely dependent (or repeated) vertices.
        DisconnectedComplex: if the 1-skeleton is not connected.
    """
    if not isinstance(spec, ComplexSpec):
        spec = ComplexSpec.model_validate(spec)

    vertices: Dict[str, Point] = {}
    for vertex in spec.vertices:
        if len(vertex.coords) != spec.ambient_dim:
            raise DimensionMismatch(spec.ambient_dim, len(vertex.coords))
        if vertex.id in vertices:
            raise DuplicateVertexId(vertex.id)
        vertices[vertex.id] = make_point(vertex.coords)

    if spec.basepoint not in vertices:
        raise MissingBasepoint(spec.basepoint)

    charts: Dict[Simplex, _Chart] = {}
    for listed in spec.simplices:
        for vertex_id in listed:
            if vertex_id not in vertices:
                raise UnknownVertexInSimplex(vertex_id, listed)
        if len(set(listed)) != len(listed):
            raise AffinelyDependentSimplex(listed)
        ids = sorted(listed)
        for size in range(len(ids), 0, -1):
            for face_ids in itertools.combinations(ids, size):
                face = Simplex(face_ids)
                if face in charts:
                    continue
                chart = _chart([vertices[v] for v in face_ids], spec.ambient_dim)
                if chart is None:
                    raise AffinelyDependentSimplex(listed)
                charts[face] = chart

    # Isolated vertices are 0-simplices too.
    for vertex_id, coords in vertices.items():
        charts.setdefault(
            Simplex((vertex_id,)), _Chart(origin=coords, columns=(), left_inverse=())
        )

    skeleton = nx.Graph()
    skeleton.add_nodes_from(sorted(vertices))
    skeleton.add_edges_from(sorted(s.vertex_ids for s in charts if s.dim == 1))
    if not nx.is_connected(skeleton):
        raise DisconnectedComplex(list(nx.connected_components(skeleton)))

    complex_ = SimplicialComplex(
        ambient_dim=spec.ambient_dim,
        vertices=vertices,
        simplices=frozenset(charts),
        basepoint=spec.basepoint,
        skeleton=skeleton,
        _charts=charts,
    )
    logger.info(
        "Built complex with %d vertices and %d simplices (ambient dimension %d)",
        len(vertices), len(charts), spec.ambient_dim,
    )
    return complex_


def barycentric(
    complex_: SimplicialComplex, sigma: Simplex, point: Sequence[Any]
) -> Optional[Dict[str, Fraction]]:
    """Return the exact barycentric coordinates of ``point`` in ``sigma``, or None if outside."""
    p = complex_.check_point(point)
    chart = complex_._charts[sigma]
    offset = tuple(a - b for a, b in zip(p, chart.origin))
    weights = [sum((row[j] * offset[j] for j in range(len(offset))), Fraction(0))
               for row in chart.left_inverse]
    # The left inverse solves in the affine hull; reject points off it.
    rebuilt = tuple(
        o + sum((w * col[i] for w, col in zip(weights, chart.columns)), Fraction(0))
        for i, o in enumerate(chart.origin)
    )
    if rebuilt != p:
        return None
    lambdas = [1 - sum(weights, Fraction(0)), *weights]
    if any(lam < 0 for lam in lambdas):
        return None
    return dict(zip(sigma.vertex_ids, lambdas))


def from_barycentric(
    complex_: SimplicialComplex, weights: Mapping[str, Fraction]
) -> Point:
    """Return Σ λᵥ v for barycentric weights keyed by vertex id."""
    point = [Fraction(0)] * complex_.ambient_dim
    for vertex_id, weight in weights.items():
        for i, c in enumerate(complex_.coords(vertex_id)):
            point[i] += weight * c
    return tuple(point)


# Complexes hash by identity, so entries never mix two complexes.
@functools.lru_cache(maxsize=LOCATE_CACHE_SIZE)
def _carriers_of(complex_: SimplicialComplex, p: Point) -> FrozenSet[Simplex]:
    return frozenset(
        sigma for sigma in complex_.simplices if barycentric(complex_, sigma, p) is not None
    )


def locate(complex_: SimplicialComplex, point: Sequence[Any]) -> FrozenSet[Simplex]:
    """Return every closed simplex containing ``point``; empty if the point is not in X."""
    return _carriers_of(complex_, complex_.check_point(point))


def common_simplices(
    complex_: SimplicialComplex, p: Sequence[Any], q: Sequence[Any]
) -> FrozenSet[Simplex]:
    """Return the simplices containing both points; nonempty iff [p, q] lies in one simplex."""
    return locate(complex_, p) & locate(complex_, q)


def _check_same_dimension(*points: Sequence[Any]) -> None:
    expected = len(points[0])
    for point in points[1:]:
        if len(point) != expected:
            raise DimensionMismatch(expected, len(point))


def collinear(p: Point, q: Point, r: Point) -> bool:
    """Return True if all 2x2 minors of the rows (q - p, r - p) vanish."""
    _check_same_dimension(p, q, r)
    u = [b - a for a, b in zip(p, q)]
    v = [c - a for a, c in zip(p, r)]
    return all(
        u[i] * v[j] == u[j] * v[i] for i, j in itertools.combinations(range(len(u)), 2)
    )


def aligned_in_common_simplex(
    complex_: SimplicialComplex, p: Sequence[Any], q: Sequence[Any], r: Sequence[Any]
) -> bool:
    """Return True if p, q, r are collinear and lie in one simplex.

    Repeated points count as aligned.
    """
    p, q, r = (complex_.check_point(x) for x in (p, q, r))
    if not collinear(p, q, r):
        return False
    return bool(locate(complex_, p) & locate(complex_, q) & locate(complex_, r))


def between(p: Sequence[Any], q: Sequence[Any], r: Sequence[Any]) -> bool:
    """Return True if q lies on the closed segment [p, r]."""
    _check_same_dimension(p, q, r)
    p, q, r = make_point(p), make_point(q), make_point(r)
    if p == r:
        return q == p
    k = next(i for i in range(len(p)) if r[i] != p[i])
    t = (q[k] - p[k]) / (r[k] - p[k])
    if not 0 <= t <= 1:
        return False
    return q == interpolate(p, r, t)


def star(complex_: SimplicialComplex, point: Sequence[Any]) -> FrozenSet[Simplex]:
    """Return the closed star of ``point``: every simplex having a carrier of the point as face.

    Raises:
        PointNotInComplex: if the point lies in no simplex.
    """
    carriers = locate(complex_, point)
    if not carriers:
        raise PointNotInComplex(complex_.check_point(point))
    return frozenset(
        sigma for sigma in complex_.simplices if any(c.is_face_of(sigma) for c in carriers)
    )


def in_star(complex_: SimplicialComplex, x: Sequence[Any], y: Sequence[Any]) -> bool:
    """Return True if ``y`` lies in some simplex of the star of ``x``."""
    return bool(star(complex_, x) & locate(complex_, y))
