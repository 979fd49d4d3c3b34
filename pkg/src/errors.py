"""Exceptions raised by the thin loop toolkit.

Every error derives from :class:`ThinLoopError` and carries its offending details as
attributes. ``to_dict`` renders an error as the JSON document printed by the CLI.
"""

from typing import Any, Dict, Optional, Sequence


class ThinLoopError(Exception):
    """Base exception for all domain and validation errors."""

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert the error into a JSON-serializable dictionary.

        Returns:
            dict: ``error`` (the class name), ``message`` and the error details.
        """
        return {"error": type(self).__name__, "message": str(self), **self.details()}


class ComplexError(ThinLoopError):
    """Raised when a complex description does not describe a valid simplicial complex."""


class DuplicateVertexId(ComplexError):
    """Raised when two vertices share an id."""

    def __init__(self, vertex_id: str):
        super().__init__(f"vertex id {vertex_id!r} is declared more than once")
        self.vertex_id = vertex_id

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"vertex_id": self.vertex_id}


class UnknownVertexInSimplex(ComplexError):
    """Raised when a simplex names a vertex that was never declared."""

    def __init__(self, vertex_id: str, simplex: Sequence[str]):
        super().__init__(f"simplex {list(simplex)} names unknown vertex {vertex_id!r}")
        self.vertex_id = vertex_id
        self.simplex = list(simplex)

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"vertex_id": self.vertex_id, "simplex": self.simplex}


class AffinelyDependentSimplex(ComplexError):
    """Raised when the vertices of a simplex are not affinely independent."""

    def __init__(self, simplex: Sequence[str]):
        super().__init__(f"vertices of simplex {list(simplex)} are affinely dependent")
        self.simplex = list(simplex)

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"simplex": self.simplex}


class DisconnectedComplex(ComplexError):
    """Raised when the 1-skeleton has more than one connected component."""

    def __init__(self, components: Sequence[Sequence[str]]):
        super().__init__(f"the 1-skeleton has {len(components)} connected components")
        self.components = [sorted(c) for c in components]

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"components": self.components}


class MissingBasepoint(ComplexError):
    """Raised when the basepoint id is not among the vertices."""

    def __init__(self, basepoint: str):
        super().__init__(f"basepoint {basepoint!r} is not a declared vertex")
        self.basepoint = basepoint

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"basepoint": self.basepoint}


class DimensionMismatch(ThinLoopError):
    """Raised when a point does not have the ambient dimension."""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"expected a point of dimension {expected}, got {actual}")
        self.expected = expected
        self.actual = actual

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"expected": self.expected, "actual": self.actual}


class PointNotInComplex(ThinLoopError):
    """Raised when a point lies in no simplex of the complex."""

    def __init__(self, point: Sequence[Any], index: Optional[int] = None):
        where = "" if index is None else f" at index {index}"
        super().__init__(f"point{where} is not in the complex")
        self.point = [str(c) for c in point]
        self.index = index

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"point": self.point, "index": self.index}


class WordError(ThinLoopError):
    """Raised when a point sequence is not a valid PL loop or path word."""


class EmptyWord(WordError):
    """Raised when a word has no points."""

    def __init__(self):
        super().__init__("a word needs at least one point")


class NotBased(WordError):
    """Raised when a word does not start at the basepoint."""

    def __init__(self):
        super().__init__("the first point is not the basepoint")
        self.index = 0

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"index": self.index}


class NotClosed(WordError):
    """Raised when a loop word does not end at the basepoint."""

    def __init__(self, index: int):
        super().__init__("the last point of a loop is not the basepoint")
        self.index = index

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"index": self.index}


class NoCommonSimplex(WordError):
    """Raised when two consecutive points of a word share no simplex."""

    def __init__(self, index: int):
        super().__init__(f"points {index} and {index + 1} do not lie in a common simplex")
        self.index = index

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"index": self.index}


class OutOfRange(ThinLoopError):
    """Raised when a parameter lies outside of its allowed interval."""

    def __init__(self, name: str, value: Any, low: Any = 0, high: Any = 1):
        super().__init__(f"{name}={value} is outside [{low}, {high}]")
        self.name = name
        self.value = str(value)

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"name": self.name, "value": self.value}


class InvalidSubdivision(ThinLoopError):
    """Raised when breakpoints are not a monotone subdivision of [0, 1] of the right size."""


class ComplexMismatch(ThinLoopError):
    """Raised when operands live on different complexes."""

    def __init__(self):
        super().__init__("operands belong to different complexes")


class TooLong(ThinLoopError):
    """Raised when a word is too long for exhaustive reduction."""

    def __init__(self, length: int, max_len: int):
        super().__init__(f"word of length {length} exceeds the exhaustive limit {max_len}")
        self.length = length
        self.max_len = max_len

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"length": self.length, "max_len": self.max_len}


class RefEndpointMismatch(ThinLoopError):
    """Raised when a reference path does not end at the trivialization centre."""

    def __init__(self):
        super().__init__("the reference path does not end at the chart centre")


class PointNotInStar(ThinLoopError):
    """Raised when a point lies outside the star neighbourhood of the chart centre."""

    def __init__(self, point: Sequence[Any]):
        super().__init__("point is not in the star of the chart centre")
        self.point = [str(c) for c in point]

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"point": self.point}


class PointNotInSimplex(ThinLoopError):
    """Raised when a point lies outside the simplex it is lifted through."""

    def __init__(self, point: Sequence[Any], simplex: Sequence[str]):
        super().__init__(f"point is not in simplex {list(simplex)}")
        self.point = [str(c) for c in point]
        self.simplex = list(simplex)

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"point": self.point, "simplex": self.simplex}


class EndpointMismatch(ThinLoopError):
    """Raised when two paths that must share an endpoint do not."""

    def __init__(self):
        super().__init__("paths end at different points")


class DocumentParseError(ThinLoopError):
    """Raised when an input file is not well-formed JSON/YAML."""

    def __init__(self, path: str, line: Optional[int], column: Optional[int], problem: str):
        where = f"line {line}, column {column}" if line is not None else "unknown position"
        super().__init__(f"{path}: {where}: {problem}")
        self.path = path
        self.line = line
        self.column = column

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"path": self.path, "line": self.line, "column": self.column}


class UsageError(ThinLoopError):
    """Raised for command-line usage errors, including unreadable files."""


class KindMismatch(WordError):
    """Raised when a loop operation receives a path word, or the other way round."""

    def __init__(self, expected: str, actual: str):
        super().__init__(f"expected a {expected} word, got a {actual} word")
        self.expected = expected
        self.actual = actual

    def details(self) -> Dict[str, Any]:
        """Return the structured details of the error."""
        return {"expected": self.expected, "actual": self.actual}
