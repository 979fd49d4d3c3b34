"""Docstring for thin-loop-group.src.models.

This models module holds the classes used to validate input documents before any geometry is
built from them.
"""
import re
from typing import List, Literal

from pydantic import BaseModel, Field, PositiveInt, field_validator

RATIONAL_PATTERN = re.compile(r"^-?\d+(/0*[1-9]\d*)?$")


def check_rational(v) -> str:
    """Ensure a coordinate is a rational string such as "0", "-3" or "7/12"."""
    # Bare integers are accepted; YAML loads unquoted numbers as int.
    if isinstance(v, int) and not isinstance(v, bool):
        v = str(v)
    if not isinstance(v, str) or not RATIONAL_PATTERN.match(v.strip()):
        raise ValueError(f"{v!r} is not a rational string")
    return v.strip()


class VertexSpec(BaseModel):
    """A named vertex with rational coordinates."""
    id: str
    coords: List[str] = Field(..., min_length=1)

    @field_validator("id")
    @classmethod
    def id_not_empty(cls, v):
        """Ensure the vertex id is not empty or whitespace."""
        if not v.strip():
            raise ValueError("vertex id cannot be empty")
        return v

    @field_validator("coords", mode="before")
    @classmethod
    def coords_are_rational(cls, v):
        """Ensure every coordinate is a rational string."""
        if not isinstance(v, list):
            raise ValueError("coords must be an array")
        return [check_rational(c) for c in v]


class ComplexSpec(BaseModel):
    """Top-level model representing a complex file."""
    ambient_dim: PositiveInt
    vertices: List[VertexSpec] = Field(..., min_length=1)
    simplices: List[List[str]]
    basepoint: str

    @field_validator("simplices")
    @classmethod
    def simplices_not_empty(cls, v):
        """Ensure no simplex is listed without vertices."""
        if any(not s for s in v):
            raise ValueError("a simplex needs at least one vertex")
        return v


class WordSpec(BaseModel):
    """Top-level model representing a loop or path file."""
    kind: Literal["loop", "path"]
    points: List[List[str]] = Field(..., min_length=1)

    @field_validator("points", mode="before")
    @classmethod
    def points_are_rational(cls, v):
        """Ensure every point is an array of rational strings."""
        if not isinstance(v, list):
            raise ValueError("points must be an array")
        points = []
        for point in v:
            if not isinstance(point, list):
                raise ValueError("every point must be an array of coordinates")
            points.append([check_rational(c) for c in point])
        return points
