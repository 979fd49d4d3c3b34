"""Docstring for thin-loop-group.src.utils.

This utils module holds file loading and rendering used by the command line front end.
"""
import json
import logging
from pathlib import Path
from typing import Any, List, Optional

import yaml

from errors import DocumentParseError, UsageError
from geometry import Point, SimplicialComplex, build_complex, format_point
from models import ComplexSpec, WordSpec
from words import PLWord, WordKind, make_word

logger = logging.getLogger(__name__)


def file_contents(path: Path) -> Optional[str]:
    """Return the content of a file at path `path`."""
    if not path.exists():
        return None
    return path.read_text(encoding="utf-8")


def load_document(path: Path) -> Any:
    """Parse a JSON (or YAML) document, reporting the 1-based position of syntax errors.

    Raises:
        UsageError: if the file cannot be read.
        DocumentParseError: if the content is not well-formed.
    """
    content = file_contents(path)
    if content is None:
        raise UsageError(f"{path}: no such file")
    try:
        return json.loads(content)
    except json.JSONDecodeError as json_error:
        try:
            return yaml.safe_load(content)
        except yaml.YAMLError as e:
            logger.error("Failed to parse %s: %s", path, e)
            if content.lstrip().startswith(("{", "[")):
                raise DocumentParseError(
                    str(path), json_error.lineno, json_error.colno, json_error.msg
                ) from json_error
            mark = getattr(e, "problem_mark", None)
            if mark is None:
                raise DocumentParseError(str(path), None, None, str(e)) from e
            problem = getattr(e, "problem", None) or str(e)
            raise DocumentParseError(str(path), mark.line + 1, mark.column + 1, problem) from e


def load_complex(path: Path) -> SimplicialComplex:
    """Load and validate a complex file."""
    return build_complex(ComplexSpec.model_validate(load_document(path)))


def load_word(complex_: SimplicialComplex, path: Path, kind: Optional[WordKind] = None) -> PLWord:
    """Load and validate a loop or path file; ``kind`` overrides the kind in the file."""
    spec = WordSpec.model_validate(load_document(path))
    return make_word(complex_, spec.points, kind or WordKind(spec.kind))


def points_to_json(points: List[Point]) -> List[List[str]]:
    """Render points as arrays of rational strings."""
    return [format_point(p) for p in points]


def word_to_json(word: PLWord) -> dict:
    """Render a word in the loop/path file format."""
    return {"kind": word.kind.value, "points": points_to_json(list(word.points))}
