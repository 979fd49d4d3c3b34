"""Thin reduction of loop words and the group of thin classes.

A word is reduced by deleting an interior point whose neighbours make an aligned triple inside
one simplex. Deleting the lowest removable index first, to a fixed point, yields the core of the
loop; two loops are thin homotopic iff their cores are equal. Two coarser relations are
provided for comparison: W-reduction (redundant points only) and Milnor reduction (exact
duplicates and exact backtracks only).
"""

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, FrozenSet, List, Sequence, Tuple, Union

from constants import MAX_ORACLE_LEN
from errors import ComplexMismatch, KindMismatch, NoCommonSimplex, OutOfRange, TooLong
from geometry import (
    Point,
    SimplicialComplex,
    aligned_in_common_simplex,
    between,
    common_simplices,
    interpolate,
    locate,
)
from words import PLWord, WordKind, concat, reverse

logger = logging.getLogger(__name__)


class Rule(str, enum.Enum):
    """Which deletion rule removed a point."""

    THIN = "ThinRemove"
    MILNOR = "MilnorRemove"
    W = "WRemove"


@dataclass(frozen=True)
class TraceStep:
    """One deletion: ``index`` is the position in the word as it was at that step."""

    rule: Rule
    index: int

    def to_dict(self) -> Dict[str, Any]:
        """Render the step as a JSON-serializable dictionary."""
        return {"rule": self.rule.value, "index": self.index}


ReductionTrace = Tuple[TraceStep, ...]

Removable = Callable[[SimplicialComplex, Point, Point, Point], bool]


def _thin_removable(complex_: SimplicialComplex, p: Point, q: Point, r: Point) -> bool:
    return aligned_in_common_simplex(complex_, p, q, r)


def _milnor_removable(complex_: SimplicialComplex, p: Point, q: Point, r: Point) -> bool:
    return p == q or p == r


def _w_removable(complex_: SimplicialComplex, p: Point, q: Point, r: Point) -> bool:
    if not between(p, q, r):
        return False
    return bool(locate(complex_, p) & locate(complex_, q) & locate(complex_, r))


_REMOVABLE: Dict[Rule, Removable] = {
    Rule.THIN: _thin_removable,
    Rule.MILNOR: _milnor_removable,
    Rule.W: _w_removable,
}


def _removable_positions(
    complex_: SimplicialComplex, points: Sequence[Point], rule: Rule
) -> List[int]:
    removable = _REMOVABLE[rule]
    return [
        i for i in range(1, len(points) - 1)
        if removable(complex_, points[i - 1], points[i], points[i + 1])
    ]


def _collapse_constant(points: Tuple[Point, ...]) -> Tuple[Point, ...]:
    # [x, x] has no interior point but is the constant word.
    if len(points) == 2 and points[0] == points[1]:
        return points[:1]
    return points


def reduce_word(w: PLWord, rule: Rule = Rule.THIN) -> Tuple[PLWord, ReductionTrace]:
    """Reduce a word under ``rule``, lowest removable index first, and return the trace.

    The prefix kept on the stack is always reduced, so the lowest removable index is always at
    the stack boundary. Endpoints are never removed.
    """
    removable = _REMOVABLE[rule]
    stack: List[Point] = []
    trace: List[TraceStep] = []
    for p in w.points:
        while len(stack) >= 2 and removable(w.complex, stack[-2], stack[-1], p):
            trace.append(TraceStep(rule, len(stack) - 1))
            stack.pop()
        stack.append(p)
    if len(stack) == 2 and stack[0] == stack[1]:
        trace.append(TraceStep(rule, 1))
        stack.pop()
    logger.debug("%s reduced a word of length %d to %d", rule.value, len(w), len(stack))
    return w.with_points(stack), tuple(trace)


def replay(points: Sequence[Point], trace: ReductionTrace) -> Tuple[Point, ...]:
    """Apply the deletions of a trace to a point sequence."""
    current = list(points)
    for step in trace:
        del current[step.index]
    return tuple(current)


@dataclass(frozen=True)
class ThinClass:
    """An element of the thin loop group, held as its fully reduced loop word."""

    word: PLWord

    @property
    def complex(self) -> SimplicialComplex:
        """Return the complex the loop lives on."""
        return self.word.complex

    @property
    def points(self) -> Tuple[Point, ...]:
        """Return the points of the reduced word."""
        return self.word.points

    @property
    def is_identity(self) -> bool:
        """Whether the class is the constant loop."""
        return len(self.word) == 1

    def __mul__(self, other: "ThinClass") -> "ThinClass":
        return mul(self, other)

    def __invert__(self) -> "ThinClass":
        return inv(self)

    def __pow__(self, n: int) -> "ThinClass":
        return power(self, n)


def _require_loop(w: PLWord) -> None:
    if w.kind != WordKind.LOOP:
        raise KindMismatch(WordKind.LOOP.value, w.kind.value)


def removable_indices(w: PLWord) -> FrozenSet[int]:
    """Return every interior index whose triple is aligned within one simplex."""
    _require_loop(w)
    return frozenset(_removable_positions(w.complex, w.points, Rule.THIN))


def is_degenerate(w: PLWord) -> bool:
    """Return True if the word lies in the degenerate set, i.e. has a removable index."""
    return bool(_removable_positions(w.complex, w.points, Rule.THIN))


def is_reduced(w: PLWord) -> bool:
    """Whether no rule applies to the word."""
    return not is_degenerate(w) and _collapse_constant(w.points) == w.points


def core(w: PLWord) -> ThinClass:
    """Return the thin class of a loop word, as its core."""
    _require_loop(w)
    reduced, _ = reduce_word(w, Rule.THIN)
    return ThinClass(reduced)


def w_reduce(w: PLWord) -> PLWord:
    """Delete redundant points (lying between their neighbours in one simplex).

    This relation is finer than thin equivalence: flares survive it.
    """
    reduced, _ = reduce_word(w, Rule.W)
    return reduced


def milnor_reduce(w: PLWord) -> PLWord:
    """Delete x_i whenever x_{i-1} = x_i or x_{i-1} = x_{i+1}."""
    reduced, _ = reduce_word(w, Rule.MILNOR)
    return reduced


def to_thin(w: PLWord) -> ThinClass:
    """Send a (Milnor or W) reduced loop word to its thin class."""
    return core(w)


def identity(complex_: SimplicialComplex) -> ThinClass:
    """Return the class of the constant loop at the basepoint."""
    return ThinClass(PLWord(complex_, (complex_.basepoint_coords,), WordKind.LOOP))


def _same_complex(a: PLWord, b: PLWord) -> None:
    if a.complex is not b.complex:
        raise ComplexMismatch()


def mul(a: ThinClass, b: ThinClass) -> ThinClass:
    """Return the class of the loop sum a · b."""
    _same_complex(a.word, b.word)
    return core(a.word.with_points(concat(a.points, b.points)))


def inv(a: ThinClass) -> ThinClass:
    """Return the class of the reversed loop."""
    reversed_word = a.word.with_points(reverse(a.points))
    # Alignment is symmetric, so reversal preserves reducedness.
    assert is_reduced(reversed_word)
    return ThinClass(reversed_word)


def _as_class(x: Union[ThinClass, PLWord]) -> ThinClass:
    return x if isinstance(x, ThinClass) else core(x)


def eq(a: Union[ThinClass, PLWord], b: Union[ThinClass, PLWord]) -> bool:
    """Return True if both loops are thin homotopic, i.e. have the same core."""
    a_class, b_class = _as_class(a), _as_class(b)
    _same_complex(a_class.word, b_class.word)
    return a_class.points == b_class.points


def power(a: ThinClass, n: int) -> ThinClass:
    """Return the n-fold product; negative n uses the inverse."""
    base = a if n >= 0 else inv(a)
    result = identity(a.complex)
    for _ in range(abs(n)):
        result = mul(result, base)
    return result


def insert_flare(w: PLWord, index: int, tip: Sequence[Any]) -> PLWord:
    """Insert the backtrack (p, tip, p) at ``index``, where p = points[index].

    Raises:
        OutOfRange: if index is not a position of the word.
        NoCommonSimplex: if p and tip share no simplex.
    """
    if not 0 <= index < len(w):
        raise OutOfRange("index", index, 0, len(w) - 1)
    p = w.points[index]
    tip_point = w.complex.check_point(tip)
    if not common_simplices(w.complex, p, tip_point):
        raise NoCommonSimplex(index)
    return w.with_points(w.points[: index + 1] + (tip_point, p) + w.points[index + 1:])


def insert_between(w: PLWord, index: int, t: Fraction) -> PLWord:
    """Insert the redundant point p + t (r - p) between points[index] and points[index + 1].

    Raises:
        OutOfRange: if index has no successor or t is outside [0, 1].
    """
    if not 0 <= index < len(w) - 1:
        raise OutOfRange("index", index, 0, len(w) - 2)
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise OutOfRange("t", t)
    midpoint = interpolate(w.points[index], w.points[index + 1], t)
    return w.with_points(w.points[: index + 1] + (midpoint,) + w.points[index + 1:])


@dataclass(frozen=True)
class FreeThinClass:
    """A cyclically reduced loop without basepoint, in its least rotation.

    The trivial class has the empty cycle.
    """

    complex: SimplicialComplex
    cycle: Tuple[Point, ...]

    @property
    def is_trivial(self) -> bool:
        """Whether the cycle is empty."""
        return not self.cycle


def cyclic_core(w: PLWord) -> FreeThinClass:
    """Reduce a loop cyclically (wrap-around triples included) and canonicalize its rotation."""
    _require_loop(w)
    cycle = list(w.points[:-1])
    changed = True
    while changed and len(cycle) >= 2:
        changed = False
        n = len(cycle)
        for i in range(n):
            if aligned_in_common_simplex(w.complex, cycle[i - 1], cycle[i], cycle[(i + 1) % n]):
                del cycle[i]
                changed = True
                break
    if len(cycle) <= 1:
        return FreeThinClass(w.complex, ())
    rotations = (tuple(cycle[i:] + cycle[:i]) for i in range(len(cycle)))
    return FreeThinClass(w.complex, min(rotations))


def reduce_all_orders(
    w: PLWord, max_len: int = MAX_ORACLE_LEN, rule: Rule = Rule.THIN
) -> FrozenSet[PLWord]:
    """Explore every order of deletions and return the distinct terminal words.

    A singleton result certifies that reduction of this word does not depend on the order.

    Raises:
        TooLong: if the word has more than ``max_len`` points.
    """
    if len(w) > max_len:
        raise TooLong(len(w), max_len)
    terminals = set()
    seen = set()
    pending = [w.points]
    while pending:
        points = pending.pop()
        if points in seen:
            continue
        seen.add(points)
        positions = _removable_positions(w.complex, points, rule)
        if not positions:
            terminals.add(w.with_points(_collapse_constant(points)))
            continue
        pending.extend(points[:i] + points[i + 1:] for i in positions)
    if len(terminals) > 1:
        logger.warning("Word of length %d has %d distinct normal forms", len(w), len(terminals))
    return frozenset(terminals)
