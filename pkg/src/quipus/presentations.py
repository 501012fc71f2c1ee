"""Domain types and the ASCII object notation.

Three kinds of object are handled here:

* ``NakayamaPresentation`` -- a linear Nakayama algebra given by its length
  ``n`` and zero relations ``(start, length)``; written ``A:n:[starts]:[lengths]``.
* ``QuipuShape`` -- a quipu ``P_(k_0..k_{r+1})^(m_0..m_r)``; written
  ``Q:[k]:[m]``.  The path on ``n`` vertices is ``Q:[n]:[]``.
* ``MarkedQuipuQuiver`` -- a quipu quiver carrying zero relations along its
  main string; written ``M:s:[(pos,len),...]:[(start,len),...]``.

Vertices are numbered from 1 along the main string.  A relation ``(q, l)``
covers the vertices ``q..q+l`` and the arrows ``q..q+l-1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union

__all__ = [
    "QuipuError",
    "NotationError",
    "InvalidPresentation",
    "InvalidQuiver",
    "PreconditionError",
    "Relation",
    "Cord",
    "ErrorCode",
    "Validity",
    "NakayamaPresentation",
    "QuipuShape",
    "MarkedQuipuQuiver",
    "validate_nakayama",
    "require_almost_separate",
    "parse",
    "render",
    "embed_nakayama",
    "embed_quipu",
    "shape_of",
]


class QuipuError(Exception):
    """Base class for every domain error raised by this package."""


class NotationError(QuipuError, ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class InvalidPresentation(QuipuError, ValueError):
    def __init__(self, errors, message: str | None = None):
        self.errors = tuple(errors)
        if message is None:
            message = "; ".join(e.value for e in self.errors)
        super().__init__(message)


class InvalidQuiver(QuipuError, ValueError):
    pass


class PreconditionError(QuipuError, ValueError):
    pass


class Relation(NamedTuple):
    start: int
    length: int

    @property
    def end(self) -> int:
        return self.start + self.length


class Cord(NamedTuple):
    position: int
    length: int


class ErrorCode(enum.Enum):
    EMPTY_QUIVER = "vertex count must be at least 1"
    START_OUT_OF_RANGE = "relation starts outside 1..n"
    SHORT_RELATION = "relation of length < 2"
    NON_MONOTONE_STARTS = "relation starts not strictly increasing"
    NON_MONOTONE_ENDS = "relation ends not strictly increasing"
    OVERFLOW = "last relation runs past vertex n"
    NOT_ALMOST_SEPARATE = "two relations overlap in more than one arrow"


@dataclass(frozen=True)
class Validity:
    errors: tuple[ErrorCode, ...]
    almost_separate: bool

    @property
    def valid(self) -> bool:
        return not self.errors

    def __bool__(self) -> bool:
        return self.valid


def _relations(pairs: Iterable) -> tuple[Relation, ...]:
    return tuple(Relation(int(s), int(l)) for s, l in pairs)


@dataclass(frozen=True)
class NakayamaPresentation:
    """The algebra ``kA_n / I`` with ``I`` generated by the given relations.

    Construction does not validate, so that malformed input can be reported
    by :func:`validate_nakayama`.  Relations are kept in the given order.
    """

    n: int
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", _relations(self.relations))

    @classmethod
    def from_lists(cls, n: int, starts, lengths) -> NakayamaPresentation:
        starts, lengths = list(starts), list(lengths)
        if len(starts) != len(lengths):
            raise ValueError("starts and lengths differ in length")
        return cls(n, tuple(zip(starts, lengths)))

    @property
    def starts(self) -> tuple[int, ...]:
        return tuple(rel.start for rel in self.relations)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(rel.length for rel in self.relations)

    def sort_key(self):
        return (self.n, self.starts, self.lengths)

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class QuipuShape:
    """A quipu in ``k``/``m`` notation; ``len(k) == len(m) + 1``.

    ``m`` empty means the path on ``k[0]`` vertices.
    """

    k: tuple[int, ...]
    m: tuple[int, ...] = ()

    def __post_init__(self):
        k = tuple(int(x) for x in self.k)
        m = tuple(int(x) for x in self.m)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "m", m)
        if len(k) != len(m) + 1:
            raise InvalidQuiver(f"k-list must be one longer than m-list, got {len(k)} and {len(m)}")
        if any(x < 0 for x in k + m):
            raise InvalidQuiver("quipu parameters must be nonnegative")
        if not m and k[0] < 1:
            raise InvalidQuiver("a path needs at least one vertex")

    @classmethod
    def path(cls, n: int) -> QuipuShape:
        return cls((n,), ())

    @property
    def is_path(self) -> bool:
        return not self.m

    @property
    def r(self) -> int:
        """Index of the last cord; -1 for a path."""
        return len(self.m) - 1

    @property
    def vertex_count(self) -> int:
        return len(self.m) + sum(self.k) + sum(self.m)

    def sort_key(self):
        # paths (no cords) sort first, then by number of cords
        return (len(self.m), self.k, self.m)

    def __lt__(self, other: QuipuShape) -> bool:
        return (self.vertex_count, self.sort_key()) < (other.vertex_count, other.sort_key())

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class MarkedQuipuQuiver:
    """Quipu quiver with almost separate relations.

    The main string is ``1 -> 2 -> ... -> main``; each cord hangs off its
    position and is oriented away from the main string.  Invariants are
    enforced at construction (``InvalidQuiver``).
    """

    main: int
    cords: tuple[Cord, ...] = ()
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        cords = tuple(sorted(Cord(int(p), int(c)) for p, c in self.cords))
        relations = tuple(sorted(_relations(self.relations)))
        object.__setattr__(self, "cords", cords)
        object.__setattr__(self, "relations", relations)
        self._check()

    def _check(self):
        s = self.main
        if s < 1:
            raise InvalidQuiver("main string needs at least one vertex")
        positions = [p for p, _ in self.cords]
        if len(set(positions)) != len(positions):
            raise InvalidQuiver("two cords at one main-string vertex")
        for p, c in self.cords:
            if not 1 <= p <= s:
                raise InvalidQuiver(f"cord at {p} is off the main string")
            if c < 1:
                raise InvalidQuiver(f"cord at {p} has length {c}; omit empty cords")
        for q, l in self.relations:
            if l < 2:
                raise InvalidQuiver(f"relation ({q},{l}) shorter than 2")
            if q < 1 or q + l > s:
                raise InvalidQuiver(f"relation ({q},{l}) does not fit on main string of {s}")
            for p in positions:
                if q < p < q + l:
                    raise InvalidQuiver(f"cord at {p} starts inside relation ({q},{l})")
        for (q0, l0), (q1, _) in zip(self.relations, self.relations[1:]):
            if q1 < q0 + l0 - 1:
                raise InvalidQuiver(f"relations at {q0} and {q1} overlap in more than one arrow")

    def cord_length(self, position: int) -> int:
        for p, c in self.cords:
            if p == position:
                return c
        return 0

    @property
    def vertex_count(self) -> int:
        return self.main + sum(c for _, c in self.cords)

    def __str__(self) -> str:
        return render(self)


Notation = Union[NakayamaPresentation, QuipuShape, MarkedQuipuQuiver]


def validate_nakayama(p: NakayamaPresentation) -> Validity:
    errors: list[ErrorCode] = []
    rels = p.relations
    if p.n < 1:
        errors.append(ErrorCode.EMPTY_QUIVER)
    if any(not 1 <= s <= p.n for s, _ in rels):
        errors.append(ErrorCode.START_OUT_OF_RANGE)
    if any(l < 2 for _, l in rels):
        errors.append(ErrorCode.SHORT_RELATION)
    pairs = list(zip(rels, rels[1:]))
    if any(b.start <= a.start for a, b in pairs):
        errors.append(ErrorCode.NON_MONOTONE_STARTS)
    if any(b.end <= a.end for a, b in pairs):
        errors.append(ErrorCode.NON_MONOTONE_ENDS)
    if rels and rels[-1].end > p.n:
        errors.append(ErrorCode.OVERFLOW)
    almost = all(b.start >= a.end - 1 for a, b in pairs)
    return Validity(tuple(errors), almost)


def require_almost_separate(p: NakayamaPresentation) -> None:
    """Raise unless ``p`` is valid with almost separate relations."""
    v = validate_nakayama(p)
    if not v.valid:
        raise InvalidPresentation(v.errors)
    if not v.almost_separate:
        raise InvalidPresentation([ErrorCode.NOT_ALMOST_SEPARATE])


# --- notation -------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def error(self, message: str):
        raise NotationError(message, self.text, self.pos)

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos : self.pos + 1]

    def expect(self, literal: str):
        for ch in literal:
            if self.peek() != ch:
                self.error(f"expected {ch!r}")
            self.pos += 1

    def integer(self) -> int:
        self._skip()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start : self.pos]
        if digits in ("", "-"):
            self.pos = start
            self.error("expected integer")
        return int(digits)

    def _list(self, item):
        self.expect("[")
        out = []
        if self.peek() == "]":
            self.pos += 1
            return out
        while True:
            out.append(item())
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect("]")
            return out

    def int_list(self) -> list[int]:
        return self._list(self.integer)

    def pair(self) -> tuple[int, int]:
        self.expect("(")
        a = self.integer()
        self.expect(",")
        b = self.integer()
        self.expect(")")
        return a, b

    def pair_list(self) -> list[tuple[int, int]]:
        return self._list(self.pair)

    def end(self):
        if self.peek():
            self.error("trailing characters")


def parse(text: str) -> Notation:
    """Parse ``A:...``, ``Q:...`` or ``M:...`` notation.

    Syntax errors raise :class:`NotationError` with the offending position.
    Nakayama presentations come back unvalidated; quipu shapes and marked
    quivers raise :class:`InvalidQuiver` when malformed.
    """
    sc = _Scanner(text)
    head = sc.peek()
    if head == "A":
        sc.expect("A:")
        n = sc.integer()
        sc.expect(":")
        at = sc.pos
        starts = sc.int_list()
        sc.expect(":")
        lengths = sc.int_list()
        sc.end()
        if len(starts) != len(lengths):
            raise NotationError("starts and lengths lists differ in length", text, at)
        return NakayamaPresentation.from_lists(n, starts, lengths)
    if head == "Q":
        sc.expect("Q:")
        k = sc.int_list()
        sc.expect(":")
        m = sc.int_list()
        sc.end()
        return QuipuShape(tuple(k), tuple(m))
    if head == "M":
        sc.expect("M:")
        main = sc.integer()
        sc.expect(":")
        cords = sc.pair_list()
        sc.expect(":")
        rels = sc.pair_list()
        sc.end()
        return MarkedQuipuQuiver(main, tuple(cords), tuple(rels))
    sc.error("expected 'A:', 'Q:' or 'M:'")


def _ints(xs) -> str:
    return ",".join(str(x) for x in xs)


def _pairs(xs) -> str:
    return ",".join(f"({a},{b})" for a, b in xs)


def render(obj: Notation) -> str:
    if isinstance(obj, NakayamaPresentation):
        return f"A:{obj.n}:[{_ints(obj.starts)}]:[{_ints(obj.lengths)}]"
    if isinstance(obj, QuipuShape):
        return f"Q:[{_ints(obj.k)}]:[{_ints(obj.m)}]"
    if isinstance(obj, MarkedQuipuQuiver):
        return f"M:{obj.main}:[{_pairs(obj.cords)}]:[{_pairs(obj.relations)}]"
    raise TypeError(f"cannot render {type(obj).__name__}")


# --- embeddings -----------------------------------------------------------


def embed_nakayama(p: NakayamaPresentation) -> MarkedQuipuQuiver:
    """View the quiver of ``p`` as a cordless quipu quiver with relations."""
    require_almost_separate(p)
    return MarkedQuipuQuiver(p.n, (), p.relations)


def embed_quipu(q: QuipuShape) -> MarkedQuipuQuiver:
    """The quipu quiver ``D`` of ``q``: main string left to right, cords outward.

    Cord ``i`` hangs off main-string position ``1 + k_0 + ... + k_i + i``;
    zero-length cords leave no trace.
    """
    if q.is_path:
        return MarkedQuipuQuiver(q.k[0])
    cords = []
    pos = 0
    for i, length in enumerate(q.m):
        pos += q.k[i] + 1
        if length:
            cords.append((pos, length))
    return MarkedQuipuQuiver(pos + q.k[-1], tuple(cords))


def shape_of(quiver: MarkedQuipuQuiver) -> QuipuShape:
    """Read off the quipu of a relation-free marked quiver."""
    if quiver.relations:
        raise PreconditionError("quiver still carries relations")
    if not quiver.cords:
        return QuipuShape.path(quiver.main)
    k, m = [], []
    prev = 0
    for p, c in quiver.cords:
        k.append(p - prev - 1)
        m.append(c)
        prev = p
    k.append(quiver.main - prev)
    return QuipuShape(tuple(k), tuple(m))
