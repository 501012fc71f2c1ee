"""The cord/relation swap and the first-relation-to-cord move built from it.

Swapping a relation ``(q, l)`` with the (possibly empty) cord of length
``m`` hanging off ``q`` replaces the ``l`` arrows of the relation by
``m + 2`` arrows, hangs a cord of length ``l - 2`` off the vertex just
before the old target, and -- when an arrow enters ``q`` -- adds a relation
of length ``m + 2`` ending at that same vertex.  The rewrite is done in one
step; intermediate mutated quivers are never built.
"""

from __future__ import annotations

from .presentations import (
    MarkedQuipuQuiver,
    PreconditionError,
    QuipuError,
    InvalidQuiver,
)

__all__ = [
    "PatternMismatch",
    "cr_swap",
    "landing_vertex",
    "cr_swap_inverse",
    "first_relation_to_cord",
    "first_relation_swaps",
    "first_relation_to_cord_iterated",
    "strip_relations",
]


class PatternMismatch(QuipuError, ValueError):
    """The quiver is not the output of a CR-swap at the indicated site."""


def _relation(quiver: MarkedQuipuQuiver, rel_index: int):
    if not 0 <= rel_index < len(quiver.relations):
        raise PreconditionError(
            f"no relation with index {rel_index} (quiver has {len(quiver.relations)})"
        )
    return quiver.relations[rel_index]


def landing_vertex(quiver: MarkedQuipuQuiver, rel_index: int) -> int:
    """Main-string position, after the swap, of the vertex receiving the new cord."""
    q, _ = _relation(quiver, rel_index)
    return q + quiver.cord_length(q) + 1


def cr_swap(quiver: MarkedQuipuQuiver, rel_index: int) -> MarkedQuipuQuiver:
    q, l = _relation(quiver, rel_index)
    for j, (q2, l2) in enumerate(quiver.relations):
        if j != rel_index and not (q2 + l2 <= q or q2 >= q + l - 1):
            # only a relation ending at q+1 can get here
            raise PreconditionError(
                f"relation ({q2},{l2}) shares the first arrow of ({q},{l})"
            )
    m = quiver.cord_length(q)
    shift = m + 2 - l
    landing = q + m + 1

    cords = []
    for p, c in quiver.cords:
        if p < q:
            cords.append((p, c))
        elif p > q:
            cords.append((p + shift, c))
    if l > 2:
        cords.append((landing, l - 2))

    relations = []
    for j, (q2, l2) in enumerate(quiver.relations):
        if j == rel_index:
            continue
        relations.append((q2, l2) if q2 + l2 <= q else (q2 + shift, l2))
    if q >= 2:
        relations.append((q - 1, m + 2))

    return MarkedQuipuQuiver(quiver.main + shift, tuple(cords), tuple(relations))


def cr_swap_inverse(
    quiver: MarkedQuipuQuiver,
    rel_index: int | None = None,
    *,
    vertex: int | None = None,
) -> MarkedQuipuQuiver:
    """Undo :func:`cr_swap`.

    The swap site is named either by the relation the swap produced
    (``rel_index``) or by its landing vertex (``vertex``, see
    :func:`landing_vertex`).  A swap at a relation starting in vertex 1
    produces no relation, so only ``vertex`` can name it.

    Raises :class:`PatternMismatch` unless swapping the reconstructed
    relation gives back ``quiver`` exactly.
    """
    if (rel_index is None) == (vertex is None):
        raise TypeError("give exactly one of rel_index and vertex")
    produced = None
    if rel_index is not None:
        if not 0 <= rel_index < len(quiver.relations):
            raise PatternMismatch(f"no relation with index {rel_index}")
        produced = quiver.relations[rel_index]
        landing = produced.end
    else:
        landing = vertex
        for rel in quiver.relations:
            if rel.end == landing:
                produced = rel
    if produced is not None:
        q, m = produced.start + 1, produced.length - 2
    else:
        q, m = 1, landing - 2
        if m < 0:
            raise PatternMismatch(f"vertex {landing} cannot be a landing vertex")
    l = quiver.cord_length(landing) + 2
    shift = l - m - 2

    cords = []
    for p, c in quiver.cords:
        if p < q:
            cords.append((p, c))
        elif p > landing:
            cords.append((p + shift, c))
        elif p != landing:
            raise PatternMismatch(f"cord at {p} lies inside the swapped segment")
    if m:
        cords.append((q, m))

    relations = []
    for rel in quiver.relations:
        if rel == produced:
            continue
        if rel.start >= landing:
            relations.append((rel.start + shift, rel.length))
        elif rel.end <= q:
            relations.append(tuple(rel))
        else:
            raise PatternMismatch(f"relation {tuple(rel)} crosses the swapped segment")
    relations.append((q, l))

    try:
        original = MarkedQuipuQuiver(quiver.main + shift, tuple(cords), tuple(relations))
        again = cr_swap(original, original.relations.index((q, l)))
    except (InvalidQuiver, PreconditionError) as exc:
        raise PatternMismatch(str(exc)) from exc
    if again != quiver:
        raise PatternMismatch("reconstructed quiver does not swap back to the input")
    return original


def first_relation_to_cord(quiver: MarkedQuipuQuiver) -> MarkedQuipuQuiver:
    """Closed form: the first relation becomes a cord of length ``l - 2``.

    Its span ``s -> ... -> t`` shrinks to ``s -> t' -> t`` and the cord
    hangs off ``t'``; everything downstream moves by ``2 - l``.
    """
    if not quiver.relations:
        raise PreconditionError("quiver has no relations")
    q, l = quiver.relations[0]
    shift = 2 - l
    cords = [(p, c) if p <= q else (p + shift, c) for p, c in quiver.cords]
    if l > 2:
        cords.append((q + 1, l - 2))
    # every later relation starts at or after q + l - 1
    relations = [(q2 + shift, l2) for q2, l2 in quiver.relations[1:]]
    return MarkedQuipuQuiver(quiver.main + shift, tuple(cords), tuple(relations))


def first_relation_swaps(quiver: MarkedQuipuQuiver) -> list[MarkedQuipuQuiver]:
    """Swap the leading relation until it falls off vertex 1; returns every stage."""
    if not quiver.relations:
        raise PreconditionError("quiver has no relations")
    steps = [quiver]
    for _ in range(quiver.relations[0].start):
        steps.append(cr_swap(steps[-1], 0))
    return steps


def first_relation_to_cord_iterated(quiver: MarkedQuipuQuiver) -> MarkedQuipuQuiver:
    return first_relation_swaps(quiver)[-1]


def strip_relations(quiver: MarkedQuipuQuiver, iterated: bool = False) -> list[MarkedQuipuQuiver]:
    """Turn relations into cords, first to last, until none are left.

    Returns the quivers after each step, starting with ``quiver`` itself.
    With ``iterated`` each closed-form step is replaced by its swaps.
    """
    stages = [quiver]
    while stages[-1].relations:
        if iterated:
            stages.extend(first_relation_swaps(stages[-1])[1:])
        else:
            stages.append(first_relation_to_cord(stages[-1]))
    return stages
