"""Closed-form translation between Nakayama presentations and quipus.

``A_{n,(n_0..n_r)}^{(l_0..l_r)}`` with almost separate relations is derived
equivalent to the path algebra of the quipu quiver with
``k = (n_0, n_1+1-n_0-l_0, ..., n+1-n_r-l_r)`` and ``m = (l_0-2, ..., l_r-2)``,
and any two orientations of one quipu are derived equivalent.  Deciding
derived equivalence therefore reduces to comparing canonical quipus.
"""

from __future__ import annotations

from .crswap import strip_relations
from .presentations import (
    InvalidPresentation,
    MarkedQuipuQuiver,
    NakayamaPresentation,
    PreconditionError,
    QuipuShape,
    require_almost_separate,
    shape_of,
    validate_nakayama,
)
from .shapes import CanonicalQuipu, canonical_form

__all__ = [
    "nakayama_to_quipu",
    "quipu_to_nakayama",
    "strip_length2",
    "equivalence_family",
    "family_set",
    "derived_equivalent",
    "canonical_quipu",
]


def nakayama_to_quipu(p: NakayamaPresentation) -> QuipuShape:
    """Raw quipu of ``p``; length-2 relations give zero-length cords."""
    require_almost_separate(p)
    rels = p.relations
    if not rels:
        return QuipuShape.path(p.n)
    k = [rels[0].start]
    for prev, cur in zip(rels, rels[1:]):
        k.append(cur.start + 1 - prev.end)
    k.append(p.n + 1 - rels[-1].end)
    return QuipuShape(tuple(k), tuple(rel.length - 2 for rel in rels))


def quipu_to_nakayama(q: QuipuShape) -> NakayamaPresentation:
    """Nakayama presentation of the quipu quiver ``D`` spelled by ``q``.

    Needs ``k_0 >= 1`` (the first relation would start at vertex 0) and
    ``k_{r+1} >= 1`` (the last relation would run past vertex ``n``).
    """
    if q.is_path:
        return NakayamaPresentation(q.k[0])
    if q.k[0] < 1:
        raise PreconditionError(f"{q}: k_0 = 0 puts the first relation at vertex 0")
    if q.k[-1] < 1:
        raise PreconditionError(f"{q}: k_(r+1) = 0 makes the last relation overrun")
    starts = [q.k[0]]
    for i in range(1, len(q.m)):
        starts.append(starts[-1] + q.m[i - 1] + q.k[i] + 1)
    p = NakayamaPresentation.from_lists(q.vertex_count, starts, [x + 2 for x in q.m])
    assert validate_nakayama(p).almost_separate
    return p


def strip_length2(p: NakayamaPresentation) -> NakayamaPresentation:
    require_almost_separate(p)
    return NakayamaPresentation(p.n, tuple(rel for rel in p.relations if rel.length > 2))


# The three generators of the family.  Each is the image of one symmetry of
# the quipu: mirror the quiver, or trade the first (last) relation with the
# string segment before (after) it.


def _reversed(p: NakayamaPresentation) -> NakayamaPresentation:
    return NakayamaPresentation(
        p.n, tuple((p.n - rel.end + 1, rel.length) for rel in reversed(p.relations))
    )


def _first_variant(p: NakayamaPresentation) -> NakayamaPresentation:
    (n0, l0), *rest = p.relations
    return NakayamaPresentation(p.n, ((l0 - 2, n0 + 2), *rest))


def _last_variant(p: NakayamaPresentation) -> NakayamaPresentation:
    *rest, (nr, lr) = p.relations
    return NakayamaPresentation(p.n, (*rest, (nr, p.n - nr - lr + 3)))


def equivalence_family(p: NakayamaPresentation) -> list[NakayamaPresentation]:
    """The eight derived-equivalent relatives of ``p``, in display order.

    Order: identity, reversal, last variant, first variant of the reversal,
    first variant, reversal of the first variant, both variants, and first
    variant of the reversal of the first variant.  Duplicates are kept.
    """
    require_almost_separate(p)
    if any(rel.length < 3 for rel in p.relations):
        raise InvalidPresentation([], f"{p}: family needs every relation of length >= 3")
    if not p.relations:
        return [p] * 8
    R, F, L = _reversed, _first_variant, _last_variant
    return [p, R(p), L(p), F(R(p)), F(p), R(F(p)), F(L(p)), F(R(F(p)))]


def family_set(p: NakayamaPresentation) -> list[NakayamaPresentation]:
    """:func:`equivalence_family` without repeats, sorted."""
    return sorted(set(equivalence_family(p)), key=NakayamaPresentation.sort_key)


def canonical_quipu(obj) -> CanonicalQuipu:
    """Canonical quipu derived equivalent to a presentation, shape or marked quiver."""
    if isinstance(obj, QuipuShape):
        return canonical_form(obj)
    if isinstance(obj, NakayamaPresentation):
        return canonical_form(nakayama_to_quipu(strip_length2(obj)))
    if isinstance(obj, MarkedQuipuQuiver):
        return canonical_form(shape_of(strip_relations(obj)[-1]))
    raise TypeError(f"no quipu for {type(obj).__name__}")


def derived_equivalent(a: NakayamaPresentation, b: NakayamaPresentation) -> bool:
    return canonical_quipu(a) == canonical_quipu(b)
