"""Exhaustive generation and derived-equivalence classification at fixed length."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator

from .presentations import NakayamaPresentation, QuipuShape
from .shapes import CanonicalQuipu, canonical_form, is_normalized
from .translate import canonical_quipu

__all__ = [
    "EquivalenceClass",
    "iter_presentations",
    "enumerate_nakayama",
    "enumerate_quipus",
    "classify",
    "dynkin_label",
]


@dataclass(frozen=True)
class EquivalenceClass:
    n: int
    canonical: CanonicalQuipu
    members: tuple[NakayamaPresentation, ...]

    @property
    def label(self) -> str:
        return dynkin_label(self.canonical) or str(self.canonical)


def iter_presentations(
    n: int, min_length: int = 2, almost_separate: bool = True
) -> Iterator[NakayamaPresentation]:
    """Valid presentations of length ``n``, lexicographic in (starts, lengths).

    With ``almost_separate=False`` every valid presentation is produced.
    """

    def extend(rels, prev_start, prev_end):
        yield NakayamaPresentation(n, tuple(rels))
        lo = prev_start + 1
        if almost_separate and rels:
            lo = max(lo, prev_end - 1)
        for s in range(lo, n):
            for l in range(max(min_length, prev_end - s + 1), n - s + 1):
                rels.append((s, l))
                yield from extend(rels, s, s + l)
                rels.pop()

    return iter(sorted(extend([], 0, 0), key=NakayamaPresentation.sort_key))


def enumerate_nakayama(n: int, min_length: int = 3) -> list[NakayamaPresentation]:
    if min_length not in (2, 3):
        raise ValueError("min_length must be 2 or 3")
    return list(iter_presentations(n, min_length))


def _compositions(total: int, parts: int, minima: list[int]):
    if parts == 1:
        if total >= minima[0]:
            yield (total,)
        return
    for first in range(minima[0], total - sum(minima[1:]) + 1):
        for rest in _compositions(total - first, parts - 1, minima[1:]):
            yield (first,) + rest


def enumerate_quipus(n: int) -> list[CanonicalQuipu]:
    """Every quipu on ``n`` vertices, once, as canonical shapes in sorted order."""
    found = {QuipuShape.path(n)}
    r = 0
    # r+1 cords need r+1 branch vertices, r+1 cord vertices and both ends
    while 2 * (r + 1) + 2 <= n:
        cords = r + 1
        # k_0, k_{r+1} >= 1, inner k >= 0, all m >= 1
        minima = [1] + [0] * r + [1] + [1] * cords
        for parts in _compositions(n - cords, 2 * cords + 1, minima):
            shape = QuipuShape(parts[: r + 2], parts[r + 2 :])
            assert is_normalized(shape)
            found.add(canonical_form(shape))
        r += 1
    return sorted(found, key=QuipuShape.sort_key)


def classify(n: int, min_length: int = 3) -> list[EquivalenceClass]:
    """Partition :func:`enumerate_nakayama` by canonical quipu.

    Every quipu on ``n`` vertices yields a class, possibly with no members.
    """
    groups: dict[QuipuShape, list[NakayamaPresentation]] = defaultdict(list)
    for p in enumerate_nakayama(n, min_length):
        groups[canonical_quipu(p)].append(p)
    quipus = enumerate_quipus(n)
    stray = set(groups) - set(quipus)
    assert not stray, f"presentations landed outside the quipu list: {stray}"
    return [EquivalenceClass(n, q, tuple(groups.get(q, ()))) for q in quipus]


_EXCEPTIONAL = {
    (1, 2, 2): "E6",
    (1, 2, 3): "E7",
    (1, 2, 4): "E8",
    (2, 2, 2): "~E6",
    (1, 3, 3): "~E7",
    (1, 2, 5): "~E8",
}


def dynkin_label(q: QuipuShape) -> str | None:
    """A/D/E or extended Dynkin name of a canonical quipu, if it has one.

    Arms are counted in vertices, excluding the branch vertex.
    """
    n = q.vertex_count
    if q.is_path:
        return f"A{n}"
    if len(q.m) == 1:
        arms = tuple(sorted((q.k[0], q.k[1], q.m[0])))
        if arms[:2] == (1, 1):
            return f"D{n}"
        return _EXCEPTIONAL.get(arms)
    if len(q.m) == 2 and q.k[0] == q.k[2] == q.m[0] == q.m[1] == 1:
        return f"~D{n - 1}"
    return None
