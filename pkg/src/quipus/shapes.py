"""Quipu shape arithmetic: normalization, the orientation orbit, canonical forms.

A shape ``Q:[k_0..k_{r+1}]:[m_0..m_r]`` does not determine its quipu
uniquely.  The first cord may be read as the start of the main string (and
vice versa), likewise at the far end, and the whole picture may be mirrored.
Canonical forms pick the least representative of that orbit.

An independent check is provided by :func:`to_tree` and
:func:`ahu_isomorphic`, which compare the expanded trees directly.
"""

from __future__ import annotations

from collections import deque

from .presentations import QuipuShape

__all__ = [
    "CanonicalQuipu",
    "vertex_count",
    "normalize",
    "is_normalized",
    "symmetry_orbit",
    "canonical_form",
    "is_isomorphic",
    "to_tree",
    "ahu_code",
    "ahu_isomorphic",
]

# canonical_form's output; a plain shape that is normalized and orbit-minimal
CanonicalQuipu = QuipuShape


def vertex_count(q: QuipuShape) -> int:
    return q.vertex_count


def _drop_trivial_cords(k: list[int], m: list[int]) -> bool:
    for i, length in enumerate(m):
        if length == 0:
            k[i : i + 2] = [k[i] + k[i + 1] + 1]
            del m[i]
            return True
    return False


def _absorb_end_cords(k: list[int], m: list[int]) -> bool:
    # a cord leaving the very first (or last) main-string vertex is just
    # a continuation of the main string
    if m and k[0] == 0:
        k[0:2] = [m[0] + 1 + k[1]]
        del m[0]
        return True
    if m and k[-1] == 0:
        k[-2:] = [k[-2] + 1 + m[-1]]
        del m[-1]
        return True
    return False


def normalize(q: QuipuShape) -> QuipuShape:
    """Remove trivial cords and cords sitting at an end of the main string.

    Afterwards every cord starts at a genuine degree-3 vertex: all ``m_i``,
    ``k_0`` and ``k_{r+1}`` are positive, or the shape is a path.
    """
    k, m = list(q.k), list(q.m)
    while _drop_trivial_cords(k, m) or _absorb_end_cords(k, m):
        pass
    return QuipuShape(tuple(k), tuple(m))


def is_normalized(q: QuipuShape) -> bool:
    return q.is_path or (min(q.m) >= 1 and q.k[0] >= 1 and q.k[-1] >= 1)


def _swap_first(q: QuipuShape) -> QuipuShape:
    return QuipuShape((q.m[0],) + q.k[1:], (q.k[0],) + q.m[1:])


def _swap_last(q: QuipuShape) -> QuipuShape:
    return QuipuShape(q.k[:-1] + (q.m[-1],), q.m[:-1] + (q.k[-1],))


def _reverse(q: QuipuShape) -> QuipuShape:
    return QuipuShape(q.k[::-1], q.m[::-1])


def symmetry_orbit(q: QuipuShape) -> set[QuipuShape]:
    """All normalized spellings of the quipu ``q`` (which should be normalized)."""
    if q.is_path:
        return {q}
    seen = {q}
    todo = deque([q])
    while todo:
        cur = todo.popleft()
        if cur.is_path:
            continue
        for move in (_swap_first, _swap_last, _reverse):
            nxt = normalize(move(cur))
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def canonical_form(q: QuipuShape) -> CanonicalQuipu:
    return min(symmetry_orbit(normalize(q)), key=QuipuShape.sort_key)


def is_isomorphic(a: QuipuShape, b: QuipuShape) -> bool:
    return canonical_form(a) == canonical_form(b)


# --- explicit trees -------------------------------------------------------


def to_tree(q: QuipuShape) -> dict[int, list[int]]:
    """Expand ``q`` into an undirected adjacency map on vertices ``0..N-1``.

    Main-string vertices come first, left to right, followed by each cord
    from its root outward.
    """
    main = q.vertex_count - sum(q.m)
    adj: dict[int, list[int]] = {v: [] for v in range(q.vertex_count)}

    def link(a, b):
        adj[a].append(b)
        adj[b].append(a)

    for v in range(main - 1):
        link(v, v + 1)
    nxt = main
    pos = -1
    for i, length in enumerate(q.m):
        pos += q.k[i] + 1
        prev = pos
        for _ in range(length):
            link(prev, nxt)
            prev = nxt
            nxt += 1
    return adj


def _centroids(adj: dict[int, list[int]]) -> list[int]:
    n = len(adj)
    root = next(iter(adj))
    parent = {root: None}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    size = {}
    for v in reversed(order):
        size[v] = 1 + sum(size[w] for w in adj[v] if parent.get(w) == v)
    best, result = n + 1, []
    for v in order:
        heaviest = n - size[v]
        for w in adj[v]:
            if parent.get(w) == v:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, result = heaviest, [v]
        elif heaviest == best:
            result.append(v)
    return result


def _rooted_code(adj, root) -> str:
    parent = {root: None}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    code = {}
    for v in reversed(order):
        children = sorted(code[w] for w in adj[v] if parent.get(w) == v)
        code[v] = "(" + "".join(children) + ")"
    return code[root]


def ahu_code(adj: dict[int, list[int]]) -> str:
    """Orientation-free name of an unrooted tree (AHU at the centroid)."""
    if not adj:
        return ""
    return min(_rooted_code(adj, c) for c in _centroids(adj))


def ahu_isomorphic(t1: dict[int, list[int]], t2: dict[int, list[int]]) -> bool:
    return len(t1) == len(t2) and ahu_code(t1) == ahu_code(t2)
