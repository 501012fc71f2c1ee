"""Derived invariants over exact integers: Kupisch series, Cartan matrix, Coxeter polynomial.

Equal Coxeter polynomials are necessary for a derived equivalence, not
sufficient.  The Coxeter matrix is ``Phi = -C^{-T} C`` throughout.

The characteristic polynomial is computed by the Faddeev-LeVerrier
recursion modulo several primes below 2**26 (vectorised with numpy int64)
and lifted by the Chinese remainder theorem.  Enough primes are used to
exceed twice an a-priori bound on the coefficients, so the result is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .presentations import (
    MarkedQuipuQuiver,
    NakayamaPresentation,
    QuipuError,
    QuipuShape,
    InvalidPresentation,
    embed_quipu,
    validate_nakayama,
)

__all__ = [
    "NotUnimodular",
    "IntMatrix",
    "IntPolynomial",
    "kupisch",
    "cartan_nakayama",
    "cartan_marked",
    "coxeter_polynomial",
    "coxeter_of",
    "VerificationReport",
    "verify_equivalence",
]


class NotUnimodular(QuipuError, ArithmeticError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def determinant(self) -> int:
        """Bareiss fraction-free elimination; zero entries below a pivot are skipped."""
        a = self.tolist()
        n = len(a)
        sign, prev = 1, 1
        for k in range(n):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            pivot = a[k][k]
            for i in range(k + 1, n):
                aik = a[i][k]
                if aik == 0 and pivot == prev:
                    continue
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
                row_i[k] = 0
            prev = pivot
        return sign * (a[n - 1][n - 1] if n else 1)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients from the constant term upward."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def is_antipalindromic(self) -> bool:
        return self.coeffs == tuple(-c for c in self.coeffs[::-1])

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return " + ".join(terms)


def kupisch(p: NakayamaPresentation) -> list[int]:
    """Dimensions of the indecomposable projectives ``P_1..P_n``."""
    v = validate_nakayama(p)
    if not v.valid:
        raise InvalidPresentation(v.errors)
    out = []
    for i in range(1, p.n + 1):
        end = min([rel.end for rel in p.relations if rel.start >= i] + [p.n + 1])
        out.append(end - i)
    return out


def cartan_nakayama(p: NakayamaPresentation) -> IntMatrix:
    """Row ``i`` has ones in columns ``i .. i + kupisch[i] - 1`` (1-based)."""
    lengths = kupisch(p)
    n = p.n
    rows = []
    for i, c in enumerate(lengths):
        rows.append(tuple(1 if i <= j < i + c else 0 for j in range(n)))
    return _checked(IntMatrix(tuple(rows)))


def cartan_marked(quiver: MarkedQuipuQuiver | QuipuShape) -> IntMatrix:
    """Cartan matrix of a marked quipu quiver (or of the quipu quiver of a shape).

    Vertices are the main string ``1..s`` followed by each cord, in order of
    position, from root to tip.
    """
    if isinstance(quiver, QuipuShape):
        quiver = embed_quipu(quiver)
    s = quiver.main
    # reach[i]: last main vertex reachable from main vertex i by a nonzero path
    reach = []
    for i in range(1, s + 1):
        end = min([rel.end for rel in quiver.relations if rel.start >= i] + [s + 1])
        reach.append(end - 1)
    cord_vertices = []  # (position, depth)
    for p, c in quiver.cords:
        cord_vertices.extend((p, d) for d in range(1, c + 1))
    dim = s + len(cord_vertices)
    rows = [[0] * dim for _ in range(dim)]
    for i in range(1, s + 1):
        row = rows[i - 1]
        for j in range(i, reach[i - 1] + 1):
            row[j - 1] = 1
        for idx, (p, _) in enumerate(cord_vertices):
            if i <= p <= reach[i - 1]:
                row[s + idx] = 1
    for a, (p, d) in enumerate(cord_vertices):
        for b, (p2, d2) in enumerate(cord_vertices):
            if p2 == p and d2 >= d:
                rows[s + a][s + b] = 1
    return _checked(IntMatrix(tuple(map(tuple, rows))))


def _checked(c: IntMatrix) -> IntMatrix:
    det = c.determinant()
    if det not in (1, -1):
        raise NotUnimodular(f"Cartan matrix has determinant {det}")
    return c


# --- characteristic polynomial mod p ---------------------------------------

_PRIME_CEILING = 1 << 26


def _is_prime(x: int) -> bool:
    if x < 2 or x % 2 == 0:
        return x == 2
    return all(x % d for d in range(3, math.isqrt(x) + 1, 2))


@lru_cache(maxsize=None)
def _prime(i: int) -> int:
    start = _PRIME_CEILING - 1 if i == 0 else _prime(i - 1) - 2
    x = start
    while not _is_prime(x):
        x -= 2
    return x


def _inverse_mod(c: np.ndarray, p: int) -> np.ndarray:
    n = c.shape[0]
    a = np.concatenate([c % p, np.eye(n, dtype=np.int64)], axis=1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i, k]), None)
        if piv is None:
            raise NotUnimodular("matrix is singular modulo a prime")
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
        a[k] = a[k] * pow(int(a[k, k]), -1, p) % p
        col = a[:, k].copy()
        col[k] = 0
        a = (a - np.outer(col, a[k]) % p) % p
    return a[:, n:]


def _charpoly_mod(phi: np.ndarray, p: int) -> list[int]:
    n = phi.shape[0]
    c = [0] * (n + 1)
    c[n] = 1
    eye = np.eye(n, dtype=np.int64)
    am = np.zeros((n, n), dtype=np.int64)
    for k in range(1, n + 1):
        m = (am + c[n - k + 1] * eye) % p
        am = (phi @ m) % p
        c[n - k] = (-int(np.trace(am) % p) * pow(k, -1, p)) % p
    return c


def _coefficient_bound(rows: list[list[int]]) -> int:
    # charpoly(Phi) = +-det(x C^T + C); sum of |coefficients| of that
    # determinant is at most prod_i (sum_j |C_ij| + |C_ji|)
    n = len(rows)
    bound = 1
    for i in range(n):
        bound *= sum(abs(rows[i][j]) + abs(rows[j][i]) for j in range(n))
    return max(bound, 1)


def coxeter_polynomial(c: IntMatrix) -> IntPolynomial:
    """Characteristic polynomial of ``-C^{-T} C`` for unimodular ``C``."""
    det = c.determinant()
    if det not in (1, -1):
        raise NotUnimodular(f"determinant {det} is not +-1")
    n = c.dim
    if n == 0:
        return IntPolynomial((1,))
    if n >= 1 << 10:
        raise ValueError("matrix too large for int64 residues")
    rows = c.tolist()
    target = 2 * _coefficient_bound(rows) + 1
    residues, modulus, i = [], 1, 0
    while modulus < target:
        prime = _prime(i)
        cm = np.array(rows, dtype=np.int64) % prime
        inv = _inverse_mod(cm, prime)
        phi = (-(inv.T @ cm)) % prime
        residues.append((prime, _charpoly_mod(phi, prime)))
        modulus *= prime
        i += 1
    coeffs = []
    for idx in range(n + 1):
        value = 0
        for prime, res in residues:
            rest = modulus // prime
            value += res[idx] * rest * pow(rest, -1, prime)
        value %= modulus
        if value > modulus // 2:
            value -= modulus
        coeffs.append(value)
    return IntPolynomial(tuple(coeffs))


def coxeter_of(obj) -> IntPolynomial:
    """Coxeter polynomial of a presentation, marked quiver, or quipu (as its quiver ``D``)."""
    if isinstance(obj, NakayamaPresentation):
        return coxeter_polynomial(cartan_nakayama(obj))
    return coxeter_polynomial(cartan_marked(obj))


@dataclass(frozen=True)
class VerificationReport:
    left: str
    right: str
    left_polynomial: IntPolynomial
    right_polynomial: IntPolynomial

    @property
    def consistent(self) -> bool:
        return self.left_polynomial == self.right_polynomial

    @property
    def verdict(self) -> str:
        return "consistent" if self.consistent else "refuted"

    def lines(self) -> list[str]:
        note = (
            "equal Coxeter polynomials are necessary, not sufficient, for derived equivalence"
            if self.consistent
            else "different Coxeter polynomials: not derived equivalent"
        )
        return [
            f"{self.left}: {self.left_polynomial}",
            f"{self.right}: {self.right_polynomial}",
            f"{self.verdict} ({note})",
        ]


def verify_equivalence(a, b) -> VerificationReport:
    return VerificationReport(str(a), str(b), coxeter_of(a), coxeter_of(b))
