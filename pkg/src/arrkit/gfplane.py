"""Prime field arithmetic and the projective plane P2(F_q).

Lines and points of the plane are both represented by normalized
coordinate triples (a, b, c) of residues: the first nonzero coordinate
is always 1, so projective equality is plain tuple equality.  Points
and lines are dual to each other, which is why ``meet`` and ``join``
are the same cross-product computation with different error types.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from .errors import EqualLines, EqualPoints, ZeroInverse, ZeroVector

Triple = Tuple[int, int, int]


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for machine-word moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field F_q for a prime q, with projective-plane helpers.

    Residues are plain ints in [0, q); q**2 stays well inside 64 bits for
    every modulus this toolkit uses, so all arithmetic is exact machine
    arithmetic followed by one reduction.
    """

    __slots__ = ("q", "_inv_table")

    def __init__(self, q: int):
        if not is_prime(q):
            raise ValueError(f"modulus {q} is not prime")
        self.q = q
        self._inv_table = None

    def __repr__(self):
        return f"PrimeField({self.q})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    # --- element arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroInverse on 0."""
        a %= self.q
        if a == 0:
            raise ZeroInverse(f"0 has no inverse in F_{self.q}")
        return pow(a, self.q - 2, self.q)

    def element(self, a: int) -> int:
        """Canonical residue of an arbitrary integer."""
        return a % self.q

    def inv_table(self) -> List[int]:
        """Table t with t[a] = a^-1 for a in 1..q-1 (t[0] unused, = 0).

        Built once per field with the standard O(q) recurrence; the greedy
        search normalizes millions of triples, so table lookups matter.
        """
        if self._inv_table is None:
            q = self.q
            t = [0, 1] + [0] * (q - 2) if q > 1 else [0]
            for i in range(2, q):
                t[i] = (-(q // i) * t[q % i]) % q
            self._inv_table = t
        return self._inv_table

    # --- projective triples -------------------------------------------------

    def normalize(self, coords: Sequence[int]) -> Triple:
        """Scale a coordinate triple so its first nonzero entry is 1."""
        q = self.q
        a, b, c = (coords[0] % q, coords[1] % q, coords[2] % q)
        if a:
            k = self.inv(a)
            return (1, b * k % q, c * k % q)
        if b:
            k = self.inv(b)
            return (0, 1, c * k % q)
        if c:
            return (0, 0, 1)
        raise ZeroVector("all three coordinates are zero")

    def _cross(self, t1: Triple, t2: Triple) -> Triple:
        q = self.q
        a1, b1, c1 = t1
        a2, b2, c2 = t2
        return ((b1 * c2 - c1 * b2) % q,
                (c1 * a2 - a1 * c2) % q,
                (a1 * b2 - b1 * a2) % q)

    def meet(self, l1: Triple, l2: Triple) -> Triple:
        """The unique point on both lines (normalized cross product)."""
        if l1 == l2:
            raise EqualLines(f"meet of equal lines {l1}")
        return self.normalize(self._cross(l1, l2))

    def join(self, p1: Triple, p2: Triple) -> Triple:
        """The unique line through both points; dual to meet."""
        if p1 == p2:
            raise EqualPoints(f"join of equal points {p1}")
        return self.normalize(self._cross(p1, p2))

    def collinear(self, t1: Triple, t2: Triple, t3: Triple) -> bool:
        """True iff the 3x3 coordinate determinant vanishes mod q."""
        q = self.q
        a1, b1, c1 = t1
        a2, b2, c2 = t2
        a3, b3, c3 = t3
        det = (a1 * (b2 * c3 - c2 * b3)
               - b1 * (a2 * c3 - c2 * a3)
               + c1 * (a2 * b3 - b2 * a3))
        return det % q == 0

    def enumerate_plane(self) -> List[Triple]:
        """All q^2 + q + 1 normalized triples, in lexicographic order."""
        q = self.q
        pts: List[Triple] = [(0, 0, 1)]
        pts.extend((0, 1, c) for c in range(q))
        pts.extend((1, b, c) for b in range(q) for c in range(q))
        pts.sort()
        return pts

    def poly_roots(self, coeffs: Sequence[int]) -> List[int]:
        """All roots of an integer polynomial mod q, by exhaustive scan.

        ``coeffs`` lists the coefficients from the constant term upward.
        q is small throughout (<= a few thousand in the sweeps), so the
        O(q * deg) scan is negligible.
        """
        q = self.q
        cs = [c % q for c in coeffs]
        if not any(cs):
            raise ValueError("zero polynomial")
        roots = []
        rev = list(reversed(cs))
        for r in range(q):
            acc = 0
            for c in rev:
                acc = (acc * r + c) % q
            if acc == 0:
                roots.append(r)
        return roots


@lru_cache(maxsize=None)
def field(q: int) -> PrimeField:
    """Shared PrimeField instances (they are immutable)."""
    return PrimeField(q)
