"""Cyclic color patterns and their diagonal lifts to torus products.

A pattern is a color word g(0..L-1) read cyclically, constrained by a
condition vector (c_1, ..., c_r): every pair of positions at cyclic offset
t must differ by at least c_t.  Offsets are taken literally, so an offset
that wraps to the position itself (L divides t) compares the color with
itself and fails whenever c_t >= 1; short cycles really do forbid such
patterns.  Lifting a pattern along anti-diagonals, f(i, j) = g((i + j) mod
L), turns pattern validity into labeling validity on the m x n torus
whenever L divides both m and n:

  * Cartesian product, L(2,1): edge offsets project to 1 and two-step
    offsets to 2, so the condition vector is (2, 1).
  * Strong product, L(2,2,1,1)-style: offsets 1..4 appear with required
    gaps (2, 2, 1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import ProductKind, ProductShape
from .labelings import Labeling


@dataclass(frozen=True)
class Pattern:
    """A cyclic color word with the condition vector it is meant to satisfy."""

    colors: tuple[int, ...]
    conditions: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.colors:
            raise ValueError("pattern must be nonempty")
        if any(c < 0 for c in self.colors):
            raise ValueError("pattern colors must be nonnegative")
        if not self.conditions or any(c < 0 for c in self.conditions):
            raise ValueError("condition vector must be nonempty and nonnegative")

    @property
    def length(self) -> int:
        return len(self.colors)

    @property
    def span(self) -> int:
        return max(self.colors)


@dataclass(frozen=True)
class PatternViolation:
    offset: int
    positions: tuple[int, int]
    labels: tuple[int, int]
    required: int


def conditions_for(kind: ProductKind) -> tuple[int, ...]:
    """Condition vector whose patterns lift to valid L(2,1)-labelings."""
    if kind is ProductKind.CARTESIAN:
        return (2, 1)
    return (2, 2, 1, 1)


def validate_pattern(pattern: Pattern) -> list[PatternViolation]:
    """All violated offset constraints, ordered by (offset, position).

    For each offset t = 1..r and each position s the pair
    (s, (s + t) mod L) must differ by at least c_t.  Wrapped offsets are
    not exempt: if L divides t, the pair degenerates to (s, s) and the
    constraint fails for c_t >= 1.
    """

    g = pattern.colors
    L = len(g)
    out = []
    for t, need in enumerate(pattern.conditions, start=1):
        if need == 0:
            continue
        for s in range(L):
            s2 = (s + t) % L
            if abs(g[s] - g[s2]) < need:
                out.append(PatternViolation(t, (s, s2), (g[s], g[s2]), need))
    return out


def canonical_rotation(colors: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least rotation of a cyclic word."""
    L = len(colors)
    return min(tuple(colors[(s + i) % L] for i in range(L)) for s in range(L))


def l21_cycle_pattern(d: int) -> Pattern:
    """Span-4 pattern of length d for conditions (2, 1), built from blocks.

    Lengths split by residue mod 3: 024 repeated, with a trailing 0314 or
    13 fixing the other residues.  Every d >= 3 is covered; d = 1, 2 admit
    no span-4 pattern at all (offset 2 wraps onto offset 0 or 1).
    """

    if d < 3:
        raise ValueError(f"no (2, 1) pattern of length {d} exists")
    if d % 3 == 0:
        word = (0, 2, 4) * (d // 3)
    elif d % 3 == 1:
        word = (0, 2, 4) * ((d - 4) // 3) + (0, 3, 1, 4)
    else:
        word = (0, 2, 4) * ((d - 2) // 3) + (1, 3)
    pat = Pattern(word, (2, 1))
    if validate_pattern(pat):
        raise RuntimeError(f"block construction for length {d} produced an invalid pattern")
    return pat


@dataclass(frozen=True)
class SemigroupDecomposition:
    """target = a * m + b * n with a, b >= 0 and minimal b."""

    target: int
    m: int
    n: int
    a: int
    b: int


def semigroup_decompose(target: int, m: int, n: int) -> SemigroupDecomposition | None:
    """Write target as a*m + b*n, a, b >= 0 not both zero, minimizing b.

    Returns None when target is not in the numerical semigroup generated
    by m and n.
    """

    if m <= 0 or n <= 0:
        raise ValueError("generators must be positive")
    if target <= 0:
        return None
    for b in range(target // n + 1):
        rest = target - b * n
        if rest % m == 0:
            return SemigroupDecomposition(target, m, n, rest // m, b)
    return None


_STRONG_BLOCK_7 = (0, 2, 4, 6, 1, 3, 5)
_STRONG_BLOCK_8 = (0, 2, 4, 6, 1, 3, 5, 7)


def concatenated_strong_pattern(length: int) -> Pattern:
    """Pattern of the given length for conditions (2, 2, 1, 1), if one exists.

    Concatenates copies of the span-6 block 0246135 and the span-7 block
    02461357, so the length must decompose as 7a + 8b; the span is 6 when
    b = 0 and 7 otherwise.  The result is re-validated before returning.
    """

    dec = semigroup_decompose(length, 7, 8)
    if dec is None:
        raise ValueError(f"length {length} is not a sum of 7s and 8s")
    word = _STRONG_BLOCK_7 * dec.a + _STRONG_BLOCK_8 * dec.b
    pat = Pattern(word, (2, 2, 1, 1))
    if validate_pattern(pat):
        raise RuntimeError(f"block concatenation for length {length} produced an invalid pattern")
    return pat


def lift_diagonal(pattern: Pattern, kind: ProductKind, m: int, n: int) -> Labeling:
    """Lift a pattern to the m x n torus along anti-diagonals.

    f(i, j) = g((i + j) mod L); defined whenever L divides both m and n.
    The budget of the lifted labeling is the pattern's span.
    """

    L = pattern.length
    if m % L or n % L:
        raise ValueError(f"pattern length {L} must divide both {m} and {n}")
    grid = np.empty((m, n), dtype=np.int64)
    row = np.array([pattern.colors[j % L] for j in range(n)], dtype=np.int64)
    for i in range(m):
        grid[i] = np.roll(row, -(i % L))
    return Labeling(grid.reshape(-1), pattern.span, ProductShape(kind, m, n, cyclic=True))


def exists_cycle_pattern(
    length: int, span: int, conditions: tuple[int, ...]
) -> Pattern | None:
    """Lexicographically least pattern of a given length and span, or None.

    Searches color words over 0..span by backtracking, colors ascending.
    Offsets that wrap onto their own position rule the length out up front.
    """

    if length <= 0 or span < 0:
        raise ValueError("length must be positive and span nonnegative")
    for t, need in enumerate(conditions, start=1):
        if need >= 1 and t % length == 0:
            return None

    r = len(conditions)
    word = [0] * length

    def fits(s: int, c: int) -> bool:
        # a pair is checked once the later of its endpoints gets a color;
        # both cyclic partners of s at each offset cover that exactly
        for t in range(1, r + 1):
            need = conditions[t - 1]
            if need == 0:
                continue
            for e in ((s - t) % length, (s + t) % length):
                if e < s and abs(word[e] - c) < need:
                    return False
        return True

    def search(s: int) -> bool:
        if s == length:
            return True
        for c in range(span + 1):
            if fits(s, c):
                word[s] = c
                if search(s + 1):
                    return True
        return False

    if not search(0):
        return None
    pat = Pattern(tuple(word), conditions)
    if validate_pattern(pat):
        raise RuntimeError("pattern search returned an invalid word")
    return pat
