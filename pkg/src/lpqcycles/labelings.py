"""Labelings of oriented graphs and the L(p,q) validity check.

An L(p,q)-labeling assigns each vertex a color from {0..k} so that colors
across a directed edge differ by at least p and colors of vertices joined by
a directed path of length two differ by at least q.  The budget k is part of
the labeling (a witness need not use the color k).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Iterable

import numpy as np

from .graphs import Digraph, ProductKind, ProductShape, oriented_cycle, product, two_step_pairs


@dataclass(frozen=True)
class ConstraintParams:
    """Minimum separations: p across directed edges, q across two-step pairs."""

    p: int = 2
    q: int = 1

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"separations must be nonnegative, got ({self.p}, {self.q})")


DEFAULT_PARAMS = ConstraintParams(2, 1)


@dataclass(frozen=True)
class Labeling:
    """A total color assignment with a declared budget.

    ``colors`` is an immutable integer array indexed by vertex id; ``shape``
    carries grid metadata when the labeling lives on a product graph.
    """

    colors: np.ndarray
    k_budget: int
    shape: ProductShape | None = None

    def __post_init__(self) -> None:
        arr = np.asarray(self.colors, dtype=np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "colors", arr)
        if self.k_budget < 0:
            raise ValueError("budget must be nonnegative")
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("colors must be a nonempty 1-d array")
        if arr.min() < 0 or arr.max() > self.k_budget:
            raise ValueError(f"colors must lie in 0..{self.k_budget}")
        if self.shape is not None and arr.size != self.shape.rows * self.shape.cols:
            raise ValueError("colors length does not match grid shape")

    @property
    def n_vertices(self) -> int:
        return int(self.colors.size)

    def color_at(self, i: int, j: int) -> int:
        if self.shape is None:
            raise ValueError("labeling carries no grid shape")
        return int(self.colors[self.shape.vertex_id(i, j)])

    def color_grid(self) -> np.ndarray:
        if self.shape is None:
            raise ValueError("labeling carries no grid shape")
        return self.colors.reshape(self.shape.rows, self.shape.cols)

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.colors)


class ViolationKind(Enum):
    EDGE_GAP = "edge-gap"
    TWO_STEP_GAP = "two-step-gap"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    pair: tuple[int, int]
    labels: tuple[int, int]
    required: int


def constraint_pairs(
    g: Digraph, params: ConstraintParams
) -> dict[tuple[int, int], tuple[int, ViolationKind]]:
    """Map each constrained unordered pair (u, v), u < v, to (gap, kind).

    A pair that is both an edge and a two-step pair is constrained by
    max(p, q) and classified as an edge pair.
    """

    pairs: dict[tuple[int, int], tuple[int, ViolationKind]] = {}
    for u, w in g.edges():
        key = (u, w) if u < w else (w, u)
        pairs[key] = (params.p, ViolationKind.EDGE_GAP)
    for key in two_step_pairs(g):
        if key in pairs:
            gap = max(params.p, params.q)
            pairs[key] = (gap, ViolationKind.EDGE_GAP)
        else:
            pairs[key] = (params.q, ViolationKind.TWO_STEP_GAP)
    return pairs


def validate(g: Digraph, f: Labeling, params: ConstraintParams = DEFAULT_PARAMS) -> list[Violation]:
    """All violated constraints of f on g, in lexicographic pair order.

    Empty result means f is a valid k-L(p,q)-labeling at its declared budget.
    Each violated pair is reported exactly once.
    """

    if f.n_vertices != g.n_vertices:
        raise ValueError(
            f"labeling covers {f.n_vertices} vertices but graph has {g.n_vertices}"
        )
    pairs = constraint_pairs(g, params)
    if not pairs:
        return []
    keys = sorted(pairs)
    us = np.fromiter((k[0] for k in keys), dtype=np.int64, count=len(keys))
    vs = np.fromiter((k[1] for k in keys), dtype=np.int64, count=len(keys))
    gaps = np.fromiter((pairs[k][0] for k in keys), dtype=np.int64, count=len(keys))
    bad = np.nonzero(np.abs(f.colors[us] - f.colors[vs]) < gaps)[0]
    out = []
    for idx in bad:
        key = keys[int(idx)]
        gap, kind = pairs[key]
        out.append(
            Violation(kind, key, (int(f.colors[key[0]]), int(f.colors[key[1]])), gap)
        )
    return out


def complement(f: Labeling, k: int) -> Labeling:
    """Replace every color c by k - c; an involution that preserves validity."""
    if int(f.colors.max()) > k:
        raise ValueError(f"colors exceed {k}; cannot complement")
    return Labeling(k - f.colors, k, f.shape)


def _require_torus(f: Labeling) -> ProductShape:
    if f.shape is None or not f.shape.cyclic:
        raise ValueError("labeling is not defined on a product of two cycles")
    return f.shape


def is_diagonal(f: Labeling) -> bool:
    """True when f(i, j) = f(i+1 mod m, j-1 mod n) holds at every cell."""
    shape = _require_torus(f)
    grid = f.color_grid()
    shifted = np.roll(np.roll(grid, -1, axis=0), 1, axis=1)
    return bool((grid == shifted).all())


def reduce_rows(f: Labeling, params: ConstraintParams = DEFAULT_PARAMS) -> Labeling:
    """Restrict a valid diagonal labeling of an m x n torus to its first m - n rows.

    Requires m >= n + 3.  The result is a labeling of the (m-n) x n torus of
    the same product kind; its validity and diagonality are re-checked rather
    than assumed, and a failure raises RuntimeError since it would contradict
    the periodicity argument the restriction rests on.
    """

    shape = _require_torus(f)
    m, n = shape.rows, shape.cols
    if m < n + 3:
        raise ValueError(f"row reduction needs m >= n + 3, got m={m}, n={n}")
    if not is_diagonal(f):
        raise ValueError("labeling is not diagonal")
    big = product(shape.kind, oriented_cycle(m), oriented_cycle(n))
    if validate(big, f, params):
        raise ValueError("labeling is not valid; refusing to reduce")

    reduced = Labeling(
        f.color_grid()[: m - n].reshape(-1),
        f.k_budget,
        ProductShape(shape.kind, m - n, n, cyclic=True),
    )
    small = product(shape.kind, oriented_cycle(m - n), oriented_cycle(n))
    if validate(small, reduced, params) or not is_diagonal(reduced):
        raise RuntimeError(
            f"restriction of a valid diagonal labeling to C_{m - n} x C_{n} failed its own check"
        )
    return reduced


# --- JSON labeling documents -------------------------------------------------
#
# Schema (writers emit keys in exactly this order; readers accept any order):
#   {"product": "cartesian"|"strong"|"none", "m": int, "n": int,
#    "p": int, "q": int, "k": int, "labels": [[int, ...], ...]}
# plus an optional trailing "pattern": [int, ...] carrying the base cycle
# pattern a lifted labeling was built from.  "none" marks a labeling of a
# single oriented cycle, stored as one row with m = 1.


def labeling_document(
    f: Labeling,
    params: ConstraintParams = DEFAULT_PARAMS,
    pattern: Iterable[int] | None = None,
) -> dict:
    """Serialize a labeling (of a torus product or a single cycle) to a dict."""
    if f.shape is not None:
        if not f.shape.cyclic:
            raise ValueError("only torus products and single cycles serialize")
        prod = f.shape.kind.value
        m, n = f.shape.rows, f.shape.cols
        labels = [[int(c) for c in row] for row in f.color_grid()]
    else:
        prod = "none"
        m, n = 1, f.n_vertices
        labels = [[int(c) for c in f.colors]]
    doc = {
        "product": prod,
        "m": m,
        "n": n,
        "p": params.p,
        "q": params.q,
        "k": f.k_budget,
        "labels": labels,
    }
    if pattern is not None:
        doc["pattern"] = [int(c) for c in pattern]
    return doc


def labeling_from_document(doc: dict) -> tuple[Digraph, Labeling, ConstraintParams]:
    """Rebuild (graph, labeling, params) from a labeling document."""
    try:
        prod = doc["product"]
        m, n = int(doc["m"]), int(doc["n"])
        params = ConstraintParams(int(doc["p"]), int(doc["q"]))
        k = int(doc["k"])
        labels = doc["labels"]
    except KeyError as exc:
        raise ValueError(f"labeling document missing key {exc}") from None
    if not isinstance(labels, list) or len(labels) != m:
        raise ValueError(f"labels must be a list of {m} rows")
    if any(not isinstance(row, list) or len(row) != n for row in labels):
        raise ValueError(f"every label row must have {n} entries")
    flat = np.array([c for row in labels for c in row], dtype=np.int64)

    if prod == "none":
        if m != 1:
            raise ValueError('product "none" stores a single cycle as one row (m = 1)')
        g = oriented_cycle(n)
        f = Labeling(flat, k)
    elif prod in (ProductKind.CARTESIAN.value, ProductKind.STRONG.value):
        kind = ProductKind(prod)
        g = product(kind, oriented_cycle(m), oriented_cycle(n))
        f = Labeling(flat, k, ProductShape(kind, m, n, cyclic=True))
    else:
        raise ValueError(f"unknown product kind {prod!r}")
    return g, f, params


def write_labeling(fp: IO[str], f: Labeling, params: ConstraintParams = DEFAULT_PARAMS,
                   pattern: Iterable[int] | None = None) -> None:
    json.dump(labeling_document(f, params, pattern), fp, indent=1)
    fp.write("\n")


def read_labeling(fp: IO[str]) -> tuple[Digraph, Labeling, ConstraintParams]:
    try:
        doc = json.load(fp)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not a JSON labeling document: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("labeling document must be a JSON object")
    return labeling_from_document(doc)
