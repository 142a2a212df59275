"""Lattice colorings of a hexagon tiling and same-color tile enumeration.

Tiles sit at integer combinations i * e_i + j * e_j of the two lattice
vectors spanned by a hexagon's vertices.  A coloring with k colors is an
index-k sublattice: tiles share the base tile's color exactly when their
index pair lies in the subgroup generated by (g, 0) and (h, k/g), where
g divides k and 0 <= h < g.  Every k-coloring of this kind arises from
exactly one such (g, h), so enumerating pairs enumerates colorings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .geometry import DomainError, Hexagon, Point, point_to_convex_distance


class TileIndex(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class LatticeBasis:
    e_i: Point
    e_j: Point

    def position(self, i: float, j: float) -> Point:
        return (
            i * self.e_i[0] + j * self.e_j[0],
            i * self.e_i[1] + j * self.e_j[1],
        )


def lattice_basis(hexagon: Hexagon) -> LatticeBasis:
    """Translation vectors of the tiling generated by ``hexagon``.

    e_i spans a row of edge-to-edge tiles; e_j steps to the next row.
    """
    v = hexagon.vertices
    return LatticeBasis(
        e_i=(v[0][0] - v[2][0], v[0][1] - v[2][1]),
        e_j=(v[0][0] + v[1][0], v[0][1] + v[1][1]),
    )


@dataclass(frozen=True)
class ColorScheme:
    """Sublattice coloring with k colors, generated by (g, 0) and (h, k/g)."""

    k: int
    g: int
    h: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError(f"k must be positive: got {self.k}")
        if self.g < 1 or self.k % self.g != 0:
            raise DomainError(f"g must divide k: got g={self.g}, k={self.k}")
        if not 0 <= self.h < self.g:
            raise DomainError(f"h must lie in [0, g): got h={self.h}, g={self.g}")

    @property
    def rows_step(self) -> int:
        """Row period k/g: rows j with j % rows_step == 0 contain color 0."""
        return self.k // self.g

    def contains(self, i: int, j: int) -> bool:
        """Whether tile (i, j) has the same color as the base tile."""
        m = self.k // self.g
        if j % m != 0:
            return False
        return (i - (j // m) * self.h) % self.g == 0


def schemes(k: int) -> list[ColorScheme]:
    """All distinct k-colorings, ordered by (g, h)."""
    if k < 1:
        raise DomainError(f"k must be positive: got {k}")
    out = []
    for g in range(1, k + 1):
        if k % g == 0:
            out.extend(ColorScheme(k, g, h) for h in range(g))
    return out


def enumeration_bound(k: int, slack: int = 1) -> int:
    """Index window radius ceil(2 * sqrt(k)) + slack used by enumerations."""
    return math.isqrt(4 * k - 1) + 1 + slack


def _half_plane_offsets(scheme: ColorScheme, bound: int) -> Iterator[TileIndex]:
    # one representative per +/- pair: j > 0, or j = 0 with i > 0
    m = scheme.rows_step
    for j in range(0, bound, m):
        a = j // m
        lo = 1 if j == 0 else -(bound - 1 - j)
        hi = bound - 1 - j
        # smallest i >= lo with i = a * h (mod g)
        first = lo + (a * scheme.h - lo) % scheme.g
        for i in range(first, hi + 1, scheme.g):
            yield TileIndex(i, j)


def same_color_offsets(scheme: ColorScheme, *, slack: int = 1) -> list[TileIndex]:
    """Nonzero same-color index offsets, one per +/- pair, sorted by (j, i).

    Enumerates the window |i| + j < ceil(2 sqrt(k)) + slack, which reaches
    past the nearest same-color tiles for every scheme; the two generators
    (g, 0) and (h, k/g) are always included even when they fall outside.
    """
    bound = enumeration_bound(scheme.k, slack)
    found = set(_half_plane_offsets(scheme, bound))
    found.add(TileIndex(scheme.g, 0))
    found.add(TileIndex(scheme.h, scheme.rows_step))
    return sorted(found, key=lambda t: (t.j, t.i))


def min_distance_over_offsets(
    hexagon: Hexagon, scheme: ColorScheme, *, slack: int = 1
) -> tuple[float, TileIndex]:
    """Minimum gap between same-colored tiles, with a realizing offset.

    The gap to the tile at offset c equals the distance from the point c to
    the hexagon doubled about its center, because the tiles are translates
    of a centrally symmetric convex body.
    """
    basis = lattice_basis(hexagon)
    doubled = tuple((2.0 * x, 2.0 * y) for x, y in hexagon.vertices)
    best = math.inf
    best_at = None
    for index in same_color_offsets(scheme, slack=slack):
        cx, cy = basis.position(index.i, index.j)
        rr = cx * cx + cy * cy
        # the doubled hexagon fits in the unit circle, so d >= |c| - 1
        if best < math.inf and rr >= (best + 1.0) ** 2:
            continue
        d = point_to_convex_distance((cx, cy), doubled)
        if d < best:
            best = d
            best_at = index
    assert best_at is not None
    return best, best_at


class NoTripleError(RuntimeError):
    """No index pair with determinant k was found for the scheme."""


@dataclass(frozen=True)
class TripleRepresentation:
    """Two offsets t1, t2 whose tiles, with the base tile, frame the coloring.

    d01 and d02 are the base tile's gaps to the tiles at t1 and t2; d12 is
    the gap between those two tiles.  The pair has determinant k, so it
    generates the color sublattice.  canonical is True when the selected
    pair realizes the scheme minimum with d01 = d02 <= d12.
    """

    t1: TileIndex
    t2: TileIndex
    d01: float
    d02: float
    d12: float
    canonical: bool


def _sector_candidates(scheme: ColorScheme, bound: int) -> tuple[list, list]:
    first, second = [], []
    for i in range(0, bound + 1):
        for j in range(-i, 1):
            if i > 0 and scheme.contains(i, j):
                first.append(TileIndex(i, j))
        for j in range(1, bound + 1 - i):
            if scheme.contains(i, j):
                second.append(TileIndex(i, j))
    return first, second


def canonical_triple(
    hexagon: Hexagon, scheme: ColorScheme, *, slack: int = 1
) -> TripleRepresentation:
    """Select the triple of mutually nearest same-colored tiles.

    t1 is taken from the wedge i > 0, -i <= j <= 0 and t2 from i >= 0,
    j > 0, constrained to i1 * j2 - i2 * j1 = k so the pair generates the
    sublattice.  Among pairs whose smallest pairwise gap attains the scheme
    minimum, the one minimizing (largest gap, total gap) wins, preferring
    equal-gap pairs on ties.  If no pair attains the minimum the best
    remaining pair is returned with canonical set to False.
    """
    dmin, _ = min_distance_over_offsets(hexagon, scheme, slack=slack)
    basis = lattice_basis(hexagon)
    doubled = tuple((2.0 * x, 2.0 * y) for x, y in hexagon.vertices)
    dist_cache: dict[TileIndex, float] = {}

    def dist(i: int, j: int) -> float:
        key = TileIndex(i, j)
        d = dist_cache.get(key)
        if d is None:
            d = point_to_convex_distance(basis.position(i, j), doubled)
            dist_cache[key] = d
        return d

    bound = enumeration_bound(scheme.k, slack)
    limit = 4 * scheme.k + 4
    while True:
        first, second = _sector_candidates(scheme, bound)
        pairs = [
            (t1, t2)
            for t1 in first
            for t2 in second
            if t1.i * t2.j - t2.i * t1.j == scheme.k
        ]
        if pairs:
            break
        if bound > limit:
            raise NoTripleError(f"no generating pair for k={scheme.k} within {bound}")
        bound *= 2

    scored = []
    for t1, t2 in pairs:
        d01 = dist(t1.i, t1.j)
        d02 = dist(t2.i, t2.j)
        d12 = dist(t2.i - t1.i, t2.j - t1.j)
        shaped = abs(d01 - d02) <= 1e-7 and d01 <= d12 + 1e-7
        key = (
            max(d01, d02, d12),
            d01 + d02 + d12,
            0 if shaped else 1,
            (t1.i, t1.j, t2.i, t2.j),
        )
        scored.append((key, t1, t2, d01, d02, d12, shaped))

    attaining = [row for row in scored if min(row[3], row[4], row[5]) <= dmin + 1e-9]
    fallback = not attaining
    if fallback:
        attaining = scored
    key, t1, t2, d01, d02, d12, shaped = min(attaining, key=lambda row: row[0])
    return TripleRepresentation(
        t1=t1, t2=t2, d01=d01, d02=d02, d12=d12, canonical=shaped and not fallback
    )
