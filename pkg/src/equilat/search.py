"""Brute-force discovery of every lattice equable quadrilateral class up to a
perimeter bound.

The search walks ordered chains of four edge vectors with integer norm.  Two
symmetry reductions keep it honest but fast: the first edge is always a
longest edge of the chain, and it is rotated into the half-quadrant
dx > 0, dy >= 0.  Every congruence class has a counterclockwise placement of
that shape, so the catalog is complete for its bound; signatures dedupe the
many raw embeddings of each class.

Filters are ordered by cost: perimeter budget, closure distance, integer
closing norm, equability (one integer compare), simplicity, then signature.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt

from equilat import kites
from equilat.geometry import (
    DiagonalReport,
    LatticeQuad,
    Point,
    QuadClassification,
    canonical_signature,
    classify,
    interior_diagonals,
    signature,
)

__all__ = [
    "EdgeVector",
    "SearchConfig",
    "LeqClass",
    "LeqCatalog",
    "AuditReport",
    "integer_norm_vectors",
    "enumerate_leqs",
    "get_catalog",
    "audit_theorems",
]

P_MAX_MIN = 12
P_MAX_MAX = 200


@dataclass(frozen=True, order=True)
class EdgeVector:
    dx: int
    dy: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1 or self.dx * self.dx + self.dy * self.dy != self.length**2:
            raise ValueError(f"({self.dx},{self.dy}) does not have integer norm {self.length}")


@dataclass(frozen=True)
class SearchConfig:
    p_max: int = 42
    workers: int = 1
    emit_all_embeddings: bool = False

    def __post_init__(self) -> None:
        if not P_MAX_MIN <= self.p_max <= P_MAX_MAX:
            raise ValueError(f"p_max must lie in [{P_MAX_MIN}, {P_MAX_MAX}]")
        if self.workers < 1:
            raise ValueError("workers must be positive")


def integer_norm_vectors(max_len: int) -> list[EdgeVector]:
    """All nonzero lattice vectors with integer norm <= max_len, every
    quadrant included, sorted by (length, dx, dy)."""
    if max_len < 1:
        raise ValueError("max_len must be positive")
    out = []
    for dx in range(-max_len, max_len + 1):
        for dy in range(-max_len, max_len + 1):
            if dx == 0 and dy == 0:
                continue
            n = dx * dx + dy * dy
            r = isqrt(n)
            if r * r == n and r <= max_len:
                out.append(EdgeVector(dx, dy, r))
    out.sort(key=lambda e: (e.length, e.dx, e.dy))
    return out


def _vector_table(max_len: int) -> tuple[list[tuple[int, int, int]], list[int]]:
    """Flat (dx, dy, len) list sorted by length plus prefix cuts: cut[L] is the
    number of vectors of length <= L."""
    vecs = [(e.dx, e.dy, e.length) for e in integer_norm_vectors(max_len)]
    cut = [0] * (max_len + 1)
    j = 0
    for l in range(max_len + 1):
        while j < len(vecs) and vecs[j][2] <= l:
            j += 1
        cut[l] = j
    return vecs, cut


def _search_chunk(args: tuple[int, int, int, bool]) -> dict:
    """Enumerate all chains whose first edge index is in the given stride
    class.  Returns {signature: [min_flat_vertices, count, embeddings]}."""
    p_max, stride, offset, emit_all = args
    max_side = p_max - 3
    vecs, cut = _vector_table(max_side)
    firsts = [v for v in vecs if v[0] > 0 and v[1] >= 0]
    found: dict[tuple, list] = {}

    for idx in range(offset, len(firsts), stride):
        x1, y1, l1 = firsts[idx]
        rem1 = p_max - l1
        if rem1 < 3:
            continue
        for x2, y2, l2 in vecs[: cut[min(l1, rem1 - 2)]]:
            sx = x1 + x2
            sy = y1 + y2
            if sx == 0 and sy == 0:
                continue
            rem2 = rem1 - l2
            if sx * sx + sy * sy > rem2 * rem2:
                continue  # cannot close within the remaining budget
            for x3, y3, l3 in vecs[: cut[min(l1, rem2 - 1)]]:
                tx = sx + x3
                ty = sy + y3
                n4 = tx * tx + ty * ty
                if n4 == 0:
                    continue
                l4cap = rem2 - l3
                if l4cap > l1:
                    l4cap = l1
                if n4 > l4cap * l4cap:
                    continue
                l4 = isqrt(n4)
                if l4 * l4 != n4:
                    continue
                if tx == x1 and ty == y1:
                    continue  # v3 would duplicate v1
                # equability: twice the shoelace area must equal twice the perimeter
                a = x1 * sy - sx * y1
                c = sx * ty - tx * sy
                if a + c != 2 * (l1 + l2 + l3 + l4):
                    continue
                b = x1 * ty - tx * y1
                d = a - b + c
                if a == 0 or b == 0 or c == 0 or d == 0:
                    continue  # three collinear vertices
                if (a * b < 0 and c * d < 0) or (a * d < 0 and b * c < 0):
                    continue  # opposite edges cross
                sig = canonical_signature(
                    (l1 * l1, l2 * l2, l3 * l3, l4 * l4),
                    (sx * sx + sy * sy, (tx - x1) ** 2 + (ty - y1) ** 2),
                )
                flat = (0, 0, x1, y1, sx, sy, tx, ty)
                entry = found.get(sig)
                if entry is None:
                    found[sig] = [flat, 1, [flat] if emit_all else []]
                else:
                    if flat < entry[0]:
                        entry[0] = flat
                    entry[1] += 1
                    if emit_all:
                        entry[2].append(flat)
    return found


def _quad_from_flat(flat: tuple[int, ...]) -> LatticeQuad:
    pts = tuple(Point(flat[i], flat[i + 1]) for i in range(0, 8, 2))
    return LatticeQuad(pts)


@dataclass(frozen=True)
class LeqClass:
    """One congruence class of lattice equable quadrilaterals."""

    signature: tuple[int, int, int, int, int, int]
    representative: LatticeQuad
    classification: QuadClassification
    diagonals: DiagonalReport
    embeddings_seen: int
    embeddings: tuple[LatticeQuad, ...] = ()

    @property
    def perimeter(self) -> int:
        return isqrt(self.signature[0]) + isqrt(self.signature[1]) \
            + isqrt(self.signature[2]) + isqrt(self.signature[3])


@dataclass(frozen=True, eq=False)
class LeqCatalog:
    """Deduplicated classes keyed by congruence signature."""

    p_max: int
    classes: dict[tuple, LeqClass] = field(default_factory=dict)

    def signatures(self) -> set[tuple]:
        return set(self.classes)

    def __contains__(self, sig: tuple) -> bool:
        return tuple(sig) in self.classes

    def __len__(self) -> int:
        return len(self.classes)


def enumerate_leqs(cfg: SearchConfig) -> LeqCatalog:
    """Complete catalog of LEQ classes with perimeter <= cfg.p_max."""
    chunk_args = [
        (cfg.p_max, cfg.workers, offset, cfg.emit_all_embeddings)
        for offset in range(cfg.workers)
    ]
    if cfg.workers == 1:
        partials = [_search_chunk(chunk_args[0])]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            partials = list(pool.map(_search_chunk, chunk_args))

    merged: dict[tuple, list] = {}
    for partial in partials:
        for sig, (flat, count, embeds) in partial.items():
            entry = merged.get(sig)
            if entry is None:
                merged[sig] = [flat, count, list(embeds)]
            else:
                entry[0] = min(entry[0], flat)
                entry[1] += count
                entry[2].extend(embeds)

    classes: dict[tuple, LeqClass] = {}
    for sig in sorted(merged):
        flat, count, embeds = merged[sig]
        rep = _quad_from_flat(flat)
        classes[sig] = LeqClass(
            signature=sig,
            representative=rep,
            classification=classify(rep),
            diagonals=interior_diagonals(rep),
            embeddings_seen=count,
            embeddings=tuple(_quad_from_flat(f) for f in sorted(embeds)),
        )
    return LeqCatalog(p_max=cfg.p_max, classes=classes)


@lru_cache(maxsize=8)
def get_catalog(p_max: int = 42) -> LeqCatalog:
    """Session-cached single-worker catalog."""
    return enumerate_leqs(SearchConfig(p_max=p_max))


@dataclass(frozen=True)
class AuditReport:
    """Catalog classes cross-checked against the classification results."""

    p_max: int
    kites_found: frozenset[tuple]
    kites_expected: frozenset[tuple]
    trapezoids_found: frozenset[tuple]
    cyclic_found: frozenset[tuple]
    diagonal_exceptions: tuple[tuple[tuple, int], ...]  # (signature, rational length)


def audit_theorems(catalog: LeqCatalog, p_max: int) -> AuditReport:
    """Compare the catalog against the closed-form kite families and list
    every class with a rational interior diagonal."""
    if p_max != catalog.p_max:
        raise ValueError("audit bound must match the catalog bound")

    kites_found = frozenset(
        sig for sig, cls in catalog.classes.items() if cls.classification.is_kite
    )
    kites_expected = frozenset(
        signature(km.quad()).canonical
        for tag in kites.FAMILIES
        for km in kites.members_within_perimeter(tag, p_max)
    )
    trapezoids_found = frozenset(
        sig for sig, cls in catalog.classes.items() if cls.classification.is_trapezoid
    )
    cyclic_found = frozenset(
        sig for sig, cls in catalog.classes.items() if cls.classification.is_cyclic
    )
    exceptions = tuple(
        (sig, diag.length)
        for sig, cls in sorted(catalog.classes.items())
        for diag in cls.diagonals.interior
        if diag.rational
    )
    return AuditReport(
        p_max=p_max,
        kites_found=kites_found,
        kites_expected=kites_expected,
        trapezoids_found=trapezoids_found,
        cyclic_found=cyclic_found,
        diagonal_exceptions=exceptions,
    )
