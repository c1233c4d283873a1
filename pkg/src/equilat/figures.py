"""Named lattice realizations of the classified equable quadrilaterals.

These fixed vertex lists are the canonical drawings: congruence classes found
elsewhere (search catalog, trapezoid construction, cyclic side orders) are
mapped back to these coordinates for display and embedding answers.
"""

from __future__ import annotations

from fractions import Fraction

from equilat.geometry import LatticeQuad, is_equable, quad, signature

__all__ = ["NAMED_QUADS", "KNOWN_EMBEDDINGS", "FIGURE_PANELS", "embedding_for"]


NAMED_QUADS: dict[str, LatticeQuad] = {
    "square-4": quad((0, 0), (4, 0), (4, 4), (0, 4)),
    "rectangle-3-6": quad((0, 0), (3, 0), (3, 6), (0, 6)),
    "rhombus-5": quad((0, 0), (5, 0), (8, 4), (3, 4)),
    "rhombus-5-alt": quad((0, 0), (4, -3), (4, 2), (0, 5)),
    "right-trapezoid-6-4-3-5": quad((0, 0), (6, 0), (6, 4), (3, 4)),
    "right-trapezoid-10-3-6-5": quad((0, 0), (10, 0), (10, 3), (4, 3)),
    "isosceles-trapezoid-8-5-2-5": quad((0, 0), (8, 0), (5, 4), (3, 4)),
    "isosceles-trapezoid-14-5-6-5": quad((0, 0), (14, 0), (10, 3), (4, 3)),
    "trapezoid-20-4-15-3": quad((0, 0), (16, 12), (12, 12), (0, 3)),
    "kite-3-15": quad((0, 0), (12, 9), (12, 12), (9, 12)),
    "dart-10-5": quad((0, 0), (10, 0), (6, 3), (6, 8)),
    "kite-k1-n7": quad((0, 0), (24, 7), (14, 7), (20, 15)),
    "kite-k1-n18": quad((0, 0), (60, 25), (36, 18), (56, 33)),
    "concave-60": quad((0, 0), (20, 15), (8, 10), (8, 15)),
}

assert all(is_equable(q) for q in NAMED_QUADS.values())

# congruence signature -> preferred drawing (first name wins on duplicates)
KNOWN_EMBEDDINGS: dict[tuple[int, ...], LatticeQuad] = {}
for _q in NAMED_QUADS.values():
    KNOWN_EMBEDDINGS.setdefault(signature(_q).canonical, _q)


def embedding_for(sig: tuple[int, ...]) -> LatticeQuad | None:
    return KNOWN_EMBEDDINGS.get(sig)


# Figure compositions for the SVG renderer.  Each panel: polygons drawn with
# vertex labels, optional dashed segments, optional marked (possibly
# non-lattice) points.
_F = Fraction

FIGURE_PANELS: dict[str, list[dict]] = {
    "rhombus-pair": [
        {"polygons": [NAMED_QUADS["rhombus-5"].v], "labels": ["O", "A", "B", "C"]},
        {"polygons": [NAMED_QUADS["rhombus-5-alt"].v], "labels": ["O", "A", "B", "C"]},
    ],
    "kite-3-15": [
        {
            "polygons": [NAMED_QUADS["kite-3-15"].v],
            "labels": ["O", "A", "B", "C"],
            "dashed": [((0, 0), (12, 12))],
        },
    ],
    "trapezoid-20-4-15-3": [
        {
            "polygons": [NAMED_QUADS["trapezoid-20-4-15-3"].v],
            "labels": ["O", "A", "B", "C"],
            "dashed": [((0, 3), (4, 3))],
            "marks": [((4, 3), "A'")],
        },
    ],
    "right-trapezoids": [
        {"polygons": [NAMED_QUADS["right-trapezoid-6-4-3-5"].v], "labels": ["O", "A", "B", "C"],
         "dashed": [((3, 0), (3, 4))], "marks": [((3, 0), "A'")]},
        {"polygons": [NAMED_QUADS["right-trapezoid-10-3-6-5"].v], "labels": ["O", "A", "B", "C"],
         "dashed": [((4, 0), (4, 3))], "marks": [((4, 0), "A'")]},
    ],
    "isosceles-trapezoids": [
        {"polygons": [NAMED_QUADS["isosceles-trapezoid-8-5-2-5"].v], "labels": ["O", "A", "B", "C"],
         "dashed": [((6, 0), (3, 4))], "marks": [((6, 0), "A'")]},
        {"polygons": [NAMED_QUADS["isosceles-trapezoid-14-5-6-5"].v], "labels": ["O", "A", "B", "C"],
         "dashed": [((8, 0), (4, 3))], "marks": [((8, 0), "A'")]},
    ],
    "k1-nested": [
        {
            "polygons": [
                NAMED_QUADS["kite-k1-n18"].v,
                NAMED_QUADS["kite-k1-n7"].v,
                NAMED_QUADS["dart-10-5"].v,
            ],
            "labels": None,
        },
    ],
    "parallelogram-failure": [
        {"polygons": [NAMED_QUADS["rectangle-3-6"].v], "labels": ["O", "A", "B", "C'"],
         "dashed": [((0, 0), (3, 6))]},
        {
            "polygons": [((0, 0), (3, 0), (3, 6), (_F(-9, 5), _F(12, 5)))],
            "labels": ["O", "A", "B", "C"],
            "dashed": [((0, 0), (3, 6))],
            "marks": [((_F(-9, 5), _F(12, 5)), "(-9/5, 12/5)")],
        },
    ],
}
