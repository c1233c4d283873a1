#!/usr/bin/env python3
"""Long-run search at p_max 60: finds the concave class with an external
diagonal of length 12 and prints the full catalog with diagonal data."""

import argparse
import time

from equilat import search
from equilat.figures import NAMED_QUADS
from equilat.geometry import signature


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-max", type=int, default=60, dest="p_max")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    start = time.monotonic()
    catalog = search.enumerate_leqs(search.SearchConfig(p_max=args.p_max, workers=args.workers))
    elapsed = time.monotonic() - start
    print(f"{len(catalog)} classes with perimeter <= {args.p_max} ({elapsed:.2f}s, {args.workers} worker(s))")

    for sig, cls in catalog.classes.items():
        diag = ", ".join(
            f"{'int' if d in cls.diagonals.interior else 'ext'} {d.sq}"
            + (f" (={d.length})" if d.rational else "")
            for d in (*cls.diagonals.interior, *cls.diagonals.exterior)
        )
        print(f"  P={cls.perimeter:>3} {sig} rep={[(p.x, p.y) for p in cls.representative.v]} diag: {diag}")

    concave = signature(NAMED_QUADS["concave-60"]).canonical
    print(f"concave example with external diagonal 12 present: {concave in catalog}")


if __name__ == "__main__":
    main()
