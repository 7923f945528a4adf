"""Harmonic morphisms to trees and the tree decompositions they induce.

A finite morphism folds a graph onto a tree, preserving incidence, with a
positive index on every edge. Harmonicity makes the per-vertex index sums
agree in every direction; the common degree k bounds the width of a tree
decomposition read off the fibers. Contracting a refinement (subdivided
edges, added leaves) transfers such a decomposition back to the original
graph without increasing the width.

Run with: python3 demos/04_harmonic_morphisms.py
"""

from chiptree import (
    harmonic_certificate,
    morphism_to_treedec,
    stable_treedec,
    validate_treedec,
)
from chiptree.fixtures import banana_graph, c4_to_p3_morphism
from chiptree.treedec import RefinementMap


def main():
    g, t, f = c4_to_p3_morphism()
    cert, report = harmonic_certificate(g, t, f)
    print(f"4-cycle folded onto a path: harmonic: {report.ok}, "
          f"degree {cert.degree}, m = {cert.m}")

    td = morphism_to_treedec(g, t, f)
    print("bags:", sorted(
        "".join(g.vertex_name(v) for v in sorted(bag)) for bag in td.bags))
    print("width:", validate_treedec(g, td).width)

    # the 4-cycle is also a refinement of the 2-vertex double edge (both
    # edges subdivided once); contracting the subdivision vertices gives a
    # decomposition of the double edge of width at most deg(f)
    banana = banana_graph(2)
    rmap = RefinementMap(
        original={0: 0, 2: 1},
        subdivision={1: (0, 1, 0, 0), 3: (0, 1, 1, 0)},
        added_leaves={},
    )
    out = stable_treedec(banana, g, rmap, t, f)
    report = validate_treedec(banana, out)
    print(f"\ncontracted to the double edge: width {report.width}, "
          f"valid: {report.ok}")


if __name__ == "__main__":
    main()
