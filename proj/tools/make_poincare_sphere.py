#!/usr/bin/env python3
"""Writes a small simplicial triangulation of the Poincare homology 3-sphere.

Starts from Regina's 5-tetrahedron triangulation, takes two barycentric
subdivisions (which makes it a genuine simplicial complex), then shrinks it
with edge contractions that satisfy the link condition. Edge contraction under
the link condition is a PL homeomorphism, so the output triangulates the same
manifold.

Usage: make_poincare_sphere.py OUT.cplx [--seed N]
"""
import argparse
import itertools
import random

import regina


def facets_of(tri):
    out = set()
    for tet in tri.tetrahedra():
        vs = frozenset(tet.vertex(i).index() for i in range(4))
        assert len(vs) == 4, "not simplicial"
        out.add(vs)
    assert len(out) == tri.size(), "duplicate facets"
    return out


def closure(facets):
    faces = set()
    for f in facets:
        for k in range(1, len(f) + 1):
            for sub in itertools.combinations(sorted(f), k):
                faces.add(frozenset(sub))
    return faces


def link(faces, s):
    return {f - s for f in faces if s <= f and f != s}


def try_contract(facets, u, v):
    faces = closure(facets)
    lu, lv, luv = link(faces, frozenset([u])), link(faces, frozenset([v])), link(faces, frozenset([u, v]))
    if (lu & lv) != luv:
        return None
    out = set()
    for f in facets:
        if u in f and v in f:
            continue
        if v in f:
            f = (f - {v}) | {u}
        out.add(frozenset(f))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    tri = regina.Example3.poincare()
    tri.barycentricSubdivision()
    tri.barycentricSubdivision()
    facets = facets_of(tri)

    progress = True
    while progress:
        progress = False
        edges = sorted({tuple(sorted(e)) for f in facets for e in itertools.combinations(f, 2)})
        rng.shuffle(edges)
        for u, v in edges:
            nxt = try_contract(facets, u, v)
            if nxt is not None:
                facets = nxt
                progress = True
                break

    verts = sorted({x for f in facets for x in f})
    name = {x: f"v{i}" for i, x in enumerate(verts)}
    with open(args.out, "w") as fh:
        fh.write("# Poincare homology 3-sphere\n")
        fh.write(f"# {len(verts)} vertices, {len(facets)} facets\n")
        for f in sorted(sorted(name[x] for x in f) for f in facets):
            fh.write(" ".join(f) + "\n")
    print(len(verts), "vertices,", len(facets), "facets")


if __name__ == "__main__":
    main()
