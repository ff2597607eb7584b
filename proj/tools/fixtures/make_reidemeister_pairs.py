#!/usr/bin/env python3
"""Regenerate tests/data/r*_*.json: pairs of diagrams of isotopic spatial
curves whose projections differ by a single Reidemeister move."""
import json
import math
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
from spatial_to_diagram import build  # noqa: E402

OUT = os.path.join(os.path.dirname(__file__), "..", "..", "tests", "data")


def polygon(labels, corners, via=None):
    """Closed polygonal curve; vertices at `corners`, optional extra points per side."""
    via = via or {}
    verts = dict(zip(labels, corners))
    edges = []
    for k, a in enumerate(labels):
        b = labels[(k + 1) % len(labels)]
        edges.append({"ends": [a, b], "via": via.get(k, [])})
    return verts, edges


def write(name, *parts):
    verts, edges = {}, []
    for v, e in parts:
        verts.update(v)
        edges += e
    with open(os.path.join(OUT, name), "w") as f:
        json.dump(build({"vertices": verts, "edges": edges}), f, indent=2, sort_keys=True)
        f.write("\n")


def curl(p, q, height):
    """Points for a small curl on segment p->q crossing itself once."""
    ux, uy = q[0] - p[0], q[1] - p[1]
    vx, vy = -uy, ux
    base = lambda a, b, dz: [p[0] + a * ux + b * vx, p[1] + a * uy + b * vy, p[2] + a * (q[2] - p[2]) + dz]
    return [base(0.75, 0, 0), base(0.75, 0.25, height), base(0.5, 0.25, height),
            base(0.5, -0.15, height), base(0.9, -0.15, 0)]


def trefoil(t):
    return [math.sin(t) + 2 * math.sin(2 * t), math.cos(t) - 2 * math.cos(2 * t), math.sin(3 * t)]


def sampled_trefoil(curl_height=None):
    labels = ["a", "b", "c"]
    params = [0.3 + 2 * math.pi * k / 3 for k in range(3)]
    verts = {labels[k]: trefoil(params[k]) for k in range(3)}
    edges = []
    for k in range(3):
        t0, t1 = params[k], params[(k + 1) % 3] + (2 * math.pi if k == 2 else 0)
        pts = [trefoil(t0 + (t1 - t0) * s / 48) for s in range(49)]
        via = pts[1:-1]
        if k == 0 and curl_height is not None:
            i = 20
            via = pts[1:i] + curl(pts[i], pts[i + 1], curl_height) + pts[i + 1:-1]
        edges.append({"ends": [labels[k], labels[(k + 1) % 3]], "via": via})
    return verts, edges


def main():
    square = ["a", "b", "c", "d"]
    corners = [[0, 0, 0], [4, 0, 0], [4, 4, 0], [0, 4, 0]]

    # R1: plain square vs square with one curl; trefoil vs trefoil with a curl.
    write("r1_square_before.json", polygon(square, corners))
    write("r1_square_after.json", polygon(square, corners, {0: [[1, 0, 0], [3, 0, 0], [3, 1, 1], [2, 1, 1],
                                                                [2, -1, 1], [3.5, -1, 0]]}))
    write("r1_trefoil_before.json", sampled_trefoil())
    write("r1_trefoil_after.json", sampled_trefoil(curl_height=-0.05))

    # R2: finger of the bottom side pushed over the top side.
    write("r2_square_before.json", polygon(square, corners))
    write("r2_square_after.json", polygon(square, corners, {0: [[1.5, 0, 1], [1.5, 5, 1], [2.5, 5, 1],
                                                                [2.5, 0, 1]]}))
    # R2 on a Hopf link: finger of the second square over a side of the first.
    hopf_a = polygon(["a", "b", "c", "d"], corners)
    b_labels = ["e", "f", "g", "h"]
    b_corners = [[2, 2, -1], [6, 2, -1], [6, 6, 1], [2, 6, 2]]
    write("r2_hopf_before.json", hopf_a, polygon(b_labels, b_corners))
    write("r2_hopf_after.json", hopf_a,
          polygon(b_labels, b_corners, {1: [[6, 2.8, 0], [3, 2.8, 2], [3, 3.2, 2], [6, 3.2, 0]]}))

    # R3: strand S3 (line x + y = c) slides across the self-crossing of a
    # curl-shaped unknot; it stays above (or below) both strands.
    def r3(c, z3):
        L = 3
        comp_a = polygon(["a", "b", "c", "d"],
                         [[-L, 0, 1], [L, 0, 1], [L, L, 0], [-L, -L, 0]],
                         {1: [[L + 1, 0, 1], [L + 1, L, 0]], 3: [[-L - 1, -L, 0], [-L - 1, 0, 1]]})
        R = 12
        comp_b = polygon(["e", "f", "g"],
                         [[c - 6, 6, z3], [c + 6, -6, z3], [R, R, z3]],
                         {1: [[R, -R, z3]], 2: [[-R, R, z3]]})
        return comp_a, comp_b

    write("r3_over_before.json", *r3(1, 2))
    write("r3_over_after.json", *r3(-1, 2))
    write("r3_under_before.json", *r3(1, -1))
    write("r3_under_after.json", *r3(-1, -1))


if __name__ == "__main__":
    main()
