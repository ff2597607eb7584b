#!/usr/bin/env python3
"""Regenerate the coordinate-derived diagram fixtures under data/.

g7_figure2.json is not produced here; it is a combinatorial transcription
(see README).
"""
import json
import math
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
from spatial_to_diagram import build  # noqa: E402

DATA = os.path.join(os.path.dirname(__file__), "..", "..", "data")


def closed_curve(fn, labels, params, samples=48):
    """Cycle graph on `labels`, vertex k at fn(params[k]), edges sampled along fn."""
    n = len(labels)
    verts = {labels[k]: fn(params[k]) for k in range(n)}
    edges = []
    for k in range(n):
        t0 = params[k]
        t1 = params[(k + 1) % n] + (2 * math.pi if k == n - 1 else 0)
        via = [fn(t0 + (t1 - t0) * s / samples) for s in range(1, samples)]
        edges.append({"ends": [labels[k], labels[(k + 1) % n]], "via": via})
    return verts, edges


def trefoil(t):
    return [math.sin(t) + 2 * math.sin(2 * t), math.cos(t) - 2 * math.cos(2 * t), math.sin(3 * t)]


def figure_eight(t):
    r = 2 + math.cos(2 * t)
    return [r * math.cos(3 * t), r * math.sin(3 * t), math.sin(4 * t)]


def write(name, verts, edges):
    layout = {"vertices": verts, "edges": edges}
    with open(os.path.join(DATA, name), "w") as f:
        json.dump(build(layout), f, indent=2, sort_keys=True)
        f.write("\n")


def main():
    thirds = [0.3 + 2 * math.pi * k / 3 for k in range(3)]
    write("trefoil.json", *closed_curve(trefoil, ["a", "b", "c"], thirds))

    quarters = [0.1 + 2 * math.pi * k / 4 for k in range(4)]
    write("figure8.json", *closed_curve(figure_eight, ["a", "b", "c", "d"], quarters))

    # Two triangles: unit circle in z = 0 and a tilted circle through its disk.
    ring_a = lambda t: [math.cos(t), math.sin(t), 0.0]
    ring_b = lambda t: [1 + math.cos(t), 0.2 * math.sin(t), math.sin(t)]
    va, ea = closed_curve(ring_a, ["a", "b", "c"], [0.5, 2.5, 4.5], samples=16)
    vb, eb = closed_curve(ring_b, ["d", "e", "f"], [1.0, 3.0, 5.0], samples=16)
    write("hopf.json", {**va, **vb}, ea + eb)

    # Same triangles pulled apart: no crossings at all.
    ring_c = lambda t: [5 + math.cos(t), math.sin(t), 0.0]
    vc, ec = closed_curve(ring_c, ["d", "e", "f"], [1.0, 3.0, 5.0], samples=16)
    write("split_triangles.json", {**va, **vc}, ea + ec)

    # K7 with straight edges; this point set has the minimum 9 crossings.
    pts = {"a": (-17, 19), "b": (-7, 11), "c": (14, 7), "d": (0, 9), "e": (17, 9), "f": (3, -1), "g": (-5, -9)}
    heights = {"a": 0, "b": 3, "c": 1, "d": 5, "e": 2, "f": 6, "g": 4}
    verts = {v: [x, y, heights[v]] for v, (x, y) in pts.items()}
    labels = sorted(verts)
    edges = [{"ends": [u, w], "via": []} for i, u in enumerate(labels) for w in labels[i + 1:]]
    write("k7_control.json", verts, edges)


if __name__ == "__main__":
    main()
