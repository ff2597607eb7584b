#!/usr/bin/env python3
"""Project a polygonal spatial graph to the xy-plane and write a diagram file.

Input (JSON):
  {"vertices": {"a": [x, y, z], ...},
   "edges": [{"ends": ["a", "b"], "via": [[x, y, z], ...]}, ...]}

Each edge is the polyline a -> via... -> b. Over/under at each crossing
comes from the z coordinates. The projection must be generic: no crossing
at a polyline corner, no triple points, no tangencies.
"""
import argparse
import json
import math
import sys


def seg_intersection(p, q, r, s):
    """Return (t, u) with p + t(q-p) == r + u(s-r) in xy, or None."""
    dx1, dy1 = q[0] - p[0], q[1] - p[1]
    dx2, dy2 = s[0] - r[0], s[1] - r[1]
    den = dx1 * dy2 - dy1 * dx2
    if abs(den) < 1e-12:
        return None
    t = ((r[0] - p[0]) * dy2 - (r[1] - p[1]) * dx2) / den
    u = ((r[0] - p[0]) * dy1 - (r[1] - p[1]) * dx1) / den
    if 1e-9 < t < 1 - 1e-9 and 1e-9 < u < 1 - 1e-9:
        return t, u
    if -1e-9 <= t <= 1 + 1e-9 and -1e-9 <= u <= 1 + 1e-9:
        shared = any(math.dist(a[:2], b[:2]) < 1e-12 for a in (p, q) for b in (r, s))
        if not shared:
            sys.exit("non-generic projection: crossing at a polyline corner")
    return None


def angle(frm, to):
    return math.atan2(to[1] - frm[1], to[0] - frm[0])


def build(layout):
    verts = layout["vertices"]
    edges = []
    for e in layout["edges"]:
        a, b = e["ends"]
        pts = [verts[a]] + e.get("via", []) + [verts[b]]
        edges.append((a, b, pts))

    # all crossings: (edge, seg, t, z) pairs
    hits = []
    for i, (_, _, pi) in enumerate(edges):
        for j in range(i, len(edges)):
            pj = edges[j][2]
            for si in range(len(pi) - 1):
                for sj in range(len(pj) - 1):
                    if i == j and abs(si - sj) <= 1:
                        continue
                    if i == j and sj < si:
                        continue
                    r = seg_intersection(pi[si], pi[si + 1], pj[sj], pj[sj + 1])
                    if r is None:
                        continue
                    t, u = r
                    zi = pi[si][2] + t * (pi[si + 1][2] - pi[si][2])
                    zj = pj[sj][2] + u * (pj[sj + 1][2] - pj[sj][2])
                    if abs(zi - zj) < 1e-9:
                        sys.exit("strands meet in space")
                    hits.append(((i, si, t), (j, sj, u), zi > zj))

    hits.sort()

    # per edge: ordered list of (position, crossing index, which strand)
    along = {i: [] for i in range(len(edges))}
    for n, (p, q, first_over) in enumerate(hits):
        along[p[0]].append(((p[1], p[2]), n, 0))
        along[q[0]].append(((q[1], q[2]), n, 1))

    def point_at(edge, seg, t):
        pts = edges[edge][2]
        a, b = pts[seg], pts[seg + 1]
        return [a[k] + t * (b[k] - a[k]) for k in range(3)]

    rot_v = {v: [] for v in verts}       # v -> [(angle, arc)]
    rot_x = {n: [] for n in range(len(hits))}  # crossing -> [(angle, arc, strand)]
    out_edges = []
    for i, (a, b, pts) in enumerate(edges):
        stops = sorted(along[i])
        name = f"{a}{b}"
        path = []
        for k in range(len(stops) + 1):
            arc = f"{name}.{k}"
            # start end
            if k == 0:
                rot_v[a].append((angle(pts[0], pts[1]), arc))
            else:
                (seg, t), n, strand = stops[k - 1]
                here = point_at(i, seg, t)
                rot_x[n].append((angle(here, pts[seg + 1]), arc, strand))
            if k == len(stops):
                rot_v[b].append((angle(pts[-1], pts[-2]), arc))
            else:
                (seg, t), n, strand = stops[k]
                here = point_at(i, seg, t)
                rot_x[n].append((angle(here, pts[seg]), arc, strand))
            path.append(arc)
            if k < len(stops):
                path.append(str(stops[k][1] + 1))
        out_edges.append({"ends": [a, b], "path": path})

    vertices = {v: [arc for _, arc in sorted(lst)] for v, lst in rot_v.items()}
    crossings = {}
    for n, lst in rot_x.items():
        lst.sort()
        ends = [arc for _, arc, _ in lst]
        strand_at_slot0 = lst[0][2]
        first_over = hits[n][2]
        over_strand = 0 if first_over else 1
        crossings[str(n + 1)] = {"ends": ends, "over": 0 if strand_at_slot0 == over_strand else 1}
    return {"vertices": vertices, "crossings": crossings, "edges": out_edges}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("input")
    ap.add_argument("output")
    args = ap.parse_args()
    with open(args.input) as f:
        layout = json.load(f)
    with open(args.output, "w") as f:
        json.dump(build(layout), f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()
