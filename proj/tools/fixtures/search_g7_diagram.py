#!/usr/bin/env python3
"""Search for a 7-crossing diagram of G7 with a given crossing table.

Each crossing is a transverse double point of two named edges. For every
order of the crossings along edges that carry several of them, the drawing
is modelled as a graph in which every crossing is a wheel (hub plus four
ports in cyclic order), which forces a transverse crossing in any planar
embedding. Planar candidates are turned into diagram JSON with every one of
the 2^7 over/under assignments, then filtered with the knotcert CLI:
validity, both half-turn symmetries, and knotlessness.

usage: search_g7_diagram.py KNOTCERT_BINARY [OUTPUT_JSON]
"""
import itertools
import json
import os
import subprocess
import sys
import tempfile

import networkx as nx

EDGES = [tuple(sorted(e)) for e in
         "cd ce cf cg dg ef ch di ei fj gj dk fk el gl hi hj ij hk hl kl".split()]
CROSSINGS = {1: ("ef", "gl"), 2: ("ij", "dk"), 3: ("ce", "hi"), 4: ("dk", "gl"),
             5: ("cf", "hj"), 6: ("ij", "gl"), 7: ("ef", "dk")}
CROSSINGS = {k: (tuple(sorted(a)), tuple(sorted(b))) for k, (a, b) in CROSSINGS.items()}
SYMMETRIES = ["(c h)(e i)(f j)(d l)(g k)", "(e f)(i j)(d g)(k l)"]


def crossings_on(edge):
    return [k for k, pair in CROSSINGS.items() if edge in pair]


def all_orders():
    multi = [e for e in EDGES if len(crossings_on(e)) > 1]
    for perms in itertools.product(*[itertools.permutations(crossings_on(e)) for e in multi]):
        order = {e: tuple(crossings_on(e)) for e in EDGES}
        order.update(zip(multi, perms))
        yield order


def drawing(order):
    """Wheel-gadget graph, arc ids keyed by their two endpoints, and edge paths."""
    g = nx.Graph()
    arc_id, paths, neighbours = {}, {}, {}
    for e in EDGES:
        seq = [e[0], *order[e], e[1]]
        for i, k in enumerate(order[e]):
            neighbours.setdefault(k, {})[e] = (seq[i], seq[i + 2])

    def port(node, other, e):
        if isinstance(node, str):
            return node
        strand = 0 if e == CROSSINGS[node][0] else 1
        before, _ = neighbours[node][e]
        return f"X{node}_{strand if other == before else strand + 2}"

    for e in EDGES:
        seq = [e[0], *order[e], e[1]]
        path = []
        for i in range(len(seq) - 1):
            aid = f"{e[0]}{e[1]}.{i}"
            ends = (port(seq[i], seq[i + 1], e), port(seq[i + 1], seq[i], e))
            g.add_edge(*ends)
            arc_id[frozenset(ends)] = aid
            path.append(aid)
            if i < len(seq) - 2:
                path.append(str(seq[i + 1]))
        paths[e] = path
    for k in CROSSINGS:
        for s in range(4):
            g.add_edge(f"X{k}_{s}", f"X{k}_{(s + 1) % 4}")
            g.add_edge(f"X{k}", f"X{k}_{s}")
    return g, arc_id, paths


def diagram_skeleton(order):
    g, arc_id, paths = drawing(order)
    planar, emb = nx.check_planarity(g)
    if not planar:
        return None
    vertices = {}
    for v in sorted({x for e in EDGES for x in e}):
        ccw = list(reversed(list(emb.neighbors_cw_order(v))))
        vertices[v] = [arc_id[frozenset((v, w))] for w in ccw]
    crossings = {}
    for k in CROSSINGS:
        ccw = [int(p.split("_")[1]) for p in reversed(list(emb.neighbors_cw_order(f"X{k}")))]
        start = ccw.index(0)
        ends = []
        for s in ccw[start:] + ccw[:start]:
            p = f"X{k}_{s}"
            outside = next(w for w in g[p] if not w.startswith(f"X{k}"))
            ends.append(arc_id[frozenset((p, outside))])
        crossings[str(k)] = ends
    return vertices, crossings, paths


def run(cli, *args):
    return subprocess.run([cli, *args], capture_output=True).returncode


def main():
    if len(sys.argv) < 2:
        sys.exit(__doc__)
    cli = sys.argv[1]
    skeletons = [s for s in map(diagram_skeleton, all_orders()) if s is not None]
    print(f"{len(skeletons)} planar crossing orders")
    survivors = []
    with tempfile.TemporaryDirectory() as tmp:
        for index, (vertices, crossings, paths) in enumerate(skeletons):
            for bits in range(128):
                d = {"vertices": vertices,
                     "crossings": {k: {"ends": crossings[k], "over": (bits >> (int(k) - 1)) & 1}
                                   for k in sorted(crossings)},
                     "edges": [{"ends": list(e), "path": paths[e]} for e in EDGES]}
                path = os.path.join(tmp, f"cand_{index}_{bits:03d}.json")
                with open(path, "w") as f:
                    json.dump(d, f)
                if run(cli, "validate", path) != 0:
                    continue
                if any(run(cli, "symmetry", path, "--cycles", m, "--reflect", "--flip") != 0 for m in SYMMETRIES):
                    continue
                if run(cli, "certify", path) != 0:
                    continue
                survivors.append((index, bits, d))
                print(f"order {index}, over bits {bits:07b}: knotless and symmetric")
    if len(sys.argv) > 2 and survivors:
        with open(sys.argv[2], "w") as f:
            json.dump(survivors[0][2], f, indent=2, sort_keys=True)
            f.write("\n")


if __name__ == "__main__":
    main()
