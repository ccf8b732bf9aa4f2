#!/usr/bin/env python3
"""Offline reference run for values frozen into the C++ tests.

Uses networkx, scipy and scikit-learn as independent implementations.
Rerun with `python3 tests/oracles/reference_values.py`; nothing in the
build depends on it.
"""
from fractions import Fraction
from math import comb

import networkx as nx
import numpy as np
from scipy.cluster.hierarchy import fcluster, linkage
from sklearn.metrics import normalized_mutual_info_score


def figure2():
    g = nx.Graph()
    labels = "ABCDEFGHIJKL"
    for block in ("ABCD", "EFGH", "IJKL"):
        for i, u in enumerate(block):
            for v in block[i + 1:]:
                g.add_edge(u, v)
    g.add_edges_from([("D", "E"), ("H", "I"), ("L", "A")])
    return g, labels


def figure3():
    g = nx.Graph()
    labels = "ABCDEFGHIJKLMNO"
    blocks = ("ABCDE", "FGHIJK", "LMNO")
    missing = {("A", "E"), ("F", "K"), ("G", "J")}
    for block in blocks:
        for i, u in enumerate(block):
            for v in block[i + 1:]:
                if (u, v) not in missing:
                    g.add_edge(u, v)
    g.add_edges_from([("E", "F"), ("C", "H"), ("K", "L"), ("O", "A")])
    return g, labels


def nedindex(g, clusters):
    total = Fraction(2 * g.number_of_edges())
    acc = Fraction(0)
    for c in clusters:
        h = g.subgraph(c)
        vc, ec = len(c), h.number_of_edges()
        dc = 2 * ec
        dg = sum(d for _, d in g.degree(c))
        acc += Fraction(vc + ec + dc, vc + comb(vc, 2) + dg) * dc
    return acc / total


def rows(g, order):
    return nx.to_numpy_array(g, nodelist=list(order), weight=None)


def maxclust_cuts(g, order, method="single"):
    z = linkage(rows(g, order), method=method, metric="euclidean")
    out = {}
    for k in range(1, len(order) + 1):
        lab = fcluster(z, k, criterion="maxclust")
        out[k] = canonical(lab)
    return out


def canonical(lab):
    seen = {}
    return [seen.setdefault(x, len(seen)) for x in lab]


def main():
    g, labels = figure2()
    good = ["ABCD", "EFGH", "IJKL"]
    bad = ["ABCD", "EFJL", "GHIK"]
    print("figure2 edges", g.number_of_edges())
    print("figure2 nedindex good", nedindex(g, [list(c) for c in good]))
    print("figure2 nedindex bad", nedindex(g, [list(c) for c in bad]),
          float(nedindex(g, [list(c) for c in bad])))
    print("figure2 modularity", nx.community.modularity(g, [set(c) for c in good], weight=None))
    for k, part in maxclust_cuts(g, labels).items():
        print("figure2 single maxclust", k, part)

    g3, labels3 = figure3()
    true3 = ["ABCDE", "FGHIJK", "LMNO"]
    print("figure3 edges", g3.number_of_edges())
    print("figure3 nedindex true", nedindex(g3, [list(c) for c in true3]),
          float(nedindex(g3, [list(c) for c in true3])))
    for k, part in maxclust_cuts(g3, labels3).items():
        print("figure3 single maxclust", k, part)

    w = nx.wheel_graph(9)
    print("wheel9 k1", nedindex(w, [list(w.nodes)]))

    kc = nx.karate_club_graph()
    order = list(range(34))
    factions = [0 if kc.nodes[v]["club"] == "Mr. Hi" else 1 for v in order]
    groups = [[v for v in order if factions[v] == c] for c in (0, 1)]
    print("karate faction modularity", repr(nx.community.modularity(kc, groups, weight=None)))
    print("karate faction nedindex", float(nedindex(kc, groups)))
    cuts = maxclust_cuts(kc, order)
    print("karate single maxclust k2", cuts[2])
    print("karate nmi(k2 cut, factions)",
          repr(normalized_mutual_info_score(factions, cuts[2])))
    for k in (2, 3, 5, 10):
        print("karate single maxclust clusters", k, max(cuts[k]) + 1)
    p = [0, 0, 1, 1]
    q = [0, 1, 0, 1]
    print("nmi crossed", normalized_mutual_info_score(p, q))
    p = [0, 0, 0, 1, 1, 2, 2, 2, 2]
    q = [0, 1, 1, 1, 2, 2, 2, 0, 0]
    print("nmi mixed", repr(normalized_mutual_info_score(p, q)))


if __name__ == "__main__":
    main()


def karate_table():
    kc = nx.karate_club_graph()
    cuts = maxclust_cuts(kc, list(range(34)))
    print("karate single cluster counts", [max(cuts[k]) + 1 for k in range(1, 35)])
    for k in (3, 6):
        print("karate single maxclust", k, cuts[k])
    for method in ("complete", "average"):
        c = maxclust_cuts(kc, list(range(34)), method)
        print("karate", method, "cluster counts", [max(c[k]) + 1 for k in range(1, 35)])


if __name__ == "__main__":
    import warnings
    warnings.simplefilter("ignore")
    karate_table()
