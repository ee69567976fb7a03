"""Generating connection graphs up to isomorphism.

A rank-3 lattice is captured by which atoms (connectors) are shared
between which coatoms.  A connection graph records exactly that: each
connector is a set of at least two coatoms, and two connectors may share
at most one coatom.  This script builds the complete isomorph-free
censuses for small coatom counts and shows how the graphs are stored.
"""

import rank3


def main():
    print("=== census by coatom count ===")
    for c in range(1, 7):
        graphs = list(rank3.generate_connection_graphs(c))
        print("c = %d: %5d graphs" % (c, len(graphs)))

    print()
    print("=== the five graphs on three coatoms ===")
    for g in rank3.generate_connection_graphs(3):
        r, s = rank3.count_r_s(g)
        line = rank3.graph6_encode(g).decode().strip()
        print("connectors %-24r r=%d uncovered=%d graph6=%s"
              % (g.neighborhoods(), r, s, line))

    print()
    print("=== canonical forms ignore labeling ===")
    a = rank3.BicoloredGraph(4, [{0, 1}, {1, 2}, {2, 3}])
    b = rank3.BicoloredGraph(4, [{3, 2}, {2, 1}, {1, 0}])  # same path, relabeled
    print("form(a) == form(b):", rank3.canonical_form(a) == rank3.canonical_form(b))

    print()
    print("=== a stratified file set ===")
    import tempfile
    with tempfile.TemporaryDirectory() as tmp:
        counts = rank3.write_graph_files(tmp, 4)
        for r, n in enumerate(counts):
            print("%s: %d graphs" % (rank3.graph_file_name(4, r), n))
        back = list(rank3.iter_graph_dir(tmp, 4))
        print("re-read %d graphs, all valid:" % len(back),
              all(rank3.validate_connection_graph(g) is None for g in back))


if __name__ == "__main__":
    main()
