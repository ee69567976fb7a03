"""Command-line front end.

Subcommands: generate (graph6 files per connector stratum), count (CSV
count table), fit (quasipolynomial JSON), eval (one exact value), verify
(pipeline against the brute-force oracle).  The RANK3_OUT environment
variable names the default output directory; --out overrides it.

Exit codes: 0 success, 2 bad input, 3 table too short for a fit,
4 fit rejected by the table, 5 verification mismatch.
"""

import argparse
import json
import os
import sys

from . import bigraph, genconn, pipeline, quasifit

EXIT_INPUT = 2
EXIT_ARITY = 3
EXIT_REJECTED = 4
EXIT_MISMATCH = 5

# pipeline runs above this coatom count would need infeasibly many graphs;
# verify reaches them through the coatom/atom symmetry instead
_DIRECT_LIMIT = 7


def _out_dir(args) -> str:
    return args.out if args.out else os.environ.get("RANK3_OUT", ".")


def cmd_generate(args) -> int:
    directory = _out_dir(args)
    counts = genconn.write_graph_files(directory, args.coatoms)
    for r, n in enumerate(counts):
        print("%s %d" % (genconn.graph_file_name(args.coatoms, r), n))
    print("total %d" % sum(counts))
    return 0


def cmd_count(args) -> int:
    c = args.coatoms
    graphs = pipeline.iter_graph_dir(args.graphs, c) if args.graphs else None
    table, stats = pipeline.count_lattices_stats(c, args.max_atoms, graphs, jobs=args.jobs)
    out = args.out or os.path.join(os.environ.get("RANK3_OUT", "."), "counts_c%d.csv" % c)
    pipeline.write_csv(table, out)
    print("wrote %s" % out)
    print("graphs=%d cycle_indices=%d trivial=%d"
          % (stats.graphs_processed, stats.distinct_cycle_indices,
             stats.trivial_action_graphs))
    return 0


def cmd_fit(args) -> int:
    c = args.coatoms
    table = pipeline.read_csv(args.values, c)
    fit = quasifit.fit_for_coatoms(table, c)
    out = args.out or os.path.join(os.environ.get("RANK3_OUT", "."), "fit_c%d.json" % c)
    with open(out, "w") as fh:
        json.dump(quasifit.quasipolynomial_to_json(fit, c), fh, indent=2)
        fh.write("\n")
    print("wrote %s" % out)
    print("period=%d degree=%d n0_guaranteed=%d n0_observed=%d"
          % (fit.period, fit.degree, fit.threshold, fit.observed_threshold))
    return 0


def cmd_eval(args) -> int:
    with open(args.quasipoly) as fh:
        _c, fit = quasifit.quasipolynomial_from_json(fh.read())
    print(quasifit.eval_quasipolynomial(fit, args.atoms))
    return 0


def cmd_verify(args) -> int:
    n = args.max_total
    if not 2 <= n <= 14:
        raise ValueError("--max-total must be between 2 and 14")
    tables = {}
    for c in range(1, min(n - 1, _DIRECT_LIMIT) + 1):
        tables[c] = pipeline.count_lattices(c, n - c)
    failures = 0
    for c in range(1, n):
        for a in range(1, n - c + 1):
            expected = (tables[c].values[a] if c <= _DIRECT_LIMIT
                        else tables[a].values[c])
            dual = (tables[a].values[c] if a <= _DIRECT_LIMIT
                    else tables[c].values[a])
            got = genconn.brute_force_count(c, a)
            ok = got == expected == dual
            print("c=%-2d a=%-2d pipeline=%-12d oracle=%-12d %s"
                  % (c, a, expected, got, "ok" if ok else "MISMATCH"))
            if not ok:
                failures += 1
    print("checked %d pairs, %d mismatches" % (sum(range(1, n)), failures))
    return EXIT_MISMATCH if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rank3",
        description="Exact counts of rank-3 lattices by coatom and atom count.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write connection-graph graph6 files")
    p.add_argument("--coatoms", type=int, required=True)
    p.add_argument("--out", help="output directory (default $RANK3_OUT or .)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("count", help="compute a count table and write it as CSV")
    p.add_argument("--coatoms", type=int, required=True)
    p.add_argument("--max-atoms", type=int, required=True)
    p.add_argument("--graphs", help="directory of pre-generated graph6 files")
    p.add_argument("--out", help="output CSV path")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("fit", help="fit the closed quasipolynomial form of a table")
    p.add_argument("--coatoms", type=int, required=True)
    p.add_argument("--values", required=True, help="CSV table from the count command")
    p.add_argument("--out", help="output JSON path")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("eval", help="evaluate a fitted form at one atom count")
    p.add_argument("--quasipoly", required=True, help="JSON file from the fit command")
    p.add_argument("--atoms", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="cross-check the pipeline against brute force")
    p.add_argument("--max-total", type=int, default=10,
                   help="check all coatom/atom pairs with sum up to this (max 14)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except quasifit.FitArityError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ARITY
    except quasifit.FitRejectedError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_REJECTED
    except (bigraph.Graph6Error, bigraph.UnsupportedSizeError,
            pipeline.GraphInputError, OSError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
