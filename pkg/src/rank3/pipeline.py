"""End-to-end lattice counting: graphs in, exact count tables out.

Each connection graph contributes the number of ways to distribute the
leftover atoms (those not forced by its connectors and bare coatoms) into
its coatoms up to the graph's own symmetry; summing over all graphs gives
R(c, a), the number of rank-3 lattices with c coatoms and a atoms.  Ball
distributions depend on the graph only through its cycle index, so they
are memoized per normalized cycle index.
"""

import csv
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bigraph import BicoloredGraph, automorphism_group_on_coatoms, graph6_decode
from .genconn import count_r_s, generate_connection_graphs, graph_file_name
from .polya import cycle_index, group_balls


class GraphInputError(ValueError):
    """Graph input inconsistent with the requested coatom count."""


@dataclass
class CountTable:
    """Exact counts R(c, a) for a = 0..a_max at a fixed coatom count."""
    coatom_count: int
    a_max: int
    values: list[int] = field(default_factory=list)

    def __post_init__(self):
        if len(self.values) != self.a_max + 1:
            raise ValueError("expected %d values, got %d" % (self.a_max + 1, len(self.values)))


@dataclass(frozen=True)
class MemoStats:
    graphs_processed: int
    distinct_cycle_indices: int
    trivial_action_graphs: int


def _count_chunk(coatom_count: int, a_max: int, graphs):
    """Accumulator, ball-distribution memo, and counters for one graph batch."""
    values = [0] * (a_max + 1)
    memo = {}
    trivial = 0
    processed = 0
    for g in graphs:
        if g.coatom_count != coatom_count:
            raise GraphInputError("graph has %d coatoms, expected %d"
                                  % (g.coatom_count, coatom_count))
        r, s = count_r_s(g)
        group = automorphism_group_on_coatoms(g)
        if group.order == 1:
            trivial += 1
        zindex = cycle_index(group)
        balls = memo.get(zindex)
        if balls is None:
            balls = group_balls(zindex, coatom_count, a_max)
            memo[zindex] = balls
        shift = r + s
        for a in range(shift, a_max + 1):
            values[a] += balls[a - shift]
        processed += 1
    return values, memo, trivial, processed


def _count_chunk_star(args):
    return _count_chunk(*args)


def _chunks(iterable, size):
    it = iter(iterable)
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def count_lattices_stats(coatom_count: int, max_atoms: int, graphs=None,
                         jobs: int = 1) -> tuple[CountTable, MemoStats]:
    """Count table plus memo statistics for one pipeline run.

    ``graphs`` is any iterable of connection graphs forming a complete
    isomorph-free list for ``coatom_count`` (default: generate them).
    With jobs > 1 the graphs are processed in worker processes holding
    private memos and accumulators, merged at the end; integer addition
    is exact and commutative, so the result is identical to a sequential
    run regardless of scheduling.
    """
    if coatom_count < 1:
        raise ValueError("coatom count must be positive")
    if max_atoms < 0:
        raise ValueError("maximum atom count must be nonnegative")
    if graphs is None:
        graphs = generate_connection_graphs(coatom_count)
    if jobs < 1:
        raise ValueError("jobs must be positive")
    if jobs == 1:
        values, memo, trivial, processed = _count_chunk(coatom_count, max_atoms, graphs)
        keys = set(memo)
    else:
        values = [0] * (max_atoms + 1)
        keys = set()
        trivial = 0
        processed = 0
        tasks = ((coatom_count, max_atoms, block) for block in _chunks(graphs, 512))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part_values, part_memo, part_trivial, part_processed in pool.map(
                    _count_chunk_star, tasks):
                for a, v in enumerate(part_values):
                    values[a] += v
                keys.update(part_memo)
                trivial += part_trivial
                processed += part_processed
    table = CountTable(coatom_count, max_atoms, values)
    return table, MemoStats(processed, len(keys), trivial)


def count_lattices(coatom_count: int, max_atoms: int, graphs=None,
                   jobs: int = 1) -> CountTable:
    table, _stats = count_lattices_stats(coatom_count, max_atoms, graphs, jobs)
    return table


# -- interchange ---------------------------------------------------------------


def write_csv(table: CountTable, path) -> None:
    """Write an ``a,R`` table, one row per atom count 0..a_max."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["a", "R"])
        for a, v in enumerate(table.values):
            writer.writerow([a, v])


def read_csv(path, coatom_count: int) -> CountTable:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["a", "R"]:
            raise ValueError("expected header 'a,R', got %r" % (header,))
        values = []
        for row in reader:
            if not row:
                continue
            a, v = int(row[0]), int(row[1])
            if a != len(values):
                raise ValueError("rows must run a = 0, 1, ... without gaps")
            values.append(v)
    return CountTable(coatom_count, len(values) - 1, values)


def iter_graph_dir(directory, coatom_count: int):
    """Yield graphs from conn_c{c}_r{r}.g6 files, ascending in r."""
    c = coatom_count
    found = False
    for r in range(c * (c - 1) // 2 + 1):
        path = os.path.join(directory, graph_file_name(c, r))
        if not os.path.exists(path):
            continue
        found = True
        with open(path, "rb") as fh:
            for line in fh:
                if line.strip():
                    yield graph6_decode(line, c, r)
    if not found:
        raise GraphInputError("no %s files for %d coatoms in %r"
                              % (graph_file_name(c, 0).replace("_r0", "_r*"), c, directory))
