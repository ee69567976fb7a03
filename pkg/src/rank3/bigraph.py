"""Bicolored coatom/connector graphs with exact isomorphism machinery.

A connection graph records how the atoms of a graded rank-3 lattice that
lie under two or more coatoms ("connectors") attach to the coatoms.
Coatoms are labelled 0..c-1 and every connector is identified with its
coatom neighbourhood, stored as a bitmask over the coatom labels.

The module provides the graph type itself, validity checking for the
connection-graph invariants, a colour-respecting canonical form, the
automorphism action restricted to the coatoms, and graph6 interchange
with other tools.
"""

import itertools

Permutation = tuple[int, ...]


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class SizeMismatchError(Graph6Error):
    """Vertex count of the encoding differs from the declared class sizes."""


class ClassViolationError(Graph6Error):
    """Encoded graph has an edge inside a single colour class."""


class UnsupportedSizeError(ValueError):
    """Graph too large for the short graph6 form (more than 62 vertices)."""


class PermGroup:
    """Permutation group on {0..degree-1} stored as an explicit element list.

    Elements are permutations in array form: ``p[i]`` is the image of ``i``.
    The groups produced here are tiny (subgroups of S_c for c <= 9), so an
    explicit list is both the simplest and the most convenient shape for
    cycle-index computations, which iterate every element anyway.
    """

    __slots__ = ("degree", "elements")

    def __init__(self, degree: int, elements):
        self.degree = degree
        self.elements = tuple(tuple(p) for p in elements)
        for p in self.elements:
            if sorted(p) != list(range(degree)):
                raise ValueError("not a permutation of 0..%d: %r" % (degree - 1, p))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and set(self.elements) == set(other.elements)

    def __hash__(self):
        return hash((self.degree, frozenset(self.elements)))

    def __repr__(self):
        return "PermGroup(degree=%d, order=%d)" % (self.degree, len(self.elements))


class BicoloredGraph:
    """Bipartite graph on coatoms {0..c-1} and connectors {0..r-1}.

    Connectors carry no identity beyond their neighbourhood; the stored
    order only matters for graph6 round-trips.  Neighbourhoods are kept
    as bitmasks (bit i = coatom i).  Instances are treated as immutable.
    """

    __slots__ = ("coatom_count", "connector_masks")

    def __init__(self, coatom_count: int, neighborhoods=()):
        if coatom_count < 0:
            raise ValueError("coatom count must be nonnegative")
        masks = []
        for nb in neighborhoods:
            if isinstance(nb, int):
                mask = nb
                if mask < 0 or mask >> coatom_count:
                    raise ValueError("neighborhood mask %r out of range for %d coatoms"
                                     % (nb, coatom_count))
            else:
                mask = 0
                for i in nb:
                    if not 0 <= i < coatom_count:
                        raise ValueError("coatom index %r out of range for %d coatoms"
                                         % (i, coatom_count))
                    mask |= 1 << i
            masks.append(mask)
        self.coatom_count = coatom_count
        self.connector_masks = tuple(masks)

    @classmethod
    def from_masks(cls, coatom_count: int, masks) -> "BicoloredGraph":
        return cls(coatom_count, tuple(masks))

    @property
    def connector_count(self) -> int:
        return len(self.connector_masks)

    def neighborhood(self, j: int) -> frozenset:
        return frozenset(_bits(self.connector_masks[j]))

    def neighborhoods(self) -> tuple:
        return tuple(self.neighborhood(j) for j in range(len(self.connector_masks)))

    def __eq__(self, other):
        if not isinstance(other, BicoloredGraph):
            return NotImplemented
        return (self.coatom_count == other.coatom_count
                and self.connector_masks == other.connector_masks)

    def __hash__(self):
        return hash((self.coatom_count, self.connector_masks))

    def __reduce__(self):
        return (BicoloredGraph.from_masks, (self.coatom_count, self.connector_masks))

    def __repr__(self):
        nbs = [tuple(sorted(_bits(m))) for m in self.connector_masks]
        return "BicoloredGraph(%d, %r)" % (self.coatom_count, nbs)


def _bits(mask: int):
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def validate_connection_graph(graph: BicoloredGraph) -> None:
    """Raise ValueError unless the graph satisfies all connection-graph
    invariants.

    Every connector must cover at least two coatoms, two connectors may
    share at most one coatom (this also forces distinct neighbourhoods),
    and consequently at most c(c-1)/2 connectors fit on c coatoms.
    """
    c = graph.coatom_count
    masks = graph.connector_masks
    if len(masks) > c * (c - 1) // 2:
        raise ValueError("%d connectors exceed the maximum %d for %d coatoms"
                         % (len(masks), c * (c - 1) // 2, c))
    for j, m in enumerate(masks):
        if m.bit_count() < 2:
            raise ValueError("connector %d covers fewer than two coatoms" % j)
        for k in range(j):
            if (m & masks[k]).bit_count() > 1:
                raise ValueError(
                    "connectors %d and %d share more than one coatom" % (k, j))


# -- isomorphism machinery ---------------------------------------------------
#
# Coatoms are first split into classes that no colour-preserving
# isomorphism can mix, by iterated neighbourhood refinement over the
# bipartite incidence.  Canonical labellings and automorphisms are then
# searched only within those classes, which keeps the search spaces tiny
# for all but the most symmetric graphs.


def _partition_coatoms(c: int, masks) -> list[list[int]]:
    """Partition coatoms into refinement classes, in label-independent order.

    The returned blocks are ordered by class signature, so isomorphic
    graphs produce blocks that correspond under any isomorphism.
    """
    coat = [0] * c
    conn = [m.bit_count() for m in masks]
    n_classes = (1, len(set(conn)))
    while True:
        coat_sig = []
        for i in range(c):
            bit = 1 << i
            incident = sorted(conn[j] for j, m in enumerate(masks) if m & bit)
            coat_sig.append((coat[i], tuple(incident)))
        rank = {s: k for k, s in enumerate(sorted(set(coat_sig)))}
        coat = [rank[s] for s in coat_sig]
        conn_sig = []
        for j, m in enumerate(masks):
            conn_sig.append((conn[j], tuple(sorted(coat[i] for i in _bits(m)))))
        rank = {s: k for k, s in enumerate(sorted(set(conn_sig)))}
        conn = [rank[s] for s in conn_sig]
        now = (len(set(coat)), len(set(conn)))
        if now == n_classes:
            break
        n_classes = now
    blocks: dict[int, list[int]] = {}
    for i, cls in enumerate(coat):
        blocks.setdefault(cls, []).append(i)
    return [blocks[k] for k in sorted(blocks)]


def _map_mask(mask: int, perm) -> int:
    out = 0
    for i in _bits(mask):
        out |= 1 << perm[i]
    return out


def _block_bijections(blocks):
    """All relabellings that send the k-th block onto the k-th position run.

    Yields permutations in array form (old label -> new label).  Their
    number is the product of the block-size factorials, typically 1.
    """
    starts = []
    p = 0
    for b in blocks:
        starts.append(p)
        p += len(b)
    c = p
    for choice in itertools.product(*(itertools.permutations(range(len(b))) for b in blocks)):
        perm = [0] * c
        for block, start, order in zip(blocks, starts, choice):
            for offset, member in zip(order, block):
                perm[member] = start + offset
        yield tuple(perm)


def _canonical_masks(c: int, masks) -> tuple[int, ...]:
    """Lexicographically least sorted mask tuple over the class bijections."""
    if not masks:
        return ()
    blocks = _partition_coatoms(c, masks)
    best = None
    for perm in _block_bijections(blocks):
        mapped = sorted(_map_mask(m, perm) for m in masks)
        if best is None or mapped < best:
            best = mapped
    return tuple(best)


def canonicalize(graph: BicoloredGraph) -> BicoloredGraph:
    """Isomorphic copy in canonical labelling, connectors sorted by mask."""
    return BicoloredGraph.from_masks(
        graph.coatom_count, _canonical_masks(graph.coatom_count, graph.connector_masks))


def canonical_form(graph: BicoloredGraph) -> bytes:
    """Byte-comparable key, equal for two graphs iff they are isomorphic.

    Isomorphism here preserves the colour classes but may relabel coatoms
    and connectors independently.  The key is one byte 63 + c followed by
    the graph6 line (without newline) of the canonically labelled graph;
    the explicit coatom count disambiguates colour splits that happen to
    share an underlying adjacency matrix.
    """
    canon = canonicalize(graph)
    return bytes([63 + graph.coatom_count]) + graph6_encode(canon).rstrip(b"\n")


def automorphism_group_on_coatoms(graph: BicoloredGraph) -> PermGroup:
    """Coatom permutations that extend to automorphisms of the graph.

    A coatom permutation extends iff it maps the multiset of connector
    neighbourhoods onto itself; the connector images are then induced by
    neighbourhood matching and carry no extra freedom worth recording.
    """
    c = graph.coatom_count
    masks = graph.connector_masks
    target = sorted(masks)
    blocks = _partition_coatoms(c, masks)
    elements = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [0] * c
        for block, image in zip(blocks, choice):
            for member, img in zip(block, image):
                perm[member] = img
        if sorted(_map_mask(m, perm) for m in masks) == target:
            elements.append(tuple(perm))
    return PermGroup(c, elements)


# -- graph6 ------------------------------------------------------------------
#
# Standard short-form graph6: one byte 63 + n for n <= 62 vertices, then
# the upper triangle of the adjacency matrix in column order (0,1), (0,2),
# (1,2), (0,3), ..., packed six bits per byte, each byte offset by 63,
# zero-padded, newline-terminated.  Coatoms occupy vertex indices 0..c-1
# and connectors c..c+r-1; the (c, r) split travels out of band, here via
# the file naming convention conn_c{c}_r{r}.g6.


def graph6_encode(graph: BicoloredGraph) -> bytes:
    c = graph.coatom_count
    masks = graph.connector_masks
    n = c + len(masks)
    if n > 62:
        raise UnsupportedSizeError("graph6 short form limited to 62 vertices, got %d" % n)
    bits = []
    for v in range(1, n):
        for u in range(v):
            if v >= c and u < c:
                bits.append((masks[v - c] >> u) & 1)
            else:
                bits.append(0)
    out = [63 + n]
    for k in range(0, len(bits), 6):
        group = bits[k:k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(63 + val)
    return bytes(out) + b"\n"


def graph6_decode(line: bytes, coatom_count: int, connector_count: int) -> BicoloredGraph:
    """Decode one graph6 line into a graph with the declared colour split.

    Raises SizeMismatchError when the vertex count disagrees with
    coatom_count + connector_count, ClassViolationError when the encoded
    graph has an edge within one colour class, and Graph6Error for any
    malformed encoding (bad characters, wrong length, nonzero padding).
    """
    if isinstance(line, str):
        line = line.encode("ascii")
    data = line.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty graph6 line")
    if data[0] == 126:
        raise Graph6Error("extended graph6 size forms are not supported")
    n = data[0] - 63
    if not 0 <= n <= 62:
        raise Graph6Error("bad graph6 size byte %r" % data[0:1])
    if n != coatom_count + connector_count:
        raise SizeMismatchError("encoding has %d vertices, expected %d + %d"
                                % (n, coatom_count, connector_count))
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 != nbytes:
        raise Graph6Error("expected %d payload bytes, got %d" % (nbytes, len(data) - 1))
    bits = []
    for byte in data[1:]:
        if not 63 <= byte <= 126:
            raise Graph6Error("byte %r outside graph6 range" % bytes([byte]))
        val = byte - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    c = coatom_count
    masks = [0] * connector_count
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                if v < c or u >= c:
                    raise ClassViolationError(
                        "edge (%d, %d) lies inside one colour class" % (u, v))
                masks[v - c] |= 1 << u
            k += 1
    return BicoloredGraph.from_masks(c, masks)
