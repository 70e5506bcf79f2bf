"""Weighted digraphs and their shortest-path polyhedra.

A weighted digraph on nodes ``1..k`` is the same data as a k-by-k tropical
matrix: the arc (i, j) is present exactly when the entry w_ij is finite,
and the polyhedron Q(W) consists of the points x with x_i - x_j <= w_ij
for every arc.  This module covers feasibility, Kleene stars, equality
partitions, faces, intersections, projections, recession cones and the
face lattices of zero-weight digraph cones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    CapabilityError,
    DomainError,
    InconsistentFaceError,
    InfeasibleError,
    ShapeError,
)
from .matrix import TropicalMatrix
from .semiring import INF, TVal, is_finite, tval


@dataclass(frozen=True)
class WeightedDigraph:
    """Digraph on nodes 1..k with finite rational arc weights.

    Loops and antiparallel arc pairs are allowed; an absent arc stands for
    an infinite matrix entry.
    """

    k: int
    arcs: Mapping[tuple[int, int], Fraction]

    @classmethod
    def make(cls, k: int, arcs: Mapping[tuple[int, int], object] | Iterable) -> "WeightedDigraph":
        if k < 1:
            raise ShapeError("node count must be at least 1")
        items = arcs.items() if isinstance(arcs, Mapping) else arcs
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), w in items:
            if not (1 <= i <= k and 1 <= j <= k):
                raise DomainError(f"arc ({i},{j}) out of range for {k} nodes")
            wv = tval(w)
            if wv is INF:
                continue
            clean[(i, j)] = wv
        return cls(k, clean)

    @classmethod
    def from_matrix(cls, m: TropicalMatrix) -> "WeightedDigraph":
        if not m.is_square:
            raise ShapeError("weighted digraph needs a square matrix")
        arcs = {
            (i, j): m.entry(i, j)
            for i in range(1, m.rows + 1)
            for j in range(1, m.cols + 1)
            if is_finite(m.entry(i, j))
        }
        return cls(m.rows, arcs)

    def to_matrix(self) -> TropicalMatrix:
        return TropicalMatrix.make(
            [
                [self.arcs.get((i, j), INF) for j in range(1, self.k + 1)]
                for i in range(1, self.k + 1)
            ]
        )

    def weight(self, i: int, j: int) -> TVal:
        return self.arcs.get((i, j), INF)

    def zero_weights(self) -> "WeightedDigraph":
        """Same arc set, all weights zero (the digraph cone data)."""
        return WeightedDigraph(self.k, {a: Fraction(0) for a in self.arcs})

    def __eq__(self, other):
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return self.k == other.k and dict(self.arcs) == dict(other.arcs)

    def __hash__(self):
        return hash((self.k, frozenset(self.arcs.items())))


@dataclass(frozen=True)
class NodePartition:
    """Partition of 1..k into disjoint nonempty blocks, canonically ordered."""

    k: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def make(cls, k: int, blocks: Iterable[Iterable[int]]) -> "NodePartition":
        normalized = sorted(tuple(sorted(b)) for b in blocks)
        seen = [i for b in normalized for i in b]
        if sorted(seen) != list(range(1, k + 1)):
            raise DomainError("blocks must partition 1..k")
        return cls(k, tuple(normalized))

    def block_of(self, i: int) -> tuple[int, ...]:
        for b in self.blocks:
            if i in b:
                return b
        raise DomainError(f"node {i} not in partition")

    def refines(self, other: "NodePartition") -> bool:
        """True if every block of self lies inside a block of other."""
        lookup = {}
        for idx, b in enumerate(other.blocks):
            for i in b:
                lookup[i] = idx
        return all(len({lookup[i] for i in b}) == 1 for b in self.blocks)

    def __len__(self):
        return len(self.blocks)


# ---------------------------------------------------------------------------
# component helpers


def weak_components(k: int, arcs: Iterable[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Weakly connected components, sorted by least element."""
    parent = list(range(k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in arcs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    comps: dict[int, list[int]] = {}
    for v in range(1, k + 1):
        comps.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(c)) for c in comps.values())


def strong_components(k: int, arcs: Iterable[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Strongly connected components (iterative Tarjan), sorted by least element."""
    succ: dict[int, list[int]] = {v: [] for v in range(1, k + 1)}
    for i, j in arcs:
        if i != j:
            succ[i].append(j)
    index = {}
    low = {}
    on_stack = set()
    stack: list[int] = []
    out: list[tuple[int, ...]] = []
    counter = itertools.count()
    for root in range(1, k + 1):
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = next(counter)
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = next(counter)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(tuple(sorted(comp)))
    return sorted(out)


def _induced_connected(nodes: frozenset[int], arcs: Iterable[tuple[int, int]]) -> bool:
    """Weak connectivity of the induced subgraph (singletons count as connected)."""
    nodes = frozenset(nodes)
    if not nodes:
        return False
    if len(nodes) == 1:
        return True
    adj: dict[int, set[int]] = {v: set() for v in nodes}
    for i, j in arcs:
        if i in nodes and j in nodes:
            adj[i].add(j)
            adj[j].add(i)
    start = next(iter(nodes))
    seen = {start}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return seen == nodes


def _contraction_acyclic(blocks: Sequence[tuple[int, ...]], arcs: Iterable[tuple[int, int]]) -> bool:
    """Whether contracting each block leaves no directed cycle (loops dropped)."""
    block_of = {}
    for idx, b in enumerate(blocks):
        for i in b:
            block_of[i] = idx
    succ: dict[int, set[int]] = {idx: set() for idx in range(len(blocks))}
    for i, j in arcs:
        bi, bj = block_of[i], block_of[j]
        if bi != bj:
            succ[bi].add(bj)
    # Kahn's algorithm
    indeg = {v: 0 for v in succ}
    for v, outs in succ.items():
        for w in outs:
            indeg[w] += 1
    queue = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(blocks)


# ---------------------------------------------------------------------------
# feasibility and shortest paths


def detect_negative_cycle(w: WeightedDigraph) -> list[int] | None:
    """A directed cycle of strictly negative weight, or None.

    Bellman-Ford from a virtual source connected to every node; the cycle
    is returned as a node sequence with the start repeated at the end.
    """
    k = w.k
    dist = {v: Fraction(0) for v in range(1, k + 1)}
    pred: dict[int, int | None] = {v: None for v in range(1, k + 1)}
    arcs = list(w.arcs.items())
    touched = None
    for _ in range(k):
        touched = None
        for (i, j), wt in arcs:
            if dist[i] + wt < dist[j]:
                dist[j] = dist[i] + wt
                pred[j] = i
                touched = j
        if touched is None:
            return None
    # A relaxation in round k certifies a negative cycle on the pred chain.
    x = touched
    for _ in range(k):
        x = pred[x]
    cycle = [x]
    v = pred[x]
    while v != x:
        cycle.append(v)
        v = pred[v]
    cycle.append(x)
    cycle.reverse()
    return cycle


def cycle_weight(w: WeightedDigraph, cycle: Sequence[int]) -> Fraction:
    """Total weight of a cycle given as a node sequence with repeated start."""
    total = Fraction(0)
    for a, b in zip(cycle, cycle[1:]):
        wt = w.weight(a, b)
        if wt is INF:
            raise DomainError(f"({a},{b}) is not an arc")
        total += wt
    return total


def kleene_star(w: WeightedDigraph) -> TropicalMatrix:
    """All-pairs shortest path matrix W*; requires no negative cycle.

    Computed by k rounds of Bellman-Ford relaxation per source; the
    tropical power formula serves as an independent oracle in the tests.
    """
    cyc = detect_negative_cycle(w)
    if cyc is not None:
        raise InfeasibleError(cyc)
    k = w.k
    arcs = list(w.arcs.items())
    rows = []
    for s in range(1, k + 1):
        dist: dict[int, TVal] = {v: INF for v in range(1, k + 1)}
        dist[s] = Fraction(0)
        for _ in range(k):
            changed = False
            for (i, j), wt in arcs:
                di = dist[i]
                if di is INF:
                    continue
                cand = di + wt
                if cand < dist[j]:
                    dist[j] = cand
                    changed = True
            if not changed:
                break
        rows.append([dist[v] for v in range(1, k + 1)])
    return TropicalMatrix.make(rows)


def equality_partition(w: WeightedDigraph) -> NodePartition:
    """Blocks of nodes whose coordinates are forced equal up to fixed offsets.

    Two nodes share a block iff they lie on a common zero-weight cycle,
    i.e. w*_ij = -w*_ji < inf.  The block count equals dim Q(W).
    """
    star = kleene_star(w)
    parent = list(range(w.k + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, w.k + 1):
        for j in range(i + 1, w.k + 1):
            a, b = star.entry(i, j), star.entry(j, i)
            if a is not INF and b is not INF and a + b == 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    comps: dict[int, list[int]] = {}
    for v in range(1, w.k + 1):
        comps.setdefault(find(v), []).append(v)
    return NodePartition.make(w.k, comps.values())


# ---------------------------------------------------------------------------
# faces, intersections, projections, membership


def face(w: WeightedDigraph, g: Iterable[tuple[int, int]]) -> WeightedDigraph:
    """The matrix W#G of the face F_G: w_ji is replaced by -w_ij for (i,j) in G."""
    gset = frozenset(g)
    for (i, j) in gset:
        if (i, j) not in w.arcs:
            raise DomainError(f"face arc ({i},{j}) is not an arc of the digraph")
    for (i, j) in gset:
        if (j, i) in gset and w.arcs[(i, j)] + w.arcs[(j, i)] != 0:
            raise InconsistentFaceError(
                f"arcs ({i},{j}) and ({j},{i}) both tight but weights do not cancel"
            )
    arcs = dict(w.arcs)
    for (i, j) in gset:
        arcs[(j, i)] = -w.arcs[(i, j)]
    return WeightedDigraph(w.k, arcs)


def intersect(u: WeightedDigraph, w: WeightedDigraph) -> WeightedDigraph:
    """Q(U) with Q(W) intersected: the entrywise minimum U + W (min)."""
    if u.k != w.k:
        raise ShapeError("intersection needs equal node counts")
    arcs = dict(u.arcs)
    for a, wt in w.arcs.items():
        if a not in arcs or wt < arcs[a]:
            arcs[a] = wt
    return WeightedDigraph(u.k, arcs)


def project(w: WeightedDigraph, deleted: Iterable[int]) -> WeightedDigraph:
    """Coordinate projection of Q(W): delete rows/columns of W* indexed by I."""
    dset = frozenset(deleted)
    if not dset <= set(range(1, w.k + 1)):
        raise DomainError("projection index set out of range")
    if len(dset) == w.k:
        raise DomainError("cannot project away every coordinate")
    star = kleene_star(w)
    keep = [v for v in range(1, w.k + 1) if v not in dset]
    return WeightedDigraph.from_matrix(star.submatrix(keep, keep))


def membership(
    w: WeightedDigraph, x: Sequence
) -> tuple[bool, frozenset[tuple[int, int]]]:
    """Whether x lies in Q(W), plus the set of arcs attained with equality."""
    if len(x) != w.k:
        raise ShapeError(f"point has length {len(x)}, digraph has {w.k} nodes")
    pt = [Fraction(v) if not isinstance(v, Fraction) else v for v in x]
    ok = True
    tight = set()
    for (i, j), wt in w.arcs.items():
        diff = pt[i - 1] - pt[j - 1]
        if diff > wt:
            ok = False
        elif diff == wt:
            tight.add((i, j))
    return ok, frozenset(tight)


def interior_point(w: WeightedDigraph) -> tuple[Fraction, ...]:
    """A point of Q(W) whose tight arcs are exactly the forced equalities.

    Big-M completion makes every Kleene column finite; the arithmetic mean
    of the columns is then tight precisely on the zero-cycle arcs.
    """
    cyc = detect_negative_cycle(w)
    if cyc is not None:
        raise InfeasibleError(cyc)
    k = w.k
    wmax = max((abs(v) for v in w.arcs.values()), default=Fraction(0))
    big = (k + 1) * (wmax + 1)
    arcs = dict(w.arcs)
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i != j and arcs.get((i, j), INF) > big:
                arcs[(i, j)] = big
    star = kleene_star(WeightedDigraph(k, arcs))
    return tuple(
        Fraction(sum(star.entry(p, j) for j in range(1, k + 1)), k)
        for p in range(1, k + 1)
    )


# ---------------------------------------------------------------------------
# recession cones and digraph cone combinatorics


@dataclass(frozen=True)
class RecessionDecomposition:
    """Generators of the recession cone of Q(W) as 0/1 characteristic vectors."""

    lineality_generators: tuple[tuple[int, ...], ...]
    ray_generators: tuple[tuple[int, ...], ...]


def _chi(k: int, nodes: Iterable[int]) -> tuple[int, ...]:
    s = set(nodes)
    return tuple(1 if v in s else 0 for v in range(1, k + 1))


def recession(w: WeightedDigraph) -> RecessionDecomposition:
    """Lineality and minimal ray generators of the recession cone of Q(W).

    The recession cone is the digraph cone of the unweighted arc set: the
    lineality space is spanned by the weak components, and the rays are
    the characteristic vectors chi(K) for K inducing a connected subgraph
    whose complement within its weak component is connected, with every
    cut arc directed into K.
    """
    arcs = list(w.arcs)
    comps = weak_components(w.k, arcs)
    lineality = tuple(_chi(w.k, c) for c in comps)
    rays = []
    for comp in comps:
        cset = set(comp)
        members = list(comp)
        m = len(members)
        for bits in range(1, (1 << m) - 1):
            kset = frozenset(members[t] for t in range(m) if bits >> t & 1)
            rest = frozenset(cset - kset)
            if not _induced_connected(kset, arcs):
                continue
            if not _induced_connected(rest, arcs):
                continue
            cut_ok = all(
                not (i in kset and j in rest)
                for (i, j) in arcs
            )
            if cut_ok:
                rays.append(_chi(w.k, kset))
    return RecessionDecomposition(lineality, tuple(sorted(rays)))


@dataclass(frozen=True)
class ConeFaceLattice:
    """Face lattice of a digraph cone, encoded by equality partitions.

    The elements are ordered by refinement: finer partitions correspond to
    larger faces.  The minimum (lineality face) is the weak-component
    partition, the top cell is the strong-component partition.
    """

    k: int
    elements: tuple[NodePartition, ...]
    minimum: NodePartition
    top: NodePartition

    def face_dimension(self, p: NodePartition) -> int:
        return len(p.blocks)


def _set_partitions(k: int):
    """All set partitions of 1..k via restricted growth strings."""

    def rec(i: int, blocks: list[list[int]]):
        if i > k:
            yield [tuple(b) for b in blocks]
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def cone_face_lattice(gamma: WeightedDigraph, *, node_bound: int = 10) -> ConeFaceLattice:
    """All equality partitions of faces of the digraph cone Q(Gamma, 0).

    A partition qualifies iff each block induces a weakly connected
    subgraph and contracting the blocks leaves no directed cycle.
    """
    if gamma.k > node_bound:
        raise CapabilityError(
            f"face lattice enumeration is limited to {node_bound} nodes, got {gamma.k}"
        )
    arcs = list(gamma.arcs)
    elements = []
    for blocks in _set_partitions(gamma.k):
        if not all(_induced_connected(frozenset(b), arcs) for b in blocks):
            continue
        if not _contraction_acyclic(blocks, arcs):
            continue
        elements.append(NodePartition.make(gamma.k, blocks))
    elements.sort(key=lambda p: (len(p.blocks), p.blocks))
    minimum = NodePartition.make(gamma.k, weak_components(gamma.k, arcs))
    top = NodePartition.make(gamma.k, strong_components(gamma.k, arcs))
    return ConeFaceLattice(gamma.k, tuple(elements), minimum, top)


def acyclic_reduction(gamma: WeightedDigraph) -> tuple[WeightedDigraph, NodePartition]:
    """Condensation digraph plus the strong-component partition.

    Arcs between distinct components keep the minimum weight over the
    original cross arcs; intra-component arcs are dropped.
    """
    comps = strong_components(gamma.k, gamma.arcs)
    part = NodePartition.make(gamma.k, comps)
    idx = {}
    for t, b in enumerate(part.blocks, start=1):
        for v in b:
            idx[v] = t
    arcs: dict[tuple[int, int], Fraction] = {}
    for (i, j), wt in gamma.arcs.items():
        bi, bj = idx[i], idx[j]
        if bi == bj:
            continue
        key = (bi, bj)
        if key not in arcs or wt < arcs[key]:
            arcs[key] = wt
    return WeightedDigraph(len(part.blocks), arcs), part
