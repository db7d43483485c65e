"""Exhaustive computation of the extremal functions alpha and beta, and a
skeleton-subdivision verifier for fixed-point claims.

alpha(n) is the least vertex count of a simple graph with exactly n
spanning trees, beta(n) the least edge count. Both searches enumerate one
representative per isomorphism class of connected simple graphs, growing
level by level (a connected graph always has a non-cut vertex, so every
class on k vertices extends one on k-1). Two hereditary facts prune hard:
removing a non-cut vertex never increases the count, so levels only need
classes with count <= n; and a minimal witness never has a bridge, since
contracting a bridge keeps the count while shrinking the graph.

verify_no_smaller_graph mechanizes the subdivision argument. Any connected
simple graph with count n >= 3 reduces (by deleting pendant vertices,
which keeps the count) to minimum degree 2, and such a graph is either a
cycle or a subdivision of a skeleton: a connected multigraph, loops
allowed, with minimum degree >= 3. For fixed cyclomatic number c there are
finitely many skeletons, the count of a subdivision is coordinatewise
monotone in the path lengths, and the vertex budget bounds the sweep, so
the whole family below a budget can be searched exactly. Levels stop once
the minimum count at cyclomatic number c exceeds n: adding an ear raises
the count by at least 2 (and a new cycle block multiplies it by >= 3), so
deeper levels only grow.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .graph_core import (
    GraphError,
    Multigraph,
    canonical_form,
)
from .minimal_builder import Strategy, Witness
from .tree_count import TreeCount, tau_matrix

DEFAULT_VERTEX_CEILING = 9


class SearchKind(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"


@dataclass(frozen=True)
class SearchResult:
    n: int
    kind: SearchKind
    value: int | None  # None means: nothing within the budget
    witness: Witness | None
    search_space: dict


# ---------------------------------------------------------------------------
# isomorphism-free enumeration of connected simple graphs


@lru_cache(maxsize=128)
def _level(
    k: int, tau_cap: int | None, edge_cap: int | None = None
) -> tuple[tuple[Multigraph, TreeCount], ...]:
    """Connected simple graph classes on exactly k vertices, with their
    counts. Both restrictions are hereditary under non-cut-vertex deletion
    (the count never grows and edges only disappear), so applying them at
    every level loses no extension."""
    if k < 1:
        return ()
    if k == 1:
        return ((Multigraph(1, ()), 1),)
    out: dict[bytes, tuple[Multigraph, TreeCount]] = {}
    base = _level(k - 1, tau_cap, edge_cap)
    old = k - 1
    for g, _ in base:
        edge_list = list(g.edges)
        for bits in range(1, 1 << old):
            pairs = edge_list + [
                (v, old, 1) for v in range(old) if bits >> v & 1
            ]
            cand = Multigraph(k, tuple(sorted(pairs)))
            if edge_cap is not None and cand.edge_count > edge_cap:
                continue
            t = tau_matrix(cand)  # cheaper than canonicalizing, so filter first
            if tau_cap is not None and t > tau_cap:
                continue
            key = canonical_form(cand)
            if key not in out:
                out[key] = (cand, t)
    return tuple(sorted(out.values(), key=lambda item: (item[0].edge_count, item[0].edges)))


def enumerate_connected_graphs(
    max_vertices: int,
    predicate: Callable[[Multigraph], bool] | None = None,
    ceiling: int = DEFAULT_VERTEX_CEILING,
) -> Iterator[Multigraph]:
    """One representative per isomorphism class of connected simple graphs
    on exactly max_vertices vertices, in deterministic order.

    ``predicate`` is applied as a final filter. The ceiling guards against
    accidentally launching an astronomically large enumeration.
    """
    if max_vertices > ceiling:
        raise GraphError(
            f"enumeration ceiling exceeded: {max_vertices} > {ceiling}"
        )
    for g, _ in _level(max_vertices, None):
        if predicate is None or predicate(g):
            yield g


def _cap_tier(n: int) -> int:
    """Round the pruning cap up to a power of two so runs with nearby n
    share the memoized levels."""
    return 1 << max(6, (n - 1).bit_length())


def _space(kind: str, budget: int, cap: int, levels: list[tuple[int, int]]) -> dict:
    return {
        "kind": kind,
        "budget": budget,
        "filter": f"connected simple graphs, tree count <= {cap} "
        "(hereditary under non-cut-vertex deletion), one per isomorphism class",
        "classes_per_level": {str(k): c for k, c in levels},
    }


def alpha_exact(n: int, max_vertices: int = 8) -> SearchResult:
    """Smallest vertex count <= max_vertices realizing exactly n trees."""
    if n < 3:
        raise GraphError("alpha is defined for n >= 3")
    cap = _cap_tier(n)
    levels = []
    for k in range(1, max_vertices + 1):
        level = _level(k, cap)
        levels.append((k, len(level)))
        hits = [(g, t) for g, t in level if t == n]
        if hits:
            g, t = hits[0]
            w = Witness(g, t, k, g.edge_count, Strategy.SEARCH)
            return SearchResult(
                n, SearchKind.ALPHA, k, w, _space("alpha", max_vertices, cap, levels)
            )
    return SearchResult(
        n, SearchKind.ALPHA, None, None, _space("alpha", max_vertices, cap, levels)
    )


def beta_exact(n: int, max_edges: int) -> SearchResult:
    """Smallest edge count <= max_edges realizing exactly n trees.

    A graph with a cycle has at least as many edges as vertices, so levels
    up to max_edges vertices exhaust every candidate.
    """
    if n < 3:
        raise GraphError("beta is defined for n >= 3")
    cap = _cap_tier(n)
    best: tuple[int, Multigraph, TreeCount] | None = None
    levels = []
    for k in range(1, max_edges + 1):
        level = _level(k, cap, max_edges)
        levels.append((k, len(level)))
        for g, t in level:
            if t == n and g.edge_count <= max_edges:
                if best is None or g.edge_count < best[0]:
                    best = (g.edge_count, g, t)
    space = _space("beta", max_edges, n, levels)
    if best is None:
        return SearchResult(n, SearchKind.BETA, None, None, space)
    edges, g, t = best
    w = Witness(g, t, g.vertex_count, edges, Strategy.SEARCH)
    return SearchResult(n, SearchKind.BETA, edges, w, space)


# ---------------------------------------------------------------------------
# skeletons: connected multigraphs with loops, min degree >= 3


@dataclass(frozen=True)
class Skeleton:
    """Slots are (u, v) pairs with u <= v; u == v is a loop. A simple graph
    of minimum degree 2 that is not a cycle is a subdivision of exactly one
    skeleton (suppress the degree-2 vertices)."""

    vertex_count: int
    slots: tuple[tuple[int, int], ...]

    @property
    def cyclomatic(self) -> int:
        return len(self.slots) - self.vertex_count + 1

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.slots)

    def describe(self) -> str:
        return f"{self.vertex_count} vertices, slots {list(self.slots)}"


def _skeleton_key(v: int, slots: Sequence[tuple[int, int]]) -> bytes:
    loops = [0] * v
    pairs = []
    for a, b in slots:
        if a == b:
            loops[a] += 1
        else:
            pairs.append((a, b))
    residue = Multigraph.from_edges(v, pairs) if pairs else Multigraph(v, ())
    return canonical_form(residue, colors=loops)


def enumerate_skeletons(cyclomatic: int) -> list[Skeleton]:
    """All skeletons with the given cyclomatic number, up to isomorphism.

    Minimum degree 3 forces vertex_count <= 2 * (cyclomatic - 1).
    """
    if cyclomatic < 2:
        raise GraphError("skeletons here have cyclomatic number >= 2")
    found: dict[bytes, Skeleton] = {}
    for v in range(1, 2 * (cyclomatic - 1) + 1):
        e = v + cyclomatic - 1
        cells = [(i, j) for i in range(v) for j in range(i, v)]
        # cells are ordered so that all cells touching vertex i precede the
        # block where every endpoint exceeds i; once we leave that block,
        # vertex i's degree is final
        cells.sort()
        counts = [0] * len(cells)
        deg = [0] * v

        def place(idx: int, remaining: int) -> None:
            if remaining == 0:
                if any(d < 3 for d in deg):
                    return
                slots = []
                for cell, m in zip(cells, counts):
                    slots.extend([cell] * m)
                if not _slots_connected(v, slots):
                    return
                key = _skeleton_key(v, slots)
                if key not in found:
                    found[key] = Skeleton(v, tuple(slots))
                return
            if idx == len(cells):
                return
            deficit = sum(max(0, 3 - d) for d in deg)
            if deficit > 2 * remaining:
                return
            i, j = cells[idx]
            # cells are sorted, so vertices below the current block's first
            # endpoint cannot gain any more degree
            if any(deg[x] < 3 for x in range(i)):
                return
            gain = 2 if i == j else 1
            for m in range(remaining + 1):
                counts[idx] = m
                deg[i] += gain * m
                if i != j:
                    deg[j] += m
                place(idx + 1, remaining - m)
                deg[i] -= gain * m
                if i != j:
                    deg[j] -= m
            counts[idx] = 0

        place(0, e)
    return sorted(found.values(), key=lambda s: (s.vertex_count, s.slots))


def _slots_connected(v: int, slots: Sequence[tuple[int, int]]) -> bool:
    if v == 1:
        return True
    parent = list(range(v))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = v
    for a, b in slots:
        if a == b:
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps == 1


# ---------------------------------------------------------------------------
# subdivision sweeps


class _Sweep:
    """Evaluate and enumerate subdivisions of one skeleton.

    The count of a subdivision is sum over spanning trees T of the skeleton
    of the product of lengths of slots outside T; loops are never in a tree,
    so they multiply every term.
    """

    def __init__(self, skeleton: Skeleton):
        self.skeleton = skeleton
        self.slots = list(skeleton.slots)
        self.loop_idx = [i for i, (a, b) in enumerate(self.slots) if a == b]
        edge_idx = [i for i, (a, b) in enumerate(self.slots) if a != b]
        self.terms = self._tree_complements(edge_idx)
        classes: dict[tuple[int, int], list[int]] = {}
        for i, cell in enumerate(self.slots):
            classes.setdefault(cell, []).append(i)
        self.parallel_classes = {
            cell: idxs for cell, idxs in classes.items() if cell[0] != cell[1] and len(idxs) > 1
        }

    def _tree_complements(self, edge_idx: list[int]) -> list[tuple[int, ...]]:
        v = self.skeleton.vertex_count
        loops = tuple(self.loop_idx)
        if v == 1:
            return [loops]
        out = []
        for tree in combinations(edge_idx, v - 1):
            parent = list(range(v))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            ok = True
            for i in tree:
                a, b = self.slots[i]
                ra, rb = find(a), find(b)
                if ra == rb:
                    ok = False
                    break
                parent[ra] = rb
            if ok:
                inside = set(tree)
                rest = tuple(i for i in edge_idx if i not in inside)
                out.append(loops + rest)
        return out

    def tau(self, lengths: Sequence[int]) -> TreeCount:
        total = 0
        for term in self.terms:
            prod = 1
            for i in term:
                prod *= lengths[i]
            total += prod
        return total

    def min_lengths(self) -> list[int]:
        """Componentwise minimal admissible (simple) assignment: loops need
        length 3, and at most one slot per parallel class may have length 1."""
        mins = []
        seen_one: set[tuple[int, int]] = set()
        for i, (a, b) in enumerate(self.slots):
            if a == b:
                mins.append(3)
            elif (a, b) in self.parallel_classes and (a, b) in seen_one:
                mins.append(2)
            else:
                if (a, b) in self.parallel_classes:
                    seen_one.add((a, b))
                mins.append(1)
        return mins

    def min_tau(self) -> TreeCount:
        return self.tau(self.min_lengths())

    def min_vertices(self) -> int:
        return self.skeleton.vertex_count + sum(l - 1 for l in self.min_lengths())

    def build(self, lengths: Sequence[int]) -> Multigraph:
        n = self.skeleton.vertex_count
        pairs = []
        nxt = n
        for (u, v), l in zip(self.slots, lengths):
            chain = [u] + list(range(nxt, nxt + l - 1)) + [v]
            nxt += l - 1
            pairs.extend((chain[i], chain[i + 1], 1) for i in range(l))
        return Multigraph.from_edges(nxt, pairs)

    def find_assignments(
        self, n: int, vertex_budget: int
    ) -> tuple[int, list[tuple[int, ...]]]:
        """All admissible length vectors with count exactly n and strictly
        fewer than vertex_budget vertices. Returns (vectors tried, hits).

        Sound pruning: the count is coordinatewise nondecreasing in every
        length, so once the minimal completion of a prefix exceeds n the
        whole branch is dead; slots whose length never enters the count
        (bridges) are capped by the vertex budget alone.
        """
        k = len(self.slots)
        # absolute per-slot floors: sound lower bounds for prefix pruning
        # even when the class-aware admissible minimum is higher
        floors = [3 if a == b else 1 for a, b in self.slots]
        suffix_extra = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            suffix_extra[i] = suffix_extra[i + 1] + floors[i] - 1
        max_extra = vertex_budget - 1 - self.skeleton.vertex_count
        lengths = floors[:]
        tried = 0
        hits: list[tuple[int, ...]] = []
        if max_extra < suffix_extra[0]:
            return 0, []

        def assign(i: int, extra: int, ones_used: set[tuple[int, int]]) -> None:
            nonlocal tried
            if i == k:
                tried += 1
                if self.tau(lengths) == n:
                    hits.append(tuple(lengths))
                return
            cell = self.slots[i]
            a, b = cell
            if a == b:
                lo = 3
            elif cell in self.parallel_classes and cell in ones_used:
                lo = 2
            else:
                lo = 1
            l = lo
            while True:
                if extra + (l - 1) + suffix_extra[i + 1] > max_extra:
                    break
                lengths[i] = l
                for j in range(i + 1, k):
                    lengths[j] = floors[j]
                if self.tau(lengths) > n:
                    break
                used_one = l == 1 and cell in self.parallel_classes
                if used_one:
                    ones_used.add(cell)
                assign(i + 1, extra + (l - 1), ones_used)
                if used_one:
                    ones_used.discard(cell)
                l += 1
            lengths[i] = floors[i]

        assign(0, 0, set())
        return tried, hits


@dataclass
class SkeletonAudit:
    skeleton: Skeleton
    min_tau: TreeCount
    min_vertices: int
    status: str  # "swept" | "pruned_tau" | "pruned_budget"
    assignments_tried: int = 0
    witnesses: list[Multigraph] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "skeleton": self.skeleton.describe(),
            "cyclomatic": self.skeleton.cyclomatic,
            "min_tau": str(self.min_tau),
            "min_vertices": self.min_vertices,
            "status": self.status,
            "assignments_tried": self.assignments_tried,
            "witnesses": [
                {"vertices": g.vertex_count, "edges": list(g.edges)}
                for g in self.witnesses
            ],
        }


@dataclass
class FixedPointReport:
    n: int
    vertex_budget: int
    proved: bool
    witnesses: list[Multigraph]
    cycle_case: str
    levels: list[dict]
    stop_reason: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertex_budget": self.vertex_budget,
            "proved": self.proved,
            "witnesses": [
                {"vertices": g.vertex_count, "edges": list(g.edges)}
                for g in self.witnesses
            ],
            "reduction": (
                "a witness below budget may be assumed to have minimum degree 2 "
                "(deleting a pendant vertex keeps the tree count); such a graph "
                "is a cycle or a subdivision of a skeleton with min degree 3"
            ),
            "cycle_case": self.cycle_case,
            "levels": self.levels,
            "stop_reason": self.stop_reason,
        }


def verify_no_smaller_graph(
    n: int, vertex_budget: int, max_cyclomatic: int = 12
) -> FixedPointReport:
    """Decide whether some simple graph on fewer than vertex_budget vertices
    has exactly n spanning trees, by exhausting skeleton subdivisions.

    proved=True means no such graph exists; otherwise every witness found
    is listed. The transcript records each skeleton with its minimal count
    and sweep statistics.
    """
    if n < 3:
        raise GraphError("defined for n >= 3")
    witnesses: list[Multigraph] = []
    seen: set[bytes] = set()

    if 3 <= n < vertex_budget:
        from .graph_core import cycle_graph

        g = cycle_graph(n)
        witnesses.append(g)
        seen.add(canonical_form(g))
        cycle_case = f"the {n}-cycle itself has {n} vertices < budget"
    else:
        cycle_case = (
            f"cycles C_k with k < {vertex_budget} have k != {n} spanning trees; "
            "trees have exactly 1"
        )

    levels: list[dict] = []
    stop_reason = ""
    c = 2
    while True:
        if c > max_cyclomatic:
            stop_reason = f"gave up at cyclomatic number {c} (limit {max_cyclomatic})"
            return FixedPointReport(
                n, vertex_budget, False, witnesses, cycle_case, levels, stop_reason
            )
        audits = []
        level_min: TreeCount | None = None
        for skel in enumerate_skeletons(c):
            sweep = _Sweep(skel)
            mt = sweep.min_tau()
            mv = sweep.min_vertices()
            if level_min is None or mt < level_min:
                level_min = mt
            audit = SkeletonAudit(skel, mt, mv, "swept")
            if mt > n:
                audit.status = "pruned_tau"
            elif mv >= vertex_budget:
                audit.status = "pruned_budget"
            else:
                tried, hits = sweep.find_assignments(n, vertex_budget)
                audit.assignments_tried = tried
                for vec in hits:
                    g = sweep.build(vec)
                    key = canonical_form(g)
                    if key not in seen:
                        seen.add(key)
                        audit.witnesses.append(g)
                        witnesses.append(g)
            audits.append(audit)
        levels.append(
            {
                "cyclomatic": c,
                "min_tau": str(level_min),
                "skeletons": [a.to_dict() for a in audits],
            }
        )
        if level_min is not None and level_min > n:
            stop_reason = (
                f"minimum count over cyclomatic number {c} is {level_min} > {n}; "
                "adding an ear raises the count by at least 2, so every higher "
                "level exceeds it as well"
            )
            break
        c += 1

    return FixedPointReport(
        n, vertex_budget, not witnesses, witnesses, cycle_case, levels, stop_reason
    )
