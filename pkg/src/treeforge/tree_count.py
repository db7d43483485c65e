"""Exact spanning-tree counting by two independent methods.

tau_matrix evaluates the Kirchhoff cofactor: delete one row/column of the
Laplacian and take the determinant. The elimination is fraction-free
(Bareiss), so every intermediate value is an integer minor of the original
matrix and the result is exact at any size. Pivots are chosen symmetrically
by minimum degree and rows are rescaled lazily (the per-step factor
pivot/previous_pivot telescopes), which makes the sweep over large but
sparse, path-like graphs near-linear instead of cubic.

tau_dc evaluates the deletion-contraction recurrence
tau(G) = tau(G - e) + tau(G / e), with memoization keyed on canonical
forms, block factorization at cut vertices, and parallel bundles collapsed
in one step: a bundle of m copies contributes m * tau(contract) +
tau(delete all copies).

tau_subdivision evaluates the count for a skeleton whose edges are blown
up into paths: sum over spanning trees T of the skeleton of the product of
the lengths of the slots outside T.

The two general-purpose methods are independent implementations and are
cross-checked against each other in the test suite.
"""

from __future__ import annotations

import os
import threading
from collections import OrderedDict
from itertools import combinations
from typing import Mapping, Sequence

from .graph_core import GraphError, Multigraph, biconnected_components, canonical_form

TreeCount = int  # arbitrary precision; counts exceed 64 bits quickly

DEFAULT_MEMO_CAP = 1 << 20
_MEMO_ENV = "TREEFORGE_MEMO_CAP"


def tau_matrix(g: Multigraph) -> TreeCount:
    """Spanning-tree count as the (0,0) cofactor of the Laplacian.

    Disconnected graphs give 0, the one-vertex graph gives 1.
    """
    n = g.vertex_count
    if n < 1:
        raise GraphError("graph must have at least one vertex")
    if n == 1:
        return 1
    # reduced Laplacian over vertices 1..n-1, stored sparsely and symmetric
    rows: dict[int, dict[int, int]] = {v: {} for v in range(1, n)}
    for u, v, m in g.edges:
        if u != 0:
            rows[u][u] = rows[u].get(u, 0) + m
        if v != 0:
            rows[v][v] = rows[v].get(v, 0) + m
        if u != 0 and v != 0:
            rows[u][v] = rows[u].get(v, 0) - m
            rows[v][u] = rows[v].get(u, 0) - m

    active = set(rows)
    pivots = [1]  # pivots[k] is the Bareiss pivot of step k; pivots[0] is a sentinel
    stage = {v: 0 for v in active}  # step each row was last brought up to

    def catch_up(i: int, target: int) -> None:
        if stage[i] == target:
            return
        num, den = pivots[target], pivots[stage[i]]
        row = rows[i]
        for j in row:
            row[j] = row[j] * num // den
        stage[i] = target

    for _ in range(n - 1):
        p = None
        best = None
        for v in active:
            if rows[v].get(v):
                size = len(rows[v])
                if best is None or size < best or (size == best and v < p):
                    p, best = v, size
        if p is None:
            # positive semidefinite: an all-zero remaining diagonal means the
            # whole remaining block is zero, i.e. the graph is disconnected
            return 0
        cur = len(pivots) - 1
        catch_up(p, cur)
        prow = rows.pop(p)
        active.remove(p)
        piv = prow[p]
        prev = pivots[cur]
        for i in list(prow):
            if i == p or i not in active:
                continue
            catch_up(i, cur)
            row = rows[i]
            f = row.pop(p)
            for j, pj in prow.items():
                if j == p or j not in active:
                    continue
                val = (row.get(j, 0) * piv - f * pj) // prev
                if val:
                    row[j] = val
                else:
                    row.pop(j, None)
            for j in list(row):
                if j not in prow:
                    row[j] = row[j] * piv // prev
            stage[i] = cur + 1
        pivots.append(piv)
    return pivots[-1]


# ---------------------------------------------------------------------------
# deletion-contraction

_local = threading.local()


def _memo_cap() -> int:
    raw = os.environ.get(_MEMO_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_MEMO_CAP


def _memo() -> OrderedDict:
    table = getattr(_local, "table", None)
    if table is None:
        table = OrderedDict()
        _local.table = table
    return table


def clear_memo() -> None:
    """Drop this thread's memo table (mainly for tests)."""
    _local.table = OrderedDict()


def _strip_pendants(g: Multigraph) -> tuple[Multigraph, int]:
    """Remove degree-1 vertices repeatedly; returns (core, multiplier).

    Every spanning tree must use one copy of each pendant bundle, so a
    pendant with multiplicity m scales the count by m.
    """
    factor = 1
    while g.vertex_count > 1:
        deg: dict[int, list[tuple[int, int]]] = {}
        for u, v, m in g.edges:
            deg.setdefault(u, []).append((v, m))
            deg.setdefault(v, []).append((u, m))
        leaf = None
        for v in range(g.vertex_count):
            if len(deg.get(v, ())) == 1:
                leaf = v
                break
        if leaf is None:
            break
        if leaf not in deg:  # isolated vertex: disconnected
            return g, factor
        _, m = deg[leaf][0]
        factor *= m
        keep = [x for x in range(g.vertex_count) if x != leaf]
        index = {x: i for i, x in enumerate(keep)}
        pairs = [
            (index[u], index[v], mm) for u, v, mm in g.edges if leaf not in (u, v)
        ]
        g = Multigraph.from_edges(g.vertex_count - 1, pairs)
    return g, factor


def _tau_dc_block(g: Multigraph, table: OrderedDict, cap: int) -> TreeCount:
    # g is connected here
    n = g.vertex_count
    if n == 1:
        return 1
    if n == 2:
        return g.edges[0][2]
    g, factor = _strip_pendants(g)
    n = g.vertex_count
    if n == 1:
        return factor
    if n == 2:
        return factor * g.edges[0][2]

    key = canonical_form(g)
    hit = table.get(key)
    if hit is not None:
        table.move_to_end(key)
        return factor * hit

    blocks = biconnected_components(g)
    if len(blocks) > 1:
        value = 1
        for b in blocks:
            value *= _tau_dc_block(b, table, cap)
    else:
        u, v, m = max(g.edges, key=lambda e: (e[2], -e[0], -e[1]))
        contracted = _contract_pair(g, u, v)
        value = m * _tau_dc_block(contracted, table, cap)
        deleted = Multigraph(
            g.vertex_count, tuple(e for e in g.edges if (e[0], e[1]) != (u, v))
        )
        if deleted.is_connected():
            value += _tau_dc_block(deleted, table, cap)

    table[key] = value
    if len(table) > cap:
        table.popitem(last=False)
    return factor * value


def _contract_pair(g: Multigraph, u: int, v: int) -> Multigraph:
    lo, hi = (u, v) if u < v else (v, u)
    pairs = []
    for a, b, m in g.edges:
        ra = lo if a == hi else (a - 1 if a > hi else a)
        rb = lo if b == hi else (b - 1 if b > hi else b)
        if ra != rb:
            pairs.append((ra, rb, m))
    return Multigraph.from_edges(g.vertex_count - 1, pairs)


def tau_dc(g: Multigraph, memo_cap: int | None = None) -> TreeCount:
    """Spanning-tree count by deletion-contraction.

    Agrees with tau_matrix everywhere. The memo table is per-thread (so
    concurrent callers never contend or deadlock) and LRU-bounded; the cap
    comes from ``memo_cap``, the TREEFORGE_MEMO_CAP environment variable,
    or a default of 2**20 entries.
    """
    n = g.vertex_count
    if n < 1:
        raise GraphError("graph must have at least one vertex")
    if not g.is_connected():
        return 0
    cap = memo_cap if memo_cap is not None else _memo_cap()
    return _tau_dc_block(g, _memo(), cap)


# ---------------------------------------------------------------------------
# subdivisions


def _slot_lengths(
    skeleton: Multigraph, lengths: Mapping[tuple[int, int, int], int] | Sequence[int]
) -> list[int]:
    slots = skeleton.slots()
    if isinstance(lengths, Mapping):
        out = []
        for slot in slots:
            if slot not in lengths:
                raise GraphError(f"missing length for edge slot {slot}")
            out.append(lengths[slot])
    else:
        out = list(lengths)
        if len(out) != len(slots):
            raise GraphError(
                f"got {len(out)} lengths for {len(slots)} edge slots"
            )
    if any(l < 1 for l in out):
        raise GraphError("subdivision lengths must be >= 1")
    return out


def _spanning_tree_slot_sets(skeleton: Multigraph) -> list[tuple[int, ...]]:
    """Indices of non-tree slots, one tuple per spanning tree of the skeleton."""
    slots = skeleton.slots()
    n = skeleton.vertex_count
    out = []
    if n == 1:
        return [tuple(range(len(slots)))]
    for tree in combinations(range(len(slots)), n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i in tree:
            u, v, _ = slots[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            inside = set(tree)
            out.append(tuple(i for i in range(len(slots)) if i not in inside))
    return out


def tau_subdivision(
    skeleton: Multigraph,
    lengths: Mapping[tuple[int, int, int], int] | Sequence[int],
) -> TreeCount:
    """Spanning trees of the graph where slot i becomes a path of lengths[i].

    Equal to sum over spanning trees T of the skeleton of the product of
    lengths of the slots outside T: each tree of the subdivision omits
    exactly one unit edge from the path of every non-tree slot.
    """
    if not skeleton.is_connected():
        raise GraphError("skeleton must be connected")
    ls = _slot_lengths(skeleton, lengths)
    total = 0
    for term in _spanning_tree_slot_sets(skeleton):
        prod = 1
        for i in term:
            prod *= ls[i]
        total += prod
    return total


def subdivide(
    skeleton: Multigraph,
    lengths: Mapping[tuple[int, int, int], int] | Sequence[int],
) -> Multigraph:
    """Explicitly build the subdivision (slot i replaced by a path)."""
    ls = _slot_lengths(skeleton, lengths)
    n = skeleton.vertex_count
    pairs: list[tuple[int, int, int]] = []
    nxt = n
    for (u, v, _), l in zip(skeleton.slots(), ls):
        chain = [u] + list(range(nxt, nxt + l - 1)) + [v]
        nxt += l - 1
        pairs.extend((chain[i], chain[i + 1], 1) for i in range(l))
    return Multigraph.from_edges(nxt, pairs)
