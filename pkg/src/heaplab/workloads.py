"""Seeded input generators and the sorting / shortest-path runners.

All generators draw from a PCG64 generator seeded with the given 64-bit
value, so identical parameters reproduce identical outputs bit for bit.
Benchmark trials use ``base_seed + trial_index``.

Permutations are sequences of the integers 1..n.  Graphs are simple,
undirected, with integer weights uniform on [1, 10000]; the dump format is
an ``n m`` header followed by one ``u v w`` line per edge, vertices
0-based, and permutations dump as one integer per line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import Counters
from .factory import heap_from_root_sequence, make_heap
from .heaps import DecreaseKeyPolicy, DeletePolicy, Placement


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


# ---------------------------------------------------------------------------
# permutation families

def gen_uniform(n: int, seed: int) -> list[int]:
    """Uniformly random permutation of 1..n (Fisher-Yates via PCG64)."""
    if n < 1:
        raise ValueError("n must be positive")
    return (_rng(seed).permutation(n) + 1).tolist()


def gen_separable(n: int, seed: int) -> list[int]:
    """Separable permutation: starting from 1..n, reverse with probability
    1/2, then recurse on the two halves (floor/ceil split).  Runs of length
    at most one draw nothing.  The output avoids the patterns 2413 and 3142."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = _rng(seed)
    arr = list(range(1, n + 1))

    def shuffle(lo: int, hi: int) -> None:
        if hi - lo <= 1:
            return
        if rng.random() < 0.5:
            arr[lo:hi] = arr[lo:hi][::-1]
        mid = (lo + hi) // 2
        shuffle(lo, mid)
        shuffle(mid, hi)

    shuffle(0, n)
    return arr


def gen_localized(n: int, eps: float, seed: int) -> list[int]:
    """Near-identity permutation: value i is drawn from Normal(i, (eps*n)^2)
    and the permutation is the rank order (stable argsort, ties by index).

    The standard deviation scales with n so ``eps`` reads as a displacement
    fraction of the whole sequence; absolute operation counts depend on this
    choice.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if eps < 0:
        raise ValueError("eps must be non-negative")
    rng = _rng(seed)
    idx = np.arange(1, n + 1, dtype=float)
    values = rng.normal(loc=idx, scale=eps * n)
    order = np.argsort(values, kind="stable")
    ranks = np.empty(n, dtype=np.int64)
    ranks[order] = np.arange(1, n + 1)
    return ranks.tolist()


def gen_sorted_blocks(n: int, block_cap: int, seed: int) -> list[int]:
    perm, _ = gen_sorted_blocks_with_bounds(n, block_cap, seed)
    return perm


def gen_sorted_blocks_with_bounds(n: int, block_cap: int, seed: int):
    """Uniform permutation with consecutive blocks sorted ascending; block
    lengths drawn uniformly from [1, block_cap], the last block truncated.
    Returns (permutation, block boundary offsets including 0 and n)."""
    if n < 1:
        raise ValueError("n must be positive")
    if block_cap < 1:
        raise ValueError("block_cap must be positive")
    rng = _rng(seed)
    perm = (rng.permutation(n) + 1).tolist()
    bounds = [0]
    pos = 0
    while pos < n:
        length = int(rng.integers(1, block_cap + 1))
        end = min(pos + length, n)
        perm[pos:end] = sorted(perm[pos:end])
        bounds.append(end)
        pos = end
    return perm, bounds


# ---------------------------------------------------------------------------
# graph families

@dataclass
class WeightedGraph:
    """Simple undirected graph with integer edge weights."""

    n: int
    edges: list  # (u, v, w) with u < v
    adj: list = field(default_factory=list)

    def __post_init__(self):
        if not self.adj:
            adj = [[] for _ in range(self.n)]
            for u, v, w in self.edges:
                adj[u].append((v, w))
                adj[v].append((u, w))
            self.adj = adj

    @property
    def m(self) -> int:
        return len(self.edges)


def gen_erdos_renyi(n: int, p: float, seed: int) -> WeightedGraph:
    """Each unordered pair is an edge independently with probability p."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = _rng(seed)
    iu, iv = np.triu_indices(n, k=1)
    mask = rng.random(iu.shape[0]) < p
    us = iu[mask]
    vs = iv[mask]
    ws = rng.integers(1, 10001, size=us.shape[0])
    edges = list(zip(us.tolist(), vs.tolist(), ws.tolist()))
    return WeightedGraph(n, edges)


def gen_regular(n: int, d: int, seed: int) -> WeightedGraph:
    """Random d-regular simple graph.

    Stub matching: pair up d copies of every vertex; pairs that would form
    a self-loop or duplicate edge put their stubs back for the next round,
    and a round that cannot place any remaining stub restarts the whole
    attempt.  Terminates quickly for the degrees used here, unlike rejecting
    whole samples, whose success probability vanishes already at d=10.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if d < 0 or d >= n:
        raise ValueError("need 0 <= d < n")
    if (n * d) % 2 != 0:
        raise ValueError("n*d must be even")
    rng = _rng(seed)
    if d == 0:
        return WeightedGraph(n, [])

    def suitable(edges, counts):
        if not counts:
            return True
        verts = sorted(counts)
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                if (u, v) not in edges:
                    return True
        return False

    def attempt():
        edges = set()
        order = []
        stubs = list(range(n)) * d
        while stubs:
            counts: dict[int, int] = {}
            arr = np.array(stubs)
            rng.shuffle(arr)
            it = iter(arr.tolist())
            for u, v in zip(it, it):
                if u > v:
                    u, v = v, u
                if u != v and (u, v) not in edges:
                    edges.add((u, v))
                    order.append((u, v))
                else:
                    counts[u] = counts.get(u, 0) + 1
                    counts[v] = counts.get(v, 0) + 1
            if not suitable(edges, counts):
                return None
            stubs = [v for v, c in counts.items() for _ in range(c)]
        return order

    order = attempt()
    while order is None:
        order = attempt()
    ws = rng.integers(1, 10001, size=len(order))
    edges = [(u, v, int(w)) for (u, v), w in zip(order, ws)]
    return WeightedGraph(n, edges)


# ---------------------------------------------------------------------------
# dump formats

def dump_permutation(perm: Sequence[int], fh) -> None:
    """One integer per line."""
    fh.write("\n".join(str(v) for v in perm))
    fh.write("\n")


def dump_graph(g: WeightedGraph, fh) -> None:
    """Header ``n m`` then one ``u v w`` line per edge (0-based vertices)."""
    fh.write(f"{g.n} {g.m}\n")
    for u, v, w in g.edges:
        fh.write(f"{u} {v} {w}\n")


# ---------------------------------------------------------------------------
# runners

@dataclass
class DeleteMinStats:
    """Per-delete-min instrumentation collected by ``run_sorting``."""

    roots: int          # roots entering consolidation (children + old roots)
    comparisons: int
    links: int


def run_sorting(heap_kind: str, keys: Sequence, collect: bool = False):
    """Sorting mode: a root list holding the keys in order, then n
    delete-mins.  Asserts the emitted keys come out non-decreasing and
    returns the counters (plus per-delete-min stats when ``collect``).

    Forest heaps start from a lazily built root list (zero links).  The
    classic pairing heap cannot hold a forest, so it is built by its own
    eager insertions, which link; its counts include that build.
    """
    counters = Counters()
    if heap_kind == "pairing-classic":
        heap = make_heap(heap_kind, counters)
        for k in keys:
            heap.insert(k)
    else:
        heap, _ = heap_from_root_sequence(heap_kind, keys, counters)
    stats: list[DeleteMinStats] = []
    out = []
    while len(heap):
        if collect:
            roots = _count_roots(heap) - 1 + _count_children(heap.min_root, heap)
            c0, l0 = counters.comparisons, counters.links
            x = heap.delete_min()
            stats.append(DeleteMinStats(roots, counters.comparisons - c0,
                                        counters.links - l0))
        else:
            x = heap.delete_min()
        out.append(x.key)
    for a, b in zip(out, out[1:]):
        if b < a:
            raise AssertionError("sorting mode emitted out-of-order keys")
    if collect:
        return counters, stats
    return counters


def _count_roots(heap) -> int:
    first = heap.first_root
    if first is None:
        return 0
    count = 1
    cur = first.next
    while cur is not first:
        count += 1
        cur = cur.next
    return count


def _count_children(node, heap) -> int:
    from .core import iter_children
    from .heaps import Heap, Linking
    stable = isinstance(heap, Heap) and heap.config.linking is Linking.STABLE
    return sum(1 for _ in iter_children(node, stable))


def run_dijkstra(heap_kind: str, graph: WeightedGraph, source: int = 0):
    """Single-source shortest paths with the heap keyed on tentative
    distance.  Inserts and decrease-keys are lazy appends to the root list
    (floating min pointer); a vertex settles when first deleted.  Counters
    accumulate only inside delete-min calls, where the variants differ.

    Returns (distances, Counters); unreachable vertices get math.inf.
    """
    n = graph.n
    counters = Counters()
    if heap_kind in ("smooth", "slim"):
        heap = make_heap(heap_kind, counters,
                         decrease_key=DecreaseKeyPolicy.SIMPLE,
                         delete_policy=DeletePolicy.VIA_DECREASE_KEY,
                         placement=Placement.APPEND_LAST)
    else:
        heap = make_heap(heap_kind, counters)
    dist = [math.inf] * n
    settled = [False] * n
    nodes: list = [None] * n
    adj = graph.adj
    total = Counters()

    dist[source] = 0
    nodes[source] = heap.insert(0, source)
    while len(heap):
        c0, l0, m0 = counters.comparisons, counters.links, counters.min_comparisons
        x = heap.delete_min()
        total.comparisons += counters.comparisons - c0
        total.links += counters.links - l0
        total.min_comparisons += counters.min_comparisons - m0
        u = x.item
        settled[u] = True
        du = dist[u]
        for v, w in adj[u]:
            if settled[v]:
                continue
            nd = du + w
            if nodes[v] is None:
                dist[v] = nd
                nodes[v] = heap.insert(nd, v)
            elif nd < dist[v]:
                dist[v] = nd
                heap.decrease_key(nodes[v], nd)
    return dist, total


def bellman_ford(graph: WeightedGraph, source: int = 0):
    """Reference shortest paths by edge relaxation; O(n*m)."""
    dist = [math.inf] * graph.n
    dist[source] = 0
    for _ in range(graph.n - 1):
        changed = False
        for u, v, w in graph.edges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
            if dist[v] + w < dist[u]:
                dist[u] = dist[v] + w
                changed = True
        if not changed:
            break
    return dist
