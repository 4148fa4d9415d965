"""Structural checkers, reference oracles, and the amortized-cost auditor.

The auditor replays an operation script against a smooth or slim heap,
charging each operation its normalized actual cost (delete-min: one plus
the number of links; everything else: one) and checking that cost plus the
potential change stays under the per-operation bound: 1 for make/find/meld,
3 for insert, ``5 + 3 lg n`` (one-sided) or ``5 + 4 lg n`` (stable) for
delete-min on an n-node heap, and ``3 + 2 lg size(x)`` for an optional
simple decrease-key.

The potential of a root is ``2 + 2 lg size``.  A child is worth
``lg mass`` except the free ones: the first or second child in a one-sided
heap, the leftmost left child or rightmost right child in a stable heap.
``mass`` is the child's subtree size plus the sizes of all siblings linked
to the common parent earlier (in a one-sided heap that is exactly the list
suffix; in a stable heap the link order is recovered from audit stamps).
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .core import (
    AuditModeRequiredError,
    Counters,
    HeapError,
    LinkRecord,
    Node,
    Side,
    iter_children,
    is_leftmost_child,
)
from .heaps import (
    DecreaseKeyPolicy,
    Heap,
    HeapConfig,
    Linking,
    Placement,
    buffer_threshold,
)
from .pairing import PairingHeap, PairingMode

LOG2 = math.log2


# ---------------------------------------------------------------------------
# traversal and bulk measures

def iter_roots(h) -> Iterator[Node]:
    first = h.first_root
    if first is None:
        return
    cur = first
    while True:
        yield cur
        cur = cur.next
        if cur is first:
            return


def iter_subtree(root: Node, stable: bool) -> Iterator[Node]:
    stack = [root]
    while stack:
        n = stack.pop()
        yield n
        for c in iter_children(n, stable):
            stack.append(c)


def parent_of(x: Node, stable: bool) -> Node:
    """Parent of child ``x`` (walks left to the leftmost sibling if needed)."""
    cur = x
    while not is_leftmost_child(cur):
        if stable and cur.next is not None and cur.next.back is not cur:
            # cur is the rightmost child of a circular list: hop via leftmost
            return cur.next.back
        cur = cur.back
    return cur.back


def size(x: Node, stable: bool) -> int:
    """Number of descendants of ``x``, including itself."""
    return sum(1 for _ in iter_subtree(x, stable))


def mass(x: Node, stable: bool) -> int:
    """Subtree size of child ``x`` plus the sizes of all siblings linked to
    their common parent before ``x``.

    In a one-sided heap the link order equals the list order, so those are
    the siblings after ``x``.  In a stable heap the link order is a merge of
    left children (list order) and right children (reversed), recovered from
    audit stamps; without stamps the value is undefined.
    """
    if x.side == Side.NONE:
        raise HeapError("mass is defined for children, not roots")
    parent = parent_of(x, stable)
    sibs = list(iter_children(parent, stable))
    if stable:
        if any(s.stamp is None for s in sibs):
            raise AuditModeRequiredError(
                "stable-mode mass needs link stamps; enable audit mode")
        later = [s for s in sibs if s is not x and s.stamp < x.stamp]
    else:
        later = sibs[sibs.index(x) + 1:]
    total = size(x, stable)
    for s in later:
        total += size(s, stable)
    return total


@dataclass
class PotentialSnapshot:
    total: float
    per_node: dict
    mode: Optional[Linking]


def _tree_potential(root: Node, stable: bool, per_node: dict) -> float:
    order = []
    stack = [root]
    while stack:
        n = stack.pop()
        order.append(n)
        for c in iter_children(n, stable):
            stack.append(c)
    sizes = {}
    for n in reversed(order):
        s = 1
        for c in iter_children(n, stable):
            s += sizes[c]
        sizes[n] = s
    total = 2.0 + 2.0 * LOG2(sizes[root])
    per_node[root] = total
    for n in order:
        cs = list(iter_children(n, stable))
        if not cs:
            continue
        if stable:
            if any(c.stamp is None for c in cs):
                raise AuditModeRequiredError(
                    "stable-mode potential needs link stamps; enable audit mode")
            link_order = sorted(cs, key=lambda c: -c.stamp)
            masses = {}
            running = 0
            for c in reversed(link_order):
                running += sizes[c]
                masses[c] = running
            free = set()
            if cs[0].side == Side.LEFT:
                free.add(cs[0])
            if cs[-1].side == Side.RIGHT:
                free.add(cs[-1])
            for c in cs:
                p = 0.0 if c in free else LOG2(masses[c])
                per_node[c] = p
                total += p
        else:
            running = 0
            masses = {}
            for c in reversed(cs):
                running += sizes[c]
                masses[c] = running
            for i, c in enumerate(cs):
                p = 0.0 if i < 2 else LOG2(masses[c])
                per_node[c] = p
                total += p
    return total


def heap_potential(h: Heap) -> float:
    """Potential of one heap; requires an empty decrease-key buffer."""
    if h.buffer:
        raise HeapError("potential is undefined while the buffer is occupied")
    per: dict = {}
    stable = h.config.linking is Linking.STABLE
    total = 0.0
    for root in iter_roots(h):
        total += _tree_potential(root, stable, per)
    return total


def potential(heaps: Iterable[Heap]) -> PotentialSnapshot:
    """Total potential of a collection of heaps (sum over all their nodes)."""
    total = 0.0
    per: dict = {}
    mode: Optional[Linking] = None
    for h in heaps:
        if h.buffer:
            raise HeapError("potential is undefined while a buffer is occupied")
        if mode is None:
            mode = h.config.linking
        elif mode != h.config.linking:
            raise HeapError("mixed linking modes in one potential snapshot")
        stable = h.config.linking is Linking.STABLE
        for root in iter_roots(h):
            total += _tree_potential(root, stable, per)
    return PotentialSnapshot(total=total, per_node=per, mode=mode)


# ---------------------------------------------------------------------------
# link-trace checkers

def check_lemma1(trace: Iterable[LinkRecord]) -> bool:
    """True iff no node wins more than one left link and one right link."""
    seen = set()
    for rec in trace:
        tag = (id(rec.winner), rec.left)
        if tag in seen:
            return False
        seen.add(tag)
    return True


def brute_treap(nodes):
    """Reference treap over (list order, key order): the root is the
    rightmost minimum (equal keys favour the right node), recursing on the
    left and right sublists.  Returns (node, left, right) nests."""
    if not nodes:
        return None
    best = 0
    for i in range(1, len(nodes)):
        if not (nodes[best].key < nodes[i].key):
            best = i
    return (nodes[best], brute_treap(nodes[:best]), brute_treap(nodes[best + 1:]))


def tree_from_trace(root: Node, trace: Iterable[LinkRecord]):
    """Rebuild the binary tree a consolidation produced from its link trace:
    a left-link loser is the winner's (binary) left child, a right-link
    loser its right child."""
    left = {}
    right = {}
    for rec in trace:
        d = left if rec.left else right
        if rec.winner in d:
            return None  # a double win on one side: not a treap construction
        d[rec.winner] = rec.loser

    def build(n):
        if n is None:
            return None
        return (n, build(left.get(n)), build(right.get(n)))

    return build(root)


def check_treap_shape(nodes_in_order, trace, result_root: Node,
                      stable: bool, check_placement: bool = True) -> bool:
    """Does a consolidation's outcome match the reference treap?

    Shape is compared via the trace-rebuilt binary tree.  With
    ``check_placement`` (valid when the inputs were single nodes) the child
    lists are checked too: a stable winner holds [left-link loser,
    right-link loser] with matching side tags; a one-sided winner holds the
    later-won child first, and the left link always comes first, so the
    order is [right-link loser, left-link loser].
    """
    expected = brute_treap(list(nodes_in_order))
    actual = tree_from_trace(result_root, trace)
    if actual is None or expected != actual:
        return False
    if not check_placement:
        return True
    left = {}
    right = {}
    for rec in trace:
        (left if rec.left else right)[rec.winner] = rec.loser
    for n in nodes_in_order:
        cs = list(iter_children(n, stable))
        want = []
        l, r = left.get(n), right.get(n)
        if stable:
            if l is not None:
                want.append((l, Side.LEFT))
            if r is not None:
                want.append((r, Side.RIGHT))
        else:
            if r is not None:
                want.append((r, Side.RIGHT))
            if l is not None:
                want.append((l, Side.LEFT))
        if [(c, c.side) for c in cs] != want:
            return False
    return True


# ---------------------------------------------------------------------------
# reference priority queue

class OracleQueue:
    """Trivially correct priority queue: a heapq of (key, uid) with lazy
    invalidation, mirroring a heap under differential testing.

    ``delete_min`` removes and returns a minimum key.  With duplicate keys
    the entry it discards is arbitrary among the minima, so differential
    runners instead read ``min_key`` and remove the exact node the heap
    returned via ``delete(uid)``.
    """

    def __init__(self):
        self._heap: list = []
        self._keys: dict = {}

    def __len__(self) -> int:
        return len(self._keys)

    def insert(self, uid, key) -> None:
        assert uid not in self._keys
        self._keys[uid] = key
        heapq.heappush(self._heap, (key, uid))

    def decrease(self, uid, key) -> None:
        cur = self._keys[uid]
        assert not cur < key
        self._keys[uid] = key
        heapq.heappush(self._heap, (key, uid))

    def delete(self, uid) -> None:
        del self._keys[uid]

    def _settle(self):
        h = self._heap
        keys = self._keys
        while h:
            key, uid = h[0]
            if uid in keys and keys[uid] == key:
                return h[0]
            heapq.heappop(h)
        return None

    def min_key(self):
        top = self._settle()
        return None if top is None else top[0]

    def delete_min(self):
        top = self._settle()
        if top is None:
            raise IndexError("delete-min on an empty oracle queue")
        key, uid = heapq.heappop(self._heap)
        del self._keys[uid]
        return key

    def meld(self, other: "OracleQueue") -> "OracleQueue":
        self._heap.extend(other._heap)
        heapq.heapify(self._heap)
        self._keys.update(other._keys)
        other._heap = []
        other._keys = {}
        return self


# ---------------------------------------------------------------------------
# structure validation (test support)

def validate_heap(h, bootstrap: bool = False) -> None:
    """Assert the full structural contract of a heap; test support.

    Checks list well-formedness per list kind, back-handle consistency,
    heap order, side patterns, min pointers, node count, and the buffer
    discipline.  ``bootstrap`` skips the min-first head check for heaps
    built by ``from_root_sequence``.
    """
    is_pairing = isinstance(h, PairingHeap)
    stable = (not is_pairing) and h.config.linking is Linking.STABLE
    buffer = [] if is_pairing else h.buffer

    if h.min_root is None:
        assert h.first_root is None, "empty heap with a dangling first-root"
        assert not buffer, "buffer occupied while the root list is empty"
        assert h.size == 0, "empty root list but positive size"
        return

    limit = h.size + 2
    roots = []
    cur = h.first_root
    while True:
        roots.append(cur)
        assert cur.side == Side.NONE, f"listed root {cur!r} carries a side tag"
        assert cur.next.back is cur, "root list back handle out of sync"
        cur = cur.next
        assert len(roots) <= limit, "root list does not close"
        if cur is h.first_root:
            break
    assert h.min_root in roots, "min pointer not on the root list"
    for r in roots:
        assert not (r.key < h.min_root.key), "min pointer misses a smaller root"
    if not is_pairing and not bootstrap:
        if (h.config.placement is Placement.MIN_FIRST
                and h.config.decrease_key is DecreaseKeyPolicy.SIMPLE):
            assert h.first_root is h.min_root, "min-root must lead the list"
    if is_pairing and h.mode is PairingMode.CLASSIC_SINGLE_TREE:
        assert len(roots) == 1, "classic pairing heap must be a single tree"

    count = 0
    trees = list(roots)
    for b in buffer:
        assert b.buffered and b.side == Side.NONE, "buffered node mistagged"
        assert b.next is None and b.back is None, "buffered node still listed"
        trees.append(b)
    buffered_set = set(id(b) for b in buffer)
    for root in trees:
        stack = [root]
        while stack:
            n = stack.pop()
            count += 1
            assert count <= h.size, "more nodes reachable than size records"
            assert not n.dead, f"dead node {n!r} still reachable"
            if n is not root:
                assert not n.buffered, "buffered flag on an in-tree node"
            cs = list(iter_children(n, stable))
            if cs:
                if stable:
                    assert n.child is cs[-1], "child access must be rightmost"
                    seen_right = False
                    for c in cs:
                        if c.side == Side.RIGHT:
                            seen_right = True
                        else:
                            assert c.side == Side.LEFT, "child without a side"
                            assert not seen_right, "left child after a right one"
                else:
                    assert n.child is cs[0], "child access must be leftmost"
                prev = None
                for c in cs:
                    if prev is None:
                        assert c.back is n, "leftmost child must back onto parent"
                    else:
                        assert c.back is prev, "child back handle out of sync"
                    assert not (c.key < n.key), "heap order violated"
                    prev = c
                stack.extend(cs)
    assert count == h.size, f"size {h.size} but {count} nodes reachable"

    if buffer:
        bm = h.buffer_min
        assert bm in buffer, "buffer min not in the buffer"
        for b in buffer:
            assert not (b.key < bm.key), "buffer min misses a smaller entry"
        assert len(buffer) < buffer_threshold(h.size), "buffer over threshold"
    elif not is_pairing:
        assert h.buffer_min is None


# ---------------------------------------------------------------------------
# the amortized-cost auditor

@dataclass
class AuditRow:
    op: str
    n: int
    actual: float
    phi_before: float
    phi_after: float
    bound: float
    ok: bool

    @property
    def amortized(self) -> float:
        return self.actual + self.phi_after - self.phi_before


@dataclass
class AuditReport:
    mode: Linking
    rows: list = field(default_factory=list)
    slack: float = 1e-9

    @property
    def all_pass(self) -> bool:
        return all(r.ok for r in self.rows)

    def failures(self):
        return [r for r in self.rows if not r.ok]

    def summary(self) -> dict:
        agg: dict = {}
        for r in self.rows:
            a = agg.setdefault(r.op, {"count": 0, "max_amortized": -math.inf,
                                      "min_margin": math.inf, "fails": 0})
            a["count"] += 1
            a["max_amortized"] = max(a["max_amortized"], r.amortized)
            a["min_margin"] = min(a["min_margin"], r.bound - r.amortized)
            if not r.ok:
                a["fails"] += 1
        return agg

    def to_table(self) -> str:
        lines = [f"amortized audit ({self.mode.value} linking): "
                 f"{len(self.rows)} operations, "
                 f"{'all within bounds' if self.all_pass else 'BOUND VIOLATIONS'}"]
        lines.append(f"{'op':<10} {'count':>7} {'max amortized':>14} "
                     f"{'min margin':>11} {'fails':>6}")
        for op, a in sorted(self.summary().items()):
            lines.append(f"{op:<10} {a['count']:>7} {a['max_amortized']:>14.4f} "
                         f"{a['min_margin']:>11.4f} {a['fails']:>6}")
        return "\n".join(lines)

    def iter_csv_rows(self):
        yield ("op", "n", "actual", "phi_before", "phi_after",
               "amortized", "bound", "ok")
        for r in self.rows:
            yield (r.op, r.n, f"{r.actual:.6f}", f"{r.phi_before:.6f}",
                   f"{r.phi_after:.6f}", f"{r.amortized:.6f}",
                   f"{r.bound:.6f}", int(r.ok))


def random_script(num_ops: int, size_cap: int, seed: int,
                  include_decrease: bool = False, max_heaps: int = 4) -> list:
    """A random, always-valid operation script for the auditor.

    Keys are (value, tag) pairs, so they are pairwise distinct and the
    generator can track exactly which node each delete-min removes.  Ops:
    ("make",), ("insert", h, key, tag), ("find", h), ("delmin", h),
    ("meld", i, j), ("decrease", h, tag, key).
    """
    rng = random.Random(seed)
    script = [("make",)]
    sizes = [0]
    keys: dict = {}           # tag -> current key
    members: list = [set()]   # heap index -> set of live tags
    next_tag = 0

    def insert_op(i):
        nonlocal next_tag
        tag = next_tag
        next_tag += 1
        key = (rng.randrange(1 << 40), tag)
        keys[tag] = key
        members[i].add(tag)
        sizes[i] += 1
        script.append(("insert", i, key, tag))

    def delmin_op(i):
        victim = min(members[i], key=keys.__getitem__)
        members[i].remove(victim)
        del keys[victim]
        sizes[i] -= 1
        script.append(("delmin", i))

    for _ in range(num_ops - 1):
        r = rng.random()
        i = rng.randrange(len(sizes))
        if r < 0.50:
            if sizes[i] < size_cap:
                insert_op(i)
            elif sizes[i]:
                delmin_op(i)
        elif r < 0.83:
            if sizes[i]:
                delmin_op(i)
            elif sizes[i] < size_cap:
                insert_op(i)
        elif r < 0.88:
            script.append(("find", i))
        elif r < 0.94 and len(sizes) >= 2:
            j = rng.randrange(len(sizes))
            if i == j:
                j = (j + 1) % len(sizes)
            i, j = min(i, j), max(i, j)
            if sizes[i] + sizes[j] <= size_cap:
                sizes[i] += sizes.pop(j)
                members[i] |= members.pop(j)
                script.append(("meld", i, j))
        elif r < 0.97 and len(sizes) < max_heaps:
            sizes.append(0)
            members.append(set())
            script.append(("make",))
        elif include_decrease and members[i]:
            tag = rng.choice(sorted(members[i]))
            main, _ = keys[tag]
            key = (main - rng.randrange(1, 1 << 30), tag)
            keys[tag] = key
            script.append(("decrease", i, tag, key))
    return script


def audit_sequence(script, linking: Linking, *, slack: float = 1e-9,
                   reconcile_every: int = 500,
                   verify_insert_every: int = 64) -> AuditReport:
    """Replay a script, checking each operation's amortized cost bound.

    The collection potential is tracked incrementally (insert +2, meld and
    find-min 0; facts checked by tests and re-verified on every
    ``verify_insert_every``-th insert), recomputed from scratch for the
    touched heap on every delete-min and decrease-key, and reconciled
    against a full recomputation every ``reconcile_every`` operations and at
    the end.  A reconciliation mismatch raises: it means the auditor's own
    bookkeeping broke, not that a bound failed.
    """
    config = HeapConfig(linking=linking, audit=True)
    shared = Counters()
    coeff = 4.0 if linking is Linking.STABLE else 3.0
    stable = linking is Linking.STABLE
    report = AuditReport(mode=linking, slack=slack)
    heaps: list[Heap] = []
    phi: dict = {}
    nodes: dict = {}
    running = 0.0
    inserts = 0

    def reconcile():
        fresh = sum(heap_potential(h) for h in heaps)
        if abs(fresh - running) > 1e-6 + 1e-9 * abs(fresh):
            raise RuntimeError(
                f"potential bookkeeping drifted: running {running}, "
                f"recomputed {fresh}")
        return fresh

    for step, op in enumerate(script):
        kind = op[0]
        before = running
        if kind == "make":
            h = Heap(config, counters=shared)
            heaps.append(h)
            phi[h] = 0.0
            row = AuditRow("make", 0, 1.0, before, running, 1.0, True)
        elif kind == "insert":
            _, i, key, tag = op
            h = heaps[i]
            nodes[tag] = h.insert(key)
            inserts += 1
            if inserts % verify_insert_every == 0:
                fresh = heap_potential(h)
                if abs(fresh - (phi[h] + 2.0)) > 1e-9:
                    raise RuntimeError("insert did not raise the potential by 2")
            phi[h] += 2.0
            running += 2.0
            row = AuditRow("insert", h.size, 1.0, before, running, 3.0, True)
        elif kind == "find":
            _, i = op
            heaps[i].find_min()
            row = AuditRow("find-min", heaps[i].size, 1.0, before, running,
                           1.0, True)
        elif kind == "meld":
            _, i, j = op
            a, b = heaps[i], heaps[j]
            total = phi.pop(a) + phi.pop(b)
            surv = a.meld(b)
            heaps[i] = surv
            heaps.pop(j)
            phi[surv] = total
            row = AuditRow("meld", surv.size, 1.0, before, running, 1.0, True)
        elif kind == "delmin":
            _, i = op
            h = heaps[i]
            n = h.size
            links_before = shared.links
            h.delete_min()
            links = shared.links - links_before
            fresh = heap_potential(h)
            running += fresh - phi[h]
            phi[h] = fresh
            actual = 1.0 + links
            bound = 5.0 + coeff * LOG2(n)
            row = AuditRow("delete-min", n, actual, before, running, bound,
                           actual + running - before <= bound + slack)
        elif kind == "decrease":
            _, i, tag, key = op
            h = heaps[i]
            x = nodes[tag]
            sz = size(x, stable)
            h.decrease_key(x, key)
            fresh = heap_potential(h)
            running += fresh - phi[h]
            phi[h] = fresh
            bound = 3.0 + 2.0 * LOG2(sz)
            row = AuditRow("decrease-key", h.size, 1.0, before, running, bound,
                           1.0 + running - before <= bound + slack)
        else:
            raise ValueError(f"unsupported op in audit script: {kind!r}")
        report.rows.append(row)
        if reconcile_every and step % reconcile_every == reconcile_every - 1:
            reconcile()
    running = reconcile()
    return report


# ---------------------------------------------------------------------------
# packaged self-test (CLI `selftest`)

def selftest(verbose: bool = True, seed: int = 2024) -> bool:
    """Quick end-to-end checks: oracle differential run, treap shapes,
    one-left-one-right link discipline, and a small amortized audit."""
    from . import factory
    from .workloads import run_sorting
    from itertools import permutations, product

    ok = True

    def report(name, passed):
        nonlocal ok
        ok = ok and passed
        if verbose:
            print(f"[{'PASS' if passed else 'FAIL'}] {name}")

    # treap shapes, exhaustively on small inputs
    good = True
    from .heaps import treapify
    for stable in (False, True):
        for n in range(1, 7):
            for perm in permutations(range(1, n + 1)):
                good &= _treap_case(perm, stable)
            if not good:
                break
        for n in range(1, 6):
            for vals in product((1, 2, 3), repeat=n):
                good &= _treap_case(vals, stable)
    report("treapify matches the reference treap (exhaustive small cases)", good)

    # one-left-one-right link discipline over random delete-mins
    rng = random.Random(seed)
    good = True
    for kind in ("slim", "smooth"):
        for trial in range(40):
            h = factory.make_heap(kind, audit=True)
            for _ in range(rng.randrange(1, 200)):
                h.insert(rng.randrange(50))
            while len(h):
                h.delete_min()
                if not check_lemma1(h.last_delete_min_trace):
                    good = False
    report("delete-min wins at most one left and one right link per node", good)

    # differential run against the reference queue
    good = True
    for kind in ("slim", "smooth", "pairing", "pairing-classic", "pairing-pure"):
        if not _differential_run(kind, ops=4000, seed=seed):
            good = False
    report("delete-min key sequences match the reference queue", good)

    # sorting smoke test
    good = True
    for kind in ("slim", "smooth", "pairing"):
        for n in (1, 2, 10, 257):
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            run_sorting(kind, perm)
    report("sorting mode emits ascending output", good)

    # a small amortized audit in both modes
    good = True
    for linking in (Linking.ONE_SIDED, Linking.STABLE):
        script = random_script(1500, 256, seed)
        rep = audit_sequence(script, linking)
        good &= rep.all_pass
    report("amortized costs stay within the per-operation bounds", good)

    return ok


def _treap_case(keys, stable) -> bool:
    from .heaps import treapify
    from .core import AuditHooks
    nodes = [Node(k) for k in keys]
    counters = Counters()
    hooks = AuditHooks()
    root = treapify(nodes, stable, counters, hooks)
    if counters.links != len(nodes) - 1:
        return False
    if counters.comparisons > 2 * len(nodes):
        return False
    return check_treap_shape(nodes, hooks.trace, root, stable)


def _differential_run(kind: str, ops: int, seed: int) -> bool:
    """Random inserts/delete-mins/decreases/melds/deletes across several live
    heaps, checked against OracleQueue key for key."""
    from . import factory

    rng = random.Random(seed)
    heaps = [factory.make_heap(kind)]
    oracles = [OracleQueue()]
    live = [dict()]  # uid -> Node
    for _ in range(ops):
        i = rng.randrange(len(heaps))
        r = rng.random()
        if r < 0.45:
            key = rng.randrange(40)
            node = heaps[i].insert(key)
            oracles[i].insert(node.uid, key)
            live[i][node.uid] = node
        elif r < 0.75:
            if not len(heaps[i]):
                continue
            node = heaps[i].delete_min()
            want = oracles[i].min_key()
            if node.key != want:
                return False
            oracles[i].delete(node.uid)
            del live[i][node.uid]
        elif r < 0.85:
            if not live[i]:
                continue
            uid = rng.choice(list(live[i]))
            node = live[i][uid]
            key = node.key - rng.randrange(0, 10)
            heaps[i].decrease_key(node, key)
            oracles[i].decrease(uid, key)
        elif r < 0.92:
            if not live[i]:
                continue
            uid = rng.choice(list(live[i]))
            node = live[i][uid]
            heaps[i].delete(node)
            oracles[i].delete(uid)
            del live[i][uid]
        elif r < 0.96 and len(heaps) > 1:
            j = rng.randrange(len(heaps))
            if i == j:
                continue
            surv = heaps[i].meld(heaps[j])
            keep, drop = min(i, j), max(i, j)
            oracles[keep].meld(oracles[drop])
            merged = {**live[i], **live[j]}
            heaps[keep] = surv
            heaps.pop(drop)
            oracles.pop(drop)
            live[keep] = merged
            live.pop(drop)
        elif len(heaps) < 4:
            heaps.append(factory.make_heap(kind))
            oracles.append(OracleQueue())
            live.append(dict())
    # drain everything
    for i, h in enumerate(heaps):
        while len(h):
            node = h.delete_min()
            if node.key != oracles[i].min_key():
                return False
            oracles[i].delete(node.uid)
    return True
