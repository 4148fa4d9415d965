"""Pairing-heap baselines.

Three variants share one-sided linking:

* CLASSIC_SINGLE_TREE: the textbook pairing heap.  Insert and meld link
  eagerly, so outside of operations the heap is a single tree; delete-min
  removes the root and two-pass combines its children.
* MULTI_TREE: the benchmark variant.  Insert, meld and decrease-key are
  lazy (append to the end of the root list, floating min pointer);
  delete-min removes the min in place, splices its children there, and
  two-pass combines the whole root list.
* PURE: like MULTI_TREE but delete-min performs a single left-to-right
  pairing pass, so the heap may stay a forest; the new min is tracked
  during the pass (those comparisons are tallied separately).

In every variant each link does exactly one key comparison, so per
delete-min the comparison and link counts are equal.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from .core import (
    AuditHooks,
    Counters,
    EmptyHeapError,
    HeapError,
    IncompatibleHeapsError,
    KeyIncreaseError,
    NEG_INF,
    Node,
    Side,
    catenate_roots,
    cut_child,
    link_pair,
    make_sole_root,
    root_insert_before,
    splice_children_for_root_list,
)


class PairingMode(Enum):
    CLASSIC_SINGLE_TREE = "classic"
    MULTI_TREE = "multi"
    PURE = "pure"


def two_pass_chain(head: Node, counters: Counters,
                   hooks: Optional[AuditHooks] = None) -> Node:
    """Two-pass combining over an open root chain: pair adjacent roots left
    to right, then link the survivors right to left.  k roots cost exactly
    k-1 links and k-1 comparisons; ties go to the right node."""
    p = head
    tail = head
    while p is not None:
        q = p.next
        if q is None:
            tail = p
            break
        counters.comparisons += 1
        if p.key < q.key:
            nxt = q.next
            p.next = nxt
            if nxt is not None:
                nxt.back = p
            link_pair(p, q, False, False, counters, hooks)
            tail = p
            p = p.next
        else:
            prev = p.back
            q.back = prev
            if prev is not None:
                prev.next = q
            link_pair(q, p, True, False, counters, hooks)
            tail = q
            p = q.next
    cur = tail
    while cur.back is not None:
        u = cur.back
        counters.comparisons += 1
        if u.key < cur.key:
            u.next = None
            link_pair(u, cur, False, False, counters, hooks)
            cur = u
        else:
            prev = u.back
            cur.back = prev
            if prev is not None:
                prev.next = cur
            link_pair(cur, u, True, False, counters, hooks)
    return cur


def single_pass_chain(head: Node, counters: Counters,
                      hooks: Optional[AuditHooks] = None):
    """One pairing pass left to right; survivors remain a root chain.

    Returns (head, tail, min_node).  The running-minimum comparisons go to
    ``counters.min_comparisons`` so the links==comparisons identity of the
    pass itself stays visible.
    """
    p = head
    mn = None
    survivor = head
    while p is not None:
        q = p.next
        if q is None:
            survivor = p
        else:
            counters.comparisons += 1
            if p.key < q.key:
                nxt = q.next
                p.next = nxt
                if nxt is not None:
                    nxt.back = p
                link_pair(p, q, False, False, counters, hooks)
                survivor = p
            else:
                prev = p.back
                q.back = prev
                if prev is not None:
                    prev.next = q
                else:
                    head = q
                link_pair(q, p, True, False, counters, hooks)
                survivor = q
        survivor.side = Side.NONE  # spliced children keep root status here
        if mn is None:
            mn = survivor
        else:
            counters.min_comparisons += 1
            if survivor.key < mn.key:
                mn = survivor
        p = survivor.next
    return head, survivor, mn


class PairingHeap:
    """A pairing heap in one of three modes; see the module docstring."""

    __slots__ = ("mode", "counters", "min_root", "first_root", "size",
                 "hooks", "dead", "last_delete_min_trace")

    def __init__(self, mode: PairingMode = PairingMode.CLASSIC_SINGLE_TREE,
                 counters: Optional[Counters] = None, audit: bool = False):
        self.mode = mode
        self.counters = counters if counters is not None else Counters()
        self.min_root: Optional[Node] = None
        self.first_root: Optional[Node] = None
        self.size = 0
        self.hooks = AuditHooks() if audit else None
        self.dead = False
        self.last_delete_min_trace: Optional[list] = None

    def __len__(self) -> int:
        return self.size

    def find_min(self) -> Optional[Node]:
        return self.min_root

    # -- insertion / melding ------------------------------------------------

    def insert(self, key, item=None) -> Node:
        x = Node(key, item)
        self.size += 1
        root = self.min_root
        if root is None:
            make_sole_root(x)
            self.min_root = x
            self.first_root = x
            return x
        if self.mode is PairingMode.CLASSIC_SINGLE_TREE:
            self._eager_link_with_root_node(x)
        else:
            root_insert_before(self.first_root, x)  # end of the root list
            self.counters.comparisons += 1
            if x.key < root.key:
                self.min_root = x
        return x

    def meld(self, other: "PairingHeap") -> "PairingHeap":
        """Combine two heaps; the larger one's identity survives (ties keep
        the first argument), the other is consumed."""
        if other is self:
            raise HeapError("cannot meld a heap with itself")
        if self.dead or other.dead:
            raise HeapError("heap already consumed by a meld")
        if self.mode != other.mode:
            raise IncompatibleHeapsError(
                f"modes differ: {self.mode} vs {other.mode}")
        if self.size >= other.size:
            big, small = self, other
        else:
            big, small = other, self
        if small.size:
            if big.size == 0:
                big.min_root = small.min_root
                big.first_root = small.first_root
            elif big.mode is PairingMode.CLASSIC_SINGLE_TREE:
                sr = small.min_root
                sr.next = None
                sr.back = None
                big._eager_link_with_root_node(sr)
            else:
                catenate_roots(big.first_root, small.first_root)
                big.counters.comparisons += 1
                if small.min_root.key < big.min_root.key:
                    big.min_root = small.min_root
        big.size += small.size
        if big.hooks is not None and small.hooks is not None:
            big.hooks.clock = max(big.hooks.clock, small.hooks.clock)
        small.min_root = None
        small.first_root = None
        small.size = 0
        small.dead = True
        return big

    def _eager_link_with_root_node(self, x: Node) -> None:
        root = self.min_root
        self.counters.comparisons += 1
        if x.key < root.key:
            winner, loser = x, root
        else:
            winner, loser = root, x
        make_sole_root(winner)
        loser.next = None
        loser.back = None
        link_pair(winner, loser, True, False, self.counters, self.hooks)
        self.min_root = winner
        self.first_root = winner

    # -- delete-min -----------------------------------------------------------

    def delete_min(self) -> Node:
        if self.size == 0:
            raise EmptyHeapError("delete-min on an empty heap")
        x = self.min_root
        counters = self.counters
        hooks = self.hooks
        if hooks is not None:
            hooks.trace = []
            self.last_delete_min_trace = hooks.trace

        first = self.first_root
        last = first.back
        first.back = None
        last.next = None
        prev = x.back
        nxt = x.next
        x.next = None
        x.back = None
        head, tail = splice_children_for_root_list(x, False)
        if head is None:
            if prev is None:
                chain = nxt
                if nxt is not None:
                    nxt.back = None
            else:
                prev.next = nxt
                if nxt is not None:
                    nxt.back = prev
                chain = first
        else:
            if prev is None:
                chain = head
            else:
                prev.next = head
                head.back = prev
                chain = first
            tail.next = nxt
            if nxt is not None:
                nxt.back = tail

        x.dead = True
        x.side = Side.NONE
        self.size -= 1
        if chain is None:
            self.min_root = None
            self.first_root = None
            return x
        if self.mode is PairingMode.PURE:
            chain, chain_tail, mn = single_pass_chain(chain, counters, hooks)
            chain_tail.next = chain
            chain.back = chain_tail
            self.first_root = chain
            self.min_root = mn
        else:
            root = two_pass_chain(chain, counters, hooks)
            make_sole_root(root)
            self.min_root = root
            self.first_root = root
        return x

    # -- decrease-key / delete -------------------------------------------------

    def decrease_key(self, x: Node, key) -> None:
        if x.dead:
            raise HeapError("node no longer in a heap")
        if x.key < key:
            raise KeyIncreaseError(f"new key {key!r} above current {x.key!r}")
        x.key = key
        if x.side != Side.NONE:
            cut_child(x, False)
            x.side = Side.NONE
            if self.mode is PairingMode.CLASSIC_SINGLE_TREE:
                self._eager_link_with_root_node(x)
            else:
                root_insert_before(self.first_root, x)
                self.counters.comparisons += 1
                if x.key < self.min_root.key:
                    self.min_root = x
        elif x is not self.min_root:
            self.counters.comparisons += 1
            if x.key < self.min_root.key:
                self.min_root = x

    def delete(self, x: Node) -> None:
        """Remove node ``x``: decrease its key below everything, delete-min."""
        if x.dead:
            raise HeapError("node no longer in a heap")
        if x is self.min_root:
            self.delete_min()
            return
        original = x.key
        self.decrease_key(x, NEG_INF)
        y = self.delete_min()
        assert y is x, "minus-infinity sentinel must surface immediately"
        x.key = original

    # -- bootstrap for sorting mode ---------------------------------------------

    @classmethod
    def from_root_sequence(cls, keys, mode: PairingMode = PairingMode.MULTI_TREE,
                           counters: Optional[Counters] = None,
                           audit: bool = False):
        """Root list of fresh single-node roots in the given order, min
        pointer at the first strict minimum; no comparisons charged."""
        h = cls(mode, counters=counters, audit=audit)
        nodes = [Node(k) for k in keys]
        if nodes:
            prev = nodes[-1]
            for n in nodes:
                prev.next = n
                n.back = prev
                prev = n
            h.first_root = nodes[0]
            mn = nodes[0]
            for n in nodes[1:]:
                if n.key < mn.key:
                    mn = n
            h.min_root = mn
            h.size = len(nodes)
        return h, nodes
