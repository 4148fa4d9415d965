"""Node storage, circular list surgery, and the two linking primitives.

Every heap in this package is a forest of heap-ordered trees built from
intrusive nodes.  The root list is a circular doubly-linked list (``next``
runs rightward, ``back`` leftward; the first root's ``back`` is the last
root).  Child lists come in two flavours:

* one-sided lists (slim and pairing heaps): ``next`` is null-terminated,
  the parent's ``child`` handle is the *leftmost* child,
* stable lists (smooth heaps): ``next`` is circular, the parent's
  ``child`` handle is the *rightmost* child.

In both flavours a child's ``back`` is its previous sibling, except the
leftmost child whose ``back`` is the parent.  This makes removal of any
node, together with its subtree, a constant-time splice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterator, Optional


class Side(IntEnum):
    """Which kind of child a node is; NONE marks roots (listed or buffered)."""

    NONE = 0
    LEFT = 1
    RIGHT = 2


class Ordering(IntEnum):
    """Outcome of a positional comparison; ties never surface."""

    LESS = 0
    GREATER = 1


class HeapError(Exception):
    """Base class for heap usage errors."""


class EmptyHeapError(HeapError):
    """delete-min on an empty heap."""


class KeyIncreaseError(HeapError):
    """decrease-key called with a key above the node's current key."""


class IncompatibleHeapsError(HeapError):
    """meld of heaps with differing configurations."""


class AuditModeRequiredError(HeapError):
    """Operation needs link stamps that are only recorded in audit mode."""


class _NegInf:
    """Sentinel below every client key; used internally by delete()."""

    __slots__ = ()

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()

_uids = itertools.count()


class Node:
    """A heap item: key, intrusive list handles, and audit metadata."""

    __slots__ = ("key", "item", "next", "back", "child", "side", "stamp",
                 "uid", "dead", "buffered")

    def __init__(self, key, item=None):
        self.key = key
        self.item = item
        self.next: Optional[Node] = None
        self.back: Optional[Node] = None
        self.child: Optional[Node] = None
        self.side = Side.NONE
        self.stamp: Optional[int] = None
        self.uid = next(_uids)
        self.dead = False
        self.buffered = False

    def __repr__(self):
        return f"Node(key={self.key!r}, uid={self.uid})"


@dataclass
class Counters:
    """Tallies of key comparisons and links; monotone within a run.

    ``min_comparisons`` counts comparisons spent locating the new minimum
    root in forest-mode pairing heaps.  They are kept apart so the
    pairing-heap identity (comparisons == links per delete-min) stays
    checkable, and they are excluded from benchmark comparison counts.
    """

    comparisons: int = 0
    links: int = 0
    min_comparisons: int = 0

    def snapshot(self):
        return (self.comparisons, self.links, self.min_comparisons)


@dataclass
class LinkRecord:
    """One link event: winner gained ``loser`` as a child via a left/right link."""

    winner: Node
    loser: Node
    left: bool  # True if the loser was left of the winner


@dataclass
class AuditHooks:
    """Optional per-heap recording of link stamps and link traces."""

    clock: int = 0
    trace: list = field(default_factory=list)

    def tick(self) -> int:
        self.clock += 1
        return self.clock


def compare(a: Node, b: Node, a_is_left_of_b: bool, counters: Counters) -> Ordering:
    """Positionally tie-broken key comparison: on equal keys the right node wins.

    Returns LESS iff ``a`` wins (strictly smaller key, or equal keys with
    ``a`` on the right).  Counts one comparison.
    """
    counters.comparisons += 1
    if a.key < b.key:
        return Ordering.LESS
    if b.key < a.key:
        return Ordering.GREATER
    return Ordering.GREATER if a_is_left_of_b else Ordering.LESS


# ---------------------------------------------------------------------------
# child lists

def push_front_child(parent: Node, x: Node, stable: bool) -> None:
    """Make ``x`` the new leftmost child of ``parent``."""
    if stable:
        rm = parent.child
        if rm is None:
            x.next = x
            x.back = parent
            parent.child = x
        else:
            lm = rm.next
            rm.next = x
            x.next = lm
            x.back = parent
            lm.back = x
    else:
        lm = parent.child
        x.next = lm
        x.back = parent
        if lm is not None:
            lm.back = x
        parent.child = x


def push_back_child(parent: Node, x: Node) -> None:
    """Make ``x`` the new rightmost child of ``parent`` (stable lists only)."""
    rm = parent.child
    if rm is None:
        x.next = x
        x.back = parent
        parent.child = x
    else:
        lm = rm.next
        rm.next = x
        x.next = lm
        x.back = rm
        parent.child = x


def child_first(parent: Node, stable: bool) -> Optional[Node]:
    """Leftmost child of ``parent``, or None."""
    c = parent.child
    if c is None:
        return None
    return c.next if stable else c


def is_leftmost_child(x: Node) -> bool:
    """True iff ``x``'s back handle points at its parent rather than a sibling."""
    return x.back is not None and x.back.next is not x


def parent_of_child(x: Node, stable: bool) -> Node:
    """Parent of child ``x``; O(1) through the leftmost child's back handle."""
    if is_leftmost_child(x):
        return x.back
    if stable:
        # rightmost child of a circular list: hop to the leftmost, then up
        if x.next is not None and x.next.back is not x:
            return x.next.back
    cur = x
    while not is_leftmost_child(cur):
        cur = cur.back
    return cur.back


def cut_child(x: Node, stable: bool) -> None:
    """Splice child ``x`` (with its subtree) out of its sibling list; O(1)."""
    if stable:
        if x.next is x:  # sole child
            parent = x.back
            parent.child = None
        elif is_leftmost_child(x):
            parent = x.back
            nxt = x.next
            rm = parent.child
            rm.next = nxt
            nxt.back = parent
        elif x.next.back is not x:  # x is rightmost: x.next is the leftmost
            lm = x.next
            parent = lm.back
            prev = x.back
            prev.next = lm
            parent.child = prev
        else:
            prev = x.back
            nxt = x.next
            prev.next = nxt
            nxt.back = prev
    else:
        if is_leftmost_child(x):
            parent = x.back
            nxt = x.next
            parent.child = nxt
            if nxt is not None:
                nxt.back = parent
        else:
            prev = x.back
            nxt = x.next
            prev.next = nxt
            if nxt is not None:
                nxt.back = prev
    x.next = None
    x.back = None


def iter_children(parent: Node, stable: bool) -> Iterator[Node]:
    """Children of ``parent`` in left-to-right list order."""
    if parent.child is None:
        return
    if stable:
        rm = parent.child
        cur = rm.next
        while True:
            yield cur
            if cur is rm:
                return
            cur = cur.next
    else:
        cur = parent.child
        while cur is not None:
            yield cur
            cur = cur.next


# ---------------------------------------------------------------------------
# root list (circular doubly-linked in next/back)

def make_sole_root(x: Node) -> None:
    x.next = x
    x.back = x
    x.side = Side.NONE


def root_insert_after(anchor: Node, x: Node) -> None:
    nxt = anchor.next
    anchor.next = x
    x.back = anchor
    x.next = nxt
    nxt.back = x
    x.side = Side.NONE


def root_insert_before(anchor: Node, x: Node) -> None:
    root_insert_after(anchor.back, x)


def cut_root(x: Node) -> Optional[Node]:
    """Remove root ``x`` from its circular list; returns its old right neighbour
    (None if ``x`` was the only root)."""
    if x.next is x:
        x.next = None
        x.back = None
        return None
    prev = x.back
    nxt = x.next
    prev.next = nxt
    nxt.back = prev
    x.next = None
    x.back = None
    return nxt


def catenate_roots(a: Node, b: Node) -> None:
    """Splice circular root list ``b`` after the end of ``a``'s list; O(1)."""
    a_tail = a.back
    b_tail = b.back
    a_tail.next = b
    b.back = a_tail
    b_tail.next = a
    a.back = b_tail


# ---------------------------------------------------------------------------
# linking

def link_pair(winner: Node, loser: Node, left: bool, stable: bool,
              counters: Counters, hooks: Optional[AuditHooks] = None) -> None:
    """Attach ``loser`` (already detached) as a new child of ``winner``.

    ``left`` says whether the loser sat left of the winner: a stable left
    link adds the loser as the leftmost child, a stable right link as the
    rightmost; one-sided links always add on the left.  Counts one link.
    """
    counters.links += 1
    loser.side = Side.LEFT if left else Side.RIGHT
    if stable and not left:
        push_back_child(winner, loser)
    else:
        push_front_child(winner, loser, stable)
    if hooks is not None:
        loser.stamp = hooks.tick()
        hooks.trace.append(LinkRecord(winner, loser, left))


def _detach_adjacent_loser(loser: Node, stable: bool) -> None:
    if loser.side == Side.NONE:
        cut_root(loser)
    else:
        cut_child(loser, stable)


def link_one_sided(left: Node, right: Node, counters: Counters,
                   hooks: Optional[AuditHooks] = None) -> Node:
    """Link two adjacent nodes one-sidedly; the loser becomes the winner's
    new leftmost child.  Returns the winner (ties go to the right node)."""
    assert left.next is right, "nodes must be adjacent, left immediately left of right"
    if compare(left, right, True, counters) is Ordering.LESS:
        winner, loser, was_left = left, right, False
    else:
        winner, loser, was_left = right, left, True
    _detach_adjacent_loser(loser, stable=False)
    link_pair(winner, loser, was_left, False, counters, hooks)
    return winner


def link_stable(left: Node, right: Node, counters: Counters,
                hooks: Optional[AuditHooks] = None) -> Node:
    """Link two adjacent nodes stably, preserving left-to-right order: a
    left-link loser becomes the leftmost child, a right-link loser the
    rightmost.  Returns the winner."""
    assert left.next is right, "nodes must be adjacent, left immediately left of right"
    if compare(left, right, True, counters) is Ordering.LESS:
        winner, loser, was_left = left, right, False
    else:
        winner, loser, was_left = right, left, True
    _detach_adjacent_loser(loser, stable=True)
    link_pair(winner, loser, was_left, True, counters, hooks)
    return winner


def cut_from_list(x: Node, stable: bool) -> None:
    """Remove ``x`` (with its subtree) from whichever list holds it; O(1).

    Callers that track list heads (heaps) must repair their own handles.
    """
    if x.side == Side.NONE:
        cut_root(x)
    else:
        cut_child(x, stable)


def replace_root(x: Node, y: Node) -> None:
    """Put detached node ``y`` exactly where root ``x`` sits; ``x`` comes out
    detached.  Callers fix their own head/min handles."""
    if x.next is x:
        make_sole_root(y)
    else:
        prev = x.back
        nxt = x.next
        prev.next = y
        y.back = prev
        y.next = nxt
        nxt.back = y
        y.side = Side.NONE
    x.next = None
    x.back = None


def replace_child(x: Node, y: Node, stable: bool) -> None:
    """Put detached node ``y`` exactly where child ``x`` sits, inheriting its
    side tag; ``x`` comes out detached."""
    y.side = x.side
    if stable:
        if x.next is x:  # sole child
            parent = x.back
            y.next = y
            y.back = parent
            parent.child = y
        elif is_leftmost_child(x):
            parent = x.back
            nxt = x.next
            rm = parent.child
            rm.next = y
            y.next = nxt
            y.back = parent
            nxt.back = y
        elif x.next.back is not x:  # x is rightmost: x.next is the leftmost
            lm = x.next
            parent = lm.back
            prev = x.back
            prev.next = y
            y.back = prev
            y.next = lm
            parent.child = y
        else:
            prev = x.back
            nxt = x.next
            prev.next = y
            y.back = prev
            y.next = nxt
            nxt.back = y
    else:
        if is_leftmost_child(x):
            parent = x.back
            nxt = x.next
            parent.child = y
            y.back = parent
            y.next = nxt
            if nxt is not None:
                nxt.back = y
        else:
            prev = x.back
            nxt = x.next
            prev.next = y
            y.back = prev
            y.next = nxt
            if nxt is not None:
                nxt.back = y
    x.next = None
    x.back = None


def replace_child_with_chain(x: Node, head: Optional[Node],
                             tail: Optional[Node], stable: bool) -> None:
    """Replace child ``x`` by an open chain [head..tail] of detached nodes
    that already carry their side tags; an empty chain is a plain cut."""
    if head is None:
        cut_child(x, stable)
        return
    if stable:
        if x.next is x:  # sole child: the chain becomes the whole list
            parent = x.back
            parent.child = tail
            head.back = parent
            tail.next = head
        elif is_leftmost_child(x):
            parent = x.back
            nxt = x.next
            rm = parent.child
            rm.next = head
            head.back = parent
            tail.next = nxt
            nxt.back = tail
        elif x.next.back is not x:  # x is rightmost
            lm = x.next
            parent = lm.back
            prev = x.back
            prev.next = head
            head.back = prev
            tail.next = lm
            parent.child = tail
        else:
            prev = x.back
            nxt = x.next
            prev.next = head
            head.back = prev
            tail.next = nxt
            nxt.back = tail
    else:
        if is_leftmost_child(x):
            parent = x.back
            nxt = x.next
            parent.child = head
            head.back = parent
            tail.next = nxt
            if nxt is not None:
                nxt.back = tail
        else:
            prev = x.back
            nxt = x.next
            prev.next = head
            head.back = prev
            tail.next = nxt
            if nxt is not None:
                nxt.back = tail
    x.next = None
    x.back = None


def splice_children_for_root_list(x: Node, stable: bool):
    """Detach ``x``'s child list and return it as an open chain (head, tail)
    ready to occupy a root-list position.  Returns (None, None) if childless.

    Side tags are not rewritten here: every spliced node either loses a link
    (side reassigned then) or survives as the single root (side set by the
    caller).  Callers splicing into a *sibling* list must assign sides.
    """
    acc = x.child
    if acc is None:
        return None, None
    x.child = None
    if stable:
        head = acc.next
        acc.next = None
        tail = acc
    else:
        head = acc
        tail = head
        while tail.next is not None:
            tail = tail.next
    head.back = None
    return head, tail


def chain_of(nodes) -> Optional[Node]:
    """Wire detached nodes into an open next/back chain; returns the head."""
    prev = None
    head = None
    for n in nodes:
        n.back = prev
        n.next = None
        if prev is None:
            head = n
        else:
            prev.next = n
        prev = n
    return head
