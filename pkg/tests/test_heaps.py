"""Smooth/slim heap operations: the full API surface and its invariants."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heaplab import (
    Counters,
    DecreaseKeyPolicy,
    DeletePolicy,
    Heap,
    HeapConfig,
    IncompatibleHeapsError,
    KeyIncreaseError,
    Linking,
    Node,
    OracleQueue,
    Side,
    buffer_threshold,
    make_heap,
    treapify,
    validate_heap,
)
from heaplab.core import AuditHooks, iter_children
from heaplab.analysis import iter_roots


def root_keys(h):
    return [r.key for r in iter_roots(h)]


def kids(node, stable):
    return [c.key for c in iter_children(node, stable)]


def cfg(**kw):
    return HeapConfig(**kw)


SLIM = cfg(linking=Linking.ONE_SIDED)
SMOOTH = cfg(linking=Linking.STABLE)


class TestMakeFindInsert:
    def test_empty_heap(self):
        h = Heap(SLIM)
        assert h.find_min() is None
        assert len(h) == 0

    def test_insert_then_find(self):
        h = Heap(SMOOTH)
        h.insert(5)
        assert h.find_min().key == 5

    def test_insert_smaller_goes_first(self):
        h = Heap(SLIM)
        h.insert(3)
        h.insert(2)
        assert root_keys(h)[:2] == [2, 3]
        assert h.find_min().key == 2

    def test_insert_larger_goes_second(self):
        h = Heap(SLIM)
        h.insert(3)
        h.insert(5)
        assert root_keys(h)[:2] == [3, 5]

    def test_insert_does_no_links_and_one_comparison(self):
        h = Heap(SLIM)
        h.insert(3)
        base = h.counters.snapshot()
        h.insert(7)
        assert h.counters.links == base[1]
        assert h.counters.comparisons - base[0] <= 2

    def test_insert_into_empty_then_find(self):
        h = Heap(SLIM)
        x = h.insert(5)
        assert h.find_min() is x


class TestMeld:
    def test_min_of_melded(self):
        a, b = Heap(SLIM), Heap(SLIM)
        a.insert(2)
        b.insert(7)
        m = a.meld(b)
        assert m.find_min().key == 2
        assert len(m) == 2

    def test_meld_with_empty_is_identity(self):
        a, b = Heap(SLIM), Heap(SLIM)
        for k in (4, 9):
            a.insert(k)
        before = root_keys(a)
        m = a.meld(b)
        assert root_keys(m) == before

    def test_meld_rejects_config_mismatch(self):
        with pytest.raises(IncompatibleHeapsError):
            Heap(SLIM).meld(Heap(SMOOTH))

    def test_meld_zero_links_few_comparisons(self):
        a, b = Heap(SLIM), Heap(SLIM)
        a.insert(1)
        b.insert(2)
        links = a.counters.links + b.counters.links
        comps = a.counters.comparisons + b.counters.comparisons
        m = a.meld(b)
        assert m.counters.links == links
        assert m.counters.comparisons - comps <= 2

    def test_buffered_meld_flushes_smaller_side(self):
        config = cfg(decrease_key=DecreaseKeyPolicy.BUFFERED)
        big, small = Heap(config), Heap(config)
        for k in range(10, 120):
            big.insert(k)
        for k in (200, 201, 202, 203, 204):
            small.insert(k)
        big.decrease_key(self._any_child(big), 9)
        small.decrease_key(self._any_child(small), 4)
        assert len(big.buffer) == 1 and len(small.buffer) == 1
        buffered_key = big.buffer[0].key
        m = big.meld(small)
        assert m is big
        assert [n.key for n in m.buffer] == [buffered_key]
        assert m.find_min().key == 4  # the flushed root joined the root list
        validate_heap(m)

    @staticmethod
    def _any_child(h):
        h.delete_min()  # consolidate so children exist
        return next(iter_children(h.min_root, False))


class TestTreapify:
    def run(self, keys, stable):
        nodes = [Node(k) for k in keys]
        counters = Counters()
        hooks = AuditHooks()
        root = treapify(nodes, stable, counters, hooks)
        return root, counters, hooks

    def test_single_root_no_links(self):
        root, counters, _ = self.run([5], False)
        assert root.key == 5 and counters.links == 0

    def test_example_one_sided(self):
        root, counters, _ = self.run([3, 1, 2], False)
        assert root.key == 1
        assert kids(root, False) == [2, 3]
        assert counters.links == 2

    def test_example_stable(self):
        root, counters, _ = self.run([3, 1, 2], True)
        assert root.key == 1
        assert kids(root, True) == [3, 2]
        sides = [c.side for c in iter_children(root, True)]
        assert sides == [Side.LEFT, Side.RIGHT]

    def test_eight_roots_scenario(self):
        # list order a..h with key ranks e<a<g<c<b<d<f<h
        ranks = {"a": 2, "b": 5, "c": 4, "d": 6, "e": 1, "f": 7, "g": 3, "h": 8}
        names = "abcdefgh"
        nodes = [Node(ranks[ch], item=ch) for ch in names]
        counters = Counters()
        root = treapify(nodes, True, counters, AuditHooks())
        by_name = {n.item: n for n in nodes}

        def child_names(name):
            return sorted(c.item for c in iter_children(by_name[name], True))

        assert root.item == "e"
        assert child_names("e") == ["a", "g"]
        assert child_names("a") == ["c"]
        assert child_names("c") == ["b", "d"]
        assert child_names("g") == ["f", "h"]
        assert counters.links == 7

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            treapify([], False, Counters())

    @pytest.mark.parametrize("stable", [False, True])
    def test_links_exact_and_comparison_cap(self, stable):
        rng = random.Random(5)
        for trial in range(50):
            k = rng.randrange(1, 40)
            keys = [rng.randrange(10) for _ in range(k)]
            _, counters, _ = self.run(keys, stable)
            assert counters.links == k - 1
            assert counters.comparisons <= 2 * k


class TestDeleteMin:
    def test_spec_sequence(self):
        h = Heap(SLIM)
        for k in (3, 1, 2):
            h.insert(k)
        assert root_keys(h) == [1, 2, 3]
        x = h.delete_min()
        assert x.key == 1
        assert root_keys(h) == [2]
        assert kids(h.min_root, False) == [3]

    def test_singleton(self):
        h = Heap(SMOOTH)
        h.insert(9)
        assert h.delete_min().key == 9
        assert h.find_min() is None and len(h) == 0

    def test_children_precede_old_roots(self):
        h = Heap(HeapConfig(linking=Linking.ONE_SIDED, audit=True))
        for k in (5, 1, 6, 2, 7, 3):
            h.insert(k)
        h.delete_min()          # leaves one tree
        h.insert(10)            # old root (second position)
        x = h.delete_min()      # children of the tree + old root 10
        assert x.key == 2
        validate_heap(h)

    def test_empty_raises(self):
        from heaplab import EmptyHeapError
        with pytest.raises(EmptyHeapError):
            Heap(SLIM).delete_min()


class TestDecreaseKeySimple:
    def test_non_root_becomes_min(self):
        h = Heap(SLIM)
        nodes = {k: h.insert(k) for k in (2, 9, 5)}
        h.delete_min()  # consolidates; 9 and/or 5 below the new root
        target = nodes[9]
        h.decrease_key(target, 1)
        assert h.find_min() is target
        validate_heap(h)

    def test_root_key_update_only(self):
        h = Heap(SLIM)
        h.insert(9)
        h.insert(12)
        x = h.min_root
        links = h.counters.links
        h.decrease_key(x, 1)
        assert h.counters.links == links
        assert h.find_min() is x

    def test_equal_key_allowed(self):
        h = Heap(SLIM)
        x = h.insert(4)
        h.decrease_key(x, 4)
        assert h.find_min() is x

    def test_increase_rejected(self):
        h = Heap(SLIM)
        x = h.insert(4)
        with pytest.raises(KeyIncreaseError):
            h.decrease_key(x, 5)

    def test_zero_links(self):
        h = Heap(SMOOTH)
        for k in range(20):
            h.insert(k)
        h.delete_min()
        links = h.counters.links
        node = next(iter_children(h.min_root, True))
        h.decrease_key(node, -5)
        assert h.counters.links == links


def buffered_cfg(linking=Linking.ONE_SIDED):
    return HeapConfig(linking=linking, decrease_key=DecreaseKeyPolicy.BUFFERED)


class TestDecreaseKeyBuffered:
    def build_star(self, child_keys, linking=Linking.ONE_SIDED):
        """One tree: root 0 with the given children (as single nodes)."""
        h = Heap(buffered_cfg(linking))
        h.insert(0)
        nodes = [h.insert(k) for k in child_keys]
        h.insert(-1)
        h.delete_min()  # consolidate into a single tree rooted at 0
        return h, {n.key: n for n in nodes}

    def test_leftmost_child_takes_the_vacated_spot(self):
        # chain 1 -> 5 -> 7 -> 8: decreasing 7 cuts it, and its leftmost
        # child 8 takes its place under 5; 7 moves to the buffer
        h = Heap(buffered_cfg())
        h.insert(1)
        x = h.insert(5)
        y = h.insert(7)
        h.insert(8)
        h.insert(0)
        h.delete_min()  # ascending list folds into the chain 1{5{7{8}}}
        assert kids(x, False) == [7]
        h.decrease_key(y, 2)
        assert y.buffered and y in h.buffer
        assert kids(x, False) == [8]
        assert kids(y, False) == []
        validate_heap(h)

    def test_childless_non_root_cut_plainly(self):
        h2 = Heap(buffered_cfg())
        nodes = [h2.insert(k) for k in (1, 5, 7, 8)]
        h2.insert(0)
        h2.delete_min()
        leaf = nodes[3]  # key 8, deepest in the chain
        h2.decrease_key(leaf, 6)
        assert leaf in h2.buffer
        assert kids(nodes[2], False) == []
        validate_heap(h2)

    def test_root_decrease_skips_buffer(self):
        h = Heap(buffered_cfg())
        h.insert(9)
        h.insert(12)
        x = h.min_root
        h.decrease_key(x, 3)
        assert not h.buffer
        assert h.find_min() is x

    def test_buffer_bound_holds(self):
        rng = random.Random(3)
        h = Heap(buffered_cfg())
        nodes = []
        for k in range(200):
            nodes.append(h.insert(rng.randrange(1000)))
        h.delete_min()
        nodes = [n for n in nodes if not n.dead]
        for _ in range(150):
            n = rng.choice(nodes)
            if n.dead:
                continue
            h.decrease_key(n, n.key - rng.randrange(5))
            assert len(h.buffer) < buffer_threshold(len(h))
            assert h.find_min().key == min(x.key for x in nodes if not x.dead)
        validate_heap(h)

    def test_flush_builds_left_chain(self):
        h = Heap(HeapConfig(decrease_key=DecreaseKeyPolicy.BUFFERED, audit=True))
        nodes = {k: h.insert(k) for k in range(100, 117)}
        h.delete_min()  # 16 nodes remain: buffer threshold is 4
        assert buffer_threshold(len(h)) == 4
        h.decrease_key(nodes[108], 7)
        h.decrease_key(nodes[112], 2)
        h.decrease_key(nodes[110], 5)
        assert [n.key for n in h.buffer] == [7, 2, 5]
        links_before = h.counters.links
        h._empty_buffer()
        # sorted non-increasing [7, 5, 2]: two left links form a chain where
        # each root is the leftmost child of the next-smaller one
        assert h.counters.links - links_before == 2
        assert all(rec.left for rec in h.last_buffer_trace)
        assert kids(nodes[112], False)[0] == 5
        assert kids(nodes[110], False)[0] == 7
        assert not h.buffer and h.buffer_min is None
        validate_heap(h)

    def test_flush_singleton_zero_links(self):
        h = Heap(buffered_cfg())
        nodes = [h.insert(k) for k in (1, 4, 9)]
        h.insert(0)
        h.delete_min()
        h.decrease_key(nodes[2], 4)
        links = h.counters.links
        h._empty_buffer()
        assert h.counters.links == links
        assert not h.buffer and h.buffer_min is None

    def test_flush_empty_noop(self):
        h = Heap(buffered_cfg())
        h._empty_buffer()
        assert not h.buffer

    def test_find_min_prefers_buffer_when_smaller(self):
        h = Heap(buffered_cfg())
        nodes = [h.insert(k) for k in (10, 30, 40, 50, 60, 70, 80, 90)]
        h.insert(5)
        h.delete_min()
        child = next(n for n in nodes if n.side != Side.NONE)
        h.decrease_key(child, 1)
        assert h.find_min() is child


class TestDeletePolicies:
    def build(self, policy, linking=Linking.ONE_SIDED, audit=False):
        return Heap(HeapConfig(linking=linking, delete_policy=policy,
                               audit=audit))

    @pytest.mark.parametrize("policy", list(DeletePolicy))
    def test_min_root_goes_through_delete_min(self, policy):
        h = self.build(policy)
        for k in (4, 1, 3):
            h.insert(k)
        h.delete(h.find_min())
        assert h.find_min().key == 3
        assert len(h) == 2
        validate_heap(h)

    def test_eager_root_replaced_by_consolidated_child(self):
        # root x (key 1) with children keyed [3, 1, 2]; delete(x) must leave
        # the treapified child root (the rightmost 1) in x's list position
        import heaplab.core as core
        h = self.build(DeletePolicy.EAGER_LINK_CHILDREN)
        h.insert(0)
        x = h.insert(1)
        for k in (2, 1, 3):
            core.push_front_child(x, Node(k), False)
        h.size += 3
        assert kids(x, False) == [3, 1, 2]
        h.delete(x)
        assert root_keys(h) == [0, 1]
        replacement = list(iter_roots(h))[1]
        assert replacement is not x
        assert kids(replacement, False) == [2, 3]
        assert len(h) == 4
        validate_heap(h)

    def test_lazy_root_splices_children_into_root_list(self):
        # root x with children [a, b, c] and another root r: deleting x
        # lazily leaves [a, b, c, r] in place of x
        import heaplab.core as core
        h = self.build(DeletePolicy.LAZY_SPLICE)
        h.insert(0)
        x = h.insert(1)
        for k in (4, 3, 2):
            core.push_front_child(x, Node(k), False)
        h.size += 3
        assert kids(x, False) == [2, 3, 4]
        h.delete(x)
        assert root_keys(h) == [0, 2, 3, 4]
        validate_heap(h)

    def test_lazy_non_root_splices_children_in_place(self):
        h = self.build(DeletePolicy.LAZY_SPLICE)
        # build chain 0 -> 5 -> 7 -> 9 then delete 7: children [9] splice up
        nodes = [h.insert(k) for k in (5, 7, 9)]
        h.insert(0)
        h.insert(-1)
        h.delete_min()
        h.delete(nodes[1])
        assert kids(nodes[0], False) == [9]
        assert len(h) == 3
        validate_heap(h)

    @pytest.mark.parametrize("policy", list(DeletePolicy))
    @pytest.mark.parametrize("linking", list(Linking))
    def test_randomized_against_oracle(self, policy, linking):
        rng = random.Random(hash((policy.value, linking.value)) & 0xFFFF)
        h = Heap(HeapConfig(linking=linking, delete_policy=policy))
        oracle = OracleQueue()
        live = {}
        for step in range(800):
            r = rng.random()
            if r < 0.5 or not live:
                k = rng.randrange(60)
                n = h.insert(k)
                oracle.insert(n.uid, k)
                live[n.uid] = n
            elif r < 0.75:
                n = h.delete_min()
                assert n.key == oracle.min_key()
                oracle.delete(n.uid)
                del live[n.uid]
            else:
                uid = rng.choice(list(live))
                h.delete(live[uid])
                oracle.delete(uid)
                del live[uid]
            assert len(h) == len(oracle)
        validate_heap(h)


def inorder_read(h):
    """Left-to-right node order: trees in root-list order, each read as
    left children, node, right children (recursively)."""
    out = []

    def read(n):
        left = [c for c in iter_children(n, True) if c.side == Side.LEFT]
        right = [c for c in iter_children(n, True) if c.side == Side.RIGHT]
        for c in left:
            read(c)
        out.append(n)
        for c in right:
            read(c)

    for r in iter_roots(h):
        read(r)
    return out


class TestStableOrderPreservation:
    def test_single_stable_link_keeps_order(self):
        from heaplab.core import link_stable
        rng = random.Random(11)
        for trial in range(30):
            h = Heap(SMOOTH)
            for _ in range(rng.randrange(2, 30)):
                h.insert(rng.randrange(100))
            if rng.random() < 0.7 and len(h) > 2:
                h.delete_min()
                h.insert(rng.randrange(100))
                h.insert(rng.randrange(100))
            before = inorder_read(h)
            roots = list(iter_roots(h))
            if len(roots) < 2:
                continue
            i = rng.randrange(len(roots) - 1)
            winner = link_stable(roots[i], roots[i + 1], h.counters)
            if h.min_root in (roots[i], roots[i + 1]):
                h.min_root = winner
                h.first_root = winner
            after = inorder_read(h)
            assert [n.uid for n in before] == [n.uid for n in after]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from("ids"), min_size=1, max_size=120),
       st.booleans(), st.booleans())
def test_random_ops_match_oracle_and_validate(ops, stable, buffered):
    """Heap state stays structurally sound and answer-equivalent under
    random insert/delete-min/decrease-key sequences."""
    rng = random.Random(1234)
    h = Heap(HeapConfig(
        linking=Linking.STABLE if stable else Linking.ONE_SIDED,
        decrease_key=DecreaseKeyPolicy.BUFFERED if buffered
        else DecreaseKeyPolicy.SIMPLE,
        audit=not buffered))
    oracle = OracleQueue()
    live = {}
    for op in ops:
        if op == "i" or not live:
            k = rng.randrange(30)
            n = h.insert(k)
            oracle.insert(n.uid, k)
            live[n.uid] = n
        elif op == "d":
            n = h.delete_min()
            assert n.key == oracle.min_key()
            oracle.delete(n.uid)
            del live[n.uid]
        else:
            uid = rng.choice(list(live))
            n = live[uid]
            k = n.key - rng.randrange(4)
            h.decrease_key(n, k)
            oracle.decrease(uid, k)
    validate_heap(h)
    while len(h):
        n = h.delete_min()
        assert n.key == oracle.min_key()
        oracle.delete(n.uid)
