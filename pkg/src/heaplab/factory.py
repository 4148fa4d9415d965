"""Heap construction by name; the single entry point the runners and CLI use."""

from __future__ import annotations

from typing import Optional

from .core import Counters
from .heaps import (
    DecreaseKeyPolicy,
    DeletePolicy,
    Heap,
    HeapConfig,
    Linking,
    Placement,
)
from .pairing import PairingHeap, PairingMode

HEAP_KINDS = ("smooth", "slim", "pairing", "pairing-classic", "pairing-pure")

_PAIRING_MODES = {
    "pairing": PairingMode.MULTI_TREE,
    "pairing-multi": PairingMode.MULTI_TREE,
    "pairing-classic": PairingMode.CLASSIC_SINGLE_TREE,
    "pairing-pure": PairingMode.PURE,
}


def make_heap(kind: str, counters: Optional[Counters] = None, *,
              decrease_key: DecreaseKeyPolicy = DecreaseKeyPolicy.SIMPLE,
              delete_policy: DeletePolicy = DeletePolicy.VIA_DECREASE_KEY,
              placement: Placement = Placement.MIN_FIRST,
              audit: bool = False):
    """Create an empty heap of the named kind.

    Kinds: ``smooth``, ``slim``, ``pairing`` (the lazy multi-tree variant
    used in benchmarks), ``pairing-classic``, ``pairing-pure``.  The policy
    keyword arguments apply to smooth and slim heaps only.
    """
    if kind in _PAIRING_MODES:
        return PairingHeap(_PAIRING_MODES[kind], counters=counters, audit=audit)
    if kind == "smooth":
        linking = Linking.STABLE
    elif kind == "slim":
        linking = Linking.ONE_SIDED
    else:
        raise ValueError(f"unknown heap kind {kind!r}; expected one of {HEAP_KINDS}")
    config = HeapConfig(linking=linking, decrease_key=decrease_key,
                        delete_policy=delete_policy, placement=placement,
                        audit=audit)
    return Heap(config, counters=counters)


def heap_from_root_sequence(kind: str, keys, counters: Optional[Counters] = None,
                            *, audit: bool = False,
                            placement: Placement = Placement.MIN_FIRST):
    """Sorting-mode bootstrap: a root list of single nodes in key order."""
    if kind in _PAIRING_MODES:
        return PairingHeap.from_root_sequence(
            keys, _PAIRING_MODES[kind], counters=counters, audit=audit)
    if kind == "smooth":
        linking = Linking.STABLE
    elif kind == "slim":
        linking = Linking.ONE_SIDED
    else:
        raise ValueError(f"unknown heap kind {kind!r}; expected one of {HEAP_KINDS}")
    config = HeapConfig(linking=linking, placement=placement, audit=audit)
    return Heap.from_root_sequence(keys, config, counters=counters)
