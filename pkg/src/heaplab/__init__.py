"""heaplab: self-adjusting heaps with instrumented operation counting.

Mergeable priority queues (smooth heaps, slim heaps, three pairing-heap
variants) built on intrusive circular lists, plus the machinery to study
them: comparison/link counters, an amortized-cost auditor, reference
oracles, seeded workload generators, and a benchmark CLI that reproduces
sorting and shortest-path operation-count experiments.
"""

from .core import (
    AuditHooks,
    AuditModeRequiredError,
    Counters,
    EmptyHeapError,
    HeapError,
    IncompatibleHeapsError,
    KeyIncreaseError,
    LinkRecord,
    Node,
    Ordering,
    Side,
    compare,
    link_one_sided,
    link_stable,
)
from .heaps import (
    DecreaseKeyPolicy,
    DeletePolicy,
    Heap,
    HeapConfig,
    Linking,
    Placement,
    buffer_threshold,
    treapify,
)
from .pairing import PairingHeap, PairingMode, single_pass_chain, two_pass_chain
from .analysis import (
    AuditReport,
    AuditRow,
    OracleQueue,
    PotentialSnapshot,
    audit_sequence,
    brute_treap,
    check_lemma1,
    check_treap_shape,
    heap_potential,
    mass,
    potential,
    random_script,
    selftest,
    size,
    tree_from_trace,
    validate_heap,
)
from .factory import HEAP_KINDS, heap_from_root_sequence, make_heap

__all__ = [
    "AuditHooks", "AuditModeRequiredError", "AuditReport", "AuditRow",
    "Counters", "DecreaseKeyPolicy", "DeletePolicy", "EmptyHeapError",
    "HEAP_KINDS", "Heap", "HeapConfig", "HeapError", "IncompatibleHeapsError",
    "KeyIncreaseError", "LinkRecord", "Linking", "Node", "OracleQueue",
    "Ordering", "PairingHeap", "PairingMode", "Placement",
    "PotentialSnapshot", "Side", "audit_sequence", "brute_treap",
    "buffer_threshold", "check_lemma1", "check_treap_shape", "compare",
    "heap_from_root_sequence", "heap_potential", "link_one_sided",
    "link_stable", "make_heap", "mass", "potential", "random_script",
    "selftest", "single_pass_chain", "size", "tree_from_trace",
    "treapify", "two_pass_chain", "validate_heap",
]

__version__ = "0.1.0"
