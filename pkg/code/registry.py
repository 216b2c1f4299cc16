#!/usr/bin/env python3

"""
The FiniteMap adapters for every map implementation, by tag
"""

import canonical_trie as ct
import node01_trie as nt
import original_trie as ot
from mapkit import ORACLE, FiniteMap

ORIGINAL = FiniteMap(
    name="original",
    empty=ot.o_empty,
    get=ot.o_get,
    set=ot.o_set,
    remove=ot.o_remove,
    elements=ot.o_elements,
    map_filter=ot.o_map_filter,
    combine=ot.o_combine,
    structural_equal=ot.o_structural_equal,
    footprint=ot.o_footprint,
    node_classes=(ot.Node,),
)

NODE01 = FiniteMap(
    name="node01",
    empty=nt.n_empty,
    get=nt.n_get,
    set=nt.n_set,
    remove=nt.n_remove,
    elements=nt.n_elements,
    map_filter=nt.n_map_filter,
    combine=nt.n_combine,
    structural_equal=nt.n_structural_equal,
    footprint=nt.n_footprint,
    node_classes=(nt.Node0, nt.Node1),
)

CANONICAL = FiniteMap(
    name="canonical",
    empty=ct.c_empty,
    get=ct.c_get,
    set=ct.c_set,
    remove=ct.c_remove,
    elements=ct.c_elements,
    map_filter=ct.c_map_filter,
    combine=ct.c_combine,
    structural_equal=ct.c_structural_equal,
    footprint=ct.c_footprint,
    node_classes=ct.NODE_CLASSES + (ct.Nodes,),
)

TRIES = (ORIGINAL, NODE01, CANONICAL)

IMPLEMENTATIONS = {impl.name: impl for impl in TRIES + (ORACLE,)}
