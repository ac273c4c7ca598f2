"""
Beyond trees
============

The join, deletion and link identities hold for any graph, but vertex
decomposability does not: Ind_1 of the 4-cycle is two disjoint edges.
"""

from indvd import Graph, ind_complex, vd_check
from indvd.oracle import NonVDWitness, replay_witness, witness_to_dict
from indvd.topology import reduced_betti

c4 = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
k = ind_complex(c4, 1)
print("Ind_1(C4):", k)

w = vd_check(k)
assert isinstance(w, NonVDWitness)
print("witness:", witness_to_dict(w))
print("replays:", replay_witness(w))

# with r = 2 the complex changes and becomes decomposable again
k2 = ind_complex(c4, 2)
print("Ind_2(C4):", k2, "->", type(vd_check(k2)).__name__)
print("Betti numbers:", reduced_betti(k).as_dict(), reduced_betti(k2).as_dict())
