"""
Shedding vertices on the 13-vertex tree
=======================================

Labels in the fixture are v_i -> i - 1, so v1 is vertex 0.
"""

from indvd import ind_complex, root_at
from indvd.survey import fixture
from indvd.oracle import shedding_vertices
from indvd.tree_vd import LinkState, expand_link_state, find_shedding_vertex, link_shedding_vertex, shedding_characterization

t = fixture("fig2")
r = 4

# subtree sizes below the root v1
rt = root_at(t, 0)
print("child subtree sizes:", [rt.subtree_size[c] for c in rt.children[0]])

# the rooted test against the brute-force definition, vertex by vertex
k = ind_complex(t, r)
print("facets of Ind_4:", len(k))
print("rooted test says shedding:", [x for x in sorted(t.vertices) if shedding_characterization(t, r, x)])
print("brute force says shedding:", shedding_vertices(k))

# the descent picks v5
print("find_shedding_vertex:", find_shedding_vertex(t, r))

# grow C = {v1, v4} by one more vertex
state = LinkState(t, frozenset({0, 3}), 0, r)
w = link_shedding_vertex(state)
print("next vertex for C:", w, "shedders of the link:", shedding_vertices(expand_link_state(state)))
