# Comparing the component of 0 with the inequality description.
#
# Run with:  python3 notebooks/03_oracle.py

# %%
from crystalpoly import bfs_component, export_graph, find_highest_weights, make_setting, oracle_compare
from crystalpoly.explorer import component_by_height, height

s = make_setting("a1affine", (2, -1))
g = bfs_component(s.hwv.bump(-1, 1), s.iota, 1)
print(export_graph(g, "dot").decode())

# %%
# the part of the component within 3 f-steps of v_lam, grouped by height
g = component_by_height(s, 3)
print("highest weight vectors:", [str(x) for x in find_highest_weights(g)])
for h in range(4):
    print(h, [str(x) for x in g.vertices if height(x, s) == h])

# %%
# the oracle: lattice points of the truncated inequality system versus BFS
for kind, lam in (("a", (1, -1)), ("a", (2, -1, -1)), ("a1affine", (3, -2))):
    rep = oracle_compare(kind, lam, d=3, w=9, gen_depth=5)
    print(kind, lam, rep.verdict, rep.bfs_size, rep.ineq_size, rep.stability_sizes)

# %%
# Closing the Xi' seeds under negative rewrites only is not enough: a point
# outside the component survives every such form.
rep = oracle_compare("a", (1, 0), d=3, w=6, gen_depth=4, prime_indices="negative")
print(rep.verdict, [str(x) for x in rep.missing_from_bfs])
