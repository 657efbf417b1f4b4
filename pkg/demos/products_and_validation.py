"""
Building oriented cycles, products, and checking labelings
==========================================================

"""

import io

import numpy as np

from lpqcycles import (
    ConstraintParams,
    Labeling,
    ProductKind,
    oriented_cycle,
    read_labeling,
    torus,
    validate,
    write_labeling,
)

# an oriented cycle sends each vertex to its successor mod n
c5 = oriented_cycle(5)
print("C_5 edges:", sorted(c5.edges()))

# products pair the cycles; vertex (i, j) gets id i * n + j
g = torus(ProductKind.CARTESIAN, 3, 4)
print("C_3 x C_4 has", g.n_vertices, "vertices and", g.n_edges, "edges")

# color the torus along anti-diagonals with the word 0 2 4 repeated
colors = np.fromfunction(lambda i, j: 2 * ((i + j) % 3), (3, 4 * 3)).ravel()
f = Labeling(colors.astype(int), k_budget=4, shape=torus(ProductKind.CARTESIAN, 3, 12).shape)
g = torus(ProductKind.CARTESIAN, 3, 12)
print("violations on the diagonal coloring:", validate(g, f))

# adjacent colors must differ by 2, two-step colors by 1; breaking one
# cell produces a burst of localized complaints
broken = np.array(colors)
broken[5] = colors[6]
bad = validate(g, Labeling(broken, 4, g.shape))
for v in bad:
    print(f"  {v.kind.value} at {v.pair}: colors {v.labels}, need {v.required}")

# labelings travel as JSON documents
buf = io.StringIO()
write_labeling(buf, f, ConstraintParams())
buf.seek(0)
g2, f2, params = read_labeling(buf)
print("round trip:", np.array_equal(f.colors, f2.colors), "params", (params.p, params.q))
