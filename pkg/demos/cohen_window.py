"""Graph-complex windows against the Arnold presentation of configuration spaces."""

from gcx.graphs_cooperad import cohen_dims, cohomology_dims, nonformality_report

for n, r in ((2, 2), (2, 3), (3, 2), (3, 3)):
    window = cohomology_dims(n, r, 2, kmax=r)["dims"]
    print(f"n={n} r={r}: window {window}  Arnold {cohen_dims(n, r)}")

rep = nonformality_report(3)
print("weight <= 3 dimensions by arity:", rep["weight3_dims"])
print("arity 3 target reachable:", rep["arity3"]["target_in_image"], " obstruction:", rep["obstruction"])
