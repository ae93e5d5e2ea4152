"""Which r-gon loops survive in graph cohomology, for even and odd n."""

from gcx.gc_lie import loop_class_report

for n in (2, 3):
    print(f"n = {n}")
    for r in range(1, 9):
        rep = loop_class_report(n, r)
        if not rep["nonzero"]:
            status = "zero by symmetry"
        elif rep["closed"] and not rep["exact"]:
            status = "nontrivial class"
        else:
            status = "not a class"
        print(f"  r={r} degree {rep['degree']:>3}: {status}")
