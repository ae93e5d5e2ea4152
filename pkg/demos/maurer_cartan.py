"""Check the explicit Maurer-Cartan elements and move one along a gauge flow."""

from gcx.gc_lie import GraphVector
from gcx.mc_engine import conjectured_m, degree_zero_sample, gauge, mc_report, mc_residue, odd_coeff_cap

m = conjectured_m(3)
print("n = 3 element:")
for g, c in m.vector.terms.items():
    print(f"  {c}  {g.encode()}")
rep = mc_report(m, 4, coeff_cap=odd_coeff_cap(3, 3))
print("projected residue terms:", rep["gc_terms"], " raw terms:", rep["raw_fgc_terms"])

m4 = conjectured_m(4)
print("n = 4 residue zero:", mc_residue(m4, 4, "fgc").is_zero())
nu = degree_zero_sample(4, 4, 5, seed=1)
moved = gauge(m4, nu, 4)
print(f"gauge by {len(nu)} graph(s): {len(moved.vector)} terms, still MC:",
      mc_residue(moved, 4, "fgc").is_zero())
print("gauging back recovers the start:", gauge(moved, nu.scale(-1), 4).vector == m4.vector)
