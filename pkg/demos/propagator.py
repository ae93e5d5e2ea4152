"""Equivariant closedness of the sphere propagator and its north-pole value."""

from gcx.cartan_forms import build_propagator, d_u, north_pole, substitute_normalization

for n in range(2, 7):
    omega = build_propagator(n)
    print(f"n = {n}: {len(omega.terms)} terms, d_u = {d_u(omega) or 0}")
    if n % 2:
        value = north_pole(omega)
        print(f"  north pole {value}  ->  {' + '.join(map(str, substitute_normalization(value)))}")
