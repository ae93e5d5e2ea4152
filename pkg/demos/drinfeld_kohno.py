"""Compose infinitesimal braid elements and tabulate graded dimensions."""

from gcx.dk_operad import central, compose, compose_framed, format_elem, graded_dim, t, zero

for n in (2, 3):
    print(f"n = {n}: t12 o_2 1 =", format_elem(compose(t(1, 2, 2, n), 2, zero(2, n))))
print("framed, n = 4: E@2 o_2 1 =", format_elem(compose_framed(central("E", 2, 2, 4), 2, zero(2, 4))))
print("framed, n = 3: p4@2 o_2 1 =", format_elem(compose_framed(central("p4", 2, 2, 3), 2, zero(2, 3))))

print("\nbracket length  " + "  ".join(f"r={r}" for r in range(2, 6)))
for n in (2, 3):
    for length in range(1, 4):
        row = "  ".join(f"{graded_dim(r, n, length):>3}" for r in range(2, 6))
        print(f"n={n} len={length}     {row}")
