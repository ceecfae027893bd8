"""The skein oracle against the torus link closed forms, 2 <= |c| <= 9."""

from pretzelbraid import homfly_pretzel, homfly_torus_antiparallel, homfly_torus_parallel

for c in range(2, 10):
    for sign in (1, -1):
        n = sign * c
        if c % 2 == 0:
            strips, closed = (n - sign, sign), homfly_torus_antiparallel(n // 2)
        else:
            strips, closed = (sign,) * c, homfly_torus_parallel(n)
        ok = homfly_pretzel(strips) == closed
        print(f"c={n:3d}  P{strips}  {'ok' if ok else 'MISMATCH'}  {closed}")
