"""Quivers of End(T^F) and the matrix factorizations behind (u, f_I)."""

import warnings

from canmma import FactorData, Flag, build_quiver, mf_pair, parse_poly, verify_mf
from canmma.presentation import cy_reduce, is_CT, is_MM


def singularity(*polys, classes=None):
    reps = [parse_poly(p) for p in polys]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return FactorData.from_classes(classes or list(range(1, len(reps) + 1)), reps)


for name, fd in [
    ("f = x*y", singularity("x", "y")),
    ("f = x*x", singularity("x", classes=[1, 1])),
    ("f = (x^2+y^3)(x^3+y^2)", singularity("x^2 + y^3", "x^3 + y^2")),
]:
    q = build_quiver(fd, Flag.of([[1]]))
    print(name)
    for a in q.arrows:
        print(f"  {a.source} -> {a.target}: {a.label}")

fd = singularity("x", "y", "x + y", "x - y")
F = Flag.of([[2], [2, 3], [1, 2, 3]])
print("\nf = x*y*(x+y)*(x-y), maximal flag:", "MM" if is_MM(fd, F) else "not MM",
      "and", "CT" if is_CT(fd, F) else "not CT")
print("pieces:", [str(p.f()) for p in cy_reduce(fd, F).pieces])

A, B = mf_pair(fd, {1, 3})
print("\nA =", [[str(e) for e in row] for row in A.entries])
print("A*B = B*A = (f - uv) I:", verify_mf(A, B, fd.f()))
