"""Partial resolutions with the same singularities are derived equivalent.

For f = x*x*y the three one-curve partial resolutions have singularities
{x, xy}, {xy, x} and {y, x^2}.  The first two agree up to order; the third
has a different singularity, so the criterion does not apply to it.
"""

import warnings

from canmma import FactorData, Flag, derived_equiv_sufficient, flag_of_picture, parse_poly, picture_of_flag, reflect
from canmma.presentation import cy_reduce

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    fd = FactorData.from_classes([1, 1, 2], [parse_poly("x"), parse_poly("y")])

flags = {"X{1}": Flag.of([[1]]), "X{1,3}": Flag.of([[1, 3]]), "X{3}": Flag.of([[3]])}
for name, F in flags.items():
    print(name, [str(p.f()) for p in cy_reduce(fd, F).pieces])

print("X{1} ~ X{1,3}:", derived_equiv_sufficient(fd, flags["X{1}"], flags["X{1,3}"]))
print("X{1} ~ X{3}:  ", derived_equiv_sufficient(fd, flags["X{1}"], flags["X{3}"]))

# mutation never changes the answer
F = flags["X{1}"]
G = flag_of_picture(fd, reflect(picture_of_flag(fd, F), {1}))
print("after mutation:", G, derived_equiv_sufficient(fd, F, G))
