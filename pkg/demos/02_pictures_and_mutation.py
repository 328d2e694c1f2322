"""Flags, their pictures, and mutation as a reflection of the picture."""

from canmma import FactorData, Flag, flag_of_picture, picture_of_flag, reflect
from canmma.mutation import is_fixed

fd = FactorData.distinct(6)
F = Flag.of([[2, 3], [1, 2, 3]])
P = picture_of_flag(fd, F)
print("flag   ", F)
print("picture", P.describe(fd.labels))

# mutating the summand (u, f1f2f3) reverses groups 2 and 3
Q = reflect(P, {2})
print("mutated", Q.describe(fd.labels))
print("as flag", flag_of_picture(fd, Q))

# reflecting twice returns the original
assert reflect(Q, {2}) == P

# mutating both summands reverses the whole block
print("J={1,2}", reflect(P, {1, 2}).describe(fd.labels))

# a palindromic block is fixed: mutation gives back the same module
two = FactorData.from_multiplicities([2, 1])
R = picture_of_flag(two, Flag.of([[1], [1, 3]]))
print("\npicture", R.describe(two.labels), "fixed under J={1,2}?", is_fixed(R, {1, 2}))
