"""Divisor classes of the modules (u, f_I)."""

from canmma import FactorData, class_of_subset, class_normal_form
from canmma.model import class_group_structure

fd = FactorData.from_multiplicities([2, 3])
rank, torsion = class_group_structure(fd.a)
free = "Z" if rank == 1 else f"Z^{rank}"
print(f"a={fd.a}: Cl(R) = {free}" + (f" + Z/{torsion}" if torsion > 1 else ""))
for I in [{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4, 5}]:
    print(f"  [(u, f_I)] for I={sorted(I)}: {class_of_subset(fd, I)}")

print("normal form of (3, 1):", class_normal_form(fd.a, (3, 1)))
print("a=(2,2):", class_group_structure((2, 2)))
