"""Conditional expectation as an atom average, and the identities it satisfies.

A die is thrown; we only learn whether the result is low (1-3) or high (4-6).
"""

from fractions import Fraction

from martkit import MeasureSpace, Partition, as_table, cond_exp, has_cond_exp, integral

die = MeasureSpace.uniform(6, labels=[str(k) for k in range(1, 7)])
low_high = Partition(6, [[0, 1, 2], [3, 4, 5]])
face = as_table(range(1, 7))
square = as_table([k * k for k in range(1, 7)])

guess = cond_exp(die, low_high, face)
print("E(face | low/high)   =", [str(v[0]) for v in guess.table])
print("defining identity ok =", has_cond_exp(die, low_high, face, guess.table))
print("E(E(face | G))       =", integral(die, guess.table)[0], "and E(face) =", integral(die, face)[0])

# Coarsening all the way down gives back the plain mean.
print("E(face^2 | trivial)  =", cond_exp(die, Partition.trivial(6), square).table[0][0])

# A loaded die where the high faces never come up: the high atom is null,
# so its value is a convention (zero) and the result says so.
loaded = MeasureSpace([Fraction(1, 3)] * 3 + [0] * 3)
r = cond_exp(loaded, low_high, face)
print("loaded die           =", [str(v[0]) for v in r.table], "null atoms:", r.null_atoms)
