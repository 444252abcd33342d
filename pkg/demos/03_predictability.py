"""Adapted, progressive and predictable processes on the two-toss space."""

from martkit import (
    Filtration,
    Partition,
    ProcessTable,
    is_adapted,
    is_predictable,
    is_predictable_shifted,
    is_progressive,
    predictable_sigma,
)
from martkit.scenarios import coin_walk

_, f, walk = coin_walk()
# Stakes decided before each toss: 1 on the first, then 2 only after a head.
stakes = ProcessTable([[0, 0, 0, 0], [1, 1, 1, 1], [2, 2, 0, 0]])

for name, x in (("walk", walk), ("stakes", stakes)):
    print(f"{name:7s} adapted={is_adapted(x, f)} progressive={is_progressive(x, f)} "
          f"predictable={is_predictable(x, f)} (shifted test: {is_predictable_shifted(x, f)})")

sigma_p = predictable_sigma(f)
print("\natoms of the predictable sigma-algebra, as (time, outcome) pairs:")
for atom in sigma_p.pair_atoms():
    print("  ", atom)

# Without information the walk is not even adapted.
blind = Filtration.constant(2, Partition.trivial(4))
print("\nwalk adapted to the trivial filtration:", is_adapted(walk, blind))
