"""Tour of the partition toolkit: diagrams, conjugates, hooks.

Run as `python3 demos/01_partitions.py` from the repository root after an
editable install.
"""

from symdet import HookNotation, Partition, partitions_of

shape = Partition.parse("4,4,2,1")
print(f"shape {shape}, weight {shape.weight}")
print(shape.diagram())
print()

conj = shape.conjugate()
print(f"conjugate {conj} (transpose of the diagram)")
print(conj.diagram())
print()

print(f"diagonal rank: {shape.diagonal_rank()} (largest square inside the diagram)")
hook = shape.to_hook_notation()
print(f"hook notation: {hook} (arm and leg lengths of the diagonal boxes)")
print(f"weight identity: sum(arms) + sum(legs) - rank = {hook.weight}")
rebuilt = hook.to_partition()
print(f"rebuilt from hooks: {rebuilt} (roundtrip {'ok' if rebuilt == shape else 'BROKEN'})")
print()

print("hook lengths of every box:")
for i, row in enumerate(shape.parts, start=1):
    print("  " + " ".join(str(shape.hook_length(i, j)) for j in range(1, row + 1)))
print()

print("partitions of 6 with at most 3 parts, none above 4:")
for p in partitions_of(6, max_parts=3, max_part=4):
    print(f"  {p}")
print()

print("a hook pair picked by hand:")
hook = HookNotation((3, 1), (2, 1))
print(f"  {hook} -> {hook.to_partition()}")
