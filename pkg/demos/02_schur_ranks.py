"""Schur module ranks: exact closed form against brute-force tableau counts.

The rank of the Schur module of a shape on a rank-n free module equals the
number of semistandard tableaux of the conjugate shape with entries up to n.
The closed form is a hook content product; the enumerator actually builds
every tableau.
"""

from symdet import Partition, partitions_of, schur_rank, ssyt_count

print("closed form vs explicit enumeration, all shapes of weight 6, n = 4")
print(f"{'shape':>12}  {'closed':>7}  {'counted':>7}")
for shape in partitions_of(6):
    closed = schur_rank(shape, 4)
    counted = ssyt_count(shape.conjugate(), 4)
    marker = "" if closed == counted else "  MISMATCH"
    print(f"{str(shape):>12}  {closed:>7}  {counted:>7}{marker}")
print()

print("vanishing: a part larger than n kills the module")
for n in (2, 3, 4):
    print(f"  shape 5,1 at n={n}: {schur_rank(Partition((5, 1)), n)}")
print()

print("growth of one shape as n increases (weakly monotone):")
shape = Partition((3, 2))
print("  n:    " + "  ".join(f"{n:>5}" for n in range(1, 9)))
print("  rank: " + "  ".join(f"{schur_rank(shape, n):>5}" for n in range(1, 9)))
print()

print("big shapes stay exact (arbitrary precision):")
tall = Partition((12,) * 12)
print(f"  rank of {tall} at n=24: {schur_rank(tall, 24)}")
