"""Gorenstein and almost Gorenstein verdicts across the three families.

The sweep over the symmetric family shows the lonely exceptional cell
(n, t) = (3, 1): the only non-Gorenstein symmetric determinantal ring that
is almost Gorenstein, and exactly where the obstruction inequality holds.
"""

from symdet import (
    RingParams,
    ag_obstruction,
    classify_hankel,
    classify_pfaffian_square,
    classify_symmetric,
)

print("symmetric family, n <= 7")
print(f"{'n':>2} {'t':>2}  {'gorenstein':>10}  {'almost':>6}  {'a':>4} {'type':>5}")
for n in range(2, 8):
    for t in range(1, n):
        verdict = classify_symmetric(RingParams(n, t))
        print(
            f"{n:>2} {t:>2}  {str(verdict.gorenstein):>10}  "
            f"{str(verdict.almost_gorenstein):>6}  {verdict.a_invariant:>4} "
            f"{verdict.cm_type:>5}"
        )
print()

print("the obstruction inequality on the even cells (lower <= upper ?):")
for n in range(2, 8):
    for t in range(1, n):
        if (n - t) % 2:
            continue
        report = ag_obstruction(RingParams(n, t))
        relation = "<=" if report.passes else "> "
        print(
            f"  n={n}, t={t}: {report.lower_bound:>5} {relation} {report.upper_bound:<5}"
            f"  sharp form {report.sharp_lhs} vs {report.sharp_rhs}"
        )
print()

print("hankel family: almost Gorenstein exactly on the diagonal and at t=2")
for n in range(1, 8):
    row = []
    for t in range(1, n + 1):
        verdict = classify_hankel(n, t)
        row.append("G" if verdict.gorenstein else ("A" if verdict.almost_gorenstein else "."))
    print(f"  n={n}: " + " ".join(row))
print()

print("pfaffian-square family (odd n): almost Gorenstein only at n=3")
for n in range(3, 14, 2):
    verdict = classify_pfaffian_square(n)
    print(
        f"  n={n:>2}: almost={str(verdict.almost_gorenstein):<5} "
        f"dim={verdict.dim:>3} a={verdict.a_invariant:>4} type={verdict.cm_type}"
    )
