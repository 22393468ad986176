"""
The size functions B, C and C0
==============================

B(m, n, h) is defined by a recursion in h; C(s) and C0(s) maximize over
the admissible splittings s = m + n with h < n. All values are exact
integers, and the ratios to 2 s^(2s) are exact fractions.
"""
from quadsub import bound_B, bound_C, bound_C0, envelope, asymptotic_report, format_report

print("B(0,2,1) =", bound_B(0, 2, 1), " C(2) =", bound_C(2), " C0(2) =", bound_C0(2))

# Closed-form envelopes bracket the recursion
for m, n, h in [(0, 2, 1), (1, 3, 2), (0, 4, 3)]:
    lo, hi = envelope(m, n, h)
    print(f"{lo} <= B({m},{n},{h}) = {bound_B(m, n, h)} <= {hi}")

print()
print(format_report(asymptotic_report(6)))
