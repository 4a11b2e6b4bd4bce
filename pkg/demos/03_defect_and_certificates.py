"""Defect scans and vanishing certificates.

Measures the quasi-cocycle defect of alpha_f over seeded 4-tuples, checks its
scale/shift invariance, then runs the truncation certificates: for sublinear
f the certified defect bound of the truncated tails tends to zero, while for
f = id it stays flat.  Ends with the exact rank of the growth matrix.
"""

from cuspedforms import lipschitz as L
from cuspedforms import quasicocycle as Q
from cuspedforms.config import RunConfig

qc = RunConfig().build()

f = L.linear(1)
report = Q.defect_scan(qc, f, count=300, seed=7)
print("defect scan, f(x) = x, 300 tuples:")
print("  max |delta alpha_f| =", report.max_abs_delta)
print("  lip on touched window", report.theta_window, "=", report.lip_window)
print("  ratio =", report.ratio_to_lip)

scaled = Q.defect_scan(qc, f.scale(3), count=300, seed=7)
print("scaling f by 3 leaves the ratio fixed:",
      scaled.ratio_to_lip == report.ratio_to_lip)
const = Q.defect_scan(qc, L.constant(5), count=300, seed=7)
print("constant f has zero defect:", const.max_abs_delta == 0)

print("\nvanishing certificates, f = floor(sqrt(x)):")
for row in Q.bah_upper_bound_certificate(qc, L.power_floor(1, 2),
                                         [1, 2, 3], report.ratio_to_lip or 1):
    print(f"  radius {row['radius']}: truncation n={row['n']}, "
          f"bound {row['bound']}")

print("vanishing certificates, f = id (bound cannot improve):")
for row in Q.bah_upper_bound_certificate(qc, f, [1, 2, 3],
                                         report.ratio_to_lip or 1):
    print(f"  radius {row['radius']}: truncation n={row['n']}, "
          f"bound {row['bound']}")

fs = [L.power_floor(1, 2), L.power_floor(2, 3), L.power_floor(3, 4)]
print("\nrank of [f_j(m) - f_j(0)] over m in {4, 9, 16}:",
      Q.independence_rank(fs, [4, 9, 16]))
