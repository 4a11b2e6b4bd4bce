"""Measured constants, frozen with the seeds that produced them.

These are pins, not derivations: each value was computed once with the
default configuration and the stated seed/count, and the suite asserts the
computation still reproduces it bit-for-bit.
"""

from fractions import Fraction

# defect_scan(f=linear slope 1, count=2000, seed=7)
DEFECT_SEED = 7
DEFECT_COUNT = 2000
KHAT = Fraction(1)
KHAT_THETA_WINDOW = (-9, 13)

# max_alpha_scan(bounded periodic [0, 1], count=1000, seed=11):
# the largest fill norm seen over the sampled triples
ALPHA_SEED = 11
ALPHA_COUNT = 1000
T2HAT = Fraction(1)

# estimate_delta(sample_size=200, radius=4, seed=3)
DELTA_SEED = 3
DELTA_SAMPLES = 200
DELTA_RADIUS = 4
DELTAHAT = Fraction(1)

# relative_fill_check on ((e,0,0), (b,0,0), (ba,0,0), (ab,0,0))
T3HAT = Fraction(1)
