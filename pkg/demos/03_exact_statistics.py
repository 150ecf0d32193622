"""
Exact part-count statistics without a single float
==================================================

"""

# normalizing a part-count polynomial by its value at 1 gives a probability
# distribution on part counts; its mean and variance are exact rationals
from qkostant import (
    MEAN_GROWTH_LIMIT,
    SupportSpec,
    TYPE_B_VARIANCE_NOTE,
    closed_moments,
    gf_coefficient,
    moments_from_poly,
    product_moments,
)

pair = moments_from_poly(gf_coefficient("D", 10))
print("D10 highest root: mean", pair.mean, " variance", pair.variance)

# for bump-pattern weights the moments have tiny closed forms:
# mean (r+1)/2 + m - L/5 and variance (r-1)/4 + 3L/50
spec = SupportSpec("A", 9, ((3, 2), (6, 1)))
print("A9 bumped:", product_moments(spec))

# for highest roots the closed forms live in the field Q(sqrt(5)); the
# surds cancel when the value is converted back to a rational
for fam in ("B", "C", "D"):
    mean, variance = closed_moments(fam, 12)
    direct = moments_from_poly(gf_coefficient(fam, 12))
    print(f"{fam}12 closed mean {mean.as_fraction()} == direct {direct.mean}:",
          mean.as_fraction() == direct.mean)
    print(f"{fam}12 closed variance matches direct:",
          variance.as_fraction() == direct.variance)

# the type-B closed variance only matches after one factor is read as
# (5 - 3*sqrt(5)); the library applies the corrected reading and keeps a
# note about it
print(TYPE_B_VARIANCE_NOTE)

# successive mean increments converge geometrically to (7 + sqrt(5))/10
print("mean increment limit:", float(MEAN_GROWTH_LIMIT))
for r in (10, 20, 40, 80):
    inc = (closed_moments("C", r)[0] - closed_moments("C", r - 1)[0]).as_fraction()
    print(f"  rank {r}: increment {float(inc):.12f}")
