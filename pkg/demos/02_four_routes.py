"""
Four independent routes to one polynomial
=========================================

"""

# the part-count polynomial of a weight counts its decompositions into
# positive roots, graded by the number of parts: coefficient k counts the
# decompositions using exactly k parts (with repetition allowed)
from qkostant import (
    SupportSpec,
    build_root_system,
    explicit_qpoly,
    gf_coefficient,
    product_qpoly,
    qanalog,
    weight_of,
)

# route 1, the oracle: a lattice dynamic program that folds one positive
# root at a time; works for any weight of any classical system
c5 = build_root_system("C", 5)
oracle = qanalog(c5, c5.highest_root)
print("C5 highest root:", c5.highest_root)
print("oracle:         ", oracle)

# route 2, the generating function: the same polynomial is the x^5
# coefficient of a rational series and satisfies a 2-step recurrence
print("gf recurrence:  ", gf_coefficient("C", 5))

# route 3, the conjugate-surd formula: a closed expression in the roots of
# t^2 - (2+2q+q^2)t + (1+2q+q^2+q^3); the irrational parts cancel exactly
print("surd formula:   ", explicit_qpoly("C", 5))

assert oracle == gf_coefficient("C", 5) == explicit_qpoly("C", 5)

# route 4, the product form: for the all-ones weight with sparse interior
# bumps the polynomial factors completely
spec = SupportSpec("A", 7, ((3, 2), (5, 1)))
weight = weight_of(spec)
a7 = build_root_system("A", 7)
print("A7 bumped weight:", weight)
print("oracle:          ", qanalog(a7, weight))
print("product form:    ", product_qpoly(spec))
assert qanalog(a7, weight) == product_qpoly(spec)

# the type-A all-ones weight is the cleanest special case: a chain with
# polynomial q(1+q)^(r-1), so exactly 2^(r-1) decompositions in total
for r in range(1, 7):
    chain = qanalog(build_root_system("A", r), (1,) * r)
    print(f"A{r} all-ones: {chain}  total {chain(1)}")
    assert chain == explicit_qpoly("A", r)
