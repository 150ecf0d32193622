"""
Positive roots of the four classical families
=============================================

"""

# build_root_system returns a frozen, lexicographically sorted root system
# expressed in simple-root coordinates
from qkostant import build_root_system, positive_root_count

# the smallest member of each family, in full
for lie_type, rank in [("A", 3), ("B", 2), ("C", 3), ("D", 4)]:
    system = build_root_system(lie_type, rank)
    print(f"{lie_type}{rank}: {system.count} positive roots")
    for root in system.positive_roots:
        print("   ", root)

# the counts follow the classical closed formulas r(r+1)/2, r^2, r^2, r(r-1)
print("counts up to rank 8:")
for lie_type, start in [("A", 1), ("B", 2), ("C", 3), ("D", 4)]:
    row = [positive_root_count(lie_type, r) for r in range(start, 9)]
    print(f"  {lie_type}: {row}")

# every coordinate of every root is 0, 1 or 2, and the support (the set of
# nonzero coordinates) is an interval except at the fork of type D
d6 = build_root_system("D", 6)
forked = [root for root in d6.positive_roots
          if [i for i, c in enumerate(root) if c > 0] !=
          list(range(min(i for i, c in enumerate(root) if c > 0),
                     max(i for i, c in enumerate(root) if c > 0) + 1))]
print(f"D6 roots with a gap in their support: {len(forked)}")
for root in forked[:4]:
    print("   ", root)

# the highest root dominates every other root coordinate by coordinate
print("highest roots:", {f"{t}5": build_root_system(t, 5).highest_root
                         for t in ("A", "B", "C", "D")})
