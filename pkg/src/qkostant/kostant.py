"""Graded vector-partition counting over a positive root system.

qanalog(system, target) returns the polynomial sum_k c_k * q**k where c_k
is the number of multisets of exactly k positive roots whose sum is the
target weight.  Evaluating at q = 1 recovers the plain decomposition count.

Algorithm.  A lattice fold over the box prod_i [0, target_i]: roots are
taken in the system's fixed sorted order and folded in one at a time with
unbounded multiplicity, updating f(w) += q * f(w - root) over cells in
ascending packed order.  Because a cell is only read after it has absorbed
the current root itself, a single in-place sweep realizes the full
geometric series in that root, which is exactly multiset (order-free)
semantics.

For speed the polynomial at each cell is Kronecker-packed into a single
Python integer (coefficient of q**k occupies the bit field [k*W, (k+1)*W)),
so the inner update is one shift-and-add on native big integers.  A first
integer-only sweep computes all plain counts, whose maximum bounds every
packed coefficient and therefore yields a rigorous field width W with no
possibility of carry collision.
"""

from __future__ import annotations

from functools import lru_cache
from math import prod

from .errors import DimensionMismatch
from .polyring import QPoly
from .rootsys import RootSystem, Weight, build_root_system


def qanalog(system: RootSystem, target) -> QPoly:
    """Part-count generating polynomial of the target weight.

    Returns QPoly zero when any coordinate is negative and QPoly one for the
    zero weight (the empty multiset).
    """
    target = tuple(target)
    if len(target) != system.rank:
        raise DimensionMismatch(
            f"weight of length {len(target)} against rank {system.rank}"
        )
    for c in target:
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError("weight coordinates must be ints")
    if any(c < 0 for c in target):
        return QPoly.zero()
    return _qanalog_cached(system.lie_type, system.rank, target)


def count_decompositions(system: RootSystem, target) -> int:
    """Number of multisets of positive roots summing to the target."""
    return qanalog(system, target)(1)


@lru_cache(maxsize=None)
def _qanalog_cached(lie_type: str, rank: int, target: Weight) -> QPoly:
    system = build_root_system(lie_type, rank)
    roots = [r for r in system.positive_roots if all(a <= b for a, b in zip(r, target))]
    return QPoly(_fold(roots, target))


def _cell_indices(root, sizes, strides):
    """Packed indices of all cells >= root, in ascending order."""
    idxs = [0]
    for sz, st, rc in zip(sizes, strides, root):
        offsets = [w * st for w in range(rc, sz)]
        idxs = [base + off for base in idxs for off in offsets]
    return idxs


def _fold(roots, target):
    """Coefficient list of the part-count polynomial for the target."""
    if sum(target) == 0:
        return [1]
    sizes = [t + 1 for t in target]
    strides = [prod(sizes[i + 1:]) for i in range(len(sizes))]
    total = prod(sizes)

    # Sweep 1: plain counts.  The max over all cells bounds every graded
    # coefficient (they sum to the cell count), giving the packing width.
    counts = [0] * total
    counts[0] = 1
    for root in roots:
        delta = sum(c * s for c, s in zip(root, strides))
        for i in _cell_indices(root, sizes, strides):
            src = counts[i - delta]
            if src:
                counts[i] += src
    if counts[-1] == 0:
        return []
    width = max(counts).bit_length() + 1
    del counts

    # Sweep 2: same fold with each cell's polynomial packed into one int;
    # multiplying by q is a shift by one field.
    table = [0] * total
    table[0] = 1
    for root in roots:
        delta = sum(c * s for c, s in zip(root, strides))
        for i in _cell_indices(root, sizes, strides):
            src = table[i - delta]
            if src:
                table[i] += src << width
    packed = table[-1]
    del table

    mask = (1 << width) - 1
    out = []
    while packed:
        out.append(packed & mask)
        packed >>= width
    return out
