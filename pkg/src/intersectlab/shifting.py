"""The pair-swap compression operator, the coordinatewise order it induces,
and the structural helpers built on them: fixpoints, window hit indices,
greedy saturation, and the residual-slice comparison for saturated families.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .families import (
    Family,
    all_k_subsets,
    elements_of,
    is_rwise_t_intersecting,
    is_t_star,
    restrict,
)


def shift_step(fam: Family, i: int, j: int) -> Family:
    """Apply S_ij memberwise: replace j by i in F when j in F, i not in F and
    the replacement is not already a member.  Preserves |F|."""
    if not 1 <= i < j <= fam.ground_n:
        raise ValueError(f"need 1 <= i < j <= {fam.ground_n}")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    present = set(fam.members)
    out = []
    for m in fam.members:
        if m & bj and not m & bi:
            moved = (m & ~bj) | bi
            out.append(m if moved in present else moved)
        else:
            out.append(m)
    res = Family(fam.ground_n, tuple(out), fam.uniform_k)
    assert len(res) == len(fam)
    return res


def shift_to_fixpoint(fam: Family) -> Family:
    """Sweep all (i, j), i < j, in lexicographic order, restarting after any
    change, until every step fixes the family.  The sweep order is fixed so
    results are reproducible."""
    n = fam.ground_n
    changed = True
    while changed:
        changed = False
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                nxt = shift_step(fam, i, j)
                if nxt.members != fam.members:
                    fam = nxt
                    changed = True
    return fam


def precedes(a: int, b: int) -> bool:
    """Coordinatewise order on equal-size sets: sorted elements of a are <=
    those of b position by position."""
    ea, eb = elements_of(a), elements_of(b)
    if len(ea) != len(eb):
        raise ValueError("precedes: sets must have equal size")
    return all(x <= y for x, y in zip(ea, eb))


def _cover_predecessors(m: int):
    """Masks obtained by decrementing one element of m (the cover relations
    of the coordinatewise order)."""
    for e in elements_of(m):
        if e >= 2 and not (m >> (e - 2)) & 1:
            yield (m & ~(1 << (e - 1))) | (1 << (e - 2))


def is_shifted(fam: Family) -> bool:
    """Down-set characterization: closed under decrementing any element."""
    present = set(fam.members)
    for m in fam.members:
        for p in _cover_predecessors(m):
            if p not in present:
                return False
    return True


def is_shifted_by_steps(fam: Family) -> bool:
    """Operator characterization: fixed by every S_ij.  Agrees with
    is_shifted; kept as an independent cross-check."""
    n = fam.ground_n
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            if shift_step(fam, i, j).members != fam.members:
                return False
    return True


def witness_s(masks, t: int) -> int | None:
    """Smallest s with sum_i |F_i cap [s]| >= (r-1)s + t, r = len(masks),
    or None.  At the minimal s equality holds and s >= t; both are asserted."""
    if t < 1:
        raise ValueError("t must be >= 1")
    r = len(masks)
    sizes = {m.bit_count() for m in masks}
    if len(sizes) != 1:
        raise ValueError("witness_s: sets must have equal size")
    top = max(m.bit_length() for m in masks)
    for s in range(1, top + 1):
        win = (1 << s) - 1
        total = sum((m & win).bit_count() for m in masks)
        if total >= (r - 1) * s + t:
            assert total == (r - 1) * s + t and s >= t
            return s
    return None


def min_hit_index(m: int, n: int, r: int, t: int) -> int | None:
    """Least i >= 0 with |F cap [t+ri]| >= t+(r-1)i, or None.  At the least
    such i the count is exactly t+(r-1)i."""
    if r < 2 or t < 1:
        raise ValueError("need r >= 2, t >= 1")
    i = 0
    while t + r * i <= n:
        win = (1 << (t + r * i)) - 1
        got = (m & win).bit_count()
        if got >= t + (r - 1) * i:
            assert got == t + (r - 1) * i
            return i
        i += 1
    return None


def partition_by_hit(fam: Family, r: int, t: int) -> list[Family]:
    """Split a shifted r-wise t-intersecting family by its least window hit
    index, parts i = 0 .. floor((k-t)/(r-1))."""
    if len(fam) == 0:
        return []
    if fam.uniform_k is None:
        raise ValueError("partition_by_hit needs a uniform family")
    if not is_shifted(fam):
        raise ValueError("partition_by_hit needs a shifted family")
    k = fam.uniform_k
    parts = [[] for _ in range((k - t) // (r - 1) + 1)]
    for m in fam.members:
        i = min_hit_index(m, fam.ground_n, r, t)
        if i is None:
            raise ValueError(
                f"member {elements_of(m)} hits no window; "
                "family is not r-wise t-intersecting"
            )
        parts[i].append(m)
    return [Family(fam.ground_n, tuple(p), k) for p in parts]


class IntersectionLevels:
    """Distinct intersection masks of all multisets of up to r-1 members,
    maintained level by level.  Adding member c is feasible for the r-wise
    t rule iff |c| >= t and |m cap c| >= t for every top-level mask m."""

    def __init__(self, r: int):
        self.r = r
        self.lists: list[list[int]] = [[] for _ in range(r - 1)]
        self.seen: list[set[int]] = [set() for _ in range(r - 1)]

    def compatible(self, c: int, t: int) -> bool:
        if c.bit_count() < t:
            return False
        return all((m & c).bit_count() >= t for m in self.lists[-1])

    def add(self, c: int) -> list[int]:
        """Insert c; returns the masks newly added to the top level."""
        before_top = len(self.lists[-1])
        if c not in self.seen[0]:
            self.seen[0].add(c)
            self.lists[0].append(c)
        for j in range(1, self.r - 1):
            for m in self.lists[j - 1]:
                x = m & c
                if x not in self.seen[j]:
                    self.seen[j].add(x)
                    self.lists[j].append(x)
        return self.lists[-1][before_top:]


def saturate(fam: Family, r: int, t: int, k: int | None = None) -> Family:
    """Extend by every addable k-set, scanning candidates in colex order, so
    the maximal superfamily returned is deterministic."""
    if k is None:
        k = fam.uniform_k
    if k is None:
        raise ValueError("saturate: k unknown (empty non-uniform input)")
    if not is_rwise_t_intersecting(fam, r, t):
        raise ValueError("saturate: input is not r-wise t-intersecting")
    levels = IntersectionLevels(r)
    members = list(fam.members)
    for m in members:
        levels.add(m)
    present = set(members)
    for c in all_k_subsets(fam.ground_n, k):
        if c in present:
            continue
        if levels.compatible(c, t):
            levels.add(c)
            members.append(c)
            present.add(c)
    return Family(fam.ground_n, tuple(members), k)


def is_saturated(fam: Family, r: int, t: int) -> bool:
    return len(saturate(fam, r, t)) == len(fam)


def saturate_shifted(fam: Family, r: int, t: int, k: int | None = None) -> Family:
    """Alternate greedy saturation and shifting until both are stable; the
    result is shifted and saturated."""
    fam = saturate(fam, r, t, k)
    while True:
        shifted = shift_to_fixpoint(fam)
        grown = saturate(shifted, r, t, k)
        if grown.members == fam.members:
            return grown
        fam = grown


def saturated_slices_agree(fam: Family, r: int, t: int) -> bool:
    """For a shifted, saturated, non-star family, compare the slices
    G_i = F([t+1] - {i}, [t+1]) across i = 1..t; they are expected to agree
    (a False return is a counterexample alarm)."""
    if is_t_star(fam, t):
        raise ValueError("saturated_slices_agree: input is a t-star")
    if not is_shifted(fam):
        raise ValueError("saturated_slices_agree: input is not shifted")
    if not is_rwise_t_intersecting(fam, r, t):
        raise ValueError("saturated_slices_agree: input not r-wise t-intersecting")
    if not is_saturated(fam, r, t):
        raise ValueError("saturated_slices_agree: input is not saturated")
    window = (1 << (t + 1)) - 1
    slices = []
    for i in range(1, t + 1):
        p = window & ~(1 << (i - 1))
        slices.append(restrict(fam, p, window).members)
    return all(s == slices[0] for s in slices[1:])


def rwise_by_witness(fam: Family, r: int, t: int) -> bool:
    """Decision procedure for shifted families: r-wise t-intersecting iff
    every r-multiset of members admits a witness prefix."""
    if len(fam) == 0:
        return True
    for combo in combinations_with_replacement(fam.members, r):
        if witness_s(combo, t) is None:
            return False
    return True
