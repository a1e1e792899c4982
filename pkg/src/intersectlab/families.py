"""Subsets of [n] as integer bitmasks and finite families of them.

Element i of [n] = {1, ..., n} is bit i-1.  On masks of equal popcount,
numeric order coincides with colex order on the sets, so a sorted member tuple
of a uniform family is colex-sorted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

GROUND_CAP = 64


def mask_of(elements) -> int:
    m = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"elements are 1-based, got {e}")
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def _as_mask(s) -> int:
    return s if isinstance(s, int) else mask_of(s)


@dataclass(frozen=True)
class Family:
    """A duplicate-free collection of subsets of [ground_n].

    Members are stored as ascending bitmasks.  `uniform_k` is set when every
    member has the same number of elements (auto-detected if not given).
    """

    ground_n: int
    members: tuple[int, ...]
    uniform_k: int | None = None

    def __post_init__(self):
        if not 0 <= self.ground_n <= GROUND_CAP:
            raise ValueError(f"ground set size must be in [0, {GROUND_CAP}]")
        full = (1 << self.ground_n) - 1
        norm = tuple(sorted(set(self.members)))
        for m in norm:
            if m < 0 or m & ~full:
                raise ValueError(f"member {m:#x} not within [{self.ground_n}]")
        object.__setattr__(self, "members", norm)
        if self.uniform_k is None:
            sizes = {m.bit_count() for m in norm}
            if len(sizes) == 1:
                object.__setattr__(self, "uniform_k", sizes.pop())
        else:
            for m in norm:
                if m.bit_count() != self.uniform_k:
                    raise ValueError(
                        f"member {elements_of(m)} is not a {self.uniform_k}-set"
                    )

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s):
        return _as_mask(s) in set(self.members)

    def member_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(m) for m in self.members)


def family(n: int, sets, k: int | None = None) -> Family:
    """Build a Family from masks or element collections."""
    return Family(n, tuple(_as_mask(s) for s in sets), k)


def all_k_subsets(n: int, k: int) -> list[int]:
    """All k-subsets of [n] as masks, colex ascending."""
    if not 0 <= k <= n:
        return []
    return sorted(mask_of(c) for c in combinations(range(1, n + 1), k))


def is_rwise_t_intersecting(fam: Family, r: int, t: int) -> bool:
    """True iff every r members (repetition allowed) share >= t elements.

    Since intersections only shrink as sets are added, it suffices to check
    every subfamily of size min(r, |F|).
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    if t < 1:
        raise ValueError("t must be >= 1")
    m = len(fam)
    if m == 0:
        return True
    take = min(r, m)
    if take == m:
        inter = -1
        for s in fam.members:
            inter &= s
        return inter.bit_count() >= t
    for combo in combinations(fam.members, take):
        inter = -1
        for s in combo:
            inter &= s
            if inter.bit_count() < t:
                break
        if inter.bit_count() < t:
            return False
    return True


def common_intersection(fam: Family) -> int:
    """Mask of the intersection of all members; rejects the empty family."""
    if len(fam) == 0:
        raise ValueError("common_intersection of an empty family")
    inter = -1
    for s in fam.members:
        inter &= s
    return inter & ((1 << fam.ground_n) - 1)


def is_t_star(fam: Family, t: int) -> bool:
    """True iff some t-set lies in every member.  Empty family: vacuously true
    (callers that care carry an explicit `empty` flag)."""
    if t < 0:
        raise ValueError("t must be >= 0")
    if len(fam) == 0:
        return True
    return common_intersection(fam).bit_count() >= t


def restrict(fam: Family, P, Q, reindex: bool = False) -> Family:
    """The slice {F \\ Q : F in fam, F cap Q = P}; requires P subset of Q.

    By default members keep their labels inside [ground_n]; with reindex=True
    the surviving elements of [n] \\ Q are relabeled 1..n-|Q| in order.
    """
    p, q = _as_mask(P), _as_mask(Q)
    if p & ~q:
        raise ValueError("restrict: P must be a subset of Q")
    picked = [m & ~q for m in fam.members if m & q == p]
    if not reindex:
        return Family(fam.ground_n, tuple(picked), None)
    keep = [e for e in range(1, fam.ground_n + 1) if not (q >> (e - 1)) & 1]
    pos = {e: i + 1 for i, e in enumerate(keep)}
    remapped = [mask_of(pos[e] for e in elements_of(m)) for m in picked]
    return Family(len(keep), tuple(remapped), None)


def restrict_point(fam: Family, i: int) -> Family:
    """F(i) = {F - i : i in F}."""
    b = 1 << (i - 1)
    return restrict(fam, b, b)


def drop_point(fam: Family, i: int) -> Family:
    """F(i-bar) = {F : i not in F}."""
    return restrict(fam, 0, 1 << (i - 1))


def restrict_super(fam: Family, Q) -> Family:
    """F(Q) = {F \\ Q : Q subset of F}."""
    q = _as_mask(Q)
    return restrict(fam, q, q)


def complement_family(fam: Family) -> Family:
    full = (1 << fam.ground_n) - 1
    return Family(fam.ground_n, tuple(full & ~m for m in fam.members), None)


# --- family file format: header "n=<n> k=<k|*>", one subset per line as
# --- comma-separated ascending integers (an empty line is the empty set).

def to_text(fam: Family) -> str:
    k = "*" if fam.uniform_k is None else str(fam.uniform_k)
    lines = [f"n={fam.ground_n} k={k}"]
    for m in fam.members:
        lines.append(",".join(str(e) for e in elements_of(m)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Family:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty family file")
    head = lines[0].split()
    try:
        n = int(head[0].removeprefix("n="))
        kfield = head[1].removeprefix("k=")
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad family header: {lines[0]!r}") from exc
    k = None if kfield == "*" else int(kfield)
    members = []
    for line in lines[1:]:
        line = line.strip()
        if not line:
            members.append(0)
            continue
        members.append(mask_of(int(tok) for tok in line.split(",")))
    return Family(n, tuple(members), k)


def save_family(fam: Family, path) -> None:
    with open(path, "w") as fh:
        fh.write(to_text(fam))


def load_family(path) -> Family:
    with open(path) as fh:
        return from_text(fh.read())
