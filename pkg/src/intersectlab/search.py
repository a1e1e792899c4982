"""Exact extremal searches: maximum r-wise t-intersecting families, uniform
and non-uniform, trivial and non-trivial, with certified pruning bounds,
optional restriction to shifted (down-set) candidates, and enumeration of
all optima.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import _kernel, _pure
from .canonical import build_frankl, build_hmf, max_frankl_size
from .exactmath import UndecidableComparison, binom, resolve_floor
from .families import (
    Family,
    all_k_subsets,
    common_intersection,
    is_t_star,
)
from .lattice import bound_key0, bound_key2, count_hitting_paths, hits_line
from .shifting import _cover_predecessors
from .walks import prob_bound_alpha

DEFAULT_CAP = 300
OPTIMA_NODE_CAP = 2 * 10**7
OPTIMA_MAX = 4096


class FeasibilityError(Exception):
    """The instance exceeds the configured search caps."""


def _fast_is_rwise(members, r: int, t: int) -> bool:
    """Incremental r-wise t check via intersection levels; equivalent to the
    direct subfamily predicate (every multiset has a latest member) but
    linear-ish in |F| for witness validation of large optima."""
    levels = _pure._Levels(r)
    for m in members:
        if m.bit_count() < t:
            return False
        if not all((x & m).bit_count() >= t for x in levels.lists[-1]):
            return False
        levels.add(m)
    return True


@dataclass
class SearchReport:
    """Outcome of an extremal search.

    `optimum` is exact.  `witness` attains it (the colex-least optimum when
    `optima_count` is set, otherwise the first optimum in colex DFS order, or
    the seeding construction when nothing beat it).
    `all_optima_are_t_stars` is None when the optima enumeration was skipped
    or hit its caps.
    """

    optimum: int
    witness: Family
    nodes_explored: int
    wall_time: float
    empty: bool
    all_optima_are_t_stars: bool | None = None
    optima_count: int | None = None
    note: str = ""
    params: dict = field(default_factory=dict)


def _certified_upper_bounds(n: int, k: int, r: int, t: int, nontrivial: bool):
    """Certified upper bounds on the optimum (used to stop early)."""
    bounds = [count_hitting_paths(n, k, r, t)]
    if r >= 3 and n >= 2 * k and t >= 1:
        try:
            bounds.append(
                resolve_floor(lambda tol: prob_bound_alpha(n, k, r, t, tol))
            )
        except UndecidableComparison:
            pass
    if r >= 3 and n >= 2 * k - t:
        bounds.append(bound_key0(n, k, r, t))
        if nontrivial:
            bounds.append(bound_key2(n, k, r, t))
    return min(bounds)


def _seed_family(n: int, k: int, r: int, t: int, nontrivial: bool) -> Family:
    """Best canonical construction: a feasible lower bound with a witness."""
    if not nontrivial:
        _, best_i = max_frankl_size(n, k, r, t)
        return build_frankl(n, k, r, t, best_i)
    cands = []
    i = 1
    while t + r * i <= n and t + (r - 1) * i <= k:
        cands.append(build_frankl(n, k, r, t, i))
        i += 1
    if k >= t + r - 1 and n >= k + 1:
        cands.append(build_hmf(n, k, r, t))
    best = Family(n, (), k)
    for fam in cands:
        if len(fam) > len(best) and len(fam) > 0 and common_intersection(fam) == 0:
            best = fam
    return best


def max_uniform(
    n: int,
    k: int,
    r: int,
    t: int,
    nontrivial: bool = False,
    shift_reduction: bool = True,
    cap: int = DEFAULT_CAP,
    enumerate_optima: bool | None = None,
    node_cap: int | None = None,
    backend: str | None = None,
) -> SearchReport:
    """Exact maximum size of an r-wise t-intersecting subfamily of the k-sets
    of [n] (restricted to families with empty common intersection when
    `nontrivial`).

    The unrestricted problem is searched over shifted families (down-sets in
    the coordinatewise order, candidates pre-filtered to boundary-hitting
    sets); pass shift_reduction=False to cross-validate on the unreduced
    space.  The non-trivial variant never uses the reduction, since shifting
    can collapse a non-trivial family onto a star.
    """
    if r < 2 or t < 1:
        raise ValueError("need r >= 2, t >= 1")
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    start = time.perf_counter()
    params = {"n": n, "k": k, "r": r, "t": t, "nontrivial": nontrivial}
    total = binom(n, k)
    if total > cap:
        raise FeasibilityError(
            f"C({n},{k}) = {total} exceeds the search cap {cap}"
        )
    if k < t:
        return SearchReport(
            optimum=0,
            witness=Family(n, (), k),
            nodes_explored=0,
            wall_time=time.perf_counter() - start,
            empty=True,
            note="k < t: no k-set meets the t requirement",
            params=params,
        )

    seed = _seed_family(n, k, r, t, nontrivial)
    lb = len(seed)
    global_ub = _certified_upper_bounds(n, k, r, t, nontrivial)

    masks = all_k_subsets(n, k)
    use_shift = shift_reduction and not nontrivial
    preds = None
    if use_shift:
        masks = [m for m in masks if hits_line(m, n, r, t)]
        index = {m: i for i, m in enumerate(masks)}
        preds = []
        for m in masks:
            # the hitting set is down-closed, so covers are candidates
            preds.append(tuple(index[p] for p in _cover_predecessors(m)))

    be = _kernel.backend_for(backend, n, r)
    best, wit_idx, nodes = be.solve_max(
        masks,
        r,
        t,
        preds=preds,
        lb=lb,
        global_ub=global_ub,
        node_cap=node_cap,
        nontrivial=nontrivial,
        universe_mask=(1 << n) - 1,
    )
    witness = seed if wit_idx is None else Family(n, tuple(masks[i] for i in wit_idx), k)
    note = ""

    optima_flag = None
    optima_count = None
    if enumerate_optima is None:
        enumerate_optima = not nontrivial
    if enumerate_optima and best > 0:
        full_masks = all_k_subsets(n, k)
        optima, _, truncated = be.enumerate_exact(
            full_masks,
            r,
            t,
            target=best,
            nontrivial=nontrivial,
            universe_mask=(1 << n) - 1,
            node_cap=OPTIMA_NODE_CAP,
            max_solutions=OPTIMA_MAX,
        )
        if truncated:
            note = "optima enumeration truncated; star flag unknown"
        else:
            optima_count = len(optima)
            optima_fams = [
                Family(n, tuple(full_masks[i] for i in idxs), k) for idxs in optima
            ]
            optima_flag = all(is_t_star(f, t) for f in optima_fams)
            witness = min(optima_fams, key=lambda f: f.members)

    # every reported witness must satisfy the defining predicate
    assert _fast_is_rwise(witness.members, r, t)
    assert len(witness) == best
    if nontrivial and len(witness) > 0:
        assert common_intersection(witness) == 0

    return SearchReport(
        optimum=best,
        witness=witness,
        nodes_explored=nodes,
        wall_time=time.perf_counter() - start,
        empty=len(witness) == 0,
        all_optima_are_t_stars=optima_flag,
        optima_count=optima_count,
        note=note,
        params=params,
    )


def max_nonuniform(
    n: int,
    r: int,
    t: int,
    nontrivial: bool = False,
    node_cap: int | None = None,
    backend: str | None = None,
) -> SearchReport:
    """Exact maximum over families in 2^[n] (n <= 6), by up-set search."""
    if r < 2 or t < 1:
        raise ValueError("need r >= 2, t >= 1")
    if not 0 <= n <= 6:
        raise FeasibilityError("non-uniform search is capped at n <= 6")
    start = time.perf_counter()
    be = _kernel.get_backend(backend)
    best, antichain, nodes = be.solve_max_upset(
        n, r, t, nontrivial=nontrivial, node_cap=node_cap
    )
    members = set()
    for s in antichain:
        free = ((1 << n) - 1) & ~s
        m = 0
        while True:
            members.add(s | m)
            if m == free:
                break
            m = (m - free) & free
    witness = Family(n, tuple(members), None)
    assert len(witness) == best
    assert _fast_is_rwise(witness.members, r, t)
    if nontrivial and len(witness) > 0:
        assert common_intersection(witness) == 0
    return SearchReport(
        optimum=best,
        witness=witness,
        nodes_explored=nodes,
        wall_time=time.perf_counter() - start,
        empty=best == 0,
        params={"n": n, "r": r, "t": t, "nontrivial": nontrivial},
    )


def verify_recursion(n: int, k: int, r: int, t: int, cap: int = DEFAULT_CAP) -> bool:
    """Check m(n,k,r,t) <= m(n-1,k,r,t) + m(n-1,k-1,r,t), valid for
    n > (rk - t)/(r - 1)."""
    if (r - 1) * n <= r * k - t:
        raise ValueError("recursion hypothesis needs n > (rk - t)/(r - 1)")
    a = max_uniform(n, k, r, t, cap=cap, enumerate_optima=False).optimum
    b = max_uniform(n - 1, k, r, t, cap=cap, enumerate_optima=False).optimum
    c = max_uniform(n - 1, k - 1, r, t, cap=cap, enumerate_optima=False).optimum
    return a <= b + c


def check_small_k_dichotomy(
    n: int, k: int, r: int, t: int, cap: int = DEFAULT_CAP, node_cap: int | None = 10**7
) -> bool:
    """Every maximal non-star family must have k >= t+r, or k = t+r-1 with
    all members inside one (k+1)-set.  Checked by enumerating all maximal
    families at the given parameters."""
    total = binom(n, k)
    if total > cap:
        raise FeasibilityError(f"C({n},{k}) = {total} exceeds the search cap {cap}")
    masks = all_k_subsets(n, k)
    maximal, _ = _pure.enumerate_maximal(masks, r, t, node_cap=node_cap)
    for idxs in maximal:
        fam = Family(n, tuple(masks[i] for i in idxs), k)
        if is_t_star(fam, t):
            continue
        if k >= t + r:
            continue
        union = 0
        for m in fam.members:
            union |= m
        if k == t + r - 1 and union.bit_count() <= k + 1:
            continue
        return False
    return True
