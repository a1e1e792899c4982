"""Pure-Python search kernels.

Branch-and-bound over candidate k-set bitmasks for the maximum r-wise
t-intersecting family (optionally restricted to down-sets of the
coordinatewise order via cover-predecessor lists), exhaustive enumeration of
optimum-sized families, antichain search for maximum monotone families on
tiny ground sets, and enumeration of maximal families.

The compiled extension ``_core`` mirrors ``solve_max``, ``enumerate_exact``
and ``solve_max_upset`` exactly; ``_kernel`` selects a backend at import.
All kernels are deterministic: candidates are branched in list order,
include before exclude.
"""

from __future__ import annotations

BACKEND = "pure"


class NodeBudgetExceeded(Exception):
    """The node cap fired before the search could certify its answer."""


class _Truncated(Exception):
    pass


class _Levels:
    """Distinct intersection masks of all multisets of up to r-1 chosen
    members, level by level, with undo.  Member c is addable under the r-wise
    t rule iff |c| >= t and every top-level mask meets c in >= t bits."""

    __slots__ = ("r", "lists", "seen")

    def __init__(self, r: int):
        self.r = r
        self.lists = [[] for _ in range(r - 1)]
        self.seen = [set() for _ in range(r - 1)]

    def add(self, c: int):
        token = [len(l) for l in self.lists]
        lst0, seen0 = self.lists[0], self.seen[0]
        if c not in seen0:
            seen0.add(c)
            lst0.append(c)
        for j in range(1, self.r - 1):
            lst, seen = self.lists[j], self.seen[j]
            for m in self.lists[j - 1]:
                x = m & c
                if x not in seen:
                    seen.add(x)
                    lst.append(x)
        return token, self.lists[-1][token[-1]:]

    def undo(self, token) -> None:
        for j, ln in enumerate(token):
            lst, seen = self.lists[j], self.seen[j]
            while len(lst) > ln:
                seen.discard(lst.pop())


def _alive(cands, preds, chosen_flag):
    """Candidates whose cover predecessors are all chosen or still alive.
    Predecessor indices are smaller, so one ascending pass is exact."""
    kept = []
    kept_set = set()
    for d in cands:
        ok = True
        for p in preds[d]:
            if not chosen_flag[p] and p not in kept_set:
                ok = False
                break
        if ok:
            kept.append(d)
            kept_set.add(d)
    return kept


def solve_max(
    masks,
    r: int,
    t: int,
    preds=None,
    lb: int = 0,
    global_ub: int | None = None,
    node_cap: int | None = None,
    nontrivial: bool = False,
    universe_mask: int = 0,
):
    """Maximum family size over the candidate masks under the r-wise t rule.

    preds: cover-predecessor index lists restrict the search to down-sets.
    lb: known feasible size (pruning floor); a witness is returned only when
    something strictly larger than lb is found, else None.
    nontrivial: only families with empty common intersection count.
    Returns (best_size, witness_index_tuple_or_None, nodes).
    """
    n_cand = len(masks)
    if global_ub is None:
        global_ub = n_cand
    best = lb
    best_wit = None
    nodes = 0
    levels = _Levels(r)
    chosen: list[int] = []
    chosen_flag = [False] * n_cand
    inter_stack = [universe_mask]

    def expand(active):
        nonlocal best, best_wit, nodes
        while active:
            if best >= global_ub or len(chosen) + len(active) <= best:
                return
            c = active[0]
            rest = active[1:]
            if preds is None or all(chosen_flag[p] for p in preds[c]):
                nodes += 1
                if node_cap is not None and nodes > node_cap:
                    raise NodeBudgetExceeded(f"node cap {node_cap} exceeded")
                token, new_top = levels.add(masks[c])
                chosen.append(c)
                chosen_flag[c] = True
                inter_stack.append(inter_stack[-1] & masks[c])
                if (not nontrivial or inter_stack[-1] == 0) and len(chosen) > best:
                    best = len(chosen)
                    best_wit = tuple(chosen)
                new_active = [
                    d
                    for d in rest
                    if all((m & masks[d]).bit_count() >= t for m in new_top)
                ]
                if preds is not None:
                    new_active = _alive(new_active, preds, chosen_flag)
                expand(new_active)
                levels.undo(token)
                chosen.pop()
                chosen_flag[c] = False
                inter_stack.pop()
            active = rest
            if preds is not None:
                active = _alive(active, preds, chosen_flag)

    root = [i for i in range(n_cand) if masks[i].bit_count() >= t]
    if preds is not None:
        root = _alive(root, preds, chosen_flag)
    expand(root)
    return best, best_wit, nodes


def enumerate_exact(
    masks,
    r: int,
    t: int,
    target: int,
    nontrivial: bool = False,
    universe_mask: int = 0,
    node_cap: int | None = None,
    max_solutions: int | None = None,
):
    """Every family of size exactly `target` (the certified optimum) under
    the r-wise t rule, in colex DFS order.

    Returns (solutions, nodes, truncated); solutions are index tuples and the
    list is complete iff truncated is False.
    """
    solutions: list[tuple[int, ...]] = []
    nodes = 0
    levels = _Levels(r)
    chosen: list[int] = []
    inter_stack = [universe_mask]
    truncated = False

    def expand(active):
        nonlocal nodes
        while active:
            if len(chosen) + len(active) < target:
                return
            c = active[0]
            rest = active[1:]
            nodes += 1
            if node_cap is not None and nodes > node_cap:
                raise _Truncated
            token, new_top = levels.add(masks[c])
            chosen.append(c)
            inter_stack.append(inter_stack[-1] & masks[c])
            if len(chosen) == target:
                if not nontrivial or inter_stack[-1] == 0:
                    solutions.append(tuple(chosen))
                    if max_solutions is not None and len(solutions) >= max_solutions:
                        raise _Truncated
            else:
                new_active = [
                    d
                    for d in rest
                    if all((m & masks[d]).bit_count() >= t for m in new_top)
                ]
                expand(new_active)
            levels.undo(token)
            chosen.pop()
            inter_stack.pop()
            active = rest

    if target <= 0:
        return [], 0, False
    root = [i for i in range(len(masks)) if masks[i].bit_count() >= t]
    try:
        expand(root)
    except _Truncated:
        truncated = True
    return solutions, nodes, truncated


def solve_max_upset(
    n: int,
    r: int,
    t: int,
    nontrivial: bool = False,
    node_cap: int | None = None,
):
    """Maximum size of an r-wise t-intersecting family in 2^[n], searched as
    up-sets generated by antichains of minimal elements (an optimum may
    always be taken up-closed).

    The up-set is checked through its minimal elements only.  Returns
    (best_size, antichain_mask_tuple, nodes).
    """
    if n < 0 or n > 6:
        raise ValueError("non-uniform search capped at n <= 6")
    full = (1 << n) - 1
    n_subsets = 1 << n
    sup_mask = [0] * n_subsets
    for s in range(n_subsets):
        free = full & ~s
        m = 0
        while True:
            sup_mask[s] |= 1 << (s | m)
            if m == free:
                break
            m = (m - free) & free

    cands = [s for s in range(1, n_subsets) if s.bit_count() >= t]
    best = 0
    best_ac: tuple[int, ...] = ()
    nodes = 0
    levels = _Levels(r)
    chosen: list[int] = []
    inter_stack = [full]

    def expand(active, cur_up):
        nonlocal best, best_ac, nodes
        while active:
            union = cur_up
            for d in active:
                union |= sup_mask[d]
            if union.bit_count() <= best:
                return
            c = active[0]
            rest = active[1:]
            nodes += 1
            if node_cap is not None and nodes > node_cap:
                raise NodeBudgetExceeded(f"node cap {node_cap} exceeded")
            token, new_top = levels.add(c)
            chosen.append(c)
            inter_stack.append(inter_stack[-1] & c)
            new_up = cur_up | sup_mask[c]
            if not nontrivial or inter_stack[-1] == 0:
                sz = new_up.bit_count()
                if sz > best:
                    best = sz
                    best_ac = tuple(chosen)
            new_active = [
                d
                for d in rest
                if d & c != c  # supersets of c are not minimal any more
                and d & c != d
                and all((m & d).bit_count() >= t for m in new_top)
            ]
            expand(new_active, new_up)
            levels.undo(token)
            chosen.pop()
            inter_stack.pop()
            active = rest

    expand(cands, 0)
    return best, best_ac, nodes


def enumerate_maximal(masks, r: int, t: int, node_cap: int | None = None):
    """All maximal r-wise t-intersecting families over the candidate masks
    (pivot-free Bron-Kerbosch style with an excluded set).  Returns
    (list of index tuples, nodes)."""
    results: list[tuple[int, ...]] = []
    nodes = 0
    levels = _Levels(r)
    chosen: list[int] = []

    def compat(d, new_top):
        return all((m & masks[d]).bit_count() >= t for m in new_top)

    def bk(P, X):
        nonlocal nodes
        if not P and not X:
            results.append(tuple(chosen))
            return
        P = list(P)
        X = list(X)
        while P:
            c = P.pop(0)
            nodes += 1
            if node_cap is not None and nodes > node_cap:
                raise NodeBudgetExceeded(f"node cap {node_cap} exceeded")
            token, new_top = levels.add(masks[c])
            chosen.append(c)
            bk([d for d in P if compat(d, new_top)],
               [d for d in X if compat(d, new_top)])
            levels.undo(token)
            chosen.pop()
            X.append(c)

    bk([i for i in range(len(masks)) if masks[i].bit_count() >= t], [])
    return results, nodes
