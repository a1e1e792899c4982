# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mirrors of the pure search kernels.

Same entry points, same semantics, same branching order and node counts as
``_pure`` (the contracts live there); this version keeps candidate masks in C
arrays and dedups intersection masks through direct-address tables, so the
ground set is capped at MAX_GROUND elements and r at MAX_R.  ``_kernel``
falls back to the pure implementation beyond those limits.
"""

from libc.stdlib cimport calloc, free, malloc

from ._pure import NodeBudgetExceeded

ctypedef unsigned long long u64

cdef extern from *:
    """
    static inline int ilab_popcountll(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    """
    int ilab_popcountll(u64 x) nogil

BACKEND = "compiled"
MAX_GROUND = 20
MAX_R = 8


class _Truncated(Exception):
    pass


cdef struct Levels:
    int nlev
    u64 **data
    int *lens
    unsigned char **seen


cdef int levels_init(Levels *lv, int nlev, int n_bits) except -1:
    cdef int j
    cdef size_t cap = (<size_t>1) << n_bits
    lv.nlev = nlev
    lv.data = <u64 **>calloc(nlev, sizeof(u64 *))
    lv.seen = <unsigned char **>calloc(nlev, sizeof(unsigned char *))
    lv.lens = <int *>calloc(nlev, sizeof(int))
    if lv.data == NULL or lv.seen == NULL or lv.lens == NULL:
        raise MemoryError()
    for j in range(nlev):
        lv.data[j] = <u64 *>malloc(cap * sizeof(u64))
        lv.seen[j] = <unsigned char *>calloc(cap, 1)
        if lv.data[j] == NULL or lv.seen[j] == NULL:
            raise MemoryError()
    return 0


cdef void levels_free(Levels *lv) noexcept:
    cdef int j
    if lv.data != NULL:
        for j in range(lv.nlev):
            if lv.data[j] != NULL:
                free(lv.data[j])
        free(lv.data)
    if lv.seen != NULL:
        for j in range(lv.nlev):
            if lv.seen[j] != NULL:
                free(lv.seen[j])
        free(lv.seen)
    if lv.lens != NULL:
        free(lv.lens)


cdef inline int levels_add(Levels *lv, u64 c, int *token) noexcept:
    """Insert c; stores prior lengths in token, returns the top-level start
    offset of the newly added masks."""
    cdef int j, i, ln
    cdef u64 x
    for j in range(lv.nlev):
        token[j] = lv.lens[j]
    if not lv.seen[0][c]:
        lv.seen[0][c] = 1
        lv.data[0][lv.lens[0]] = c
        lv.lens[0] += 1
    for j in range(1, lv.nlev):
        ln = lv.lens[j - 1]
        for i in range(ln):
            x = lv.data[j - 1][i] & c
            if not lv.seen[j][x]:
                lv.seen[j][x] = 1
                lv.data[j][lv.lens[j]] = x
                lv.lens[j] += 1
    return token[lv.nlev - 1]


cdef inline void levels_undo(Levels *lv, int *token) noexcept:
    cdef int j
    for j in range(lv.nlev):
        while lv.lens[j] > token[j]:
            lv.lens[j] -= 1
            lv.seen[j][lv.data[j][lv.lens[j]]] = 0


cdef inline bint compat_new(Levels *lv, u64 d, int start, int t) noexcept:
    cdef int i
    cdef u64 *top = lv.data[lv.nlev - 1]
    cdef int ln = lv.lens[lv.nlev - 1]
    for i in range(start, ln):
        if ilab_popcountll(top[i] & d) < t:
            return False
    return True


cdef struct Solver:
    int N
    int r
    int t
    u64 *masks
    int *pred_off
    int *pred_dat
    bint has_preds
    Levels lv
    int *chosen
    unsigned char *chosen_flag
    int n_chosen
    u64 *inter_stack
    bint nontrivial
    long long nodes
    long long node_cap
    int best
    int *best_wit
    bint have_wit
    int global_ub
    int *pool
    int *tok_pool
    long long *mark_gen
    long long gen
    int target
    long long max_solutions


cdef int alive_filter(Solver *s, int *arr, int ln) noexcept:
    """Keep candidates whose cover predecessors are all chosen or still kept
    (predecessor indices are smaller, so one ascending pass is exact)."""
    cdef int w = 0, i, j, d, p
    cdef bint ok
    s.gen += 1
    for i in range(ln):
        d = arr[i]
        ok = True
        for j in range(s.pred_off[d], s.pred_off[d + 1]):
            p = s.pred_dat[j]
            if not s.chosen_flag[p] and s.mark_gen[p] != s.gen:
                ok = False
                break
        if ok:
            arr[w] = d
            s.mark_gen[d] = s.gen
            w += 1
    return w


cdef int expand(Solver *s, solutions, int *active, int alen, int depth) except -1:
    cdef int c, i, j, na, start
    cdef int *rest
    cdef int *new_active = s.pool + (<size_t>(depth + 1)) * s.N
    cdef int *token = s.tok_pool + (<size_t>depth) * (s.r - 1)
    cdef u64 cm
    cdef bint inc_ok
    while alen > 0:
        if s.target < 0:
            if s.best >= s.global_ub or s.n_chosen + alen <= s.best:
                return 0
        else:
            if s.n_chosen + alen < s.target:
                return 0
        c = active[0]
        rest = active + 1
        alen -= 1
        inc_ok = True
        if s.has_preds:
            for i in range(s.pred_off[c], s.pred_off[c + 1]):
                if not s.chosen_flag[s.pred_dat[i]]:
                    inc_ok = False
                    break
        if inc_ok:
            s.nodes += 1
            if s.node_cap >= 0 and s.nodes > s.node_cap:
                if s.target < 0:
                    raise NodeBudgetExceeded(f"node cap {s.node_cap} exceeded")
                raise _Truncated()
            cm = s.masks[c]
            start = levels_add(&s.lv, cm, token)
            s.chosen[s.n_chosen] = c
            s.chosen_flag[c] = 1
            s.n_chosen += 1
            s.inter_stack[s.n_chosen] = s.inter_stack[s.n_chosen - 1] & cm
            if s.target >= 0 and s.n_chosen == s.target:
                if not s.nontrivial or s.inter_stack[s.n_chosen] == 0:
                    solutions.append(tuple(s.chosen[j] for j in range(s.n_chosen)))
                    if s.max_solutions >= 0 and len(solutions) >= s.max_solutions:
                        raise _Truncated()
            else:
                if (
                    s.target < 0
                    and (not s.nontrivial or s.inter_stack[s.n_chosen] == 0)
                    and s.n_chosen > s.best
                ):
                    s.best = s.n_chosen
                    for j in range(s.n_chosen):
                        s.best_wit[j] = s.chosen[j]
                    s.have_wit = True
                na = 0
                for i in range(alen):
                    if compat_new(&s.lv, s.masks[rest[i]], start, s.t):
                        new_active[na] = rest[i]
                        na += 1
                if s.has_preds:
                    na = alive_filter(s, new_active, na)
                expand(s, solutions, new_active, na, depth + 1)
            levels_undo(&s.lv, token)
            s.n_chosen -= 1
            s.chosen_flag[c] = 0
        active = rest
        if s.has_preds:
            alen = alive_filter(s, active, alen)
    return 0


cdef int _ground_bits(masks, universe_mask) except -1:
    cdef int n_bits = max(int(universe_mask).bit_length(), 1)
    cdef int b
    for m in masks:
        b = int(m).bit_length()
        if b > n_bits:
            n_bits = b
    if n_bits > MAX_GROUND:
        raise ValueError(f"compiled kernel limited to {MAX_GROUND} ground elements")
    return n_bits


cdef int solver_init(
    Solver *s, masks, int r, int t, preds, bint nontrivial,
    node_cap, universe_mask, int target, max_solutions,
) except -1:
    cdef int N = len(masks)
    cdef int i, j, total
    if r < 2 or r > MAX_R:
        raise ValueError(f"compiled kernel supports 2 <= r <= {MAX_R}")
    s.N = N
    s.r = r
    s.t = t
    s.nontrivial = nontrivial
    s.nodes = 0
    s.node_cap = -1 if node_cap is None else <long long>node_cap
    s.best = 0
    s.have_wit = False
    s.global_ub = N
    s.n_chosen = 0
    s.gen = 0
    s.target = target
    s.max_solutions = -1 if max_solutions is None else <long long>max_solutions
    s.masks = <u64 *>malloc(max(N, 1) * sizeof(u64))
    s.chosen = <int *>malloc(max(N, 1) * sizeof(int))
    s.best_wit = <int *>malloc(max(N, 1) * sizeof(int))
    s.chosen_flag = <unsigned char *>calloc(max(N, 1), 1)
    s.inter_stack = <u64 *>malloc((N + 2) * sizeof(u64))
    s.pool = <int *>malloc((<size_t>(N + 2)) * max(N, 1) * sizeof(int))
    s.tok_pool = <int *>malloc((<size_t>(N + 2)) * (r - 1) * sizeof(int))
    s.mark_gen = <long long *>calloc(max(N, 1), sizeof(long long))
    s.pred_off = NULL
    s.pred_dat = NULL
    if (
        s.masks == NULL or s.chosen == NULL or s.best_wit == NULL
        or s.chosen_flag == NULL or s.inter_stack == NULL or s.pool == NULL
        or s.tok_pool == NULL or s.mark_gen == NULL
    ):
        raise MemoryError()
    for i in range(N):
        s.masks[i] = <u64>int(masks[i])
    s.inter_stack[0] = <u64>int(universe_mask)
    s.has_preds = preds is not None
    if s.has_preds:
        total = 0
        for i in range(N):
            total += len(preds[i])
        s.pred_off = <int *>malloc((N + 1) * sizeof(int))
        s.pred_dat = <int *>malloc(max(total, 1) * sizeof(int))
        if s.pred_off == NULL or s.pred_dat == NULL:
            raise MemoryError()
        total = 0
        for i in range(N):
            s.pred_off[i] = total
            for j in range(len(preds[i])):
                s.pred_dat[total] = <int>preds[i][j]
                total += 1
        s.pred_off[N] = total
    levels_init(&s.lv, r - 1, _ground_bits(masks, universe_mask))
    return 0


cdef void solver_free(Solver *s) noexcept:
    levels_free(&s.lv)
    free(s.masks)
    free(s.chosen)
    free(s.best_wit)
    free(s.chosen_flag)
    free(s.inter_stack)
    free(s.pool)
    free(s.tok_pool)
    free(s.mark_gen)
    if s.pred_off != NULL:
        free(s.pred_off)
    if s.pred_dat != NULL:
        free(s.pred_dat)


def solve_max(
    masks,
    int r,
    int t,
    preds=None,
    int lb=0,
    global_ub=None,
    node_cap=None,
    bint nontrivial=False,
    universe_mask=0,
):
    """See _pure.solve_max."""
    cdef Solver s
    cdef int i, na
    solver_init(&s, masks, r, t, preds, nontrivial, node_cap, universe_mask, -1, None)
    try:
        s.best = lb
        s.global_ub = s.N if global_ub is None else min(<long long>global_ub, <long long>s.N)
        na = 0
        for i in range(s.N):
            if ilab_popcountll(s.masks[i]) >= t:
                s.pool[na] = i
                na += 1
        if s.has_preds:
            na = alive_filter(&s, s.pool, na)
        expand(&s, None, s.pool, na, 0)
        wit = tuple(s.best_wit[i] for i in range(s.best)) if s.have_wit else None
        return s.best, wit, s.nodes
    finally:
        solver_free(&s)


def enumerate_exact(
    masks,
    int r,
    int t,
    int target,
    bint nontrivial=False,
    universe_mask=0,
    node_cap=None,
    max_solutions=None,
):
    """See _pure.enumerate_exact."""
    cdef Solver s
    cdef int i, na
    cdef bint truncated = False
    if target <= 0:
        return [], 0, False
    solutions = []
    solver_init(
        &s, masks, r, t, None, nontrivial, node_cap, universe_mask, target,
        max_solutions,
    )
    try:
        na = 0
        for i in range(s.N):
            if ilab_popcountll(s.masks[i]) >= t:
                s.pool[na] = i
                na += 1
        try:
            expand(&s, solutions, s.pool, na, 0)
        except _Truncated:
            truncated = True
        return solutions, s.nodes, truncated
    finally:
        solver_free(&s)


cdef struct UpSolver:
    int nsub
    int r
    int t
    u64 *sup
    Levels lv
    int *pool
    int *tok_pool
    int *chosen
    int n_chosen
    u64 *inter_stack
    bint nontrivial
    long long nodes
    long long cap
    int best
    int *best_ac
    int best_len


cdef int up_expand(UpSolver *u, int *active, int alen, int depth, u64 cur_up) except -1:
    cdef int c, d, i, j, na, start, sz
    cdef int *rest
    cdef int *new_active = u.pool + (<size_t>(depth + 1)) * u.nsub
    cdef int *token = u.tok_pool + (<size_t>depth) * (u.r - 1)
    cdef u64 union_, new_up
    while alen > 0:
        union_ = cur_up
        for i in range(alen):
            union_ |= u.sup[active[i]]
        if ilab_popcountll(union_) <= u.best:
            return 0
        c = active[0]
        rest = active + 1
        alen -= 1
        u.nodes += 1
        if u.cap >= 0 and u.nodes > u.cap:
            raise NodeBudgetExceeded(f"node cap {u.cap} exceeded")
        start = levels_add(&u.lv, <u64>c, token)
        u.chosen[u.n_chosen] = c
        u.n_chosen += 1
        u.inter_stack[u.n_chosen] = u.inter_stack[u.n_chosen - 1] & <u64>c
        new_up = cur_up | u.sup[c]
        if not u.nontrivial or u.inter_stack[u.n_chosen] == 0:
            sz = ilab_popcountll(new_up)
            if sz > u.best:
                u.best = sz
                u.best_len = u.n_chosen
                for j in range(u.n_chosen):
                    u.best_ac[j] = u.chosen[j]
        na = 0
        for i in range(alen):
            d = rest[i]
            if (d & c) != c and (d & c) != d and compat_new(&u.lv, <u64>d, start, u.t):
                new_active[na] = d
                na += 1
        up_expand(u, new_active, na, depth + 1, new_up)
        levels_undo(&u.lv, token)
        u.n_chosen -= 1
        active = rest
    return 0


def solve_max_upset(int n, int r, int t, bint nontrivial=False, node_cap=None):
    """See _pure.solve_max_upset."""
    cdef UpSolver u
    cdef int i, na
    cdef u64 full, free_bits, m
    if n < 0 or n > 6:
        raise ValueError("non-uniform search capped at n <= 6")
    if r < 2 or r > MAX_R:
        raise ValueError(f"compiled kernel supports 2 <= r <= {MAX_R}")
    full = (<u64>1 << n) - 1
    u.nsub = 1 << n
    u.r = r
    u.t = t
    u.nontrivial = nontrivial
    u.nodes = 0
    u.cap = -1 if node_cap is None else <long long>node_cap
    u.best = 0
    u.best_len = 0
    u.n_chosen = 0
    u.sup = <u64 *>calloc(u.nsub, sizeof(u64))
    u.pool = <int *>malloc((<size_t>(u.nsub + 2)) * u.nsub * sizeof(int))
    u.tok_pool = <int *>malloc((<size_t>(u.nsub + 2)) * (r - 1) * sizeof(int))
    u.chosen = <int *>malloc(u.nsub * sizeof(int))
    u.best_ac = <int *>malloc(u.nsub * sizeof(int))
    u.inter_stack = <u64 *>malloc((u.nsub + 2) * sizeof(u64))
    if (
        u.sup == NULL or u.pool == NULL or u.tok_pool == NULL
        or u.chosen == NULL or u.best_ac == NULL or u.inter_stack == NULL
    ):
        raise MemoryError()
    levels_init(&u.lv, r - 1, 6)
    try:
        for i in range(u.nsub):
            free_bits = full & ~(<u64>i)
            m = 0
            while True:
                u.sup[i] |= <u64>1 << (i | m)
                if m == free_bits:
                    break
                m = (m - free_bits) & free_bits
        u.inter_stack[0] = full
        na = 0
        for i in range(1, u.nsub):
            if ilab_popcountll(<u64>i) >= t:
                u.pool[na] = i
                na += 1
        up_expand(&u, u.pool, na, 0, 0)
        return u.best, tuple(u.best_ac[i] for i in range(u.best_len)), u.nodes
    finally:
        levels_free(&u.lv)
        free(u.sup)
        free(u.pool)
        free(u.tok_pool)
        free(u.chosen)
        free(u.best_ac)
        free(u.inter_stack)
