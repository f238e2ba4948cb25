# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels. Semantics, search order and tie-breaking must stay in
lockstep with treecast._pykernels (the pure twin); the parity tests compare
the two backends witness for witness."""

import numpy as np

cdef extern from *:
    """
    #define POPCNT64(x) __builtin_popcountll((unsigned long long)(x))
    #define CTZ64(x)    __builtin_ctzll((unsigned long long)(x))
    """
    int POPCNT64(unsigned long long) nogil
    int CTZ64(unsigned long long) nogil

ctypedef unsigned long long u64

DEF MAXN = 64  # subset kernels cap n at 62; fixed buffers are sized to this


def backend():
    return "compiled"


# -- distances ----------------------------------------------------------------


def bfs_all_pairs(int n, eu_in, ev_in):
    cdef const int[:] eu = np.ascontiguousarray(eu_in, dtype=np.int32)
    cdef const int[:] ev = np.ascontiguousarray(ev_in, dtype=np.int32)
    cdef int m = eu.shape[0]
    indptr_np = np.zeros(n + 1, dtype=np.int32)
    cdef int[:] indptr = indptr_np
    cdef int[:] nbr = np.empty(2 * m, dtype=np.int32)
    cdef int[:] fill = np.zeros(n, dtype=np.int32)
    cdef int i, u, v
    for i in range(m):
        indptr[eu[i] + 1] += 1
        indptr[ev[i] + 1] += 1
    for i in range(n):
        indptr[i + 1] += indptr[i]
    for i in range(m):
        u = eu[i]
        v = ev[i]
        nbr[indptr[u] + fill[u]] = v
        fill[u] += 1
        nbr[indptr[v] + fill[v]] = u
        fill[v] += 1
    out_np = np.empty((n, n), dtype=np.int16)
    cdef short[:, :] out = out_np
    cdef int[:] queue = np.empty(n, dtype=np.int32)
    cdef int src, head, tail, x, j, y
    cdef short dx
    with nogil:
        for src in range(n):
            for i in range(n):
                out[src, i] = -1
            out[src, src] = 0
            queue[0] = src
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                dx = out[src, x] + 1
                for j in range(indptr[x], indptr[x + 1]):
                    y = nbr[j]
                    if out[src, y] < 0:
                        out[src, y] = dx
                        queue[tail] = y
                        tail += 1
    return out_np


# -- feasibility checks (matrix flavour) ---------------------------------------


def packing_violation(dist_in, powers_in):
    cdef const short[:, :] dist = np.ascontiguousarray(dist_in, dtype=np.int16)
    cdef const int[:] powers = np.ascontiguousarray(powers_in, dtype=np.int32)
    cdef int n = dist.shape[0]
    senders_np = np.empty(n, dtype=np.int32)
    cdef int[:] senders = senders_np
    cdef int ns = 0, u, v, i, heard
    for v in range(n):
        if powers[v] > 0:
            senders[ns] = v
            ns += 1
    for u in range(n):
        heard = 0
        for i in range(ns):
            v = senders[i]
            if dist[u, v] <= powers[v]:
                heard += 1
                if heard == 2:
                    return u
    return -1


def independence_violation(dist_in, powers_in):
    cdef const short[:, :] dist = np.ascontiguousarray(dist_in, dtype=np.int16)
    cdef const int[:] powers = np.ascontiguousarray(powers_in, dtype=np.int32)
    cdef int n = dist.shape[0]
    senders_np = np.empty(n, dtype=np.int32)
    cdef int[:] senders = senders_np
    cdef int ns = 0, u, v, i, j
    for v in range(n):
        if powers[v] > 0:
            senders[ns] = v
            ns += 1
    for i in range(ns):
        v = senders[i]
        for j in range(ns):
            u = senders[j]
            if u != v and dist[v, u] <= powers[u]:
                return v
    return -1


def multicover_violation(dist_in, tokens_in, eccs_in):
    cdef const short[:, :] dist = np.ascontiguousarray(dist_in, dtype=np.int16)
    cdef const unsigned char[:] tokens = np.ascontiguousarray(tokens_in, dtype=np.uint8)
    cdef const int[:] eccs = np.ascontiguousarray(eccs_in, dtype=np.int32)
    cdef int n = dist.shape[0]
    tok_np = np.empty(n, dtype=np.int32)
    cdef int[:] tok = tok_np
    cdef int nt = 0, v, t, i, e, k, run, dd
    for v in range(n):
        if tokens[v]:
            tok[nt] = v
            nt += 1
    cnt_np = np.zeros(n + 1, dtype=np.int32)
    cdef int[:] cnt = cnt_np
    for v in range(n):
        e = eccs[v]
        for k in range(e + 1):
            cnt[k] = 0
        for i in range(nt):
            t = tok[i]
            dd = dist[v, t]
            if dd <= e:
                cnt[dd] += 1
        run = cnt[0]
        for k in range(1, e + 1):
            run += cnt[k]
            if run < k:
                return (v, k, run)
    return None


# -- exhaustive searches ---------------------------------------------------------


cdef bint _mask_lex_smaller(u64 a, u64 b) nogil:
    # compare vertex sets by their sorted member tuples
    cdef u64 x = a ^ b
    cdef int j
    if x == 0:
        return False
    j = CTZ64(x)
    if (a >> j) & 1:
        return (b >> j) == 0  # b ran out first: b is a strict prefix of a
    return (a >> j) == 0


def _witness_key_py(powers):
    senders = tuple(i for i, p in enumerate(powers) if p > 0)
    return (senders, tuple(powers[i] for i in senders))


def alpha_subset_scan(dist_in, allowed_mask):
    cdef const short[:, :] dist = np.ascontiguousarray(dist_in, dtype=np.int16)
    cdef int n = dist.shape[0]
    if n > 62:
        raise ValueError(f"subset scan is limited to n <= 62, got {n}")
    cdef u64 allowed = <u64> allowed_mask
    cdef u64 adj[MAXN]
    cdef int u, v, dd, mind
    cdef u64 s = 0, mm, rest, b
    cdef long best_val = -1, val
    cdef u64 best_mask = 0
    cdef long long explored = 0
    cdef bint ok
    for u in range(n):
        adj[u] = 0
        for v in range(n):
            if dist[u, v] == 1:
                adj[u] |= (<u64> 1) << v
    while True:
        s = (s - allowed) & allowed  # next submask, ascending
        if s == 0:
            break
        if (s & (s - 1)) == 0:
            continue  # need at least two broadcasters
        explored += 1
        mm = s
        val = 0
        ok = True
        while mm:
            v = CTZ64(mm)
            mm &= mm - 1
            if adj[v] & s:
                ok = False  # adjacent pair: one always hears the other
                break
            rest = s & ~((<u64> 1) << v)
            mind = 1 << 30
            while rest:
                u = CTZ64(rest)
                rest &= rest - 1
                dd = dist[v, u]
                if dd < mind:
                    mind = dd
            val += mind - 1
        if ok:
            if val > best_val:
                best_val = val
                best_mask = s
            elif val == best_val and _mask_lex_smaller(s, best_mask):
                best_mask = s
    return int(best_val), int(best_mask), int(explored)


cdef class _Tiny:
    cdef const short[:, :] d
    cdef int n
    cdef int ecc[MAXN]
    cdef long suffix[MAXN + 1]
    cdef int powers[MAXN]
    cdef long best_val
    cdef object best_powers
    cdef long long explored

    cdef int rec(self, int i, long cur) except -1:
        self.explored += 1
        if cur + self.suffix[i] <= self.best_val:
            return 0
        cdef int j, p, cap, pj
        cdef bint blocked
        if i == self.n:
            self.best_val = cur
            self.best_powers = tuple([self.powers[j] for j in range(self.n)])
            return 0
        cap = self.ecc[i]
        blocked = False
        for j in range(i):
            pj = self.powers[j]
            if pj:
                if self.d[i, j] <= pj:
                    blocked = True  # i would hear j, so i must stay silent
                    break
                if self.d[i, j] - 1 < cap:
                    cap = self.d[i, j] - 1  # j must not hear i
        if not blocked:
            for p in range(cap, 0, -1):
                self.powers[i] = p
                self.rec(i + 1, cur + p)
            self.powers[i] = 0
        self.rec(i + 1, cur)
        return 0


def alpha_tiny_scan(dist_in, eccs_in):
    cdef const short[:, :] dist = np.ascontiguousarray(dist_in, dtype=np.int16)
    cdef const int[:] eccs = np.ascontiguousarray(eccs_in, dtype=np.int32)
    cdef int n = dist.shape[0]
    if n > 62:
        raise ValueError(f"power enumeration is limited to n <= 62, got {n}")
    cdef _Tiny st = _Tiny.__new__(_Tiny)
    st.d = dist
    st.n = n
    cdef int i
    st.suffix[n] = 0
    for i in range(n - 1, -1, -1):
        st.ecc[i] = eccs[i]
        st.powers[i] = 0
        st.suffix[i] = st.suffix[i + 1] + eccs[i]
    st.best_val = -1
    st.best_powers = None
    st.explored = 0
    st.rec(0, 0)
    return int(st.best_val), st.best_powers, int(st.explored)


cdef class _PB:
    cdef const short[:, :] d
    cdef int n
    cdef int cap[MAXN]
    cdef int powers[MAXN]
    cdef long best_val
    cdef object best_powers
    cdef object best_key
    cdef long long explored

    cdef int rec(self, int i, long cur) except -1:
        self.explored += 1
        cdef long rem = 0
        cdef int j, c, p, nc, c0
        for j in range(i, self.n):
            c = self.cap[j]
            if c > 0:
                rem += c
        if cur + rem < self.best_val:
            return 0
        if i == self.n:
            if cur > self.best_val:
                self.best_val = cur
                self.best_powers = tuple([self.powers[j] for j in range(self.n)])
                self.best_key = _witness_key_py(self.best_powers)
            elif cur == self.best_val:
                powers = tuple([self.powers[j] for j in range(self.n)])
                key = _witness_key_py(powers)
                if key < self.best_key:
                    self.best_powers = powers
                    self.best_key = key
            return 0
        cdef int saved[MAXN]
        c0 = self.cap[i]
        for p in range(c0, 0, -1):
            self.powers[i] = p
            for j in range(i + 1, self.n):
                saved[j] = self.cap[j]
                nc = self.d[i, j] - 1 - p
                if nc < self.cap[j]:
                    self.cap[j] = nc
            self.rec(i + 1, cur + p)
            for j in range(i + 1, self.n):
                self.cap[j] = saved[j]
        self.powers[i] = 0
        self.rec(i + 1, cur)
        return 0


def pb_search(dist_in, eccs_in, seed_val, seed_powers):
    cdef const short[:, :] dist = np.ascontiguousarray(dist_in, dtype=np.int16)
    cdef const int[:] eccs = np.ascontiguousarray(eccs_in, dtype=np.int32)
    cdef int n = dist.shape[0]
    if n > 62:
        raise ValueError(f"packing search is limited to n <= 62, got {n}")
    cdef _PB st = _PB.__new__(_PB)
    st.d = dist
    st.n = n
    cdef int i
    for i in range(n):
        st.cap[i] = eccs[i]
        st.powers[i] = 0
    st.best_val = seed_val
    st.best_powers = tuple(int(x) for x in seed_powers)
    st.best_key = _witness_key_py(st.best_powers)
    st.explored = 0
    st.rec(0, 0)
    return int(st.best_val), st.best_powers, int(st.explored)


cdef class _MC:
    cdef const u64[:] balls
    cdef const int[:] needs
    cdef int C
    cdef dict memo
    cdef long long explored

    cdef object rec(self, u64 S, int left):
        self.explored += 1
        cdef int idx, have, deficit, worst = -1, wdef = 0, u
        cdef u64 cand, b
        for idx in range(self.C):
            have = POPCNT64(S & self.balls[idx])
            deficit = self.needs[idx] - have
            if deficit > wdef:
                wdef = deficit
                worst = idx
        if worst == -1:
            return int(S)
        if wdef > left:
            return None
        key = int(S)
        prev = self.memo.get(key, -1)
        if prev >= left:
            return None
        self.memo[key] = left
        cand = self.balls[worst] & ~S
        while cand:
            b = cand & (~cand + 1)
            cand ^= b
            u = CTZ64(b)
            r = self.rec(S | b, left - 1)
            if r is not None:
                return r
        return None


def mc_complete(ball_masks, needs_in, n, budget, forced):
    cdef const u64[:] balls = np.ascontiguousarray(ball_masks, dtype=np.uint64)
    cdef const int[:] needs = np.ascontiguousarray(needs_in, dtype=np.int32)
    if n > 62:
        raise ValueError(f"cover search is limited to n <= 62, got {n}")
    cdef _MC st = _MC.__new__(_MC)
    st.balls = balls
    st.needs = needs
    st.C = balls.shape[0]
    st.memo = {}
    st.explored = 0
    cdef u64 start = <u64> forced
    cdef int left0 = budget - POPCNT64(start)
    if left0 < 0:
        return -1, 0
    out = st.rec(start, left0)
    return (out if out is not None else -1), int(st.explored)
