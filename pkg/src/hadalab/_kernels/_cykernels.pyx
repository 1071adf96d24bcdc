# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the hot kernels; semantics mirror _pykernels bit for
bit, including hit ordering and node counts."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef extern from *:
    """
    #define POPCNT64(x) __builtin_popcountll(x)
    """
    int POPCNT64(unsigned long long x) nogil

ctypedef unsigned long long u64

BACKEND = "cython"


cdef inline u64 _rot(u64 mask, int n, int k) nogil:
    if k == 0:
        return mask
    return ((mask >> k) | (mask << (n - k))) & ((<u64>1 << n) - 1)


cdef inline bint _is_hadamard(u64 mask, int n) nogil:
    cdef int k
    for k in range(1, n):
        if 2 * POPCNT64(mask ^ _rot(mask, n, k)) != n:
            return 0
    return 1


def invariant_scan(int n, coset_masks, start, stop, targets):
    cdef int r = len(coset_masks)
    cdef u64 cm[64]
    cdef u64 pref[65]
    cdef bint targ[65]
    cdef bint use_targets = targets is not None
    cdef int j
    pref[0] = 0
    for j in range(r):
        cm[j] = coset_masks[j]
        pref[j + 1] = pref[j] ^ cm[j]
    for j in range(n + 1):
        targ[j] = 0
    if use_targets:
        for j in targets:
            targ[j] = 1
    cdef u64 g = start
    cdef u64 g_stop = stop
    cdef u64 cur = 0
    cdef long long checked = 0
    cdef int z
    hits = []
    for j in range(r):
        if (g >> j) & 1:
            cur ^= cm[j]
    while g < g_stop:
        if (not use_targets) or targ[POPCNT64(cur)]:
            checked += 1
            if _is_hadamard(cur, n):
                hits.append(int(cur))
        g += 1
        if g < g_stop:
            z = POPCNT64((g & (0 - g)) - 1)
            cur ^= pref[z] ^ cm[z]
    return hits, int(checked)


cdef struct DScan:
    int n
    int r
    int target
    int lam
    int nprefix
    u64 *cmask
    int *sizes
    int *remaining
    int *sup_flat
    int *sup_off
    int *counts
    int *forced
    int *elems
    int nelems
    long long nodes


cdef bint _dscan_add(DScan *st, int j) nogil:
    cdef bint ok = 1
    cdef int i1, i2, x, y, d
    cdef int lo = st.sup_off[j], hi = st.sup_off[j + 1]
    for i1 in range(lo, hi):
        x = st.sup_flat[i1]
        for i2 in range(st.nelems):
            y = st.elems[i2]
            d = (x - y) % st.n
            if d < 0:
                d += st.n
            st.counts[d] += 1
            if st.counts[d] > st.lam:
                ok = 0
            d = st.n - d if d else 0
            st.counts[d] += 1
            if st.counts[d] > st.lam:
                ok = 0
    for i1 in range(lo, hi):
        for i2 in range(lo, hi):
            if i1 != i2:
                d = (st.sup_flat[i1] - st.sup_flat[i2]) % st.n
                if d < 0:
                    d += st.n
                st.counts[d] += 1
                if st.counts[d] > st.lam:
                    ok = 0
    return ok


cdef void _dscan_remove(DScan *st, int j) nogil:
    cdef int i1, i2, x, y, d
    cdef int lo = st.sup_off[j], hi = st.sup_off[j + 1]
    for i1 in range(lo, hi):
        x = st.sup_flat[i1]
        for i2 in range(st.nelems):
            y = st.elems[i2]
            d = (x - y) % st.n
            if d < 0:
                d += st.n
            st.counts[d] -= 1
            d = st.n - d if d else 0
            st.counts[d] -= 1
    for i1 in range(lo, hi):
        for i2 in range(lo, hi):
            if i1 != i2:
                d = (st.sup_flat[i1] - st.sup_flat[i2]) % st.n
                if d < 0:
                    d += st.n
                st.counts[d] -= 1


cdef void _dscan_walk(DScan *st, int j, u64 mask, int size, hits):
    cdef int take, lo, hi, i
    cdef bint ok
    st.nodes += 1
    if size > st.target or size + st.remaining[j] < st.target:
        return
    if j == st.r:
        if size == st.target and _is_hadamard(mask, st.n):
            hits.append(int(mask))
        return
    cdef int c0 = 0, c1 = 1
    if j < st.nprefix:
        c0 = st.forced[j]
        c1 = st.forced[j]
    for take in range(c0, c1 + 1):
        if take:
            ok = _dscan_add(st, j)
            if ok:
                lo = st.sup_off[j]
                hi = st.sup_off[j + 1]
                for i in range(lo, hi):
                    st.elems[st.nelems + (i - lo)] = st.sup_flat[i]
                st.nelems += hi - lo
                _dscan_walk(st, j + 1, mask | st.cmask[j], size + st.sizes[j], hits)
                st.nelems -= hi - lo
            _dscan_remove(st, j)
        else:
            _dscan_walk(st, j + 1, mask, size, hits)


def difference_scan(int n, coset_masks, int target_size, int lam, prefix):
    cdef int r = len(coset_masks)
    cdef DScan st
    cdef int j, i, total = 0
    st.n = n
    st.r = r
    st.target = target_size
    st.lam = lam
    st.nprefix = len(prefix)
    st.nodes = 0
    st.nelems = 0
    st.cmask = <u64 *> malloc(r * sizeof(u64))
    st.sizes = <int *> malloc(r * sizeof(int))
    st.remaining = <int *> malloc((r + 1) * sizeof(int))
    st.sup_off = <int *> malloc((r + 1) * sizeof(int))
    st.counts = <int *> malloc(n * sizeof(int))
    st.forced = <int *> malloc((st.nprefix + 1) * sizeof(int))
    st.elems = <int *> malloc((n + 1) * sizeof(int))
    memset(st.counts, 0, n * sizeof(int))
    try:
        for j in range(r):
            st.cmask[j] = coset_masks[j]
            st.sizes[j] = POPCNT64(st.cmask[j])
            total += st.sizes[j]
        st.sup_flat = <int *> malloc((total + 1) * sizeof(int))
        st.sup_off[0] = 0
        for j in range(r):
            i = st.sup_off[j]
            for k in range(n):
                if (st.cmask[j] >> k) & 1:
                    st.sup_flat[i] = k
                    i += 1
            st.sup_off[j + 1] = i
        st.remaining[r] = 0
        for j in range(r - 1, -1, -1):
            st.remaining[j] = st.remaining[j + 1] + st.sizes[j]
        for j in range(st.nprefix):
            st.forced[j] = prefix[j]
        hits = []
        _dscan_walk(&st, 0, 0, 0, hits)
        out = (hits, int(st.nodes))
        free(st.sup_flat)
        return out
    finally:
        free(st.cmask)
        free(st.sizes)
        free(st.remaining)
        free(st.sup_off)
        free(st.counts)
        free(st.forced)
        free(st.elems)


cdef inline u64 _gosper_next(u64 g) nogil:
    cdef u64 c = g & (0 - g)
    cdef u64 rr = g + c
    return (((rr ^ g) >> 2) // c) | rr


def hadamard_scan(int n, int support_size, g0, count):
    cdef u64 g = g0
    cdef long long cnt = count
    cdef long long i
    cdef u64 mask
    hits = []
    for i in range(cnt):
        mask = (g << 1) | 1
        if _is_hadamard(mask, n):
            hits.append(int(mask))
        if i + 1 < cnt and g:
            g = _gosper_next(g)
    return hits, int(cnt)


cdef struct BarkSt:
    int n
    int nprefix
    int *pos
    int *vals
    int *forced
    long long nodes


cdef inline bint _bark_shift_ok(BarkSt *st, int k) nogil:
    cdef int s = 0, i
    for i in range(st.n - k):
        s += st.vals[i] * st.vals[i + k]
    return s <= 1 and s >= -1


cdef inline bint _bark_leaf_ok(BarkSt *st) nogil:
    cdef int k, i, s
    for k in range(1, st.n):
        s = 0
        for i in range(st.n - k):
            s += st.vals[i] * st.vals[i + k]
        if s > 1 or s < -1:
            return 0
    return 1


cdef void _bark_walk(BarkSt *st, int step, hits):
    cdef int bit, k, i, c0 = 0, c1 = 1
    cdef u64 mask
    if step == st.n:
        if _bark_leaf_ok(st):
            mask = 0
            for i in range(st.n):
                if st.vals[i] < 0:
                    mask |= <u64>1 << i
            hits.append(int(mask))
        return
    if step - 1 < st.nprefix:
        c0 = st.forced[step - 1]
        c1 = st.forced[step - 1]
    for bit in range(c0, c1 + 1):
        st.vals[st.pos[step]] = -1 if bit else 1
        st.nodes += 1
        if step % 2 == 1:
            k = st.n - 1 - (step - 1) // 2
            if k >= 1 and not _bark_shift_ok(st, k):
                continue
        _bark_walk(st, step + 1, hits)


def barker_branch(int n, prefix):
    if n == 1:
        return ([0], 1)
    cdef BarkSt st
    cdef int j
    st.n = n
    st.nprefix = len(prefix)
    st.nodes = 0
    st.pos = <int *> malloc(n * sizeof(int))
    st.vals = <int *> malloc(n * sizeof(int))
    st.forced = <int *> malloc((st.nprefix + 1) * sizeof(int))
    try:
        for j in range(n):
            st.pos[j] = j // 2 if j % 2 == 0 else n - 1 - j // 2
        for j in range(st.nprefix):
            st.forced[j] = prefix[j]
        hits = []
        st.vals[0] = 1
        st.nodes += 1
        _bark_walk(&st, 1, hits)
        hits.sort()
        return hits, int(st.nodes)
    finally:
        free(st.pos)
        free(st.vals)
        free(st.forced)


cdef void _fill_perm_tables(int n, int a, u64 *tab) nogil:
    # tab laid out as [byte_index * 256 + byte_value]; destination bit t pulls
    # from source bit (a*t) % n
    cdef int t, sb, sj, byte
    cdef int nbytes = (n + 7) // 8
    memset(tab, 0, nbytes * 256 * sizeof(u64))
    for t in range(n):
        sb = ((a * t) % n) >> 3
        sj = ((a * t) % n) & 7
        for byte in range(256):
            if (byte >> sj) & 1:
                tab[sb * 256 + byte] |= <u64>1 << t


cdef inline u64 _apply_perm(u64 mask, int nbytes, u64 *tab) nogil:
    cdef u64 out = 0
    cdef int b
    for b in range(nbytes):
        out |= tab[b * 256 + ((mask >> (8 * b)) & 0xFF)]
    return out


def includes_exhaustive(int n, coset_masks, int b):
    cdef int r = len(coset_masks)
    cdef int nbytes = (n + 7) // 8
    cdef u64 cm[64]
    cdef u64 pref[65]
    cdef int j, z
    cdef u64 cur = 0, g
    cdef u64 total = <u64>1 << r
    cdef u64 *tab = <u64 *> malloc(nbytes * 256 * sizeof(u64))
    try:
        _fill_perm_tables(n, b, tab)
        pref[0] = 0
        for j in range(r):
            cm[j] = coset_masks[j]
            pref[j + 1] = pref[j] ^ cm[j]
        if _apply_perm(cur, nbytes, tab) != cur:
            return False
        g = 1
        while g < total:
            z = POPCNT64((g & (0 - g)) - 1)
            cur ^= pref[z] ^ cm[z]
            if _apply_perm(cur, nbytes, tab) != cur:
                return False
            g += 1
        return True
    finally:
        free(tab)


cdef void _fill_rev_tables(int n, u64 *tab) nogil:
    cdef int t, sb, sj, byte
    cdef int nbytes = (n + 7) // 8
    memset(tab, 0, nbytes * 256 * sizeof(u64))
    for t in range(n):
        sb = (n - 1 - t) >> 3
        sj = (n - 1 - t) & 7
        for byte in range(256):
            if (byte >> sj) & 1:
                tab[sb * 256 + byte] |= <u64>1 << t


def reversal_audit(int n, xs, int cap):
    cdef int nx = len(xs)
    cdef int nbytes = (n + 7) // 8
    cdef int j, k, found
    cdef u64 mask, rev, dec
    cdef long long hyp = 0, viol = 0
    cdef u64 total = <u64>1 << n
    cdef u64 *dtab = <u64 *> malloc(nx * nbytes * 256 * sizeof(u64))
    cdef u64 *mtab = <u64 *> malloc(nx * nbytes * 256 * sizeof(u64))
    cdef u64 *rtab = <u64 *> malloc(nbytes * 256 * sizeof(u64))
    wits = []
    try:
        for j in range(nx):
            _fill_perm_tables(n, xs[j], dtab + j * nbytes * 256)
            _fill_perm_tables(n, (n - xs[j]) % n, mtab + j * nbytes * 256)
        _fill_rev_tables(n, rtab)
        mask = 0
        while mask < total:
            rev = _apply_perm(mask, nbytes, rtab)
            for j in range(nx):
                dec = _apply_perm(mask, nbytes, dtab + j * nbytes * 256)
                found = 0
                for k in range(n):
                    if dec == _rot(rev, n, k):
                        found = 1
                        break
                if found:
                    hyp += 1
                    if _apply_perm(mask, nbytes, mtab + j * nbytes * 256) != mask:
                        viol += 1
                        if len(wits) < cap:
                            wits.append((int(mask), int(xs[j])))
            mask += 1
        return int(hyp), int(viol), wits
    finally:
        free(dtab)
        free(mtab)
        free(rtab)
