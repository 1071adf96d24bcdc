"""Pure-Python reference backend for the hot kernels.

Sequences are bit-packed ints: bit i set means y_i = -1.  All functions are
deterministic in their arguments; worker partitioning is done by the callers,
who split counter ranges or decision prefixes and merge in a fixed order.
"""

BACKEND = "pure"


def _rot(mask, n, k):
    if k == 0:
        return mask
    return ((mask >> k) | (mask << (n - k))) & ((1 << n) - 1)


def _is_hadamard(mask, n):
    for k in range(1, n):
        if 2 * (mask ^ _rot(mask, n, k)).bit_count() != n:
            return False
    return True


def _perm_tables(n, a):
    """Byte-lookup tables for the decimation t -> y_{a*t}: OR-ing the lookups
    of a packed mask's bytes produces the decimated mask.  Destination bit t
    pulls from source bit (a*t) % n."""
    nbytes = (n + 7) // 8
    tables = [[0] * 256 for _ in range(nbytes)]
    for t in range(n):
        sb, sj = divmod((a * t) % n, 8)
        for byte in range(256):
            if (byte >> sj) & 1:
                tables[sb][byte] |= 1 << t
    return tables


def _apply_tables(mask, tables):
    out = 0
    for b, tab in enumerate(tables):
        out |= tab[(mask >> (8 * b)) & 0xFF]
    return out


def invariant_scan(n, coset_masks, start, stop, targets):
    """Scan family members with subset counter in [start, stop).

    Member for counter g = XOR of coset masks selected by the bits of g.
    When targets is not None, only members whose support size is in targets
    get the autocorrelation check.  Returns (hit masks, checked count).
    """
    r = len(coset_masks)
    prefix = [0]
    for m in coset_masks:
        prefix.append(prefix[-1] ^ m)
    tset = None if targets is None else set(targets)
    hits = []
    checked = 0
    cur = 0
    for j in range(r):
        if (start >> j) & 1:
            cur ^= coset_masks[j]
    g = start
    while g < stop:
        if tset is None or cur.bit_count() in tset:
            checked += 1
            if _is_hadamard(cur, n):
                hits.append(cur)
        g += 1
        if g < stop:
            z = (g & -g).bit_length() - 1
            cur ^= prefix[z] ^ coset_masks[z]
    return hits, checked


def difference_scan(n, coset_masks, target_size, lam, prefix):
    """Include/exclude DFS over cosets hunting supports that are difference
    sets: every nonzero difference count must stay <= lam, the support size
    must reach target_size exactly.  prefix fixes the first decisions (1 =
    include).  Returns (hit masks, nodes visited)."""
    r = len(coset_masks)
    sizes = [m.bit_count() for m in coset_masks]
    remaining = [0] * (r + 1)
    for j in range(r - 1, -1, -1):
        remaining[j] = remaining[j + 1] + sizes[j]
    counts = [0] * n  # counts[d] for d = 1..n-1
    supports = [[i for i in range(n) if (m >> i) & 1] for m in coset_masks]
    hits = []
    nodes = 0

    def add(j, cur_elems):
        """Add coset j's differences; return False (and do not finish) when a
        count passes lam."""
        ok = True
        new = supports[j]
        for x in new:
            for y in cur_elems:
                d1 = (x - y) % n
                d2 = (y - x) % n
                counts[d1] += 1
                counts[d2] += 1
                if counts[d1] > lam or counts[d2] > lam:
                    ok = False
            # pairs inside the new coset, both orders
        for i1 in range(len(new)):
            for i2 in range(len(new)):
                if i1 != i2:
                    d = (new[i1] - new[i2]) % n
                    counts[d] += 1
                    if counts[d] > lam:
                        ok = False
        return ok

    def remove(j, cur_elems):
        new = supports[j]
        for x in new:
            for y in cur_elems:
                counts[(x - y) % n] -= 1
                counts[(y - x) % n] -= 1
        for i1 in range(len(new)):
            for i2 in range(len(new)):
                if i1 != i2:
                    counts[(new[i1] - new[i2]) % n] -= 1

    def walk(j, mask, size, elems, forced):
        nonlocal nodes
        nodes += 1
        if size > target_size or size + remaining[j] < target_size:
            return
        if j == r:
            if size == target_size and _is_hadamard(mask, n):
                hits.append(mask)
            return
        choices = (forced[j],) if j < len(forced) else (0, 1)
        for take in choices:
            if take:
                ok = add(j, elems)
                if ok:
                    walk(j + 1, mask | coset_masks[j], size + sizes[j],
                         elems + supports[j], forced)
                remove(j, elems)
            else:
                walk(j + 1, mask, size, elems, forced)

    walk(0, 0, 0, [], tuple(prefix))
    return hits, nodes


def _combo_count(n, k):
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _gosper_next(g):
    c = g & -g
    r = g + c
    return (((r ^ g) >> 2) // c) | r


def hadamard_scan(n, support_size, g0, count):
    """Check `count` candidates with -1 fixed at position 0: masks are
    (g << 1) | 1 where g walks ascending (n-1)-bit words of popcount
    support_size - 1 starting at g0.  Returns (hit masks, scanned)."""
    hits = []
    g = g0
    for i in range(count):
        mask = (g << 1) | 1
        if _is_hadamard(mask, n):
            hits.append(mask)
        if i + 1 < count and g:
            g = _gosper_next(g)
    return hits, count


def barker_branch(n, prefix):
    """Depth-first Barker search under a fixed decision prefix.

    Positions are assigned two-ended (0, n-1, 1, n-2, ...) with a_0 = +1;
    after each right-side assignment one more aperiodic shift is fully
    determined and checked exactly against |C(k)| <= 1.  prefix gives the
    values (0 for +1, 1 for -1) of assignment steps 1..len(prefix).
    Returns (hit masks sorted, nodes visited)."""
    if n == 1:
        return ([0], 1)
    pos = [0] * n
    for j in range(n):
        pos[j] = j // 2 if j % 2 == 0 else n - 1 - j // 2
    vals = [0] * n  # +-1 by position
    hits = []
    nodes = 0

    def check_shift(k):
        # C(k) over terms i = 0..n-k-1; all assigned by construction
        s = 0
        for i in range(n - k):
            s += vals[i] * vals[i + k]
        return abs(s) <= 1

    def leaf_ok():
        for k in range(1, n):
            s = 0
            for i in range(n - k):
                s += vals[i] * vals[i + k]
            if abs(s) > 1:
                return False
        return True

    def walk(step):
        nonlocal nodes
        if step == n:
            if leaf_ok():
                mask = 0
                for i in range(n):
                    if vals[i] < 0:
                        mask |= 1 << i
                hits.append(mask)
            return
        choices = ((prefix[step - 1],) if step - 1 < len(prefix) else (0, 1))
        for bit in choices:
            vals[pos[step]] = -1 if bit else 1
            nodes += 1
            # after an odd step (right side), shift n-1-(step-1)//2 completes
            if step % 2 == 1:
                k = n - 1 - (step - 1) // 2
                if k >= 1 and not check_shift(k):
                    continue
            walk(step + 1)

    vals[0] = 1
    nodes += 1
    walk(1)
    return sorted(hits), nodes


def includes_exhaustive(n, coset_masks, b):
    """Brute-force containment check: every member of the family generated by
    coset_masks must be fixed by decimation by b.  Members are enumerated in
    counter order; exits at the first counterexample."""
    tables = _perm_tables(n, b)
    prefix = [0]
    for m in coset_masks:
        prefix.append(prefix[-1] ^ m)
    cur = 0
    if _apply_tables(cur, tables) != cur:
        return False
    for g in range(1, 1 << len(coset_masks)):
        z = (g & -g).bit_length() - 1
        cur ^= prefix[z] ^ coset_masks[z]
        if _apply_tables(cur, tables) != cur:
            return False
    return True


def _reverse_mask(mask, n):
    out = 0
    for t in range(n):
        if (mask >> (n - 1 - t)) & 1:
            out |= 1 << t
    return out


def reversal_audit(n, xs, cap):
    """Over every length-n sequence Y and every multiplier x in xs: when the
    decimation by x lands in the cyclic class of the reversal, check that Y is
    fixed by decimation by n - x.  Returns (hypothesis count, violation count,
    first violations as (mask, x) up to cap)."""
    tabs = {x: _perm_tables(n, x) for x in xs}
    mtabs = {x: _perm_tables(n, (n - x) % n) for x in xs}
    hyp = 0
    viol = 0
    wits = []
    for mask in range(1 << n):
        rev = _reverse_mask(mask, n)
        rev_rots = {_rot(rev, n, k) for k in range(n)}
        for x in xs:
            dec = _apply_tables(mask, tabs[x])
            if dec in rev_rots:
                hyp += 1
                if _apply_tables(mask, mtabs[x]) != mask:
                    viol += 1
                    if len(wits) < cap:
                        wits.append((mask, x))
    return hyp, viol, wits
