"""Compiled inner loops for the exhaustive search over monotone transition tables.

A table is addressed by its index in the mixed-radix system where entry
``e = i*k + a`` (state-major, letter-minor) is a digit ``delta(i, a) - i`` of
radix ``n - i`` and entry 0 is the most significant.  Index order equals
lexicographic order of the tables.  Acceptance masks use bit q for state q.

Kept independent of the pure-Python automata module on purpose: the search
results are cross-checked against it.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# dead-state modes, indices into the per-mode result rows
ANY, REQUIRE, FORBID = 0, 1, 2


@njit(cache=True)
def weights(n, k):
    m = n * k
    w = np.zeros(m, dtype=np.int64)
    acc = 1
    for e in range(m - 1, -1, -1):
        w[e] = acc
        acc *= n - e // k
    return w


@njit(cache=True)
def table_count(n, k):
    total = 1
    for i in range(n):
        for _ in range(k):
            total *= n - i
    return total


@njit(cache=True)
def decode(index, n, k, delta):
    w = weights(n, k)
    for e in range(n * k):
        i = e // k
        d = index // w[e]
        index -= d * w[e]
        delta[i, e % k] = i + d


@njit(cache=True)
def encode(delta, n, k, w):
    index = 0
    for e in range(n * k):
        i = e // k
        index += (delta[i, e % k] - i) * w[e]
    return index


@njit(cache=True)
def _advance(delta, n, k):
    # odometer increment; returns False on wrap-around
    for e in range(n * k - 1, -1, -1):
        i = e // k
        a = e % k
        if delta[i, a] < n - 1:
            delta[i, a] += 1
            return True
        delta[i, a] = i
    return False


@njit(cache=True)
def all_reachable(delta, n, k):
    reach = 1
    for i in range(n):
        if reach >> i & 1:
            for a in range(k):
                reach |= 1 << delta[i, a]
    return reach == (1 << n) - 1


@njit(cache=True)
def trahtman(delta, n, k):
    """Per state p: the weak component of p in the graph of p's self-loop
    letters must contain exactly one maximal state."""
    for p in range(n):
        loops = 0
        for a in range(k):
            if delta[p, a] == p:
                loops |= 1 << a
        # undirected closure from p over edges labelled by loop letters of p
        comp = 1 << p
        changed = True
        while changed:
            changed = False
            for q in range(n):
                for a in range(k):
                    if loops >> a & 1:
                        t = delta[q, a]
                        inq = comp >> q & 1
                        int_ = comp >> t & 1
                        if inq != int_:
                            comp |= (1 << q) | (1 << t)
                            changed = True
        maximal = 0
        for q in range(n):
            if comp >> q & 1:
                is_max = True
                for a in range(k):
                    if loops >> a & 1 and delta[q, a] != q:
                        is_max = False
                        break
                if is_max:
                    maximal += 1
        if maximal != 1:
            return False
    return True


@njit(cache=True)
def subset_images(delta, n, k, img):
    """img[a, X] = set of states whose a-successor lies in X (reverse step)."""
    size = 1 << n
    for a in range(k):
        img[a, 0] = 0
        for x in range(1, size):
            low = x & -x
            p = 0
            while (1 << p) != low:
                p += 1
            pre = 0
            for q in range(n):
                if delta[q, a] == p:
                    pre |= 1 << q
            img[a, x] = img[a, x ^ low] | pre


@njit(cache=True)
def reverse_closure(img, k, start, seen, stamp, queue):
    """BFS over subsets from ``start``; fills ``queue`` and returns its length."""
    seen[start] = stamp
    queue[0] = start
    head = 0
    tail = 1
    while head < tail:
        x = queue[head]
        head += 1
        for a in range(k):
            y = img[a, x]
            if seen[y] != stamp:
                seen[y] = stamp
                queue[tail] = y
                tail += 1
    return tail


@njit(cache=True)
def separates_all(queue, count, n):
    """True iff every pair of states is split by one of the subsets in the queue."""
    full = (1 << n) - 1
    sep = np.zeros(n, dtype=np.int64)
    for t in range(count):
        x = queue[t]
        for p in range(n):
            if x >> p & 1:
                sep[p] |= x ^ full
            else:
                sep[p] |= x
    for p in range(n):
        if (sep[p] | (1 << p)) != full:
            return False
    return True


@njit(cache=True)
def _orbit(delta, n, k, perms, w, scratch):
    # returns (is_canonical, orbit_size) under letter permutations
    own = encode(delta, n, k, w)
    nperm = perms.shape[0]
    codes = np.empty(nperm, dtype=np.int64)
    for r in range(nperm):
        for i in range(n):
            for a in range(k):
                scratch[i, a] = delta[i, perms[r, a]]
        codes[r] = encode(scratch, n, k, w)
        if codes[r] < own:
            return False, 0
    codes.sort()
    distinct = 1
    for r in range(1, nperm):
        if codes[r] != codes[r - 1]:
            distinct += 1
    return True, distinct


@njit(cache=True)
def _offer(best, mode, value, tindex, mask):
    # best[mode] = (value, table index, mask); larger value wins, ties to the least encoding
    if (
        value > best[mode, 0]
        or (value == best[mode, 0] and (tindex < best[mode, 1] or (tindex == best[mode, 1] and mask < best[mode, 2])))
    ):
        best[mode, 0] = value
        best[mode, 1] = tindex
        best[mode, 2] = mask


@njit(cache=True)
def scan(n, k, lo, hi, jtrivial, perms, pair_complements):
    """Scan tables with index in [lo, hi) and every acceptance mask.

    Returns ``best`` (3x3: per dead-state mode the max reverse subset count
    with its table index and mask, -1 when nothing qualified) and ``counts``
    (row 0: raw candidates covered; rows 1-3: qualifying candidates per mode).
    With ``perms`` holding more than the identity, only tables that are
    least in their letter-permutation orbit are scanned and counts are
    weighted by orbit size.  ``pair_complements`` evaluates a mask and its
    complement with one subset search.
    """
    best = np.full((3, 3), -1, dtype=np.int64)
    counts = np.zeros(4, dtype=np.int64)
    if lo >= hi:
        return best, counts
    size = 1 << n
    full = size - 1
    w = weights(n, k)
    delta = np.zeros((n, k), dtype=np.int64)
    scratch = np.zeros((n, k), dtype=np.int64)
    decode(lo, n, k, delta)
    img = np.zeros((k, size), dtype=np.int64)
    seen = np.zeros(size, dtype=np.int64)
    queue = np.zeros(size, dtype=np.int64)
    stamp = 0
    symmetric = perms.shape[0] > 1
    top = size >> 1 if pair_complements else size
    for tindex in range(lo, hi):
        if tindex > lo:
            _advance(delta, n, k)
        weight = 1
        if symmetric:
            canonical, weight = _orbit(delta, n, k, perms, w, scratch)
            if not canonical:
                continue
        counts[0] += weight * size
        if not all_reachable(delta, n, k):
            continue
        if jtrivial and not trahtman(delta, n, k):
            continue
        sinks = 0
        for q in range(n):
            loop_all = True
            for a in range(k):
                if delta[q, a] != q:
                    loop_all = False
            if loop_all:
                sinks |= 1 << q
        subset_images(delta, n, k, img)
        for mask in range(top):
            stamp += 1
            count = reverse_closure(img, k, mask, seen, stamp, queue)
            if not separates_all(queue, count, n):
                continue
            # complement: X reachable for F iff full^X reachable for full^F
            for side in range(2 if pair_complements else 1):
                m = mask if side == 0 else full ^ mask
                has_dead = (sinks & ~m & full) != 0
                counts[1] += weight
                _offer(best, ANY, count, tindex, m)
                if has_dead:
                    counts[2] += weight
                    _offer(best, REQUIRE, count, tindex, m)
                else:
                    counts[3] += weight
                    _offer(best, FORBID, count, tindex, m)
    return best, counts


@njit(cache=True)
def simon(delta, n, k, letters):
    """Simon's condition restricted to the letters in bitmask ``letters``:
    for every subset of them, every cone has exactly one maximal state."""
    for gamma in range(1 << k):
        if gamma & ~letters:
            continue
        for p in range(n):
            cone = 1 << p
            changed = True
            while changed:
                changed = False
                for q in range(n):
                    if cone >> q & 1:
                        for a in range(k):
                            if gamma >> a & 1:
                                t = delta[q, a]
                                if not cone >> t & 1:
                                    cone |= 1 << t
                                    changed = True
            maximal = 0
            for q in range(n):
                if cone >> q & 1:
                    is_max = True
                    for a in range(k):
                        if gamma >> a & 1 and delta[q, a] != q:
                            is_max = False
                    if is_max:
                        maximal += 1
            if maximal != 1:
                return False
    return True


@njit(cache=True)
def subset_graph_is_po(img, k, queue, count, index):
    """Kahn's algorithm on the reachable part of the reverse's subset automaton."""
    for t in range(count):
        index[queue[t]] = t
    indeg = np.zeros(count, dtype=np.int64)
    for t in range(count):
        x = queue[t]
        for a in range(k):
            y = img[a, x]
            if y != x:
                indeg[index[y]] += 1
    stack = np.zeros(count, dtype=np.int64)
    top = 0
    for t in range(count):
        if indeg[t] == 0:
            stack[top] = t
            top += 1
    removed = 0
    while top > 0:
        top -= 1
        t = stack[top]
        removed += 1
        x = queue[t]
        for a in range(k):
            y = img[a, x]
            if y != x:
                u = index[y]
                indeg[u] -= 1
                if indeg[u] == 0:
                    stack[top] = u
                    top += 1
    return removed == count


@njit(cache=True)
def subset_blocks(img, k, queue, count, index, initial):
    """Moore refinement of the reverse's subset automaton; returns the number of classes.

    A subset accepts iff it contains ``initial``.  ``index`` must map each
    queued subset to its queue position.
    """
    block = np.zeros(count, dtype=np.int64)
    fresh = np.zeros(count, dtype=np.int64)
    for t in range(count):
        block[t] = queue[t] >> initial & 1
    classes = 1
    for t in range(1, count):
        if block[t] != block[0]:
            classes = 2
            break
    while True:
        found = 0
        for t in range(count):
            fresh[t] = -1
            for u in range(t):
                if block[u] != block[t]:
                    continue
                same = True
                for a in range(k):
                    if block[index[img[a, queue[u]]]] != block[index[img[a, queue[t]]]]:
                        same = False
                        break
                if same:
                    fresh[t] = fresh[u]
                    break
            if fresh[t] < 0:
                fresh[t] = found
                found += 1
        for t in range(count):
            block[t] = fresh[t]
        if found == classes:
            return found
        classes = found


# property slots for check_properties
P_COMPLEMENT, P_UNARY, P_AGREEMENT, P_LETTER_REMOVAL, P_UPPER, P_DISTINCT = 0, 1, 2, 3, 4, 5
N_PROPS = 6


@njit(cache=True)
def check_properties(n, k, lo, hi, upper_r, upper_j):
    """Evaluate the structural properties on every candidate of tables [lo, hi).

    ``upper_r``/``upper_j`` bound the reverse subset count of minimal binary
    R-/J-trivial candidates (negative disables the check).  Returns per
    property the number of candidates checked, the number of violations,
    and the first violating (table index, mask).
    """
    checked = np.zeros(N_PROPS, dtype=np.int64)
    bad = np.zeros(N_PROPS, dtype=np.int64)
    first = np.full((N_PROPS, 2), -1, dtype=np.int64)
    size = 1 << n
    full = size - 1
    delta = np.zeros((n, k), dtype=np.int64)
    decode(lo, n, k, delta)
    img = np.zeros((k, size), dtype=np.int64)
    seen = np.zeros(size, dtype=np.int64)
    queue = np.zeros(size, dtype=np.int64)
    index = np.zeros(size, dtype=np.int64)
    counts = np.zeros(size, dtype=np.int64)
    minimal = np.zeros(size, dtype=np.bool_)
    reduced = np.zeros((n, k), dtype=np.int64)
    stamp = 0
    all_letters = (1 << k) - 1
    for tindex in range(lo, hi):
        if tindex > lo:
            _advance(delta, n, k)
        subset_images(delta, n, k, img)
        reachable = all_reachable(delta, n, k)
        for mask in range(size):
            stamp += 1
            c = reverse_closure(img, k, mask, seen, stamp, queue)
            counts[mask] = c
            minimal[mask] = reachable and separates_all(queue, c, n)
            # F.a^(n-1) == F.a^n for every letter
            for a in range(k):
                x = mask
                for _ in range(n - 1):
                    x = img[a, x]
                checked[P_UNARY] += 1
                if img[a, x] != x:
                    bad[P_UNARY] += 1
                    if first[P_UNARY, 0] < 0:
                        first[P_UNARY, 0] = tindex
                        first[P_UNARY, 1] = mask
        for mask in range(size):
            checked[P_COMPLEMENT] += 1
            if counts[mask] != counts[full ^ mask]:
                bad[P_COMPLEMENT] += 1
                if first[P_COMPLEMENT, 0] < 0:
                    first[P_COMPLEMENT, 0] = tindex
                    first[P_COMPLEMENT, 1] = mask
        if not reachable:
            continue
        simon_ok = simon(delta, n, k, all_letters)
        trahtman_ok = trahtman(delta, n, k)
        removal_ok = True
        if simon_ok:
            # drop each letter subset gamma; the rest must still satisfy the condition
            for gamma in range(1, all_letters):
                kept = 0
                for a in range(k):
                    if not gamma >> a & 1:
                        for q in range(n):
                            reduced[q, kept] = delta[q, a]
                        kept += 1
                if not simon(reduced, n, kept, (1 << kept) - 1):
                    removal_ok = False
        for mask in range(size):
            if not minimal[mask]:
                continue
            stamp += 1
            c = reverse_closure(img, k, mask, seen, stamp, queue)
            reverse_po = subset_graph_is_po(img, k, queue, c, index)
            checked[P_DISTINCT] += 1
            if subset_blocks(img, k, queue, c, index, 0) != c:
                bad[P_DISTINCT] += 1
                if first[P_DISTINCT, 0] < 0:
                    first[P_DISTINCT, 0] = tindex
                    first[P_DISTINCT, 1] = mask
            checked[P_AGREEMENT] += 1
            if not (reverse_po == simon_ok and simon_ok == trahtman_ok):
                bad[P_AGREEMENT] += 1
                if first[P_AGREEMENT, 0] < 0:
                    first[P_AGREEMENT, 0] = tindex
                    first[P_AGREEMENT, 1] = mask
            if simon_ok:
                checked[P_LETTER_REMOVAL] += 1
                if not removal_ok:
                    bad[P_LETTER_REMOVAL] += 1
                    if first[P_LETTER_REMOVAL, 0] < 0:
                        first[P_LETTER_REMOVAL, 0] = tindex
                        first[P_LETTER_REMOVAL, 1] = mask
            limit = upper_r
            if trahtman_ok and upper_j >= 0:
                limit = upper_j
            if limit >= 0:
                checked[P_UPPER] += 1
                if c > limit:
                    bad[P_UPPER] += 1
                    if first[P_UPPER, 0] < 0:
                        first[P_UPPER, 0] = tindex
                        first[P_UPPER, 1] = mask
    return checked, bad, first


@njit(cache=True)
def canonical_keys(n, k, lo, hi, perms):
    """For every minimal candidate, the least BFS-renumbered encoding over
    letter permutations and complementation.  Equal keys mean the two
    candidates accept the same language up to renaming letters and
    complementing."""
    size = 1 << n
    full = size - 1
    delta = np.zeros((n, k), dtype=np.int64)
    decode(lo, n, k, delta)
    img = np.zeros((k, size), dtype=np.int64)
    seen = np.zeros(size, dtype=np.int64)
    queue = np.zeros(size, dtype=np.int64)
    number = np.zeros(n, dtype=np.int64)
    order = np.zeros(n, dtype=np.int64)
    out = np.empty(64, dtype=np.int64)
    used = 0
    stamp = 0
    nperm = perms.shape[0]
    for tindex in range(lo, hi):
        if tindex > lo:
            _advance(delta, n, k)
        if not all_reachable(delta, n, k):
            continue
        subset_images(delta, n, k, img)
        for mask in range(size):
            stamp += 1
            c = reverse_closure(img, k, mask, seen, stamp, queue)
            if not separates_all(queue, c, n):
                continue
            key = -1
            for r in range(nperm):
                # BFS renumbering with letters in permuted order
                for q in range(n):
                    number[q] = -1
                number[0] = 0
                order[0] = 0
                filled = 1
                head = 0
                while head < filled:
                    q = order[head]
                    head += 1
                    for a in range(k):
                        t = delta[q, perms[r, a]]
                        if number[t] < 0:
                            number[t] = filled
                            order[filled] = t
                            filled += 1
                code = 0
                for i in range(n):
                    q = order[i]
                    for a in range(k):
                        code = code * n + number[delta[q, perms[r, a]]]
                bits = 0
                for i in range(n):
                    if mask >> order[i] & 1:
                        bits |= 1 << i
                for b in (bits, full ^ bits):
                    v = code * size + b
                    if key < 0 or v < key:
                        key = v
            if used == out.shape[0]:
                grown = np.empty(out.shape[0] * 2, dtype=np.int64)
                grown[:used] = out[:used]
                out = grown
            out[used] = key
            used += 1
    return out[:used]
