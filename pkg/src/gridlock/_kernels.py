"""Compiled depth-first search core shared by the grid and torus solvers.

The kernel enumerates k-subsets of a cell universe in increasing index
order while maintaining an incremental coverage bitmask (words of 64
cells).  Pruning is limited to admissible filters so enumeration counts
stay exact:

* remaining-coverage capacity: with c points placed, the j-th further
  point covers at most (c + j - 1) * cap_per_pair + 1 new cells;
* canonical-prefix symmetry test at shallow depths (an image of the
  chosen prefix that sorts lexicographically smaller proves that every
  completion is a duplicate of a subtree visited earlier);
* independent mode: a bitmask of cells collinear with some chosen pair,
  maintained incrementally, rejects candidates in O(1);
* final point: the last cell added must cover every still-uncovered
  target cell, so candidates are intersected over the coverage preimages
  of a few uncovered cells.

Solutions that survive are a superset of the lexicographic leaders of
every orbit; exact distinct/class counts are recovered by the caller
via canonical dedup plus orbit expansion.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64, int64

U1 = np.uint64(1)
U0 = np.uint64(0)


@njit(uint64(uint64), cache=True, inline="always")
def _popcnt64(x):
    x = x - ((x >> uint64(1)) & uint64(0x5555555555555555))
    x = (x & uint64(0x3333333333333333)) + (
        (x >> uint64(2)) & uint64(0x3333333333333333)
    )
    x = (x + (x >> uint64(4))) & uint64(0x0F0F0F0F0F0F0F0F)
    return (x * uint64(0x0101010101010101)) >> uint64(56)


@njit(cache=True, inline="always")
def _bit_test(row, idx):
    return (row[idx >> 6] >> uint64(idx & 63)) & uint64(1)


@njit(cache=True)
def _prefix_is_canonical(chosen, length, perms, tmp):
    """False when some symmetry image of the sorted prefix sorts smaller."""
    n_perms = perms.shape[0]
    for g in range(1, n_perms):
        for i in range(length):
            v = perms[g, chosen[i]]
            j = i
            while j > 0 and tmp[j - 1] > v:
                tmp[j] = tmp[j - 1]
                j -= 1
            tmp[j] = v
        for i in range(length):
            if tmp[i] != chosen[i]:
                if tmp[i] < chosen[i]:
                    return False
                break
    return True


@njit(cache=True, nogil=True)
def search_phase(
    k,
    ncells,
    words,
    pair_cov,
    forb,
    own,
    target,
    perms,
    indep,
    sym_depth,
    cap_rem,
    root_lo,
    root_hi,
    early_exit,
    node_budget,
    out,
):
    """One iterative-deepening phase at fixed subset size k.

    Returns (found_count, nodes, aborted).  found_count may exceed the
    capacity of `out`; rows beyond it are dropped and the caller must
    treat that as overflow.  aborted == 1 means the node budget ran out.
    """
    max_out = out.shape[0]
    chosen = np.empty(k, np.int64)
    cursors = np.empty(k, np.int64)
    cov = np.zeros((k + 1, words), np.uint64)
    forbm = np.zeros((k + 1, words), np.uint64)
    restrict = np.zeros((k, words), np.uint64)
    restrict_on = np.zeros(k, np.bool_)
    newcov = np.zeros(words, np.uint64)
    tmp = np.empty(k, np.int64)

    full_cells = np.int64(0)
    for w in range(words):
        full_cells += np.int64(_popcnt64(target[w]))

    n_found = np.int64(0)
    nodes = np.int64(0)
    aborted = np.int64(0)

    depth = np.int64(0)
    cursors[0] = root_lo
    restrict_on[0] = False
    if k == 1:
        # degenerate phase: single point must cover everything
        for x in range(root_lo, root_hi):
            ok = True
            for w in range(words):
                if target[w] & ~(own[x, w]):
                    ok = False
                    break
            if ok:
                if n_found < max_out:
                    out[n_found, 0] = x
                n_found += 1
                if early_exit:
                    return n_found, nodes, aborted
        return n_found, nodes, aborted

    while depth >= 0:
        limit = root_hi if depth == 0 else ncells
        cur = cursors[depth]
        x = np.int64(-1)
        while cur < limit:
            if restrict_on[depth] and not _bit_test(restrict[depth], cur):
                cur += 1
                continue
            if indep and _bit_test(forbm[depth], cur):
                cur += 1
                continue
            x = cur
            break
        if x < 0:
            depth -= 1
            continue
        cursors[depth] = x + 1

        nodes += 1
        if node_budget >= 0 and nodes > node_budget:
            aborted = 1
            break

        # coverage after adding x
        for w in range(words):
            newcov[w] = cov[depth, w] | own[x, w]
        for i in range(depth):
            p = chosen[i]
            for w in range(words):
                newcov[w] |= pair_cov[p, x, w]

        if depth == k - 1:
            complete = True
            for w in range(words):
                if target[w] & ~newcov[w]:
                    complete = False
                    break
            if complete:
                if n_found < max_out:
                    for i in range(depth):
                        out[n_found, i] = chosen[i]
                    out[n_found, k - 1] = x
                n_found += 1
                if early_exit:
                    return n_found, nodes, aborted
            continue

        next_depth = depth + 1
        # admissible capacity prune
        if cap_rem[next_depth] < full_cells:
            uncovered = np.int64(0)
            for w in range(words):
                uncovered += np.int64(_popcnt64(target[w] & ~newcov[w]))
            if uncovered > cap_rem[next_depth]:
                continue

        chosen[depth] = x
        if next_depth <= sym_depth:
            if not _prefix_is_canonical(chosen, next_depth, perms, tmp):
                continue

        for w in range(words):
            cov[next_depth, w] = newcov[w]
        if indep:
            for w in range(words):
                forbm[next_depth, w] = forbm[depth, w]
            for i in range(depth):
                p = chosen[i]
                for w in range(words):
                    forbm[next_depth, w] |= forb[p, x, w]

        restrict_on[next_depth] = False
        if next_depth == k - 1:
            # the one remaining point must cover every uncovered cell;
            # intersect the coverage preimages of up to four of them
            picked = 0
            for w in range(words):
                rem = target[w] & ~cov[next_depth, w]
                while rem and picked < 4:
                    low = rem & (~rem + uint64(1))
                    q = np.int64(w * 64) + np.int64(_popcnt64(low - uint64(1)))
                    rem ^= low
                    if picked == 0:
                        for v in range(words):
                            restrict[next_depth, v] = pair_cov[chosen[0], q, v]
                        for i in range(1, next_depth):
                            p = chosen[i]
                            for v in range(words):
                                restrict[next_depth, v] |= pair_cov[p, q, v]
                        restrict[next_depth, q >> 6] |= U1 << uint64(q & 63)
                    else:
                        for v in range(words):
                            newcov[v] = pair_cov[chosen[0], q, v]
                        for i in range(1, next_depth):
                            p = chosen[i]
                            for v in range(words):
                                newcov[v] |= pair_cov[p, q, v]
                        newcov[q >> 6] |= U1 << uint64(q & 63)
                        for v in range(words):
                            restrict[next_depth, v] &= newcov[v]
                    picked += 1
                if picked >= 4:
                    break
            restrict_on[next_depth] = picked > 0

        cursors[next_depth] = x + 1
        depth = next_depth

    return n_found, nodes, aborted
