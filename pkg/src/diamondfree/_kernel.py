"""Compiled twin of the pure-Python realization search.

This is a line-for-line port of search._run's tree walk to a numba
kernel over int64 arrays: same cell order, same propagation, same lex
pointer machine, same Erdos-Gallai cut, same node and backtrack
accounting.  For any input the two engines visit the identical tree, so
their statistics agree exactly; the test suite asserts that.  Only the
wall time differs.

Adjacency masks fit in int64 (the search is only used for small n), so
popcount-style questions reduce to bit tricks: "two or more shared
neighbours" is just common & (common - 1) != 0.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def search_kernel(
    targets: np.ndarray,
    paired: np.ndarray,
    one_first: bool,
    count_mode: bool,
    node_limit: int,
    adj_out: np.ndarray,
) -> tuple[int, int, int, int]:
    """Walk the realization tree.  Returns (status, count, nodes, backtracks).

    status: 0 exhausted without witness, 1 witness in adj_out, 2 node
    limit hit.  node_limit < 0 means unlimited.
    """
    n = targets.shape[0]
    M = n * (n - 1) // 2
    cells_i = np.empty(M, np.int64)
    cells_j = np.empty(M, np.int64)
    idx = 0
    for a in range(n):
        for b in range(a + 1, n):
            cells_i[idx] = a
            cells_j[idx] = b
            idx += 1

    rem = targets.copy()
    slack = np.full(n, n - 1, np.int64)
    adj = np.zeros(n, np.int64)
    lexptr = np.empty(n, np.int64)
    for v in range(n):
        if v < n - 1 and paired[v]:
            lexptr[v] = 0
        else:
            lexptr[v] = -2

    first_val = 1 if one_first else 0
    second_val = 0 if one_first else 1
    phase = np.zeros(M + 1, np.int64)
    placed = np.zeros(M, np.int64)
    trail_pair = np.empty(2 * M, np.int64)
    trail_old = np.empty(2 * M, np.int64)
    trail_len = np.zeros(M, np.int64)
    resid = np.empty(n, np.int64)

    nodes = 0
    backtracks = 0
    count = 0
    status = 0

    k = 0
    while True:
        if k == M:
            if count_mode:
                count += 1
                k -= 1
                # undo the last placed assignment
                base = 2 * k
                for q in range(trail_len[k]):
                    lexptr[trail_pair[base + q]] = trail_old[base + q]
                trail_len[k] = 0
                i = cells_i[k]
                j = cells_j[k]
                if placed[k] == 1:
                    rem[i] += 1
                    rem[j] += 1
                    adj[i] &= ~(1 << j)
                    adj[j] &= ~(1 << i)
                slack[i] += 1
                slack[j] += 1
                backtracks += 1
                continue
            for v in range(n):
                adj_out[v] = adj[v]
            status = 1
            break
        if phase[k] >= 2:
            k -= 1
            if k < 0:
                break
            base = 2 * k
            for q in range(trail_len[k]):
                lexptr[trail_pair[base + q]] = trail_old[base + q]
            trail_len[k] = 0
            i = cells_i[k]
            j = cells_j[k]
            if placed[k] == 1:
                rem[i] += 1
                rem[j] += 1
                adj[i] &= ~(1 << j)
                adj[j] &= ~(1 << i)
            slack[i] += 1
            slack[j] += 1
            backtracks += 1
            continue

        val = first_val if phase[k] == 0 else second_val
        phase[k] += 1
        if node_limit >= 0 and nodes >= node_limit:
            status = 2
            break
        nodes += 1

        # --- attempt(k, val) ---
        i = cells_i[k]
        j = cells_j[k]
        ok = True
        applied = False
        if val == 1:
            if rem[i] == 0 or rem[j] == 0:
                ok = False
            else:
                common = adj[i] & adj[j]
                if common & (common - 1) != 0:
                    ok = False
                elif common != 0:
                    t = 0
                    c = common >> 1
                    while c != 0:
                        c >>= 1
                        t += 1
                    if (adj[i] & adj[t]) != 0 or (adj[j] & adj[t]) != 0:
                        ok = False
            if ok:
                rem[i] -= 1
                rem[j] -= 1
                slack[i] -= 1
                slack[j] -= 1
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                applied = True
        else:
            if rem[i] > slack[i] - 1 or rem[j] > slack[j] - 1:
                ok = False
            else:
                slack[i] -= 1
                slack[j] -= 1
                applied = True

        if applied:
            placed[k] = val
            base = 2 * k
            # pair i-1: row i-1 vs row i at column j
            p = i - 1
            if p >= 0 and lexptr[p] >= 0:
                if lexptr[p] == j:
                    a_bit = (adj[p] >> j) & 1
                    if a_bit != val:
                        if a_bit == 1:
                            ok = False
                        else:
                            trail_pair[base + trail_len[k]] = p
                            trail_old[base + trail_len[k]] = lexptr[p]
                            trail_len[k] += 1
                            lexptr[p] = -1
                    else:
                        trail_pair[base + trail_len[k]] = p
                        trail_old[base + trail_len[k]] = lexptr[p]
                        trail_len[k] += 1
                        lexptr[p] = j + 1
            if ok:
                if j == i + 1:
                    if lexptr[i] >= 0:
                        trail_pair[base + trail_len[k]] = i
                        trail_old[base + trail_len[k]] = lexptr[i]
                        trail_len[k] += 1
                        lexptr[i] = -1 if val == 1 else i + 2
                else:
                    p = j - 1
                    if lexptr[p] >= 0 and lexptr[p] == i:
                        a_bit = (adj[p] >> i) & 1
                        if a_bit != val:
                            if a_bit == 1:
                                ok = False
                            else:
                                trail_pair[base + trail_len[k]] = p
                                trail_old[base + trail_len[k]] = lexptr[p]
                                trail_len[k] += 1
                                lexptr[p] = -1
                        else:
                            trail_pair[base + trail_len[k]] = p
                            trail_old[base + trail_len[k]] = lexptr[p]
                            trail_len[k] += 1
                            lexptr[p] = i + 1

            if ok and j == n - 1 and i < n - 2:
                r = n - 1 - i
                for q in range(r):
                    resid[q] = rem[i + 1 + q]
                for a in range(1, r):
                    key = resid[a]
                    b = a - 1
                    while b >= 0 and resid[b] < key:
                        resid[b + 1] = resid[b]
                        b -= 1
                    resid[b + 1] = key
                if resid[0] > r - 1:
                    ok = False
                else:
                    total = 0
                    for q in range(r):
                        total += resid[q]
                    if total % 2 != 0:
                        ok = False
                    else:
                        lhs = 0
                        for kk in range(1, r + 1):
                            lhs += resid[kk - 1]
                            rhs = kk * (kk - 1)
                            for q in range(kk, r):
                                dq = resid[q]
                                rhs += dq if dq < kk else kk
                            if lhs > rhs:
                                ok = False
                                break

            if not ok:
                # roll back this attempt
                for q in range(trail_len[k]):
                    lexptr[trail_pair[base + q]] = trail_old[base + q]
                trail_len[k] = 0
                if val == 1:
                    rem[i] += 1
                    rem[j] += 1
                    adj[i] &= ~(1 << j)
                    adj[j] &= ~(1 << i)
                slack[i] += 1
                slack[j] += 1

        if ok and applied:
            k += 1
            phase[k] = 0
        else:
            backtracks += 1

    return status, count, nodes, backtracks
