"""Shared independent oracles for the test suite.

These helpers deliberately avoid the library code paths they are used to
check: partial traces by explicit index summation, partial transposition by
element shuffling, and majorization by a plain partial-sum loop.
"""

import numpy as np


def ptrace_sum(mat: np.ndarray, dims, keep) -> np.ndarray:
    """Partial trace by direct summation over dropped multi-indices."""
    dims = list(dims)
    n = len(dims)
    keep = sorted(keep)
    drop = [i for i in range(n) if i not in keep]
    dk = int(np.prod([dims[i] for i in keep])) if keep else 1
    out = np.zeros((dk, dk), dtype=complex)
    for row in range(mat.shape[0]):
        ri = np.unravel_index(row, dims)
        for col in range(mat.shape[1]):
            ci = np.unravel_index(col, dims)
            if all(ri[d] == ci[d] for d in drop):
                rk = np.ravel_multi_index([ri[i] for i in keep], [dims[i] for i in keep]) if keep else 0
                ck = np.ravel_multi_index([ci[i] for i in keep], [dims[i] for i in keep]) if keep else 0
                out[rk, ck] += mat[row, col]
    return out


def ptranspose_elements(mat: np.ndarray, dims, subset) -> np.ndarray:
    """Partial transposition by explicit matrix-element relabeling."""
    dims = list(dims)
    out = np.zeros_like(np.asarray(mat, dtype=complex))
    for row in range(out.shape[0]):
        ri = list(np.unravel_index(row, dims))
        for col in range(out.shape[1]):
            ci = list(np.unravel_index(col, dims))
            si, sj = ri[:], ci[:]
            for s in subset:
                si[s], sj[s] = sj[s], si[s]
            out[np.ravel_multi_index(si, dims), np.ravel_multi_index(sj, dims)] = mat[row, col]
    return out


def majorizes_loop(p, q) -> bool:
    """Partial-sum dominance by an explicit loop over prefixes."""
    p = sorted(p, reverse=True)
    q = sorted(q, reverse=True)
    k = max(len(p), len(q))
    p = p + [0.0] * (k - len(p))
    q = q + [0.0] * (k - len(q))
    sp = sq = 0.0
    for i in range(k):
        sp += p[i]
        sq += q[i]
        if sp < sq - 1e-12:
            return False
    return True
