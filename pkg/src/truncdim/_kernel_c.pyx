# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled subset-search kernel; same contract as _kernel_py.

Row-pair separation masks live in fixed-width uint64 words.  Combinations are
generated in place with the classic index-array scheme, and prefix ORs are
reused so advancing the last index only touches one word row.
"""

import numpy as np

IMPLEMENTATION = "cython"


def min_distinguishing_subset(const int[:, ::1] mat, int max_size):
    cdef Py_ssize_t n = mat.shape[0]
    cdef Py_ssize_t m = mat.shape[1]
    cdef Py_ssize_t npairs = n * (n - 1) // 2
    cdef Py_ssize_t nwords = (npairs + 63) // 64 if npairs > 0 else 1

    masks_arr = np.zeros((m, nwords), dtype=np.uint64)
    full_arr = np.zeros(nwords, dtype=np.uint64)
    cdef unsigned long long[:, ::1] masks = masks_arr
    cdef unsigned long long[::1] full = full_arr

    cdef Py_ssize_t u, v, c, p, w, s, j, t
    for c in range(m):
        p = 0
        for u in range(n):
            for v in range(u + 1, n):
                if mat[u, c] != mat[v, c]:
                    masks[c, p >> 6] |= (<unsigned long long>1) << (p & 63)
                p += 1
    for p in range(npairs):
        full[p >> 6] |= (<unsigned long long>1) << (p & 63)

    # Quick infeasibility test: OR of every column must already cover all pairs.
    cover_arr = np.zeros(nwords, dtype=np.uint64)
    cdef unsigned long long[::1] cover = cover_arr
    for c in range(m):
        for w in range(nwords):
            cover[w] |= masks[c, w]
    for w in range(nwords):
        if cover[w] != full[w]:
            return None

    cdef Py_ssize_t smax = max_size if max_size < m else m
    idx_arr = np.zeros(m + 1, dtype=np.intp)
    cdef Py_ssize_t[::1] idx = idx_arr
    # pref[j] = OR of masks of idx[0..j-1]; row 0 stays zero.
    pref_arr = np.zeros((m + 2, nwords), dtype=np.uint64)
    cdef unsigned long long[:, ::1] pref = pref_arr
    cdef bint ok

    for s in range(1, smax + 1):
        for j in range(s):
            idx[j] = j
        j = 0  # lowest prefix level that must be recomputed
        while True:
            for t in range(j, s):
                c = idx[t]
                for w in range(nwords):
                    pref[t + 1, w] = pref[t, w] | masks[c, w]
            ok = True
            for w in range(nwords):
                if pref[s, w] != full[w]:
                    ok = False
                    break
            if ok:
                return s, tuple(int(idx[t]) for t in range(s))
            # advance to the next combination in lexicographic order
            j = s - 1
            while j >= 0 and idx[j] == m - s + j:
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for t in range(j + 1, s):
                idx[t] = idx[t - 1] + 1
    return None
