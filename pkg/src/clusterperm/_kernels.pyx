# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled counting kernels.

Mirrors _kernels_py: occurrence-distribution scans over S_n and
linear-extension counting over bitmask downsets.  Counts stay within int64
for the supported sizes (n <= 12 for the scan, n <= 20 for the DP); the
dispatcher in kernels.py falls back to pure Python beyond them.
"""

from libc.stdlib cimport calloc, free, malloc


def count_distribution(int n, patterns):
    if n < 1 or n > 12:
        raise ValueError("compiled scan supports 1 <= n <= 12")
    cdef int npat = len(patterns)
    cdef int total_len = 0
    for p in patterns:
        total_len += len(p)
    cdef int *pbr = <int *> malloc(total_len * sizeof(int))
    cdef int *lens = <int *> malloc(npat * sizeof(int))
    cdef int *offs = <int *> malloc(npat * sizeof(int))
    cdef int max_q = 1
    cdef int off = 0, l, i, j
    for i in range(npat):
        p = patterns[i]
        l = len(p)
        lens[i] = l
        offs[i] = off
        order = sorted(range(l), key=lambda t: p[t])
        for j in range(l):
            pbr[off + j] = order[j]
        off += l
        if l <= n:
            max_q += n - l + 1
    cdef long long *counts = <long long *> calloc(max_q, sizeof(long long))

    # iterate S_n in lexicographic order via next-permutation
    cdef int perm[12]
    for i in range(n):
        perm[i] = i
    cdef int q, start, prev, cur, ok, a, b, tmp
    cdef bint more = True
    while more:
        q = 0
        for i in range(npat):
            l = lens[i]
            off = offs[i]
            for start in range(n - l + 1):
                prev = perm[start + pbr[off]]
                ok = 1
                for j in range(1, l):
                    cur = perm[start + pbr[off + j]]
                    if cur < prev:
                        ok = 0
                        break
                    prev = cur
                q += ok
        counts[q] += 1
        # advance
        a = n - 2
        while a >= 0 and perm[a] >= perm[a + 1]:
            a -= 1
        if a < 0:
            more = False
        else:
            b = n - 1
            while perm[b] <= perm[a]:
                b -= 1
            tmp = perm[a]; perm[a] = perm[b]; perm[b] = tmp
            i = a + 1
            j = n - 1
            while i < j:
                tmp = perm[i]; perm[i] = perm[j]; perm[j] = tmp
                i += 1
                j -= 1
    result = {}
    for i in range(max_q):
        if counts[i]:
            result[i] = counts[i]
    free(pbr)
    free(lens)
    free(offs)
    free(counts)
    return result


def count_linear_extensions(int n, less_masks):
    if n < 1 or n > 20:
        raise ValueError("compiled DP supports 1 <= n <= 20")
    cdef unsigned int size = 1u << n
    cdef unsigned int *less = <unsigned int *> malloc(n * sizeof(unsigned int))
    cdef unsigned int *succ = <unsigned int *> calloc(n, sizeof(unsigned int))
    cdef int i, j
    for i in range(n):
        less[i] = less_masks[i]
    for j in range(n):
        for i in range(n):
            if (less[j] >> i) & 1u:
                succ[i] |= 1u << j
    cdef long long *f = <long long *> calloc(size, sizeof(long long))
    f[0] = 1
    cdef unsigned int s, t, b, rest
    cdef long long total
    for s in range(1, size):
        total = 0
        t = s
        while t:
            b = t & (-t)
            t ^= b
            i = 0
            while (b >> i) != 1u:
                i += 1
            rest = s ^ b
            if (less[i] & rest) == less[i] and (succ[i] & rest) == 0u:
                total += f[rest]
        f[s] = total
    total = f[size - 1]
    free(less)
    free(succ)
    free(f)
    return total
