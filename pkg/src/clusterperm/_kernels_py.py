"""Pure-Python counting kernels.

Drop-in fallback for the compiled extension: same functions, same semantics,
arbitrary-precision integers throughout.
"""

from __future__ import annotations

from itertools import permutations


def count_distribution(n: int, patterns) -> dict[int, int]:
    """Tally permutations of S_n by their total number of consecutive
    occurrences of the given patterns."""
    data = []
    for p in patterns:
        l = len(p)
        pos_by_rank = sorted(range(l), key=lambda i: p[i])
        data.append((l, pos_by_rank))
    counts: dict[int, int] = {}
    for sigma in permutations(range(n)):
        q = 0
        for l, pbr in data:
            for i in range(n - l + 1):
                prev = sigma[i + pbr[0]]
                ok = True
                for j in range(1, l):
                    cur = sigma[i + pbr[j]]
                    if cur < prev:
                        ok = False
                        break
                    prev = cur
                if ok:
                    q += 1
        counts[q] = counts.get(q, 0) + 1
    return counts


def count_linear_extensions(n: int, less_masks) -> int:
    """Number of bijections positions -> {1..n} respecting the strict order
    constraints; less_masks[i] is the bitmask of positions forced smaller
    than position i."""
    size = 1 << n
    succ = [0] * n
    for j in range(n):
        m = less_masks[j]
        i = 0
        while m:
            if m & 1:
                succ[i] |= 1 << j
            m >>= 1
            i += 1
    f = [0] * size
    f[0] = 1
    for s in range(1, size):
        total = 0
        t = s
        while t:
            b = t & -t
            i = b.bit_length() - 1
            t ^= b
            rest = s ^ b
            # position i takes the largest value of the block: everything
            # forced below it must already be placed, nothing forced above
            if (less_masks[i] & rest) == less_masks[i] and (succ[i] & rest) == 0:
                total += f[rest]
        f[s] = total
    return f[size - 1]
