"""Independent reference computations used by the tests.

Nothing here goes through Omega, the dominance-order search, or the
closed-form code paths it is used to check.
"""
from itertools import combinations

import numpy as np


def literal_ideal_sets(rs):
    """All subsets of the positive roots satisfying the root-sum definition.

    A subset ``S`` qualifies iff ``(S + Phi+) & Phi+ <= S`` and
    ``(S + S) & Phi+`` is empty, with sums taken coefficientwise.  Every
    subset is tested, vectorised over bitmasks in chunks.
    """
    roots = list(rs.positive_roots)
    n = len(roots)
    index = {a: k for k, a in enumerate(roots)}
    implications = set()  # a in S  =>  a + b in S
    exclusions = set()  # a and b never both in S
    for ia, a in enumerate(roots):
        for ib, b in enumerate(roots):
            s = tuple(x + y for x, y in zip(a, b))
            if s in index:
                implications.add((ia, index[s]))
                exclusions.add((min(ia, ib), max(ia, ib)))
    constraints = [("x", a, b) for a, b in sorted(exclusions)] + [("i", a, c) for a, c in sorted(implications)]
    found = []
    chunk = 1 << 20
    for start in range(0, 1 << n, chunk):
        masks = np.arange(start, min(start + chunk, 1 << n), dtype=np.uint64)
        for k, (kind, a, b) in enumerate(constraints):
            bit_a = (masks >> np.uint64(a)) & np.uint64(1)
            bit_b = (masks >> np.uint64(b)) & np.uint64(1)
            if kind == "x":
                masks = masks[(bit_a & bit_b) == 0]
            else:
                masks = masks[(bit_a & (bit_b ^ np.uint64(1))) == 0]
            if masks.size == 0:
                break
        found.extend(int(m) for m in masks)
    return {frozenset(roots[k] for k in range(n) if m >> k & 1) for m in found}


def partitions_exact(m, parts, largest):
    """Partitions of ``m`` into exactly ``parts`` parts, each at most ``largest``."""
    if parts == 0:
        return [()] if m == 0 else []
    out = []
    for first in range(min(m, largest), 0, -1):
        for rest in partitions_exact(m - first, parts - 1, first):
            out.append((first,) + rest)
    return out


def product_coefficient(i, j, m):
    """Coefficient of ``s^i t^m`` in ``prod_{k=1..j} sum_n (s t^k)^n``, truncated."""
    poly = {(0, 0): 1}
    for k in range(1, j + 1):
        nxt = {}
        for (a, b), c in poly.items():
            n = 0
            while a + n <= i and b + n * k <= m:
                key = (a + n, b + n * k)
                nxt[key] = nxt.get(key, 0) + c
                n += 1
        poly = nxt
    return poly.get((i, m), 0)


def expand_product(factors):
    """Multiply integer coefficient lists with plain loops."""
    acc = [1]
    for f in factors:
        out = [0] * (len(acc) + len(f) - 1)
        for a, x in enumerate(acc):
            for b, y in enumerate(f):
                out[a + b] += x * y
        acc = out
    while len(acc) > 1 and acc[-1] == 0:
        acc.pop()
    return acc


def type_a_antichains(r):
    """All ``(i_seq, j_seq)`` with ``1 <= i_1 < .. < i_k <= j_1 < .. < j_k <= r``."""
    out = []
    for k in range(0, r + 1):
        for iseq in combinations(range(1, r + 1), k):
            for jseq in combinations(range(1, r + 1), k):
                if k == 0 or iseq[-1] <= jseq[0]:
                    out.append((list(iseq), list(jseq)))
    return out
