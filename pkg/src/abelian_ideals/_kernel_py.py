"""Pure-Python enumeration kernel over bitmasks (Python ints, any width).

Bit ``i`` of every mask is the ``i``-th element of Omega in *descending*
canonical order, so bit 0 is the highest root.  ``compat[i]`` holds the
elements whose sum with element ``i`` is not below the highest root;
``down[i]`` holds element ``i`` and everything below it.

Each search node takes the lowest bit ``j`` still possible and branches on
including ``j`` (keep only elements compatible with ``j``) or excluding it
(drop ``j`` and everything below ``j``).  Every leaf is a distinct ideal and
every internal node has two children, so the tree has ``2 * N - 1`` nodes for
``N`` ideals.
"""

NAME = "python"


def size_counts(compat, down, n, possible, size=0):
    counts = [0] * (n + 1)
    stack = [(possible, size)]
    pop = stack.pop
    push = stack.append
    while stack:
        p, s = pop()
        if not p:
            counts[s] += 1
            continue
        low = p & -p
        j = low.bit_length() - 1
        push((p & ~down[j], s))
        push((p & compat[j] & ~low, s + 1))
    return counts


def ideal_masks(compat, down, n, possible, chosen=0):
    out = []
    stack = [(possible, chosen)]
    pop = stack.pop
    push = stack.append
    while stack:
        p, c = pop()
        if not p:
            out.append(c)
            continue
        low = p & -p
        j = low.bit_length() - 1
        push((p & ~down[j], c))
        push((p & compat[j] & ~low, c | low))
    return out
