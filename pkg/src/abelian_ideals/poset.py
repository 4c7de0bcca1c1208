"""The subposet Omega of positive roots, its Hasse diagram, and the sum test."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .root_system import LieType, Root, RootSystem, precedes, root_add, shorthand


def sum_not_preceding_theta(a, b, rs: RootSystem) -> bool:
    """True iff the coefficientwise sum ``a + b`` is not below the highest root."""
    return not precedes(root_add(a, b), rs.highest_root)


def in_omega(a, rs: RootSystem) -> bool:
    return sum_not_preceding_theta(a, a, rs)


@dataclass(frozen=True)
class OmegaPoset:
    """Elements of Omega in canonical order plus cover pairs ``(lower, upper)``."""

    lie_type: LieType
    elements: Tuple[Root, ...]
    covers: Tuple[Tuple[int, int], ...]

    def __len__(self):
        return len(self.elements)

    def upper_covers(self, i: int):
        return [u for lo, u in self.covers if lo == i]

    def lower_covers(self, i: int):
        return [lo for lo, u in self.covers if u == i]

    def maximal(self):
        lowers = {lo for lo, _ in self.covers}
        return [i for i in range(len(self.elements)) if i not in lowers]

    def minimal(self):
        uppers = {u for _, u in self.covers}
        return [i for i in range(len(self.elements)) if i not in uppers]


def _transitive_reduction(n, less):
    # triple scan with the inner loop over k done as one bitmask operation
    above = [sum(1 << j for j in range(n) if less[i][j]) for i in range(n)]
    covers = []
    for i in range(n):
        reach2 = 0
        rest = above[i]
        while rest:
            low = rest & -rest
            reach2 |= above[low.bit_length() - 1]
            rest ^= low
        direct = above[i] & ~reach2
        covers.extend((i, j) for j in range(n) if direct >> j & 1)
    return covers


@lru_cache(maxsize=64)
def compute_omega(rs: RootSystem) -> OmegaPoset:
    elements = tuple(a for a in rs.positive_roots if in_omega(a, rs))
    n = len(elements)
    less = [[i != j and precedes(elements[i], elements[j]) for j in range(n)] for i in range(n)]
    return OmegaPoset(rs.lie_type, elements, tuple(_transitive_reduction(n, less)))


def hasse_to_dot(p: OmegaPoset) -> str:
    """DOT text for the Hasse diagram of Omega.

    Edges point from the lower to the upper element of each cover, so with the
    default top-to-bottom layout maximal elements land at the bottom.
    """
    lines = [f'digraph "Omega_{p.lie_type}" {{', "  rankdir=TB;", "  node [shape=plaintext];"]
    for i, a in enumerate(p.elements):
        lines.append(f'  n{i} [label="{shorthand(a)}"];')
    for lo, up in p.covers:
        lines.append(f"  n{lo} -> n{up};")
    lines.append("}")
    return "\n".join(lines) + "\n"
