"""Enumeration of abelian ideals as admissible upward-closed subsets of Omega."""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Tuple

from . import kernel
from .exceptions import (
    AdmissibilityError,
    InvalidAntichainError,
    InvalidRootError,
    ResourceBoundError,
    UnsupportedTypeError,
)
from .polynomial import Polynomial
from .poset import compute_omega, sum_not_preceding_theta
from .root_system import (
    ENUMERATION_RANK_CAP,
    Root,
    RootSystem,
    canonical_key,
    check_rank_cap,
    precedes,
)


def _canonical(roots: Iterable) -> Tuple[Root, ...]:
    return tuple(sorted({tuple(a) for a in roots}, key=canonical_key))


@dataclass(frozen=True)
class AbelianIdeal:
    """Root set of an abelian ideal, stored in canonical root order."""

    roots: Tuple[Root, ...]

    def __post_init__(self):
        object.__setattr__(self, "roots", _canonical(self.roots))

    @property
    def dimension(self) -> int:
        return len(self.roots)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, root):
        return tuple(root) in self.roots

    def sort_key(self):
        return (len(self.roots), tuple(canonical_key(a) for a in self.roots))


@dataclass(frozen=True)
class MinimalGenerators:
    """Antichain of minimal roots of an ideal, in canonical order."""

    roots: Tuple[Root, ...]

    def __post_init__(self):
        object.__setattr__(self, "roots", _canonical(self.roots))

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, root):
        return tuple(root) in self.roots


@dataclass(frozen=True)
class DimensionDistribution:
    """``counts[i]`` is the number of ideals of dimension ``i``; trailing zeros trimmed."""

    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = list(self.counts)
        while counts and counts[-1] == 0:
            counts.pop()
        object.__setattr__(self, "counts", tuple(int(c) for c in counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def max_dimension(self) -> int:
        return len(self.counts) - 1

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.counts)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "DimensionDistribution":
        return cls(p.coeffs)


# ---------------------------------------------------------------------------
# Search tables


@dataclass(frozen=True)
class _Tables:
    elements: Tuple[Root, ...]  # Omega, descending canonical order
    compat: List[int]
    down: List[int]

    @property
    def n(self):
        return len(self.elements)

    @property
    def full(self):
        return (1 << self.n) - 1


@lru_cache(maxsize=64)
def _tables(rs: RootSystem) -> _Tables:
    elements = tuple(reversed(compute_omega(rs).elements))
    n = len(elements)
    compat = []
    down = []
    for i, a in enumerate(elements):
        c = d = 0
        for j, b in enumerate(elements):
            if sum_not_preceding_theta(a, b, rs):
                c |= 1 << j
            if precedes(b, a):
                d |= 1 << j
        compat.append(c)
        down.append(d)
    return _Tables(elements, compat, down)


def _mask_to_ideal(tab: _Tables, mask: int) -> AbelianIdeal:
    return AbelianIdeal(tuple(tab.elements[j] for j in range(tab.n) if mask >> j & 1))


def _frontier(tab: _Tables, tasks: int):
    """Expand the search tree breadth-first into at least ``tasks`` subtrees."""
    frontier = [(tab.full, 0, 0)]  # possible, chosen, size
    done = []
    while frontier and len(frontier) + len(done) < tasks:
        nxt = []
        for p, c, s in frontier:
            if not p:
                done.append((p, c, s))
                continue
            low = p & -p
            j = low.bit_length() - 1
            nxt.append((p & tab.compat[j] & ~low, c | low, s + 1))
            nxt.append((p & ~tab.down[j], c, s))
        frontier = nxt
    return done + frontier


# ---------------------------------------------------------------------------
# Operations


def is_abelian_set(rs: RootSystem, s) -> bool:
    """True iff ``s`` is upward closed in the positive roots and pairwise admissible."""
    roots = {tuple(a) for a in s}
    for a in roots:
        if a not in rs:
            raise InvalidRootError(f"{a} is not a positive root of {rs.lie_type}")
    for a in roots:
        for b in rs.positive_roots:
            if b not in roots and precedes(a, b):
                return False
    for a, b in combinations_with_replacement(sorted(roots), 2):
        if not sum_not_preceding_theta(a, b, rs):
            return False
    return True


def enumerate_ideals(
    rs: RootSystem, max_rank: int = ENUMERATION_RANK_CAP, backend=None
) -> List[AbelianIdeal]:
    """All abelian ideals, ordered by dimension then by their sorted root lists."""
    check_rank_cap(rs.lie_type, max_rank, ResourceBoundError)
    tab = _tables(rs)
    impl = kernel.get_backend(backend)
    masks = impl.ideal_masks(tab.compat, tab.down, tab.n, tab.full, 0)
    ideals = [_mask_to_ideal(tab, m) for m in masks]
    ideals.sort(key=AbelianIdeal.sort_key)
    return ideals


def dimension_distribution(
    rs: RootSystem, max_rank: int = ENUMERATION_RANK_CAP, workers: int = 1, backend=None
) -> DimensionDistribution:
    """Number of abelian ideals of each dimension.

    With ``workers > 1`` the search tree is split into independent subtrees that
    run on a thread pool; the compiled kernel releases the GIL while walking.
    """
    check_rank_cap(rs.lie_type, max_rank, ResourceBoundError)
    tab = _tables(rs)
    impl = kernel.get_backend(backend)
    if workers <= 1:
        return DimensionDistribution(impl.size_counts(tab.compat, tab.down, tab.n, tab.full, 0))
    tasks = _frontier(tab, 4 * workers)
    totals = [0] * (tab.n + 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda task: impl.size_counts(tab.compat, tab.down, tab.n, task[0], task[2]), tasks)
        for part in parts:
            for i, c in enumerate(part):
                totals[i] += c
    return DimensionDistribution(totals)


def minimal_roots(rs: RootSystem, ideal) -> MinimalGenerators:
    roots = [tuple(a) for a in ideal]
    mins = [a for a in roots if not any(b != a and precedes(b, a) for b in roots)]
    return MinimalGenerators(tuple(mins))


def upward_closure(rs: RootSystem, roots) -> Tuple[Root, ...]:
    gens = [tuple(a) for a in roots]
    return tuple(b for b in rs.positive_roots if any(precedes(g, b) for g in gens))


def ideal_from_minimal(rs: RootSystem, gens) -> AbelianIdeal:
    """Upward closure of an incomparable admissible set of roots."""
    gens = _canonical(gens)
    for a in gens:
        if a not in rs:
            raise InvalidRootError(f"{a} is not a positive root of {rs.lie_type}")
    for a, b in combinations_with_replacement(gens, 2):
        if a != b and (precedes(a, b) or precedes(b, a)):
            raise AdmissibilityError(f"generators {a} and {b} are comparable", (a, b))
        if not sum_not_preceding_theta(a, b, rs):
            raise AdmissibilityError(
                f"generators {a} and {b} sum to an element below the highest root", (a, b)
            )
    return AbelianIdeal(upward_closure(rs, gens))


def type_a_dimension(r: int, i_seq, j_seq) -> int:
    """Dimension of the type A_r ideal generated by ``a_{i_s} + ... + a_{j_s}``."""
    i_seq = list(i_seq)
    j_seq = list(j_seq)
    k = len(i_seq)
    if len(j_seq) != k:
        raise InvalidAntichainError("i and j sequences differ in length")
    if k == 0:
        return 0
    if not (
        1 <= i_seq[0]
        and all(x < y for x, y in zip(i_seq, i_seq[1:]))
        and i_seq[-1] <= j_seq[0]
        and all(x < y for x, y in zip(j_seq, j_seq[1:]))
        and j_seq[-1] <= r
    ):
        raise InvalidAntichainError(
            f"need 1 <= i_1 < ... < i_k <= j_1 < ... < j_k <= {r}, got {i_seq}; {j_seq}"
        )
    ends = j_seq[1:] + [r + 1]
    return sum(i * (nxt - j) for i, j, nxt in zip(i_seq, j_seq, ends))


# ---------------------------------------------------------------------------
# Stratification of the classical types

StratumKey = Tuple[int, str]


def stratum_label(key: StratumKey) -> str:
    n, part = key
    return f"{n}{'^' + part if part else ''}"


def _stratum_predicates(rs: RootSystem):
    """Class predicates for B, C and D, keyed by ``(n, part)``."""
    t = rs.lie_type
    r = t.rank

    def eps(*terms):
        vec = [0] * r
        for k, c in terms:
            vec[k - 1] += c
        return rs.root_from_epsilon(vec)

    preds = {}
    if t.family == "C":
        plus = {n: eps((1, 1), (n, 1)) for n in range(1, r + 1)}
        preds[(0, "")] = lambda s: len(s) == 0
        for n in range(1, r):
            preds[(n, "")] = lambda s, n=n: plus[n] in s and plus[n + 1] not in s
        preds[(r, "")] = lambda s: plus[r] in s
    elif t.family == "B":
        minus = {n: eps((1, 1), (n, -1)) for n in range(2, r + 1)}
        e1 = eps((1, 1))
        preds[(2, "")] = lambda s: minus[2] in s
        for n in range(3, r + 1):
            preds[(n, "")] = lambda s, n=n: minus[n] in s and minus[n - 1] not in s
        preds[(r + 1, "")] = lambda s: e1 in s and minus[r] not in s
        preds[(r + 2, "")] = lambda s: e1 not in s
    elif t.family == "D":
        minus = {n: eps((1, 1), (n, -1)) for n in range(2, r + 1)}
        plus_r = eps((1, 1), (r, 1))
        preds[(2, "")] = lambda s: minus[2] in s
        for n in range(3, r):
            preds[(n, "")] = lambda s, n=n: minus[n] in s and minus[n - 1] not in s
        preds[(r, "")] = lambda s: plus_r in s and minus[r] in s and minus[r - 1] not in s
        preds[(r + 1, "+")] = lambda s: plus_r in s and minus[r] not in s
        preds[(r + 1, "-")] = lambda s: minus[r] in s and plus_r not in s
        preds[(r + 1, "0")] = lambda s: plus_r not in s and minus[r] not in s
    else:
        raise UnsupportedTypeError(f"stratification is defined for B, C, D only, not {t}")
    return preds


def stratify_classical(
    rs: RootSystem, max_rank: int = ENUMERATION_RANK_CAP
) -> Dict[StratumKey, Polynomial]:
    """Generating polynomial of each marker-root class of ideals.

    Raises ``RuntimeError`` if some ideal falls in no class or in several.
    """
    preds = _stratum_predicates(rs)
    counts = {key: Counter() for key in preds}
    for ideal in enumerate_ideals(rs, max_rank=max_rank):
        s = set(ideal.roots)
        hits = [key for key, pred in preds.items() if pred(s)]
        if len(hits) != 1:
            raise RuntimeError(f"ideal {ideal.roots} lies in classes {hits}")
        counts[hits[0]][len(s)] += 1
    out = {}
    for key, cnt in counts.items():
        top = max(cnt, default=-1)
        out[key] = Polynomial(tuple(cnt.get(d, 0) for d in range(top + 1)))
    return out
