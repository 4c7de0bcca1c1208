"""Positive root systems of the simple Lie algebras.

Roots are plain tuples of nonnegative integers: the coefficients of the
root in the basis of simple roots.  Simple roots are labelled so that the
highest roots come out as

    A_r   (1, 1, ..., 1)
    B_r   (1, 2, ..., 2)
    C_r   (2, ..., 2, 1)
    D_r   (1, 2, ..., 2, 1, 1)
    G2    (2, 3)
    F4    (2, 3, 4, 2)
    E6    (1, 2, 3, 2, 1, 2)
    E7    (2, 3, 4, 3, 2, 1, 2)
    E8    (2, 4, 6, 5, 4, 3, 2, 3)

i.e. the E series is a chain ``alpha_1 ... alpha_{r-1}`` with the last simple
root attached to ``alpha_3``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from .exceptions import DimensionError, InvalidRootError, RankBoundsError

Root = Tuple[int, ...]

#: Default rank caps; enumeration is exponential in the rank, closed forms are not.
ENUMERATION_RANK_CAP = 24
CLOSED_FORM_RANK_CAP = 60

FAMILIES = "ABCDEFG"
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class LieType:
    """Family letter and rank of a simple Lie algebra."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES or len(self.family) != 1:
            raise RankBoundsError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise RankBoundsError(f"rank must be an int, got {self.rank!r}")
        if self.family in _FIXED_RANKS:
            if self.rank not in _FIXED_RANKS[self.family]:
                allowed = ", ".join(str(r) for r in _FIXED_RANKS[self.family])
                raise RankBoundsError(
                    f"type {self.family} requires rank in {{{allowed}}}, got {self.rank}"
                )
        elif self.rank < _MIN_RANK[self.family]:
            raise RankBoundsError(
                f"type {self.family} requires rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse strings such as ``"A3"`` or ``"e8"``."""
        m = _TYPE_RE.match(text)
        if m is None:
            raise RankBoundsError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"

    @property
    def is_exceptional(self) -> bool:
        return self.family in "EFG"

    def __str__(self):
        return f"{self.family}{self.rank}"


def check_rank_cap(t: LieType, cap: int, error=RankBoundsError) -> None:
    if t.rank > cap:
        raise error(f"{t} exceeds the rank cap {cap}")


def all_types(max_rank: int):
    """Every supported type of rank ``<= max_rank``, classical families first."""
    out = []
    for fam in "ABCD":
        for r in range(_MIN_RANK[fam], max_rank + 1):
            out.append(LieType(fam, r))
    for fam in "EFG":
        for r in _FIXED_RANKS[fam]:
            if r <= max_rank:
                out.append(LieType(fam, r))
    return out


# ---------------------------------------------------------------------------
# Realizations


def _unit(n: int, i: int, scale=1) -> Tuple[Fraction, ...]:
    v = [Fraction(0)] * n
    v[i] = Fraction(scale)
    return tuple(v)


def _combine(*terms) -> Tuple[Fraction, ...]:
    n = len(terms[0][1])
    out = [Fraction(0)] * n
    for coef, vec in terms:
        for k in range(n):
            out[k] += coef * vec[k]
    return tuple(out)


def epsilon_simple_roots(t: LieType) -> Optional[Tuple[Tuple[Fraction, ...], ...]]:
    """Simple roots in epsilon coordinates, or None for the E series and G2."""
    r = t.rank
    if t.family == "A":
        n = r + 1
        return tuple(_combine((1, _unit(n, i)), (-1, _unit(n, i + 1))) for i in range(r))
    if t.family in "BCD":
        n = r
        chain = [_combine((1, _unit(n, i)), (-1, _unit(n, i + 1))) for i in range(r - 1)]
        if t.family == "B":
            last = _unit(n, r - 1)
        elif t.family == "C":
            last = _unit(n, r - 1, 2)
        else:
            last = _combine((1, _unit(n, r - 2)), (1, _unit(n, r - 1)))
        return tuple(chain + [last])
    if t.family == "F":
        e = [_unit(4, i) for i in range(4)]
        h = Fraction(1, 2)
        return (
            _combine((1, e[1]), (-1, e[2])),
            _combine((1, e[2]), (-1, e[3])),
            e[3],
            _combine((h, e[0]), (-h, e[1]), (-h, e[2]), (-h, e[3])),
        )
    return None


def _gram_matrix(t: LieType):
    """Inner products of the simple roots (exact)."""
    eps = epsilon_simple_roots(t)
    r = t.rank
    if eps is not None:
        return [[sum(a * b for a, b in zip(eps[i], eps[j])) for j in range(r)] for i in range(r)]
    if t.family == "G":
        # alpha_1 long, alpha_2 short
        return [[Fraction(6), Fraction(-3)], [Fraction(-3), Fraction(2)]]
    # E series: chain 1..r-1, node r attached to node 3
    g = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        g[i][i] = Fraction(2)
    edges = [(i, i + 1) for i in range(r - 2)] + [(2, r - 1)]
    for i, j in edges:
        g[i][j] = g[j][i] = Fraction(-1)
    return g


@lru_cache(maxsize=None)
def cartan_matrix(t: LieType) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix with entries ``A[i][j] = 2(a_i, a_j) / (a_j, a_j)``.

    Row ``i`` therefore gives the pairings of ``alpha_i`` with every simple
    coroot, which is what the root-string closure consumes.
    """
    g = _gram_matrix(t)
    r = t.rank
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            v = 2 * g[i][j] / g[j][j]
            assert v.denominator == 1
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


# ---------------------------------------------------------------------------
# Order and height


def height(a) -> int:
    return sum(a)


def precedes(a, b) -> bool:
    """Reflexive dominance order: True iff ``b - a`` has no negative entry."""
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(y >= x for x, y in zip(a, b))


def root_add(a, b) -> Root:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def canonical_key(a):
    return (sum(a), tuple(a))


def shorthand(a) -> str:
    """Coefficient shorthand such as ``"1232111"``."""
    return "".join(str(c) for c in a)


def format_epsilon(vec) -> str:
    """Render an epsilon-coordinate vector, e.g. ``e1-e3`` or ``1/2(e1-e2-e3-e4)``."""
    if any(c.denominator != 1 for c in vec):
        inner = format_epsilon(tuple(2 * c for c in vec))
        return f"1/2({inner})"
    parts = []
    for k, c in enumerate(vec, start=1):
        c = int(c)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}e{k}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


# ---------------------------------------------------------------------------
# Root systems


@dataclass(frozen=True)
class RootSystem:
    """Positive roots of a simple Lie algebra in canonical order."""

    lie_type: LieType
    simple_roots: Tuple[Root, ...]
    positive_roots: Tuple[Root, ...]
    highest_root: Root
    cartan: Tuple[Tuple[int, ...], ...]
    epsilon_view: Optional[Dict[Root, Tuple[Fraction, ...]]] = field(default=None, compare=False)
    _index: Dict[Root, int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def __contains__(self, root) -> bool:
        return tuple(root) in self._index

    def index(self, root) -> int:
        """Position of ``root`` in the canonical order."""
        try:
            return self._index[tuple(root)]
        except KeyError:
            raise InvalidRootError(f"{tuple(root)} is not a positive root of {self.lie_type}") from None

    def epsilon(self, root) -> Tuple[Fraction, ...]:
        if self.epsilon_view is None:
            raise KeyError(f"no epsilon realization for {self.lie_type}")
        return self.epsilon_view[tuple(root)]

    def root_from_epsilon(self, vec) -> Root:
        """Inverse of :meth:`epsilon` for roots given by integer epsilon coordinates."""
        if self.epsilon_view is None:
            raise KeyError(f"no epsilon realization for {self.lie_type}")
        target = tuple(Fraction(c) for c in vec)
        for root, v in self.epsilon_view.items():
            if v == target:
                return root
        raise InvalidRootError(f"{format_epsilon(target)} is not a positive root of {self.lie_type}")

    def is_root_sum(self, a, b) -> bool:
        return root_add(a, b) in self._index


def _generate_positive_roots(cartan) -> list:
    r = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
    found = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for j in range(r):
                # alpha_j-string through beta: beta - p a_j, ..., beta + q a_j
                p = 0
                cur = list(beta)
                while True:
                    cur[j] -= 1
                    if tuple(cur) in found:
                        p += 1
                    else:
                        break
                pairing = sum(beta[i] * cartan[i][j] for i in range(r))
                if p - pairing > 0:
                    up = list(beta)
                    up[j] += 1
                    nxt.add(tuple(up))
        nxt -= found
        found |= nxt
        layer = sorted(nxt)
        out.extend(layer)
    return out


@lru_cache(maxsize=64)
def build_root_system(t: LieType, max_rank: int = CLOSED_FORM_RANK_CAP) -> RootSystem:
    """Generate the positive roots of ``t`` by root-string closure."""
    check_rank_cap(t, max_rank)
    cartan = cartan_matrix(t)
    roots = sorted(_generate_positive_roots(cartan), key=canonical_key)
    top = max(roots, key=canonical_key)
    simple = tuple(tuple(1 if k == i else 0 for k in range(t.rank)) for i in range(t.rank))
    eps = epsilon_simple_roots(t)
    view = None
    if eps is not None:
        view = {}
        for root in roots:
            view[root] = _combine(*[(c, eps[i]) for i, c in enumerate(root)])
    return RootSystem(
        lie_type=t,
        simple_roots=simple,
        positive_roots=tuple(roots),
        highest_root=top,
        cartan=cartan,
        epsilon_view=view,
        _index={root: k for k, root in enumerate(roots)},
    )
