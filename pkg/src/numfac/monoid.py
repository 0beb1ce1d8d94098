"""Numerical monoids: membership, Frobenius number, Apery sets.

A numerical monoid S = <n1, ..., nk> is the set of all non-negative
integer combinations of coprime positive generators.  Everything else in
this package leans on the three facts computed here once per monoid:

  * the minimal generating set (redundant input generators are dropped),
  * the Frobenius number F(S), the largest integer outside S,
  * O(1) membership for arbitrary integers.

Membership uses the classical residue table: for each residue r mod n1,
the smallest element of S congruent to r.  An integer m >= 0 lies in S
exactly when m is at least that table entry for its residue class, and
F(S) is the table maximum minus n1.
"""

from __future__ import annotations

import heapq
import math
import operator
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyGenerators,
    EmptySubset,
    Int64Overflow,
    NonCoprime,
    NonPositiveBase,
    NotAGenerator,
    NotInMonoid,
    ZeroGenerator,
)

I64_MAX = 2**63 - 1

# Resource guards: the residue table has n1 entries and the membership
# bit table has F(S)+1 entries.  Both raise Int64Overflow beyond these
# caps rather than silently exhausting memory.
_RESIDUE_TABLE_LIMIT = 50_000_000
_MEMBER_TABLE_LIMIT = 500_000_000


def require_i64(value, what="value"):
    """Return ``value`` as a plain int, rejecting anything outside int64."""
    value = operator.index(value)
    if value > I64_MAX or value < -I64_MAX - 1:
        raise Int64Overflow(f"{what} {value} does not fit in 64-bit arithmetic")
    return value


@dataclass(frozen=True)
class AperySet:
    """The set of monoid elements m with m - base outside the monoid."""

    base: int
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m):
        return m in self.elements


def _minimal_generators(sorted_unique):
    """Drop generators representable by the smaller kept ones."""
    kept = []
    for g in sorted_unique:
        if kept and _representable(g, kept):
            continue
        kept.append(g)
    return kept


def _representable(target, gens):
    """True if target is a non-negative combination of gens (all <= target)."""
    reach = bytearray(target + 1)
    reach[0] = 1
    for v in range(gens[0], target + 1):
        for g in gens:
            if g > v:
                break
            if reach[v - g]:
                reach[v] = 1
                break
    return bool(reach[target])


def _residue_table(gens):
    """Smallest element of S in each residue class mod gens[0].

    Dijkstra over the n1 residue classes: from class r with smallest
    known element d there is an edge to (r + g) % n1 with element d + g
    for every other generator g.
    """
    n1 = gens[0]
    dist = [None] * n1
    dist[0] = 0
    heap = [(0, 0)]
    others = gens[1:]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for g in others:
            nd = d + g
            nr = nd % n1
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    # gcd 1 guarantees every residue class is hit
    return dist


class NumericalMonoid:
    """A co-finite additive submonoid of the non-negative integers.

    >>> S = NumericalMonoid([6, 9, 20])
    >>> S.frobenius
    43
    >>> S.contains(43), S.contains(44)
    (False, True)

    Instances are immutable after construction and safe to share across
    threads.  Redundant input generators are removed (and remembered in
    ``removed_generators``) so that ``generators`` is always the unique
    minimal generating set, sorted ascending.
    """

    __slots__ = (
        "generators",
        "k",
        "frobenius",
        "period_hint",
        "removed_generators",
        "_dist",
        "_table",
    )

    def __init__(self, generators):
        raw = [require_i64(g, "generator") for g in generators]
        if not raw:
            raise EmptyGenerators("at least one generator is required")
        if any(g < 1 for g in raw):
            raise ZeroGenerator("generators must be positive integers")
        ordered = sorted(set(raw))
        if math.gcd(*ordered) != 1:
            raise NonCoprime(f"gcd({', '.join(map(str, ordered))}) > 1")
        minimal = _minimal_generators(ordered)

        self.generators = tuple(minimal)
        self.k = len(minimal)
        self.removed_generators = tuple(g for g in ordered if g not in set(minimal))

        n1, nk = minimal[0], minimal[-1]
        require_i64(n1 * nk, "generator product")
        if n1 > _RESIDUE_TABLE_LIMIT:
            raise Int64Overflow(f"smallest generator {n1} exceeds the residue table cap")
        self._dist = _residue_table(minimal)
        self.frobenius = max(self._dist) - n1
        self.period_hint = math.lcm(n1, nk)

        if self.frobenius >= 0:
            if self.frobenius + 1 > _MEMBER_TABLE_LIMIT:
                raise Int64Overflow(
                    f"Frobenius number {self.frobenius} exceeds the membership table cap"
                )
            idx = np.arange(self.frobenius + 1, dtype=np.int64)
            self._table = np.asarray(self._dist, dtype=np.int64)[idx % n1] <= idx
        else:
            self._table = np.zeros(0, dtype=bool)

    def __repr__(self):
        return f"NumericalMonoid({', '.join(map(str, self.generators))})"

    def __eq__(self, other):
        if isinstance(other, NumericalMonoid):
            return self.generators == other.generators
        return NotImplemented

    def __hash__(self):
        return hash(self.generators)

    def contains(self, m):
        """True iff the integer m lies in the monoid."""
        m = operator.index(m)
        if m < 0:
            return False
        if m > self.frobenius:
            return True
        return m >= self._dist[m % self.generators[0]]

    def contains_array(self, values):
        """Vectorized membership for an int array (any shape)."""
        x = np.asarray(values, dtype=np.int64)
        result = x > self.frobenius
        in_table = (x >= 0) & (x <= self.frobenius)
        if in_table.any():
            result[in_table] = self._table[x[in_table]]
        return result

    def apery_set(self, base):
        """Apery set of ``base``: all m in S with m - base outside S.

        ``base`` must be a positive element of the monoid; the set then
        has exactly ``base`` elements, one per residue class mod base,
        and every element is at most F(S) + base.
        """
        base = require_i64(base, "Apery base")
        if base <= 0:
            raise NonPositiveBase(f"Apery base must be positive, got {base}")
        if not self.contains(base):
            raise NotInMonoid(f"{base} is not an element of {self!r}")
        m = np.arange(self.frobenius + base + 1, dtype=np.int64)
        members = self.contains_array(m)
        shifted = self.contains_array(m - base)
        elements = m[members & ~shifted]
        return AperySet(base=base, elements=tuple(int(v) for v in elements))

    def apery_intersection(self, subset):
        """Intersection of the Apery sets of the given generators, sorted."""
        chosen = sorted(set(subset))
        if not chosen:
            raise EmptySubset("need at least one generator")
        gens = set(self.generators)
        for g in chosen:
            if g not in gens:
                raise NotAGenerator(f"{g} is not a minimal generator of {self!r}")
        common = set(self.apery_set(chosen[0]).elements)
        for g in chosen[1:]:
            common &= set(self.apery_set(g).elements)
        return tuple(sorted(common))

    def pseudo_frobenius(self):
        """All n outside S with n + g in S for every generator g.

        For the full monoid of non-negative integers the only such n is
        -1; otherwise the candidates are the gaps 1..F(S).
        """
        if self.generators == (1,):
            return (-1,)
        gaps = np.flatnonzero(~self._table)
        ok = np.ones(len(gaps), dtype=bool)
        for g in self.generators:
            ok &= self.contains_array(gaps + g)
        return tuple(int(v) for v in gaps[ok])
