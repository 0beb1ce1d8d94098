"""Factorization sets and length sets, computed dynamically.

The factorization set Z(m) of an element m is the set of exponent
vectors (a1, ..., ak) with sum(ai * ni) = m.  Z obeys a one-step
recurrence: every factorization of m extends a factorization of some
m - ni by one copy of ni.  Splitting by the smallest extended index
makes the union disjoint, so each vector is produced exactly once:

    Z(m) = disjoint union over i of
           { a + e_i : a in Z(m - ni), a_j = 0 for all j < i }

Length sets satisfy the same recurrence with "append e_i" replaced by
"+1", which is why they can be scanned without ever materializing a
factorization.  Both scans keep only the last nk results in a ring
buffer, so memory stays proportional to the window, not to the target.

Length sets are stored internally as integer bitmasks (bit l set iff l
is an attainable length); shifting a mask left by one adds 1 to every
length, and union is bitwise or.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import NegativeTarget, NotAGenerator, NotInMonoid
from .monoid import NumericalMonoid, require_i64

__all__ = [
    "factorizations_up_to",
    "factorizations",
    "brute_force_factorizations",
    "length_sets_up_to",
    "length_set",
    "max_length",
]


def _checked_target(n):
    n = require_i64(n, "target")
    if n < 0:
        raise NegativeTarget(f"target must be non-negative, got {n}")
    return n


def factorizations_up_to(monoid: NumericalMonoid, n):
    """Yield (m, Z(m)) for every monoid element m in [0, n], ascending.

    Each Z(m) is a read-only numpy array of shape (len(Z(m)), k) holding
    one exponent vector per row, in the deterministic order induced by
    ascending extension index.  Rows are never duplicated; no dedup pass
    runs.  Only the last nk factorization sets are retained internally,
    so iterating without keeping references streams in bounded memory.
    """
    n = _checked_target(n)
    gens = monoid.generators
    k = len(gens)
    nk = gens[-1]
    contains = monoid.contains
    dtype = np.int32 if n // gens[0] < 2**31 - 1 else np.int64

    window = [None] * nk
    zero = np.zeros((1, k), dtype=dtype)
    zero.setflags(write=False)
    for m in range(n + 1):
        if not contains(m):
            window[m % nk] = None
            continue
        if m == 0:
            Z = zero
        else:
            parts = []
            for i in range(k):
                prev = m - gens[i]
                if prev < 0 or not contains(prev):
                    continue
                P = window[prev % nk]
                if i:
                    P = P[(P[:, :i] == 0).all(axis=1)]
                if len(P):
                    ext = P.copy()
                    ext[:, i] += 1
                    parts.append(ext)
            Z = np.vstack(parts) if len(parts) > 1 else parts[0]
            Z.setflags(write=False)
        window[m % nk] = Z
        yield m, Z


def factorizations(monoid: NumericalMonoid, n):
    """Z(n) as a set of exponent tuples; empty iff n is not in the monoid."""
    n = _checked_target(n)
    if not monoid.contains(n):
        return set()
    result = None
    for m, Z in factorizations_up_to(monoid, n):
        if m == n:
            result = Z
    return {tuple(int(v) for v in row) for row in result}


def _grid_budget(budget):
    # bucket budgets so sweeps over nearby targets reuse one cached grid
    return (budget // 256 + 1) * 256


@lru_cache(maxsize=64)
def _combo_grid(gens, budget):
    """All exponent vectors over `gens` with value <= budget.

    Returns (rows, values): rows is an int64 array with one column per
    generator (in the given order), values its dot product with gens.
    Built by extending with the largest generator first to keep the
    intermediate row counts small.
    """
    rows = np.zeros((1, 0), dtype=np.int64)
    values = np.zeros(1, dtype=np.int64)
    for g in reversed(gens):
        cap = (budget - values) // g
        reps = cap + 1
        total = int(reps.sum())
        idx = np.repeat(np.arange(len(rows)), reps)
        starts = np.repeat(np.cumsum(reps) - reps, reps)
        counts = np.arange(total) - starts
        rows = np.column_stack([counts, rows[idx]])
        values = values[idx] + counts * g
    return rows, values


@lru_cache(maxsize=64)
def _sorted_grid(gens, budget):
    """The combo grid ordered by value, so exact values are slice lookups."""
    rows, values = _combo_grid(gens, budget)
    order = np.argsort(values, kind="stable")
    return rows[order], values[order]


def brute_force_factorizations(monoid: NumericalMonoid, n, support=None):
    """Enumerate Z(n) by bounded nested loops, independent of the scan.

    ``support`` optionally restricts to factorizations whose exponents
    vanish outside the given generators (given by value).  This is the
    validation oracle: exponential in k, intended for desk-scale n.
    """
    n = _checked_target(n)
    gens = monoid.generators
    if support is None:
        chosen = gens
    else:
        chosen = tuple(sorted(set(support)))
        for g in chosen:
            if g not in gens:
                raise NotAGenerator(f"{g} is not a minimal generator of {monoid!r}")
    rows, values = _sorted_grid(chosen, _grid_budget(n))
    lo, hi = np.searchsorted(values, (n, n + 1))
    hits = rows[lo:hi]
    col = {g: i for i, g in enumerate(gens)}
    result = set()
    for row in hits:
        full = [0] * len(gens)
        for g, v in zip(chosen, row):
            full[col[g]] = int(v)
        result.add(tuple(full))
    return result


def _length_masks_up_to(monoid, n):
    """Yield (m, bitmask of L(m)) for monoid elements m in [0, n]."""
    gens = monoid.generators
    nk = gens[-1]
    contains = monoid.contains
    window = [0] * nk
    for m in range(n + 1):
        if not contains(m):
            window[m % nk] = 0
            continue
        if m == 0:
            mask = 1
        else:
            mask = 0
            for g in gens:
                prev = m - g
                if prev >= 0 and contains(prev):
                    mask |= window[prev % nk] << 1
        window[m % nk] = mask
        yield m, mask


def _mask_to_lengths(mask):
    """Sorted numpy array of the set-bit positions of ``mask``."""
    nbytes = (mask.bit_length() + 7) // 8 or 1
    bits = np.unpackbits(
        np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8),
        bitorder="little",
    )
    return np.flatnonzero(bits)


def length_sets_up_to(monoid: NumericalMonoid, n):
    """Yield (m, L(m)) for every monoid element m in [0, n], ascending.

    L(m) arrives as a sorted numpy int array.  Memory stays bounded by
    the nk-deep ring buffer; factorizations are never materialized.
    """
    n = _checked_target(n)
    for m, mask in _length_masks_up_to(monoid, n):
        yield m, _mask_to_lengths(mask)


def length_set(monoid: NumericalMonoid, n):
    """L(n) as a tuple of increasing lengths; empty iff n not in the monoid."""
    n = _checked_target(n)
    if not monoid.contains(n):
        return ()
    final = 0
    for m, mask in _length_masks_up_to(monoid, n):
        if m == n:
            final = mask
    return tuple(int(v) for v in _mask_to_lengths(final))


def max_length(monoid: NumericalMonoid, n):
    """Largest factorization length M(n); requires n in the monoid."""
    n = _checked_target(n)
    if not monoid.contains(n):
        raise NotInMonoid(f"{n} is not an element of {monoid!r}")
    gens = monoid.generators
    nk = gens[-1]
    contains = monoid.contains
    window = [0] * nk
    best = 0
    for m in range(n + 1):
        if not contains(m):
            continue
        top = 0
        for g in gens:
            prev = m - g
            if prev >= 0 and contains(prev):
                cand = window[prev % nk] + 1
                if cand > top:
                    top = cand
        window[m % nk] = top
        if m == n:
            best = top
    return best
