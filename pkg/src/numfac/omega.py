"""Omega-primality over the integers, via dynamic bullets.

A bullet for an integer x is an exponent vector b whose value
v = sum(bi * ni) satisfies v - x in S while v - x - ni lies outside S
for every generator ni actually used.  omega(x) is the largest bullet
length; it is 0 exactly when -x is in S, and 1 exactly when -x is a
pseudo-Frobenius number.

Three independent routes to the same numbers live here:

  * ``omega_up_to`` runs the dynamic scan.  Each element m keeps a
    window entry of (value, length) pairs ("dynamic bullets", at most
    one pair per value, the longest).  The entry for m is obtained by
    pushing every pair of the entries for m - ni through the cover map:
    a pair (v, l) survives unchanged when v - m is in S and otherwise
    becomes (v + ni, l + 1).  Every integer below -F(S) has the constant
    entry {(0, 0)}, which is what lets the scan start at -F(S).
  * ``bullets_brute_force`` enumerates exponent vectors directly and
    filters by the two bullet conditions.  Values never exceed
    x + F(S) + nk, which bounds the enumeration.
  * ``bullets_via_apery`` builds bul(x) from restricted factorization
    sets: a vector supported on a generator subset A is a bullet exactly
    when it factors y + x for some y in the intersection of the Apery
    sets of A.

For n above the threshold N0 = ceil((F(S) + n2) * n1 / (n2 - n1)) the
omega function is quasilinear: omega(n) = n / n1 + a(n mod n1) with
exact rational offsets a.  ``quasilinear_model`` captures that shape
(and where it empirically begins), and ``omega_extrapolate`` evaluates
it for arbitrarily large n in constant time.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BelowThreshold, TargetBelowBase
from .factorization import _grid_budget, _sorted_grid
from .monoid import NumericalMonoid, require_i64

__all__ = [
    "omega_up_to",
    "omega",
    "dynamic_bullets",
    "bullets_brute_force",
    "bullets_via_apery",
    "quasilinear_model",
    "omega_extrapolate",
    "QuasilinearModel",
]


def _scan(monoid, n, keep_final_entry=False):
    """Dynamic-bullet scan over [-F(S), n].

    Returns (base, values, widest) where values[m - base] = omega(m) and
    widest is the largest number of distinct values any window entry
    held (a constant for fixed S, which is what makes the scan linear).
    With ``keep_final_entry`` a fourth element is appended: the window
    entry (values, lengths) for n itself.
    """
    n = require_i64(n, "target")
    gens = monoid.generators
    nk = gens[-1]
    base = -monoid.frobenius
    if n < base:
        raise TargetBelowBase(f"scan target {n} is below the base case {base}")

    zero_v = np.zeros(1, dtype=np.int64)
    zero_l = np.zeros(1, dtype=np.int64)
    window = [None] * nk
    values = np.empty(n - base + 1, dtype=np.int64)
    widest = 1
    contains_array = monoid.contains_array
    for m in range(base, n + 1):
        vparts = []
        lparts = []
        for g in gens:
            prev = m - g
            if prev < base:
                pv, pl = zero_v, zero_l
            else:
                pv, pl = window[prev % nk]
            keep = contains_array(pv - m)
            vparts.append(np.where(keep, pv, pv + g))
            lparts.append(np.where(keep, pl, pl + 1))
        v = np.concatenate(vparts)
        l = np.concatenate(lparts)
        order = np.lexsort((l, v))
        v = v[order]
        l = l[order]
        last = np.empty(len(v), dtype=bool)
        last[-1] = True
        last[:-1] = v[1:] != v[:-1]
        entry = (v[last], l[last])
        window[m % nk] = entry
        values[m - base] = entry[1].max()
        if len(entry[0]) > widest:
            widest = len(entry[0])
    if keep_final_entry:
        return base, values, widest, window[n % nk]
    return base, values, widest


def omega_up_to(monoid: NumericalMonoid, n, domain="monoid"):
    """Map m -> omega(m) for m up to n, via the dynamic-bullet scan.

    ``domain="monoid"`` returns entries for the monoid elements of
    [0, n]; ``domain="quotient"`` returns every integer of [-F(S), n].
    The target must not lie below -F(S).
    """
    if domain not in ("monoid", "quotient"):
        raise ValueError(f"domain must be 'monoid' or 'quotient', got {domain!r}")
    base, values, _ = _scan(monoid, n)
    if domain == "quotient":
        return {m: int(values[m - base]) for m in range(base, n + 1)}
    result = {}
    for m in range(0, n + 1):
        if monoid.contains(m):
            result[m] = int(values[m - base]) if m >= base else 0
    return result


def omega(monoid: NumericalMonoid, n):
    """omega(n) for a single integer n (0 whenever -n is in the monoid)."""
    n = require_i64(n, "target")
    if n < -monoid.frobenius:
        return 0
    base, values, _ = _scan(monoid, n)
    return int(values[n - base])


def dynamic_bullets(monoid: NumericalMonoid, n):
    """Maximal dynamic bullets (value, length) of n, sorted by value.

    These are the window entries the scan keeps: one pair per attainable
    bullet value, with the largest length.  For n below -F(S) the entry
    is the constant {(0, 0)}.
    """
    n = require_i64(n, "target")
    if n < -monoid.frobenius:
        return ((0, 0),)
    _, _, _, entry = _scan(monoid, n, keep_final_entry=True)
    return tuple((int(v), int(l)) for v, l in zip(*entry))


def _zero_bullet(monoid):
    return {(0,) * monoid.k}


def bullets_brute_force(monoid: NumericalMonoid, x):
    """bul(x) by direct enumeration; the oracle the dynamic path is checked against.

    Every bullet value is at most x + F(S) + nk, so vectors are
    enumerated up to that budget and filtered by the two bullet
    conditions.
    """
    x = require_i64(x, "target")
    if monoid.contains(-x):
        return _zero_bullet(monoid)
    gens = monoid.generators
    budget = x + monoid.frobenius + gens[-1]
    rows, values = _sorted_grid(gens, _grid_budget(budget))
    # bullet values lie in [x, budget]: y = v - x sits in [0, F + nk]
    lo, hi = np.searchsorted(values, (max(x, 0), budget + 1))
    rows = rows[lo:hi]
    y = values[lo:hi] - x
    good = monoid.contains_array(y)
    for i, g in enumerate(gens):
        good &= (rows[:, i] == 0) | ~monoid.contains_array(y - g)
    return {tuple(int(v) for v in row) for row in rows[good]}


def bullets_via_apery(monoid: NumericalMonoid, x):
    """bul(x) from restricted factorizations over Apery-set intersections.

    Unions Z_A(y + x) over every non-empty generator subset A and every
    y in the intersection of the Apery sets of A.  Subsets whose gcd
    cannot divide y + x contribute nothing and are skipped.
    """
    from .factorization import brute_force_factorizations

    x = require_i64(x, "target")
    if monoid.contains(-x):
        return _zero_bullet(monoid)
    gens = monoid.generators
    k = len(gens)
    apery = {g: set(monoid.apery_set(g).elements) for g in gens}
    result = set()
    for bits in range(1, 1 << k):
        subset = tuple(gens[i] for i in range(k) if bits >> i & 1)
        common = apery[subset[0]]
        for g in subset[1:]:
            common = common & apery[g]
        if not common:
            continue
        d = math.gcd(*subset)
        for y in common:
            t = y + x
            if t < 0 or t % d:
                continue
            result |= brute_force_factorizations(monoid, t, support=subset)
    return result


@dataclass(frozen=True)
class QuasilinearModel:
    """Eventual shape of omega: n / n1 + offsets[n mod n1] for n > threshold.

    ``dissonance`` is the empirical start of that behavior: the largest
    n from which stepping forward by n1 does not yet raise omega by
    exactly one (omega(n + n1) != omega(n) + 1), floored at n1 since the
    step always breaks at the identity.  It scans the whole quotient
    group; ``dissonance_in_monoid`` restricts the scan to monoid
    elements.  The step relation provably holds beyond ``threshold``, so
    both are exact.
    """

    n1: int
    threshold: int
    offsets: tuple
    dissonance: int
    dissonance_in_monoid: int
    anchors: tuple = field(repr=False)

    @property
    def N0(self):
        return self.threshold


def quasilinear_model(monoid: NumericalMonoid):
    """Fit the exact eventual quasilinear form of omega on S.

    Runs the dynamic scan up to threshold + 2 * n1, reads one exact
    rational offset per residue class off the top of the window, and
    locates the empirical start of the omega(n) = omega(n - n1) + 1
    recurrence in both the quotient-group and monoid-only readings.
    """
    gens = monoid.generators
    if len(gens) < 2:
        raise ValueError("the quasilinear model needs at least two generators")
    n1, n2 = gens[0], gens[1]
    F = monoid.frobenius
    threshold = -((F + n2) * n1 // -(n2 - n1))  # ceil of the rational bound
    top = threshold + 2 * n1
    base, values, _ = _scan(monoid, top)

    def val(m):
        return int(values[m - base]) if m >= base else 0

    anchors = []
    offsets = []
    for r in range(n1):
        m0 = threshold + 1 + (r - (threshold + 1)) % n1  # in (threshold, threshold + n1]
        anchors.append((m0, val(m0)))
        offsets.append(Fraction(val(m0) * n1 - m0, n1))

    dissonance = n1
    for m in range(top - n1, base - 1, -1):
        if val(m + n1) != val(m) + 1:
            dissonance = max(n1, m)
            break
    dissonance_in_monoid = n1
    for m in range(top - n1, -1, -1):
        if monoid.contains(m) and val(m + n1) != val(m) + 1:
            dissonance_in_monoid = max(n1, m)
            break
    return QuasilinearModel(
        n1=n1,
        threshold=threshold,
        offsets=tuple(offsets),
        dissonance=dissonance,
        dissonance_in_monoid=dissonance_in_monoid,
        anchors=tuple(anchors),
    )


def omega_extrapolate(model: QuasilinearModel, n):
    """omega(n) for n above the model threshold, in constant time."""
    n = operator.index(n)
    if n <= model.threshold:
        raise BelowThreshold(
            f"{n} <= threshold {model.threshold}: use the dynamic scan instead"
        )
    m0, w0 = model.anchors[n % model.n1]
    return w0 + (n - m0) // model.n1
