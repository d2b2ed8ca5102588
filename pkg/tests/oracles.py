"""Independent reference implementations used only by the test suite.

Everything here recomputes results through a different route than the
package: coefficients by filtering full multiset permutations, tableau
counts by the hook length formula, row products by direct horizontal-strip
enumeration, and pattern membership by searching cyclic factorizations of
the order.
"""

from __future__ import annotations

import itertools
from math import factorial

from abext import AbelianGroup, make_partition
from abext.families import FamilyPattern


def partitions_of(n, max_part=None):
    """All partitions of n as canonical tuples."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_upto(n):
    """All partitions of every size from 0 through n."""
    for total in range(n + 1):
        yield from partitions_of(total)


def naive_lr(lam, nu, mu):
    """Coefficient by checking every distinct assignment of the content
    word to the skew cells, validating rows, columns and the ballot
    condition only after the full filling is laid down."""
    if sum(mu) != sum(lam) + sum(nu):
        return 0
    if len(lam) > len(mu) or any(l > m for l, m in zip(lam, mu)):
        return 0
    lam_pad = lam + (0,) * (len(mu) - len(lam))
    cells = [(r, c) for r in range(len(mu)) for c in range(lam_pad[r], mu[r])]
    word = [i + 1 for i, reps in enumerate(nu) for _ in range(reps)]
    count = 0
    for perm in set(itertools.permutations(word)):
        grid = dict(zip(cells, perm))
        ok = True
        for (r, c), v in grid.items():
            if grid.get((r, c + 1), v) < v:
                ok = False
                break
            if (r + 1, c) in grid and grid[(r + 1, c)] <= v:
                ok = False
                break
        if not ok:
            continue
        reading = [grid[(r, c)] for r in range(len(mu))
                   for c in range(mu[r] - 1, lam_pad[r] - 1, -1)]
        seen = [0] * (len(nu) + 2)
        for v in reading:
            seen[v] += 1
            if v > 1 and seen[v] > seen[v - 1]:
                ok = False
                break
        count += ok
    return count


def syt_count(shape):
    """Standard Young tableaux of a shape, by the hook length formula."""
    if not shape:
        return 1
    conj = [sum(1 for row in shape if row > c) for c in range(shape[0])]
    n = sum(shape)
    denom = 1
    for i, row in enumerate(shape):
        for j in range(row):
            denom *= row - j + conj[j] - i - 1
    return factorial(n) // denom


def horizontal_strip_expand(lam, k):
    """Shapes mu with mu/lam a horizontal strip of k cells (at most one
    new cell per column), enumerated directly from the interleaving
    condition lam[i-1] >= mu[i] >= lam[i]."""
    rows = len(lam) + 1
    out = set()

    def rec(i, remaining, prefix):
        if i == rows:
            if remaining == 0:
                out.add(make_partition(prefix))
            return
        lo = lam[i] if i < len(lam) else 0
        # at most one new cell per column: mu[i] may not pass lam[i-1]
        hi = min(lam[i - 1], lo + remaining) if i else lo + remaining
        for val in range(lo, hi + 1):
            rec(i + 1, remaining - (val - lo), prefix + [val])

    rec(0, k, [])
    return out


def divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def naive_matches(group: AbelianGroup, pattern: FamilyPattern) -> bool:
    """Pattern membership by brute force: search every way of writing the
    order as a product of cyclic factor orders allowed by the slots and
    compare the resulting group."""
    def allows(slot, n):
        if slot.kind == "free":
            return True
        if slot.kind == "even":
            return n % 2 == 0
        if slot.kind == "triple":
            return n % 3 == 0
        return n == slot.modulus

    slots = pattern.slots

    def rec(i, remaining, orders):
        if i == len(slots):
            return remaining == 1 and AbelianGroup.from_factors(orders) == group
        for d in divisors(remaining):
            if allows(slots[i], d) and rec(i + 1, remaining // d, orders + [d]):
                return True
        return False

    return rec(0, group.order(), [])


def all_abelian_groups_upto(bound):
    """Every finite abelian group of order at most bound, via all type
    combinations over the prime factorization of each order."""
    from abext.groups import factorize
    for n in range(1, bound + 1):
        per_prime = [[(p, t) for t in partitions_of(e)]
                     for p, e in factorize(n).items()]
        for combo in itertools.product(*per_prime):
            yield AbelianGroup(dict(combo))


def random_partition(rng, max_size):
    total = rng.randint(0, max_size)
    parts = []
    while total:
        part = rng.randint(1, total)
        parts.append(part)
        total -= part
    return make_partition(parts)


def random_group(rng, primes=(2, 3, 5), max_size=4) -> AbelianGroup:
    types = {}
    for p in primes:
        parts = random_partition(rng, max_size)
        if parts:
            types[p] = parts
    return AbelianGroup(types)
