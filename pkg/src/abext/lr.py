"""Littlewood-Richardson coefficients via tableau backtracking.

The coefficient of mu in the Young-diagram product lam . nu counts the
semistandard fillings of the skew shape mu/lam with content nu whose
reverse reading word (rows read right to left, top to bottom) is a ballot
word: every prefix contains at least as many i's as (i+1)'s.  Cells are
filled in exactly that reading order, so the ballot condition, the content
bounds and the row/column rules all prune incrementally, and positivity
queries can stop at the first completed filling.

A product lam . nu is expanded by iterating candidate shapes mu of size
|lam| + |nu| inside the bounding box (len(lam) + len(nu) rows, lam[0] +
nu[0] columns) that contain lam, keeping those with positive coefficient.
Coefficients and expansions are memoized; arguments must be canonical
partitions.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import Partition, contains, size, sort_key


def lr_coefficient(lam: Partition, nu: Partition, mu: Partition) -> int:
    """Multiplicity of mu in lam . nu; 0 when the shapes are incompatible."""
    return _count_fillings(lam, nu, mu, False)


def lr_positive(lam: Partition, nu: Partition, mu: Partition) -> bool:
    """True when mu appears in lam . nu.

    For p-group types this is exactly the condition for a group of type mu
    to be an extension of a group of type nu by a group of type lam.
    """
    return _count_fillings(lam, nu, mu, True) > 0


def lr_expand(lam: Partition, nu: Partition) -> dict[Partition, int]:
    """All mu with positive coefficient in lam . nu, with multiplicities."""
    return dict(_expansion_items(lam, nu))


@lru_cache(maxsize=None)
def _expansion_items(lam, nu):
    items = [(mu, c) for mu in _candidates(lam, nu)
             if (c := _count_fillings(lam, nu, mu, False))]
    items.sort(key=lambda item: sort_key(item[0]))
    return tuple(items)


def _candidates(lam, nu):
    """Partitions of |lam| + |nu| containing lam inside the support box."""
    total = size(lam) + size(nu)
    max_len = len(lam) + len(nu)
    top = (lam[0] if lam else 0) + (nu[0] if nu else 0)
    out = []
    prefix = []

    def build(row, remaining, prev):
        if remaining == 0:
            if row >= len(lam):
                out.append(tuple(prefix))
            return
        if row == max_len:
            return
        lo = lam[row] if row < len(lam) else 1
        for part in range(min(prev, remaining), lo - 1, -1):
            if part * (max_len - row) < remaining:
                break
            prefix.append(part)
            build(row + 1, remaining - part, part)
            prefix.pop()

    build(0, total, top)
    return out


@lru_cache(maxsize=None)
def _count_fillings(lam, nu, mu, first_only):
    if size(mu) != size(lam) + size(nu):
        return 0
    if not contains(mu, lam) or not contains(mu, nu):
        return 0
    if len(mu) > len(lam) + len(nu):
        return 0

    nrows = len(mu)
    lam_pad = lam + (0,) * (nrows - len(lam))
    cells = [(r, c) for r in range(nrows)
             for c in range(mu[r] - 1, lam_pad[r] - 1, -1)]
    if not cells:
        return 1

    k = len(nu)
    counts = [0] * (k + 1)
    grid = [[0] * mu[r] for r in range(nrows)]
    total = 0

    def fill(i):
        nonlocal total
        if i == len(cells):
            total += 1
            return first_only
        r, c = cells[i]
        hi = grid[r][c + 1] if c + 1 < mu[r] else k
        # the cell above constrains only when it lies in the skew shape
        lo = grid[r - 1][c] + 1 if r and c >= lam_pad[r - 1] else 1
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            grid[r][c] = v
            if fill(i + 1):
                return True
            counts[v] -= 1
        grid[r][c] = 0
        return False

    fill(0)
    return total
