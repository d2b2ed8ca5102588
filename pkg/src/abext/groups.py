"""Finite abelian groups up to isomorphism.

A group is stored as a map from primes to partitions: p maps to the type
of the p-part (the Sylow p-subgroup), so Z/8 x Z/4 x Z/6 becomes
{2: (3, 2, 1), 3: (1,)}.  The trivial group is the empty map.  Group
strings are products of cyclic factors:

    1                trivial group
    Z/12 x Z/2       separators 'x', '*' or the times sign; whitespace free
    Z/4^5            repetition
    C9               Cn is an alias for Z/n

Z/1 factors are dropped; Z/0 is rejected.  Printing regroups prime-power
factors into coprime products of equal multiplicity, largest order first
(invariant-factor style), so {2: (1, 1), 3: (1, 1, 1, 1)} prints as
'Z/6^2 x Z/3^2' and parse(format(G)) always returns G.  Orders use Python
integers, so they never overflow.
"""

from __future__ import annotations

import re
from math import prod
from typing import Iterable, Mapping

from .partitions import Partition, make_partition, union_merge


class GroupSyntaxError(ValueError):
    """A group string does not conform to the grammar."""


_FACTOR_RE = re.compile(r"(?:Z/(\d+)|C(\d+))(?:\^(\d+))?")
_SEPARATOR_RE = re.compile(r"[x*×]")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class AbelianGroup:
    """Isomorphism class of a finite abelian group."""

    __slots__ = ("_types", "_order", "_hash", "_str")

    def __init__(self, types: Mapping[int, Iterable[int]]):
        items = []
        for p in sorted(types):
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            parts = make_partition(types[p])
            if parts:
                items.append((p, parts))
        self._types = tuple(items)
        self._order = prod(p ** sum(parts) for p, parts in items)
        self._hash = hash(self._types)
        self._str = None

    @classmethod
    def from_factors(cls, orders: Iterable[int]) -> "AbelianGroup":
        """Build from a list of cyclic factor orders, e.g. (8, 4, 6)."""
        types: dict[int, list[int]] = {}
        for n in orders:
            for p, e in factorize(n).items():
                types.setdefault(p, []).append(e)
        return cls(types)

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        """Parse a group string (see the module grammar)."""
        s = "".join(text.split())
        if not s:
            raise GroupSyntaxError("empty group string")
        orders = []
        for token in _SEPARATOR_RE.split(s):
            if token == "1":
                continue
            m = _FACTOR_RE.fullmatch(token)
            if not m:
                raise GroupSyntaxError(f"cannot parse factor {token!r}")
            n = int(m.group(1) or m.group(2))
            rep = int(m.group(3)) if m.group(3) else 1
            if n == 0:
                raise GroupSyntaxError("Z/0 is not a finite group")
            if rep == 0:
                raise GroupSyntaxError("repetition exponent must be >= 1")
            orders.extend([n] * rep)
        return cls.from_factors(orders)

    @classmethod
    def from_json(cls, obj) -> "AbelianGroup":
        """Inverse of to_json."""
        if not isinstance(obj, dict) or set(obj) != {"primes"}:
            raise ValueError("expected an object of the form {'primes': {...}}")
        return cls({int(p): parts for p, parts in obj["primes"].items()})

    def to_json(self) -> dict:
        """JSON form, e.g. {'primes': {'2': [3, 3, 2, 1]}}."""
        return {"primes": {str(p): list(parts) for p, parts in self._types}}

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self._types)

    def prime_types(self) -> dict[int, Partition]:
        return dict(self._types)

    def p_part(self, p: int) -> Partition:
        """Type of the p-part; the empty partition when p does not divide
        the order."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        for q, parts in self._types:
            if q == p:
                return parts
        return ()

    def rank(self) -> int:
        """Minimum number of generators: the longest per-prime type."""
        return max((len(parts) for _, parts in self._types), default=0)

    def order(self) -> int:
        return self._order

    def is_trivial(self) -> bool:
        return not self._types

    def direct_product(self, other: "AbelianGroup") -> "AbelianGroup":
        types: dict[int, Partition] = dict(self._types)
        for p, parts in other._types:
            types[p] = union_merge(types.get(p, ()), parts)
        return AbelianGroup(types)

    __mul__ = direct_product

    def sort_key(self):
        return (self._order, str(self))

    def __str__(self) -> str:
        if self._str is None:
            self._str = self._format()
        return self._str

    def _format(self) -> str:
        if not self._types:
            return "1"
        width = max(len(parts) for _, parts in self._types)
        factors = []
        for i in range(width):
            f = prod(p ** parts[i] for p, parts in self._types if i < len(parts))
            factors.append(f)
        pieces = []
        i = 0
        while i < len(factors):
            j = i
            while j < len(factors) and factors[j] == factors[i]:
                j += 1
            rep = j - i
            pieces.append(f"Z/{factors[i]}" + (f"^{rep}" if rep > 1 else ""))
            i = j
        return " x ".join(pieces)

    def __repr__(self) -> str:
        return f"AbelianGroup({dict(self._types)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self._types == other._types

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other) -> bool:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.sort_key() < other.sort_key()


TRIVIAL = AbelianGroup({})


def parse_group(text: str) -> AbelianGroup:
    return AbelianGroup.parse(text)


def format_group(group: AbelianGroup) -> str:
    return str(group)
