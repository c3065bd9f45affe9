"""Finite groups given by Cayley tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BoundsError, GroupValidationError, MissingIdentityError, MissingInverseError, NonAssociativeError

MAX_ORDER = 12


@dataclass(frozen=True)
class FiniteGroup:
    """A validated group on elements ``0 .. order-1``.

    Build instances with :func:`validate_group`; the constructor trusts its input.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]
    name: str = ""

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        return self.table[a][b]

    def prod(self, *elems: int) -> int:
        out = self.identity
        for g in elems:
            out = self.table[out][g]
        return out

    def inv(self, a: int) -> int:
        self._check(a)
        return self.inverses[a]

    def conj(self, q: int, p: int) -> int:
        """``q p q^-1``."""
        return conjugation_action(self, q, p)

    @property
    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in self.elements for b in self.elements)

    def _check(self, *elems):
        for g in elems:
            if not (isinstance(g, (int, np.integer)) and 0 <= g < self.order):
                raise BoundsError(f"group element {g!r} out of range for order {self.order}")


def validate_group(order: int, table: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    if order < 1:
        raise GroupValidationError("group order must be positive")
    if order > MAX_ORDER:
        raise GroupValidationError(f"group order {order} exceeds the cap of {MAX_ORDER}")
    rows = tuple(tuple(int(x) for x in row) for row in table)
    if len(rows) != order or any(len(r) != order for r in rows):
        raise GroupValidationError(f"table must be {order}x{order}")
    for r in rows:
        for x in r:
            if not 0 <= x < order:
                raise GroupValidationError(f"table entry {x} out of range")
    for a, b, c in itertools.product(range(order), repeat=3):
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise NonAssociativeError((a, b, c))
    identity = next(
        (e for e in range(order) if all(rows[e][g] == g and rows[g][e] == g for g in range(order))),
        None,
    )
    if identity is None:
        raise MissingIdentityError()
    inverses = []
    for g in range(order):
        inv = next((h for h in range(order) if rows[g][h] == identity and rows[h][g] == identity), None)
        if inv is None:
            raise MissingInverseError(g)
        inverses.append(inv)
    return FiniteGroup(order, rows, identity, tuple(inverses), name)


def conjugation_action(g: FiniteGroup, q: int, p: int) -> int:
    g._check(q, p)
    return g.table[g.table[q][p]][g.inverses[q]]


def trivial_group() -> FiniteGroup:
    return validate_group(1, [[0]], "1")


def cyclic_group(n: int) -> FiniteGroup:
    return validate_group(n, [[(a + b) % n for b in range(n)] for a in range(n)], f"Z/{n}")


def symmetric_group_3() -> FiniteGroup:
    """S3 on permutations of (0, 1, 2) in lexicographic order; element 0 is the identity."""
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # (a*b)(x) = a(b(x))
    table = [[index[tuple(a[b[x]] for x in range(3))] for b in perms] for a in perms]
    return validate_group(6, table, "S3")


def builtin_group(name: str) -> FiniteGroup:
    if name in ("1", "trivial"):
        return trivial_group()
    if name == "S3":
        return symmetric_group_3()
    if name.startswith("Z/"):
        return cyclic_group(int(name[2:]))
    raise KeyError(f"unknown builtin group {name!r}")
