"""Syntactic relations of a subset and the membership conditions they encode.

All relations are computed by direct scans over two-sided contexts ``(x, y)``.
Witnesses are the lexicographically first counterexample in element index
order, so reports are deterministic.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .monoid import Check, FiniteMonoid, require_submonoid
from .relations import BinaryRelation, is_compatible


def _implies(A: FiniteMonoid, M: frozenset, a: int, b: int) -> bool:
    """For every context (x, y): xay in M implies xby in M."""
    t = A.table
    for x in A.elements:
        ta, tb = t[t[x][a]], t[t[x][b]]
        for y in A.elements:
            if ta[y] in M and tb[y] not in M:
                return False
    return True


def syntactic_preorder(A: FiniteMonoid, M: Iterable[int]) -> BinaryRelation:
    M = frozenset(M)
    rows = []
    for a in A.elements:
        row = 0
        for b in A.elements:
            if a == b or _implies(A, M, a, b):
                row |= 1 << b
        rows.append(row)
    return BinaryRelation(A, tuple(rows))


def syntactic_congruence(A: FiniteMonoid, M: Iterable[int]) -> BinaryRelation:
    M = frozenset(M)
    rows = [1 << a for a in A.elements]
    for a in A.elements:
        for b in range(a + 1, A.size):
            if _implies(A, M, a, b) and _implies(A, M, b, a):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return BinaryRelation(A, tuple(rows))


class ReflexiveResult(NamedTuple):
    relation: BinaryRelation
    compatible: Check
    reflexive: bool


def syntactic_reflexive(A: FiniteMonoid, M: Iterable[int]) -> ReflexiveResult:
    """``a R b`` iff every context sending ``a`` to the identity sends ``b`` into ``M``.

    Defined for any subset; it is reflexive exactly when ``1`` lies in ``M``
    (the context ``x = y = 1`` around ``a = 1``), which is why the result
    reports reflexivity and compatibility instead of assuming them.
    """
    M = frozenset(M)
    t, e = A.table, A.identity
    rows = []
    for a in A.elements:
        row = 0
        for b in A.elements:
            ok = True
            for x in A.elements:
                ta, tb = t[t[x][a]], t[t[x][b]]
                for y in A.elements:
                    if ta[y] == e and tb[y] not in M:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                row |= 1 << b
        rows.append(row)
    R = BinaryRelation(A, tuple(rows))
    reflexive = all(r >> a & 1 for a, r in enumerate(rows))
    return ReflexiveResult(R, is_compatible(R), reflexive)


def _scan(A: FiniteMonoid, M: frozenset, violated) -> Check:
    t = A.table
    for x in A.elements:
        for y in A.elements:
            xy = t[x][y]
            for u in sorted(M):
                if violated(xy, t[t[x][u]][y]):
                    return Check(False, (x, y, u))
    return Check(True)


def condition_c(A: FiniteMonoid, M: Iterable[int]) -> Check:
    """xy in M iff xuy in M, for all x, y and u in M."""
    M = require_submonoid(A, M)
    return _scan(A, M, lambda xy, xuy: (xy in M) != (xuy in M))


def condition_p(A: FiniteMonoid, M: Iterable[int]) -> Check:
    """xy in M implies xuy in M."""
    M = require_submonoid(A, M)
    return _scan(A, M, lambda xy, xuy: xy in M and xuy not in M)


def condition_r(A: FiniteMonoid, M: Iterable[int]) -> Check:
    """xy = 1 implies xuy in M."""
    M = require_submonoid(A, M)
    e = A.identity
    return _scan(A, M, lambda xy, xuy: xy == e and xuy not in M)


def condition_f(A: FiniteMonoid, M: Iterable[int]) -> Check:
    """If xMy meets M then xMy is inside M.

    Witness ``(x, y, u, v)``: ``xuy`` in ``M`` but ``xvy`` outside.
    """
    M = require_submonoid(A, M)
    t = A.table
    members = sorted(M)
    for x in A.elements:
        for y in A.elements:
            image = [t[t[x][u]][y] for u in members]
            inside = [u for u, p in zip(members, image) if p in M]
            outside = [u for u, p in zip(members, image) if p not in M]
            if inside and outside:
                return Check(False, (x, y, inside[0], outside[0]))
    return Check(True)


def is_right_normal(A: FiniteMonoid, M: Iterable[int]) -> Check:
    """aM is contained in Ma for every a; witness ``(a, u)`` with ``au`` not in ``Ma``."""
    M = require_submonoid(A, M)
    t = A.table
    members = sorted(M)
    for a in A.elements:
        right = {t[v][a] for v in members}
        for u in members:
            if t[a][u] not in right:
                return Check(False, (a, u))
    return Check(True)
