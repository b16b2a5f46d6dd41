"""Binary relations on a finite monoid, stored as bit rows.

``rows[a]`` has bit ``b`` set iff ``(a, b)`` is in the relation.  A relation
is *internal* (compatible) when it is a submonoid of ``A x A``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BaseMismatch, NotACongruence
from .monoid import Check, FiniteMonoid, Morphism


class RelationKind(enum.Enum):
    REFLEXIVE = "refl"
    PREORDER = "preord"
    EQUIVALENCE = "eq"

    @classmethod
    def parse(cls, text: str) -> "RelationKind":
        aliases = {
            "refl": cls.REFLEXIVE, "reflexive": cls.REFLEXIVE,
            "preord": cls.PREORDER, "preorder": cls.PREORDER,
            "eq": cls.EQUIVALENCE, "cong": cls.EQUIVALENCE, "equivalence": cls.EQUIVALENCE,
        }
        try:
            return aliases[text.lower()]
        except KeyError:
            raise ValueError(f"unknown relation kind {text!r}") from None


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class BinaryRelation:
    base: FiniteMonoid
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        if len(rows) != self.base.size or any(r >> self.base.size for r in rows):
            raise ValueError("relation rows do not match the base monoid")
        object.__setattr__(self, "rows", rows)

    def __contains__(self, pair) -> bool:
        a, b = pair
        return bool(self.rows[a] >> b & 1)

    def __len__(self):
        return sum(bin(r).count("1") for r in self.rows)

    def __iter__(self):
        return iter(self.pairs())

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, row in enumerate(self.rows) for b in _bits(row)]

    def related(self, a: int) -> list[int]:
        return list(_bits(self.rows[a]))

    def __le__(self, other: "BinaryRelation") -> bool:
        return contains(other, self)

    def __and__(self, other):
        return intersect(self, other)

    def __or__(self, other):
        _same_base(self, other)
        return BinaryRelation(self.base, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def converse(self) -> "BinaryRelation":
        n = self.base.size
        rows = [0] * n
        for a, b in self.pairs():
            rows[b] |= 1 << a
        return BinaryRelation(self.base, tuple(rows))

    def show(self) -> list[tuple[str, str]]:
        names = self.base.names
        return [(names[a], names[b]) for a, b in self.pairs()]


def from_pairs(A: FiniteMonoid, pairs: Iterable[tuple[int, int]]) -> BinaryRelation:
    rows = [0] * A.size
    for a, b in pairs:
        rows[a] |= 1 << b
    return BinaryRelation(A, tuple(rows))


def diagonal(A: FiniteMonoid) -> BinaryRelation:
    return BinaryRelation(A, tuple(1 << a for a in A.elements))


def indiscrete(A: FiniteMonoid) -> BinaryRelation:
    full = (1 << A.size) - 1
    return BinaryRelation(A, (full,) * A.size)


def _same_base(R: BinaryRelation, S: BinaryRelation):
    if R.base != S.base:
        raise BaseMismatch("relations live on different monoids")


def intersect(R: BinaryRelation, S: BinaryRelation) -> BinaryRelation:
    _same_base(R, S)
    return BinaryRelation(R.base, tuple(a & b for a, b in zip(R.rows, S.rows)))


def contains(R: BinaryRelation, S: BinaryRelation) -> bool:
    """True iff ``S`` is a subset of ``R``."""
    _same_base(R, S)
    return all(s & ~r == 0 for r, s in zip(R.rows, S.rows))


def is_reflexive(R: BinaryRelation) -> bool:
    return all(row >> a & 1 for a, row in enumerate(R.rows))


def is_symmetric(R: BinaryRelation) -> bool:
    return R.converse() == R


def is_transitive(R: BinaryRelation) -> bool:
    rows = R.rows
    for a, row in enumerate(rows):
        for b in _bits(row):
            if rows[b] & ~row:
                return False
    return True


def is_compatible(R: BinaryRelation) -> Check:
    """Submonoid test on ``A x A``.

    The witness is ``(e, e)`` when the identity pair is missing, otherwise the
    first ``(a, b, c, d)`` with ``(a, b), (c, d)`` in ``R`` but ``(ac, bd)`` not.
    """
    A = R.base
    e, t = A.identity, A.table
    if (e, e) not in R:
        return Check(False, (e, e))
    pairs = R.pairs()
    rows = R.rows
    for a, b in pairs:
        ta, tb = t[a], t[b]
        for c, d in pairs:
            if not rows[ta[c]] >> tb[d] & 1:
                return Check(False, (a, b, c, d))
    return Check(True)


def is_equivalence(R: BinaryRelation) -> bool:
    return is_reflexive(R) and is_symmetric(R) and is_transitive(R)


def is_congruence(R: BinaryRelation) -> bool:
    return is_equivalence(R) and bool(is_compatible(R))


def has_kind(R: BinaryRelation, kind: RelationKind) -> bool:
    """Internal relation of the given kind (reflexivity implies (1,1), so compatibility is the submonoid test)."""
    if not is_reflexive(R) or not is_compatible(R):
        return False
    if kind is RelationKind.REFLEXIVE:
        return True
    if not is_transitive(R):
        return False
    return kind is RelationKind.PREORDER or is_symmetric(R)


def reflexive_closure(R: BinaryRelation) -> BinaryRelation:
    return BinaryRelation(R.base, tuple(row | 1 << a for a, row in enumerate(R.rows)))


def symmetric_closure(R: BinaryRelation) -> BinaryRelation:
    return R | R.converse()


def compose(R: BinaryRelation, S: BinaryRelation) -> BinaryRelation:
    """Relational composite: ``(a, c)`` whenever ``a R b`` and ``b S c``."""
    _same_base(R, S)
    out = []
    for row in R.rows:
        acc = 0
        for b in _bits(row):
            acc |= S.rows[b]
        out.append(acc)
    return BinaryRelation(R.base, tuple(out))


def transitive_closure(R: BinaryRelation) -> BinaryRelation:
    # R <- R | R.R until stable; each pass doubles the path length covered
    current = R
    while True:
        nxt = current | compose(current, current)
        if nxt == current:
            return current
        current = nxt


def compatible_closure(A: FiniteMonoid, seed_pairs: Iterable[tuple[int, int]]) -> BinaryRelation:
    """Submonoid of ``A x A`` generated by the seed pairs.

    New pairs are multiplied on both sides against every pair found so far.
    """
    t, n = A.table, A.size
    found = {A.identity * n + A.identity}
    found.update(a * n + b for a, b in seed_pairs)
    frontier = list(found)
    while frontier:
        new = []
        for p in frontier:
            a, b = divmod(p, n)
            for q in list(found):
                c, d = divmod(q, n)
                for r in (t[a][c] * n + t[b][d], t[c][a] * n + t[d][b]):
                    if r not in found:
                        found.add(r)
                        new.append(r)
        frontier = new
    return from_pairs(A, (divmod(p, n) for p in found))


def compatible_closure_by_generators(A: FiniteMonoid, seed_pairs: Iterable[tuple[int, int]]) -> BinaryRelation:
    """Same closure, multiplying only by the seed pairs on the right."""
    t, n = A.table, A.size
    gens = sorted({(a, b) for a, b in seed_pairs})
    start = A.identity * n + A.identity
    found = {start}
    queue = [start]
    while queue:
        a, b = divmod(queue.pop(), n)
        for c, d in gens:
            r = t[a][c] * n + t[b][d]
            if r not in found:
                found.add(r)
                queue.append(r)
    return from_pairs(A, (divmod(p, n) for p in found))


def zero_class(R: BinaryRelation) -> frozenset[int]:
    return frozenset(_bits(R.rows[R.base.identity]))


def preimage_along(f: Morphism, R: BinaryRelation) -> BinaryRelation:
    """``{(a, b) : (f a, f b) in R}`` for a relation ``R`` on the target of ``f``."""
    if R.base != f.target:
        raise BaseMismatch("relation does not live on the morphism's target")
    A, m = f.source, f.mapping
    return from_pairs(A, ((a, b) for a in A.elements for b in A.elements if (m[a], m[b]) in R))


def kernel_pair(A: FiniteMonoid, mapping) -> BinaryRelation:
    """``{(a, b) : mapping[a] == mapping[b]}``."""
    return from_pairs(A, ((a, b) for a in A.elements for b in A.elements if mapping[a] == mapping[b]))


def quotient_by_congruence(A: FiniteMonoid, E: BinaryRelation) -> tuple[FiniteMonoid, tuple[int, ...]]:
    """Quotient monoid ``A/E`` and the projection ``A -> A/E``.

    Classes are numbered in order of their least element and named after it.
    """
    if E.base != A:
        raise BaseMismatch("congruence does not live on this monoid")
    if not is_congruence(E):
        raise NotACongruence("relation is not a compatible equivalence relation")
    projection = [-1] * A.size
    reps = []
    for a in A.elements:
        if projection[a] < 0:
            for b in _bits(E.rows[a]):
                projection[b] = len(reps)
            reps.append(a)
    t = A.table
    table = [[projection[t[r][s]] for s in reps] for r in reps]
    names = [f"[{A.names[r]}]" for r in reps]
    return FiniteMonoid(table, projection[A.identity], tuple(names)), tuple(projection)
