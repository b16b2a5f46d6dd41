"""Finite monoids given by Cayley tables.

Elements are the indices ``0..n-1``; ``table[i][j]`` is the product ``i * j``
with the left factor selecting the row.  Display names only matter for I/O.
Subsets of a monoid (submonoids, zero-classes) are plain ``frozenset`` objects
of element indices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import InvalidMonoid, NotAMorphism, NotASubmonoid, SizeCapExceeded

ENUMERATION_CAP = 12


@dataclass(frozen=True)
class Violation:
    kind: str
    elements: tuple[int, ...]

    def __str__(self):
        return f"{self.kind}{self.elements}"


@dataclass(frozen=True)
class Check:
    """Outcome of a quantifier scan: whether it holds, plus the first counterexample."""

    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.holds


def table_violations(table, identity) -> list[Violation]:
    n = len(table)
    if n == 0:
        return [Violation("RaggedTable", ())]
    bad = []
    for i, row in enumerate(table):
        if len(row) != n:
            bad.append(Violation("RaggedTable", (i,)))
    if bad:
        return bad
    for i, j in itertools.product(range(n), repeat=2):
        v = table[i][j]
        if not isinstance(v, int) or not 0 <= v < n:
            bad.append(Violation("BadEntry", (i, j)))
    if not isinstance(identity, int) or not 0 <= identity < n:
        return bad + [Violation("BadIdentity", (identity,))]
    if bad:
        return bad
    for i in range(n):
        if table[identity][i] != i or table[i][identity] != i:
            bad.append(Violation("BadIdentity", (i,)))
    for i, j, k in itertools.product(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            bad.append(Violation("NotAssociative", (i, j, k)))
    return bad


@dataclass(frozen=True)
class FiniteMonoid:
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        violations = table_violations(table, self.identity)
        if violations:
            raise InvalidMonoid(violations)
        names = tuple(str(x) for x in self.names) or tuple(str(i) for i in range(len(table)))
        if len(names) != len(table) or len(set(names)) != len(names):
            raise InvalidMonoid([Violation("BadNames", ())])
        object.__setattr__(self, "names", names)

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, *factors: int) -> int:
        result = self.identity
        for f in factors:
            result = self.table[result][f]
        return result

    def index(self, name: str) -> int:
        try:
            return self.names.index(str(name))
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    def subset(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(x) for x in names)

    def show(self, elements: Iterable[int]) -> list[str]:
        return [self.names[i] for i in elements]

    def show_set(self, subset: Iterable[int]) -> list[str]:
        return [self.names[i] for i in sorted(subset)]

    def relabel(self, perm: Sequence[int]) -> "FiniteMonoid":
        """Isomorphic copy in which old element ``i`` becomes ``perm[i]``."""
        n = self.size
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        table = tuple(
            tuple(perm[self.table[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
        )
        names = tuple(self.names[inv[a]] for a in range(n))
        return FiniteMonoid(table, perm[self.identity], names)


def validate_monoid(table, identity: int = 0, names=None) -> FiniteMonoid:
    """Build a ``FiniteMonoid``; raises ``InvalidMonoid`` listing every violation."""
    if any(not isinstance(row, (list, tuple)) for row in table):
        raise InvalidMonoid([Violation("RaggedTable", ())])
    return FiniteMonoid(tuple(tuple(row) for row in table), identity, tuple(names or ()))


def multiply(A: FiniteMonoid, a: int, b: int) -> int:
    return A.table[a][b]


def from_operation(elements: Sequence[Hashable], op: Callable, identity, names=None) -> FiniteMonoid:
    index = {x: i for i, x in enumerate(elements)}
    table = [[index[op(x, y)] for y in elements] for x in elements]
    return FiniteMonoid(table, index[identity], tuple(names or (str(x) for x in elements)))


def is_submonoid(A: FiniteMonoid, M: Iterable[int]) -> bool:
    M = frozenset(M)
    if A.identity not in M:
        return False
    t = A.table
    return all(t[a][b] in M for a in M for b in M)


def require_submonoid(A: FiniteMonoid, M: Iterable[int]) -> frozenset[int]:
    M = frozenset(M)
    if any(not 0 <= x < A.size for x in M):
        raise NotASubmonoid(f"elements out of range: {sorted(M)}")
    if not is_submonoid(A, M):
        raise NotASubmonoid(f"{A.show_set(M)} is not a submonoid")
    return M


def generate_submonoid(A: FiniteMonoid, seed: Iterable[int] = ()) -> frozenset[int]:
    t = A.table
    elems = set(seed) | {A.identity}
    frontier = list(elems)
    while frontier:
        new = []
        for a in frontier:
            for b in list(elems):
                for p in (t[a][b], t[b][a]):
                    if p not in elems:
                        elems.add(p)
                        new.append(p)
        frontier = new
    return frozenset(elems)


def _subset_key(s):
    return (len(s), sorted(s))


def enumerate_submonoids(A: FiniteMonoid, cap: int = ENUMERATION_CAP) -> list[frozenset[int]]:
    """All submonoids of ``A``, sorted by size then members.

    Every submonoid is reached by adjoining one element at a time to a smaller
    one, so closing ``S + {x}`` for each known ``S`` finds them all without
    touching the ``2^n`` seeds.
    """
    if A.size > cap:
        raise SizeCapExceeded(f"order {A.size} exceeds submonoid enumeration cap {cap}")
    start = generate_submonoid(A)
    found = {start}
    queue = [start]
    while queue:
        S = queue.pop()
        for x in A.elements:
            if x in S:
                continue
            T = generate_submonoid(A, S | {x})
            if T not in found:
                found.add(T)
                queue.append(T)
    return sorted(found, key=_subset_key)


def is_dedekind_finite(A: FiniteMonoid) -> Check:
    t, e = A.table, A.identity
    for x in A.elements:
        for y in A.elements:
            if t[x][y] == e and t[y][x] != e:
                return Check(False, (x, y))
    return Check(True)


def check_condition_star(A: FiniteMonoid, M: Iterable[int]) -> Check:
    """(xy = 1, xs in M, ty in M) implies ts in M, for all x, y, s, t."""
    M = require_submonoid(A, M)
    tab, e, rng = A.table, A.identity, A.elements
    for x in rng:
        for y in rng:
            if tab[x][y] != e:
                continue
            for s in rng:
                if tab[x][s] not in M:
                    continue
                for t in rng:
                    if tab[t][y] in M and tab[t][s] not in M:
                        return Check(False, (x, y, s, t))
    return Check(True)


@dataclass(frozen=True)
class Morphism:
    source: FiniteMonoid
    target: FiniteMonoid
    mapping: tuple[int, ...]

    def __post_init__(self):
        f = tuple(self.mapping)
        object.__setattr__(self, "mapping", f)
        S, T = self.source, self.target
        if len(f) != S.size or any(not 0 <= v < T.size for v in f):
            raise NotAMorphism("mapping has wrong length or out-of-range values")
        if f[S.identity] != T.identity:
            raise NotAMorphism("identity not preserved")
        for a in S.elements:
            for b in S.elements:
                if f[S.table[a][b]] != T.table[f[a]][f[b]]:
                    raise NotAMorphism(f"product not preserved at ({a}, {b})")

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def image(self, subset: Iterable[int]) -> frozenset[int]:
        return frozenset(self.mapping[a] for a in subset)


def enumerate_morphisms(S: FiniteMonoid, T: FiniteMonoid) -> list[Morphism]:
    """Brute-force every monoid morphism S -> T (desk-scale only)."""
    if T.size ** max(S.size - 1, 0) > 200_000:
        raise SizeCapExceeded("morphism search space too large")
    others = [a for a in S.elements if a != S.identity]
    out = []
    for values in itertools.product(T.elements, repeat=len(others)):
        f = [T.identity] * S.size
        for a, v in zip(others, values):
            f[a] = v
        try:
            out.append(Morphism(S, T, tuple(f)))
        except NotAMorphism:
            pass
    return out


def cyclic_group(n: int) -> FiniteMonoid:
    return FiniteMonoid([[(i + j) % n for j in range(n)] for i in range(n)], 0)


def _cycle_name(perm: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle, x = [], start
        while x not in seen:
            seen.add(x)
            cycle.append(x + 1)
            x = perm[x]
        cycles.append("(" + "".join(map(str, cycle)) + ")")
    return "".join(cycles) or "e"


def symmetric_group(degree: int) -> FiniteMonoid:
    """Permutations of ``{1..degree}`` in cycle notation; ``p*q`` applies ``q`` first."""
    perms = sorted(itertools.permutations(range(degree)), key=lambda p: (p != tuple(range(degree)), p))
    return from_operation(
        perms,
        lambda p, q: tuple(p[q[i]] for i in range(degree)),
        tuple(range(degree)),
        [_cycle_name(p) for p in perms],
    )


def transformation_monoid(generators: Iterable[Sequence[int]], degree: int, cap: int = 256) -> FiniteMonoid:
    """Submonoid of the full transformation monoid on ``degree`` points.

    Maps are tuples of images; the product ``f*g`` applies ``f`` first, the
    usual right-action convention for transformation semigroups.
    """
    ident = tuple(range(degree))
    gens = [tuple(g) for g in generators]
    elems = [ident]
    seen = {ident}
    i = 0
    while i < len(elems):
        f = elems[i]
        for g in gens:
            h = tuple(g[f[k]] for k in range(degree))
            if h not in seen:
                if len(elems) >= cap:
                    raise SizeCapExceeded(f"transformation monoid exceeds {cap} elements")
                seen.add(h)
                elems.append(h)
        i += 1
    return from_operation(elems, lambda f, g: tuple(g[f[k]] for k in range(degree)), ident,
                          ["".join(map(str, f)) for f in elems])
