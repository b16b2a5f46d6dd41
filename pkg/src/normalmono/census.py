"""Exhaustive census over small monoids and their submonoids."""

from __future__ import annotations

import hashlib
import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .classify import ClassificationReport, classify_submonoid
from .errors import SizeCapExceeded
from .monoid import ENUMERATION_CAP, FiniteMonoid, enumerate_submonoids

MONOID_ORDER_CAP = 5


def canonical_table(table, identity: int = 0) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least relabeling that sends the identity to 0."""
    n = len(table)
    rest = [a for a in range(n) if a != identity]
    best = None
    for perm in itertools.permutations(range(1, n)):
        p = [0] * n
        for a, image in zip(rest, perm):
            p[a] = image
        inv = [0] * n
        for a in range(n):
            inv[p[a]] = a
        candidate = tuple(tuple(p[table[inv[a]][inv[b]]] for b in range(n)) for a in range(n))
        if best is None or candidate < best:
            best = candidate
    return best


def labeled_monoid_tables(order: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every associative table on ``0..order-1`` with identity 0, by backtracking.

    Cells of the non-identity block are filled row by row.  After each
    assignment only the associativity instances that read the new cell are
    rechecked, once all four of their cells are known.
    """
    n = order
    if n < 1:
        return
    t = [[None] * n for _ in range(n)]
    for a in range(n):
        t[0][a] = a
        t[a][0] = a
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]

    def ok(i, j):
        triples = [(i, j, c) for c in range(n)] + [(a, i, j) for a in range(n)]
        triples += [(a, b, j) for a in range(n) for b in range(n) if t[a][b] == i]
        triples += [(i, b, c) for b in range(n) for c in range(n) if t[b][c] == j]
        for a, b, c in triples:
            ab, bc = t[a][b], t[b][c]
            if ab is None or bc is None:
                continue
            left, right = t[ab][c], t[a][bc]
            if left is not None and right is not None and left != right:
                return False
        return True

    def search(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in t)
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = v
            if ok(i, j):
                yield from search(k + 1)
        t[i][j] = None

    yield from search(0)


def enumerate_monoids(order: int, cap: int = MONOID_ORDER_CAP) -> list[FiniteMonoid]:
    """One monoid per isomorphism class, sorted by canonical table; identity is element 0."""
    if order > cap:
        raise SizeCapExceeded(f"order {order} exceeds monoid enumeration cap {cap}")
    reps = {canonical_table(tab) for tab in labeled_monoid_tables(order)}
    names = tuple(["1"] + [chr(ord("a") + i - 1) for i in range(1, order)])
    return [FiniteMonoid(tab, 0, names) for tab in sorted(reps)]


def monoid_key(A: FiniteMonoid) -> str:
    payload = json.dumps({"table": A.table, "identity": A.identity}, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass
class Census:
    monoid: FiniteMonoid
    reports: list[ClassificationReport]
    counts: Counter = field(default_factory=Counter)
    # (isRightNormal, isPositiveCone) -> count; tabulated, no implication assumed
    right_normal_vs_cone: Counter = field(default_factory=Counter)

    def as_dict(self, include_relations: bool = False) -> dict:
        A = self.monoid
        return {
            "key": monoid_key(A),
            "order": A.size,
            "elements": list(A.names),
            "identity": A.names[A.identity],
            "table": [[A.names[v] for v in row] for row in A.table],
            "counts": dict(sorted(self.counts.items())),
            "rightNormalVsCone": {f"{rn},{pc}": c for (rn, pc), c in sorted(self.right_normal_vs_cone.items())},
            "submonoids": [r.as_dict(include_relations) for r in self.reports],
        }


def census_submonoids(A: FiniteMonoid, cap: int = ENUMERATION_CAP, monoid_id: str | None = None) -> Census:
    if A.size > cap:
        raise SizeCapExceeded(f"order {A.size} exceeds census cap {cap}")
    monoid_id = monoid_id or monoid_key(A)
    reports = [classify_submonoid(A, M, monoid_id) for M in enumerate_submonoids(A, cap)]
    counts = Counter(
        submonoids=len(reports),
        clots=sum(r.is_clot for r in reports),
        cones=sum(r.is_positive_cone for r in reports),
        normal=sum(r.is_normal for r in reports),
        rightNormal=sum(r.is_right_normal for r in reports),
    )
    tab = Counter((r.is_right_normal, r.is_positive_cone) for r in reports)
    return Census(A, reports, counts, tab)


def all_monoids(max_order: int) -> Iterator[FiniteMonoid]:
    for order in range(1, max_order + 1):
        yield from enumerate_monoids(order)


def strict_inclusion_witnesses(max_order: int) -> dict:
    """Smallest (monoid, submonoid) pairs separating the three notions, if any."""
    if max_order > MONOID_ORDER_CAP:
        raise SizeCapExceeded(f"order {max_order} exceeds monoid enumeration cap {MONOID_ORDER_CAP}")
    found = {"coneNotNormal": None, "clotNotCone": None}
    for A in all_monoids(max_order):
        for M in enumerate_submonoids(A):
            r = classify_submonoid(A, M)
            entry = {"order": A.size, "table": [[A.names[v] for v in row] for row in A.table],
                     "elements": list(A.names), "submonoid": A.show_set(M)}
            if found["coneNotNormal"] is None and r.is_positive_cone and not r.is_normal:
                found["coneNotNormal"] = entry
            if found["clotNotCone"] is None and r.is_clot and not r.is_positive_cone:
                found["clotNotCone"] = entry
        if all(found.values()):
            break
    return {"maxOrder": max_order, **found}


def run_census(monoids: Iterable[FiniteMonoid], jsonl: str | Path | None = None) -> list[Census]:
    """Census every monoid; with ``jsonl``, append one line per monoid and skip keys already stored."""
    done = set()
    path = Path(jsonl) if jsonl else None
    if path and path.exists():
        with path.open() as fh:
            done = {json.loads(line)["key"] for line in fh if line.strip()}
    results = []
    for A in monoids:
        key = monoid_key(A)
        if key in done:
            continue
        c = census_submonoids(A, monoid_id=key)
        results.append(c)
        if path:
            with path.open("a") as fh:
                fh.write(json.dumps(c.as_dict(), sort_keys=True) + "\n")
    return results
