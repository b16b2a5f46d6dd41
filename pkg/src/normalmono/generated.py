"""Smallest internal relations whose zero-class contains a submonoid.

``generated_reflexive``, ``generated_preorder`` and ``generated_congruence``
build the three relations constructively (compatible closure of a seed, then
transitive closure).  ``minimal_relation_oracle`` finds the same relations by
intersecting every internal relation of the requested kind that contains the
seed, with no closure machinery involved; it is the independent check.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import InternalInvariantBroken, KindMismatch, SizeCapExceeded
from .monoid import FiniteMonoid, require_submonoid
from .relations import (
    BinaryRelation,
    RelationKind,
    compatible_closure,
    from_pairs,
    has_kind,
    indiscrete,
    intersect,
    is_compatible,
    is_reflexive,
    is_symmetric,
    is_transitive,
    kernel_pair,
    quotient_by_congruence,
    transitive_closure,
)

ORACLE_CAP = 5


def _seed(A: FiniteMonoid, M: frozenset, symmetric: bool) -> list[tuple[int, int]]:
    pairs = [(a, a) for a in A.elements]
    if symmetric:
        pairs += [(u, v) for u in M for v in M]
    else:
        pairs += [(A.identity, u) for u in M]
    return pairs


def alternating_fixpoint(A: FiniteMonoid, seed: Iterable[tuple[int, int]]) -> BinaryRelation:
    """Alternate compatible and transitive closure until neither adds anything."""
    R = compatible_closure(A, seed)
    while True:
        T = transitive_closure(R)
        C = compatible_closure(A, T.pairs())
        if C == R:
            return R
        R = C


def generated_reflexive(A: FiniteMonoid, M: Iterable[int]) -> BinaryRelation:
    M = require_submonoid(A, M)
    return compatible_closure(A, _seed(A, M, symmetric=False))


def generated_preorder(A: FiniteMonoid, M: Iterable[int], check: bool = True) -> BinaryRelation:
    """Transitive closure of ``generated_reflexive``.

    A single transitive closure is expected to stay internal.  If it does not,
    ``InternalInvariantBroken`` is raised rather than silently closing again;
    with ``check`` the result is also compared with the alternating fixpoint.
    """
    M = require_submonoid(A, M)
    R = compatible_closure(A, _seed(A, M, symmetric=False))
    P = transitive_closure(R)
    if not is_compatible(P):
        raise InternalInvariantBroken(
            f"transitive closure of the generated reflexive relation is not internal for M={A.show_set(M)}")
    if check and alternating_fixpoint(A, _seed(A, M, symmetric=False)) != P:
        raise InternalInvariantBroken("generated preorder differs from the alternating fixpoint")
    return P


def generated_congruence(A: FiniteMonoid, M: Iterable[int], check: bool = True) -> BinaryRelation:
    M = require_submonoid(A, M)
    S = compatible_closure(A, _seed(A, M, symmetric=True))
    E = transitive_closure(S)
    if not (is_reflexive(E) and is_symmetric(E) and is_transitive(E) and is_compatible(E)):
        raise InternalInvariantBroken(
            f"transitive closure of the generated symmetric relation is not a congruence for M={A.show_set(M)}")
    if check and alternating_fixpoint(A, _seed(A, M, symmetric=True)) != E:
        raise InternalInvariantBroken("generated congruence differs from the alternating fixpoint")
    return E


def generated(A: FiniteMonoid, M: Iterable[int], kind: RelationKind, check: bool = True) -> BinaryRelation:
    if kind is RelationKind.REFLEXIVE:
        return generated_reflexive(A, M)
    if kind is RelationKind.PREORDER:
        return generated_preorder(A, M, check)
    return generated_congruence(A, M, check)


@lru_cache(maxsize=256)
def _internal_reflexive(A: FiniteMonoid) -> tuple[BinaryRelation, ...]:
    """Every internal reflexive relation on ``A``, by pruned exhaustive search.

    Off-diagonal pairs are decided one at a time.  Each product constraint
    ``p*q = r`` is checked as soon as the last of ``p, q, r`` is decided, so a
    partial matrix is abandoned at the first pair that breaks closure.
    """
    n, t = A.size, A.table
    N = n * n
    prod = [[t[p // n][q // n] * n + t[p % n][q % n] for q in range(N)] for p in range(N)]
    # producers[r]: pairs (p, q) with p*q = r and both decided before r
    producers = [[] for _ in range(N)]
    for p in range(N):
        for q in range(N):
            r = prod[p][q]
            if p < r and q < r:
                producers[r].append((p, q))
    diag = {a * n + a for a in range(n)}
    state = [None] * N
    out = []

    def consistent_include(k):
        for q in range(k + 1):
            if state[q]:
                for r in (prod[k][q], prod[q][k]):
                    if r <= k and not state[r]:
                        return False
        return True

    def consistent_exclude(k):
        return not any(state[p] and state[q] for p, q in producers[k])

    def search(k):
        if k == N:
            out.append(from_pairs(A, (divmod(p, n) for p in range(N) if state[p])))
            return
        choices = (True,) if k in diag else (False, True)
        for v in choices:
            state[k] = v
            if (consistent_include(k) if v else consistent_exclude(k)):
                search(k + 1)
        state[k] = None

    search(0)
    return tuple(out)


def internal_relations(A: FiniteMonoid, kind: RelationKind, cap: int = ORACLE_CAP) -> list[BinaryRelation]:
    """All internal relations of ``kind`` on ``A`` (doubly exponential; ``|A| <= cap``)."""
    if A.size > cap:
        raise SizeCapExceeded(f"order {A.size} exceeds oracle cap {cap}")
    rels = _internal_reflexive(A)
    if kind is RelationKind.REFLEXIVE:
        return list(rels)
    rels = [R for R in rels if is_transitive(R)]
    if kind is RelationKind.EQUIVALENCE:
        rels = [R for R in rels if is_symmetric(R)]
    return rels


def minimal_relation_oracle(A: FiniteMonoid, M: Iterable[int], kind: RelationKind,
                            cap: int = ORACLE_CAP) -> BinaryRelation:
    """Meet of all internal relations of ``kind`` whose zero-class contains ``M``."""
    M = require_submonoid(A, M)
    e = A.identity
    members = [R for R in internal_relations(A, kind, cap) if all((e, u) in R for u in M)]
    meet = indiscrete(A)
    for R in members:
        meet = intersect(meet, R)
    if meet not in members:
        raise InternalInvariantBroken("meet of the relations containing the seed is not one of them")
    return meet


def cokernel_round_trip(A: FiniteMonoid, M: Iterable[int]) -> bool:
    """Quotient by the generated congruence and check its kernel pair gives it back."""
    E = generated_congruence(A, M)
    _, projection = quotient_by_congruence(A, E)
    return kernel_pair(A, projection) == E


def require_kind(R: BinaryRelation, kind: RelationKind) -> None:
    if not has_kind(R, kind):
        raise KindMismatch(f"relation is not an internal relation of kind {kind.value}")

