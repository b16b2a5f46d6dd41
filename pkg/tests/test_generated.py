import itertools

import pytest
from hypothesis import given

from normalmono.errors import KindMismatch, SizeCapExceeded
from normalmono.generated import (
    alternating_fixpoint,
    cokernel_round_trip,
    generated,
    generated_congruence,
    generated_preorder,
    generated_reflexive,
    internal_relations,
    minimal_relation_oracle,
    require_kind,
)
from normalmono.monoid import cyclic_group, enumerate_morphisms, enumerate_submonoids, generate_submonoid
from normalmono.relations import (
    RelationKind,
    contains,
    diagonal,
    from_pairs,
    has_kind,
    indiscrete,
    is_compatible,
    preimage_along,
    zero_class,
)
from normalmono.syntactic import syntactic_congruence, syntactic_preorder, syntactic_reflexive

from conftest import monoids, population
from strategies import monoid_and_submonoid, relabeled_small_monoids

KINDS = list(RelationKind)
SYNTACTIC = {
    RelationKind.REFLEXIVE: lambda A, M: syntactic_reflexive(A, M).relation,
    RelationKind.PREORDER: syntactic_preorder,
    RelationKind.EQUIVALENCE: syntactic_congruence,
}


def brute_force_internal(A, kind):
    """Every reflexive compatible relation of ``kind``, by trying all off-diagonal subsets."""
    off = [(a, b) for a in A.elements for b in A.elements if a != b]
    out = []
    for r in range(len(off) + 1):
        for extra in itertools.combinations(off, r):
            R = from_pairs(A, [(a, a) for a in A.elements] + list(extra))
            if has_kind(R, kind):
                out.append(R)
    return out


class TestExtremes:
    @pytest.mark.parametrize("kind", KINDS)
    def test_identity_only(self, example_a, kind):
        assert generated(example_a, {example_a.identity}, kind) == diagonal(example_a)

    def test_whole_monoid(self, example_a):
        assert generated_congruence(example_a, example_a.elements) == indiscrete(example_a)
        # only the identity row is forced to be full
        R = generated_preorder(example_a, example_a.elements)
        assert zero_class(R) == set(example_a.elements)
        assert (example_a.index("2"), example_a.index("1")) not in R

    def test_group_subgroup_congruence(self):
        Z4 = cyclic_group(4)
        E = generated_congruence(Z4, {0, 2})
        assert E.pairs() == [(a, b) for a in range(4) for b in range(4) if (a - b) % 2 == 0]


class TestExampleA:
    def test_reflexive(self, example_a):
        R = generated_reflexive(example_a, example_a.subset("12"))
        assert R.show() == [("1", "1"), ("1", "2"), ("1", "3"), ("2", "2"), ("2", "3"),
                            ("3", "2"), ("3", "3"), ("4", "2"), ("4", "3"), ("4", "4")]
        assert zero_class(R) == example_a.subset("123")

    def test_preorder_equals_reflexive(self, example_a):
        M = example_a.subset("12")
        assert generated_preorder(example_a, M) == generated_reflexive(example_a, M)

    def test_oracle(self, example_a):
        M = example_a.subset("12")
        for kind in KINDS:
            assert minimal_relation_oracle(example_a, M, kind) == generated(example_a, M, kind)


def test_zero_square_congruence_is_indiscrete(zero_square):
    M = zero_square.subset(["1", "0"])
    # 1 ~ 0 forces a = a*1 ~ a*0 = 0
    assert generated_congruence(zero_square, M) == indiscrete(zero_square)
    assert zero_class(generated_preorder(zero_square, M)) == M


class TestLaws:
    @given(monoid_and_submonoid())
    def test_chain(self, pair):
        A, M = pair
        R, P, E = (generated(A, M, k) for k in KINDS)
        assert contains(P, R) and contains(E, P)
        assert M <= zero_class(R)

    @given(monoid_and_submonoid())
    def test_kinds(self, pair):
        A, M = pair
        for kind in KINDS:
            require_kind(generated(A, M, kind), kind)

    @given(monoid_and_submonoid())
    def test_matches_alternating_fixpoint(self, pair):
        A, M = pair
        seed = [(a, a) for a in A.elements] + [(A.identity, u) for u in M]
        assert alternating_fixpoint(A, seed) == generated_preorder(A, M, check=False)

    @given(monoid_and_submonoid())
    def test_sandwich(self, pair):
        A, M = pair
        for kind in KINDS:
            assert zero_class(SYNTACTIC[kind](A, M)) <= M <= zero_class(generated(A, M, kind))

    @given(monoid_and_submonoid())
    def test_monotone_in_m(self, pair):
        A, M = pair
        for kind in KINDS:
            bigger = generated(A, M, kind)
            for N in [frozenset({A.identity}), generate_submonoid(A, list(M)[:1])]:
                assert contains(bigger, generated(A, N, kind))

    def test_galois_order_three(self):
        checked = 0
        for A, M in population(3):
            for kind in KINDS:
                F = generated(A, M, kind)
                for S in internal_relations(A, kind):
                    assert (M <= zero_class(S)) == contains(S, F)
                    checked += 1
        assert checked > 100

    def test_functorial(self):
        # f(F(M)) lies inside F(f(M)) for every morphism f
        for A in monoids(3):
            for B in monoids(3):
                for f in enumerate_morphisms(A, B):
                    for M in enumerate_submonoids(A):
                        image = frozenset(f(u) for u in M)
                        for kind in KINDS:
                            assert contains(preimage_along(f, generated(B, image, kind)), generated(A, M, kind))


class TestOracle:
    def test_pruned_search_matches_brute_force(self):
        for A in monoids(3):
            for kind in KINDS:
                assert sorted(internal_relations(A, kind), key=lambda R: R.rows) == \
                    sorted(brute_force_internal(A, kind), key=lambda R: R.rows)

    @given(relabeled_small_monoids())
    def test_relabeled_count(self, A):
        for kind in KINDS:
            got = internal_relations(A, kind)
            assert len(got) == len(set(got))
            assert all(has_kind(R, kind) for R in got)

    def test_order_four_equivalence(self):
        for A, M in population(4):
            for kind in KINDS:
                assert minimal_relation_oracle(A, M, kind) == generated(A, M, kind)

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            internal_relations(cyclic_group(6), RelationKind.REFLEXIVE)


class TestRoundTrips:
    def test_cokernel_exhaustive(self):
        for A, M in population(4):
            assert cokernel_round_trip(A, M)

    def test_transitive_closure_stays_internal(self):
        for A, M in population(4):
            assert is_compatible(generated_preorder(A, M, check=False))

    def test_require_kind(self, example_a):
        R = generated_reflexive(example_a, example_a.subset("12"))
        require_kind(R, RelationKind.PREORDER)
        with pytest.raises(KindMismatch):
            require_kind(R, RelationKind.EQUIVALENCE)
