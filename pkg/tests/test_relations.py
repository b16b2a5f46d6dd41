import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normalmono.errors import BaseMismatch, NotACongruence
from normalmono.generated import internal_relations
from normalmono.instances import EXAMPLE_A_RELATION
from normalmono.monoid import Morphism, cyclic_group, enumerate_morphisms, is_submonoid
from normalmono.relations import (
    RelationKind,
    compatible_closure,
    compatible_closure_by_generators,
    contains,
    diagonal,
    from_pairs,
    has_kind,
    indiscrete,
    intersect,
    is_compatible,
    is_reflexive,
    is_symmetric,
    is_transitive,
    kernel_pair,
    preimage_along,
    quotient_by_congruence,
    reflexive_closure,
    symmetric_closure,
    transitive_closure,
    zero_class,
)

from conftest import monoids
from strategies import finite_monoids, monoid_and_relation, relabeled_small_monoids, relations_on


def named(A, pairs):
    return from_pairs(A, [(A.index(a), A.index(b)) for a, b in pairs])


def reachability_closure(R):
    """Independent transitive closure: depth-first search from every element."""
    A = R.base
    out = []
    for a in A.elements:
        seen, stack = set(), list(R.related(a))
        while stack:
            b = stack.pop()
            if b not in seen:
                seen.add(b)
                stack.extend(R.related(b))
        out.extend((a, b) for b in seen)
    return from_pairs(A, out)


def naive_compatible(R):
    A = R.base
    pairs = set(R.pairs())
    if (A.identity, A.identity) not in pairs:
        return False
    return all((A.table[a][c], A.table[b][d]) in pairs for a, b in pairs for c, d in pairs)


@pytest.fixture
def relation_a(example_a):
    return named(example_a, EXAMPLE_A_RELATION)


class TestBasics:
    def test_trivial(self, trivial):
        assert diagonal(trivial).pairs() == [(0, 0)] == indiscrete(trivial).pairs()

    def test_diagonal_z2(self, z2):
        assert diagonal(z2).pairs() == [(0, 0), (1, 1)]

    def test_indiscrete_example_a(self, example_a):
        assert len(indiscrete(example_a)) == 16

    def test_properties_of_diagonal(self, example_a):
        D = diagonal(example_a)
        assert is_reflexive(D) and is_symmetric(D) and is_transitive(D)
        assert is_compatible(D) and is_compatible(indiscrete(example_a))

    def test_example_a_relation(self, relation_a):
        assert is_compatible(relation_a)
        assert is_reflexive(relation_a)
        assert not is_symmetric(relation_a)
        assert is_transitive(relation_a)

    def test_not_reflexive(self, z2):
        assert not is_reflexive(from_pairs(z2, [(0, 0), (0, 1)]))

    def test_compatibility_witness_replays(self, example_a):
        R = from_pairs(example_a, [(a, a) for a in example_a.elements] + [(0, 1)])
        check = is_compatible(R)
        assert not check
        a, b, c, d = check.witness
        t = example_a.table
        assert (a, b) in R and (c, d) in R and (t[a][c], t[b][d]) not in R


class TestClosures:
    def test_transitive_closure_of_diagonal(self, example_a):
        assert transitive_closure(diagonal(example_a)) == diagonal(example_a)

    def test_transitive_closure_adds_composite(self, z4):
        R = from_pairs(z4, [(0, 1), (1, 2)]) | diagonal(z4)
        assert (0, 2) in transitive_closure(R)

    def test_symmetric_closure_example_a(self, relation_a):
        added = set(symmetric_closure(relation_a).show()) - set(relation_a.show())
        assert added == {("2", "1"), ("3", "1"), ("2", "4"), ("3", "4")}

    @given(monoid_and_relation())
    def test_transitive_closure_matches_reachability(self, pair):
        _, R = pair
        assert transitive_closure(R) == reachability_closure(R)

    @given(monoid_and_relation(), st.data())
    def test_closure_operator_laws(self, pair, data):
        A, R = pair
        S = R | data.draw(relations_on(A))
        for close in (reflexive_closure, symmetric_closure, transitive_closure):
            C = close(R)
            assert contains(C, R)
            assert close(C) == C
            assert contains(close(S), C)
        assert is_reflexive(reflexive_closure(R))
        assert is_symmetric(symmetric_closure(R))
        assert is_transitive(transitive_closure(R))

    def test_compatible_closure_of_diagonal(self, example_a):
        assert compatible_closure(example_a, diagonal(example_a).pairs()) == diagonal(example_a)

    def test_compatible_closure_example_a(self, example_a, relation_a):
        seed = diagonal(example_a).pairs() + [(example_a.index("1"), example_a.index("2"))]
        assert compatible_closure(example_a, seed) == relation_a

    def test_compatible_closure_empty_seed(self, trivial):
        assert compatible_closure(trivial, []).pairs() == [(0, 0)]

    @given(monoid_and_relation())
    def test_compatible_closure_routes_agree(self, pair):
        A, R = pair
        C = compatible_closure(A, R.pairs())
        assert C == compatible_closure_by_generators(A, R.pairs())
        assert naive_compatible(C)
        assert contains(C, R)
        assert compatible_closure(A, C.pairs()) == C


class TestZeroClassAndLattice:
    def test_zero_class(self, example_a, relation_a):
        assert zero_class(diagonal(example_a)) == {example_a.identity}
        assert zero_class(indiscrete(example_a)) == set(example_a.elements)
        assert zero_class(relation_a) == example_a.subset("123")

    @given(finite_monoids(), st.data())
    def test_zero_class_of_internal_reflexive_is_submonoid(self, A, data):
        R = data.draw(relations_on(A))
        C = compatible_closure(A, reflexive_closure(R).pairs())
        assert is_submonoid(A, zero_class(C))

    def test_intersections(self, relation_a, example_a):
        assert intersect(relation_a, indiscrete(example_a)) == relation_a
        assert intersect(relation_a, diagonal(example_a)) == diagonal(example_a)

    @given(relabeled_small_monoids(), st.data())
    def test_intersection_of_compatible_is_compatible(self, A, data):
        R = compatible_closure(A, data.draw(relations_on(A)).pairs())
        S = compatible_closure(A, data.draw(relations_on(A)).pairs())
        assert is_compatible(intersect(R, S))

    def test_base_mismatch(self, z2, z4):
        with pytest.raises(BaseMismatch):
            intersect(diagonal(z2), diagonal(z4))


class TestPreimage:
    def test_identity_morphism(self, example_a, relation_a):
        f = Morphism(example_a, example_a, tuple(example_a.elements))
        assert preimage_along(f, relation_a) == relation_a

    def test_indiscrete(self, z4, z2):
        f = Morphism(z4, z2, (0, 1, 0, 1))
        assert preimage_along(f, indiscrete(z2)) == indiscrete(z4)

    def test_reduction_kernel_pair(self, z4, z2):
        f = Morphism(z4, z2, (0, 1, 0, 1))
        expected = from_pairs(z4, [(a, b) for a in range(4) for b in range(4) if (a - b) % 2 == 0])
        assert preimage_along(f, diagonal(z2)) == expected

    def test_preserves_properties(self):
        population = monoids(3)
        checked = 0
        for S in population:
            for T in population:
                for f in enumerate_morphisms(S, T):
                    for kind in RelationKind:
                        for R in internal_relations(T, kind):
                            P = preimage_along(f, R)
                            assert has_kind(P, kind)
                            checked += 1
                for f in enumerate_morphisms(S, T):
                    R = symmetric_closure(diagonal(T))
                    assert is_symmetric(preimage_along(f, R))
        assert checked > 500


class TestQuotient:
    def test_diagonal(self, example_a):
        Q, proj = quotient_by_congruence(example_a, diagonal(example_a))
        assert Q.table == example_a.table and proj == (0, 1, 2, 3)

    def test_indiscrete(self, example_a):
        Q, proj = quotient_by_congruence(example_a, indiscrete(example_a))
        assert Q.size == 1 and set(proj) == {0}

    def test_not_a_congruence(self, example_a, relation_a):
        with pytest.raises(NotACongruence):
            quotient_by_congruence(example_a, relation_a)

    def test_mod_two(self, z4):
        E = from_pairs(z4, [(a, b) for a in range(4) for b in range(4) if (a - b) % 2 == 0])
        Q, proj = quotient_by_congruence(z4, E)
        assert Q.table == cyclic_group(2).table
        assert Morphism(z4, Q, proj)

    @settings(max_examples=50)
    @given(relabeled_small_monoids(), st.data())
    def test_kernel_pair_recovers_congruence(self, A, data):
        E = data.draw(st.sampled_from(internal_relations(A, RelationKind.EQUIVALENCE)))
        Q, proj = quotient_by_congruence(A, E)
        Morphism(A, Q, proj)
        assert kernel_pair(A, proj) == E
