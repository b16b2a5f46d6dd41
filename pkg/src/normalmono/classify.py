"""Clot / positive cone / normal submonoid classification.

Each notion is decided along three independent routes: the elementwise
condition scan, the zero-class of the syntactic relation and the zero-class of
the generated relation.  The routes are provably equivalent, so any
disagreement is raised as ``RoutesDisagree`` instead of being reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import BaseMismatch, InternalInvariantBroken, RoutesDisagree
from .generated import generated, require_kind
from .monoid import FiniteMonoid, check_condition_star, is_dedekind_finite, require_submonoid
from .relations import BinaryRelation, RelationKind, zero_class
from .syntactic import (
    condition_c,
    condition_f,
    condition_p,
    condition_r,
    is_right_normal,
    syntactic_congruence,
    syntactic_preorder,
    syntactic_reflexive,
)


@dataclass(frozen=True)
class Witness:
    kind: str
    elements: tuple[str, ...]

    def as_dict(self):
        return {"kind": self.kind, "elements": list(self.elements)}


@dataclass
class ClassificationReport:
    monoid_id: str
    monoid: FiniteMonoid
    submonoid: frozenset[int]
    is_clot: bool
    is_positive_cone: bool
    is_normal: bool
    is_kernel_f: bool
    is_right_normal: bool
    is_dedekind_finite_ambient: bool
    routes: dict[str, dict[str, bool]]
    witnesses: list[Witness] = field(default_factory=list)
    relations: dict[str, BinaryRelation] = field(default_factory=dict)

    def as_dict(self, include_relations: bool = True) -> dict:
        A = self.monoid
        out = {
            "monoid": self.monoid_id,
            "submonoid": A.show_set(self.submonoid),
            "isClot": self.is_clot,
            "isPositiveCone": self.is_positive_cone,
            "isNormal": self.is_normal,
            "isKernelF": self.is_kernel_f,
            "isRightNormal": self.is_right_normal,
            "isDedekindFiniteAmbient": self.is_dedekind_finite_ambient,
            "routes": {flag: dict(sorted(r.items())) for flag, r in sorted(self.routes.items())},
            "witnesses": [w.as_dict() for w in self.witnesses],
        }
        if include_relations:
            out["relations"] = {
                name: {"pairs": [list(p) for p in R.show()], "zeroClass": A.show_set(zero_class(R))}
                for name, R in sorted(self.relations.items())
            }
        return out


def _agree(flag: str, routes: dict[str, bool], A: FiniteMonoid, M) -> bool:
    values = set(routes.values())
    if len(values) != 1:
        raise RoutesDisagree(
            f"routes for {flag} disagree on M={A.show_set(M)}: {routes}",
            evidence={"flag": flag, "routes": dict(routes), "submonoid": A.show_set(M), "table": A.table},
        )
    return values.pop()


def classify_submonoid(A: FiniteMonoid, M: Iterable[int], monoid_id: str = "A") -> ClassificationReport:
    M = require_submonoid(A, M)
    names = A.names
    witnesses = []

    def note(kind, check):
        if not check:
            witnesses.append(Witness(kind, tuple(names[i] for i in check.witness)))
        return check.holds

    cong = syntactic_congruence(A, M)
    preord = syntactic_preorder(A, M)
    refl = syntactic_reflexive(A, M)
    gen = {kind: generated(A, M, kind) for kind in RelationKind}

    normal_routes = {
        "condition": note("C", condition_c(A, M)),
        "syntactic": zero_class(cong) == M,
        "generated": zero_class(gen[RelationKind.EQUIVALENCE]) == M,
    }
    cone_routes = {
        "condition": note("P", condition_p(A, M)),
        "syntactic": zero_class(preord) == M,
        "generated": zero_class(gen[RelationKind.PREORDER]) == M,
    }
    clot_routes = {
        "condition": note("R", condition_r(A, M)),
        "generated": zero_class(gen[RelationKind.REFLEXIVE]) == M,
    }
    # the syntactic route for clots is only valid when R_M is internal
    if refl.compatible:
        clot_routes["syntactic"] = zero_class(refl.relation) == M

    is_normal = _agree("isNormal", normal_routes, A, M)
    is_cone = _agree("isPositiveCone", cone_routes, A, M)
    is_clot = _agree("isClot", clot_routes, A, M)
    kernel_f = note("F", condition_f(A, M))
    if kernel_f != is_normal:
        raise RoutesDisagree(
            f"condition F and normality disagree on M={A.show_set(M)}",
            evidence={"isKernelF": kernel_f, "isNormal": is_normal, "table": A.table},
        )
    if (is_normal and not is_cone) or (is_cone and not is_clot):
        raise InternalInvariantBroken(f"implication chain normal => cone => clot fails on M={A.show_set(M)}")
    note("Star", check_condition_star(A, M))
    dedekind = note("Dedekind", is_dedekind_finite(A))
    right_normal = note("RightNormal", is_right_normal(A, M))

    return ClassificationReport(
        monoid_id=monoid_id,
        monoid=A,
        submonoid=M,
        is_clot=is_clot,
        is_positive_cone=is_cone,
        is_normal=is_normal,
        is_kernel_f=kernel_f,
        is_right_normal=right_normal,
        is_dedekind_finite_ambient=dedekind,
        routes={"isClot": clot_routes, "isPositiveCone": cone_routes, "isNormal": normal_routes},
        witnesses=witnesses,
        relations={
            "syntacticCongruence": cong,
            "syntacticPreorder": preord,
            "syntacticReflexive": refl.relation,
            "generatedReflexive": gen[RelationKind.REFLEXIVE],
            "generatedPreorder": gen[RelationKind.PREORDER],
            "generatedCongruence": gen[RelationKind.EQUIVALENCE],
        },
    )


def is_fix_eta(A: FiniteMonoid, M: Iterable[int], kind: RelationKind) -> bool:
    """The unit at ``M`` is an isomorphism: ``M`` is the zero-class of its generated relation."""
    M = require_submonoid(A, M)
    return zero_class(generated(A, M, kind)) == M


def is_fix_epsilon(R: BinaryRelation, kind: RelationKind) -> bool:
    """``R`` is the smallest internal relation of ``kind`` with its zero-class."""
    require_kind(R, kind)
    return generated(R.base, zero_class(R), kind) == R


def normal_wrt_definition(A: FiniteMonoid, M: Iterable[int], R: BinaryRelation) -> bool:
    if R.base != A:
        raise BaseMismatch("relation lives on a different monoid")
    # pulling R back along a -> (1, a) gives exactly its zero-class
    return zero_class(R) == frozenset(M)
