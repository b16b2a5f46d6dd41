"""Clots, positive cones and normal submonoids of finite and effective monoids."""

from .classify import ClassificationReport, classify_submonoid, is_fix_epsilon, is_fix_eta, normal_wrt_definition
from .errors import (
    DomainError,
    InternalInvariantBroken,
    InvalidMonoid,
    InvariantViolation,
    NotASubmonoid,
    RoutesDisagree,
    SizeCapExceeded,
)
from .generated import (
    cokernel_round_trip,
    generated,
    generated_congruence,
    generated_preorder,
    generated_reflexive,
    minimal_relation_oracle,
)
from .monoid import FiniteMonoid, enumerate_submonoids, generate_submonoid, validate_monoid
from .relations import BinaryRelation, RelationKind, zero_class

__version__ = "0.1.0"

__all__ = [
    "BinaryRelation",
    "ClassificationReport",
    "DomainError",
    "FiniteMonoid",
    "InternalInvariantBroken",
    "InvalidMonoid",
    "InvariantViolation",
    "NotASubmonoid",
    "RelationKind",
    "RoutesDisagree",
    "SizeCapExceeded",
    "classify_submonoid",
    "cokernel_round_trip",
    "enumerate_submonoids",
    "generate_submonoid",
    "generated",
    "generated_congruence",
    "generated_preorder",
    "generated_reflexive",
    "is_fix_epsilon",
    "is_fix_eta",
    "minimal_relation_oracle",
    "normal_wrt_definition",
    "validate_monoid",
    "zero_class",
]
