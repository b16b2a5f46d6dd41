"""Worked examples A-K, each rerun and compared against its expected verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import instances
from .classify import classify_submonoid
from .effective import (
    DEFAULT_BICYCLIC_BOUND,
    DEFAULT_DOMAIN_CAP,
    DEFAULT_INTEGER_BOUND,
    DEFAULT_WORD_LENGTH,
    Endo,
    bicyclic,
    bounded_clot_sequences,
    bounded_condition,
    bounded_generated_zero_class,
    bounded_syntactic_zero_class,
    cone_chain_violation,
    endofunctions,
    free_monoid,
    integers_add,
    powers_of_word,
    violates,
)
from .errors import CorpusMismatch
from .generated import generated_reflexive
from .monoid import enumerate_submonoids, from_operation, is_dedekind_finite
from .relations import compatible_closure, from_pairs, quotient_by_congruence, zero_class
from .syntactic import syntactic_congruence, syntactic_reflexive


@dataclass
class ExampleResult:
    key: str
    title: str
    passed: bool
    checks: dict[str, bool] = field(default_factory=dict)
    detail: dict = field(default_factory=dict)

    def as_dict(self):
        return {"example": self.key, "title": self.title, "passed": self.passed,
                "checks": dict(self.checks), "detail": self.detail}


def _result(key, title, checks, detail):
    return ExampleResult(key, title, all(checks.values()), checks, detail)


def example_a() -> ExampleResult:
    A = instances.example_a()
    M = A.subset(["1", "2"])
    R = generated_reflexive(A, M)
    expected = from_pairs(A, [(A.index(a), A.index(b)) for a, b in instances.EXAMPLE_A_RELATION])
    seeded = compatible_closure(A, [(a, a) for a in A.elements] + [(A.index("1"), A.index("2"))])
    not_clot = classify_submonoid(A, M)
    clot = classify_submonoid(A, A.subset(["1", "2", "3"]))
    checks = {
        "relation is the 10 listed pairs": R == expected,
        "smallest relation containing (1,2) agrees": seeded == expected,
        "zero-class is {1,2,3}": zero_class(R) == A.subset(["1", "2", "3"]),
        "{1,2} is not a clot": not not_clot.is_clot,
        "{1,2,3} is a clot": clot.is_clot,
    }
    return _result("A", "submonoid that is not a clot", checks,
                   {"relation": [list(p) for p in R.show()], "zeroClass": A.show_set(zero_class(R))})


def example_b(bound: int = DEFAULT_WORD_LENGTH) -> ExampleResult:
    F = free_monoid("ab", powers_of_word("ab"))
    r = bounded_condition(F, "R", bound)
    p = bounded_condition(F, "P", bound)
    seq = bounded_clot_sequences(F, 2, min(bound, 3))
    # generator pairs (a,a), (1,ab), (b,b) multiply to (ab, aabb)
    pair = (F.mul("a", "", "b"), F.mul("a", "ab", "b"))
    chain = cone_chain_violation(F, [["", ""], ["a", "b"]], [["ab", ""], ["ab", ""]])
    checks = {
        "R: no witness, holds for all": not r.refuted and r.holds_for_all,
        "P: refuted": p.refuted,
        "P witness replays": p.refuted and violates(F, "P", p.witness),
        "aabb is outside M": not F.member("aabb"),
        "(ab, aabb) lies in R(m)": pair == ("ab", "aabb"),
        "clot sequence condition: no witness": not seq.refuted and seq.holds_for_all,
        "cone sequence chain violated": chain,
    }
    return _result("B", "clot that is not a positive cone", checks,
                   {"R": r.as_dict(F), "P": p.as_dict(F)})


def example_c(bound: int = DEFAULT_INTEGER_BOUND) -> ExampleResult:
    Z = integers_add(lambda z: z >= 0)
    p = bounded_condition(Z, "P", bound)
    c = bounded_condition(Z, "C", bound)
    checks = {
        "P: no witness": not p.refuted,
        "C: refuted": c.refuted,
        "C witness replays": c.refuted and violates(Z, "C", c.witness),
        "(-1, 0, 1) is also a witness": violates(Z, "C", (-1, 0, 1)),
    }
    return _result("C", "positive cone that is not normal", checks,
                   {"P": p.as_dict(Z), "C": c.as_dict(Z)})


def example_d(bound: int = 2 * DEFAULT_INTEGER_BOUND) -> ExampleResult:
    N = integers_add(lambda z: z % 2 == 0, nonnegative=True)
    c = bounded_condition(N, "C", bound)
    checks = {"C: no witness": not c.refuted}
    return _result("D", "normal submonoid that is not a subgroup", checks, {"C": c.as_dict(N)})


def example_e() -> ExampleResult:
    A = instances.example_a()
    compat = all(syntactic_reflexive(A, M).compatible for M in enumerate_submonoids(A))
    checks = {"finite monoid is Dedekind finite": bool(is_dedekind_finite(A)),
              "R_M internal for every submonoid": compat}
    return _result("E", "R_M is internal on finite monoids", checks, {})


def example_f(cap: int = DEFAULT_DOMAIN_CAP) -> ExampleResult:
    E, _ = eg10_monoid(cap)
    f, g = E.generators["f"], E.generators["g"]
    d = bounded_condition(E, "Dedekind", 1)
    checks = {
        "surjective f has right inverse g": E.is_identity(E.multiply(f, g)),
        "g is not a left inverse": not E.is_identity(E.multiply(g, f)),
        "Dedekind: refuted": d.refuted and violates(E, "Dedekind", d.witness),
    }
    return _result("F", "endofunctions of an infinite set are not Dedekind finite", checks,
                   {"Dedekind": d.as_dict(E)})


def example_g(bound: int = DEFAULT_BICYCLIC_BOUND) -> ExampleResult:
    B = bicyclic()
    d = bounded_condition(B, "Dedekind", bound)
    b, c = B.generators["b"], B.generators["c"]
    checks = {
        "Dedekind: refuted with (b, c)": d.witness == (b, c),
        "bc = 1": B.is_identity(B.multiply(b, c)),
        "cb != 1": not B.is_identity(B.multiply(c, b)),
    }
    return _result("G", "bicyclic monoid is not Dedekind finite", checks, {"Dedekind": d.as_dict(B)})


def example_h() -> ExampleResult:
    S3 = instances.s3()
    M = S3.subset(["e", "(12)"])
    cong = syntactic_congruence(S3, M)
    quotient, _ = quotient_by_congruence(S3, cong)
    t = S3.mul(S3.index("(13)"), S3.index("(12)"), S3.index("(13)"))
    S2 = S3.subset(["e", "(12)"])
    s2 = from_operation([0, 1], lambda x, y: (x + y) % 2, 0, ["e", "(12)"])
    checks = {
        "zero-class of the syntactic congruence is {e}": zero_class(cong) == S3.subset(["e"]),
        "(13)(12)(13) = (23)": S3.names[t] == "(23)",
        "(23) is outside M": t not in S2,
        "(13)e(13) lies in M": S3.mul(S3.index("(13)"), S3.index("(13)")) in S2,
        "syntactic quotient has order 6": quotient.size == 6,
        "S2 in S2 has zero-class S2": zero_class(syntactic_congruence(s2, {0, 1})) == {0, 1},
    }
    return _result("H", "syntactic congruence is not functorial", checks,
                   {"zeroClass": S3.show_set(zero_class(cong))})


def eg9_monoid(cap: int = DEFAULT_DOMAIN_CAP):
    gens = {
        "x": lambda n: 0 if n == 0 else n - 1,
        "y": lambda n: n + 1,
        "s": lambda n: 0 if n == 0 else n + 1,
        "t": lambda n: 5 if n == 0 else n - 1,
    }
    E = endofunctions(0, cap, gens)
    return E.with_member(E.is_identity)


def example_i(cap: int = DEFAULT_DOMAIN_CAP) -> ExampleResult:
    E = eg9_monoid(cap)
    x, y, s, t = (E.generators[k] for k in "xyst")
    star = bounded_condition(E, "Star", 2)
    checks = {
        "xy = 1": E.is_identity(E.multiply(x, y)),
        "xs = 1": E.is_identity(E.multiply(x, s)),
        "ty = 1": E.is_identity(E.multiply(t, y)),
        "ts(0) = 5": E.multiply(t, s)(0) == 5,
        "(x, y, s, t) breaks condition (*)": violates(E, "Star", (x, y, s, t)),
        "bounded (*) scan refutes": star.refuted and violates(E, "Star", star.witness),
    }
    return _result("I", "R_M internal without condition (*)", checks, {"Star": star.as_dict(E)})


def eg10_monoid(cap: int = DEFAULT_DOMAIN_CAP):
    gens = {
        "f": lambda n: n - 1 if n > 1 else 1,
        "g": lambda n: n + 1,
        "u": lambda n: 2 * n,
    }
    E = endofunctions(1, cap, gens)
    u = E.generators["u"]

    def power(k):
        return E.mul(*([u] * k))

    def in_m(h: Endo) -> bool:
        v = h.values[0]
        if v < 1 or v & (v - 1):
            return False
        return h == power(v.bit_length() - 1)

    return E.with_member(in_m), power


def example_j(cap: int = DEFAULT_DOMAIN_CAP) -> ExampleResult:
    E, power = eg10_monoid(cap)
    f, g = E.generators["f"], E.generators["g"]
    samples = [1, 2, 3, 10, 57, cap]
    h = {n: E.mul(f, power(n), g) for n in range(1, 6)}
    powers = [power(k) for k in range(11)]
    formula = all(h[n](x) == 2 ** n * (x + 1) - 1 for n in h for x in samples)
    differs = all(all(any(hn(x) != pk(x) for x in samples) for pk in powers) for hn in h.values())
    members = [power(k) for k in range(6)]
    zc = bounded_syntactic_zero_class(E, members, 2)
    checks = {
        "fg = 1": E.is_identity(E.multiply(f, g)),
        "f u^n g (x) = 2^n (x+1) - 1": formula,
        "f u^n g differs from every u^k, k <= 10": differs,
        "f u^n g is outside M": all(not E.member(hn) for hn in h.values()),
        "bounded zero-class of R_M is {1}": zc == [E.identity],
    }
    return _result("J", "R_M has a trivial zero-class on bounded contexts", checks,
                   {"zeroClassRM": [E.show(a) for a in zc]})


def example_k(cap: int = DEFAULT_DOMAIN_CAP) -> ExampleResult:
    E, power = eg10_monoid(cap)
    f, g, u = (E.generators[k] for k in "fgu")
    members = [power(k) for k in range(4)]
    inner = bounded_syntactic_zero_class(E, members, 2)
    outer = bounded_generated_zero_class(E, 2, 2)
    h = E.mul(f, u, g)
    # (f, f)(1, u)(g, g) = (fg, fug) = (1, h)
    pair_first, pair_second = E.mul(f, g), E.mul(f, u, g)
    checks = {
        "[1]_{R_M} misses u": u not in inner and E.member(u),
        "[1]_{R_M} is inside M": all(E.member(a) for a in inner),
        "(1, fug) is a product of generator pairs": E.is_identity(pair_first) and pair_second == h,
        "fug found in the bounded zero-class of R(m)": h in outer,
        "fug is outside M": not E.member(h),
        "M members found in the zero-class of R(m)": all(m in outer for m in members[:2]),
    }
    return _result("K", "both sandwich inclusions strict", checks,
                   {"inner": [E.show(a) for a in inner], "outerSample": sorted(E.show(a) for a in outer)[:10]})


EXAMPLES: dict[str, Callable[..., ExampleResult]] = {
    "A": example_a, "B": example_b, "C": example_c, "D": example_d, "E": example_e,
    "F": example_f, "G": example_g, "H": example_h, "I": example_i, "J": example_j, "K": example_k,
}


def example_corpus(bound: int | None = None, strict: bool = False) -> list[ExampleResult]:
    """Run every example; ``bound`` overrides the search bound of the bounded scans."""
    results = []
    for key, fn in EXAMPLES.items():
        if bound is not None and key in ("B", "C", "D", "G"):
            results.append(fn(bound))
        else:
            results.append(fn())
    if strict:
        failing = [r.key for r in results if not r.passed]
        if failing:
            raise CorpusMismatch(failing)
    return results
