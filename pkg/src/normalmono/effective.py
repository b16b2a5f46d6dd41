"""Bounded witness search on computable, possibly infinite monoids.

An ``EffectiveMonoid`` can multiply, compare and list its elements up to a
size bound.  Scans over such a list either find a counterexample, which
replays without reference to the bound, or report that none exists up to it.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Sequence

CONDITIONS = ("C", "P", "R", "Star", "Dedekind")

DEFAULT_WORD_LENGTH = 6
DEFAULT_INTEGER_BOUND = 12
DEFAULT_BICYCLIC_BOUND = 8
DEFAULT_DOMAIN_CAP = 100


@dataclass(frozen=True)
class EffectiveMonoid:
    name: str
    identity: Any
    multiply: Callable[[Any, Any], Any]
    enumerate: Callable[[int], list]
    member: Callable[[Any], bool] = lambda x: True
    equal: Callable[[Any, Any], bool] = operator.eq
    show: Callable[[Any], str] = str
    # xy = 1 only for x = y = 1, so the R scan is exact
    trivial_units: bool = False
    # identities certified on a finite tabulated domain only
    bounded_identities: bool = False
    generators: dict = field(default_factory=dict, compare=False)

    def with_member(self, member: Callable[[Any], bool]) -> "EffectiveMonoid":
        return replace(self, member=member)

    def mul(self, *factors):
        result = self.identity
        for f in factors:
            result = self.multiply(result, f)
        return result

    def is_identity(self, x) -> bool:
        return self.equal(x, self.identity)


@dataclass(frozen=True)
class Verdict:
    condition: str
    bound: int
    witness: tuple | None = None
    holds_for_all: bool = False
    bounded_identities: bool = False

    @property
    def refuted(self) -> bool:
        return self.witness is not None

    def describe(self, E: EffectiveMonoid | None = None) -> str:
        if not self.refuted:
            return f"NoWitnessUpTo({self.bound})" + (" [holds-for-all]" if self.holds_for_all else "")
        shown = [E.show(w) for w in self.witness] if E else list(self.witness)
        return "RefutedWith(" + ", ".join(map(str, shown)) + ")"

    def as_dict(self, E: EffectiveMonoid | None = None) -> dict:
        return {
            "condition": self.condition,
            "bound": self.bound,
            "refuted": self.refuted,
            "witness": None if self.witness is None else [E.show(w) if E else w for w in self.witness],
            "holdsForAll": self.holds_for_all,
            "boundedIdentities": self.bounded_identities,
        }


def violates(E: EffectiveMonoid, which: str, witness: Sequence) -> bool:
    """Replay a witness against the condition's definition."""
    mul, inM, one = E.mul, E.member, E.is_identity
    if which == "Dedekind":
        x, y = witness
        return one(mul(x, y)) and not one(mul(y, x))
    if which == "Star":
        x, y, s, t = witness
        return one(mul(x, y)) and inM(mul(x, s)) and inM(mul(t, y)) and not inM(mul(t, s))
    x, y, u = witness
    if not inM(u):
        return False
    xy, xuy = mul(x, y), mul(x, u, y)
    if which == "C":
        return inM(xy) != inM(xuy)
    if which == "P":
        return inM(xy) and not inM(xuy)
    if which == "R":
        return one(xy) and not inM(xuy)
    raise ValueError(f"unknown condition {which!r}")


def bounded_condition(E: EffectiveMonoid, which: str, bound: int) -> Verdict:
    """Scan ``x, y`` over ``E.enumerate(bound)`` and ``u`` over the members among them."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if which not in CONDITIONS:
        raise ValueError(f"unknown condition {which!r}")
    elems = E.enumerate(bound)
    members = [u for u in elems if E.member(u)]
    mul, inM, one = E.multiply, E.member, E.is_identity
    flags = dict(bounded_identities=E.bounded_identities and which in ("R", "Star", "Dedekind"))

    if which == "Dedekind":
        for x in elems:
            for y in elems:
                if one(mul(x, y)) and not one(mul(y, x)):
                    return Verdict(which, bound, (x, y), **flags)
        return Verdict(which, bound, holds_for_all=E.trivial_units, **flags)

    if which == "Star":
        for x in elems:
            for y in elems:
                if not one(mul(x, y)):
                    continue
                for s in elems:
                    if not inM(mul(x, s)):
                        continue
                    for t in elems:
                        if inM(mul(t, y)) and not inM(mul(t, s)):
                            return Verdict(which, bound, (x, y, s, t), **flags)
        return Verdict(which, bound, holds_for_all=E.trivial_units, **flags)

    for x in elems:
        for y in elems:
            xy = mul(x, y)
            if which == "R" and not one(xy):
                continue
            for u in members:
                if violates(E, which, (x, y, u)):
                    return Verdict(which, bound, (x, y, u), **flags)
    return Verdict(which, bound, holds_for_all=(which == "R" and E.trivial_units), **flags)


def check_associativity(E: EffectiveMonoid, bound: int):
    """First triple breaking associativity or an identity law among enumerated elements, else None."""
    elems = E.enumerate(bound)
    for x in elems:
        if not (E.equal(E.multiply(E.identity, x), x) and E.equal(E.multiply(x, E.identity), x)):
            return (x,)
    for x, y, z in itertools.product(elems, repeat=3):
        if not E.equal(E.multiply(E.multiply(x, y), z), E.multiply(x, E.multiply(y, z))):
            return (x, y, z)
    return None


def bounded_clot_sequences(E: EffectiveMonoid, max_terms: int, bound: int) -> Verdict:
    """Sequence form of the clot condition.

    For ``n <= max_terms``: whenever ``a_1 ... a_n = 1`` the interleaved
    product ``a_1 u_1 ... a_n u_n`` must lie in ``M``.  Witness is
    ``(a_1, u_1, ..., a_n, u_n)``.
    """
    elems = E.enumerate(bound)
    members = [u for u in elems if E.member(u)]
    for n in range(1, max_terms + 1):
        for a in itertools.product(elems, repeat=n):
            if not E.is_identity(E.mul(*a)):
                continue
            for u in itertools.product(members, repeat=n):
                word = [z for pair in zip(a, u) for z in pair]
                if not E.member(E.mul(*word)):
                    return Verdict("ClotSequence", bound, tuple(word))
    return Verdict("ClotSequence", bound, holds_for_all=E.trivial_units)


def cone_chain_violation(E: EffectiveMonoid, a_rows: Sequence[Sequence], u_rows: Sequence[Sequence]) -> bool:
    """Replay a double-indexed sequence against the sequence form of the cone condition.

    True iff the chain premises hold (first row multiplies to 1, each row with
    its ``u`` terms interleaved equals the next plain row) while the last
    interleaved row falls outside ``M``.
    """
    def plain(i):
        return E.mul(*a_rows[i])

    def woven(i):
        return E.mul(*[z for pair in zip(a_rows[i], u_rows[i]) for z in pair])

    if not all(E.member(u) for row in u_rows for u in row):
        return False
    if not E.is_identity(plain(0)):
        return False
    for i in range(len(a_rows) - 1):
        if not E.equal(woven(i), plain(i + 1)):
            return False
    return not E.member(woven(len(a_rows) - 1))


def bounded_generated_zero_class(E: EffectiveMonoid, max_terms: int, bound: int) -> list:
    """Elements ``y`` with ``(1, y)`` a product of at most ``max_terms`` generators ``(a, a u)``.

    These are members of the zero-class of the smallest internal reflexive
    relation containing ``{1} x M``; the search is bounded so the list is a
    lower approximation.
    """
    elems = E.enumerate(bound)
    members = [u for u in elems if E.member(u)]
    found = []
    for n in range(1, max_terms + 1):
        for a in itertools.product(elems, repeat=n):
            if not E.is_identity(E.mul(*a)):
                continue
            for u in itertools.product(members, repeat=n):
                y = E.mul(*[z for pair in zip(a, u) for z in pair])
                if not any(E.equal(y, z) for z in found):
                    found.append(y)
    return found


def bounded_syntactic_zero_class(E: EffectiveMonoid, candidates: Sequence, bound: int) -> list:
    """Candidates ``a`` such that every enumerated context with ``xy = 1`` sends ``a`` into ``M``."""
    elems = E.enumerate(bound)
    contexts = [(x, y) for x in elems for y in elems if E.is_identity(E.multiply(x, y))]
    return [a for a in candidates if all(E.member(E.mul(x, a, y)) for x, y in contexts)]


# --- backends ---------------------------------------------------------------

def free_monoid(alphabet: str = "ab", member: Callable[[str], bool] = lambda w: True) -> EffectiveMonoid:
    letters = sorted(alphabet)

    def words(bound):
        out = []
        for n in range(bound + 1):
            out.extend("".join(p) for p in itertools.product(letters, repeat=n))
        return out

    return EffectiveMonoid(
        name=f"F({','.join(letters)})",
        identity="",
        multiply=operator.add,
        enumerate=words,
        member=member,
        show=lambda w: w or "1",
        trivial_units=True,
    )


def powers_of_word(word: str) -> Callable[[str], bool]:
    """Membership in ``{word^n : n >= 0}``."""
    def member(w: str) -> bool:
        q, r = divmod(len(w), len(word))
        return r == 0 and w == word * q
    return member


def bicyclic(member: Callable[[tuple], bool] = lambda x: True) -> EffectiveMonoid:
    """Generated by ``b, c`` with ``bc = 1``; ``(i, j)`` is the normal form ``c^i b^j``."""

    def multiply(x, y):
        i, j = x
        k, l = y
        if j >= k:
            return (i, j - k + l)
        return (i + k - j, l)

    def elements(bound):
        return [(i, s - i) for s in range(bound + 1) for i in range(s + 1)]

    def show(x):
        i, j = x
        if i == j == 0:
            return "1"
        part = lambda g, e: "" if e == 0 else g if e == 1 else f"{g}^{e}"
        return part("c", i) + part("b", j)

    return EffectiveMonoid(
        name="bicyclic",
        identity=(0, 0),
        multiply=multiply,
        enumerate=elements,
        member=member,
        show=show,
        generators={"b": (0, 1), "c": (1, 0)},
    )


def integers_add(member: Callable[[int], bool] = lambda z: True, nonnegative: bool = False) -> EffectiveMonoid:
    """``(Z, +)``, or ``(N, +)`` with ``nonnegative``; size is ``|z|``."""

    def elements(bound):
        if nonnegative:
            return list(range(bound + 1))
        out = [0]
        for k in range(1, bound + 1):
            out += [-k, k]
        return out

    return EffectiveMonoid(
        name="N" if nonnegative else "Z",
        identity=0,
        multiply=operator.add,
        enumerate=elements,
        member=member,
        trivial_units=nonnegative,
    )


@dataclass(frozen=True)
class Endo:
    """A function on the naturals, compared by its values on a finite domain."""

    values: tuple[int, ...]
    name: str = field(default="?", compare=False)
    fn: Callable[[int], int] = field(default=None, compare=False, repr=False)

    def __call__(self, n: int) -> int:
        return self.fn(n)


def endofunctions(start: int, cap: int, generators: dict[str, Callable[[int], int]],
                  member: Callable[[Endo], bool] = lambda f: True) -> EffectiveMonoid:
    """Functions generated under composition by ``generators``; ``f*g`` applies ``g`` first.

    Composition is exact (the callables are composed), while equality compares
    tabulated values on ``start..cap``.  Identities such as ``xy = 1`` are
    therefore certified on that domain only.
    """
    domain = range(start, cap + 1)

    def make(name, fn):
        return Endo(tuple(fn(n) for n in domain), name, fn)

    ident = make("1", lambda n: n)

    def multiply(f, g):
        if f == ident:
            return g
        if g == ident:
            return f
        return make(f"{f.name}.{g.name}", lambda n, f=f, g=g: f.fn(g.fn(n)))

    gens = {name: make(name, fn) for name, fn in generators.items()}

    def elements(bound):
        out = [ident]
        seen = {ident}
        layer = [ident]
        for _ in range(bound):
            nxt = []
            for f in layer:
                for g in gens.values():
                    h = multiply(f, g)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            out += nxt
            layer = nxt
        return out

    return EffectiveMonoid(
        name=f"Set(N,N)[{start}..{cap}]",
        identity=ident,
        multiply=multiply,
        enumerate=elements,
        member=member,
        show=lambda f: f.name,
        bounded_identities=True,
        generators=gens,
    )
