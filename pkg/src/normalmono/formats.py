"""Monoid and relation file formats.

JSON monoid::

    {"elements": ["1", "2"], "identity": "1", "table": [["1", "2"], ["2", "1"]]}

Plain text monoid: element names on the first line, the identity on the
second, then one row of names per element.  Relations serialize as sorted
``"a b"`` lines or as a JSON list of name pairs.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidMonoid
from .monoid import Check, FiniteMonoid, Violation, validate_monoid
from .relations import BinaryRelation, from_pairs


def monoid_from_names(elements, identity, table) -> FiniteMonoid:
    elements = [str(x) for x in elements]
    if len(set(elements)) != len(elements):
        raise InvalidMonoid([Violation("DuplicateName", ())])
    index = {name: i for i, name in enumerate(elements)}
    if not isinstance(table, list) or any(not isinstance(row, list) for row in table):
        raise InvalidMonoid([Violation("RaggedTable", ())])
    # unknown names become -1 and are reported as bad entries / bad identity
    rows = [[index.get(str(v), -1) for v in row] for row in table]
    return validate_monoid(rows, index.get(str(identity), -1), elements)


def parse_monoid_json(obj) -> FiniteMonoid:
    try:
        return monoid_from_names(obj["elements"], obj["identity"], obj["table"])
    except (KeyError, TypeError):
        raise InvalidMonoid([Violation("MalformedFile", ())]) from None


def parse_monoid_text(text: str) -> FiniteMonoid:
    lines = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if len(lines) < 2 or len(lines[1]) != 1:
        raise InvalidMonoid([Violation("MalformedFile", ())])
    return monoid_from_names(lines[0], lines[1][0], [list(row) for row in lines[2:]])


def load_monoid(path) -> FiniteMonoid:
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError:
            raise InvalidMonoid([Violation("MalformedFile", ())]) from None
        return parse_monoid_json(obj)
    return parse_monoid_text(text)


def monoid_to_json(A: FiniteMonoid) -> dict:
    return {
        "elements": list(A.names),
        "identity": A.names[A.identity],
        "table": [[A.names[v] for v in row] for row in A.table],
    }


def monoid_to_text(A: FiniteMonoid) -> str:
    lines = [" ".join(A.names), A.names[A.identity]]
    lines += [" ".join(A.names[v] for v in row) for row in A.table]
    return "\n".join(lines) + "\n"


def relation_to_lines(R: BinaryRelation) -> str:
    return "".join(f"{a} {b}\n" for a, b in R.show())


def relation_to_json(R: BinaryRelation) -> list[list[str]]:
    return [[a, b] for a, b in R.show()]


def parse_relation(A: FiniteMonoid, text: str) -> BinaryRelation:
    text = text.strip()
    if text.startswith("["):
        pairs = json.loads(text)
    else:
        pairs = [line.split() for line in text.splitlines() if line.strip()]
    return from_pairs(A, ((A.index(a), A.index(b)) for a, b in pairs))


def parse_subset(A: FiniteMonoid, spec: str) -> frozenset[int]:
    names = [x.strip() for x in spec.split(",") if x.strip()]
    return A.subset(names)


def condition_report(A: FiniteMonoid, name: str, check: Check) -> dict:
    witness = None if check.witness is None else [A.names[i] for i in check.witness]
    return {"condition": name, "holds": check.holds, "witness": witness}
