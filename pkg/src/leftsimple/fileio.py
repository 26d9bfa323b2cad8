"""Semigroup files: a hand-writable text format and a JSON mirror.

Text format::

    # comment
    elements: e a b c
    table:
      e a b c
      a e c b
      b c e a
      c b a e
    subsets:
      H: e a
      N: e

Table entries are element labels; a token that is not a label but is an
integer in range is read as an element index.  The JSON mirror uses the
same field names: ``{"elements": [...], "table": [[...]], "subsets": {...}}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError, UnknownSubset
from .semigroup import ElemSet, Semigroup

__all__ = ["SemigroupFile", "dumps", "dumps_json", "from_semigroup", "load", "loads"]


@dataclass
class SemigroupFile:
    elements: list[str]
    table: list[list[str]]
    subsets: dict[str, list[str]] = field(default_factory=dict)

    def semigroup(self) -> Semigroup:
        index = {lab: i for i, lab in enumerate(self.elements)}
        return Semigroup([[index[x] for x in row] for row in self.table], self.elements)

    def subset(self, name: str) -> ElemSet:
        if name not in self.subsets:
            known = ", ".join(self.subsets) or "none"
            raise UnknownSubset(f"no subset named {name!r} (known: {known})")
        index = {lab: i for i, lab in enumerate(self.elements)}
        return ElemSet.of(len(self.elements), (index[x] for x in self.subsets[name]))


def from_semigroup(S: Semigroup, subsets: dict[str, ElemSet] | None = None) -> SemigroupFile:
    labels = list(S.labels)
    table = [[labels[v] for v in row] for row in S.rows]
    subs = {name: [labels[i] for i in X] for name, X in (subsets or {}).items()}
    return SemigroupFile(labels, table, subs)


def _resolve_token(tok: str, index: dict[str, int], elements: list[str], line: int, col: int) -> str:
    if tok in index:
        return tok
    if tok.lstrip("-").isdigit() and 0 <= int(tok) < len(elements):
        return elements[int(tok)]
    raise ParseError(f"unknown element {tok!r}", line, col)


def _check_labels(elements: list[str], line: int | None) -> dict[str, int]:
    if not elements:
        raise ParseError("no elements declared", line)
    index = {}
    for i, lab in enumerate(elements):
        if lab in index:
            raise ParseError(f"duplicate element label {lab!r}", line)
        index[lab] = i
    return index


def _parse_text(text: str) -> SemigroupFile:
    elements: list[str] | None = None
    index: dict[str, int] = {}
    table: list[list[str]] = []
    subsets: dict[str, list[str]] = {}
    section = None
    elem_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        indent = len(line) - len(line.lstrip())
        head, sep, rest = stripped.partition(":")
        key = head.strip().lower() if sep else None
        if key == "elements":
            elements = rest.split()
            elem_line = lineno
            index = _check_labels(elements, lineno)
            section = None
            continue
        if key in ("table", "subsets") and not rest.strip():
            if elements is None:
                raise ParseError(f"'{key}:' before 'elements:'", lineno, indent + 1)
            section = key
            continue
        if section == "table":
            row = []
            col = indent
            for tok in stripped.split():
                col = line.index(tok, col)
                row.append(_resolve_token(tok, index, elements, lineno, col + 1))
                col += len(tok)
            if len(row) != len(elements):
                raise ParseError(f"table row has {len(row)} entries, expected {len(elements)}", lineno, indent + 1)
            table.append(row)
            if len(table) > len(elements):
                raise ParseError("more table rows than elements", lineno, indent + 1)
            continue
        if section == "subsets" and sep:
            name = head.strip()
            if not name or " " in name:
                raise ParseError(f"bad subset name {name!r}", lineno, indent + 1)
            if name in subsets:
                raise ParseError(f"subset {name!r} defined twice", lineno, indent + 1)
            members = []
            col = line.index(":") + 1
            for tok in rest.split():
                col = line.index(tok, col)
                if tok not in index:
                    raise ParseError(f"unknown element {tok!r} in subset {name!r}", lineno, col + 1)
                members.append(tok)
                col += len(tok)
            subsets[name] = members
            continue
        raise ParseError(f"unexpected line {stripped!r}", lineno, indent + 1)
    if elements is None:
        raise ParseError("missing 'elements:' line")
    if len(table) != len(elements):
        raise ParseError(f"table has {len(table)} rows, expected {len(elements)}", elem_line)
    return SemigroupFile(elements, table, subsets)


def _parse_json(text: str) -> SemigroupFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(data, dict) or "elements" not in data or "table" not in data:
        raise ParseError("JSON semigroup needs 'elements' and 'table'")
    elements = [str(x) for x in data["elements"]]
    index = _check_labels(elements, None)
    table = []
    rows = data["table"]
    if not isinstance(rows, list) or len(rows) != len(elements):
        raise ParseError(f"table must have {len(elements)} rows")
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != len(elements):
            raise ParseError(f"table row {r} must have {len(elements)} entries")
        out = []
        for v in row:
            if isinstance(v, int) and not isinstance(v, bool):
                if not 0 <= v < len(elements):
                    raise ParseError(f"index {v} out of range in row {r}")
                out.append(elements[v])
            elif str(v) in index:
                out.append(str(v))
            else:
                raise ParseError(f"unknown element {v!r} in row {r}")
        table.append(out)
    subsets = {}
    for name, members in (data.get("subsets") or {}).items():
        for x in members:
            if str(x) not in index:
                raise ParseError(f"unknown element {x!r} in subset {name!r}")
        subsets[str(name)] = [str(x) for x in members]
    return SemigroupFile(elements, table, subsets)


def loads(text: str) -> SemigroupFile:
    if text.lstrip().startswith("{"):
        sf = _parse_json(text)
    else:
        sf = _parse_text(text)
    sf.semigroup()  # table must be a valid semigroup
    return sf


def load(path: str | Path) -> SemigroupFile:
    return loads(Path(path).read_text())


def dumps(sf: SemigroupFile) -> str:
    width = max(len(x) for x in sf.elements)
    lines = ["elements: " + " ".join(sf.elements), "table:"]
    for row in sf.table:
        lines.append("  " + " ".join(x.ljust(width) for x in row).rstrip())
    if sf.subsets:
        lines.append("subsets:")
        for name, members in sf.subsets.items():
            lines.append(f"  {name}: " + " ".join(members))
    return "\n".join(lines) + "\n"


def dumps_json(sf: SemigroupFile) -> str:
    return json.dumps({"elements": sf.elements, "table": sf.table, "subsets": sf.subsets}, indent=2) + "\n"
