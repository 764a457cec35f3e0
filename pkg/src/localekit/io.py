"""Textual formats for lattices and spaces, plus DOT exports of the orders.

Lattice files: a `lattice <n>` header, then one order pair per line, either
covers or general `a < b` / `a <= b` assertions; the loader takes the
reflexive-transitive closure either way. Space files: a `space <n>` header,
then one 0/1 membership string per open set. `#` starts a comment.
"""

from __future__ import annotations

from typing import Union

from .lattice import FiniteFrame, FinitePoset, validate_frame
from .spaces import FiniteSpace, bitstring, specialization
from .sublocales import ClosedJoinFrame, SublocaleLattice


class ParseError(ValueError):
    """Malformed input file; carries the 1-based offending line."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def load_lattice_text(text: str) -> FiniteFrame:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty input")
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "lattice":
        raise ParseError(number, f"expected 'lattice <n>', got {header!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(number, f"carrier size {parts[1]!r} is not an integer") from None
    pairs = []
    for number, line in lines[1:]:
        for sep in ("<=", "<"):
            if sep in line:
                left, _, right = line.partition(sep)
                break
        else:
            raise ParseError(number, f"expected 'a < b' or 'a <= b', got {line!r}")
        try:
            pairs.append((int(left), int(right)))
        except ValueError:
            raise ParseError(number, f"non-integer element in {line!r}") from None
    try:
        poset = FinitePoset.from_relation(n, pairs)
        return validate_frame(poset)
    except ValueError as exc:
        raise ParseError(number if lines[1:] else 1, str(exc)) from exc


def format_lattice(frame: FiniteFrame) -> str:
    """Canonical echo: header plus the cover relation of the canonical order."""
    lines = [f"lattice {frame.n}"]
    lines += [f"{i} < {j}" for i, j in frame.poset.covers()]
    return "\n".join(lines) + "\n"


def load_space_text(text: str) -> FiniteSpace:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty input")
    number, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "space":
        raise ParseError(number, f"expected 'space <n>', got {header!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(number, f"point count {parts[1]!r} is not an integer") from None
    opens = {0, (1 << n) - 1}
    for number, line in lines[1:]:
        if len(line) != n or set(line) - {"0", "1"}:
            raise ParseError(number, f"expected a {n}-character 0/1 string, got {line!r}")
        opens.add(sum(1 << p for p, ch in enumerate(line) if ch == "1"))
    try:
        return FiniteSpace(n, opens)
    except ValueError as exc:
        raise ParseError(lines[-1][0], str(exc)) from exc


def format_space(space: FiniteSpace) -> str:
    lines = [f"space {space.points}"]
    lines += [bitstring(o, space.points) for o in space.opens]
    return "\n".join(lines) + "\n"


def load_any(text: str) -> Union[FiniteFrame, FiniteSpace]:
    """Sniff the header and dispatch to the right loader."""
    for number, line in _content_lines(text):
        kind = line.split()[0]
        if kind == "lattice":
            return load_lattice_text(text)
        if kind == "space":
            return load_space_text(text)
        raise ParseError(number, f"unknown header {kind!r}")
    raise ParseError(1, "empty input")


# ---------------------------------------------------------------------------
# DOT export


def _digraph(name: str, nodes: list[tuple[str, str]], edges: list[tuple[str, str]]) -> str:
    out = [f"digraph {name} {{", "  rankdir=BT;"]
    out += [f'  "{node}" [label="{label}"];' for node, label in nodes]
    out += [f'  "{a}" -> "{b}";' for a, b in edges]
    out.append("}")
    return "\n".join(out) + "\n"


def dot_hasse(frame: FiniteFrame) -> str:
    nodes = [(str(i), frame.labels[i]) for i in range(frame.n)]
    edges = [(str(i), str(j)) for i, j in frame.poset.covers()]
    return _digraph("hasse", nodes, edges)


def dot_sublocales(lattice: SublocaleLattice) -> str:
    nodes = [(str(i), s.label()) for i, s in enumerate(lattice.sublocales)]
    edges = [(str(i), str(j)) for i, j in lattice.covers()]
    return _digraph("sublocales", nodes, edges)


def dot_closed_joins(cjf: ClosedJoinFrame) -> str:
    nodes = [(str(i), cjf.frame.labels[i]) for i in range(len(cjf))]
    edges = [(str(i), str(j)) for i, j in cjf.frame.poset.covers()]
    return _digraph("closed_joins", nodes, edges)


def dot_specialization(space: FiniteSpace) -> str:
    rel = specialization(space)
    n = space.points
    nodes = [(f"p{x}", f"p{x}") for x in range(n)]
    edges = []
    for x in range(n):
        for y in range(n):
            if x == y or not rel[x, y]:
                continue
            via = any(z not in (x, y) and rel[x, z] and rel[z, y] for z in range(n))
            if not via:
                edges.append((f"p{x}", f"p{y}"))
    return _digraph("specialization", nodes, edges)
