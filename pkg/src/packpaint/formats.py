"""Text and JSON formats for graphs, specs, colorings and list assignments.

Edge-list text: a header line ``n m`` followed by ``m`` lines ``u v``
(0-indexed, whitespace separated).  Blank lines and ``#`` comments are
skipped.  Graph JSON is ``{"n": int, "edges": [[u, v], ...]}`` with an
optional ``"labels"`` side map.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .errors import InvalidSpec, ParseError, UnknownColor
from .families import LabeledGraph
from .graph import Graph, from_edge_list
from .listcolor import ColorClass, ListAssignment, ListPackingColoring
from .solver import PackingColoring, PackingSpec, coloring_from_classes


def _check_edge(n: int, u: int, v: int, seen: set, line: int | None) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ParseError(f"vertex out of range 0..{n - 1} in edge {u} {v}", line)
    if u == v:
        raise ParseError(f"loop at vertex {u}", line)
    key = (min(u, v), max(u, v))
    if key in seen:
        raise ParseError(f"duplicate edge {key[0]} {key[1]}", line)
    seen.add(key)


def _int(token: str, line: int) -> int:
    if not token.isdigit():
        raise ParseError(f"expected a nonnegative integer, got {token!r}", line)
    return int(token)


def parse_edge_list(text: str) -> Graph:
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if body:
            rows.append((number, body))
    if not rows:
        raise ParseError("missing header line 'n m'", 1)
    number, header = rows[0]
    if len(header) != 2:
        raise ParseError("header must be 'n m'", number)
    n, m = (_int(t, number) for t in header)
    if len(rows) - 1 != m:
        last = rows[-1][0]
        raise ParseError(f"header promises {m} edges, found {len(rows) - 1}", last)
    seen: set = set()
    for number, body in rows[1:]:
        if len(body) != 2:
            raise ParseError("edge line must be 'u v'", number)
        u, v = (_int(t, number) for t in body)
        _check_edge(n, u, v, seen, number)
    return from_edge_list(n, seen)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno) from None


def _edge_lines(text: str) -> list[int | None]:
    """Best-effort line numbers of the entries of the top-level edges array."""
    key = text.find('"edges"')
    if key < 0:
        return []
    start = text.find("[", key)
    out, depth = [], 0
    for pos in range(start, len(text)):
        ch = text[pos]
        if ch == "[":
            depth += 1
            if depth == 2:
                out.append(_line_of(text, pos))
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
    return out


def parse_graph_json(text: str) -> LabeledGraph:
    data = _load_json(text)
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError('expected an object with "n" and "edges"', 1)
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f'"n" must be a nonnegative integer, got {n!r}', 1)
    lines = _edge_lines(text)
    seen: set = set()
    for i, pair in enumerate(data["edges"]):
        line = lines[i] if i < len(lines) else None
        if not (isinstance(pair, list) and len(pair) == 2 and all(type(x) is int for x in pair)):
            raise ParseError(f"edge {i} must be a pair of integers, got {pair!r}", line)
        _check_edge(n, pair[0], pair[1], seen, line)
    labels = data.get("labels", {})
    if not isinstance(labels, dict) or not all(type(v) is int and 0 <= v < n for v in labels.values()):
        raise ParseError('"labels" must map names to vertices', None)
    return LabeledGraph(from_edge_list(n, seen), dict(labels))


def format_graph_json(g: Graph | LabeledGraph) -> str:
    labels = {}
    if isinstance(g, LabeledGraph):
        labels, g = g.labels, g.graph
    data: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}
    if labels:
        data["labels"] = labels
    return json.dumps(data)


def parse_graph(text: str) -> LabeledGraph:
    """Either format, chosen by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return LabeledGraph(parse_edge_list(text))


# ------------------------------------------------------------ specs


def parse_spec(text: str) -> PackingSpec:
    try:
        return PackingSpec.parse(text)
    except InvalidSpec as e:
        raise ParseError(str(e)) from None


def format_spec(spec: PackingSpec) -> str:
    return spec.to_text()


# ------------------------------------------------------------ colorings


def format_coloring(c: PackingColoring, k: int) -> str:
    return json.dumps({"classes": c.classes(k)})


def parse_coloring(text: str, n: int) -> PackingColoring:
    data = _load_json(text)
    if not isinstance(data, dict) or not isinstance(data.get("classes"), list):
        raise ParseError('expected {"classes": [[...], ...]}', 1)
    try:
        return coloring_from_classes(n, data["classes"])
    except (ValueError, IndexError, TypeError) as e:
        raise ParseError(str(e)) from None


def parse_partial_coloring(text: str, n: int) -> list[int | None]:
    """``{"classes": ...}`` where missing vertices stay uncolored."""
    data = _load_json(text)
    if not isinstance(data, dict) or not isinstance(data.get("classes"), list):
        raise ParseError('expected {"classes": [[...], ...]}', 1)
    phi: list[int | None] = [None] * n
    for c, members in enumerate(data["classes"]):
        for v in members:
            if type(v) is not int or not 0 <= v < n:
                raise ParseError(f"class {c} names vertex {v!r} outside 0..{n - 1}")
            if phi[v] is not None:
                raise ParseError(f"vertex {v} listed in two classes")
            phi[v] = c
    return phi


# ------------------------------------------------------------ list assignments


def _color_value(c):
    if isinstance(c, bool) or not isinstance(c, (int, str)):
        raise ParseError(f"colors must be integers or strings, got {c!r}")
    return c


def _sort_key(c):
    return (isinstance(c, str), c)


def format_lists(lists: ListAssignment) -> str:
    data = {
        "classes": [{"radius": cl.radius, "colors": sorted(cl.colors, key=_sort_key)} for cl in lists.classes],
        "lists": {str(v): sorted(lst, key=_sort_key) for v, lst in enumerate(lists.lists)},
    }
    return json.dumps(data)


def parse_lists(text: str, n: int | None = None) -> ListAssignment:
    data = _load_json(text)
    if not isinstance(data, dict) or "classes" not in data or "lists" not in data:
        raise ParseError('expected an object with "classes" and "lists"', 1)
    classes = []
    for i, cl in enumerate(data["classes"]):
        if not isinstance(cl, dict) or type(cl.get("radius")) is not int or cl["radius"] < 1:
            raise ParseError(f"class {i} needs a positive integer radius")
        classes.append(ColorClass(cl["radius"], frozenset(_color_value(c) for c in cl.get("colors", []))))
    raw: Mapping = data["lists"]
    if not isinstance(raw, dict):
        raise ParseError('"lists" must map vertex ids to color lists')
    for key in raw:
        if not str(key).isdigit():
            raise ParseError(f"list for unknown vertex {key!r}")
    size = n if n is not None else (max((int(v) for v in raw), default=-1) + 1)
    lists = [frozenset()] * size
    for key, value in raw.items():
        if int(key) >= size:
            raise ParseError(f"list for unknown vertex {key!r}")
        lists[int(key)] = frozenset(_color_value(c) for c in value)
    try:
        return ListAssignment(tuple(classes), tuple(lists))
    except (UnknownColor, ValueError) as e:
        raise ParseError(str(e)) from None


def format_list_coloring(c: ListPackingColoring) -> str:
    return json.dumps({"colors": {str(v): col for v, col in enumerate(c.assignment)}})
