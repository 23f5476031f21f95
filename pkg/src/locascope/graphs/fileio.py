"""Plain-text graph format: header ``n m d`` followed by ``m`` lines ``u v``."""

from pathlib import Path

from ..utils.output import write_text_atomic
from .base import Graph, InvalidEdge, LocascopeError, build_graph


class GraphParseError(LocascopeError, ValueError):
    """Raised for malformed graph files; ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}", {"line": line})
        self.line = line


def parse_graph(text: str) -> Graph:
    """Parse the text format. Blank lines and ``#`` comments are skipped."""
    records = [
        (number, raw.split("#", 1)[0].split())
        for number, raw in enumerate(text.splitlines(), start=1)
    ]
    records = [(number, fields) for number, fields in records if fields]
    if not records:
        raise GraphParseError("missing header 'n m d'", 1)

    header_line, header = records[0]
    if len(header) != 3:
        raise GraphParseError(f"header must have 3 fields, got {len(header)}", header_line)
    try:
        n, m, d = (int(field) for field in header)
    except ValueError as e:
        raise GraphParseError(f"header fields must be integers: {' '.join(header)}", header_line) from e

    edges: list[tuple[int, int]] = []
    for number, fields in records[1:]:
        if len(fields) != 2:
            raise GraphParseError(f"edge line must have 2 fields, got {len(fields)}", number)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as e:
            raise GraphParseError(f"edge endpoints must be integers: {' '.join(fields)}", number) from e
        edges.append((u, v))
    if len(edges) != m:
        raise GraphParseError(f"header announces {m} edges, found {len(edges)}", header_line)

    try:
        return build_graph(n, edges, d)
    except InvalidEdge as e:
        u, v = e.edge
        offending = [number for number, fields in records[1:] if sorted(map(int, fields)) == sorted((u, v))]
        raise GraphParseError(e.message, offending[-1] if offending else header_line) from e
    except LocascopeError as e:
        raise GraphParseError(e.message, header_line) from e


def format_graph(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.num_edges} {graph.degree_bound}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(graph: Graph, path: str | Path) -> None:
    write_text_atomic(path, format_graph(graph))
