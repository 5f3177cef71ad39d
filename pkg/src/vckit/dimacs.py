"""Reading and writing graphs in DIMACS edge format.

The accepted dialect:

    c <free-form comment>
    p edge <n> <m>
    e <u> <v>

Vertex ids on ``e`` lines are 1-based, per the format; everything else
in this package is 0-based, so parsing subtracts one and writing adds
it back.  Duplicate and reversed edge lines collapse silently.  A
declared edge count that disagrees with the distinct edges found is
reported as a warning, not an error.

Canonical output is the problem line with the exact distinct edge
count followed by the edges sorted ascending, so parse(write(g)) == g.
"""

from __future__ import annotations

import warnings

from .graph import Graph


class DimacsError(ValueError):
    """Malformed DIMACS input; the message carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DimacsFormatWarning(UserWarning):
    """Recoverable oddity in DIMACS input, e.g. a wrong declared edge count."""


def parse_dimacs(data: str | bytes) -> Graph:
    """Parse DIMACS edge-format text into a Graph.

    Raises DimacsError (with the offending line number) on a missing or
    duplicate problem line, an edge line before the problem line,
    unrecognized line types, malformed numbers, out-of-range vertex ids,
    or self-loops.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8", errors="replace")

    n: int | None = None
    declared_m = 0
    edges: set[tuple[int, int]] = set()

    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise DimacsError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise DimacsError("problem line must be 'p edge <n> <m>'", lineno)
            try:
                n = int(fields[2])
                declared_m = int(fields[3])
            except ValueError:
                raise DimacsError(
                    f"non-integer field in problem line: {line!r}", lineno
                ) from None
            if n < 0 or declared_m < 0:
                raise DimacsError("negative count in problem line", lineno)
        elif tag == "e":
            if n is None:
                raise DimacsError("edge line before problem line", lineno)
            if len(fields) != 3:
                raise DimacsError("edge line must be 'e <u> <v>'", lineno)
            try:
                u = int(fields[1])
                v = int(fields[2])
            except ValueError:
                raise DimacsError(
                    f"non-integer vertex id in edge line: {line!r}", lineno
                ) from None
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise DimacsError(
                    f"vertex id outside 1..{n} in edge ({u}, {v})", lineno
                )
            if u == v:
                raise DimacsError(f"self-loop edge ({u}, {v})", lineno)
            a, b = u - 1, v - 1
            edges.add((a, b) if a < b else (b, a))
        else:
            raise DimacsError(f"unrecognized line type {tag!r}", lineno)

    if n is None:
        raise DimacsError("missing problem line")
    if declared_m != len(edges):
        warnings.warn(
            f"problem line declares {declared_m} edges, found {len(edges)} distinct",
            DimacsFormatWarning,
            stacklevel=2,
        )
    return Graph(n, sorted(edges))


def write_dimacs(g: Graph, comments: tuple[str, ...] | list[str] = ()) -> str:
    """Serialize a Graph to canonical DIMACS edge format.

    Optional comments are emitted first as ``c`` lines (multi-line
    strings become several ``c`` lines); the parser skips them, so the
    round trip is unaffected.
    """
    lines = []
    for comment in comments:
        for part in str(comment).splitlines() or [""]:
            lines.append(f"c {part}".rstrip())
    lines.append(f"p edge {g.vertex_count} {g.edge_count}")
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def read_dimacs_file(path) -> Graph:
    with open(path, "r", encoding="utf-8", errors="replace") as fh:
        return parse_dimacs(fh.read())


def write_dimacs_file(g: Graph, path, comments: tuple[str, ...] | list[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_dimacs(g, comments))
