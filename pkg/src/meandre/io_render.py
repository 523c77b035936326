"""Serialization and rendering of meander graphs.

The JSON form is the interchange format: fixed key order {type, n, top,
bottom, vertices, top_arcs, bottom_arcs, components, index}, 1-based
vertices, arcs as two-element arrays.  Loading recomputes everything from
the descriptor and rejects files whose embedded graph, components or index
disagree.  The ASCII and DOT renderers draw arcs above/below a vertex row;
for symmetric graphs the centre line is marked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .composition import SeaweedA, SeaweedC, Series, parse_composition
from .index import index_a_from_report, index_c_from_report
from .meander import (
    Arc,
    ComponentKind,
    ComponentReport,
    MeanderGraph,
    analyze,
    build_graph_a,
    build_graph_c,
)

Descriptor = SeaweedA | SeaweedC


@dataclass(frozen=True)
class GraphDocument:
    """A descriptor with its graph, component report and index."""

    descriptor: Descriptor
    graph: MeanderGraph
    report: ComponentReport
    index: int

    @property
    def series_label(self) -> str:
        if isinstance(self.descriptor, SeaweedA):
            return "A"
        return "C" if self.descriptor.series is Series.SP else "B"

    @property
    def size_label(self) -> int:
        """The n of the JSON form: size for type A, rank for type C/B."""
        if isinstance(self.descriptor, SeaweedA):
            return self.descriptor.size
        return self.descriptor.rank


def document(q: Descriptor) -> GraphDocument:
    """Build the full document for a descriptor."""
    if isinstance(q, SeaweedA):
        graph = build_graph_a(q)
        report = analyze(graph)
        idx = index_a_from_report(report)
    else:
        graph = build_graph_c(q)
        report = analyze(graph)
        idx = index_c_from_report(report)
    return GraphDocument(q, graph, report, idx)


def _payload(doc: GraphDocument) -> dict:
    q = doc.descriptor
    return {
        "type": doc.series_label,
        "n": doc.size_label,
        "top": q.top.to_text(),
        "bottom": q.bottom.to_text(),
        "vertices": doc.graph.vertex_count,
        "top_arcs": [list(a) for a in doc.graph.top_arcs],
        "bottom_arcs": [list(a) for a in doc.graph.bottom_arcs],
        "components": [
            {
                "kind": c.kind.value,
                "vertices": list(c.vertices),
                "sigma_stable": c.sigma_stable,
            }
            for c in doc.report.components
        ],
        "index": doc.index,
    }


def to_json(doc: GraphDocument) -> str:
    """Canonical single-line JSON; byte-stable across runs."""
    return json.dumps(_payload(doc), ensure_ascii=False, separators=(",", ":"))


def from_json(text: str) -> GraphDocument:
    """Parse and re-validate; tampered or stale documents are rejected."""
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("document must be a JSON object")
    try:
        kind = data["type"]
        top = parse_composition(data["top"])
        bottom = parse_composition(data["bottom"])
        if kind == "A":
            descriptor: Descriptor = SeaweedA(top, bottom)
        elif kind in ("C", "B"):
            series = Series.SP if kind == "C" else Series.SO_ODD
            descriptor = SeaweedC(int(data["n"]), top, bottom, series)
        else:
            raise ValueError(f"unknown document type {kind!r}")
    except KeyError as missing:
        raise ValueError(f"document is missing the {missing} field") from None
    except (TypeError, AttributeError) as bad:
        raise ValueError(f"malformed document field: {bad}") from None
    doc = document(descriptor)
    if _payload(doc) != data:
        raise ValueError(
            "document content does not match its descriptor (tampered or stale file)"
        )
    return doc


# --- ASCII rendering -------------------------------------------------------

_TOP_CORNERS = ("╭", "╮")
_BOTTOM_CORNERS = ("╰", "╯")
_MIRROR = "|"


def _heights(arcs: tuple[Arc, ...]) -> dict[Arc, int]:
    """Nesting height of each arc; innermost arcs sit next to the vertex row."""
    heights: dict[Arc, int] = {}
    for arc in sorted(arcs, key=lambda a: (a[1] - a[0], a[0])):
        i, j = arc
        inside = [h for (x, y), h in heights.items() if i < x and y < j]
        heights[arc] = 1 + max(inside, default=0)
    return heights


def to_ascii(doc: GraphDocument, max_width: int = 200) -> str:
    """Monospace drawing: '*' vertices, box-drawing arcs, '|' centre line."""
    g = doc.graph
    n = g.vertex_count
    if n == 0:
        return ""
    width = 2 * n - 1
    if width > max_width:
        raise ValueError(
            f"drawing needs {width} columns (limit {max_width}); "
            "use the dot renderer for graphs this wide"
        )
    top_heights = _heights(g.top_arcs)
    bottom_heights = _heights(g.bottom_arcs)
    rows_top = max(top_heights.values(), default=0)
    rows_bottom = max(bottom_heights.values(), default=0)
    pad = 1 if g.symmetric else 0  # extra rows so the centre line shows
    vrow = pad + rows_top
    grid = [[" "] * width for _ in range(rows_top + rows_bottom + 1 + 2 * pad)]

    def col(v: int) -> int:
        return 2 * (v - 1)

    for v in range(1, n + 1):
        grid[vrow][col(v)] = "*"
    for (i, j), h in top_heights.items():
        row = vrow - h
        grid[row][col(i)] = _TOP_CORNERS[0]
        grid[row][col(j)] = _TOP_CORNERS[1]
        for c in range(col(i) + 1, col(j)):
            grid[row][c] = "─"
        for r in range(row + 1, vrow):
            grid[r][col(i)] = "│"
            grid[r][col(j)] = "│"
    for (i, j), h in bottom_heights.items():
        row = vrow + h
        grid[row][col(i)] = _BOTTOM_CORNERS[0]
        grid[row][col(j)] = _BOTTOM_CORNERS[1]
        for c in range(col(i) + 1, col(j)):
            grid[row][c] = "─"
        for r in range(vrow + 1, row):
            grid[r][col(i)] = "│"
            grid[r][col(j)] = "│"
    if g.symmetric:
        centre = n - 1  # column between vertices n/2 and n/2 + 1
        for row in grid:
            if row[centre] == " ":
                row[centre] = _MIRROR
    return "\n".join("".join(row).rstrip() for row in grid)


# --- DOT rendering ---------------------------------------------------------


def to_dot(doc: GraphDocument) -> str:
    """Graphviz source: vertices pinned to a line, arcs curving up/down.

    Edge colours: red = segment not fixed by the mirror reflection,
    blue = cycle, black = mirror-stable segment (all segments are black for
    plain type-A graphs, where the mirror plays no role).
    """
    g = doc.graph
    owner: dict[int, tuple[ComponentKind, bool]] = {}
    for comp in doc.report.components:
        for v in comp.vertices:
            owner[v] = (comp.kind, comp.sigma_stable)

    def colour(i: int) -> str:
        kind, stable = owner[i]
        if kind is ComponentKind.CYCLE:
            return "blue"
        if g.symmetric and not stable:
            return "red"
        return "black"

    lines = [
        "graph meander {",
        f"  // type {doc.series_label} seaweed {doc.descriptor}; index {doc.index}",
        "  // edge colours: red = segment not fixed by the mirror reflection,",
        "  //               blue = cycle, black = mirror-stable segment",
        "  layout=neato;",
        "  splines=curved;",
        "  node [shape=point, width=0.08];",
    ]
    for v in range(1, g.vertex_count + 1):
        lines.append(f'  v{v} [pos="{(v - 1) * 0.6:.1f},0!"];')
    for i, j in g.top_arcs:
        lines.append(f"  v{i} -- v{j} [tailport=n, headport=n, color={colour(i)}];")
    for i, j in g.bottom_arcs:
        lines.append(f"  v{i} -- v{j} [tailport=s, headport=s, color={colour(i)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
