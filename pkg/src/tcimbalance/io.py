"""Text formats for explicit graphs, succinct graphs, certificates and layouts.

Explicit graph::

    graph <n> <m>
    e <u> <v>          (m lines, 1 <= u < v <= n)
    cover <id> ...     (optional)

Succinct graph::

    succinct <k> <r>
    he <u> <v>         (cover edges, 1 <= u < v <= k)
    c <size> <t> <u_1> ... <u_t>   (r lines, clique order)

Certificate::

    pi <k ids>
    loc <r values>
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .graph import Graph, SuccinctGraph, TwinCover
from .succinct import Certificate


def _lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_cover(text: str) -> TwinCover:
    """Cover from a comma- or space-separated id list; empty means k = 0."""
    parts = [p for p in text.replace(",", " ").split() if p]
    return TwinCover(tuple(_ints(parts, 0)))


def sniff(text: str) -> str:
    """Format keyword of the first content line (``graph``, ``succinct``, ``pi``)."""
    for _, toks in _lines(text):
        return toks[0]
    raise ParseError("empty input")


def parse_graph(text: str) -> tuple[Graph, TwinCover | None]:
    n = m = None
    edges, cover = [], None
    for lineno, toks in _lines(text):
        head, rest = toks[0], toks[1:]
        if head == "graph":
            if n is not None or len(rest) != 2:
                raise ParseError(f"line {lineno}: bad header")
            n, m = _ints(rest, lineno)
        elif n is None:
            raise ParseError(f"line {lineno}: expected 'graph <n> <m>' header")
        elif head == "e":
            if len(rest) != 2:
                raise ParseError(f"line {lineno}: edge needs two endpoints")
            u, v = _ints(rest, lineno)
            if not 1 <= u < v <= n:
                raise ParseError(f"line {lineno}: edge must satisfy 1 <= u < v <= {n}")
            edges.append((u, v))
        elif head == "cover":
            if cover is not None:
                raise ParseError(f"line {lineno}: duplicate cover line")
            cover = TwinCover(tuple(_ints(rest, lineno)))
        else:
            raise ParseError(f"line {lineno}: unknown record {head!r}")
    if n is None:
        raise ParseError("missing 'graph' header")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    if len(set(edges)) != len(edges):
        raise ParseError("duplicate edge")
    return Graph(n, frozenset(edges)), cover


def write_graph(g: Graph, cover: TwinCover | None = None) -> str:
    out = [f"graph {g.n} {len(g.edges)}"]
    out += [f"e {u} {v}" for u, v in g.sorted_edges()]
    if cover is not None:
        out.append(" ".join(["cover", *map(str, cover.members)]))
    return "\n".join(out) + "\n"


def parse_succinct(text: str) -> SuccinctGraph:
    k = r = None
    edges, cliques = [], []
    for lineno, toks in _lines(text):
        head, rest = toks[0], toks[1:]
        if head == "succinct":
            if k is not None or len(rest) != 2:
                raise ParseError(f"line {lineno}: bad header")
            k, r = _ints(rest, lineno)
        elif k is None:
            raise ParseError(f"line {lineno}: expected 'succinct <k> <r>' header")
        elif head == "he":
            if cliques:
                raise ParseError(f"line {lineno}: cover edges must precede cliques")
            if len(rest) != 2:
                raise ParseError(f"line {lineno}: cover edge needs two endpoints")
            u, v = _ints(rest, lineno)
            if not 1 <= u < v <= k:
                raise ParseError(f"line {lineno}: cover edge must satisfy 1 <= u < v <= {k}")
            edges.append((u, v))
        elif head == "c":
            vals = _ints(rest, lineno)
            if len(vals) < 2 or len(vals) != 2 + vals[1]:
                raise ParseError(f"line {lineno}: expected 'c <size> <t> <u_1> ... <u_t>'")
            size, _, *att = vals
            if size < 1:
                raise ParseError(f"line {lineno}: clique size must be positive")
            if any(not 1 <= a <= k for a in att) or len(set(att)) != len(att):
                raise ParseError(f"line {lineno}: attachments must be distinct ids in 1..{k}")
            cliques.append((size, frozenset(att)))
        else:
            raise ParseError(f"line {lineno}: unknown record {head!r}")
    if k is None:
        raise ParseError("missing 'succinct' header")
    if len(cliques) != r:
        raise ParseError(f"header announces {r} cliques, found {len(cliques)}")
    if len(set(edges)) != len(edges):
        raise ParseError("duplicate cover edge")
    return SuccinctGraph(k, frozenset(edges), tuple(cliques))


def write_succinct(sg: SuccinctGraph) -> str:
    out = [f"succinct {sg.k} {sg.r}"]
    out += [f"he {u} {v}" for u, v in sorted(sg.cover_edges)]
    for size, att in sg.cliques:
        out.append(" ".join(["c", str(size), str(len(att)), *map(str, sorted(att))]))
    return "\n".join(out) + "\n"


def parse_certificate(text: str) -> Certificate:
    pi = loc = None
    for lineno, toks in _lines(text):
        head, rest = toks[0], toks[1:]
        if head == "pi" and pi is None:
            pi = tuple(_ints(rest, lineno))
        elif head == "loc" and loc is None:
            loc = tuple(_ints(rest, lineno))
        else:
            raise ParseError(f"line {lineno}: unexpected record {head!r}")
    if pi is None or loc is None:
        raise ParseError("certificate needs a 'pi' line and a 'loc' line")
    return Certificate(pi, loc)


def write_certificate(cert: Certificate) -> str:
    pi = " ".join(["pi", *map(str, cert.cover_order)])
    loc = " ".join(["loc", *map(str, cert.locations)])
    return f"{pi}\n{loc}\n"


def parse_layout(text: str) -> tuple:
    return tuple(_ints(text.split(), 0))


def write_layout(order) -> str:
    return " ".join(map(str, order)) + "\n"


def read_text(path) -> str:
    return Path(path).read_text()
