"""Graph serialization: edge-list text files and graph6 strings.

Edge-list format: first line ``n m``, then m lines ``u v`` with
0-indexed endpoints, u < v, in ascending order.  Blank lines and lines
starting with ``#`` are ignored.
"""

from .errors import InvalidArgument
from .graph import Graph, build_graph


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line)
    if not rows:
        raise InvalidArgument("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise InvalidArgument(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise InvalidArgument(f"header must be 'n m', got {rows[0]!r}") from None
    if len(rows) - 1 != m:
        raise InvalidArgument(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise InvalidArgument(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidArgument(f"bad edge line {line!r}") from None
        edges.append((u, v))
    return build_graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 line (without the optional ``>>graph6<<`` header)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    elif n <= 68719476735:
        head = [126, 126]
        head.extend(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    else:
        raise InvalidArgument(f"graph too large for graph6: n={n}")
    adj = set(g.edge_list)
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        word = 0
        for b in bits[i : i + 6]:
            word = (word << 1) | b
        body.append(word + 63)
    return "".join(map(chr, head + body))


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line; tolerates the ``>>graph6<<`` header."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise InvalidArgument("empty graph6 input")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise InvalidArgument("invalid graph6 character")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        body = data[8:]
    else:
        raise InvalidArgument("truncated graph6 input")
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise InvalidArgument("graph6 body shorter than the n promised")
    bits = []
    for word in body:
        for s6 in (5, 4, 3, 2, 1, 0):
            bits.append((word >> s6) & 1)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return build_graph(n, edges)


def read_graph(path) -> Graph:
    """Read a graph file, sniffing edge-list vs graph6 by content."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 2 and all(p.isdigit() for p in parts):
            return parse_edgelist(text)
        return from_graph6(line)
    raise InvalidArgument(f"no graph data in {path}")


def write_graph(g: Graph, path, fmt: str = "edgelist") -> None:
    if fmt == "edgelist":
        payload = format_edgelist(g)
    elif fmt == "graph6":
        payload = to_graph6(g) + "\n"
    else:
        raise InvalidArgument(f"unknown format {fmt!r}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write(payload)
