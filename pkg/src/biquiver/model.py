"""Biquivers: directed multigraphs with full and dashed arrows.

Vertices are numbered 1..t in all external documents and throughout the
API. Full arrows carry linear maps, dashed arrows semilinear ones; at the
graph level the kind is just a label, and the structural queries here
(connectivity, tree test, cycle parities) ignore direction and treat the
kind only where dashed-arrow parity matters.
"""
from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum

from .errors import FormatError

DimensionVector = tuple[int, ...]


class ArrowKind(Enum):
    FULL = "full"
    DASHED = "dashed"


@dataclass(frozen=True)
class Arrow:
    id: str
    source: int
    target: int
    kind: ArrowKind

    @property
    def is_loop(self) -> bool:
        return self.source == self.target

    @property
    def is_dashed(self) -> bool:
        return self.kind is ArrowKind.DASHED


@dataclass(frozen=True)
class Biquiver:
    t: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if self.t < 1:
            raise FormatError(f"vertex count must be positive, got {self.t}")
        seen = set()
        for a in self.arrows:
            if a.id in seen:
                raise FormatError(f"duplicate arrow id {a.id!r}")
            seen.add(a.id)
            for v in (a.source, a.target):
                if not 1 <= v <= self.t:
                    raise FormatError(
                        f"arrow {a.id!r} endpoint {v} outside 1..{self.t}")

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise FormatError(f"no arrow with id {arrow_id!r}")

    def vertices(self) -> range:
        return range(1, self.t + 1)


@dataclass(frozen=True)
class GraphStructure:
    """Direction- and kind-insensitive shape data of a biquiver.

    loops[v-1] counts loops at vertex v. multiedges maps unordered pairs
    (u, v), u < v, to the number of parallel non-loop arrows when that
    number is at least 2. cycle_basis_parities holds, for each arrow
    outside a fixed spanning forest (loops included), the parity of dashed
    arrows on the fundamental cycle it closes.
    """
    connected: bool
    is_tree: bool
    loops: tuple[int, ...]
    multiedges: dict[tuple[int, int], int]
    pendant_vertices: tuple[int, ...]
    cycle_basis_parities: tuple[int, ...]


def underlying_structure(g: Biquiver) -> GraphStructure:
    loops = [0] * g.t
    degree = [0] * g.t
    pair_count: Counter = Counter()
    adj: list[list[tuple[int, Arrow]]] = [[] for _ in range(g.t + 1)]
    for a in g.arrows:
        if a.is_loop:
            loops[a.source - 1] += 1
            degree[a.source - 1] += 2
            continue
        degree[a.source - 1] += 1
        degree[a.target - 1] += 1
        pair = (min(a.source, a.target), max(a.source, a.target))
        pair_count[pair] += 1
        adj[a.source].append((a.target, a))
        adj[a.target].append((a.source, a))

    # BFS spanning forest; record dashed parity of the root->v tree path.
    visited = [False] * (g.t + 1)
    parity = [0] * (g.t + 1)
    tree_arrows: set[str] = set()
    components = 0
    for root in g.vertices():
        if visited[root]:
            continue
        components += 1
        visited[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, a in adj[v]:
                if not visited[w]:
                    visited[w] = True
                    parity[w] = parity[v] ^ (1 if a.is_dashed else 0)
                    tree_arrows.add(a.id)
                    queue.append(w)

    parities = []
    for a in g.arrows:
        if a.is_loop:
            parities.append(1 if a.is_dashed else 0)
        elif a.id not in tree_arrows:
            p = (1 if a.is_dashed else 0) ^ parity[a.source] ^ parity[a.target]
            parities.append(p)

    connected = components == 1
    is_tree = connected and sum(loops) == 0 and len(g.arrows) == g.t - 1
    pendants = tuple(v for v in g.vertices() if degree[v - 1] == 1)
    multi = {p: c for p, c in sorted(pair_count.items()) if c >= 2}
    return GraphStructure(connected, is_tree, tuple(loops), multi,
                          pendants, tuple(parities))


def is_connected(g: Biquiver) -> bool:
    return underlying_structure(g).connected


def connected_components(g: Biquiver) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted ascending."""
    adj: list[set[int]] = [set() for _ in range(g.t + 1)]
    for a in g.arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    seen = [False] * (g.t + 1)
    comps = []
    for root in g.vertices():
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def induced_subbiquiver(g: Biquiver, vertices: list[int]) -> Biquiver:
    """Restriction to a vertex subset, renumbering vertices to 1..k."""
    index = {v: i + 1 for i, v in enumerate(vertices)}
    keep = [a for a in g.arrows if a.source in index and a.target in index]
    arrows = tuple(Arrow(a.id, index[a.source], index[a.target], a.kind) for a in keep)
    return Biquiver(len(vertices), arrows)


# -- JSON format -------------------------------------------------------------

def parse_biquiver_obj(obj) -> Biquiver:
    if not isinstance(obj, dict):
        raise FormatError("biquiver document must be a JSON object")
    try:
        t = obj["vertices"]
    except KeyError:
        raise FormatError("missing field 'vertices'") from None
    if not isinstance(t, int) or isinstance(t, bool):
        raise FormatError(f"'vertices' must be an integer, got {t!r}")
    raw_arrows = obj.get("arrows", [])
    if not isinstance(raw_arrows, list):
        raise FormatError("'arrows' must be a list")
    arrows = []
    for pos, ra in enumerate(raw_arrows):
        if not isinstance(ra, dict):
            raise FormatError(f"arrow #{pos} must be an object")
        for field in ("id", "from", "to", "kind"):
            if field not in ra:
                raise FormatError(f"arrow #{pos} missing field '{field}'")
        if not isinstance(ra["id"], str):
            raise FormatError(f"arrow #{pos}: 'id' must be a string")
        for field in ("from", "to"):
            if not isinstance(ra[field], int) or isinstance(ra[field], bool):
                raise FormatError(f"arrow {ra['id']!r}: '{field}' must be an integer")
        if ra["kind"] not in ("full", "dashed"):
            raise FormatError(
                f"arrow {ra['id']!r}: kind must be \"full\" or \"dashed\", got {ra['kind']!r}")
        arrows.append(Arrow(ra["id"], ra["from"], ra["to"], ArrowKind(ra["kind"])))
    return Biquiver(t, tuple(arrows))


def parse_biquiver(text: str) -> Biquiver:
    """Parse a biquiver JSON document; raises FormatError with position info."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    return parse_biquiver_obj(obj)


def biquiver_to_obj(g: Biquiver) -> dict:
    return {
        "vertices": g.t,
        "arrows": [
            {"id": a.id, "from": a.source, "to": a.target, "kind": a.kind.value}
            for a in g.arrows
        ],
    }


def serialize_biquiver(g: Biquiver) -> str:
    return json.dumps(biquiver_to_obj(g), sort_keys=True, separators=(",", ":"))
