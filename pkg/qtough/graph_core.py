"""Labeled simple graphs on bitset rows, constructors and combinatorial invariants."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from .config import ENUMERATION_LIMIT
from .errors import BudgetExceeded, InvalidParameters


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def count_components(rows: Sequence[int], alive: int) -> int:
    """Components of the subgraph induced by the vertices in `alive`."""
    count = 0
    remaining = alive
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= rows[v]
            frontier = reach & alive & ~comp
            comp |= frontier
        remaining &= ~comp
        count += 1
    return count


@dataclass(frozen=True)
class VertexSet:
    mask: int = 0

    @classmethod
    def of(cls, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if v < 0:
                raise InvalidParameters(f"negative vertex index {v}")
            mask |= 1 << v
        return cls(mask)

    def members(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; row v is the neighbour bitmask of vertex v.

    Equality is label-sensitive: same order, same adjacency.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidParameters(f"vertex count must be >= 0, got {self.n}")
        if self.n > ENUMERATION_LIMIT:
            raise BudgetExceeded("n", self.n, ENUMERATION_LIMIT)
        if len(self.rows) != self.n:
            raise InvalidParameters(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise InvalidParameters(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InvalidParameters(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise InvalidParameters(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if n > ENUMERATION_LIMIT:
            raise BudgetExceeded("n", n, ENUMERATION_LIMIT)
        rows = [0] * max(n, 0)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameters(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameters(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(iter_bits(self.rows[v]))

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.rows[u] >> v & 1]

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise InvalidParameters(f"loop at vertex {u}")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """New vertex i is old vertex order[i]."""
        if sorted(order) != list(range(self.n)):
            raise InvalidParameters("relabel order must be a permutation of the vertex set")
        position = {old: new for new, old in enumerate(order)}
        rows = []
        for old in order:
            row = 0
            for u in iter_bits(self.rows[old]):
                row |= 1 << position[u]
            rows.append(row)
        return Graph(self.n, tuple(rows))

    def is_spanning_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and all(mine & ~theirs == 0 for mine, theirs in zip(self.rows, other.rows))


def make_empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def make_complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameters(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.rows + tuple(row << shift for row in g2.rows))


def copies(t: int, g: Graph) -> Graph:
    if t < 0:
        raise InvalidParameters(f"copy count must be >= 0, got {t}")
    return reduce(disjoint_union, [g] * t, make_empty(0))


def join(g1: Graph, g2: Graph) -> Graph:
    """g1 occupies indices 0..n1-1, g2 follows."""
    shift = g1.n
    side2 = ((1 << g2.n) - 1) << shift
    rows = tuple(row | side2 for row in g1.rows) + tuple((row << shift) | g1.full_mask for row in g2.rows)
    return Graph(g1.n + g2.n, rows)


def remove_vertices(g: Graph, s: VertexSet) -> Graph:
    if s.mask & ~g.full_mask:
        raise InvalidParameters(f"vertex set {list(s)} is not inside 0..{g.n - 1}")
    survivors = [v for v in range(g.n) if v not in s]
    position = {old: new for new, old in enumerate(survivors)}
    rows = []
    for old in survivors:
        row = 0
        for u in iter_bits(g.rows[old] & ~s.mask):
            row |= 1 << position[u]
        rows.append(row)
    return Graph(len(survivors), tuple(rows))


def components_count(g: Graph) -> int:
    return count_components(g.rows, g.full_mask)


def isolated_count(g: Graph) -> int:
    return sum(1 for row in g.rows if row == 0)


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and components_count(g) == 1


def independence_number(g: Graph, limit: int = ENUMERATION_LIMIT) -> int:
    """Exact alpha(G) by branch and bound on a max-degree vertex."""
    if g.n > limit:
        raise BudgetExceeded("n", g.n, limit)
    rows = g.rows
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        remaining = cand.bit_count()
        if size + remaining <= best:
            return
        if remaining == 0:
            best = size
            return
        v, deg = max(((u, (rows[u] & cand).bit_count()) for u in iter_bits(cand)), key=lambda t: t[1])
        if deg == 0:
            best = size + remaining
            return
        expand(cand & ~(1 << v) & ~rows[v], size + 1)
        expand(cand & ~(1 << v), size)

    expand(g.full_mask, 0)
    return best


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def canonical_order(g: Graph, iterations: int = 3) -> List[int]:
    """Vertex order by (degree desc, WL node hash); ties keep original order.

    Isomorphic copies of graphs whose same-key vertices are twins map to the
    same labeled graph; anything else may still differ.
    """
    hashes = nx.weisfeiler_lehman_subgraph_hashes(to_networkx(g), iterations=iterations)
    degrees = g.degrees()

    def key(v: int) -> Tuple[int, str, int]:
        h = hashes.get(v) or [""]
        return (-degrees[v], h[-1], v)

    return sorted(range(g.n), key=key)


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_order(g))
