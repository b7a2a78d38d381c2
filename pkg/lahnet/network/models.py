import enum
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel

from lahnet.utils.errors import DimensionError, NetworkError
from lahnet.utils.reports import BigInt, ReportModel


# ===== ENUMS =====
class EdgeKind(enum.Enum):
    STUB = "stub"
    HORIZONTAL = "horizontal"
    DIAGONAL = "diagonal"
    OTHER = "other"


# ===== VALUES =====
@dataclass(frozen=True)
class Vertex:
    id: str
    label: str = ""

    @property
    def display(self) -> str:
        return self.label or self.id


@dataclass(frozen=True)
class Edge:
    tail: str
    head: str
    weight: int
    kind: EdgeKind = EdgeKind.OTHER


@dataclass(frozen=True)
class Path:
    """Vertex sequence from a source to a sink."""

    vertices: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    @property
    def edges(self) -> List[Tuple[str, str]]:
        return list(zip(self.vertices, self.vertices[1:]))

    def __str__(self) -> str:
        return " -> ".join(self.vertices)


@dataclass(frozen=True)
class Network:
    """Acyclic weighted digraph with ordered sources a_1..a_n and sinks b_1..b_n.

    Validated on construction: unique vertex ids, edges between known
    vertices with integer weights >= 1, sources of in-degree 0, sinks of
    out-degree 0, and no directed cycle. Planarity is a property of the
    builders, not something checked here.
    """

    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    sources: Tuple[str, ...]
    sinks: Tuple[str, ...]
    _graph: nx.DiGraph = field(init=False, repr=False, compare=False)
    _order: Tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("vertices", "edges", "sources", "sinks"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

        graph = nx.DiGraph()
        position: Dict[str, int] = {}
        for vertex in self.vertices:
            if vertex.id in position:
                raise NetworkError(f"duplicate vertex id {vertex.id!r}", vertex=vertex.id)
            position[vertex.id] = len(position)
            graph.add_node(vertex.id, label=vertex.display)

        for edge in self.edges:
            for end in (edge.tail, edge.head):
                if end not in position:
                    raise NetworkError(f"edge {edge.tail}->{edge.head} uses unknown vertex {end!r}", vertex=end)
            if isinstance(edge.weight, bool) or not isinstance(edge.weight, int) or edge.weight < 1:
                raise NetworkError(
                    f"edge {edge.tail}->{edge.head} has weight {edge.weight!r}; weights must be integers >= 1",
                    tail=edge.tail,
                    head=edge.head,
                )
            if graph.has_edge(edge.tail, edge.head):
                raise NetworkError(f"duplicate edge {edge.tail}->{edge.head}", tail=edge.tail, head=edge.head)
            graph.add_edge(edge.tail, edge.head, weight=edge.weight, kind=edge.kind)

        if len(self.sources) != len(self.sinks):
            raise NetworkError(
                f"{len(self.sources)} sources but {len(self.sinks)} sinks",
                sources=len(self.sources),
                sinks=len(self.sinks),
            )
        for role, terminals in (("source", self.sources), ("sink", self.sinks)):
            if len(set(terminals)) != len(terminals):
                raise NetworkError(f"duplicate {role} in {list(terminals)}")
            for v in terminals:
                if v not in position:
                    raise NetworkError(f"{role} {v!r} is not a vertex", vertex=v)
        for v in self.sources:
            if graph.in_degree(v):
                raise NetworkError(f"source {v} has incoming edges", vertex=v)
        for v in self.sinks:
            if graph.out_degree(v):
                raise NetworkError(f"sink {v} has outgoing edges", vertex=v)

        if not nx.is_directed_acyclic_graph(graph):
            cycle = nx.find_cycle(graph)
            raise NetworkError("network has a directed cycle", cycle=[list(e) for e in cycle])

        order = tuple(nx.lexicographical_topological_sort(graph, key=position.__getitem__))
        object.__setattr__(self, "_graph", nx.freeze(graph))
        object.__setattr__(self, "_order", order)

    # ===== ACCESS =====
    @property
    def n(self) -> int:
        return len(self.sources)

    @property
    def graph(self) -> nx.DiGraph:
        """Frozen networkx view of the network."""
        return self._graph

    @property
    def topological_order(self) -> Tuple[str, ...]:
        return self._order

    def source(self, i: int) -> str:
        """a_i, 1-based."""
        self._check_terminal(i, "source")
        return self.sources[i - 1]

    def sink(self, j: int) -> str:
        """b_j, 1-based."""
        self._check_terminal(j, "sink")
        return self.sinks[j - 1]

    def _check_terminal(self, index: int, role: str) -> None:
        if isinstance(index, bool) or not isinstance(index, int) or not 1 <= index <= self.n:
            raise DimensionError(f"{role} index {index!r} outside 1..{self.n}", index=repr(index), bound=self.n)

    def successors(self, v: str) -> List[Tuple[str, int]]:
        """(head, weight) pairs in edge insertion order."""
        return [(head, data["weight"]) for head, data in self._graph.adj[v].items()]

    def edge(self, tail: str, head: str) -> Optional[Edge]:
        if not self._graph.has_edge(tail, head):
            return None
        data = self._graph.edges[tail, head]
        return Edge(tail, head, data["weight"], data["kind"])

    def edge_weight(self, tail: str, head: str) -> int:
        found = self.edge(tail, head)
        if found is None:
            raise NetworkError(f"no edge {tail}->{head}", tail=tail, head=head)
        return found.weight

    def label(self, v: str) -> str:
        return self._graph.nodes[v]["label"]

    def edges_of_kind(self, kind: EdgeKind) -> List[Edge]:
        return [e for e in self.edges if e.kind == kind]

    def with_weight(self, tail: str, head: str, weight: int) -> "Network":
        """Copy of the network with one edge reweighted."""
        self.edge_weight(tail, head)
        edges = [
            Edge(e.tail, e.head, weight, e.kind) if (e.tail, e.head) == (tail, head) else e
            for e in self.edges
        ]
        return Network(self.vertices, tuple(edges), self.sources, self.sinks)

    @classmethod
    def build(
        cls,
        vertices: Sequence[Tuple[str, str]],
        edges: Sequence[Tuple[str, str, int]],
        sources: Sequence[str],
        sinks: Sequence[str],
    ) -> "Network":
        """Convenience constructor from plain (id, label) and (tail, head, weight) tuples."""
        return cls(
            tuple(Vertex(v, label) for v, label in vertices),
            tuple(Edge(t, h, w) for t, h, w in edges),
            tuple(sources),
            tuple(sinks),
        )


# ===== DOCUMENTS =====
class VertexDocument(BaseModel):
    id: str
    label: str


class EdgeDocument(BaseModel):
    tail: str
    head: str
    weight: BigInt
    kind: str = EdgeKind.OTHER.value


class NetworkDocument(ReportModel):
    """JSON form of a Network; order of every list is the construction order."""

    n: int
    vertices: List[VertexDocument]
    edges: List[EdgeDocument]
    sources: List[str]
    sinks: List[str]


class CellDifference(BaseModel):
    row: int
    col: int
    expected: BigInt
    actual: BigInt


class TheoremCheck(ReportModel):
    """Weight matrix of a network compared entrywise with a closed-form triangle."""

    n: int
    expected: str
    equal: bool
    first_difference: Optional[CellDifference] = None
