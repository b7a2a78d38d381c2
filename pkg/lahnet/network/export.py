"""DOT, JSON and plain-text renderings of a Network; all deterministic."""
from typing import Optional

import graphviz

from lahnet.network.models import (
    Edge,
    EdgeDocument,
    EdgeKind,
    Network,
    NetworkDocument,
    Vertex,
    VertexDocument,
)
from lahnet.utils.errors import NetworkError


def to_dot(network: Network, name: Optional[str] = None) -> str:
    """DOT digraph with weight labels; sources and sinks pinned to their own ranks."""
    dot = graphviz.Digraph(name=name or f"N{network.n}")
    dot.attr(rankdir="LR")

    with dot.subgraph(name="sources") as sources:
        sources.attr(rank="source")
        for v in network.sources:
            sources.node(v, label=network.label(v), shape="circle")

    with dot.subgraph(name="sinks") as sinks:
        sinks.attr(rank="sink")
        for v in network.sinks:
            sinks.node(v, label=network.label(v), shape="doublecircle")

    terminals = set(network.sources) | set(network.sinks)
    for vertex in network.vertices:
        if vertex.id not in terminals:
            dot.node(vertex.id, label=vertex.display, shape="point")

    for edge in network.edges:
        dot.edge(edge.tail, edge.head, label=str(edge.weight))

    return dot.source


def to_document(network: Network) -> NetworkDocument:
    return NetworkDocument(
        n=network.n,
        vertices=[VertexDocument(id=v.id, label=v.display) for v in network.vertices],
        edges=[
            EdgeDocument(tail=e.tail, head=e.head, weight=e.weight, kind=e.kind.value)
            for e in network.edges
        ],
        sources=list(network.sources),
        sinks=list(network.sinks),
    )


def to_json(network: Network) -> str:
    return to_document(network).to_json()


def from_json(text: str) -> Network:
    document = NetworkDocument.model_validate_json(text)
    network = Network(
        tuple(Vertex(v.id, v.label) for v in document.vertices),
        tuple(Edge(e.tail, e.head, e.weight, EdgeKind(e.kind)) for e in document.edges),
        tuple(document.sources),
        tuple(document.sinks),
    )
    if network.n != document.n:
        raise NetworkError(f"document declares n={document.n} but lists {network.n} sources")
    return network


def to_text(network: Network) -> str:
    """One line per edge: "tail -> head (weight)"."""
    lines = [f"N{network.n}: {len(network.vertices)} vertices, {len(network.edges)} edges"]
    lines.extend(f"{e.tail} -> {e.head} ({e.weight})" for e in network.edges)
    return "\n".join(lines)
