"""Graph utilities built on networkx: graphic matroids and support graphs."""

import networkx as nx

from mfrag.matroid import Matroid, bits

__author__ = "The mfrag developers"
__email__ = "mfrag@users.noreply.github.com"

__all__ = [
    "graphic_matroid",
    "support_graph",
    "element_graph",
    "components",
    "spanning_forest_edges",
]


def graphic_matroid(edges, name=None):
    """
    The cycle matroid of a multigraph.

    :param edges: Sequence of ``(u, v, label)`` triples; the labels become the
        ground set in the given order. Parallel edges and loops are allowed.
    :param name: Optional display name.
    """
    g = nx.MultiGraph()
    labels = []
    for u, v, label in edges:
        g.add_edge(u, v, key=label)
        labels.append(str(label))
    endpoints = [(u, v) for u, v, _ in edges]

    def rank_of(mask):
        sub = nx.MultiGraph()
        sub.add_nodes_from(g.nodes)
        for i in bits(mask):
            sub.add_edge(*endpoints[i])
        return sub.number_of_nodes() - nx.number_connected_components(sub)

    return Matroid.from_rank_function(labels, rank_of, name=name)


def support_graph(matrix):
    """
    Bipartite graph on the row and column labels of a matrix with an edge for
    every non-zero entry.

    Node and edge insertion follows the stored label order so traversals are
    deterministic.
    """
    g = nx.Graph()
    for x in matrix.rows:
        g.add_node(x, bipartite=0)
    for y in matrix.cols:
        g.add_node(y, bipartite=1)
    for x in matrix.rows:
        for y in matrix.cols:
            if not matrix.entry(x, y).is_zero():
                g.add_edge(x, y)
    return g


def element_graph(matroid):
    """
    Graph on the ground set joining elements that share a circuit.

    Its connected components are the connected components of the matroid.
    """
    g = nx.Graph()
    g.add_nodes_from(matroid.ground)
    for c in sorted(matroid.circuit_masks()):
        members = list(bits(c))
        first = matroid.ground[members[0]]
        for i in members[1:]:
            g.add_edge(first, matroid.ground[i])
    return g


def components(matroid):
    """Connected components as label sets, ordered by their first element."""
    g = element_graph(matroid)
    found = [frozenset(c) for c in nx.connected_components(g)]
    return sorted(found, key=lambda c: min(matroid.index(e) for e in c))


def spanning_forest_edges(g, roots):
    """
    BFS tree edges of every component, each rooted at the first node of
    ``roots`` lying in it (or its first node otherwise).
    """
    edges = []
    seen = set()
    ordered_roots = [r for r in roots if r in g] + list(g.nodes)
    for root in ordered_roots:
        if root in seen:
            continue
        component = nx.node_connected_component(g, root)
        seen.update(component)
        edges.append((root, list(nx.bfs_edges(g, root))))
    return edges
