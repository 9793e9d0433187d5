import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import networkx as nx
import numpy as np

from commuting.exceptions import CommutingError, InvalidSubset
from groups.tables import GroupTable

logger = logging.getLogger(__name__)


def _bits(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder='little').tobytes(), 'little')


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """
    Undirected loopless graph on positions 0..n-1. vertices[i] is the external name of position i
    (an element index for commuting graphs).
    """
    matrix: np.ndarray
    vertices: tuple

    def __post_init__(self):
        n = len(self.vertices)
        if self.matrix.shape != (n, n):
            raise CommutingError(f'Adjacency shape {self.matrix.shape} does not match {n} vertices')
        if self.matrix.diagonal().any() or not np.array_equal(self.matrix, self.matrix.T):
            raise CommutingError('Adjacency must be symmetric with an empty diagonal')

    def __repr__(self):
        return f'<{type(self).__name__} n={self.size} edges={self.edge_count}>'

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, vertices: Optional[Iterable] = None):
        matrix = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u != v:
                matrix[u, v] = matrix[v, u] = True
        return cls(matrix=matrix, vertices=tuple(range(n) if vertices is None else vertices))

    @property
    def size(self) -> int:
        return len(self.vertices)

    @cached_property
    def bitsets(self) -> tuple:
        """Neighbourhood of each position as a Python int."""
        return tuple(_bits(row) for row in self.matrix)

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.matrix.sum(axis=1)

    @property
    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    def neighbours(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.matrix[i])

    def edges(self):
        """Position pairs (u, v) with u < v in lexicographic order."""
        rows, columns = np.nonzero(np.triu(self.matrix, 1))
        return zip(rows.tolist(), columns.tolist())

    @cached_property
    def components(self) -> list[tuple]:
        remaining = (1 << self.size) - 1
        found = []
        while remaining:
            start = remaining & -remaining
            reached = frontier = start
            while frontier:
                grown = 0
                for i in iter_bits(frontier):
                    grown |= self.bitsets[i]
                frontier = grown & ~reached
                reached |= frontier
            found.append(tuple(iter_bits(reached)))
            remaining &= ~reached
        return found

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def laplacian(self) -> np.ndarray:
        return np.diag(self.degrees).astype(np.int64) - self.matrix.astype(np.int64)

    def is_clique(self, positions) -> bool:
        positions = list(positions)
        block = self.matrix[np.ix_(positions, positions)]
        return bool(block.sum() == len(positions) * (len(positions) - 1))


@dataclass(frozen=True, eq=False)
class CommGraph(SimpleGraph):
    """Commuting graph over a subset of a group; vertices are element indices."""
    group: Optional[GroupTable] = None

    @cached_property
    def position_of(self) -> dict:
        return {x: i for i, x in enumerate(self.vertices)}

    @property
    def spans_group(self) -> bool:
        return self.group is not None and self.size == self.group.order


def commuting_graph(G: GroupTable, X: Optional[Iterable[int]] = None) -> CommGraph:
    """C(X): distinct elements of X are adjacent when they commute. X defaults to the whole group."""
    vertices = np.arange(G.order) if X is None else np.unique(np.fromiter(X, dtype=np.int64))
    if len(vertices) and (vertices[0] < 0 or vertices[-1] >= G.order):
        raise InvalidSubset(f'Element indices must lie in 0..{G.order - 1}')
    matrix = G.commutes[np.ix_(vertices, vertices)].copy()
    np.fill_diagonal(matrix, False)
    graph = CommGraph(matrix=matrix, vertices=tuple(vertices.tolist()), group=G)
    if len(vertices) and vertices[0] == 0 and graph.degrees[0] != graph.size - 1:
        raise CommutingError(f'Identity is not universal in the commuting graph of {G.name}')
    logger.debug(f'Commuting graph of {G.name}: {graph.size} vertices, {graph.edge_count} edges')
    return graph


def noncentral_graph(G: GroupTable) -> CommGraph:
    return commuting_graph(G, np.flatnonzero(~G.center_mask).tolist())


def universal_vertices(graph: SimpleGraph) -> tuple:
    found = tuple(graph.vertices[i] for i in np.flatnonzero(graph.degrees == graph.size - 1))
    if isinstance(graph, CommGraph) and graph.spans_group and found != graph.group.center:
        logger.error(f'Universal vertices of {graph.group.name} differ from its center')
    return found


def to_networkx(graph: SimpleGraph) -> nx.Graph:
    result = nx.Graph()
    group = getattr(graph, 'group', None)
    for x in graph.vertices:
        if group is not None:
            result.add_node(x, label=group.labels[x])
        else:
            result.add_node(x)
    result.add_edges_from((graph.vertices[u], graph.vertices[v]) for u, v in graph.edges())
    return result


def write_edge_list(graph: SimpleGraph, path):
    """One "u v" line per edge, in vertex-name order."""
    nx.write_edgelist(to_networkx(graph), path, data=False)
    logger.info(f'Wrote {graph.edge_count} edges to {path}')
