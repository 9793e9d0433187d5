"""
Independence number of a commuting graph, as a maximum clique of its complement.

Branch and bound over Python int bitsets: candidates are greedily coloured, a colour class being a set of
pairwise non-adjacent vertices of the complement, so the number of colours bounds the clique that can still
be added. Vertices are relabelled by decreasing complement degree before the search.
"""
import logging
from dataclasses import dataclass

from django.conf import settings

from commuting.exceptions import TooLargeForExact
from commuting.graphs import SimpleGraph, iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoncommutingSet:
    elements: tuple
    is_maximum: bool

    @property
    def size(self) -> int:
        return len(self.elements)


def greedy_independent_set(graph: SimpleGraph) -> list[int]:
    """Positions picked by repeatedly taking the vertex of least remaining degree."""
    remaining = (1 << graph.size) - 1
    chosen = []
    while remaining:
        best = min(iter_bits(remaining), key=lambda i: ((graph.bitsets[i] & remaining).bit_count(), i))
        chosen.append(best)
        remaining &= ~(graph.bitsets[best] | (1 << best))
    return sorted(chosen)


def _colour_classes(candidates: int, neighbours: list) -> list[tuple]:
    """(vertex, colour) pairs in non-decreasing colour order."""
    ordered = []
    colour = 0
    uncoloured = candidates
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            v = (available & -available).bit_length() - 1
            available &= ~(neighbours[v] | (1 << v))
            uncoloured &= ~(1 << v)
            ordered.append((v, colour))
    return ordered


def _maximum_clique(neighbours: list, seed: list) -> list:
    best = list(seed)

    def expand(clique: list, candidates: int):
        nonlocal best
        for v, colour in reversed(_colour_classes(candidates, neighbours)):
            if len(clique) + colour <= len(best):
                return
            clique.append(v)
            narrowed = candidates & neighbours[v]
            if narrowed:
                expand(clique, narrowed)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            candidates &= ~(1 << v)

    expand([], (1 << len(neighbours)) - 1)
    return best


def independence_number(graph: SimpleGraph, strict: bool = False) -> NoncommutingSet:
    """
    Maximum independent set of the graph, named by vertex names. Above INDEPENDENCE_EXACT_CAP vertices the
    greedy set is returned with is_maximum False, or TooLargeForExact is raised when strict.
    """
    n = graph.size
    greedy = greedy_independent_set(graph)
    if n > settings.INDEPENDENCE_EXACT_CAP:
        lower_bound = NoncommutingSet(elements=tuple(sorted(graph.vertices[i] for i in greedy)), is_maximum=False)
        if strict:
            raise TooLargeForExact(n, settings.INDEPENDENCE_EXACT_CAP, lower_bound=lower_bound)
        logger.warning(f'{n} vertices is above the exact cap; returning a greedy lower bound of {lower_bound.size}')
        return lower_bound

    full = (1 << n) - 1
    complement = [full & ~(graph.bitsets[i] | (1 << i)) for i in range(n)]
    order = sorted(range(n), key=lambda i: (-complement[i].bit_count(), i))
    position = {v: i for i, v in enumerate(order)}
    relabelled = [sum(1 << position[u] for u in iter_bits(complement[v])) for v in order]

    found = _maximum_clique(relabelled, [position[v] for v in greedy])
    elements = tuple(sorted(graph.vertices[order[i]] for i in found))
    logger.debug(f'Independence number {len(elements)} on {n} vertices (greedy gave {len(greedy)})')
    return NoncommutingSet(elements=elements, is_maximum=True)
