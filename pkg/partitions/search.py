"""
Minimum n-abelian partitions.

The exact search deepens n from the class-count lower bound. For each n it tries every abelian subgroup A in
canonical order and asks whether G - A splits into at most n commuting blocks of size two or more. The block
holding the least uncovered element is branched on first, larger cliques before smaller ones. Branches are cut
when a greedy noncommuting set of what is left needs more blocks than remain, or when some element is left with
no commuting partner. Failed (remaining, budget) pairs are remembered across subgroups.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from django.conf import settings

from commuting.graphs import commuting_graph, iter_bits
from groups.subgroups import abelian_subgroups, maximal_abelian_subgroups
from groups.tables import GroupTable
from partitions.bounds import lower_bound_blocks
from partitions.certificates import PartitionCertificate, certify, coset_partition
from partitions.enums import SearchMode, SearchOutcome
from partitions.exceptions import AbelianInput, CenterTooSmall, IndexTooSmall
from treecount.exceptions import ExactCapExceeded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartitionSearchResult:
    outcome: str
    mode: str
    lower_bound: int
    certificate: Optional[PartitionCertificate] = None
    message: str = ''

    @property
    def found(self) -> bool:
        return self.outcome == SearchOutcome.FOUND


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _has_isolated(bitsets: tuple, remaining: int) -> bool:
    return any(not bitsets[v] & remaining for v in iter_bits(remaining))


def _noncommuting_bound(bitsets: tuple, remaining: int) -> int:
    """Size of a greedy noncommuting subset; its elements need pairwise distinct blocks."""
    count = 0
    while remaining:
        v = min(iter_bits(remaining), key=lambda i: ((bitsets[i] & remaining).bit_count(), i))
        remaining &= ~(bitsets[v] | (1 << v))
        count += 1
    return count


def _cliques_with(v: int, candidates: int, bitsets: tuple) -> list[int]:
    """Every clique of size >= 2 made of v and elements of candidates, larger cliques first."""
    found = []

    def grow(clique: int, pool: int):
        found.append(clique)
        while pool:
            u = _lowest(pool)
            pool &= pool - 1
            grow(clique | (1 << u), pool & bitsets[u])

    grow(1 << v, candidates)
    return sorted(found[1:], key=lambda clique: (-clique.bit_count(), clique))


class CliquePartitioner:

    def __init__(self, bitsets: tuple):
        self.bitsets = bitsets
        # remaining -> largest budget known not to suffice
        self.infeasible = {}

    def partition(self, remaining: int, budget: int) -> Optional[list[int]]:
        """At most `budget` disjoint cliques of size >= 2 covering `remaining`, or None."""
        if not remaining:
            return []
        if budget <= 0 or self.infeasible.get(remaining, 0) >= budget:
            return None
        if _noncommuting_bound(self.bitsets, remaining) > budget:
            self.infeasible[remaining] = budget
            return None

        v = _lowest(remaining)
        for clique in _cliques_with(v, self.bitsets[v] & remaining, self.bitsets):
            rest = remaining & ~clique
            if _has_isolated(self.bitsets, rest):
                continue
            found = self.partition(rest, budget - 1)
            if found is not None:
                return [clique] + found
        self.infeasible[remaining] = max(budget, self.infeasible.get(remaining, 0))
        return None


def _mask(elements) -> int:
    return sum(1 << x for x in elements)


def _exact(G: GroupTable, n_max: Optional[int], lower_bound: int) -> PartitionSearchResult:
    cap = settings.PARTITION_EXACT_CAP
    if G.order > cap:
        raise ExactCapExceeded(
            G.order, cap, message=f'{G.name} has order {G.order}; exact partition search stops at order {cap}',
        )
    bitsets = commuting_graph(G).bitsets
    full = (1 << G.order) - 1

    candidates = []
    for A in abelian_subgroups(G):
        rest = full & ~_mask(A.elements)
        if rest and not _has_isolated(bitsets, rest):
            candidates.append((A, rest))
    limit = max((rest.bit_count() // 2 for _, rest in candidates), default=0)
    if n_max is not None:
        limit = min(limit, n_max)
    logger.info(f'{G.name}: exact partition search over {len(candidates)} abelian subgroups, n up to {limit}')

    partitioner = CliquePartitioner(bitsets)
    for n in range(max(2, lower_bound), limit + 1):
        for A, rest in candidates:
            blocks = partitioner.partition(rest, n)
            if blocks is None:
                continue
            cert = certify(G, A.elements, [list(iter_bits(block)) for block in blocks])
            logger.info(f'{G.name}: minimum partition has n={cert.n} with |A|={len(cert.A)}')
            return PartitionSearchResult(
                outcome=SearchOutcome.FOUND, mode=SearchMode.EXACT, lower_bound=lower_bound, certificate=cert,
            )
        logger.debug(f'{G.name}: no partition with {n} blocks')

    bound = f' with n <= {n_max}' if n_max is not None else ''
    return PartitionSearchResult(
        outcome=SearchOutcome.NOT_FOUND,
        mode=SearchMode.EXACT,
        lower_bound=lower_bound,
        message=f'{G.name} has no abelian partition{bound}',
    )


def greedy_cover(G: GroupTable, A, covers: list) -> Optional[list[list[int]]]:
    """
    One block per cover subgroup, minus what is already covered. A leftover single element joins the first block
    it commutes with entirely; None when one has nowhere to go.
    """
    covered = A.mask(G.order)
    blocks = []
    singles = []
    for M in covers:
        block = [x for x in M.elements if not covered[x]]
        if not block:
            continue
        covered[block] = True
        if len(block) == 1:
            singles.append(block[0])
        else:
            blocks.append(block)
    for x in singles:
        home = next((block for block in blocks if G.commutes[x, block].all()), None)
        if home is None:
            return None
        home.append(x)
    return blocks


def _heuristic(G: GroupTable, n_max: Optional[int], lower_bound: int) -> PartitionSearchResult:
    covers = maximal_abelian_subgroups(G)
    best = None
    for A in covers:
        blocks = greedy_cover(G, A, covers)
        if blocks is None:
            continue
        cert = certify(G, A.elements, blocks)
        if cert.verified and (best is None or cert.n < best.n):
            best = cert
    try:
        cosets = coset_partition(G)
        if best is None or cosets.n < best.n:
            best = cosets
    except (CenterTooSmall, IndexTooSmall):
        pass

    if best is None or (n_max is not None and best.n > n_max):
        found = f'; the best cover has n={best.n}' if best else ''
        within = f' within n <= {n_max}' if n_max is not None else ''
        return PartitionSearchResult(
            outcome=SearchOutcome.INCONCLUSIVE,
            mode=SearchMode.HEURISTIC,
            lower_bound=lower_bound,
            message=f'No partition of {G.name} found by the greedy cover{within}{found}',
        )
    logger.info(f'{G.name}: greedy cover gives n={best.n} with |A|={len(best.A)}')
    return PartitionSearchResult(
        outcome=SearchOutcome.FOUND, mode=SearchMode.HEURISTIC, lower_bound=lower_bound, certificate=best,
    )


def find_partition(G: GroupTable, mode: str = SearchMode.EXACT, n_max: int = None) -> PartitionSearchResult:
    if G.is_abelian:
        raise AbelianInput(f'{G.name} is abelian; partitions are defined for nonabelian groups')
    lower_bound = lower_bound_blocks(G)
    if SearchMode(mode) == SearchMode.EXACT:
        return _exact(G, n_max, lower_bound)
    return _heuristic(G, n_max, lower_bound)
