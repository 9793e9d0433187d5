import logging
from collections import Counter

import numpy as np

from commuting.exceptions import NotACGroup, NotMaximumWitness
from commuting.independence import NoncommutingSet
from groups.structure import is_ac_group, noncentral_centralizers
from groups.subgroups import Subgroup, make_subgroup
from groups.tables import GroupTable

logger = logging.getLogger(__name__)


def centralizer_core(G: GroupTable, S: NoncommutingSet) -> Subgroup:
    """Intersection of the centralizers of the elements of S."""
    members = G.commutes[list(S.elements)].all(axis=0) if S.elements else np.ones(G.order, dtype=bool)
    return make_subgroup(G, np.flatnonzero(members).tolist())


def centralizer_core_abelian(G: GroupTable, S: NoncommutingSet) -> bool:
    if not S.is_maximum:
        raise NotMaximumWitness('The noncommuting set is a lower bound, not a certified maximum')
    elements = list(S.elements)
    block = G.commutes[np.ix_(elements, elements)]
    if block.sum() != len(elements):
        raise NotMaximumWitness('The witness contains two commuting elements')
    core = centralizer_core(G, S)
    logger.debug(f'{G.name}: centralizer core of a maximum noncommuting set has order {core.order}')
    return core.is_abelian


def centralizer_blocks(G: GroupTable) -> list[tuple]:
    """
    C_G(x) minus Z(G) for each distinct noncentral centralizer, by least element. For an AC-group these are the
    cliques of the noncentral commuting graph.
    """
    if not is_ac_group(G):
        raise NotACGroup(f'{G.name} has a nonabelian centralizer of a noncentral element')
    center = G.center_mask
    return [tuple(x for x in members.tolist() if not center[x]) for members in noncentral_centralizers(G)]


def centralizer_decomposition(G: GroupTable) -> list[tuple]:
    """(block size, multiplicity) pairs, block size descending. The block count t is the sum of multiplicities."""
    counts = Counter(len(block) for block in centralizer_blocks(G))
    decomposition = sorted(counts.items(), reverse=True)
    logger.info(
        f'{G.name}: t={sum(counts.values())} blocks '
        + ', '.join(f'{size}x{count}' for size, count in decomposition)
    )
    return decomposition


def block_count(G: GroupTable) -> int:
    """Distinct centralizers of noncentral elements; defined for every group."""
    return sum(1 for x in G.centralizer_representatives if not G.center_mask[x])

