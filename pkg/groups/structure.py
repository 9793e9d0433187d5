import logging
from dataclasses import dataclass

import numpy as np

from groups.subgroups import Subgroup, is_abelian_set, make_subgroup
from groups.tables import GroupTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupProfile:
    order: int
    center: tuple
    class_count: int
    class_sizes: tuple
    element_order_spectrum: tuple
    max_spectrum: tuple
    centralizer_count: int
    is_ac: bool

    @property
    def center_size(self) -> int:
        return len(self.center)


def center(G: GroupTable) -> Subgroup:
    return Subgroup(elements=G.center, is_normal=True, is_abelian=True)


def centralizer(G: GroupTable, x: int) -> Subgroup:
    return make_subgroup(G, np.flatnonzero(G.commutes[x]).tolist())


def class_count(G: GroupTable) -> int:
    return len(G.conjugacy_classes)


def noncentral_centralizers(G: GroupTable) -> list[np.ndarray]:
    """Element indices of each distinct centralizer of a noncentral element, by least representative."""
    return [
        np.flatnonzero(G.commutes[x]) for x in G.centralizer_representatives if not G.center_mask[x]
    ]


def is_ac_group(G: GroupTable) -> bool:
    for members in noncentral_centralizers(G):
        if not is_abelian_set(G, members):
            return False
    return True


def maximal_divisors(values) -> tuple:
    values = sorted(set(values))
    return tuple(v for v in values if not any(w != v and w % v == 0 for w in values))


def profile(G: GroupTable) -> GroupProfile:
    orders = G.element_orders.tolist()
    classes = G.conjugacy_classes
    result = GroupProfile(
        order=G.order,
        center=G.center,
        class_count=len(classes),
        class_sizes=tuple(sorted({len(c) for c in classes})),
        element_order_spectrum=tuple(sorted(set(orders))),
        max_spectrum=maximal_divisors(orders),
        centralizer_count=len(G.centralizer_representatives),
        is_ac=is_ac_group(G),
    )
    logger.info(f'Profiled {G.name}: k={result.class_count} m={result.center_size} #Cent={result.centralizer_count}')
    return result
