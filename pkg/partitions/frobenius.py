import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from commuting.graphs import commuting_graph
from groups.exceptions import NotASubgroup
from groups.subgroups import Subgroup, make_subgroup
from groups.tables import GroupTable
from partitions.exceptions import AbelianInput
from spectra.expressions import Complete, Empty, Join, Union
from spectra.laplacian import kappa_from_spectrum, spectrum
from treecount.enums import KappaMethod
from treecount.factors import factor_product
from treecount.results import KappaResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrobeniusKernel:
    kernel: Subgroup
    kappa: KappaResult
    model: str


def frobenius_empty_complement(G: GroupTable) -> Optional[FrobeniusKernel]:
    """
    The kernel H is the set of elements of odd order. When it is a subgroup of index 2 whose complement
    induces no commuting pair, C(G) is K1 joined with (K_{h-1} plus h isolated vertices) and kappa(G) = h^(h-2).
    """
    if G.is_abelian:
        raise AbelianInput(f'{G.name} is abelian')
    odd = [x for x in range(G.order) if G.element_orders[x] % 2]
    if 2 * len(odd) != G.order:
        return None
    try:
        H = make_subgroup(G, odd)
    except NotASubgroup:
        return None

    outside = np.flatnonzero(~H.mask(G.order))
    complement = G.commutes[np.ix_(outside, outside)]
    if complement.sum() != len(outside):
        logger.debug(f'{G.name}: two elements outside the odd-order subgroup commute')
        return None

    h = H.order
    if not H.is_abelian or not (G.element_orders[outside] == 2).all():
        logger.error(f'{G.name}: empty complement without an abelian kernel and involutions outside it')
        return None
    graph = commuting_graph(G)
    inside = np.asarray(H.elements[1:], dtype=np.int64)
    if (graph.degrees[outside] != 1).any() or (graph.degrees[inside] != h - 1).any():
        logger.error(f'{G.name}: commuting graph is not the expected join with the identity')
        return None

    model = Join(Complete(1), Union((Complete(h - 1), Empty(h))))
    value = kappa_from_spectrum(spectrum(model))
    kappa = KappaResult(
        value=value, method=KappaMethod.SPECTRUM, factors=factor_product([(h, h - 2)]), notes=('frobenius',),
    )
    logger.info(f'{G.name}: Frobenius with kernel of order {h}, kappa={value}')
    return FrobeniusKernel(kernel=H, kappa=kappa, model=str(model))
