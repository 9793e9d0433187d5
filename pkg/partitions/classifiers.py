"""
Structural tests for groups with 2- and 3-abelian partitions, each with the partition it guarantees.

A nonabelian group has a 2-abelian partition exactly when it is P x Q with P a Sylow 2-subgroup, P/Z(P) of
order 4 and Q abelian. It has a 3-abelian partition exactly when |Z(G)| >= 2 and G/Z(G) is Z2xZ2, Z3xZ3 or S3.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from groups.enums import SmallTarget
from groups.exceptions import NotASubgroup
from groups.structure import center
from groups.subgroups import (
    Subgroup, is_isomorphic_small, make_subgroup, quotient, subgroup_generated, subgroup_table, sylow_subgroups,
)
from groups.tables import GroupTable
from partitions.certificates import PartitionCertificate, center_cosets, certify, coset_partition
from partitions.enums import ThreeAbelianCase
from partitions.exceptions import AbelianInput, PartitionError

logger = logging.getLogger(__name__)

THREE_ABELIAN_QUOTIENTS = (
    (ThreeAbelianCase.KLEIN, SmallTarget.Z2xZ2),
    (ThreeAbelianCase.ELEMENTARY_NINE, SmallTarget.Z3xZ3),
    (ThreeAbelianCase.SYMMETRIC, SmallTarget.S3),
)


@dataclass(frozen=True)
class TwoAbelianWitness:
    holds: bool
    reason: str = ''
    sylow: Optional[Subgroup] = None
    complement: Optional[Subgroup] = None
    A: Optional[Subgroup] = None
    certificate: Optional[PartitionCertificate] = None

    def __bool__(self):
        return self.holds


def _require_nonabelian(G: GroupTable):
    if G.is_abelian:
        raise AbelianInput(f'{G.name} is abelian')


def classify_2_abelian(G: GroupTable) -> TwoAbelianWitness:
    """
    Q is taken to be the set of elements of odd order. The witness A is <Z(G), t> for the first noncentral t,
    which need not be an involution (Q8 has none outside its centre); t^2 lies in Z(G) either way.
    """
    _require_nonabelian(G)
    if G.order % 2:
        return TwoAbelianWitness(holds=False, reason=f'{G.name} has odd order')
    sylows = sylow_subgroups(G, 2)
    if len(sylows) > 1:
        return TwoAbelianWitness(holds=False, reason=f'{len(sylows)} Sylow 2-subgroups; none is a direct factor')
    P = sylows[0]

    odd = [x for x in range(G.order) if G.element_orders[x] % 2]
    try:
        Q = make_subgroup(G, odd)
    except NotASubgroup:
        return TwoAbelianWitness(holds=False, sylow=P, reason='Elements of odd order do not form a subgroup')
    if not (Q.is_abelian and Q.is_normal) or P.order * Q.order != G.order:
        return TwoAbelianWitness(holds=False, sylow=P, reason='No abelian normal complement to the Sylow 2-subgroup')

    P_table = subgroup_table(G, P)
    P_center = center(P_table)
    if P.order != 4 * P_center.order or not is_isomorphic_small(quotient(P_table, P_center), SmallTarget.Z2xZ2):
        return TwoAbelianWitness(
            holds=False, sylow=P, complement=Q, reason=f'P/Z(P) has order {P.order // P_center.order}, not Z2xZ2',
        )

    t = next(x for x in range(G.order) if not G.center_mask[x])
    A = subgroup_generated(G, G.center + (t,))
    cert = certify(G, A.elements, [coset for coset in center_cosets(G) if coset[0] not in A])
    logger.info(f'{G.name}: 2-abelian with |P|={P.order}, |Q|={Q.order}, |A|={A.order}')
    return TwoAbelianWitness(holds=True, sylow=P, complement=Q, A=A, certificate=cert)


def classify_3_abelian(G: GroupTable) -> Optional[str]:
    _require_nonabelian(G)
    m = len(G.center)
    if m < 2 or G.order // m > 9:
        return None
    factor = quotient(G, center(G))
    for case, target in THREE_ABELIAN_QUOTIENTS:
        if is_isomorphic_small(factor, target):
            logger.debug(f'{G.name}: G/Z is {target}, 3-abelian case ({case})')
            return case
    return None


def three_abelian_partition(G: GroupTable, case: str = None) -> PartitionCertificate:
    """
    Case (a) is the coset partition. In cases (b) and (c) A = <Z, x> with Zx of order 3 in G/Z; the blocks are
    <Z, y> - Z for the other subgroups of order 3 in case (b) and the remaining cosets in case (c).
    """
    case = case or classify_3_abelian(G)
    if case is None:
        raise PartitionError(f'{G.name} has no 3-abelian partition')
    if case == ThreeAbelianCase.KLEIN:
        return coset_partition(G)

    factor = quotient(G, center(G))
    x = next(q for q in range(factor.order) if factor.element_orders[q] == 3)
    cyclic = {0, x, factor.multiply(x, x)}
    A = [g for q in sorted(cyclic) for g in factor.elements[q]]

    blocks = []
    seen = set(cyclic)
    for q in range(factor.order):
        if q in seen:
            continue
        seen.add(q)
        block = list(factor.elements[q])
        if case == ThreeAbelianCase.ELEMENTARY_NINE:
            square = factor.multiply(q, q)
            seen.add(square)
            block.extend(factor.elements[square])
        blocks.append(block)
    return certify(G, A, blocks)
