import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np
from sympy import isprime, multiplicity

from groups.enums import SmallTarget
from groups.exceptions import BadParams, NotASubgroup, NotNormal, PDoesNotDivideOrder, TargetTooLarge, UnknownTarget
from groups.tables import GroupTable, group_from_table

logger = logging.getLogger(__name__)

SMALL_ISOMORPHISM_MAX_ORDER = 9


@dataclass(frozen=True)
class Subgroup:
    elements: tuple
    is_normal: bool
    is_abelian: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x):
        return x in self._members

    def __len__(self):
        return len(self.elements)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def mask(self, n: int) -> np.ndarray:
        result = np.zeros(n, dtype=bool)
        result[list(self.elements)] = True
        return result


def conjugates_matrix(G: GroupTable, elements: np.ndarray) -> np.ndarray:
    """Row g holds g h g^-1 for every h in elements."""
    return G.table[G.table[:, elements], G.inverses[:, None]]


def normalizer_mask(G: GroupTable, elements) -> np.ndarray:
    elements = np.asarray(elements, dtype=np.int64)
    members = np.zeros(G.order, dtype=bool)
    members[elements] = True
    return members[conjugates_matrix(G, elements)].all(axis=1)


def is_abelian_set(G: GroupTable, elements) -> bool:
    return bool(G.commutes[np.ix_(elements, elements)].all())


def _subgroup_from_mask(G: GroupTable, members: np.ndarray) -> Subgroup:
    elements = np.flatnonzero(members)
    return Subgroup(
        elements=tuple(elements.tolist()),
        is_normal=bool(normalizer_mask(G, elements).all()),
        is_abelian=is_abelian_set(G, elements),
    )


def make_subgroup(G: GroupTable, elements: Iterable[int]) -> Subgroup:
    members = np.zeros(G.order, dtype=bool)
    members[list(elements)] = True
    current = np.flatnonzero(members)
    if not members[0]:
        raise NotASubgroup('A subgroup must contain the identity')
    if not members[G.table[np.ix_(current, current)]].all():
        raise NotASubgroup('Element set is not closed under multiplication')
    return _subgroup_from_mask(G, members)


def subgroup_generated(G: GroupTable, elements: Iterable[int]) -> Subgroup:
    members = np.zeros(G.order, dtype=bool)
    members[0] = True
    members[list(elements)] = True
    while True:
        current = np.flatnonzero(members)
        grown = members.copy()
        grown[G.table[np.ix_(current, current)].ravel()] = True
        if grown.sum() == len(current):
            break
        members = grown
    return _subgroup_from_mask(G, members)


def whole_group(G: GroupTable) -> Subgroup:
    return Subgroup(elements=tuple(range(G.order)), is_normal=True, is_abelian=G.is_abelian)


def trivial_subgroup(G: GroupTable) -> Subgroup:
    return Subgroup(elements=(0,), is_normal=True, is_abelian=True)


def normalizer(G: GroupTable, H: Subgroup) -> Subgroup:
    return _subgroup_from_mask(G, normalizer_mask(G, H.elements))


def quotient(G: GroupTable, N: Subgroup) -> GroupTable:
    """Cayley table on the cosets gN, numbered by least representative (so N itself is 0)."""
    if not normalizer_mask(G, N.elements).all():
        raise NotNormal(f'Subgroup of order {N.order} is not normal in {G.name}')
    n = G.order
    coset_of = np.full(n, -1, dtype=np.int64)
    representatives = []
    cosets = []
    members = np.asarray(N.elements, dtype=np.int64)
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        coset = np.sort(G.table[g, members])
        coset_of[coset] = len(representatives)
        representatives.append(g)
        cosets.append(tuple(coset.tolist()))
    reps = np.asarray(representatives, dtype=np.int64)
    table = coset_of[G.table[np.ix_(reps, reps)]]
    return group_from_table(table, name=f'{G.name}/N{N.order}', elements=cosets)


def fingerprint(G: GroupTable) -> tuple:
    return G.order, G.is_abelian, tuple(sorted(G.element_orders.tolist()))


@lru_cache(maxsize=None)
def _target_fingerprint(target: str) -> tuple:
    from groups.families import make_family

    constructions = {
        SmallTarget.TRIVIAL: ('cyclic', {'n': 1}),
        SmallTarget.Z4: ('cyclic', {'n': 4}),
        SmallTarget.Z6: ('cyclic', {'n': 6}),
        SmallTarget.Z9: ('cyclic', {'n': 9}),
        SmallTarget.Z2xZ2: ('direct_product', {
            'left': {'family': 'cyclic', 'params': {'n': 2}},
            'right': {'family': 'cyclic', 'params': {'n': 2}},
        }),
        SmallTarget.Z3xZ3: ('direct_product', {
            'left': {'family': 'cyclic', 'params': {'n': 3}},
            'right': {'family': 'cyclic', 'params': {'n': 3}},
        }),
        SmallTarget.S3: ('symmetric', {'d': 3}),
    }
    family, params = constructions[SmallTarget(target)]
    return fingerprint(make_family(family, params))


def is_isomorphic_small(G: GroupTable, target: str) -> bool:
    """
    Order, commutativity and the multiset of element orders separate every pair of groups of order <= 9
    in the target list.
    """
    if target not in SmallTarget.values:
        raise UnknownTarget(f'Unknown target {target!r}; expected one of {", ".join(SmallTarget.values)}')
    if G.order > SMALL_ISOMORPHISM_MAX_ORDER:
        raise TargetTooLarge(f'Isomorphism is only decided up to order {SMALL_ISOMORPHISM_MAX_ORDER}')
    return fingerprint(G) == _target_fingerprint(target)


def _is_power_of(value: int, p: int) -> bool:
    while value % p == 0:
        value //= p
    return value == 1


def sylow_subgroups(G: GroupTable, p: int) -> list[Subgroup]:
    """
    One Sylow p-subgroup is grown greedily: while P is not Sylow, N(P)/P has an element of order p, so some
    p-element of N(P) outside P extends it. The rest are its conjugates.
    """
    if not isprime(p):
        raise BadParams(f'{p} is not prime')
    n = G.order
    if n % p:
        raise PDoesNotDivideOrder(f'{p} does not divide {n}')
    target = p ** multiplicity(p, n)
    orders = G.element_orders
    p_elements = [x for x in range(1, n) if _is_power_of(int(orders[x]), p)]

    sylow = trivial_subgroup(G)
    while sylow.order < target:
        normalizing = normalizer_mask(G, sylow.elements)
        extension = next(x for x in p_elements if normalizing[x] and x not in sylow)
        sylow = subgroup_generated(G, sylow.elements + (extension,))

    found = {}
    members = np.asarray(sylow.elements, dtype=np.int64)
    for row in conjugates_matrix(G, members):
        key = tuple(sorted(row.tolist()))
        found.setdefault(key, None)
    normal = len(found) == 1
    subgroups = [Subgroup(elements=key, is_normal=normal, is_abelian=sylow.is_abelian) for key in sorted(found)]
    if len(subgroups) % p != 1:
        logger.error(f'{len(subgroups)} Sylow {p}-subgroups in {G.name} contradicts Sylow counting')
    logger.debug(f'{G.name}: {len(subgroups)} Sylow {p}-subgroups of order {target}')
    return subgroups


def is_ti_subgroup(G: GroupTable, H: Subgroup) -> bool:
    members = H.mask(G.order)
    overlaps = members[conjugates_matrix(G, np.asarray(H.elements, dtype=np.int64))].sum(axis=1)
    return bool(((overlaps == H.order) | (overlaps == 1)).all())


def abelian_subgroups(G: GroupTable) -> list[Subgroup]:
    """Every abelian subgroup, found by extending each one with an element of its centralizer."""
    trivial = trivial_subgroup(G)
    found = {trivial.elements: trivial}
    frontier = [trivial]
    while frontier:
        grown = []
        for H in frontier:
            centralizing = G.commutes[list(H.elements)].all(axis=0)
            centralizing[list(H.elements)] = False
            for x in np.flatnonzero(centralizing):
                K = subgroup_generated(G, H.elements + (int(x),))
                if K.elements not in found:
                    found[K.elements] = K
                    grown.append(K)
        frontier = grown
    return [found[key] for key in sorted(found)]


def maximal_abelian_subgroups(G: GroupTable) -> list[Subgroup]:
    """
    Maximal abelian subgroups covering every noncentral element, grown from <Z(G), x> by adding centralizing
    elements in index order. Sorted by order descending, then by element indices.
    """
    found = {}
    covered = G.center_mask.copy()
    for x in range(G.order):
        if covered[x]:
            continue
        members = np.zeros(G.order, dtype=bool)
        members[list(G.center)] = True
        members[x] = True
        H = subgroup_generated(G, np.flatnonzero(members).tolist())
        for g in range(G.order):
            if g in H:
                continue
            if G.commutes[g, list(H.elements)].all():
                H = subgroup_generated(G, H.elements + (g,))
        found.setdefault(H.elements, H)
        covered[list(H.elements)] = True
    return sorted(found.values(), key=lambda H: (-H.order, H.elements))


def subgroup_table(G: GroupTable, H: Subgroup) -> GroupTable:
    """H as a group in its own right, elements renumbered in the order of H.elements."""
    members = np.asarray(H.elements, dtype=np.int64)
    position = np.full(G.order, -1, dtype=np.int64)
    position[members] = np.arange(len(members))
    table = position[G.table[np.ix_(members, members)]]
    return group_from_table(table, name=f'{G.name}>H{H.order}', elements=[G.elements[x] for x in H.elements])
