import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np
from django.conf import settings

from algebra.exceptions import AlgebraError
from algebra.carriers import Carrier
from groups.exceptions import GroupError, InvalidGenerator, InvalidGroupTable, OrderCapExceeded

logger = logging.getLogger(__name__)

ASSOCIATIVITY_CHUNK = 1 << 20


@dataclass(frozen=True, eq=False)
class GroupTable:
    """
    A finite group as a Cayley table over element indices 0..n-1, identity at index 0.
    table[a, b] is the index of the product a*b. Derived arrays are computed once on first use.
    """
    name: str
    table: np.ndarray
    inverses: np.ndarray
    elements: tuple

    def __repr__(self):
        return f'<GroupTable {self.name} order={self.order}>'

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def labels(self) -> list[str]:
        return [str(element) for element in self.elements]

    @cached_property
    def _index(self) -> dict:
        return {element: i for i, element in enumerate(self.elements)}

    def index_of(self, element) -> int:
        return self._index[element]

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inverses[a])

    def conjugate(self, x: int, g: int) -> int:
        """g x g^-1"""
        return int(self.table[self.table[g, x], self.inverses[g]])

    @cached_property
    def commutes(self) -> np.ndarray:
        return self.table == self.table.T

    @cached_property
    def is_abelian(self) -> bool:
        return bool(self.commutes.all())

    @cached_property
    def center_mask(self) -> np.ndarray:
        return self.commutes.all(axis=1)

    @cached_property
    def center(self) -> tuple:
        return tuple(np.flatnonzero(self.center_mask).tolist())

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        columns = np.arange(n)
        current = columns.copy()
        power = 1
        while not orders.all():
            orders[(current == 0) & (orders == 0)] = power
            current = self.table[current, columns]
            power += 1
        return orders

    @cached_property
    def conjugacy_classes(self) -> list[tuple]:
        """Classes ordered by their least element."""
        assigned = np.zeros(self.order, dtype=bool)
        classes = []
        for x in range(self.order):
            if assigned[x]:
                continue
            orbit = np.unique(self.table[self.table[:, x], self.inverses])
            assigned[orbit] = True
            classes.append(tuple(orbit.tolist()))
        return classes

    @cached_property
    def centralizer_representatives(self) -> list[int]:
        """Least element of each distinct centralizer, in index order."""
        seen = {}
        for x in range(self.order):
            seen.setdefault(self.commutes[x].tobytes(), x)
        return list(seen.values())


def check_associativity(table: np.ndarray, exhaustive_max: int = None, sample_factor: int = None,
                        seed: int = None):
    n = len(table)
    exhaustive_max = settings.ASSOCIATIVITY_EXHAUSTIVE_MAX if exhaustive_max is None else exhaustive_max
    if n <= exhaustive_max:
        for a in range(n):
            # (a*b)*c against a*(b*c) for every b, c
            if not np.array_equal(table[table[a]], table[a][table]):
                raise InvalidGroupTable(f'Associativity fails for left factor {a}')
        return
    sample_factor = settings.ASSOCIATIVITY_SAMPLE_FACTOR if sample_factor is None else sample_factor
    rng = np.random.default_rng(settings.ASSOCIATIVITY_SEED if seed is None else seed)
    remaining = sample_factor * n * n
    logger.debug(f'Sampling {remaining} triples for associativity')
    while remaining > 0:
        size = min(remaining, ASSOCIATIVITY_CHUNK)
        a, b, c = rng.integers(0, n, size=(3, size))
        if not np.array_equal(table[table[a, b], c], table[a, table[b, c]]):
            raise InvalidGroupTable('Associativity fails on a sampled triple')
        remaining -= size


def validate_table(table: np.ndarray):
    n = len(table)
    if table.shape != (n, n):
        raise InvalidGroupTable(f'Table must be square, got shape {table.shape}')
    indices = np.arange(n)
    if not (np.array_equal(table[0], indices) and np.array_equal(table[:, 0], indices)):
        raise InvalidGroupTable('Row and column 0 must be the identity')
    if not (np.sort(table, axis=1) == indices).all():
        raise InvalidGroupTable('Some row is not a permutation of the elements')
    if not (np.sort(table, axis=0) == indices[:, None]).all():
        raise InvalidGroupTable('Some column is not a permutation of the elements')
    check_associativity(table)


def group_from_table(table: np.ndarray, name: str = '', elements: Optional[Sequence] = None) -> GroupTable:
    table = np.asarray(table, dtype=np.int32)
    validate_table(table)
    inverses = np.argmax(table == 0, axis=1).astype(np.int32)
    if elements is None:
        elements = tuple(range(len(table)))
    return GroupTable(name=name, table=table, inverses=inverses, elements=tuple(elements))


def cayley_table(carrier: Carrier, elements: Sequence) -> np.ndarray:
    """Fills the table one row at a time: row i holds the codes of elements[i] * x, located by binary search."""
    n = len(elements)
    array = carrier.to_array(elements)
    codes = carrier.codes(array)
    ordering = np.argsort(codes, kind='stable')
    sorted_codes = codes[ordering]
    if n > 1 and (np.diff(sorted_codes) == 0).any():
        raise InvalidGroupTable(f'{carrier} produced colliding element codes')
    table = np.empty((n, n), dtype=np.int32)
    for i, element in enumerate(elements):
        products = carrier.codes(carrier.left_multiply(element, array))
        positions = np.minimum(np.searchsorted(sorted_codes, products), n - 1)
        if not np.array_equal(sorted_codes[positions], products):
            raise InvalidGroupTable(f'Products of {element} leave the element set')
        table[i] = ordering[positions]
    return table


def generate_group(generators: Sequence, order_cap: int = None, name: str = '') -> GroupTable:
    """
    Closure of the generators by breadth-first search from the identity, multiplying on the right by each
    generator in input order. Element numbering is discovery order.
    """
    if not generators:
        raise GroupError('At least one generator is required')
    carrier = getattr(generators[0], 'carrier', None)
    if carrier is None:
        raise InvalidGenerator(0, f'{generators[0]!r} is not a group element')
    for index, generator in enumerate(generators):
        try:
            carrier.validate(generator)
        except AlgebraError as e:
            raise InvalidGenerator(index, str(e)) from e

    order_cap = order_cap or settings.GROUP_ORDER_CAP
    identity = carrier.identity()
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for generator in generators:
            product = current.compose(generator)
            if product in seen:
                continue
            if len(elements) >= order_cap:
                raise OrderCapExceeded(f'Closure of {name or "generators"} exceeds {order_cap} elements')
            seen.add(product)
            elements.append(product)
            queue.append(product)

    logger.info(f'Closed {name or carrier} at order {len(elements)}')
    table = cayley_table(carrier, elements)
    return group_from_table(table, name=name or f'<{len(generators)} generators in {carrier}>', elements=elements)
