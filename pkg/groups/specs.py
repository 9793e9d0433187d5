import logging

from algebra.carriers import Matrix, Perm
from algebra.exceptions import AlgebraError
from algebra.fields import build_field
from groups.exceptions import GroupError, InvalidGenerator
from groups.families import make_family
from groups.tables import GroupTable, generate_group

logger = logging.getLogger(__name__)


def generators_from_spec(spec: dict) -> list:
    """Permutations given as cycle lists, or matrices given as rows when the spec names a field."""
    raw = spec.get('generators') or []
    if not raw:
        raise GroupError('At least one generator is required')
    generators = []
    if spec.get('field'):
        field = build_field(spec['field']['p'], spec['field'].get('n', 1))
        for index, rows in enumerate(raw):
            try:
                generators.append(Matrix.from_rows(field, rows))
            except (AlgebraError, TypeError) as e:
                raise InvalidGenerator(index, str(e)) from e
        return generators

    points = spec.get('points')
    if points is None:
        points = 1 + max((point for cycles in raw for cycle in cycles for point in cycle), default=0)
    for index, cycles in enumerate(raw):
        try:
            generators.append(Perm.from_cycles(cycles, points))
        except (AlgebraError, TypeError) as e:
            raise InvalidGenerator(index, str(e)) from e
    return generators


def group_from_spec(spec: dict, order_cap: int = None) -> GroupTable:
    if spec.get('family'):
        G = make_family(spec['family'], spec.get('params') or {}, order_cap=order_cap)
    else:
        G = generate_group(generators_from_spec(spec), order_cap=order_cap, name=spec.get('name', ''))
    logger.debug(f'Built {G.name} of order {G.order}')
    return G
