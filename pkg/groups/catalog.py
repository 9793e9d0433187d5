"""Named small groups used by property checks and the formula ledger."""
from functools import lru_cache

from groups.families import make_family
from groups.tables import GroupTable


def _spec(family: str, **params) -> dict:
    return {'family': family, 'params': params}


def _product(left: dict, right: dict) -> dict:
    return _spec('direct_product', left=left, right=right)


CATALOG = {
    'Z4': _spec('cyclic', n=4),
    'Z6': _spec('cyclic', n=6),
    'Z12': _spec('cyclic', n=12),
    'V4': _product(_spec('cyclic', n=2), _spec('cyclic', n=2)),
    'S3': _spec('symmetric', d=3),
    'D8': _spec('dihedral', k=4),
    'Q8': _spec('quaternion', k=2),
    'D10': _spec('dihedral', k=5),
    'D12': _spec('dihedral', k=6),
    'Q12': _spec('quaternion', k=3),
    'A4': _spec('alternating', d=4),
    'D14': _spec('dihedral', k=7),
    'D16': _spec('dihedral', k=8),
    'Q16': _spec('quaternion', k=4),
    'SD16': _spec('semidihedral', k=4),
    'Z7:Z3': _spec('metacyclic', a=7, b=3, u=2),
    'D8xZ3': _product(_spec('dihedral', k=4), _spec('cyclic', n=3)),
    'S4': _spec('symmetric', d=4),
    'Heis3': _spec('heisenberg', p=3),
    'M27': _spec('modular_p3', p=3),
    'GL2(3)': _spec('GL2', q=3),
    'A5': _spec('alternating', d=5),
    'L3(2)': _spec('GL3', q=2),
    'GL2(4)': _spec('GL2', q=4),
    'L2(8)': _spec('L2', k=3),
    'L2(16)': _spec('L2', k=4),
}

# Catalog entries small enough for every engine, including exact partition search where the order allows
SMALL_CATALOG = [name for name in CATALOG if name not in ('L2(8)', 'L2(16)')]


@lru_cache(maxsize=None)
def catalog_group(name: str) -> GroupTable:
    spec = CATALOG[name]
    return make_family(spec['family'], spec['params'])
