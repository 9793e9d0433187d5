"""Ledger instances: each closed form at concrete parameters, paired with a group it describes."""
from formulas.enums import Scope
from formulas.ledger import LedgerInstance
from treecount.enums import KappaMethod


def family(name: str, **params) -> dict:
    return {'family': name, 'params': params}


def product(left: dict, right: dict) -> dict:
    return family('direct_product', left=left, right=right)


def instance(formula: str, group: dict, engines: tuple = (), **params) -> LedgerInstance:
    return LedgerInstance(formula=formula, params=params, group=group, engines=engines)


Q8 = family('quaternion', k=2)
D8 = family('dihedral', k=4)
D12 = family('dihedral', k=6)
Q12 = family('quaternion', k=3)
HEIS3 = family('heisenberg', p=3)
D8xZ3 = product(D8, family('cyclic', n=3))

DEFAULT_SCOPE = [
    instance('dihedral_odd', family('dihedral', k=3), k=3),
    instance('dihedral_odd', family('dihedral', k=5), k=5),
    instance('dihedral_odd', family('dihedral', k=7), k=7),
    instance('dihedral_even', D8, k=4),
    instance('dihedral_even', D12, k=6),
    instance('quaternion', Q8, k=2),
    instance('quaternion', Q12, k=3),
    instance('quaternion', family('quaternion', k=4), k=4),
    instance('semidihedral', family('semidihedral', k=4), k=4),
    instance('extraspecial', D8, p=2),
    instance('extraspecial', HEIS3, p=3),
    instance('extraspecial', family('modular_p3', p=3), p=3),
    instance('L2_char2', family('L2', k=2), q=4),
    instance('L2_char2_k', family('alternating', d=5), k=2),
    instance('GL2', family('GL2', q=3), q=3),
    instance('pp_center', Q8, p=2, m=2),
    instance('pp_center', HEIS3, p=3, m=3),
    instance('pp_center', D8xZ3, p=2, m=6),
    instance('two_abelian', Q8, m=2),
    instance('two_abelian', D8xZ3, m=6),
    instance('three_abelian_a', D8, m=2),
    instance('three_abelian_b', HEIS3, m=3),
    instance('three_abelian_c', D12, m=2),
    instance('three_abelian_c', Q12, m=2),

    instance('dihedral_odd_t', family('dihedral', k=5), k=5),
    instance('dihedral_even_t', D12, k=6),
    instance('quaternion_t', family('quaternion', k=4), k=4),
    instance('semidihedral_t', family('semidihedral', k=4), k=4),
    instance('extraspecial_t', HEIS3, p=3),
    instance('pp_center_t', D8xZ3, p=2, m=6),
    instance('L2_char2_t', family('L2', k=2), k=2),
    instance('GL2_t', family('GL2', q=3), q=3),

    instance('L2_char2_bound', family('L2', k=2), q=4),
    instance('GL2_bound', family('GL2', q=3), q=3),
    instance('GL3_bound', family('GL3', q=2), q=2),
]

FULL_SCOPE = DEFAULT_SCOPE + [
    instance('dihedral_odd', family('dihedral', k=9), k=9),
    instance('dihedral_even', family('dihedral', k=10), k=10),
    instance('quaternion', family('quaternion', k=6), k=6),
    instance('semidihedral', family('semidihedral', k=5), k=5),
    instance('semidihedral_t', family('semidihedral', k=5), k=5),
    instance('extraspecial', family('heisenberg', p=5), p=5),
    instance('pp_center', family('modular_p3', p=5), p=5, m=5),
    instance('GL2', family('GL2', q=4), q=4),
    instance('GL2', family('GL2', q=5), q=5, engines=(KappaMethod.AC_STRUCTURE, KappaMethod.SPECTRUM)),
    instance('GL2_t', family('GL2', q=4), q=4),
    instance('GL2_bound', family('GL2', q=4), q=4),
    instance('L2_char2', family('L2', k=3), q=8, engines=(KappaMethod.AC_STRUCTURE, KappaMethod.MODULAR_CRT)),
    instance('L2_char2_k', family('L2', k=3), k=3, engines=(KappaMethod.AC_STRUCTURE, KappaMethod.SPECTRUM)),
    instance('L2_char2_t', family('L2', k=3), k=3),
    instance('L2_char2_bound', family('L2', k=3), q=8),
    instance('L2_char2', family('L2', k=4), q=16, engines=(KappaMethod.AC_STRUCTURE, KappaMethod.SPECTRUM)),
]

SCOPE_MAP = {
    Scope.DEFAULT: DEFAULT_SCOPE,
    Scope.FULL: FULL_SCOPE,
}


def get_scope(name: str) -> list[LedgerInstance]:
    return SCOPE_MAP[Scope(name)]
