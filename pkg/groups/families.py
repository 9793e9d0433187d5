"""
Named group families. Each builder returns the generators, the order the construction must reach, and a
display name; make_family closes the generators and fails loudly when the order differs.
"""
import logging
from dataclasses import dataclass
from math import factorial
from typing import Callable

from sympy import isprime

from algebra.carriers import MetacyclicCarrier, Matrix, Pair, Perm
from algebra.exceptions import AlgebraError
from algebra.fields import build_field
from groups.enums import FAMILY_ALIASES, FAMILY_PARAMS, Family
from groups.exceptions import BadParams, OrderMismatch, UnknownFamily
from groups.tables import GroupTable, generate_group

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyConstruction:
    name: str
    generators: tuple
    expected_order: int


def _metacyclic(name: str, a: int, b: int, u: int, s: int = 0) -> FamilyConstruction:
    try:
        carrier = MetacyclicCarrier(a, b, u % a if a > 1 else 0, s)
    except AlgebraError as e:
        raise BadParams(str(e)) from e
    generators = carrier.generators() if b > 1 else carrier.generators()[:1]
    return FamilyConstruction(name, tuple(generators), a * b)


def _require(condition: bool, message: str):
    if not condition:
        raise BadParams(message)


def _prime_power_field(q: int):
    if isprime(q):
        return build_field(q, 1)
    if q > 2 and q & (q - 1) == 0:
        return build_field(2, q.bit_length() - 1)
    raise BadParams(f'q must be prime or a power of 2, got {q}')


def cyclic(n: int) -> FamilyConstruction:
    _require(n >= 1, 'cyclic needs n >= 1')
    return _metacyclic(f'Z{n}', n, 1, 1)


def dihedral(k: int) -> FamilyConstruction:
    _require(k >= 3, 'dihedral needs k >= 3')
    return _metacyclic(f'D{2 * k}', k, 2, k - 1)


def quaternion(k: int) -> FamilyConstruction:
    """x^2k = 1, y^2 = x^k, y x y^-1 = x^-1"""
    _require(k >= 2, 'quaternion needs k >= 2')
    return _metacyclic(f'Q{4 * k}', 2 * k, 2, 2 * k - 1, k)


def semidihedral(k: int) -> FamilyConstruction:
    _require(k >= 4, 'semidihedral needs k >= 4')
    return _metacyclic(f'SD{2 ** k}', 2 ** (k - 1), 2, 2 ** (k - 2) - 1)


def modular_p3(p: int) -> FamilyConstruction:
    _require(isprime(p), f'modular_p3 needs a prime, got {p}')
    return _metacyclic(f'M{p ** 3}', p * p, p, 1 + p)


def metacyclic(a: int, b: int, u: int, s: int = 0) -> FamilyConstruction:
    _require(a >= 1 and b >= 1, 'metacyclic needs a, b >= 1')
    return _metacyclic(f'Z{a}:Z{b}', a, b, u, s)


def symmetric(d: int) -> FamilyConstruction:
    _require(d >= 1, 'symmetric needs d >= 1')
    if d == 1:
        generators = (Perm.identity(1),)
    elif d == 2:
        generators = (Perm.from_cycles([(0, 1)], 2),)
    else:
        generators = (Perm.from_cycles([(0, 1)], d), Perm.from_cycles([tuple(range(d))], d))
    return FamilyConstruction(f'S{d}', generators, factorial(d))


def alternating(d: int) -> FamilyConstruction:
    """(0 1 2) with (0 1 .. d-1) for odd d, (1 2 .. d-1) for even d."""
    _require(d >= 1, 'alternating needs d >= 1')
    if d < 3:
        return FamilyConstruction(f'A{d}', (Perm.identity(d),), 1)
    generators = [Perm.from_cycles([(0, 1, 2)], d)]
    if d > 3:
        long_cycle = tuple(range(d)) if d % 2 else tuple(range(1, d))
        generators.append(Perm.from_cycles([long_cycle], d))
    return FamilyConstruction(f'A{d}', tuple(generators), factorial(d) // 2)


def heisenberg(p: int) -> FamilyConstruction:
    """Upper unitriangular 3x3 matrices over GF(p)."""
    _require(isprime(p), f'heisenberg needs a prime, got {p}')
    field = build_field(p, 1)
    generators = (
        Matrix.from_rows(field, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
        Matrix.from_rows(field, [[1, 0, 0], [0, 1, 1], [0, 0, 1]]),
    )
    return FamilyConstruction(f'Heis({p})', generators, p ** 3)


def special_linear_char2(k: int) -> FamilyConstruction:
    """L2(2^k) = SL(2, 2^k) from diag(w, w^-1) and the two unit transvections."""
    _require(k >= 2, 'L2 needs k >= 2')
    field = build_field(2, k)
    q = field.order
    omega = field.primitive_element
    generators = (
        Matrix.diagonal(field, [omega, field.inverse(omega)]),
        Matrix.from_rows(field, [[1, 1], [0, 1]]),
        Matrix.from_rows(field, [[1, 0], [1, 1]]),
    )
    return FamilyConstruction(f'L2({q})', generators, q * (q * q - 1))


def general_linear_2(q: int) -> FamilyConstruction:
    field = _prime_power_field(q)
    generators = (
        Matrix.diagonal(field, [field.primitive_element, 1]),
        Matrix.from_rows(field, [[1, 1], [0, 1]]),
        Matrix.from_rows(field, [[0, 1], [1, 0]]),
    )
    return FamilyConstruction(f'GL(2,{q})', generators, (q * q - 1) * (q * q - q))


def general_linear_3(q: int) -> FamilyConstruction:
    field = _prime_power_field(q)
    generators = (
        Matrix.diagonal(field, [field.primitive_element, 1, 1]),
        Matrix.from_rows(field, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
        Matrix.from_rows(field, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
    )
    return FamilyConstruction(f'GL(3,{q})', generators, (q ** 3 - 1) * (q ** 3 - q) * (q ** 3 - q * q))


def direct_product(left: dict, right: dict) -> FamilyConstruction:
    first = family_construction(left.get('family'), left.get('params') or {})
    second = family_construction(right.get('family'), right.get('params') or {})
    left_identity = first.generators[0].carrier.identity()
    right_identity = second.generators[0].carrier.identity()
    generators = tuple(Pair(g, right_identity) for g in first.generators)
    generators += tuple(Pair(left_identity, h) for h in second.generators)
    return FamilyConstruction(
        f'{first.name}x{second.name}', generators, first.expected_order * second.expected_order
    )


FAMILY_BUILDERS: dict[str, Callable[..., FamilyConstruction]] = {
    Family.CYCLIC: cyclic,
    Family.DIHEDRAL: dihedral,
    Family.QUATERNION: quaternion,
    Family.SEMIDIHEDRAL: semidihedral,
    Family.SYMMETRIC: symmetric,
    Family.ALTERNATING: alternating,
    Family.HEISENBERG: heisenberg,
    Family.MODULAR_P3: modular_p3,
    Family.L2: special_linear_char2,
    Family.GL2: general_linear_2,
    Family.GL3: general_linear_3,
    Family.METACYCLIC: metacyclic,
    Family.DIRECT_PRODUCT: direct_product,
}


def normalize_family(name: str) -> Family:
    if name in FAMILY_ALIASES:
        return FAMILY_ALIASES[name]
    try:
        return Family(name)
    except ValueError:
        raise UnknownFamily(f'Unknown family {name!r}')


def family_construction(name: str, params: dict) -> FamilyConstruction:
    family = normalize_family(name)
    kwargs = {}
    for param in FAMILY_PARAMS[family]:
        if param not in params:
            raise BadParams(f'{family.value} requires parameter {param!r}')
        kwargs[param] = params[param]
    if family == Family.METACYCLIC and 's' in params:
        kwargs['s'] = params['s']
    if family != Family.DIRECT_PRODUCT:
        for param, value in kwargs.items():
            if isinstance(value, bool) or not isinstance(value, int):
                raise BadParams(f'{family.value} parameter {param!r} must be an integer')
    try:
        return FAMILY_BUILDERS[family](**kwargs)
    except AlgebraError as e:
        if isinstance(e, (BadParams, UnknownFamily)):
            raise
        raise BadParams(str(e)) from e


def make_family(name: str, params: dict = None, order_cap: int = None) -> GroupTable:
    construction = family_construction(name, params or {})
    G = generate_group(list(construction.generators), order_cap=order_cap, name=construction.name)
    if G.order != construction.expected_order:
        raise OrderMismatch(f'{construction.name} closed at order {G.order}, expected {construction.expected_order}')
    return G
