"""
Closed forms for tree-numbers, centralizer counts and partition bounds of named group families.

Each form is a product of prime-power-friendly terms (base, exponent) so its factored value comes for free.
The forms are claims under test: the ledger compares them with values computed on the group itself.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional

from sympy import factorint, isprime

from formulas.enums import Quantity
from formulas.exceptions import ParamsOutOfRange, UnknownFormula
from treecount.factors import evaluate, factor_product

logger = logging.getLogger(__name__)



@dataclass(frozen=True)
class ClosedFormValue:
    formula: str
    value: int
    factors: tuple


@dataclass(frozen=True)
class ClosedForm:
    id: str
    quantity: str
    params: tuple
    terms: Callable[..., list[tuple]]
    validate: Callable[..., None]
    label: str = ''


def _require(condition: bool, message: str):
    if not condition:
        raise ParamsOutOfRange(message)


def _power_of_two(q: int) -> bool:
    return q >= 2 and q & (q - 1) == 0


def _prime_power(q: int) -> bool:
    return q >= 2 and len(factorint(q)) == 1


def _check_char2_q(q):
    _require(_power_of_two(q) and q >= 4, f'q must be a power of 2 with q >= 4, got {q}')


def _check_char2_k(k):
    _require(k >= 2, f'k must be at least 2, got {k}')


def _check_odd_k(k):
    _require(k >= 3 and k % 2, f'k must be odd and at least 3, got {k}')


def _check_even_k(k):
    _require(k >= 4 and k % 2 == 0, f'k must be even and at least 4, got {k}')


def _check_quaternion_k(k):
    _require(k >= 2, f'k must be at least 2, got {k}')


def _check_semidihedral_k(k):
    _require(k >= 4, f'k must be at least 4, got {k}')


def _check_prime(p):
    _require(isprime(p), f'p must be prime, got {p}')


def _check_gl2_q(q):
    _require(_prime_power(q) and q > 2, f'q must be a prime power greater than 2, got {q}')


def _check_gl3_q(q):
    _require(_prime_power(q), f'q must be a prime power, got {q}')


def _check_pp(p, m):
    _check_prime(p)
    _require(m >= 2, f'the centre must be nontrivial, got m={m}')


def _check_center(m):
    _require(m >= 2, f'the centre must be nontrivial, got m={m}')


def _l2_char2(q):
    return [(q, (q - 2) * (q + 1)), (q - 1, (q - 3) * q * (q + 1) // 2), (q + 1, (q - 1) ** 2 * q // 2)]


def _l2_char2_k(k):
    q = 2 ** k
    return [
        (2, k * (q - 2) * (q + 1)),
        (q - 1, 2 ** (k - 1) * (q - 3) * (q + 1)),
        (q + 1, 2 ** (k - 1) * (q - 1) ** 2),
    ]


def _gl2(q):
    return [
        (q, q ** 3 - q ** 2 - q - 2),
        (q - 1, q * (3 * q ** 3 + 5) // 2 - 2 * q ** 3 - 2 * q ** 2 - 4),
        (q + 1, q * (q ** 3 + 3) // 2 - q ** 3 - 2),
    ]


def _pp_center(p, m):
    n = p * p * m
    return [(p, n + m - p - 3), (m, n - 2)]


def _value(value: int) -> list[tuple]:
    return [(value, 1)]


def _form(id: str, quantity: str, params: tuple, terms, validate, label: str) -> ClosedForm:
    return ClosedForm(id=id, quantity=quantity, params=params, terms=terms, validate=validate, label=label)


_FORMS = [
    _form('L2_char2', Quantity.KAPPA, ('q',), _l2_char2, _check_char2_q,
          'q^((q-2)(q+1)) (q-1)^((q-3)q(q+1)/2) (q+1)^((q-1)^2 q/2)'),
    _form('L2_char2_k', Quantity.KAPPA, ('k',), _l2_char2_k, _check_char2_k,
          'the same tree-number written in k for q = 2^k'),
    _form('dihedral_odd', Quantity.KAPPA, ('k',), lambda k: [(k, k - 2)], _check_odd_k, 'k^(k-2)'),
    _form('dihedral_even', Quantity.KAPPA, ('k',), lambda k: [(2, (3 * k + 2) // 2), (k, k - 2)], _check_even_k,
          '2^((3k+2)/2) k^(k-2)'),
    _form('quaternion', Quantity.KAPPA, ('k',), lambda k: [(2, 5 * k - 1), (k, 2 * k - 2)], _check_quaternion_k,
          '2^(5k-1) k^(2k-2)'),
    _form('semidihedral', Quantity.KAPPA, ('k',), lambda k: [(2, (2 ** (k - 2) - 1) * (2 * k + 1) + 4)],
          _check_semidihedral_k, '2^((2^(k-2)-1)(2k+1)+4)'),
    _form('extraspecial', Quantity.KAPPA, ('p',), lambda p: [(p, 2 * p ** 3 - 5)], _check_prime, 'p^(2p^3-5)'),
    _form('GL2', Quantity.KAPPA, ('q',), _gl2, _check_gl2_q,
          'q^(q^3-q^2-q-2) (q-1)^(q(3q^3+5)/2-2q^3-2q^2-4) (q+1)^(q(q^3+3)/2-q^3-2)'),
    _form('pp_center', Quantity.KAPPA, ('p', 'm'), _pp_center, _check_pp, 'p^(n+m-p-3) m^(n-2), n = p^2 m'),
    _form('two_abelian', Quantity.KAPPA, ('m',), lambda m: [(2, 5 * m - 5), (m, 4 * m - 2)], _check_center,
          '2^(5m-5) m^(4m-2)'),
    _form('three_abelian_a', Quantity.KAPPA, ('m',), lambda m: [(2, 5 * m - 5), (m, 4 * m - 2)], _check_center,
          '2^(5m-5) m^(4m-2)'),
    _form('three_abelian_b', Quantity.KAPPA, ('m',), lambda m: [(3, 10 * m - 6), (m, 9 * m - 2)], _check_center,
          '3^(10m-6) m^(9m-2)'),
    _form('three_abelian_c', Quantity.KAPPA, ('m',), lambda m: [(2, 4 * m - 4), (3, 3 * m - 2), (m, 6 * m - 1)],
          _check_center, '2^(4m-4) 3^(3m-2) m^(6m-1)'),

    _form('dihedral_odd_t', Quantity.BLOCKS, ('k',), lambda k: _value(k + 1), _check_odd_k, 'k+1'),
    _form('dihedral_even_t', Quantity.BLOCKS, ('k',), lambda k: _value(k // 2 + 1), _check_even_k, 'k/2+1'),
    _form('quaternion_t', Quantity.BLOCKS, ('k',), lambda k: _value(k + 1), _check_quaternion_k, 'k+1'),
    _form('semidihedral_t', Quantity.BLOCKS, ('k',), lambda k: _value(2 ** (k - 1) + 1), _check_semidihedral_k,
          '2^(k-1)+1'),
    _form('extraspecial_t', Quantity.BLOCKS, ('p',), lambda p: _value(p + 1), _check_prime, 'p+1'),
    _form('pp_center_t', Quantity.BLOCKS, ('p', 'm'), lambda p, m: _value(p + 1), _check_pp, 'p+1'),
    _form('L2_char2_t', Quantity.BLOCKS, ('k',), lambda k: _value(2 ** (4 * k - 2) + 2 ** k + 1), _check_char2_k,
          '2^(4k-2)+2^k+1'),
    _form('GL2_t', Quantity.BLOCKS, ('q',), lambda q: _value(q * q + q + 1), _check_gl2_q, 'q^2+q+1'),

    _form('L2_char2_bound', Quantity.BOUND, ('q',), lambda q: _value(q * q - q - 1), _check_char2_q, 'q^2-q-1'),
    _form('GL2_bound', Quantity.BOUND, ('q',), lambda q: _value(q * q - q - 1), _check_gl2_q, 'q(q-1)-1'),
    _form('GL3_bound', Quantity.BOUND, ('q',), lambda q: _value(q * q * (q ** 3 - 1) * (q - 1) - 1), _check_gl3_q,
          'q^2(q^3-1)(q-1)-1'),
]

CLOSED_FORM_MAP = {form.id: form for form in _FORMS}

# Printed forms that disagree with the groups they describe, with the value the groups give
CORRECTED_TERMS = {
    'three_abelian_c': lambda m: [(2, 4 * m - 4), (3, 3 * m - 2), (m, 6 * m - 2)],
    'semidihedral_t': lambda k: _value(2 ** (k - 2) + 1),
    'L2_char2_t': lambda k: _value(4 ** k + 2 ** k + 1),
}
PRINTED_DISCREPANCIES = frozenset(CORRECTED_TERMS)


def get_closed_form(formula: str) -> ClosedForm:
    try:
        return CLOSED_FORM_MAP[formula]
    except KeyError:
        raise UnknownFormula(f'Unknown formula {formula!r}')


def closed_form(formula: str, params: dict) -> ClosedFormValue:
    form = get_closed_form(formula)
    missing = [name for name in form.params if name not in params]
    _require(not missing, f'{formula} needs parameters {", ".join(form.params)}; missing {", ".join(missing)}')
    extra = sorted(set(params) - set(form.params))
    _require(not extra, f'{formula} does not take {", ".join(extra)}')
    values = [params[name] for name in form.params]
    _require(all(isinstance(v, int) and not isinstance(v, bool) for v in values), f'{formula} takes integers')
    form.validate(*values)

    terms = form.terms(*values)
    factors = factor_product(terms)
    value = evaluate(factors)
    logger.debug(f'{formula}({params}) = {value}')
    return ClosedFormValue(formula=formula, value=value, factors=factors)


def corrected_value(formula: str, params: dict) -> Optional[int]:
    """The value a printed discrepancy should have been; None for forms that are not known to be misprinted."""
    if formula not in CORRECTED_TERMS:
        return None
    form = get_closed_form(formula)
    return evaluate(factor_product(CORRECTED_TERMS[formula](*(params[name] for name in form.params))))
