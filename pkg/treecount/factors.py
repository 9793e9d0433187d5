"""Prime-power forms of products whose bases are small enough to factor."""
from collections import Counter
from math import prod
from typing import Iterable

from sympy import factorint


def factor_product(terms: Iterable[tuple]) -> tuple:
    """((prime, exponent), ...) ascending for the product of base**exponent over terms."""
    exponents = Counter()
    for base, exponent in terms:
        if exponent < 0:
            raise ValueError(f'Negative exponent {exponent} for base {base}')
        if base == 0 and exponent:
            return ()
        if exponent == 0 or base == 1:
            continue
        for p, e in factorint(base).items():
            exponents[p] += e * exponent
    return tuple(sorted((p, e) for p, e in exponents.items() if e))


def divide_factors(numerator: tuple, denominator: int) -> tuple:
    exponents = Counter(dict(numerator))
    for p, e in factorint(denominator).items():
        if exponents[p] < e:
            raise ValueError(f'{denominator} does not divide the factored product')
        exponents[p] -= e
    return tuple(sorted((p, e) for p, e in exponents.items() if e))


def evaluate(factors: Iterable[tuple]) -> int:
    return prod(p ** e for p, e in factors)


def format_factors(factors: Iterable[tuple]) -> str:
    factors = list(factors)
    if not factors:
        return '1'
    return '*'.join(f'{p}^{e}' if e > 1 else str(p) for p, e in factors)
