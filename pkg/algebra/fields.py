import logging
from functools import lru_cache

import numpy as np
from django.conf import settings
from sympy import isprime

from algebra.exceptions import NonPrimeCharacteristic, UnsupportedSize

logger = logging.getLogger(__name__)

IRREDUCIBILITY_CHECK_MAX_DEGREE = 16


def gf2_multiply(a: int, b: int) -> int:
    """Carry-less product of two bit-packed GF(2)[x] polynomials."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def gf2_remainder(a: int, modulus: int) -> int:
    degree = modulus.bit_length() - 1
    while a.bit_length() - 1 >= degree:
        a ^= modulus << (a.bit_length() - 1 - degree)
    return a


def is_irreducible_gf2(poly: int) -> bool:
    """
    Exhaustive factor check: a polynomial of degree n is reducible iff it has a factor of degree 1..n//2.
    Degree-one candidates x and x+1 cover the root test.
    """
    degree = poly.bit_length() - 1
    if degree < 1:
        return False
    if degree > IRREDUCIBILITY_CHECK_MAX_DEGREE:
        raise UnsupportedSize(f'Irreducibility is only checked up to degree {IRREDUCIBILITY_CHECK_MAX_DEGREE}')
    for candidate in range(2, 1 << (degree // 2 + 1)):
        if gf2_remainder(poly, candidate) == 0:
            return False
    return True


def least_irreducible_gf2(degree: int) -> int:
    for candidate in range(1 << degree, 1 << (degree + 1)):
        if is_irreducible_gf2(candidate):
            return candidate
    raise UnsupportedSize(f'No irreducible polynomial of degree {degree}')


def format_polynomial(poly: int) -> str:
    terms = []
    for power in range(poly.bit_length() - 1, -1, -1):
        if not poly >> power & 1:
            continue
        if power == 0:
            terms.append('1')
        elif power == 1:
            terms.append('x')
        else:
            terms.append(f'x^{power}')
    return '+'.join(terms) or '0'


class Field:
    """
    GF(p) or GF(2^n) with elements encoded as integers 0..q-1.
    For GF(2^n) the integer is the bit-packed coefficient vector in the polynomial basis; addition is XOR.
    Multiplication goes through discrete log / antilog tables built from the least primitive element.
    """
    p: int = None
    n: int = None
    modulus: int = None
    order: int = None
    primitive_element: int = None

    def __init__(self, p: int, n: int = 1, modulus: int = None):
        self.p = p
        self.n = n
        self.modulus = modulus
        self.order = p ** n
        self._build_tables()

    def __repr__(self):
        if self.n == 1:
            return f'GF({self.p})'
        return f'GF({self.order}) mod {format_polynomial(self.modulus)}'

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __reduce__(self):
        return build_field, (self.p, self.n)

    @property
    def key(self) -> tuple:
        return self.p, self.n, self.modulus

    def _raw_multiply(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        return gf2_remainder(gf2_multiply(a, b), self.modulus)

    def _build_tables(self):
        group_order = self.order - 1
        for candidate in range(1, self.order):
            powers = [1]
            value = candidate
            while value != 1:
                powers.append(value)
                value = self._raw_multiply(value, candidate)
            if len(powers) == group_order:
                self.primitive_element = candidate
                break
        self.exp = np.array(powers, dtype=np.int64)
        self.log = np.zeros(self.order, dtype=np.int64)
        self.log[self.exp] = np.arange(group_order, dtype=np.int64)
        self.elements = np.arange(self.order, dtype=np.int64)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return (a + b) % self.p

    def negate(self, a: int) -> int:
        if self.p == 2:
            return a
        return -a % self.p

    def subtract(self, a: int, b: int) -> int:
        return self.add(a, self.negate(b))

    def multiply(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % (self.order - 1)])

    def inverse(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f'0 has no inverse in {self}')
        return int(self.exp[-self.log[a] % (self.order - 1)])

    def power(self, a: int, exponent: int) -> int:
        if a == 0:
            return 0 if exponent else 1
        return int(self.exp[self.log[a] * exponent % (self.order - 1)])

    def add_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return (a + b) % self.p

    def multiply_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        product = self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, product)


@lru_cache(maxsize=None)
def build_field(p: int, n: int = 1) -> Field:
    if not isprime(p):
        raise NonPrimeCharacteristic(f'{p} is not prime')
    if n < 1:
        raise UnsupportedSize(f'Degree must be at least 1, got {n}')
    if p ** n > settings.FIELD_MAX_ORDER:
        raise UnsupportedSize(f'GF({p}^{n}) exceeds {settings.FIELD_MAX_ORDER} elements')
    if n == 1:
        if p > settings.FIELD_MAX_PRIME:
            raise UnsupportedSize(f'Prime fields are supported up to GF({settings.FIELD_MAX_PRIME})')
        return Field(p)
    if p != 2:
        raise UnsupportedSize(f'Extension fields are only supported in characteristic 2, got GF({p}^{n})')
    modulus = least_irreducible_gf2(n)
    logger.debug(f'GF(2^{n}) modulus {format_polynomial(modulus)}')
    return Field(2, n, modulus)
