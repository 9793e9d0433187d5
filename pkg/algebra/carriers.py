"""
Element carriers: permutations, square matrices over a finite field, normal-form words x^i y^j of a
metacyclic presentation, and pairs for direct products.

Every element is an immutable, totally ordered value. Every carrier supplies the scalar contract
(identity, compose, inverse) plus a batched form used to fill Cayley tables row by row: a carrier encodes
a list of elements as an integer array, left-multiplies the whole array by one element, and maps rows
to integer codes that are unique within the carrier.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

import numpy as np

from algebra.exceptions import CarrierMismatch, InvalidElement, UnsupportedSize
from algebra.fields import Field

logger = logging.getLogger(__name__)

MAX_PERMUTATION_DEGREE = 15
MAX_CODE = 2 ** 63


class Carrier(ABC):
    width: int = None
    code_bound: int = None

    @abstractmethod
    def identity(self):
        pass

    def validate(self, element):
        if getattr(element, 'carrier', None) != self:
            raise CarrierMismatch(f'{element!r} does not belong to {self}')

    @abstractmethod
    def to_array(self, elements: Sequence) -> np.ndarray:
        pass

    @abstractmethod
    def left_multiply(self, element, array: np.ndarray) -> np.ndarray:
        """Rows of the result encode element * x for each row x of array."""

    @abstractmethod
    def codes(self, array: np.ndarray) -> np.ndarray:
        pass


def _check_same_carrier(a, b):
    if getattr(a, 'carrier', None) is None or getattr(b, 'carrier', None) != a.carrier:
        raise CarrierMismatch(f'Cannot compose {a!r} with {b!r}')


# Permutations

@dataclass(frozen=True)
class PermutationCarrier(Carrier):
    degree: int

    def __post_init__(self):
        if not 1 <= self.degree <= MAX_PERMUTATION_DEGREE:
            raise UnsupportedSize(f'Permutations are supported on 1..{MAX_PERMUTATION_DEGREE} points')

    def __str__(self):
        return f'Sym({self.degree})'

    @property
    def width(self) -> int:
        return self.degree

    @property
    def code_bound(self) -> int:
        return self.degree ** self.degree

    def identity(self) -> 'Perm':
        return Perm(tuple(range(self.degree)))

    def to_array(self, elements):
        return np.array([e.images for e in elements], dtype=np.int64).reshape(len(elements), self.degree)

    def left_multiply(self, element, array):
        return array[:, list(element.images)]

    def codes(self, array):
        return array @ (self.degree ** np.arange(self.degree, dtype=np.int64))


@dataclass(frozen=True, order=True)
class Perm:
    """
    A bijection of 0..d-1 stored as its image tuple.
    Products apply the left factor first: (a * b)(i) = b(a(i)).
    """
    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise InvalidElement(f'{self.images} is not a bijection of 0..{len(self.images) - 1}')

    @classmethod
    def identity(cls, degree: int) -> 'Perm':
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> 'Perm':
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    raise InvalidElement(f'Point {point} is outside 0..{degree - 1}')
                if point in seen:
                    raise InvalidElement(f'Point {point} appears in more than one cycle')
                seen.add(point)
            for position, point in enumerate(cycle):
                images[point] = cycle[(position + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def carrier(self) -> PermutationCarrier:
        return PermutationCarrier(len(self.images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def compose(self, other: 'Perm') -> 'Perm':
        _check_same_carrier(self, other)
        return Perm(tuple(other.images[i] for i in self.images))

    def inverse(self) -> 'Perm':
        images = [0] * len(self.images)
        for point, image in enumerate(self.images):
            images[image] = point
        return Perm(tuple(images))

    def cycles(self) -> list[tuple]:
        result = []
        seen = set()
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            result.append(tuple(cycle))
        return result

    def __str__(self):
        return ''.join('(' + ' '.join(map(str, cycle)) + ')' for cycle in self.cycles()) or '()'


# Matrices over a finite field

@dataclass(frozen=True)
class MatrixCarrier(Carrier):
    field: Field
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise UnsupportedSize('Matrix dimension must be positive')
        if self.field.order ** (self.dim * self.dim) >= MAX_CODE:
            raise UnsupportedSize(f'{self.dim}x{self.dim} matrices over {self.field} cannot be encoded in 63 bits')

    def __str__(self):
        return f'M({self.dim}, {self.field})'

    @property
    def width(self) -> int:
        return self.dim * self.dim

    @property
    def code_bound(self) -> int:
        return self.field.order ** self.width

    def identity(self) -> 'Matrix':
        return Matrix.identity(self.field, self.dim)

    def validate(self, element):
        super().validate(element)
        if element.determinant() == 0:
            raise InvalidElement(f'{element} is singular')

    def to_array(self, elements):
        return np.array([e.entries for e in elements], dtype=np.int64).reshape(len(elements), self.width)

    def left_multiply(self, element, array):
        dim = self.dim
        result = np.zeros_like(array)
        for row in range(dim):
            for col in range(dim):
                total = np.zeros(len(array), dtype=np.int64)
                for k in range(dim):
                    coefficient = element.entries[row * dim + k]
                    if coefficient:
                        term = self.field.multiply_array(coefficient, array[:, k * dim + col])
                        total = self.field.add_array(total, term)
                result[:, row * dim + col] = total
        return result

    def codes(self, array):
        return array @ (self.field.order ** np.arange(self.width, dtype=np.int64))


@total_ordering
@dataclass(frozen=True)
class Matrix:
    field: Field
    dim: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.dim * self.dim:
            raise InvalidElement(f'Expected {self.dim * self.dim} entries, got {len(self.entries)}')
        for value in self.entries:
            if not 0 <= value < self.field.order:
                raise InvalidElement(f'Entry {value} is not an element of {self.field}')

    def __lt__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.dim, self.entries) < (other.dim, other.entries)

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence[int]]) -> 'Matrix':
        dim = len(rows)
        if any(len(row) != dim for row in rows):
            raise InvalidElement(f'Matrix rows must have length {dim}')
        return cls(field, dim, tuple(int(v) for row in rows for v in row))

    @classmethod
    def identity(cls, field: Field, dim: int) -> 'Matrix':
        return cls(field, dim, tuple(int(r == c) for r in range(dim) for c in range(dim)))

    @classmethod
    def diagonal(cls, field: Field, values: Sequence[int]) -> 'Matrix':
        dim = len(values)
        return cls(field, dim, tuple(values[r] if r == c else 0 for r in range(dim) for c in range(dim)))

    @property
    def carrier(self) -> MatrixCarrier:
        return MatrixCarrier(self.field, self.dim)

    def rows(self) -> list[list[int]]:
        return [list(self.entries[r * self.dim:(r + 1) * self.dim]) for r in range(self.dim)]

    def entry(self, row: int, col: int) -> int:
        return self.entries[row * self.dim + col]

    def compose(self, other: 'Matrix') -> 'Matrix':
        _check_same_carrier(self, other)
        f, dim = self.field, self.dim
        entries = []
        for row in range(dim):
            for col in range(dim):
                total = 0
                for k in range(dim):
                    total = f.add(total, f.multiply(self.entry(row, k), other.entry(k, col)))
                entries.append(total)
        return Matrix(f, dim, tuple(entries))

    def minor(self, row: int, col: int) -> 'Matrix':
        entries = tuple(
            self.entry(r, c) for r in range(self.dim) for c in range(self.dim) if r != row and c != col
        )
        return Matrix(self.field, self.dim - 1, entries)

    def determinant(self) -> int:
        f = self.field
        if self.dim == 1:
            return self.entries[0]
        total = 0
        for col in range(self.dim):
            term = f.multiply(self.entry(0, col), self.minor(0, col).determinant())
            total = f.subtract(total, term) if col % 2 else f.add(total, term)
        return total

    def inverse(self) -> 'Matrix':
        """Adjugate divided by the determinant."""
        f = self.field
        det = self.determinant()
        if det == 0:
            raise InvalidElement(f'{self} is singular')
        if self.dim == 1:
            return Matrix(f, 1, (f.inverse(det),))
        scale = f.inverse(det)
        entries = []
        for row in range(self.dim):
            for col in range(self.dim):
                cofactor = self.minor(col, row).determinant()
                if (row + col) % 2:
                    cofactor = f.negate(cofactor)
                entries.append(f.multiply(cofactor, scale))
        return Matrix(f, self.dim, tuple(entries))

    def __str__(self):
        return '[' + ','.join('[' + ','.join(map(str, row)) + ']' for row in self.rows()) + ']'


# Metacyclic normal forms

@dataclass(frozen=True, order=True)
class MetacyclicCarrier(Carrier):
    """
    Words x^i y^j (0 <= i < a, 0 <= j < b) for the presentation
    x^a = 1, y^b = x^s, y x y^-1 = x^u.
    Consistency requires u^b = 1 and s(u - 1) = 0 modulo a.
    """
    a: int
    b: int
    u: int
    s: int = 0

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InvalidElement('Metacyclic exponents must be positive')
        if pow(self.u, self.b, self.a) != 1 % self.a:
            raise InvalidElement(f'u^b must be 1 modulo a (a={self.a}, b={self.b}, u={self.u})')
        if self.s * (self.u - 1) % self.a:
            raise InvalidElement(f's(u - 1) must be 0 modulo a (a={self.a}, u={self.u}, s={self.s})')

    def __str__(self):
        return f'<x, y | x^{self.a}, y^{self.b}=x^{self.s}, x^y=x^{self.u}>'

    @property
    def width(self) -> int:
        return 2

    @property
    def code_bound(self) -> int:
        return self.a * self.b

    def identity(self) -> 'Word':
        return Word(self, 0, 0)

    def generators(self) -> list['Word']:
        return [Word(self, 1 % self.a, 0), Word(self, 0, 1 % self.b)]

    def multiply(self, i: int, j: int, k: int, l: int) -> tuple[int, int]:
        carry = self.s if j + l >= self.b else 0
        return (i + k * pow(self.u, j, self.a) + carry) % self.a, (j + l) % self.b

    def to_array(self, elements):
        return np.array([(e.x, e.y) for e in elements], dtype=np.int64).reshape(len(elements), 2)

    def left_multiply(self, element, array):
        i, j = element.x, element.y
        scale = pow(self.u, j, self.a)
        carry = np.where(j + array[:, 1] >= self.b, self.s, 0)
        result = np.empty_like(array)
        result[:, 0] = (i + array[:, 0] * scale + carry) % self.a
        result[:, 1] = (j + array[:, 1]) % self.b
        return result

    def codes(self, array):
        return array[:, 0] * self.b + array[:, 1]


@dataclass(frozen=True, order=True)
class Word:
    presentation: MetacyclicCarrier
    x: int
    y: int

    def __post_init__(self):
        if not (0 <= self.x < self.presentation.a and 0 <= self.y < self.presentation.b):
            raise InvalidElement(f'x^{self.x} y^{self.y} is not in normal form')

    @property
    def carrier(self) -> MetacyclicCarrier:
        return self.presentation

    def compose(self, other: 'Word') -> 'Word':
        _check_same_carrier(self, other)
        return Word(self.presentation, *self.presentation.multiply(self.x, self.y, other.x, other.y))

    def inverse(self) -> 'Word':
        a, b, u, s = self.presentation.a, self.presentation.b, self.presentation.u, self.presentation.s
        y = -self.y % b
        carry = s if self.y else 0
        x = (-self.x - carry) * pow(u, -self.y, a) % a if a > 1 else 0
        return Word(self.presentation, x, y)

    def __str__(self):
        parts = []
        if self.x:
            parts.append('x' if self.x == 1 else f'x^{self.x}')
        if self.y:
            parts.append('y' if self.y == 1 else f'y^{self.y}')
        return ''.join(parts) or '1'


# Direct products

@dataclass(frozen=True)
class ProductCarrier(Carrier):
    left: Carrier
    right: Carrier

    def __post_init__(self):
        if self.code_bound >= MAX_CODE:
            raise UnsupportedSize(f'{self} cannot be encoded in 63 bits')

    def __str__(self):
        return f'{self.left} x {self.right}'

    @property
    def width(self) -> int:
        return self.left.width + self.right.width

    @property
    def code_bound(self) -> int:
        return self.left.code_bound * self.right.code_bound

    def identity(self) -> 'Pair':
        return Pair(self.left.identity(), self.right.identity())

    def validate(self, element):
        super().validate(element)
        self.left.validate(element.left)
        self.right.validate(element.right)

    def to_array(self, elements):
        return np.hstack([
            self.left.to_array([e.left for e in elements]),
            self.right.to_array([e.right for e in elements]),
        ])

    def left_multiply(self, element, array):
        split = self.left.width
        return np.hstack([
            self.left.left_multiply(element.left, array[:, :split]),
            self.right.left_multiply(element.right, array[:, split:]),
        ])

    def codes(self, array):
        split = self.left.width
        return self.left.codes(array[:, :split]) * self.right.code_bound + self.right.codes(array[:, split:])


@dataclass(frozen=True, order=True)
class Pair:
    left: object
    right: object

    @property
    def carrier(self) -> ProductCarrier:
        return ProductCarrier(self.left.carrier, self.right.carrier)

    def compose(self, other: 'Pair') -> 'Pair':
        _check_same_carrier(self, other)
        return Pair(self.left.compose(other.left), self.right.compose(other.right))

    def inverse(self) -> 'Pair':
        return Pair(self.left.inverse(), self.right.inverse())

    def __str__(self):
        return f'({self.left}, {self.right})'


def element_compose(a, b):
    _check_same_carrier(a, b)
    return a.compose(b)


def element_inverse(a):
    return a.inverse()


def element_identity(carrier: Carrier):
    return carrier.identity()
